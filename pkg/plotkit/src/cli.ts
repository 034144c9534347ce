#!/usr/bin/env node
/**
 * Command-line front end: one subcommand per figure kind.
 * Exit 0 on success, 1 when the invocation or the input content is invalid,
 * 2 when a runtime failure stops the render.
 */

import fs from "node:fs";
import { pathToFileURL } from "node:url";
import { parseArgs } from "node:util";
import { InputError } from "./csv.js";
import { buildDynamicsFigure } from "./dynamics.js";
import { buildParetoFigure } from "./pareto.js";
import { buildPhaseMapFigure } from "./phaseMap.js";
import { renderToFile } from "./render.js";

class UsageError extends Error {}

const USAGE = `usage: plotkit <command> [options]

commands:
  dynamics   --trajectory run.csv --summary run.json --out fig.svg
  phase-map  --sweep sweep.csv --out fig.svg
  pareto     --pareto pareto.csv --out fig.svg

options:
  --width N / --height N   canvas size in pixels
  --version                print the build identifier
  --help                   this text
`;

interface CommandSpec {
  flags: string[];
  defaultSize: { width: number; height: number };
}

const COMMANDS: Record<string, CommandSpec> = {
  dynamics: { flags: ["trajectory", "summary"], defaultSize: { width: 960, height: 640 } },
  "phase-map": { flags: ["sweep"], defaultSize: { width: 720, height: 560 } },
  pareto: { flags: ["pareto"], defaultSize: { width: 720, height: 560 } },
};

function version(): string {
  const raw = fs.readFileSync(new URL("../package.json", import.meta.url), "utf8");
  return `plotkit-${JSON.parse(raw).version}`;
}

function dispatch(argv: string[]): number {
  if (argv.length === 0 || argv[0] === "--help") {
    process.stdout.write(USAGE);
    return argv.length === 0 ? 1 : 0;
  }
  if (argv[0] === "--version") {
    process.stdout.write(`${version()}\n`);
    return 0;
  }
  const command = argv[0];
  const spec = COMMANDS[command];
  if (!spec) throw new UsageError(`unknown command ${JSON.stringify(command)}`);

  const options: Record<string, { type: "string" }> = {
    out: { type: "string" },
    width: { type: "string" },
    height: { type: "string" },
  };
  for (const flag of spec.flags) options[flag] = { type: "string" };
  const { values } = parseArgs({ args: argv.slice(1), options, allowPositionals: false });

  const need = (flag: string): string => {
    const v = values[flag];
    if (typeof v !== "string") throw new UsageError(`${command} requires --${flag}`);
    return v;
  };
  const out = need("out");
  const size = { ...spec.defaultSize };
  for (const dim of ["width", "height"] as const) {
    if (values[dim] !== undefined) {
      const parsed = Number(values[dim]);
      if (!Number.isInteger(parsed) || parsed <= 0) {
        throw new UsageError(`--${dim} must be a positive integer`);
      }
      size[dim] = parsed;
    }
  }

  let option;
  if (command === "dynamics") {
    option = buildDynamicsFigure(need("trajectory"), need("summary")).option;
  } else if (command === "phase-map") {
    option = buildPhaseMapFigure(need("sweep")).option;
  } else {
    option = buildParetoFigure(need("pareto")).option;
  }
  renderToFile(option, out, size);
  process.stdout.write(`wrote ${out}\n`);
  return 0;
}

export function main(argv: string[]): number {
  try {
    return dispatch(argv);
  } catch (err) {
    const isParseError =
      err instanceof Error && "code" in err &&
      String((err as { code?: string }).code).startsWith("ERR_PARSE_ARGS");
    const message = err instanceof Error ? err.message : String(err);
    if (err instanceof UsageError || isParseError) {
      process.stderr.write(`usage error: ${message}\n${USAGE}`);
      return 1;
    }
    if (err instanceof InputError || err instanceof SyntaxError) {
      process.stderr.write(`input error: ${message}\n`);
      return 1;
    }
    process.stderr.write(`error: ${message}\n`);
    return 2;
  }
}

const isMain =
  process.argv[1] !== undefined &&
  import.meta.url === pathToFileURL(fs.realpathSync(process.argv[1])).href;
if (isMain) process.exit(main(process.argv.slice(2)));
