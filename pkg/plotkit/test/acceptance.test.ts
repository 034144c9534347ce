/**
 * End-to-end gate: every figure kind renders its reference input through the
 * real CLI in a fresh process, and the pareto arrows all point the right way
 * (more false positives, fewer misses, never the reverse).
 */

import { spawnSync } from "node:child_process";
import fs from "node:fs";
import os from "node:os";
import path from "node:path";
import { fileURLToPath } from "node:url";
import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { buildParetoFigure } from "../src/pareto.js";

const CLI = fileURLToPath(new URL("../dist/cli.js", import.meta.url));
const fixture = (rel: string): string =>
  fileURLToPath(new URL(`./fixtures/${rel}`, import.meta.url));

function report(num: number, name: string, ok: boolean, detail = ""): void {
  let line = `ACCEPTANCE ${String(num).padStart(2, "0")} ${name}: ${ok ? "PASS" : "FAIL"}`;
  if (detail) line += ` (${detail})`;
  console.log(line);
  expect(ok, line).toBe(true);
}

describe("figure rendering gate", () => {
  let outDir: string;

  beforeAll(() => {
    outDir = fs.mkdtempSync(path.join(os.tmpdir(), "plotkit-accept-"));
    for (const rel of [
      "dynamics/trajectory.csv",
      "dynamics/summary.json",
      "phase_map/sweep.csv",
      "pareto/pareto.csv",
    ]) {
      expect(
        fs.existsSync(fixture(rel)),
        `missing fixture ${rel}; regenerate with scripts/make_plotkit_fixtures.py`,
      ).toBe(true);
    }
  });

  afterAll(() => {
    fs.rmSync(outDir, { recursive: true, force: true });
  });

  it("renders all three figure kinds and keeps every wrapped arrow monotone", () => {
    const jobs = [
      {
        kind: "dynamics",
        args: [
          "dynamics",
          "--trajectory", fixture("dynamics/trajectory.csv"),
          "--summary", fixture("dynamics/summary.json"),
        ],
      },
      { kind: "phase-map", args: ["phase-map", "--sweep", fixture("phase_map/sweep.csv")] },
      { kind: "pareto", args: ["pareto", "--pareto", fixture("pareto/pareto.csv")] },
    ];

    let rendered = 0;
    for (const job of jobs) {
      const out = path.join(outDir, `${job.kind}.svg`);
      const run = spawnSync("node", [CLI, ...job.args, "--out", out], { encoding: "utf8" });
      expect(run.status, `${job.kind}: ${run.stderr}`).toBe(0);
      expect(fs.existsSync(out), `${job.kind} wrote no file`).toBe(true);
      const body = fs.readFileSync(out, "utf8");
      expect(body.startsWith("<svg"), `${job.kind} output is not an SVG document`).toBe(true);
      expect(body.length).toBeGreaterThan(1000);
      rendered += 1;
    }

    const { pairs } = buildParetoFigure(fixture("pareto/pareto.csv"));
    const wrapped = pairs.filter((p) => p.wrapper === "domt");
    expect(wrapped.length).toBeGreaterThan(0);
    const monotone = wrapped.every((p) => p.v >= p.vBase && p.m <= p.mBase);

    report(
      11,
      "figure_rendering",
      rendered === jobs.length && monotone,
      `${rendered}/3 figures rendered with exit 0; ` +
        `${wrapped.length} wrapped arrows with dV >= 0 and dM <= 0`,
    );
  });

  it("renders the same input to the same bytes on repeat invocations", () => {
    const args = ["pareto", "--pareto", fixture("pareto/pareto.csv")];
    const outs = [path.join(outDir, "rep1.svg"), path.join(outDir, "rep2.svg")];
    for (const out of outs) {
      const run = spawnSync("node", [CLI, ...args, "--out", out], { encoding: "utf8" });
      expect(run.status).toBe(0);
    }
    const [a, b] = outs.map((o) => fs.readFileSync(o));
    expect(a.equals(b)).toBe(true);
  });
});
