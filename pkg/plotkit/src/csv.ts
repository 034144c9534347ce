/**
 * CSV input layer: parsing plus the column contracts each figure kind needs.
 * Inputs are never mutated; every reader hands back plain row objects.
 */

import fs from "node:fs";
import Papa from "papaparse";

/** The input file's content violates a contract (bad input, not a crash). */
export class InputError extends Error {}

/** A required column is absent from the file header. */
export class SchemaError extends InputError {
  readonly column: string;

  constructor(file: string, column: string) {
    super(`${file}: missing required column "${column}"`);
    this.column = column;
  }
}

export type Row = Record<string, string>;

export function readCsv(path: string, required: readonly string[]): Row[] {
  const text = fs.readFileSync(path, "utf8");
  const parsed = Papa.parse<Row>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  const fields = new Set(parsed.meta.fields ?? []);
  for (const column of required) {
    if (!fields.has(column)) throw new SchemaError(path, column);
  }
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    const line = e.row === undefined ? "?" : String(e.row + 2);
    throw new InputError(`${path}:${line}: ${e.message}`);
  }
  if (parsed.data.length === 0) throw new InputError(`${path}: no data rows`);
  return parsed.data;
}

/** Numeric cell value; empty strings come back as NaN so callers can skip them. */
export function num(row: Row, column: string): number {
  const raw = row[column];
  if (raw === undefined || raw === "") return NaN;
  return Number(raw);
}

export function uniqueSorted(values: number[]): number[] {
  return [...new Set(values)].sort((a, b) => a - b);
}

/** Run summary sidecar; only the keys the figures annotate from. */
export interface RunSummary {
  alpha: number;
}

export function readSummary(path: string): RunSummary {
  const parsed = JSON.parse(fs.readFileSync(path, "utf8"));
  const alpha = parsed?.config?.alpha;
  if (typeof alpha !== "number") {
    throw new SchemaError(path, "config.alpha");
  }
  return { alpha };
}
