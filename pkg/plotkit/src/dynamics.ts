/**
 * Four-panel run dynamics: error rate, power, testing levels, regret.
 * Rows sharing a run_id are one replication; the base series is the run
 * recorded under wrapper "none" and the wrapped series is everything else.
 * Each panel shows the across-run mean at every recorded step.
 */

import type { EChartsOption, SeriesOption } from "echarts/types/dist/echarts";
import { num, readCsv, readSummary, type Row } from "./csv.js";

export const TRAJECTORY_COLUMNS = [
  "run_id",
  "t",
  "wrapper",
  "fdp",
  "power",
  "regret",
  "lambda_base",
  "lambda_actual",
] as const;

const METRICS = ["fdp", "power", "regret", "lambda_base", "lambda_actual"] as const;
type Metric = (typeof METRICS)[number];

interface SeriesMeans {
  label: string;
  ts: number[];
  means: Record<Metric, number[]>;
}

function averageByStep(rows: Row[]): SeriesMeans[] {
  const acc = new Map<string, Map<number, { n: number; sums: Record<Metric, number> }>>();
  for (const row of rows) {
    const label = row.wrapper;
    const t = num(row, "t");
    let steps = acc.get(label);
    if (!steps) acc.set(label, (steps = new Map()));
    let cell = steps.get(t);
    if (!cell) {
      cell = { n: 0, sums: { fdp: 0, power: 0, regret: 0, lambda_base: 0, lambda_actual: 0 } };
      steps.set(t, cell);
    }
    cell.n += 1;
    for (const m of METRICS) cell.sums[m] += num(row, m);
  }
  const out: SeriesMeans[] = [];
  for (const [label, steps] of acc) {
    const ts = [...steps.keys()].sort((a, b) => a - b);
    const means = { fdp: [], power: [], regret: [], lambda_base: [], lambda_actual: [] } as
      Record<Metric, number[]>;
    for (const t of ts) {
      const cell = steps.get(t)!;
      for (const m of METRICS) means[m].push(cell.sums[m] / cell.n);
    }
    out.push({ label, ts, means });
  }
  // Base first so panel colors stay stable across runs.
  out.sort((a, b) => (a.label === "none" ? -1 : b.label === "none" ? 1 : 0));
  return out;
}

export interface DynamicsFigure {
  option: EChartsOption;
  alpha: number;
  labels: string[];
}

export function buildDynamicsFigure(
  trajectoryPath: string,
  summaryPath: string,
): DynamicsFigure {
  const rows = readCsv(trajectoryPath, TRAJECTORY_COLUMNS);
  const { alpha } = readSummary(summaryPath);
  const allSeries = averageByStep(rows);
  const display = (label: string) => (label === "none" ? "base" : label);

  const grids = [
    { left: "7%", top: "10%", width: "38%", height: "32%" },
    { left: "58%", top: "10%", width: "38%", height: "32%" },
    { left: "7%", top: "60%", width: "38%", height: "32%" },
    { left: "58%", top: "60%", width: "38%", height: "32%" },
  ];
  const titles = ["False discovery proportion", "Power", "Testing level", "Weighted regret"];

  const series: SeriesOption[] = [];
  const line = (panel: number, name: string, s: SeriesMeans, metric: Metric): SeriesOption => ({
    type: "line",
    name,
    xAxisIndex: panel,
    yAxisIndex: panel,
    symbol: "none",
    data: s.ts.map((t, i) => [t, s.means[metric][i]]),
  });

  for (const s of allSeries) {
    series.push(line(0, display(s.label), s, "fdp"));
    series.push(line(1, display(s.label), s, "power"));
    series.push(line(3, display(s.label), s, "regret"));
  }
  // Testing-level panel: the wrapped run carries both levels; fall back to the
  // base run's own level when the file holds a bare run only.
  const wrapped = allSeries.find((s) => s.label !== "none") ?? allSeries[0];
  series.push(line(2, "lambda_base", wrapped, "lambda_base"));
  series.push(line(2, "lambda_actual", wrapped, "lambda_actual"));

  const fdpLine = series[0] as SeriesOption & { markLine?: unknown };
  fdpLine.markLine = {
    silent: true,
    symbol: "none",
    lineStyle: { type: "dashed" },
    label: { formatter: `α = ${alpha}` },
    data: [{ yAxis: alpha }],
  };

  const option: EChartsOption = {
    legend: { top: 0 },
    grid: grids,
    title: titles.map((text, i) => ({
      text,
      textStyle: { fontSize: 13 },
      left: grids[i].left,
      top: i < 2 ? "4%" : "54%",
    })),
    xAxis: grids.map((_, i) => ({ type: "value", gridIndex: i, name: "t" })),
    // The error-rate panel must always reach the target level, or the level
    // line would be clipped away whenever the observed rate stays below it.
    yAxis: grids.map((_, i) => ({
      type: "value",
      gridIndex: i,
      ...(i === 0 ? { max: (extent: { max: number }) => Math.max(extent.max, 1.2 * alpha) } : {}),
    })),
    series,
  };
  return { option, alpha, labels: allSeries.map((s) => s.label) };
}
