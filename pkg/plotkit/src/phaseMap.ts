/**
 * Regret phase map: heatmap of the mean regret difference (base minus
 * wrapped) over burst delay rho and price ratio b/a, with the closed-form
 * break-even ratio overlaid straight from the file's tax column. Nothing is
 * recomputed here; the theory values are drawn exactly as persisted.
 */

import type { EChartsOption } from "echarts/types/dist/echarts";
import { num, readCsv, uniqueSorted, type Row } from "./csv.js";

export const SWEEP_COLUMNS = [
  "rho",
  "b_over_a",
  "mean_diff",
  "se_diff",
  "domt_wins",
  "tax",
] as const;

function isLogSpaced(grid: number[]): boolean {
  if (grid.length < 3 || grid.some((g) => g <= 0)) return false;
  const steps = grid.slice(1).map((g, i) => Math.log(g / grid[i]));
  return steps.every((s) => Math.abs(s - steps[0]) < 1e-9 * Math.max(1, Math.abs(steps[0])));
}

/**
 * Fractional band coordinate of a value on a category axis whose categories
 * are the sorted grid values; interpolates in log space for log grids so a
 * value between two bands lands geometrically between their centers.
 */
function bandCoordinate(value: number, grid: number[], log: boolean): number {
  const f = log ? Math.log : (x: number) => x;
  if (value <= grid[0]) return 0.5;
  if (value >= grid[grid.length - 1]) return grid.length - 0.5;
  let j = 0;
  while (value > grid[j + 1]) j += 1;
  const frac = (f(value) - f(grid[j])) / (f(grid[j + 1]) - f(grid[j]));
  return j + 0.5 + frac;
}

export interface PhaseMapFigure {
  option: EChartsOption;
  /** Theory break-even ratio per rho, exactly as read from the tax column. */
  taxByRho: Map<number, number>;
  logAxis: boolean;
}

export function buildPhaseMapFigure(sweepPath: string): PhaseMapFigure {
  const rows = readCsv(sweepPath, SWEEP_COLUMNS);
  const rhos = uniqueSorted(rows.map((r: Row) => num(r, "rho")));
  const ratios = uniqueSorted(rows.map((r: Row) => num(r, "b_over_a")));
  const logAxis = isLogSpaced(ratios);
  const fmt = (x: number) => Number(x.toPrecision(3)).toString();

  const cells: [number, number, number][] = [];
  let maxAbs = 0;
  const taxByRho = new Map<number, number>();
  for (const row of rows) {
    const diff = num(row, "mean_diff");
    cells.push([rhos.indexOf(num(row, "rho")), ratios.indexOf(num(row, "b_over_a")), diff]);
    maxAbs = Math.max(maxAbs, Math.abs(diff));
    const tax = num(row, "tax");
    if (Number.isFinite(tax)) taxByRho.set(num(row, "rho"), tax);
  }

  const overlay = [...taxByRho.entries()]
    .sort((a, b) => a[0] - b[0])
    .map(([rho, tax]) => [fmt(rho), bandCoordinate(tax, ratios, logAxis)]);

  const option: EChartsOption = {
    grid: { left: "12%", right: "18%", top: "10%", bottom: "12%" },
    title: { text: "Regret difference (base − wrapped)", textStyle: { fontSize: 13 } },
    legend: { top: 0, right: 0, data: ["break-even b/a (theory)"] },
    xAxis: { type: "category", data: rhos.map(fmt), name: "ρ" },
    yAxis: [
      { type: "category", data: ratios.map(fmt), name: "b/a" },
      { type: "value", min: 0, max: ratios.length, show: false },
    ],
    visualMap: {
      min: -maxAbs,
      max: maxAbs,
      calculable: true,
      orient: "vertical",
      right: 0,
      top: "center",
      inRange: { color: ["#313695", "#ffffff", "#a50026"] },
    },
    series: [
      { type: "heatmap", data: cells },
      {
        type: "line",
        name: "break-even b/a (theory)",
        yAxisIndex: 1,
        symbol: "diamond",
        symbolSize: 10,
        lineStyle: { type: "dashed", width: 2, color: "#111" },
        itemStyle: { color: "#111" },
        data: overlay,
      },
    ],
  };
  return { option, taxByRho, logAxis };
}
