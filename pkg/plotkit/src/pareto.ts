/**
 * Pareto traversal: terminal (V, M) operating points with one arrow per
 * configuration from its paired base point to the wrapped point. Wrapped runs
 * trade false positives (rightward) for recovered misses (downward); the
 * identity wrapper draws a zero-length arrow on top of its base point.
 */

import type { EChartsOption } from "echarts/types/dist/echarts";
import { num, readCsv, type Row } from "./csv.js";

export const PARETO_COLUMNS = [
  "label",
  "procedure",
  "wrapper",
  "kappa",
  "mean_V_base",
  "mean_M_base",
  "mean_V",
  "mean_M",
  "se_V",
  "se_M",
] as const;

export interface ParetoPair {
  label: string;
  wrapper: string;
  vBase: number;
  mBase: number;
  v: number;
  m: number;
}

export interface ParetoFigure {
  option: EChartsOption;
  pairs: ParetoPair[];
}

export function buildParetoFigure(paretoPath: string): ParetoFigure {
  const rows = readCsv(paretoPath, PARETO_COLUMNS);
  const pairs: ParetoPair[] = rows.map((row: Row) => ({
    label: row.label,
    wrapper: row.wrapper,
    vBase: num(row, "mean_V_base"),
    mBase: num(row, "mean_M_base"),
    v: num(row, "mean_V"),
    m: num(row, "mean_M"),
  }));

  const option: EChartsOption = {
    grid: { left: "10%", right: "8%", top: "10%", bottom: "12%" },
    title: { text: "Operating points at the horizon", textStyle: { fontSize: 13 } },
    xAxis: { type: "value", name: "false positives V" },
    yAxis: { type: "value", name: "misses M" },
    series: [
      {
        type: "scatter",
        name: "base",
        symbolSize: 9,
        itemStyle: { color: "#888" },
        data: pairs.map((p) => [p.vBase, p.mBase]),
      },
      {
        type: "scatter",
        name: "wrapped",
        symbolSize: 9,
        itemStyle: { color: "#c23531" },
        label: {
          show: true,
          position: "right",
          fontSize: 10,
          formatter: (params: { dataIndex: number }) => pairs[params.dataIndex].label,
        },
        data: pairs.map((p) => [p.v, p.m]),
      },
      {
        type: "lines",
        coordinateSystem: "cartesian2d",
        symbol: ["none", "arrow"],
        symbolSize: 8,
        lineStyle: { color: "#555", width: 1.5, curveness: 0 },
        data: pairs.map((p) => ({ coords: [[p.vBase, p.mBase], [p.v, p.m]] })),
      },
    ],
  };
  return { option, pairs };
}
