/**
 * Server-side SVG rendering: one chart option in, one image file out.
 * No browser, no canvas; a fresh process renders the same option to the
 * same bytes.
 */

import fs from "node:fs";
import path from "node:path";
import { HeatmapChart, LineChart, LinesChart, ScatterChart } from "echarts/charts";
import {
  GridComponent,
  LegendComponent,
  MarkLineComponent,
  TitleComponent,
  VisualMapComponent,
} from "echarts/components";
import { init, use } from "echarts/core";
import { SVGRenderer } from "echarts/renderers";
import type { EChartsOption } from "echarts/types/dist/echarts";

use([
  LineChart,
  ScatterChart,
  HeatmapChart,
  LinesChart,
  GridComponent,
  LegendComponent,
  MarkLineComponent,
  TitleComponent,
  VisualMapComponent,
  SVGRenderer,
]);

export interface RenderSize {
  width: number;
  height: number;
}

export function renderSvg(option: EChartsOption, size: RenderSize): string {
  const chart = init(null, null, {
    renderer: "svg",
    ssr: true,
    width: size.width,
    height: size.height,
  });
  try {
    chart.setOption({ animation: false, ...option });
    return chart.renderToSVGString();
  } finally {
    chart.dispose();
  }
}

export function renderToFile(
  option: EChartsOption,
  outPath: string,
  size: RenderSize = { width: 960, height: 640 },
): void {
  const svg = renderSvg(option, size);
  fs.mkdirSync(path.dirname(outPath), { recursive: true });
  fs.writeFileSync(outPath, svg);
}
