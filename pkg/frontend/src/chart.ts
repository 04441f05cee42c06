import { writeFileSync } from "fs";
import * as echarts from "echarts";
import { Figure } from "./series";

export interface RenderOptions {
  title?: string;
  width?: number;
  height?: number;
}

/** Map an aggregated figure onto an echarts option: solid mean lines with
 * min/max whisker bars, dashed reference lines, legend entry per series. */
export function chartOption(figure: Figure, opts: RenderOptions = {}): echarts.EChartsOption {
  const lineSeries: echarts.SeriesOption[] = figure.series.map((s) => ({
    name: s.name,
    type: "line",
    data: s.points.map((pt) => [pt.x, pt.mean]),
    lineStyle: s.reference ? { type: "dashed", width: 1.5 } : { width: 2 },
    symbolSize: s.reference ? 4 : 6,
  }));
  const whiskers: echarts.SeriesOption[] = figure.series
    .filter((s) => !s.reference)
    .map((s) => ({
      name: `${s.name} range`,
      type: "custom",
      silent: true,
      data: s.points.map((pt) => [pt.x, pt.min, pt.max]),
      renderItem: (_params: unknown, api: any) => {
        const low = api.coord([api.value(0), api.value(1)]);
        const high = api.coord([api.value(0), api.value(2)]);
        return {
          type: "line",
          shape: { x1: low[0], y1: low[1], x2: high[0], y2: high[1] },
          style: { stroke: api.visual("color"), lineWidth: 1, opacity: 0.5 },
        };
      },
    }));
  return {
    animation: false,
    title: opts.title ? { text: opts.title, left: "center" } : undefined,
    legend: { data: figure.series.map((s) => s.name), bottom: 0 },
    grid: { left: 60, right: 30, top: opts.title ? 50 : 30, bottom: 70 },
    xAxis: {
      type: "value",
      name: figure.xLabel,
      nameLocation: "middle",
      nameGap: 28,
      minInterval: 1,
      scale: true,
    },
    yAxis: { type: "value", name: figure.yLabel, nameLocation: "middle", nameGap: 38 },
    series: [...lineSeries, ...whiskers],
  };
}

export function renderSvg(figure: Figure, opts: RenderOptions = {}): string {
  const chart = echarts.init(null as any, null, {
    renderer: "svg",
    ssr: true,
    width: opts.width ?? 840,
    height: opts.height ?? 520,
  });
  chart.setOption(chartOption(figure, opts));
  const svg = chart.renderToSVGString();
  chart.dispose();
  // zrender bakes process-global counters into class names; renumber them by
  // first appearance and sort the (independent) hover rules so repeated
  // renders of the same figure are byte-identical
  const canonical = new Map<string, string>();
  const renamed = svg.replace(/zr\d+-/g, "zr-").replace(/zr-cls-(\d+)/g, (token) => {
    if (!canonical.has(token)) canonical.set(token, `zr-cls-${canonical.size}`);
    return canonical.get(token)!;
  });
  return renamed.replace(/<!\[CDATA\[([\s\S]*?)\]\]>/, (_whole, body: string) => {
    const rules = body
      .split(/\n(?=\s*\.)/)
      .map((rule) => rule.trim())
      .filter(Boolean)
      .sort();
    return `<![CDATA[\n${rules.join("\n")}\n]]>`;
  });
}

export function renderToFile(figure: Figure, outPath: string, opts: RenderOptions = {}): void {
  writeFileSync(outPath, renderSvg(figure, opts), "utf8");
}
