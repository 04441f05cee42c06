import { Exp1Row, Exp2Row, FigureKind } from "./csv";

/** One aggregated point: arithmetic mean over trials, min/max whiskers. */
export interface SeriesPoint {
  x: number;
  mean: number;
  min: number;
  max: number;
}

export interface Series {
  name: string;
  /** dashed reference series (full-graph numbers) vs solid data series */
  reference: boolean;
  points: SeriesPoint[];
}

export interface Figure {
  kind: FigureKind;
  xLabel: string;
  yLabel: string;
  series: Series[];
}

function aggregate(values: Map<number, number[]>): SeriesPoint[] {
  return [...values.entries()]
    .sort((a, b) => a[0] - b[0])
    .map(([x, ys]) => ({
      x,
      mean: ys.reduce((s, y) => s + y, 0) / ys.length,
      min: Math.min(...ys),
      max: Math.max(...ys),
    }));
}

function push(map: Map<string, Map<number, number[]>>, key: string, x: number, y: number) {
  if (!map.has(key)) map.set(key, new Map());
  const inner = map.get(key)!;
  if (!inner.has(x)) inner.set(x, []);
  inner.get(x)!.push(y);
}

/** Mean subset-verification number vs n: one line per fraction, plus the
 * full-graph verification number as a reference line. */
export function buildExp1Figure(rows: Exp1Row[]): Figure {
  const byFraction = new Map<string, Map<number, number[]>>();
  const full = new Map<string, Map<number, number[]>>();
  for (const row of rows) {
    push(byFraction, `|T| = ${row.frac}m`, row.n, row.nu1_subset);
    push(full, "full graph", row.n, row.nu1_full);
  }
  const series: Series[] = [...byFraction.entries()]
    .sort((a, b) => parseFloat(a[0].slice(6)) - parseFloat(b[0].slice(6)))
    .map(([name, values]) => ({ name, reference: false, points: aggregate(values) }));
  series.push({
    name: "full graph",
    reference: true,
    points: aggregate(full.get("full graph")!),
  });
  return {
    kind: "exp1",
    xLabel: "vertices",
    yLabel: "interventions needed",
    series,
  };
}

/** Mean intervention count vs n: one line per search policy, plus the two
 * verification numbers as reference lines. */
export function buildExp2Figure(rows: Exp2Row[]): Figure {
  const byAlgo = new Map<string, Map<number, number[]>>();
  const refs = new Map<string, Map<number, number[]>>();
  for (const row of rows) {
    push(byAlgo, row.algo, row.n, row.interventions);
    // each trial contributes its reference numbers once, not once per algo
  }
  const seen = new Set<string>();
  for (const row of rows) {
    const key = `${row.n}/${row.p}/${row.seed}`;
    if (seen.has(key)) continue;
    seen.add(key);
    push(refs, "verification (targets)", row.n, row.nu1_subset);
    push(refs, "verification (full)", row.n, row.nu1_full);
  }
  const series: Series[] = [...byAlgo.entries()]
    .sort((a, b) => a[0].localeCompare(b[0]))
    .map(([name, values]) => ({ name, reference: false, points: aggregate(values) }));
  for (const name of ["verification (targets)", "verification (full)"]) {
    series.push({ name, reference: true, points: aggregate(refs.get(name)!) });
  }
  return {
    kind: "exp2",
    xLabel: "vertices",
    yLabel: "interventions used",
    series,
  };
}
