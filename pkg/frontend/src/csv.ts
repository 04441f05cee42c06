import { readFileSync } from "fs";
import Papa from "papaparse";

export type FigureKind = "exp1" | "exp2";

export interface Exp1Row {
  n: number;
  p: number;
  seed: number;
  m: number;
  frac: number;
  t_size: number;
  nu1_subset: number;
  nu1_full: number;
}

export interface Exp2Row {
  n: number;
  p: number;
  seed: number;
  r: number;
  target_node: number;
  algo: string;
  interventions: number;
  nu1_full: number;
  nu1_subset: number;
}

export const EXP1_COLUMNS: (keyof Exp1Row)[] = [
  "n", "p", "seed", "m", "frac", "t_size", "nu1_subset", "nu1_full",
];
export const EXP2_COLUMNS: (keyof Exp2Row)[] = [
  "n", "p", "seed", "r", "target_node", "algo", "interventions", "nu1_full", "nu1_subset",
];

export class SchemaError extends Error {}
export class NoDataError extends Error {}

function parseRecords(csvText: string, kind: FigureKind): Record<string, string>[] {
  const parsed = Papa.parse<Record<string, string>>(csvText.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    throw new SchemaError(`CSV parse failed: ${parsed.errors[0].message}`);
  }
  const header = parsed.meta.fields ?? [];
  const wanted = kind === "exp1" ? EXP1_COLUMNS : EXP2_COLUMNS;
  for (const column of wanted) {
    if (!header.includes(column)) {
      throw new SchemaError(`missing column "${column}" for kind ${kind}`);
    }
  }
  if (parsed.data.length === 0) {
    throw new NoDataError(`no data rows in ${kind} CSV`);
  }
  return parsed.data;
}

function toNumber(raw: string, column: string): number {
  const value = Number(raw);
  if (!Number.isFinite(value)) {
    throw new SchemaError(`column "${column}" holds non-numeric value "${raw}"`);
  }
  return value;
}

export function parseExp1(csvText: string): Exp1Row[] {
  return parseRecords(csvText, "exp1").map((rec) => ({
    n: toNumber(rec.n, "n"),
    p: toNumber(rec.p, "p"),
    seed: toNumber(rec.seed, "seed"),
    m: toNumber(rec.m, "m"),
    frac: toNumber(rec.frac, "frac"),
    t_size: toNumber(rec.t_size, "t_size"),
    nu1_subset: toNumber(rec.nu1_subset, "nu1_subset"),
    nu1_full: toNumber(rec.nu1_full, "nu1_full"),
  }));
}

export function parseExp2(csvText: string): Exp2Row[] {
  return parseRecords(csvText, "exp2").map((rec) => ({
    n: toNumber(rec.n, "n"),
    p: toNumber(rec.p, "p"),
    seed: toNumber(rec.seed, "seed"),
    r: toNumber(rec.r, "r"),
    target_node: toNumber(rec.target_node, "target_node"),
    algo: rec.algo,
    interventions: toNumber(rec.interventions, "interventions"),
    nu1_full: toNumber(rec.nu1_full, "nu1_full"),
    nu1_subset: toNumber(rec.nu1_subset, "nu1_subset"),
  }));
}

export function readCsvFile(path: string): string {
  return readFileSync(path, "utf8");
}
