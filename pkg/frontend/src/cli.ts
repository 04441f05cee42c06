#!/usr/bin/env node
import yargs from "yargs";
import { hideBin } from "yargs/helpers";
import { NoDataError, SchemaError, parseExp1, parseExp2, readCsvFile } from "./csv";
import { buildExp1Figure, buildExp2Figure } from "./series";
import { renderToFile } from "./chart";

export function renderFile(kind: "exp1" | "exp2", input: string, output: string, title?: string): void {
  const text = readCsvFile(input);
  const figure = kind === "exp1" ? buildExp1Figure(parseExp1(text)) : buildExp2Figure(parseExp2(text));
  renderToFile(figure, output, { title });
}

export function main(argv: string[]): number {
  const args = yargs(argv)
    .scriptName("plot")
    .option("kind", { choices: ["exp1", "exp2"] as const, demandOption: true })
    .option("in", { type: "string", demandOption: true, describe: "input CSV path" })
    .option("out", { type: "string", demandOption: true, describe: "output SVG path" })
    .option("title", { type: "string" })
    .strict()
    .parseSync();
  try {
    renderFile(args.kind, args.in, args.out, args.title);
    console.log(`wrote ${args.out}`);
    return 0;
  } catch (err) {
    if (err instanceof SchemaError || err instanceof NoDataError) {
      console.error(String(err.message));
      return 1;
    }
    throw err;
  }
}

if (require.main === module) {
  process.exit(main(hideBin(process.argv)));
}
