#!/usr/bin/env node
/**
 * spreadopt-plot: turn an experiment CSV into one SVG figure.
 *
 *   spreadopt-plot --input results.csv --figure mintss-budget --output fig.svg
 *   spreadopt-plot --input results.csv --figure mintime-fixed-budget --k 75 --output fig.svg
 *   spreadopt-plot --input results.csv --figure mintime-fixed-eta --eta 1000 --output fig.svg
 *
 * Exits 1 on any validation or selection error; nothing is written then.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { pathToFileURL } from "node:url";
import { render } from "./index.js";
import { FIGURE_KINDS, FigureKind, PlotSpec } from "./figures.js";

function usage(message?: string): never {
  if (message) {
    console.error(`error: ${message}`);
  }
  console.error(
    "usage: spreadopt-plot --input <csv> --figure <" +
      FIGURE_KINDS.join("|") +
      "> [--k <budget>] [--eta <threshold>] --output <svg>",
  );
  process.exit(1);
}

export function parseArgs(argv: string[]): PlotSpec {
  const opts = new Map<string, string>();
  for (let i = 0; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (!flag.startsWith("--") || value === undefined) {
      usage(`bad argument ${flag}`);
    }
    opts.set(flag.slice(2), value);
  }
  const input = opts.get("input") ?? usage("--input is required");
  const output = opts.get("output") ?? usage("--output is required");
  const figure = opts.get("figure") ?? usage("--figure is required");
  if (!(FIGURE_KINDS as readonly string[]).includes(figure)) {
    usage(`unknown figure kind ${figure}`);
  }
  const spec: PlotSpec = { input, output, figure: figure as FigureKind };
  if (opts.has("k")) {
    spec.k = Number(opts.get("k"));
    if (Number.isNaN(spec.k)) usage("--k must be a number");
  }
  if (opts.has("eta")) {
    spec.eta = Number(opts.get("eta"));
    if (Number.isNaN(spec.eta)) usage("--eta must be a number");
  }
  return spec;
}

export function main(argv: string[]): void {
  const spec = parseArgs(argv);
  let svg: string;
  try {
    svg = render(readFileSync(spec.input, "utf-8"), spec);
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`);
    process.exit(1);
  }
  writeFileSync(spec.output, svg, "utf-8");
  console.error(`wrote ${spec.output}`);
}

if (process.argv[1] && import.meta.url === pathToFileURL(process.argv[1]).href) {
  main(process.argv.slice(2));
}
