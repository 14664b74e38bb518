/**
 * Figure definitions: which rows feed which axes.
 *
 * Three kinds, one line per method in each:
 *   mintss-budget        budget vs coverage threshold (task=mintss)
 *   mintime-fixed-budget time steps vs coverage threshold at one budget k
 *   mintime-fixed-eta    time steps vs budget at one coverage threshold
 *
 * Failed sweep points are dropped from the line and reported per method, so
 * a method that stops finding solutions shows as a truncated line with a
 * "failed beyond x=..." legend note.
 */

import type { ResultRow } from "./csv.js";

export const FIGURE_KINDS = ["mintss-budget", "mintime-fixed-budget", "mintime-fixed-eta"] as const;
export type FigureKind = (typeof FIGURE_KINDS)[number];

export interface PlotSpec {
  input: string;
  figure: FigureKind;
  /** Required fixed budget for mintime-fixed-budget. */
  k?: number;
  /** Required fixed coverage threshold for mintime-fixed-eta. */
  eta?: number;
  output: string;
}

export interface Series {
  method: string;
  /** (x, y) points of successful sweep points, ordered by x. */
  points: Array<{ x: number; y: number }>;
  /** x positions of failed sweep points. */
  failedAt: number[];
}

export interface FigureData {
  kind: FigureKind;
  xLabel: string;
  yLabel: string;
  title: string;
  series: Series[];
}

function buildSeries(
  rows: ResultRow[],
  xOf: (r: ResultRow) => number | null,
  yOf: (r: ResultRow) => number | null,
): Series[] {
  const methods: string[] = [];
  const byMethod = new Map<string, ResultRow[]>();
  for (const row of rows) {
    if (!byMethod.has(row.method)) {
      byMethod.set(row.method, []);
      methods.push(row.method);
    }
    byMethod.get(row.method)!.push(row);
  }
  return methods.map((method) => {
    const points: Array<{ x: number; y: number }> = [];
    const failedAt: number[] = [];
    for (const row of byMethod.get(method)!) {
      const x = xOf(row);
      if (x === null) {
        throw new Error(`row for method ${method} is missing its x value`);
      }
      if (row.status === "failed") {
        failedAt.push(x);
        continue;
      }
      const y = yOf(row);
      if (y === null) {
        throw new Error(`ok row for method ${method} at x=${x} is missing its y value`);
      }
      points.push({ x, y });
    }
    points.sort((a, b) => a.x - b.x);
    failedAt.sort((a, b) => a - b);
    return { method, points, failedAt };
  });
}

/** Select and shape the rows for one figure; throws on an empty selection. */
export function figureData(rows: ResultRow[], spec: PlotSpec): FigureData {
  let selected: ResultRow[];
  let data: FigureData;
  switch (spec.figure) {
    case "mintss-budget": {
      selected = rows.filter((r) => r.task === "mintss");
      data = {
        kind: spec.figure,
        xLabel: "coverage threshold (eta)",
        yLabel: "budget (seed set size)",
        title: "MINTSS: budget vs coverage threshold",
        series: buildSeries(selected, (r) => r.eta, (r) => r.seed_size),
      };
      break;
    }
    case "mintime-fixed-budget": {
      if (spec.k === undefined) {
        throw new Error("mintime-fixed-budget needs the fixed budget (k)");
      }
      selected = rows.filter((r) => r.task === "mintime" && r.k === spec.k);
      data = {
        kind: spec.figure,
        xLabel: "coverage threshold (eta)",
        yLabel: "time steps",
        title: `MINTIME: time vs coverage threshold (budget k=${spec.k})`,
        series: buildSeries(selected, (r) => r.eta, (r) => r.time_R),
      };
      break;
    }
    case "mintime-fixed-eta": {
      if (spec.eta === undefined) {
        throw new Error("mintime-fixed-eta needs the fixed coverage threshold (eta)");
      }
      selected = rows.filter((r) => r.task === "mintime" && r.eta === spec.eta);
      data = {
        kind: spec.figure,
        xLabel: "budget (k)",
        yLabel: "time steps",
        title: `MINTIME: time vs budget (eta=${spec.eta})`,
        series: buildSeries(selected, (r) => r.k, (r) => r.time_R),
      };
      break;
    }
    default:
      throw new Error(`unknown figure kind ${String(spec.figure)}`);
  }
  if (selected.length === 0) {
    throw new Error(`empty selection: no rows match figure ${spec.figure}`);
  }
  return data;
}

/** Legend text for a series, annotating where the method stopped succeeding. */
export function legendLabel(series: Series): string {
  if (series.failedAt.length === 0) {
    return series.method;
  }
  const okXs = series.points.map((p) => p.x);
  const firstFail = series.failedAt[0];
  const lastOkBeforeFail = okXs.filter((x) => x < firstFail);
  if (lastOkBeforeFail.length > 0) {
    return `${series.method} (failed beyond x=${lastOkBeforeFail[lastOkBeforeFail.length - 1]})`;
  }
  return `${series.method} (all points failed)`;
}
