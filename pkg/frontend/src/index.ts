import { readResults } from "./csv.js";
import { FigureData, PlotSpec, figureData } from "./figures.js";
import { renderSvg } from "./svg.js";

export { COLUMNS, parseCsv, readResults } from "./csv.js";
export type { ResultRow } from "./csv.js";
export { FIGURE_KINDS, figureData, legendLabel } from "./figures.js";
export type { FigureData, FigureKind, PlotSpec, Series } from "./figures.js";
export { renderSvg, seriesColor } from "./svg.js";

/** CSV text + spec -> SVG text; pure, so identical inputs give identical bytes. */
export function render(csvText: string, spec: PlotSpec): string {
  const data: FigureData = figureData(readResults(csvText), spec);
  return renderSvg(data);
}
