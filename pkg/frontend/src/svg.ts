/**
 * SVG rendering. Pure string construction: the same figure data always
 * yields byte-identical SVG. Series carry data-method / data-x / data-y
 * attributes so tests (and downstream tools) can read the plotted values
 * straight back out of the image.
 */

import { FigureData, Series, legendLabel } from "./figures.js";

const WIDTH = 720;
const HEIGHT = 460;
const MARGIN = { top: 48, right: 220, bottom: 56, left: 64 };

/** Fixed method palette so figures stay comparable across runs. */
const PALETTE: Record<string, string> = {
  greedy: "#1f77b4",
  random: "#ff7f0e",
  "high-degree": "#2ca02c",
  pagerank: "#d62728",
  sp: "#9467bd",
  given: "#8c564b",
};
const FALLBACK = ["#e377c2", "#7f7f7f", "#bcbd22", "#17becf"];

export function seriesColor(method: string, index: number): string {
  return PALETTE[method] ?? FALLBACK[index % FALLBACK.length];
}

function extent(values: number[]): [number, number] {
  let lo = Math.min(...values);
  let hi = Math.max(...values);
  if (!Number.isFinite(lo)) {
    lo = 0;
    hi = 1;
  }
  if (lo === hi) {
    lo -= 1;
    hi += 1;
  }
  return [lo, hi];
}

function ticks(lo: number, hi: number, count = 5): number[] {
  const span = hi - lo;
  const rawStep = span / Math.max(1, count);
  const mag = 10 ** Math.floor(Math.log10(rawStep));
  const step = [1, 2, 5, 10].map((m) => m * mag).find((s) => span / s <= count) ?? mag * 10;
  const start = Math.ceil(lo / step) * step;
  const out: number[] = [];
  for (let t = start; t <= hi + 1e-9; t += step) {
    out.push(Number(t.toFixed(10)));
  }
  return out;
}

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function fmt(x: number): string {
  return Number.isInteger(x) ? String(x) : String(Number(x.toPrecision(10)));
}

/** Render figure data to a standalone SVG document. */
export function renderSvg(data: FigureData): string {
  const xs = data.series.flatMap((s) => s.points.map((p) => p.x));
  const ys = data.series.flatMap((s) => s.points.map((p) => p.y));
  if (xs.length === 0) {
    throw new Error("nothing to plot: every selected point failed");
  }
  const [x0, x1] = extent(xs);
  const [y0raw, y1] = extent(ys);
  const y0 = Math.min(0, y0raw);
  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const sx = (x: number) => MARGIN.left + ((x - x0) / (x1 - x0)) * plotW;
  const sy = (y: number) => MARGIN.top + plotH - ((y - y0) / (y1 - y0)) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
      `viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif">`,
  );
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);
  parts.push(`<text x="${MARGIN.left}" y="24" font-size="15" font-weight="bold">${esc(data.title)}</text>`);

  // axes
  const axisY = MARGIN.top + plotH;
  parts.push(`<g stroke="#333" stroke-width="1">` +
    `<line x1="${MARGIN.left}" y1="${axisY}" x2="${MARGIN.left + plotW}" y2="${axisY}"/>` +
    `<line x1="${MARGIN.left}" y1="${MARGIN.top}" x2="${MARGIN.left}" y2="${axisY}"/></g>`);
  for (const t of ticks(x0, x1)) {
    const x = sx(t);
    parts.push(
      `<line x1="${fmt(x)}" y1="${axisY}" x2="${fmt(x)}" y2="${axisY + 5}" stroke="#333"/>` +
        `<text x="${fmt(x)}" y="${axisY + 20}" font-size="11" text-anchor="middle">${fmt(t)}</text>`,
    );
  }
  for (const t of ticks(y0, y1)) {
    const y = sy(t);
    parts.push(
      `<line x1="${MARGIN.left - 5}" y1="${fmt(y)}" x2="${MARGIN.left}" y2="${fmt(y)}" stroke="#333"/>` +
        `<text x="${MARGIN.left - 9}" y="${fmt(y + 4)}" font-size="11" text-anchor="end">${fmt(t)}</text>`,
    );
  }
  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${HEIGHT - 14}" font-size="13" ` +
      `text-anchor="middle">${esc(data.xLabel)}</text>`,
  );
  parts.push(
    `<text x="18" y="${MARGIN.top + plotH / 2}" font-size="13" text-anchor="middle" ` +
      `transform="rotate(-90 18 ${MARGIN.top + plotH / 2})">${esc(data.yLabel)}</text>`,
  );

  // series
  data.series.forEach((series: Series, idx: number) => {
    const color = seriesColor(series.method, idx);
    const coords = series.points.map((p) => `${fmt(sx(p.x))},${fmt(sy(p.y))}`).join(" ");
    parts.push(`<g data-method="${esc(series.method)}" fill="${color}" stroke="${color}">`);
    if (series.points.length > 1) {
      parts.push(`<polyline points="${coords}" fill="none" stroke-width="2"/>`);
    }
    for (const p of series.points) {
      parts.push(
        `<circle data-x="${fmt(p.x)}" data-y="${fmt(p.y)}" cx="${fmt(sx(p.x))}" ` +
          `cy="${fmt(sy(p.y))}" r="3.5"/>`,
      );
    }
    parts.push(`</g>`);
  });

  // legend with failure annotations
  const lx = MARGIN.left + plotW + 16;
  data.series.forEach((series, idx) => {
    const y = MARGIN.top + 10 + idx * 22;
    const color = seriesColor(series.method, idx);
    parts.push(
      `<line x1="${lx}" y1="${y}" x2="${lx + 22}" y2="${y}" stroke="${color}" stroke-width="2"/>` +
        `<circle cx="${lx + 11}" cy="${y}" r="3.5" fill="${color}"/>` +
        `<text x="${lx + 30}" y="${y + 4}" font-size="12">${esc(legendLabel(series))}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
