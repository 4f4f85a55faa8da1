/** Heatmap rendering: one pixel block per grid cell, no interpolation. */

import * as fs from "node:fs";

import { argminGrid, extractGrid, parseCsv, ValidationError, type Grid } from "./csv.js";
import { colorAt, safeRange, scaleValue, type ScaleOptions } from "./colormap.js";
import { encodePng, type Image } from "./png.js";

export const MARKER_COLOR: [number, number, number] = [255, 0, 0];

export interface HeatmapSpec {
  input: string;
  column: string;
  xColumn: string;
  yColumn: string;
  output: string;
  scale?: "linear" | "log";
  /** color range; defaults to [0, max of the column] */
  range?: [number, number];
  /** integer up-scaling of the pixel grid (1 keeps one pixel per cell) */
  pixelScale?: number;
  markMin?: boolean;
  title?: string;
}

export function gridFromCsvText(text: string, spec: HeatmapSpec): Grid {
  return extractGrid(parseCsv(text), spec.xColumn, spec.yColumn, spec.column);
}

/** Render a grid to an RGB image; y increases upward (last row = min y). */
export function renderGrid(grid: Grid, spec: HeatmapSpec): Image {
  const pixelScale = spec.pixelScale ?? 1;
  if (!Number.isInteger(pixelScale) || pixelScale < 1) {
    throw new ValidationError(`pixel scale must be a positive integer, got ${pixelScale}`);
  }
  const nx = grid.xValues.length;
  const ny = grid.yValues.length;
  let max = -Infinity;
  for (const v of grid.values) max = Math.max(max, v);
  const [lo, hi] = spec.range ?? [0, max];
  const options: ScaleOptions = { kind: spec.scale ?? "linear", ...rangeFields(lo, hi) };
  const width = nx * pixelScale;
  const height = ny * pixelScale;
  const pixels = new Uint8Array(width * height * 3);
  const mark = spec.markMin ? argminGrid(grid) : undefined;
  for (let iy = 0; iy < ny; iy++) {
    for (let ix = 0; ix < nx; ix++) {
      const isMarker = mark !== undefined && mark.ix === ix && mark.iy === iy;
      const rgb = isMarker
        ? MARKER_COLOR
        : colorAt(scaleValue(grid.values[iy * nx + ix], options));
      const rowBase = (ny - 1 - iy) * pixelScale; // y axis points upward
      for (let py = 0; py < pixelScale; py++) {
        for (let px = 0; px < pixelScale; px++) {
          const offset = ((rowBase + py) * width + ix * pixelScale + px) * 3;
          pixels[offset] = rgb[0];
          pixels[offset + 1] = rgb[1];
          pixels[offset + 2] = rgb[2];
        }
      }
    }
  }
  return { width, height, pixels };
}

function rangeFields(lo: number, hi: number): { lo: number; hi: number } {
  const [safeLo, safeHi] = safeRange(lo, hi);
  return { lo: safeLo, hi: safeHi };
}

/** Render a heatmap spec to PNG bytes (pure in the input file contents). */
export function renderHeatmapBytes(spec: HeatmapSpec): Buffer {
  const text = fs.readFileSync(spec.input, "utf8");
  const grid = gridFromCsvText(text, spec);
  const image = renderGrid(grid, spec);
  const meta: Record<string, string> = { column: spec.column };
  if (spec.title) meta.title = spec.title;
  return encodePng(image, meta);
}

/** Render and write the PNG; returns the output path. */
export function renderHeatmap(spec: HeatmapSpec): string {
  fs.writeFileSync(spec.output, renderHeatmapBytes(spec));
  return spec.output;
}

export interface PanelResult {
  file: string;
  column: string;
}

const GAP_PANELS: [string, string][] = [
  ["gap_linear", "linear.png"],
  ["gap_radial", "radial.png"],
  ["gap_q", "quadratic.png"],
];

const DIFF_PANELS: [string, string, string][] = [
  ["gap_linear", "gap_radial", "diff_linear_radial.png"],
  ["gap_linear", "gap_q", "diff_linear_quadratic.png"],
  ["gap_radial", "gap_q", "diff_radial_quadratic.png"],
];

/**
 * Six-panel batch for a two-level sweep CSV: the linear, radial and combined
 * quadratic gap maps (minimum marked) plus the three pairwise absolute
 * difference maps.
 */
export function renderSixPanelBatch(
  input: string,
  outdir: string,
  options?: { pixelScale?: number; xColumn?: string; yColumn?: string },
): PanelResult[] {
  const xColumn = options?.xColumn ?? "reE";
  const yColumn = options?.yColumn ?? "imE";
  const pixelScale = options?.pixelScale ?? 1;
  const text = fs.readFileSync(input, "utf8");
  const table = parseCsv(text);
  fs.mkdirSync(outdir, { recursive: true });
  const results: PanelResult[] = [];
  const render = (column: string, file: string, grid: Grid, markMin: boolean) => {
    const image = renderGrid(grid, {
      input,
      column,
      xColumn,
      yColumn,
      output: "",
      pixelScale,
      markMin,
    });
    const path = `${outdir}/${file}`;
    fs.writeFileSync(path, encodePng(image, { column }));
    results.push({ file: path, column });
  };
  for (const [column, file] of GAP_PANELS) {
    render(column, file, extractGrid(table, xColumn, yColumn, column), true);
  }
  for (const [colA, colB, file] of DIFF_PANELS) {
    const gridA = extractGrid(table, xColumn, yColumn, colA);
    const gridB = extractGrid(table, xColumn, yColumn, colB);
    const diff = new Float64Array(gridA.values.length);
    for (let i = 0; i < diff.length; i++) {
      diff[i] = Math.abs(gridA.values[i] - gridB.values[i]);
    }
    render(`abs_diff(${colA},${colB})`, file, { ...gridA, values: diff }, false);
  }
  return results;
}
