/** Sweep-CSV parsing and grid extraction. */

export class ValidationError extends Error {}

export interface SweepTable {
  columns: string[];
  rows: number[][];
}

/** Parse a sweep CSV: one header row, numeric cells, no quoting. */
export function parseCsv(text: string): SweepTable {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length < 2) {
    throw new ValidationError("CSV needs a header row and at least one data row");
  }
  const columns = lines[0].split(",");
  const rows: number[][] = [];
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(",");
    if (cells.length !== columns.length) {
      throw new ValidationError(
        `line ${i + 1}: expected ${columns.length} fields, got ${cells.length}`,
      );
    }
    const row = cells.map(Number);
    if (row.some((v) => Number.isNaN(v))) {
      throw new ValidationError(`line ${i + 1}: non-numeric cell`);
    }
    rows.push(row);
  }
  return { columns, rows };
}

export function columnIndex(table: SweepTable, name: string): number {
  const idx = table.columns.indexOf(name);
  if (idx < 0) {
    throw new ValidationError(
      `no column named '${name}' (have: ${table.columns.join(", ")})`,
    );
  }
  return idx;
}

export function columnValues(table: SweepTable, name: string): number[] {
  const idx = columnIndex(table, name);
  return table.rows.map((row) => row[idx]);
}

export interface Grid {
  /** ascending axis values */
  xValues: number[];
  yValues: number[];
  /** cell (ix, iy) in row-major x order: values[iy * nx + ix] */
  values: Float64Array;
}

function ascendingUnique(values: number[]): number[] {
  return [...new Set(values)].sort((a, b) => a - b);
}

/**
 * Lift one value column onto the (xColumn, yColumn) grid.  The grid must be
 * complete: every (x, y) pair appears exactly once and the row count is the
 * product of the axis sizes.
 */
export function extractGrid(
  table: SweepTable,
  xColumn: string,
  yColumn: string,
  valueColumn: string,
): Grid {
  const xs = columnValues(table, xColumn);
  const ys = columnValues(table, yColumn);
  const vs = columnValues(table, valueColumn);
  const xValues = ascendingUnique(xs);
  const yValues = ascendingUnique(ys);
  const nx = xValues.length;
  const ny = yValues.length;
  if (nx < 2 || ny < 2) {
    throw new ValidationError(
      `grid needs at least two distinct values per axis (got ${nx} x ${ny})`,
    );
  }
  if (table.rows.length !== nx * ny) {
    throw new ValidationError(
      `ragged grid: ${table.rows.length} rows != ${nx} x ${ny}`,
    );
  }
  const xIndex = new Map(xValues.map((v, i) => [v, i]));
  const yIndex = new Map(yValues.map((v, i) => [v, i]));
  const values = new Float64Array(nx * ny).fill(Number.NaN);
  for (let r = 0; r < table.rows.length; r++) {
    const ix = xIndex.get(xs[r])!;
    const iy = yIndex.get(ys[r])!;
    const flat = iy * nx + ix;
    if (!Number.isNaN(values[flat])) {
      throw new ValidationError(`duplicate grid cell at (${xs[r]}, ${ys[r]})`);
    }
    values[flat] = vs[r];
  }
  return { xValues, yValues, values };
}

/** Flat index of the smallest grid value (lowest index wins ties). */
export function argminGrid(grid: Grid): { ix: number; iy: number; value: number } {
  let best = 0;
  for (let i = 1; i < grid.values.length; i++) {
    if (grid.values[i] < grid.values[best]) best = i;
  }
  const nx = grid.xValues.length;
  return { ix: best % nx, iy: Math.floor(best / nx), value: grid.values[best] };
}
