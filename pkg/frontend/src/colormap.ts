/** Fixed perceptually-uniform colormap and value scaling. */

export type Rgb = [number, number, number];

// viridis control points (t = i / 8)
const STOPS: Rgb[] = [
  [68, 1, 84],
  [70, 50, 127],
  [54, 92, 141],
  [39, 127, 142],
  [31, 161, 135],
  [74, 194, 109],
  [159, 218, 58],
  [216, 226, 25],
  [253, 231, 37],
];

/** Map t in [0, 1] onto the colormap (clamped, linear interpolation). */
export function colorAt(t: number): Rgb {
  const clamped = Math.min(1, Math.max(0, t));
  const pos = clamped * (STOPS.length - 1);
  const lo = Math.floor(pos);
  const hi = Math.min(lo + 1, STOPS.length - 1);
  const frac = pos - lo;
  return [0, 1, 2].map((c) =>
    Math.round(STOPS[lo][c] + frac * (STOPS[hi][c] - STOPS[lo][c])),
  ) as Rgb;
}

export interface ScaleOptions {
  kind: "linear" | "log";
  lo: number;
  hi: number;
}

/** Widen a degenerate range so constant columns render uniformly. */
export function safeRange(lo: number, hi: number): [number, number] {
  if (hi - lo > 1e-12) return [lo, hi];
  return [lo - 1e-12, hi + 1e-12];
}

/** Normalized position of a value in the scale, clamped to [0, 1]. */
export function scaleValue(value: number, options: ScaleOptions): number {
  const [lo, hi] = safeRange(options.lo, options.hi);
  if (options.kind === "linear") {
    return Math.min(1, Math.max(0, (value - lo) / (hi - lo)));
  }
  // log scale: values at or below the positive floor map to 0
  const floor = Math.max(lo, hi * 1e-12);
  if (value <= floor) return 0;
  return Math.min(1, Math.log(value / floor) / Math.log(hi / floor));
}
