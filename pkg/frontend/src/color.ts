// Tripartite p-value color scale. Must agree with the engine's cell_color:
// light gray at or above the analysis threshold, black below the alert
// threshold, and a log10-interpolated light-yellow -> dark-red gradient in
// between. A shared fixture test keeps the two sides in sync.

import type { Thresholds } from "./api";

export type ColorKind = "light_gray" | "black" | "gradient";

export interface CellColor {
  kind: ColorKind;
  /** Position in [0, 1] along the gradient; only set for kind "gradient". */
  gradient: number;
}

export function cellColor(normP: number, t: Thresholds): CellColor {
  if (normP <= 0) throw new Error("norm_p must be > 0");
  if (normP >= t.analysis_threshold) return { kind: "light_gray", gradient: 0 };
  if (normP < t.alpha) return { kind: "black", gradient: 0 };
  const top = Math.log10(t.analysis_threshold);
  const bottom = Math.log10(t.alpha);
  return { kind: "gradient", gradient: (top - Math.log10(normP)) / (top - bottom) };
}

export const LIGHT_GRAY = "#d9d9d9";
export const BLACK = "#000000";
const GRADIENT_LOW = [255, 247, 188]; // light yellow
const GRADIENT_HIGH = [153, 0, 13]; // dark red

export function cellCss(normP: number, t: Thresholds): string {
  const c = cellColor(normP, t);
  if (c.kind === "light_gray") return LIGHT_GRAY;
  if (c.kind === "black") return BLACK;
  const mix = GRADIENT_LOW.map((lo, i) =>
    Math.round(lo + (GRADIENT_HIGH[i] - lo) * c.gradient),
  );
  return `rgb(${mix[0]},${mix[1]},${mix[2]})`;
}
