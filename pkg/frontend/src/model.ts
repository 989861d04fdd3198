// Pure view-model builders. Renderers paint these models; contract tests
// assert on them directly. Row orders, grouping labels, lineage sets, and
// histogram values are taken verbatim from the API payloads.

import type { HistogramPayload, LineagePayload, MatrixDoc } from "./api";
import { cellColor, cellCss, type CellColor } from "./color";
import type { ViewState } from "./state";

export interface HeatmapRow {
  feature: string;
  cells: { normP: number; alarm: boolean; color: CellColor; css: string }[];
}

export interface RowGroup {
  label: string | null;
  rows: HeatmapRow[];
}

export interface OverviewModel {
  dates: string[];
  groups: RowGroup[];
  rowCount: number;
  columnCount: number;
}

function buildRow(matrix: MatrixDoc, feature: string): HeatmapRow {
  const i = matrix.features.indexOf(feature);
  if (i < 0) throw new Error(`feature ${feature} not in matrix`);
  return {
    feature,
    cells: matrix.norm_p[i].map((p, t) => ({
      normP: p,
      alarm: matrix.alarm[i][t],
      color: cellColor(p, matrix.thresholds),
      css: cellCss(p, matrix.thresholds),
    })),
  };
}

function attributeOf(matrix: MatrixDoc, feature: string, attribute: string): string {
  const f = matrix.schema.features.find((sf) => sf.name === feature);
  const value = f?.attributes[attribute];
  if (value === undefined)
    throw new Error(`feature ${feature} has no attribute ${attribute}`);
  return value;
}

export function visibleFeatures(matrix: MatrixDoc, state: ViewState): string[] {
  // ordering comes from the service, never recomputed here
  const order = matrix.orderings[state.sortMode];
  const query = state.searchQuery.trim().toLowerCase();
  return order.filter(
    (f) =>
      !state.removed.includes(f) && (query === "" || f.toLowerCase().includes(query)),
  );
}

export function buildOverviewModel(matrix: MatrixDoc, state: ViewState): OverviewModel {
  const features = visibleFeatures(matrix, state);
  let groups: RowGroup[];
  if (state.grouping === null) {
    groups = [{ label: null, rows: features.map((f) => buildRow(matrix, f)) }];
  } else {
    // stable partition: group order is first appearance of each label
    const byLabel = new Map<string, HeatmapRow[]>();
    for (const f of features) {
      const label = attributeOf(matrix, f, state.grouping);
      if (!byLabel.has(label)) byLabel.set(label, []);
      byLabel.get(label)!.push(buildRow(matrix, f));
    }
    groups = [...byLabel.entries()].map(([label, rows]) => ({ label, rows }));
  }
  return {
    dates: matrix.dates,
    groups,
    rowCount: features.length,
    columnCount: matrix.dates.length,
  };
}

export interface InvestigationModel {
  dates: string[];
  investigated: HeatmapRow[];
  ancestors: HeatmapRow[];
  descendants: HeatmapRow[];
  commonOnly: boolean;
}

export function buildInvestigationModel(
  matrix: MatrixDoc,
  related: LineagePayload,
  state: ViewState,
): InvestigationModel {
  // related features not present in the matrix (not evaluated) are skipped
  const inMatrix = (f: string) => matrix.features.includes(f);
  return {
    dates: matrix.dates,
    investigated: state.investigation.map((f) => buildRow(matrix, f)),
    ancestors: related.ancestors.filter(inMatrix).map((f) => buildRow(matrix, f)),
    descendants: related.descendants.filter(inMatrix).map((f) => buildRow(matrix, f)),
    commonOnly: state.commonOnly,
  };
}

export interface DetailBar {
  label: string;
  target: number;
  reference: number;
  special: boolean;
}

export interface SliderTick {
  date: string;
  css: string;
}

export interface DetailModel {
  feature: string;
  date: string;
  bars: DetailBar[];
  specialLabel: string;
  noData: boolean;
  ticks: SliderTick[];
  yScale: "linear" | "log";
  xScale: "discrete" | "linear";
}

export function buildDetailModel(
  matrix: MatrixDoc,
  payload: HistogramPayload,
  state: ViewState,
): DetailModel {
  if (state.detail === null) throw new Error("no detail target");
  const { feature, date } = state.detail;
  const i = matrix.features.indexOf(feature);
  if (i < 0) throw new Error(`feature ${feature} not in matrix`);

  let bars: DetailBar[] = payload.labels.map((label, k) => ({
    label,
    target: payload.target.mass[k],
    reference: payload.reference.mass[k],
    special: false,
  }));
  if (state.brush !== null) {
    const [lo, hi] = state.brush;
    bars = bars.filter((_, k) => k >= lo && k <= hi);
  }
  bars.push({
    label: payload.special_label,
    target: payload.target.special_mass,
    reference: payload.reference.special_mass,
    special: true,
  });

  return {
    feature,
    date,
    bars,
    specialLabel: payload.special_label,
    noData: payload.target.sample_count === 0,
    ticks: matrix.dates.map((d, t) => ({
      date: d,
      css: cellCss(matrix.norm_p[i][t], matrix.thresholds),
    })),
    yScale: state.yScale,
    xScale: state.xScale,
  };
}

/** Bar height in [0, 1] under the chosen y-scale; zero frequencies sit on
 * the axis floor under log scale instead of diverging. */
export function barHeight(value: number, yScale: "linear" | "log", floor = 1e-4): number {
  if (yScale === "linear") return value;
  if (value <= floor) return 0;
  return (Math.log10(value) - Math.log10(floor)) / -Math.log10(floor);
}
