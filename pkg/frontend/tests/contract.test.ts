// Contract tests against an exported bundle for a synthetic scenario with a
// sudden +4-sigma shift injected into num_05 at evaluation day 30. The UI
// must show: a full 20x60 overview grid, the drifted row light gray before
// the onset and black (alarming) from the onset onward, num_05 ranked first
// under the most-alarms ordering, the exact lineage of eng_00, and a detail
// histogram whose target bars are visibly displaced from the reference.

import { readFileSync } from "node:fs";
import { beforeAll, describe, expect, it } from "vitest";
import type { HistogramPayload, LineagePayload, MatrixDoc } from "../src/api";
import { combineRelated } from "../src/api";
import {
  buildDetailModel,
  buildInvestigationModel,
  buildOverviewModel,
  visibleFeatures,
} from "../src/model";
import { LIGHT_GRAY, BLACK } from "../src/color";
import { initialState, replay, type Action } from "../src/state";

function loadFixture<T>(rel: string): T {
  return JSON.parse(
    readFileSync(new URL(`./fixtures/api/${rel}`, import.meta.url), "utf8"),
  ) as T;
}

let matrix: MatrixDoc;
beforeAll(() => {
  matrix = loadFixture<MatrixDoc>("matrix.json");
});

const ONSET = 30;

describe("overview", () => {
  it("shows every feature and every day of the run", () => {
    const model = buildOverviewModel(matrix, initialState);
    expect(model.rowCount).toBe(20);
    expect(model.columnCount).toBe(60);
    expect(model.groups).toHaveLength(1);
    expect(model.groups[0].rows.map((r) => r.feature)).toEqual(matrix.orderings.original);
    for (const row of model.groups[0].rows) expect(row.cells).toHaveLength(60);
  });

  it("paints the drifted row gray before the onset and black after", () => {
    const model = buildOverviewModel(matrix, initialState);
    const row = model.groups[0].rows.find((r) => r.feature === "num_05")!;
    for (let t = 0; t < ONSET; t++) {
      expect(row.cells[t].css).toBe(LIGHT_GRAY);
      expect(row.cells[t].alarm).toBe(false);
    }
    for (let t = ONSET; t < 60; t++) {
      expect(row.cells[t].css).toBe(BLACK);
      expect(row.cells[t].alarm).toBe(true);
    }
  });

  it("ranks the drifted feature first under most_alarms", () => {
    const state = replay([{ type: "set_sort", mode: "most_alarms" }]);
    expect(visibleFeatures(matrix, state)[0]).toBe("num_05");
    const model = buildOverviewModel(matrix, state);
    expect(model.groups[0].rows[0].feature).toBe("num_05");
  });

  it("filters by search and removal without reordering", () => {
    const state = replay([
      { type: "set_search", query: "num" },
      { type: "remove_feature", feature: "num_09" },
    ]);
    const visible = visibleFeatures(matrix, state);
    expect(visible.every((f) => f.includes("num"))).toBe(true);
    expect(visible).not.toContain("num_09");
    const order = matrix.orderings.original.filter((f) => visible.includes(f));
    expect(visible).toEqual(order);
  });

  it("groups rows by schema attributes", () => {
    const state = replay([{ type: "set_grouping", attribute: "origin" }]);
    const model = buildOverviewModel(matrix, state);
    const labels = model.groups.map((g) => g.label);
    expect(labels).toEqual(["raw", "engineered"]);
    const engineered = model.groups[1].rows.map((r) => r.feature);
    expect(engineered).toEqual(["eng_00", "eng_01"]);
  });
});

describe("investigation", () => {
  it("lists exactly the ancestors of an engineered feature", () => {
    const lineage = loadFixture<LineagePayload>("lineage/eng_00.json");
    expect(lineage).toEqual({ ancestors: ["num_00", "num_01"], descendants: [] });
    const state = replay([{ type: "investigate", feature: "eng_00" }]);
    const related = combineRelated([lineage], state.investigation, state.commonOnly);
    const model = buildInvestigationModel(matrix, related, state);
    expect(model.investigated.map((r) => r.feature)).toEqual(["eng_00"]);
    expect(model.ancestors.map((r) => r.feature)).toEqual(["num_00", "num_01"]);
    expect(model.descendants).toEqual([]);
  });

  it("intersects relatives when common-only is on", () => {
    const a = loadFixture<LineagePayload>("lineage/eng_00.json");
    const b = loadFixture<LineagePayload>("lineage/eng_01.json");
    const union = combineRelated([a, b], ["eng_00", "eng_01"], false);
    expect(union.ancestors).toEqual(["num_00", "num_01", "num_02", "num_03"]);
    const common = combineRelated([a, b], ["eng_00", "eng_01"], true);
    expect(common.ancestors).toEqual([]);
  });
});

describe("detail histogram", () => {
  const date = () => matrix.dates[45];

  it("shows target bars displaced from the reference after the shift", () => {
    const payload = loadFixture<HistogramPayload>(`histogram/num_05/${date()}.json`);
    const actions: Action[] = [
      { type: "open_detail", feature: "num_05", date: date() },
    ];
    const model = buildDetailModel(matrix, payload, replay(actions));
    expect(model.noData).toBe(false);
    expect(model.bars).toHaveLength(payload.labels.length + 1);
    expect(model.bars.at(-1)).toMatchObject({ label: "NaN", special: true });
    const maxShift = Math.max(
      ...model.bars.map((b) => Math.abs(b.target - b.reference)),
    );
    expect(maxShift).toBeGreaterThan(0.2);
  });

  it("colors the date slider ticks like the heatmap row", () => {
    const payload = loadFixture<HistogramPayload>(`histogram/num_05/${date()}.json`);
    const model = buildDetailModel(
      matrix,
      payload,
      replay([{ type: "open_detail", feature: "num_05", date: date() }]),
    );
    expect(model.ticks).toHaveLength(60);
    expect(model.ticks[0].css).toBe(LIGHT_GRAY);
    expect(model.ticks[45].css).toBe(BLACK);
    expect(model.ticks.map((t) => t.date)).toEqual(matrix.dates);
  });

  it("brushing keeps only the selected value range plus the special bar", () => {
    const payload = loadFixture<HistogramPayload>(`histogram/num_05/${date()}.json`);
    const state = replay([
      { type: "open_detail", feature: "num_05", date: date() },
      { type: "set_brush", range: [2, 5] },
    ]);
    const model = buildDetailModel(matrix, payload, state);
    expect(model.bars).toHaveLength(5);
    expect(model.bars.slice(0, 4).map((b) => b.label)).toEqual(
      payload.labels.slice(2, 6),
    );
    expect(model.bars[4].special).toBe(true);
  });
});
