import { describe, expect, it } from "vitest";
import { initialState, reduce, replay, type Action } from "../src/state";

describe("reduce", () => {
  it("starts in overview with nothing removed", () => {
    expect(initialState.mode).toBe("overview");
    expect(initialState.removed).toEqual([]);
    expect(initialState.investigation).toEqual([]);
  });

  it("removal is idempotent and reversible", () => {
    let s = reduce(initialState, { type: "remove_feature", feature: "a" });
    s = reduce(s, { type: "remove_feature", feature: "a" });
    expect(s.removed).toEqual(["a"]);
    s = reduce(s, { type: "restore_feature", feature: "a" });
    expect(s.removed).toEqual([]);
  });

  it("investigate enters investigation mode with a single feature", () => {
    const s = reduce(initialState, { type: "investigate", feature: "a" });
    expect(s.mode).toBe("investigation");
    expect(s.investigation).toEqual(["a"]);
  });

  it("add_investigation is a no-op outside investigation mode", () => {
    const s = reduce(initialState, { type: "add_investigation", feature: "a" });
    expect(s).toBe(initialState);
  });

  it("removing the last investigated feature returns to overview", () => {
    let s = reduce(initialState, { type: "investigate", feature: "a" });
    s = reduce(s, { type: "add_investigation", feature: "b" });
    s = reduce(s, { type: "remove_investigation", feature: "a" });
    expect(s.mode).toBe("investigation");
    expect(s.investigation).toEqual(["b"]);
    s = reduce(s, { type: "remove_investigation", feature: "b" });
    expect(s.mode).toBe("overview");
    expect(s.investigation).toEqual([]);
  });

  it("investigation mode always has a non-empty set", () => {
    const actions: Action[] = [
      { type: "investigate", feature: "a" },
      { type: "add_investigation", feature: "b" },
      { type: "remove_investigation", feature: "b" },
      { type: "remove_investigation", feature: "a" },
      { type: "investigate", feature: "c" },
      { type: "remove_investigation", feature: "c" },
    ];
    let s = initialState;
    for (const a of actions) {
      s = reduce(s, a);
      if (s.mode === "investigation") expect(s.investigation.length).toBeGreaterThan(0);
    }
  });

  it("opening a detail view clears any brush", () => {
    let s = reduce(initialState, { type: "set_brush", range: [2, 5] });
    s = reduce(s, { type: "open_detail", feature: "a", date: "2024-03-01" });
    expect(s.brush).toBeNull();
    expect(s.detail).toEqual({ feature: "a", date: "2024-03-01" });
    s = reduce(s, { type: "set_detail_date", date: "2024-03-02" });
    expect(s.detail).toEqual({ feature: "a", date: "2024-03-02" });
    s = reduce(s, { type: "close_detail" });
    expect(s.detail).toBeNull();
  });

  it("replaying the same action log reproduces the same state", () => {
    const actions: Action[] = [
      { type: "set_sort", mode: "most_alarms" },
      { type: "set_search", query: "num" },
      { type: "remove_feature", feature: "num_09" },
      { type: "investigate", feature: "num_05" },
      { type: "open_detail", feature: "num_05", date: "2024-04-15" },
      { type: "set_y_scale", scale: "log" },
    ];
    expect(replay(actions)).toEqual(replay(actions));
    expect(replay(actions).sortMode).toBe("most_alarms");
    expect(replay(actions).detail?.date).toBe("2024-04-15");
  });
});
