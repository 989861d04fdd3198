// View state and its transitions. Every transition is a pure function of
// (previous state, action), so replaying an action log always reproduces the
// same final state.

import type { SortMode } from "./api";

export type Mode = "overview" | "investigation";

export interface DetailTarget {
  feature: string;
  date: string;
}

export interface ViewState {
  mode: Mode;
  removed: string[];
  searchQuery: string;
  sortMode: SortMode;
  grouping: string | null;
  investigation: string[];
  commonOnly: boolean;
  detail: DetailTarget | null;
  yScale: "linear" | "log";
  xScale: "discrete" | "linear";
  brush: [number, number] | null;
}

export const initialState: ViewState = {
  mode: "overview",
  removed: [],
  searchQuery: "",
  sortMode: "original",
  grouping: null,
  investigation: [],
  commonOnly: false,
  detail: null,
  yScale: "linear",
  xScale: "discrete",
  brush: null,
};

export type Action =
  | { type: "set_sort"; mode: SortMode }
  | { type: "set_grouping"; attribute: string | null }
  | { type: "set_search"; query: string }
  | { type: "remove_feature"; feature: string }
  | { type: "restore_feature"; feature: string }
  | { type: "investigate"; feature: string }
  | { type: "add_investigation"; feature: string }
  | { type: "remove_investigation"; feature: string }
  | { type: "set_common_only"; value: boolean }
  | { type: "open_detail"; feature: string; date: string }
  | { type: "set_detail_date"; date: string }
  | { type: "close_detail" }
  | { type: "set_y_scale"; scale: "linear" | "log" }
  | { type: "set_x_scale"; scale: "discrete" | "linear" }
  | { type: "set_brush"; range: [number, number] | null }
  | { type: "back_to_overview" };

export function reduce(state: ViewState, action: Action): ViewState {
  switch (action.type) {
    case "set_sort":
      return { ...state, sortMode: action.mode };
    case "set_grouping":
      return { ...state, grouping: action.attribute };
    case "set_search":
      return { ...state, searchQuery: action.query };
    case "remove_feature":
      if (state.removed.includes(action.feature)) return state;
      return { ...state, removed: [...state.removed, action.feature] };
    case "restore_feature":
      return { ...state, removed: state.removed.filter((f) => f !== action.feature) };
    case "investigate":
      return { ...state, mode: "investigation", investigation: [action.feature] };
    case "add_investigation":
      if (state.mode !== "investigation" || state.investigation.includes(action.feature))
        return state;
      return { ...state, investigation: [...state.investigation, action.feature] };
    case "remove_investigation": {
      const remaining = state.investigation.filter((f) => f !== action.feature);
      // investigation mode requires a non-empty set
      if (remaining.length === 0)
        return { ...state, mode: "overview", investigation: [] };
      return { ...state, investigation: remaining };
    }
    case "set_common_only":
      return { ...state, commonOnly: action.value };
    case "open_detail":
      return {
        ...state,
        detail: { feature: action.feature, date: action.date },
        brush: null,
      };
    case "set_detail_date":
      if (state.detail === null) return state;
      return { ...state, detail: { ...state.detail, date: action.date } };
    case "close_detail":
      return { ...state, detail: null, brush: null };
    case "set_y_scale":
      return { ...state, yScale: action.scale };
    case "set_x_scale":
      return { ...state, xScale: action.scale };
    case "set_brush":
      return { ...state, brush: action.range };
    case "back_to_overview":
      return { ...state, mode: "overview", investigation: [] };
  }
}

export function replay(actions: Action[], from: ViewState = initialState): ViewState {
  return actions.reduce(reduce, from);
}
