// App shell: loads the matrix once, then re-renders from (matrix, state)
// after every action. `?base=URL` selects a live service; `?bundle=URL`
// selects a static export bundle (default ./).

import { BundleClient, LiveClient, latestWins } from "./api";
import type { ApiClient, LineagePayload, MatrixDoc, SortMode } from "./api";
import { buildDetailModel, buildInvestigationModel, buildOverviewModel } from "./model";
import { HeatmapCanvas, paintDetail, paintSliderTicks } from "./render";
import { initialState, reduce, type Action, type ViewState } from "./state";

function pickClient(): ApiClient {
  const params = new URLSearchParams(location.search);
  const base = params.get("base");
  if (base !== null) return new LiveClient(base);
  return new BundleClient(params.get("bundle") ?? ".");
}

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) throw new Error(`missing element #${id}`);
  return node as T;
}

async function start(): Promise<void> {
  const client = pickClient();
  const matrix: MatrixDoc = await client.matrix();
  let state: ViewState = initialState;

  const heatmap = new HeatmapCanvas(el<HTMLCanvasElement>("heatmap"));
  const detailPanel = el<HTMLElement>("detail-panel");
  const detailCanvas = el<HTMLCanvasElement>("detail-canvas");
  const detailTitle = el<HTMLElement>("detail-title");
  const ticksBox = el<HTMLElement>("slider-ticks");
  const sortSelect = el<HTMLSelectElement>("sort-mode");
  const groupSelect = el<HTMLSelectElement>("grouping");
  const searchBox = el<HTMLInputElement>("search");
  const backButton = el<HTMLButtonElement>("back");
  const commonBox = el<HTMLInputElement>("common-only");
  const yScaleSelect = el<HTMLSelectElement>("y-scale");
  const removedBox = el<HTMLElement>("removed");

  const attributes = new Set<string>();
  for (const f of matrix.schema.features)
    for (const name of Object.keys(f.attributes)) attributes.add(name);
  for (const name of [...attributes].sort()) {
    const opt = document.createElement("option");
    opt.value = opt.textContent = name;
    groupSelect.appendChild(opt);
  }

  const fetchRelated = latestWins((features: string[], common: boolean) =>
    client.related(features, common),
  );
  const fetchHistogram = latestWins((feature: string, date: string) =>
    client.histogram(feature, date),
  );

  async function render(): Promise<void> {
    backButton.hidden = state.mode === "overview";
    commonBox.parentElement!.hidden = state.mode === "overview";
    if (state.mode === "overview") {
      heatmap.paintOverview(buildOverviewModel(matrix, state));
    } else {
      const related: LineagePayload | undefined = await fetchRelated(
        state.investigation,
        state.commonOnly,
      );
      if (related === undefined) return; // superseded by a newer action
      heatmap.paintInvestigation(buildInvestigationModel(matrix, related, state));
    }

    removedBox.replaceChildren();
    for (const feature of state.removed) {
      const chip = document.createElement("button");
      chip.textContent = `${feature} ×`;
      chip.addEventListener("click", () => dispatch({ type: "restore_feature", feature }));
      removedBox.appendChild(chip);
    }

    if (state.detail === null) {
      detailPanel.hidden = true;
    } else {
      const payload = await fetchHistogram(state.detail.feature, state.detail.date);
      if (payload === undefined) return;
      const model = buildDetailModel(matrix, payload, state);
      detailPanel.hidden = false;
      detailTitle.textContent = `${model.feature} @ ${model.date}`;
      paintDetail(detailCanvas, model);
      paintSliderTicks(ticksBox, model, (date) =>
        dispatch({ type: "set_detail_date", date }),
      );
    }
  }

  function dispatch(action: Action): void {
    state = reduce(state, action);
    void render();
  }

  sortSelect.addEventListener("change", () =>
    dispatch({ type: "set_sort", mode: sortSelect.value as SortMode }),
  );
  groupSelect.addEventListener("change", () =>
    dispatch({
      type: "set_grouping",
      attribute: groupSelect.value === "" ? null : groupSelect.value,
    }),
  );
  searchBox.addEventListener("input", () =>
    dispatch({ type: "set_search", query: searchBox.value }),
  );
  backButton.addEventListener("click", () => dispatch({ type: "back_to_overview" }));
  commonBox.addEventListener("change", () =>
    dispatch({ type: "set_common_only", value: commonBox.checked }),
  );
  yScaleSelect.addEventListener("change", () =>
    dispatch({ type: "set_y_scale", scale: yScaleSelect.value as "linear" | "log" }),
  );
  el<HTMLButtonElement>("close-detail").addEventListener("click", () =>
    dispatch({ type: "close_detail" }),
  );

  const canvas = el<HTMLCanvasElement>("heatmap");
  canvas.addEventListener("click", (ev) => {
    const rect = canvas.getBoundingClientRect();
    const hit = heatmap.hitTest(ev.clientX - rect.left, ev.clientY - rect.top);
    if (hit === null) return;
    dispatch({ type: "open_detail", feature: hit.feature, date: matrix.dates[hit.dateIndex] });
  });
  canvas.addEventListener("dblclick", (ev) => {
    const rect = canvas.getBoundingClientRect();
    const hit = heatmap.hitTest(ev.clientX - rect.left, ev.clientY - rect.top);
    if (hit === null) return;
    dispatch(
      state.mode === "overview"
        ? { type: "investigate", feature: hit.feature }
        : { type: "add_investigation", feature: hit.feature },
    );
  });
  canvas.addEventListener("contextmenu", (ev) => {
    ev.preventDefault();
    const rect = canvas.getBoundingClientRect();
    const hit = heatmap.hitTest(ev.clientX - rect.left, ev.clientY - rect.top);
    if (hit === null) return;
    dispatch(
      state.mode === "overview"
        ? { type: "remove_feature", feature: hit.feature }
        : { type: "remove_investigation", feature: hit.feature },
    );
  });

  await render();
}

void start();
