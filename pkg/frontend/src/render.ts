// DOM/canvas painters for the view models. Everything here is presentation
// only; the models carry all the decisions.

import type {
  DetailModel,
  HeatmapRow,
  InvestigationModel,
  OverviewModel,
} from "./model";
import { barHeight } from "./model";

const CELL_W = 14;
const CELL_H = 16;
const LABEL_W = 120;
const GROUP_HEADER_H = 20;

export interface CellHit {
  feature: string;
  dateIndex: number;
}

interface RowLayout {
  feature: string;
  y: number;
}

function paintRows(
  ctx: CanvasRenderingContext2D,
  rows: HeatmapRow[],
  y0: number,
  layout: RowLayout[],
): number {
  let y = y0;
  for (const row of rows) {
    ctx.fillStyle = "#333";
    ctx.textBaseline = "middle";
    ctx.font = "11px sans-serif";
    ctx.fillText(row.feature, 4, y + CELL_H / 2, LABEL_W - 8);
    row.cells.forEach((cell, t) => {
      ctx.fillStyle = cell.css;
      ctx.fillRect(LABEL_W + t * CELL_W, y, CELL_W - 1, CELL_H - 1);
    });
    layout.push({ feature: row.feature, y });
    y += CELL_H;
  }
  return y;
}

export class HeatmapCanvas {
  private layout: RowLayout[] = [];

  constructor(private canvas: HTMLCanvasElement) {}

  paintOverview(model: OverviewModel): void {
    const headerRows = model.groups.filter((g) => g.label !== null).length;
    this.resize(model.columnCount, model.rowCount * CELL_H + headerRows * GROUP_HEADER_H);
    const ctx = this.canvas.getContext("2d")!;
    this.layout = [];
    let y = 0;
    for (const group of model.groups) {
      if (group.label !== null) {
        ctx.fillStyle = "#666";
        ctx.font = "bold 11px sans-serif";
        ctx.textBaseline = "middle";
        ctx.fillText(group.label, 4, y + GROUP_HEADER_H / 2);
        y += GROUP_HEADER_H;
      }
      y = paintRows(ctx, group.rows, y, this.layout);
    }
  }

  paintInvestigation(model: InvestigationModel): void {
    const sections: [string, HeatmapRow[]][] = [
      ["investigating", model.investigated],
      ["ancestors", model.ancestors],
      ["descendants", model.descendants],
    ];
    const rowCount = sections.reduce((n, [, rows]) => n + rows.length, 0);
    this.resize(model.dates.length, rowCount * CELL_H + sections.length * GROUP_HEADER_H);
    const ctx = this.canvas.getContext("2d")!;
    this.layout = [];
    let y = 0;
    for (const [label, rows] of sections) {
      ctx.fillStyle = "#666";
      ctx.font = "bold 11px sans-serif";
      ctx.textBaseline = "middle";
      ctx.fillText(label, 4, y + GROUP_HEADER_H / 2);
      y += GROUP_HEADER_H;
      y = paintRows(ctx, rows, y, this.layout);
    }
  }

  hitTest(x: number, y: number): CellHit | null {
    if (x < LABEL_W) return null;
    const dateIndex = Math.floor((x - LABEL_W) / CELL_W);
    for (const row of this.layout) {
      if (y >= row.y && y < row.y + CELL_H) return { feature: row.feature, dateIndex };
    }
    return null;
  }

  private resize(columns: number, height: number): void {
    this.canvas.width = LABEL_W + columns * CELL_W;
    this.canvas.height = Math.max(height, CELL_H);
  }
}

export function paintDetail(canvas: HTMLCanvasElement, model: DetailModel): void {
  const W = 640;
  const H = 240;
  const PAD = 24;
  canvas.width = W;
  canvas.height = H;
  const ctx = canvas.getContext("2d")!;
  ctx.clearRect(0, 0, W, H);

  if (model.noData) {
    ctx.fillStyle = "#666";
    ctx.font = "13px sans-serif";
    ctx.fillText("(no data)", W / 2 - 30, H / 2);
    return;
  }

  const n = model.bars.length;
  const slot = (W - 2 * PAD) / n;
  const plotH = H - 2 * PAD;
  model.bars.forEach((bar, k) => {
    const x = PAD + k * slot;
    const th = barHeight(bar.target, model.yScale) * plotH;
    ctx.fillStyle = bar.special ? "#888" : "#4a90d9";
    ctx.fillRect(x + 2, H - PAD - th, slot - 4, th);
    // reference frequency drawn as a horizontal marker over each bar
    const rh = barHeight(bar.reference, model.yScale) * plotH;
    ctx.strokeStyle = "#c33";
    ctx.lineWidth = 2;
    ctx.beginPath();
    ctx.moveTo(x + 1, H - PAD - rh);
    ctx.lineTo(x + slot - 1, H - PAD - rh);
    ctx.stroke();
    if (n <= 16 || k % Math.ceil(n / 16) === 0) {
      ctx.fillStyle = "#444";
      ctx.font = "9px sans-serif";
      ctx.save();
      ctx.translate(x + slot / 2, H - PAD + 4);
      ctx.rotate(Math.PI / 4);
      ctx.fillText(bar.label, 0, 6, 80);
      ctx.restore();
    }
  });
}

export function paintSliderTicks(container: HTMLElement, model: DetailModel,
  onPick: (date: string) => void): void {
  container.replaceChildren();
  for (const tick of model.ticks) {
    const el = document.createElement("span");
    el.className = "tick" + (tick.date === model.date ? " current" : "");
    el.style.background = tick.css;
    el.title = tick.date;
    el.addEventListener("click", () => onPick(tick.date));
    container.appendChild(el);
  }
}
