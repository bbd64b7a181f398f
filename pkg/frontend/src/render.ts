// DOM rendering of a BoardViewModel: the lattice board with overlays, a
// pile-column auxiliary view for the reply-window arithmetic, credit
// meters and the move log. Pure presentation; all game data arrives in
// the view model.

import type { BoardViewModel } from "./viewmodel.js";

const OVERLAY_LABELS: Record<string, string> = {
  P: "fixed win for the previous player",
  D: "depends on history",
  a: "fixed loss (diagonal pair below)",
  b: "fixed loss (column pair below)",
  n: "fixed loss",
};

export function renderBoard(
  root: HTMLElement,
  view: BoardViewModel,
  onCell: (x: number, y: number) => void,
): void {
  root.replaceChildren();

  const status = document.createElement("div");
  status.className = "status";
  const pos = view.session.position;
  status.textContent =
    view.session.status === "finished"
      ? `game over: ${view.session.winner} wins`
      : `(${pos.pile0}, ${pos.pile1}) — ${view.session.toMove} to move, ` +
        `verdict ${view.analysis.verdict.outcome}` +
        (view.analysis.verdict.clause ? ` (clause ${view.analysis.verdict.clause})` : "");
  root.appendChild(status);

  if (view.banner !== null) {
    const banner = document.createElement("div");
    banner.className = "banner";
    banner.textContent = view.banner;
    if (view.violatedWindow !== null) {
      const w = view.violatedWindow;
      banner.textContent += ` — window [${w.lo}, ${w.hi}] on pile${w.target}`;
    }
    root.appendChild(banner);
  }

  const board = document.createElement("table");
  board.className = "board";
  // draw with y decreasing so the origin sits bottom-left as on a lattice
  for (let y = view.cells.length - 1; y >= 0; y--) {
    const row = document.createElement("tr");
    for (const cell of view.cells[y] ?? []) {
      const td = document.createElement("td");
      td.dataset.x = String(cell.x);
      td.dataset.y = String(cell.y);
      const classes = ["cell"];
      if (cell.isCurrent) classes.push("current");
      if (view.overlay === "wythoffP" && cell.wythoffP) classes.push("mark-p");
      if (view.overlay === "staticClass" && cell.staticCode) {
        classes.push(`static-${cell.staticCode}`);
        td.title = OVERLAY_LABELS[cell.staticCode] ?? "";
      }
      td.className = classes.join(" ");
      td.addEventListener("click", () => onCell(cell.x, cell.y));
      row.appendChild(td);
    }
    board.appendChild(row);
  }
  root.appendChild(board);

  root.appendChild(renderPiles(view));
  root.appendChild(renderCredits(view));
  root.appendChild(renderHistory(view));
}

function renderPiles(view: BoardViewModel): HTMLElement {
  const wrap = document.createElement("div");
  wrap.className = "piles";
  const pos = view.session.position;
  for (const [label, height] of [["pile0", pos.pile0], ["pile1", pos.pile1]] as const) {
    const col = document.createElement("div");
    col.className = "pile";
    const window_ = view.pendingWindow;
    const windowText =
      window_ !== null && `pile${window_.target}` === label
        ? ` (reply window [${window_.lo}, ${window_.hi}])`
        : "";
    col.textContent = `${label}: ${height}${windowText}`;
    wrap.appendChild(col);
  }
  const forbidden = view.forbidden
    .map((move) => `pile${move.pile} -${move.amount}`)
    .join(", ");
  if (forbidden) {
    const note = document.createElement("div");
    note.className = "forbidden";
    note.textContent = `forbidden now: ${forbidden}`;
    wrap.appendChild(note);
  }
  return wrap;
}

function renderCredits(view: BoardViewModel): HTMLElement {
  const wrap = document.createElement("div");
  wrap.className = "credits";
  const p = view.session.p;
  for (const [who, value] of [
    ["to move", view.credits.mover],
    ["previous", view.credits.other],
  ] as const) {
    const meter = document.createElement("div");
    meter.className = "meter";
    meter.textContent = `${who}: ${"●".repeat(value)}${"○".repeat(Math.max(0, p - 1 - value))}`;
    wrap.appendChild(meter);
  }
  return wrap;
}

function renderHistory(view: BoardViewModel): HTMLElement {
  const list = document.createElement("ol");
  list.className = "history";
  for (const record of view.history) {
    const item = document.createElement("li");
    item.textContent =
      `${record.player}: pile${record.pile} -${record.amount}` +
      (record.imitation ? " (imitation)" : "");
    list.appendChild(item);
  }
  return list;
}
