// Browser bootstrap: wire the controller to the page controls.

import { GameClient } from "./api.js";
import { renderBoard } from "./render.js";
import { GameController, type OverlayKind } from "./viewmodel.js";

const client = new GameClient((input, init) => fetch(input, init));
const controller = new GameController(client);

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) throw new Error(`missing #${id}`);
  return node as T;
}

function redraw(): void {
  renderBoard(el("board"), controller.view, (x, y) => {
    void controller.playCell(x, y).then(redraw);
  });
}

async function newGame(): Promise<void> {
  const p = Number(el<HTMLInputElement>("param-p").value);
  const m = Number(el<HTMLInputElement>("param-m").value);
  const a = Number(el<HTMLInputElement>("start-a").value);
  const b = Number(el<HTMLInputElement>("start-b").value);
  const engineSide = el<HTMLSelectElement>("engine-side").value as
    | "none"
    | "first"
    | "second";
  await controller.start({ p, m, a, b, engineSide });
  redraw();
}

el("new-game").addEventListener("click", () => void newGame());
el<HTMLSelectElement>("overlay").addEventListener("change", (event) => {
  const kind = (event.target as HTMLSelectElement).value as OverlayKind;
  controller.toggleOverlay(kind);
  redraw();
});

const moveForm = el<HTMLFormElement>("move-form");
moveForm.addEventListener("submit", (event) => {
  event.preventDefault();
  const pile = Number(el<HTMLInputElement>("move-pile").value);
  const amount = Number(el<HTMLInputElement>("move-amount").value);
  void controller.playTurn({ pile, amount }).then(redraw);
});
