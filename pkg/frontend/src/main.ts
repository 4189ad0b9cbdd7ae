/**
 * DOM wiring for the single-page board: upload panel, stats, question cards
 * with accept/reject, running counters, and the bank download link. The
 * material id rides in the URL hash, so a reload rebuilds the whole board
 * from the GET endpoints.
 */

import { ApiError, QuizforgeApi, type CorpusStats, type Mcq } from "./api.js";
import { ReviewBoard } from "./board.js";
import { validateUpload } from "./validate.js";

const DEFAULT_API = "http://127.0.0.1:8000";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

let api = new QuizforgeApi(DEFAULT_API);
let board: ReviewBoard | null = null;

function setStatus(message: string, isError = false): void {
  const node = byId<HTMLParagraphElement>("status");
  node.textContent = message;
  node.classList.toggle("error", isError);
}

function renderStats(stats: CorpusStats): void {
  byId<HTMLDivElement>("stats").textContent =
    `${stats.n_sentences} sentences, ${stats.n_words} words ` +
    `(min ${stats.min_len}, max ${stats.max_len}, mean ${stats.mean_len.toFixed(1)} words per sentence)`;
}

function renderCounts(): void {
  if (!board) return;
  const { accepted, rejected, remaining } = board.counts();
  byId<HTMLDivElement>("counter").textContent =
    `accepted ${accepted} / rejected ${rejected} / remaining ${remaining}`;
}

function renderCard(mcq: Mcq, busy: boolean, notice: string | null): HTMLElement {
  const card = el("article", `card ${mcq.status}`);
  card.dataset.id = mcq.id;

  const badge = el("span", "badge", mcq.status);
  card.appendChild(badge);
  card.appendChild(el("p", "stem", mcq.stem));

  const list = el("ol", "options");
  const labels = ["A", "B", "C", "D"];
  mcq.options.forEach((option, i) => {
    const item = el("li", option === mcq.answer ? "option answer" : "option");
    item.textContent = `${labels[i]}. ${option}`;
    list.appendChild(item);
  });
  card.appendChild(list);
  card.appendChild(el("p", "answer-line", `answer: ${mcq.answer}`));

  if (notice) card.appendChild(el("p", "notice", notice));

  const controls = el("div", "controls");
  const accept = el("button", "accept", "Accept");
  const reject = el("button", "reject", "Reject");
  const disabled = busy || mcq.status !== "suggested";
  accept.disabled = disabled;
  reject.disabled = disabled;
  accept.onclick = () => void board?.decide(mcq.id, "accept");
  reject.onclick = () => void board?.decide(mcq.id, "reject");
  controls.appendChild(accept);
  controls.appendChild(reject);
  card.appendChild(controls);
  return card;
}

function renderBoard(): void {
  if (!board) return;
  const host = byId<HTMLDivElement>("cards");
  host.replaceChildren(...board.cards.map((c) => renderCard(c.mcq, c.busy, c.notice)));
  renderCounts();
  byId<HTMLAnchorElement>("export-link").href = api.exportUrl();
  byId<HTMLElement>("board-section").hidden = false;
}

async function openMaterial(materialId: string): Promise<void> {
  window.location.hash = `m=${materialId}`;
  byId<HTMLDivElement>("material-id").textContent = `material ${materialId}`;
  renderStats(await api.stats(materialId));
  board = new ReviewBoard(api, materialId);
  board.onChange(renderBoard);
  await board.load();
  byId<HTMLElement>("generate-section").hidden = false;
}

async function handleUpload(): Promise<void> {
  const input = byId<HTMLInputElement>("file-input");
  const file = input.files?.[0];
  if (!file) {
    setStatus("Choose a file first.", true);
    return;
  }
  const text = await file.text();
  const check = validateUpload(file.name, file.size, text);
  if (!check.valid) {
    setStatus(check.error ?? "Invalid file.", true);
    return;
  }
  try {
    const { id } = await api.uploadMaterial(file.name, text);
    setStatus(`Uploaded ${file.name}.`);
    await openMaterial(id);
  } catch (err) {
    setStatus(err instanceof Error ? err.message : String(err), true);
  }
}

async function handleGenerate(): Promise<void> {
  if (!board) return;
  try {
    await api.generate(board.materialId, {});
    await board.load();
    setStatus("Questions generated.");
  } catch (err) {
    setStatus(err instanceof Error ? err.message : String(err), true);
  }
}

async function handleBank(): Promise<void> {
  if (!board) return;
  const subject = byId<HTMLInputElement>("meta-subject").value.trim();
  if (!subject) {
    setStatus("Enter a subject before banking.", true);
    return;
  }
  try {
    const result = await api.bank(board.materialId, {
      subject,
      session: byId<HTMLInputElement>("meta-session").value.trim() || null,
      class_level: byId<HTMLInputElement>("meta-class").value.trim() || null,
      term: byId<HTMLInputElement>("meta-term").value.trim() || null,
    });
    setStatus(`${result.banked} question(s) in the bank.`);
  } catch (err) {
    if (err instanceof ApiError && err.status === 400) {
      setStatus(err.message, true);
    } else {
      throw err;
    }
  }
}

function install(): void {
  const baseInput = byId<HTMLInputElement>("api-base");
  baseInput.value = DEFAULT_API;
  baseInput.onchange = () => {
    api = new QuizforgeApi(baseInput.value.replace(/\/$/, ""));
  };

  byId<HTMLButtonElement>("upload-button").onclick = () => void handleUpload();
  byId<HTMLButtonElement>("generate-button").onclick = () => void handleGenerate();
  byId<HTMLButtonElement>("bank-button").onclick = () => void handleBank();

  const hash = new URLSearchParams(window.location.hash.slice(1));
  const materialId = hash.get("m");
  if (materialId) {
    void openMaterial(materialId).catch((err: unknown) => {
      setStatus(err instanceof Error ? err.message : String(err), true);
    });
  }
}

install();
