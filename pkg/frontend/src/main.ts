// App wiring: form -> /query -> cards; ratings -> /feedback; export button
// downloads the session summary as JSON.

import { ApiClient, ServiceError } from "./api.js";
import { toCards, type ResultCard } from "./cards.js";
import { renderBanner, renderPendingBadge, renderResults } from "./render.js";
import { Session } from "./session.js";

const api = new ApiClient("");
const session = new Session(api);

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

let currentQuery = "";

async function runQuery(): Promise<void> {
  const input = el<HTMLInputElement>("query-input");
  const results = el<HTMLElement>("results");
  const status = el<HTMLElement>("status");
  const text = input.value.trim();
  if (!text) {
    renderBanner(status, "Enter a challenge as verb + object, e.g. “collect water from humid air”.");
    return;
  }
  const k = Number(el<HTMLInputElement>("k-slider").value);
  const filtered = el<HTMLInputElement>("filtered-toggle").checked;
  status.innerHTML = "";
  results.innerHTML = "<p class=\"loading\">Searching…</p>";
  try {
    const response = await api.query(text, k, filtered);
    currentQuery = text;
    const cards = toCards(response);
    session.recordResults(text, cards.map((c) => c.sentenceId));
    renderResults(results, cards, text, session, { onRate, onKnownToggle });
    if (response.status !== "ok") {
      renderBanner(status, response.status);
    }
  } catch (error) {
    const message = error instanceof ServiceError ? error.message : "service unreachable";
    results.innerHTML = "";
    renderBanner(status, `Search failed: ${message}`, runQuery);
  }
}

async function onRate(card: ResultCard, rating: number, known: boolean): Promise<void> {
  const status = el<HTMLElement>("status");
  const outcome = await session.rate(currentQuery, card.sentenceId, rating, known);
  if (outcome === "blocked") {
    renderBanner(status, "Ratings are 0–2.");
    return;
  }
  if (outcome === "pending") {
    renderBanner(status, "Rating saved locally; will sync when the service is back.",
                 flushPending);
  }
  refreshCardState(card);
  renderPendingBadge(el<HTMLElement>("pending"), session.pending.length);
}

async function onKnownToggle(card: ResultCard, known: boolean): Promise<void> {
  const state = session.getRating(currentQuery, card.sentenceId);
  await session.rate(currentQuery, card.sentenceId, state.rating ?? 0, known);
  refreshCardState(card);
  renderPendingBadge(el<HTMLElement>("pending"), session.pending.length);
}

function refreshCardState(card: ResultCard): void {
  const results = el<HTMLElement>("results");
  const node = results.querySelector<HTMLElement>(
    `[data-sentence-id="${CSS.escape(card.sentenceId)}"]`,
  );
  if (!node) return;
  const state = session.getRating(currentQuery, card.sentenceId);
  node.querySelectorAll<HTMLButtonElement>("button.rate").forEach((button) => {
    button.classList.toggle("active", Number(button.dataset.rating) === state.rating);
  });
  const checkbox = node.querySelector<HTMLInputElement>(".known input");
  if (checkbox) checkbox.checked = state.known;
}

async function flushPending(): Promise<void> {
  await session.flushPending();
  renderPendingBadge(el<HTMLElement>("pending"), session.pending.length);
}

function exportSession(): void {
  const payload = JSON.stringify(session.exportSession(), null, 2);
  const blob = new Blob([payload], { type: "application/json" });
  const anchor = document.createElement("a");
  anchor.href = URL.createObjectURL(blob);
  anchor.download = "session.json";
  anchor.click();
  URL.revokeObjectURL(anchor.href);
}

export function boot(): void {
  el<HTMLFormElement>("query-form").addEventListener("submit", (event) => {
    event.preventDefault();
    void runQuery();
  });
  el<HTMLInputElement>("k-slider").addEventListener("input", () => {
    el<HTMLElement>("k-value").textContent = el<HTMLInputElement>("k-slider").value;
  });
  el<HTMLButtonElement>("export-button").addEventListener("click", exportSession);
  window.addEventListener("online", () => void flushPending());
}

if (typeof document !== "undefined" && document.getElementById("query-form")) {
  boot();
}
