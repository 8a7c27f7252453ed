// DOM rendering. Cards render in array order; the score breakdown sits
// behind a <details> so the reading flow stays clean.

import type { ResultCard } from "./cards.js";
import type { Session } from "./session.js";

export interface RenderCallbacks {
  onRate: (card: ResultCard, rating: number, known: boolean) => void;
  onKnownToggle: (card: ResultCard, known: boolean) => void;
}

export function renderBanner(container: HTMLElement, message: string,
                             onRetry?: () => void): void {
  container.innerHTML = "";
  const banner = document.createElement("div");
  banner.className = "banner";
  banner.textContent = message;
  if (onRetry) {
    const retry = document.createElement("button");
    retry.textContent = "Retry";
    retry.addEventListener("click", onRetry);
    banner.appendChild(retry);
  }
  container.appendChild(banner);
}

function scoreRow(label: string, value: number): HTMLElement {
  const row = document.createElement("div");
  row.className = "score-row";
  row.textContent = `${label}: ${value.toFixed(3)}`;
  return row;
}

export function renderCard(
  card: ResultCard,
  query: string,
  session: Session,
  callbacks: RenderCallbacks,
): HTMLElement {
  const root = document.createElement("article");
  root.className = "card";
  root.dataset.sentenceId = card.sentenceId;

  const header = document.createElement("header");
  const rank = document.createElement("span");
  rank.className = "rank";
  rank.textContent = `#${card.rank}`;
  const organism = document.createElement("span");
  organism.className = "organism";
  organism.textContent = card.organism;
  header.append(rank, organism);
  root.appendChild(header);

  const sentence = document.createElement("p");
  sentence.className = "sentence";
  for (const segment of card.segments) {
    if (segment.highlighted) {
      const mark = document.createElement("mark");
      mark.textContent = segment.text;
      sentence.appendChild(mark);
    } else {
      sentence.appendChild(document.createTextNode(segment.text));
    }
  }
  root.appendChild(sentence);

  const details = document.createElement("details");
  const summary = document.createElement("summary");
  summary.textContent = `matched: ${card.phraseText} (${card.scores.combined.toFixed(3)})`;
  details.appendChild(summary);
  details.appendChild(scoreRow("cosine", card.scores.cosine));
  details.appendChild(scoreRow("entail", card.scores.entail));
  details.appendChild(scoreRow("neutral", card.scores.neutral));
  details.appendChild(scoreRow("contradict", card.scores.contradict));
  details.appendChild(scoreRow("combined", card.scores.combined));
  root.appendChild(details);

  const controls = document.createElement("div");
  controls.className = "controls";
  const state = session.getRating(query, card.sentenceId);
  const labels = ["not interesting", "somewhat interesting", "very interesting"];
  for (let rating = 0; rating <= 2; rating += 1) {
    const button = document.createElement("button");
    button.className = "rate";
    button.dataset.rating = String(rating);
    button.textContent = `${rating} · ${labels[rating]}`;
    if (state.rating === rating) button.classList.add("active");
    button.addEventListener("click", () =>
      callbacks.onRate(card, rating, session.getRating(query, card.sentenceId).known),
    );
    controls.appendChild(button);
  }
  const knownLabel = document.createElement("label");
  knownLabel.className = "known";
  const known = document.createElement("input");
  known.type = "checkbox";
  known.checked = state.known;
  known.addEventListener("change", () => callbacks.onKnownToggle(card, known.checked));
  knownLabel.append(known, document.createTextNode(" already known"));
  controls.appendChild(knownLabel);
  root.appendChild(controls);

  return root;
}

export function renderResults(
  container: HTMLElement,
  cards: ResultCard[],
  query: string,
  session: Session,
  callbacks: RenderCallbacks,
): void {
  container.innerHTML = "";
  if (cards.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty";
    empty.textContent = "No results.";
    container.appendChild(empty);
    return;
  }
  for (const card of cards) {
    container.appendChild(renderCard(card, query, session, callbacks));
  }
}

export function renderPendingBadge(container: HTMLElement, count: number): void {
  container.textContent = count > 0 ? `${count} rating(s) pending sync` : "";
  container.className = count > 0 ? "pending visible" : "pending";
}
