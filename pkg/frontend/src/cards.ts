// Result cards: the view model between the service response and the DOM.
// Order is the response order, always.

import type { QueryResponse, RankedResult, ScoreBreakdown } from "./api.js";

export interface HighlightSegment {
  text: string;
  highlighted: boolean;
}

export interface ResultCard {
  rank: number;
  sentenceId: string;
  organism: string;
  segments: HighlightSegment[]; // sentence text split around the matched phrase
  phraseText: string;
  scores: ScoreBreakdown & { combined: number };
  rating: number | null; // 0..2, null = unset
  known: boolean;
}

/** Split the sentence around the matched-phrase span, clamped to bounds. */
export function highlightSegments(
  sentence: string,
  span: [number, number],
): HighlightSegment[] {
  let [start, end] = span;
  start = Math.max(0, Math.min(start, sentence.length));
  end = Math.max(start, Math.min(end, sentence.length));
  const segments: HighlightSegment[] = [];
  if (start > 0) segments.push({ text: sentence.slice(0, start), highlighted: false });
  if (end > start) segments.push({ text: sentence.slice(start, end), highlighted: true });
  if (end < sentence.length) {
    segments.push({ text: sentence.slice(end), highlighted: false });
  }
  if (segments.length === 0) segments.push({ text: sentence, highlighted: false });
  return segments;
}

export function toCard(result: RankedResult): ResultCard {
  return {
    rank: result.rank,
    sentenceId: result.sentence_id,
    organism: result.organism,
    segments: highlightSegments(result.sentence_text, result.matched_phrase.span),
    phraseText: result.matched_phrase.text,
    scores: { ...result.features, combined: result.combined_score },
    rating: null,
    known: false,
  };
}

/** Cards in exactly the order the service returned results. */
export function toCards(response: QueryResponse): ResultCard[] {
  return response.results.map(toCard);
}
