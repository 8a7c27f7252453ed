// Session state: which results were read, how they were rated, what is
// still waiting to reach the feedback endpoint. The export reproduces the
// per-query counts used in the expert-session summaries: results read,
// already-known, interesting (rating >= 1) and very interesting (= 2).

import type { ApiClient, FeedbackPayload } from "./api.js";

export interface RatingState {
  rating: number | null;
  known: boolean;
  note: string;
}

export interface QuerySummary {
  query: string;
  results_read: number;
  known: number;
  interesting: number;
  very_interesting: number;
}

export interface SessionExport {
  queries: QuerySummary[];
  totals: Omit<QuerySummary, "query">;
}

export function validRating(value: number): boolean {
  return Number.isInteger(value) && value >= 0 && value <= 2;
}

export class Session {
  private readsByQuery = new Map<string, Set<string>>();
  private ratings = new Map<string, RatingState>(); // key: query \x1f sentence
  private queryOrder: string[] = [];
  readonly pending: FeedbackPayload[] = [];

  constructor(private readonly api: ApiClient) {}

  private key(query: string, sentenceId: string): string {
    return `${query}\x1f${sentenceId}`;
  }

  /** Record that a query's results were shown to the reader. */
  recordResults(query: string, sentenceIds: string[]): void {
    if (!this.readsByQuery.has(query)) {
      this.readsByQuery.set(query, new Set());
      this.queryOrder.push(query);
    }
    const seen = this.readsByQuery.get(query)!;
    for (const sentenceId of sentenceIds) seen.add(sentenceId);
  }

  getRating(query: string, sentenceId: string): RatingState {
    return (
      this.ratings.get(this.key(query, sentenceId)) ?? {
        rating: null,
        known: false,
        note: "",
      }
    );
  }

  /**
   * Rate a result: optimistic local update, then POST. Returns "sent" on
   * success; on failure the local state reverts and the payload queues as
   * "pending" for a later flush. Out-of-range ratings are "blocked".
   */
  async rate(
    query: string,
    sentenceId: string,
    rating: number,
    known: boolean,
    note = "",
  ): Promise<"sent" | "pending" | "blocked"> {
    if (!validRating(rating)) return "blocked";
    const key = this.key(query, sentenceId);
    const previous = this.ratings.get(key);
    this.ratings.set(key, { rating, known, note });
    const payload: FeedbackPayload = { query, sentence_id: sentenceId, rating, known, note };
    try {
      await this.api.feedback(payload);
      return "sent";
    } catch {
      if (previous === undefined) this.ratings.delete(key);
      else this.ratings.set(key, previous);
      this.pending.push(payload);
      return "pending";
    }
  }

  /** Retry queued feedback; stops at the first failure, keeps the rest. */
  async flushPending(): Promise<number> {
    let sent = 0;
    while (this.pending.length > 0) {
      const payload = this.pending[0];
      try {
        await this.api.feedback(payload);
      } catch {
        break;
      }
      this.pending.shift();
      this.ratings.set(this.key(payload.query, payload.sentence_id), {
        rating: payload.rating,
        known: payload.known,
        note: payload.note,
      });
      sent += 1;
    }
    return sent;
  }

  exportSession(): SessionExport {
    const queries: QuerySummary[] = [];
    for (const query of this.queryOrder) {
      const read = this.readsByQuery.get(query) ?? new Set();
      let known = 0;
      let interesting = 0;
      let very = 0;
      for (const sentenceId of read) {
        const state = this.ratings.get(this.key(query, sentenceId));
        if (!state) continue;
        if (state.known) known += 1;
        if (state.rating !== null && state.rating >= 1) interesting += 1;
        if (state.rating === 2) very += 1;
      }
      queries.push({
        query,
        results_read: read.size,
        known,
        interesting,
        very_interesting: very,
      });
    }
    const totals = queries.reduce(
      (acc, q) => ({
        results_read: acc.results_read + q.results_read,
        known: acc.known + q.known,
        interesting: acc.interesting + q.interesting,
        very_interesting: acc.very_interesting + q.very_interesting,
      }),
      { results_read: 0, known: 0, interesting: 0, very_interesting: 0 },
    );
    return { queries, totals };
  }
}
