// Typed client for the search service. The UI talks to these endpoints
// only; no direct index access.

export interface MatchedPhrase {
  phrase_id: string;
  sentence_id: string;
  text: string;
  method: string;
  verb_lemma: string;
  span: [number, number];
}

export interface ScoreBreakdown {
  cosine: number;
  entail: number;
  neutral: number;
  contradict: number;
}

export interface RankedResult {
  rank: number;
  sentence_id: string;
  organism: string;
  sentence_text: string;
  matched_phrase: MatchedPhrase;
  features: ScoreBreakdown;
  combined_score: number;
}

export interface QueryResponse {
  results: RankedResult[];
  status: string;
  timing_ms: number;
}

export interface SentenceDetail {
  sentence_id: string;
  text: string;
  organism: string;
  article: { article_id: string; title: string; source_url: string };
  bio_score: number;
}

export interface FeedbackPayload {
  query: string;
  sentence_id: string;
  rating: number; // 0..2
  known: boolean;
  note: string;
}

export class ServiceError extends Error {
  constructor(message: string, readonly status?: number) {
    super(message);
  }
}

async function parseOrThrow<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let message = `service error (${response.status})`;
    try {
      const body = await response.json();
      if (body?.error?.message) message = body.error.message;
    } catch {
      // non-JSON error body; keep the status message
    }
    throw new ServiceError(message, response.status);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  async query(text: string, k: number, filtered: boolean): Promise<QueryResponse> {
    const response = await fetch(`${this.baseUrl}/query`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ query: text, k, filtered }),
    });
    return parseOrThrow<QueryResponse>(response);
  }

  async feedback(payload: FeedbackPayload): Promise<void> {
    const response = await fetch(`${this.baseUrl}/feedback`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
    await parseOrThrow<unknown>(response);
  }

  async sentence(sentenceId: string): Promise<SentenceDetail> {
    // ids contain "#", which URLs treat as a fragment delimiter
    const encoded = encodeURIComponent(sentenceId);
    const response = await fetch(`${this.baseUrl}/sentence/${encoded}`);
    return parseOrThrow<SentenceDetail>(response);
  }
}
