// Typed client for the session service. The browser never talks to the LLM
// directly and never computes attribution: every state change round-trips
// through the service and the editor re-renders from the returned snapshot.

export type AttributionLabel = 'human' | 'ai_written' | 'ai_influenced';

export interface SpanDto {
  start: number;
  end: number;
  label: AttributionLabel;
  prompt_id?: string;
  verbatim: boolean;
}

export interface PromptDto {
  id: string;
  issued_at: number;
  prompt: string;
  context?: string;
  response: string;
  category: 'edit' | 'generate';
  model: string;
  regeneration_of?: string;
  redacted: boolean;
}

export interface SessionExport {
  version: number;
  session_id: string;
  revision: number;
  text: string;
  spans: SpanDto[];
  prompts: PromptDto[];
  events: { seq: number; timestamp: number; kind: string; payload: Record<string, unknown> }[];
}

export interface Stats {
  char_fraction: Record<AttributionLabel, number>;
  word_fraction: Record<AttributionLabel, number>;
  prompt_counts: { edit: number; generate: number };
  total_chars: number;
  total_words: number;
}

export interface TimelineGlyphDto {
  seq: number;
  category: 'Writing' | 'PromptEdit' | 'PromptGenerate';
}

export interface PromptReportEntry {
  id: string;
  category: 'edit' | 'generate';
  prompt: string;
  response: string;
  redacted: boolean;
  ranges: { start: number; end: number; label: AttributionLabel }[];
}

export interface StructuredReport {
  text: string;
  spans: SpanDto[];
  highlighted_regions: { start: number; end: number; label: AttributionLabel; prompt_id?: string }[];
  stats: Stats;
  prompts: PromptReportEntry[];
  timeline: { writing: number; edit_prompts: number; generate_prompts: number };
}

export type Op =
  | { kind: 'insert_text'; pos: number; text: string; expected_revision?: number }
  | { kind: 'delete_range'; start: number; end: number; expected_revision?: number }
  | { kind: 'replace_range'; start: number; end: number; text: string; expected_revision?: number }
  | { kind: 'paste_ai_response'; pos: number; text: string; prompt_id: string; expected_revision?: number }
  | { kind: 'manual_label'; start: number; end: number; label: 'ai_written' | 'ai_influenced'; prompt_id?: string; expected_revision?: number }
  | { kind: 'manual_unlabel'; start: number; end: number; expected_revision?: number };

export class ApiError extends Error {
  constructor(
    public status: number,
    public errorType: string,
    detail: string,
  ) {
    super(`${errorType}: ${detail}`);
  }
}

async function unwrap<T>(resp: Response): Promise<T> {
  if (!resp.ok) {
    const body = await resp.json().catch(() => ({ error: 'Unknown', detail: resp.statusText }));
    throw new ApiError(resp.status, body.error, body.detail);
  }
  return (await resp.json()) as T;
}

export class SessionClient {
  constructor(
    private baseUrl: string,
    public sessionId: string,
  ) {}

  static async create(baseUrl: string): Promise<SessionClient> {
    const resp = await fetch(`${baseUrl}/sessions`, { method: 'POST' });
    const data = await unwrap<{ session_id: string }>(resp);
    return new SessionClient(baseUrl, data.session_id);
  }

  private url(path: string): string {
    return `${this.baseUrl}/sessions/${this.sessionId}${path}`;
  }

  async export(): Promise<SessionExport> {
    return unwrap(await fetch(this.url('/export')));
  }

  async applyOp(op: Op): Promise<number> {
    const resp = await fetch(this.url('/ops'), {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(op),
    });
    return (await unwrap<{ revision: number }>(resp)).revision;
  }

  async issuePrompt(promptText: string, contextText?: string): Promise<PromptDto> {
    const resp = await fetch(this.url('/prompts'), {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ prompt_text: promptText, context_text: contextText }),
    });
    return (await unwrap<{ prompt: PromptDto }>(resp)).prompt;
  }

  async regenerate(promptId: string): Promise<PromptDto> {
    const resp = await fetch(this.url(`/prompts/${promptId}/regenerate`), { method: 'POST' });
    return (await unwrap<{ prompt: PromptDto }>(resp)).prompt;
  }

  async redact(promptId: string): Promise<void> {
    await unwrap(await fetch(this.url(`/prompts/${promptId}/redact`), { method: 'POST' }));
  }

  async stats(): Promise<Stats> {
    return unwrap(await fetch(this.url('/stats')));
  }

  async timeline(): Promise<TimelineGlyphDto[]> {
    const data = await unwrap<{ glyphs: TimelineGlyphDto[] }>(await fetch(this.url('/timeline')));
    return data.glyphs;
  }

  async report(): Promise<StructuredReport> {
    return unwrap(await fetch(this.url('/report?format=structured')));
  }
}
