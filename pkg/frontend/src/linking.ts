// Hover and click linking between the timeline, prompt cards, and editor
// text. Highlighted ranges always come from the service's structured report;
// the client only looks them up.

import type { StructuredReport, SessionExport } from './api.js';

export interface HighlightRange {
  start: number;
  end: number;
  label: string;
}

/** Ranges to light up when a prompt card or its glyph is hovered. */
export function rangesForPrompt(report: StructuredReport, promptId: string): HighlightRange[] {
  const entry = report.prompts.find((p) => p.id === promptId);
  return entry ? entry.ranges : [];
}

/** Timeline glyph seq -> prompt id (Writing glyphs map to nothing). */
export function glyphPromptMap(session: SessionExport): Map<number, string> {
  const map = new Map<number, string>();
  for (const e of session.events) {
    if (e.kind === 'PromptIssued') {
      map.set(e.seq, e.payload['prompt_id'] as string);
    }
  }
  return map;
}

/** Prompt to reveal when the writer clicks inside annotated text. */
export function promptAt(report: StructuredReport, pos: number): string | null {
  for (const region of report.highlighted_regions) {
    if (region.start <= pos && pos < region.end && region.prompt_id) {
      return region.prompt_id;
    }
  }
  return null;
}
