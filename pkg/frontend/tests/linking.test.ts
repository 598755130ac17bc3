import { describe, expect, it } from 'vitest';
import { glyphPromptMap, promptAt, rangesForPrompt } from '../src/linking.js';
import type { SessionExport, StructuredReport } from '../src/api.js';

const report: StructuredReport = {
  text: 'abcdefghij',
  spans: [],
  highlighted_regions: [
    { start: 2, end: 5, label: 'ai_written', prompt_id: 'p1' },
    { start: 7, end: 9, label: 'ai_influenced' },
  ],
  stats: {
    char_fraction: { human: 0.5, ai_written: 0.3, ai_influenced: 0.2 },
    word_fraction: { human: 1, ai_written: 0, ai_influenced: 0 },
    prompt_counts: { edit: 0, generate: 1 },
    total_chars: 10,
    total_words: 1,
  },
  prompts: [
    {
      id: 'p1',
      category: 'generate',
      prompt: 'write',
      response: 'cde',
      redacted: false,
      ranges: [{ start: 2, end: 5, label: 'ai_written' }],
    },
  ],
  timeline: { writing: 0, edit_prompts: 0, generate_prompts: 1 },
};

describe('rangesForPrompt', () => {
  it('returns the service-reported ranges for a prompt', () => {
    expect(rangesForPrompt(report, 'p1')).toEqual([{ start: 2, end: 5, label: 'ai_written' }]);
  });

  it('returns nothing for an unknown prompt', () => {
    expect(rangesForPrompt(report, 'p9')).toEqual([]);
  });
});

describe('promptAt', () => {
  it('finds the linked prompt under the caret', () => {
    expect(promptAt(report, 3)).toBe('p1');
  });

  it('ignores unlinked regions and plain text', () => {
    expect(promptAt(report, 8)).toBeNull();
    expect(promptAt(report, 0)).toBeNull();
  });
});

describe('glyphPromptMap', () => {
  it('maps PromptIssued glyph seqs to prompt ids', () => {
    const session = {
      events: [
        { seq: 1, timestamp: 0, kind: 'HumanEdit', payload: {} },
        { seq: 2, timestamp: 0, kind: 'SentenceCompleted', payload: {} },
        { seq: 3, timestamp: 0, kind: 'PromptIssued', payload: { prompt_id: 'p1', category: 'generate' } },
      ],
    } as unknown as SessionExport;
    expect(glyphPromptMap(session)).toEqual(new Map([[3, 'p1']]));
  });
});
