import { describe, expect, it } from 'vitest';
import { pieSlices, promptBars } from '../src/charts.js';
import type { Stats } from '../src/api.js';

function stats(human: number, ai: number, inf: number): Stats {
  return {
    char_fraction: { human, ai_written: ai, ai_influenced: inf },
    word_fraction: { human, ai_written: ai, ai_influenced: inf },
    prompt_counts: { edit: 2, generate: 5 },
    total_chars: 100,
    total_words: 20,
  };
}

describe('pieSlices', () => {
  it('covers the full circle in label order', () => {
    const slices = pieSlices(stats(0.5, 0.3, 0.2));
    expect(slices.map((s) => s.label)).toEqual(['human', 'ai_written', 'ai_influenced']);
    expect(slices[0].startAngle).toBe(0);
    for (let i = 1; i < slices.length; i++) {
      expect(slices[i].startAngle).toBeCloseTo(slices[i - 1].endAngle, 12);
    }
    expect(slices[slices.length - 1].endAngle).toBeCloseTo(2 * Math.PI, 12);
  });

  it('mirrors the fractions exactly', () => {
    const slices = pieSlices(stats(0.6, 0.4, 0));
    expect(slices.map((s) => s.fraction)).toEqual([0.6, 0.4]);
  });

  it('omits zero slices', () => {
    expect(pieSlices(stats(1, 0, 0)).map((s) => s.label)).toEqual(['human']);
  });
});

describe('promptBars', () => {
  it('reports edit and generate counts with their colors', () => {
    expect(promptBars(stats(1, 0, 0))).toEqual([
      { category: 'edit', count: 2, color: '#4A90D9' },
      { category: 'generate', count: 5, color: '#9013FE' },
    ]);
  });
});
