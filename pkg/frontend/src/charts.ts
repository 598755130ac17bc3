// Pie and bar chart models for the visualization panel, computed directly
// from the /stats response so the charts can never disagree with the service.

import type { AttributionLabel, Stats } from './api.js';

export const LABEL_COLORS: Record<AttributionLabel, string> = {
  human: '#D8D8D8',
  ai_written: '#F5A623', // orange, same as editor highlight
  ai_influenced: '#7ED321', // green
};

export interface PieSlice {
  label: AttributionLabel;
  fraction: number;
  startAngle: number; // radians, from 12 o'clock, clockwise
  endAngle: number;
  color: string;
}

const PIE_ORDER: AttributionLabel[] = ['human', 'ai_written', 'ai_influenced'];

export function pieSlices(stats: Stats): PieSlice[] {
  const slices: PieSlice[] = [];
  let angle = 0;
  for (const label of PIE_ORDER) {
    const fraction = stats.char_fraction[label];
    if (fraction <= 0) continue;
    const sweep = fraction * 2 * Math.PI;
    slices.push({ label, fraction, startAngle: angle, endAngle: angle + sweep, color: LABEL_COLORS[label] });
    angle += sweep;
  }
  return slices;
}

export interface Bar {
  category: 'edit' | 'generate';
  count: number;
  color: string;
}

export function promptBars(stats: Stats): Bar[] {
  return [
    { category: 'edit', count: stats.prompt_counts.edit, color: '#4A90D9' },
    { category: 'generate', count: stats.prompt_counts.generate, color: '#9013FE' },
  ];
}
