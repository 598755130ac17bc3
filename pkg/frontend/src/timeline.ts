// Timeline track geometry and glyph styling. Rectangles shrink with the
// glyph count down to a 5px floor; past that the track extends horizontally
// and scrolls.

export const MIN_GLYPH_WIDTH_PX = 5;

export type GlyphCategory = 'Writing' | 'PromptEdit' | 'PromptGenerate';

export interface TimelineGlyph {
  seq: number;
  category: GlyphCategory;
}

export interface TimelineGeometry {
  glyphWidth: number;
  totalWidth: number;
  scroll: boolean;
}

export const GLYPH_COLORS: Record<GlyphCategory, string> = {
  Writing: '#9B9B9B', // grey
  PromptGenerate: '#9013FE', // purple
  PromptEdit: '#4A90D9', // blue
};

export function timelineGeometry(glyphCount: number, viewportPx: number): TimelineGeometry {
  if (viewportPx <= 0) {
    throw new RangeError(`viewport width must be positive, got ${viewportPx}`);
  }
  if (glyphCount === 0) {
    return { glyphWidth: 0, totalWidth: 0, scroll: false };
  }
  const glyphWidth = Math.max(MIN_GLYPH_WIDTH_PX, viewportPx / glyphCount);
  const totalWidth = glyphCount * glyphWidth;
  return { glyphWidth, totalWidth, scroll: totalWidth > viewportPx };
}
