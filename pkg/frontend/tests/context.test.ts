import { describe, expect, it } from 'vitest';
import { selectionToContext } from '../src/context.js';

describe('selectionToContext', () => {
  it('fills the context box from a selection', () => {
    expect(selectionToContext({ value: '' }, 'the harbor at dusk')).toEqual({
      value: 'the harbor at dusk',
    });
  });

  it('replaces an earlier selection', () => {
    expect(selectionToContext({ value: 'old' }, 'new selection')).toEqual({ value: 'new selection' });
  });

  it('leaves the box alone when the selection is cleared', () => {
    expect(selectionToContext({ value: 'kept' }, '')).toEqual({ value: 'kept' });
  });
});
