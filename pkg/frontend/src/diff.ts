// Minimal single-range diff between two editor states, used to turn a
// keystroke burst into one service op. Offsets are Unicode code points to
// match the service's span arithmetic, not UTF-16 units.

import type { Op } from './api.js';

export interface EditRange {
  start: number; // code points
  end: number;
  text: string;
}

function toCodePoints(s: string): string[] {
  return Array.from(s);
}

/** The single replaced range between two texts, or null when identical. */
export function computeEdit(oldText: string, newText: string): EditRange | null {
  if (oldText === newText) return null;
  const a = toCodePoints(oldText);
  const b = toCodePoints(newText);
  let prefix = 0;
  while (prefix < a.length && prefix < b.length && a[prefix] === b[prefix]) prefix++;
  let suffix = 0;
  while (
    suffix < a.length - prefix &&
    suffix < b.length - prefix &&
    a[a.length - 1 - suffix] === b[b.length - 1 - suffix]
  ) {
    suffix++;
  }
  return {
    start: prefix,
    end: a.length - suffix,
    text: b.slice(prefix, b.length - suffix).join(''),
  };
}

/** Express an edit range as the narrowest service op. */
export function editToOp(edit: EditRange, expectedRevision: number): Op {
  if (edit.start === edit.end) {
    return { kind: 'insert_text', pos: edit.start, text: edit.text, expected_revision: expectedRevision };
  }
  if (edit.text === '') {
    return { kind: 'delete_range', start: edit.start, end: edit.end, expected_revision: expectedRevision };
  }
  return {
    kind: 'replace_range',
    start: edit.start,
    end: edit.end,
    text: edit.text,
    expected_revision: expectedRevision,
  };
}
