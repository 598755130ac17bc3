// Panel layout: editor, prompt panel, and visualization share the width
// equally; hiding panels redistributes, and the last visible panel can
// never be hidden.

export type PanelName = 'editor' | 'prompts' | 'viz';

export interface PanelLayout {
  visible: Record<PanelName, boolean>;
}

export const ALL_PANELS: PanelName[] = ['editor', 'prompts', 'viz'];

export function defaultLayout(): PanelLayout {
  return { visible: { editor: true, prompts: true, viz: true } };
}

export function visibleCount(layout: PanelLayout): number {
  return ALL_PANELS.filter((p) => layout.visible[p]).length;
}

/** Width share per visible panel: 1/3, 1/2 or 1 (distraction-free). */
export function layoutWidths(visible: number): number {
  if (visible < 1 || visible > 3) {
    throw new RangeError(`visible panel count must be 1..3, got ${visible}`);
  }
  return 1 / visible;
}

export function widthShares(layout: PanelLayout): Record<PanelName, number> {
  const share = layoutWidths(visibleCount(layout));
  const shares = { editor: 0, prompts: 0, viz: 0 };
  for (const p of ALL_PANELS) {
    if (layout.visible[p]) shares[p] = share;
  }
  return shares;
}

/** Whether the toggle for a panel is enabled (it is not the last one shown). */
export function canToggle(layout: PanelLayout, panel: PanelName): boolean {
  return !layout.visible[panel] || visibleCount(layout) > 1;
}

export function togglePanel(layout: PanelLayout, panel: PanelName): PanelLayout {
  if (!canToggle(layout, panel)) return layout;
  return {
    visible: { ...layout.visible, [panel]: !layout.visible[panel] },
  };
}
