// Browser entry point: wires the three panels to the session service.
// The editor is a textarea with a highlight overlay rendered from the
// latest server snapshot; all attribution decisions happen server-side.

import { SessionClient, SessionExport, Stats, TimelineGlyphDto, PromptDto } from './api.js';
import { armCopy, consumePaste, CopyArm } from './clipboard.js';
import { selectionToContext } from './context.js';
import { pieSlices, promptBars, LABEL_COLORS } from './charts.js';
import { computeEdit, editToOp } from './diff.js';
import { defaultLayout, togglePanel, canToggle, widthShares, PanelLayout, PanelName, ALL_PANELS } from './layout.js';
import { glyphPromptMap, rangesForPrompt, promptAt } from './linking.js';
import { timelineGeometry, GLYPH_COLORS } from './timeline.js';

const DEBOUNCE_MS = 150;

const WIZARD_SUGGESTIONS = ['summarize', 'elaborate', 'enumerate', 'introduce', 'conclude'];

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text = '',
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (text) node.textContent = text;
  return node;
}

export class App {
  private layout: PanelLayout = defaultLayout();
  private snapshot: SessionExport | null = null;
  private arm: CopyArm | null = null;
  private pinnedPrompt: string | null = null;
  private syncTimer: number | null = null;
  private lastSyncedText = '';

  private editor!: HTMLTextAreaElement;
  private overlay!: HTMLDivElement;
  private contextBox!: HTMLTextAreaElement;
  private promptBox!: HTMLTextAreaElement;
  private cardsHost!: HTMLDivElement;
  private vizHost!: HTMLDivElement;
  private panels: Partial<Record<PanelName, HTMLElement>> = {};

  constructor(
    private client: SessionClient,
    private root: HTMLElement,
  ) {}

  async start(): Promise<void> {
    this.buildChrome();
    await this.refresh();
  }

  private buildChrome(): void {
    const toggles = el('div', { class: 'toggles' });
    for (const name of ALL_PANELS) {
      const btn = el('button', { 'data-panel': name }, name);
      btn.addEventListener('click', () => {
        if (!canToggle(this.layout, name)) return;
        this.layout = togglePanel(this.layout, name);
        this.applyLayout();
      });
      toggles.appendChild(btn);
    }
    this.root.appendChild(toggles);

    const row = el('div', { class: 'panels' });
    this.panels.editor = this.buildEditorPanel();
    this.panels.prompts = this.buildPromptPanel();
    this.panels.viz = el('div', { class: 'panel viz' });
    this.vizHost = this.panels.viz as HTMLDivElement;
    for (const name of ALL_PANELS) row.appendChild(this.panels[name]!);
    this.root.appendChild(row);
    this.applyLayout();
  }

  private applyLayout(): void {
    const shares = widthShares(this.layout);
    for (const name of ALL_PANELS) {
      const panel = this.panels[name]!;
      panel.style.display = this.layout.visible[name] ? 'block' : 'none';
      panel.style.width = `${shares[name] * 100}%`;
    }
    const buttons = this.root.querySelectorAll<HTMLButtonElement>('button[data-panel]');
    buttons.forEach((b) => {
      b.disabled = !canToggle(this.layout, b.dataset.panel as PanelName);
    });
  }

  private buildEditorPanel(): HTMLElement {
    const panel = el('div', { class: 'panel editor' });
    this.overlay = el('div', { class: 'highlight-overlay', 'aria-hidden': 'true' });
    this.editor = el('textarea', { class: 'editor-input', spellcheck: 'false' });
    this.editor.addEventListener('input', () => this.scheduleSync());
    this.editor.addEventListener('paste', (ev) => this.onPaste(ev));
    this.editor.addEventListener('select', () => {
      const sel = this.editor.value.slice(this.editor.selectionStart, this.editor.selectionEnd);
      this.contextBox.value = selectionToContext({ value: this.contextBox.value }, sel).value;
    });
    this.editor.addEventListener('click', async () => {
      if (!this.snapshot) return;
      const report = await this.client.report();
      const pid = promptAt(report, this.editor.selectionStart);
      if (pid) this.pinPrompt(pid);
    });
    const label = el('div', { class: 'panel-title' }, 'Editor');
    const buttons = el('div', { class: 'label-buttons' });
    for (const [title, label_] of [['Highlight AI-written', 'ai_written'],
                                   ['Highlight AI-influenced', 'ai_influenced'],
                                   ['Unhighlight', '']] as const) {
      const btn = el('button', {}, title);
      btn.addEventListener('click', () => this.onManualLabel(label_));
      buttons.appendChild(btn);
    }
    panel.append(label, buttons, this.overlay, this.editor);
    return panel;
  }

  private buildPromptPanel(): HTMLElement {
    const panel = el('div', { class: 'panel prompts' });
    panel.appendChild(el('div', { class: 'panel-title' }, 'AI assistant'));

    const wizard = el('div', { class: 'wizard' });
    for (const s of WIZARD_SUGGESTIONS) {
      const btn = el('button', {}, s);
      btn.addEventListener('click', () => {
        this.promptBox.value = this.promptBox.value ? `${this.promptBox.value} ${s}` : s;
      });
      wizard.appendChild(btn);
    }
    this.promptBox = el('textarea', { class: 'prompt-box', placeholder: 'Prompt' });
    this.contextBox = el('textarea', { class: 'context-box', placeholder: 'Context (optional)' });
    const send = el('button', { class: 'send' }, 'Send');
    send.addEventListener('click', async () => {
      const text = this.promptBox.value.trim();
      if (!text) return;
      send.disabled = true; // one in-flight completion per session
      try {
        await this.client.issuePrompt(text, this.contextBox.value.trim() || undefined);
        this.promptBox.value = '';
        await this.refresh();
      } finally {
        send.disabled = false;
      }
    });
    this.cardsHost = el('div', { class: 'cards' });
    panel.append(wizard, this.promptBox, this.contextBox, send, this.cardsHost);
    return panel;
  }

  private renderCards(): void {
    this.cardsHost.replaceChildren();
    if (!this.snapshot) return;
    for (const p of [...this.snapshot.prompts].reverse()) {
      const card = el('div', { class: `card ${p.category}`, 'data-prompt': p.id });
      card.style.borderRightColor = p.category === 'generate' ? '#9013FE' : '#4A90D9';
      card.appendChild(el('div', { class: 'card-title', title: p.context ?? '' }, p.prompt));
      card.appendChild(el('div', { class: 'card-response' }, p.response));
      const actions = el('div', { class: 'card-actions' });
      const copy = el('button', {}, 'Copy');
      copy.addEventListener('click', async () => {
        await navigator.clipboard.writeText(p.response);
        this.arm = armCopy(p.id, Date.now());
      });
      const redo = el('button', {}, 'Redo');
      redo.addEventListener('click', async () => {
        await this.client.regenerate(p.id);
        await this.refresh();
      });
      const redact = el('button', {}, 'Redact');
      redact.addEventListener('click', async () => {
        await this.client.redact(p.id);
        await this.refresh();
      });
      actions.append(copy, redo, redact);
      card.appendChild(actions);
      card.addEventListener('mouseenter', () => this.highlightPrompt(p.id));
      card.addEventListener('mouseleave', () => this.highlightPrompt(this.pinnedPrompt));
      this.cardsHost.appendChild(card);
    }
  }

  private async onPaste(ev: ClipboardEvent): Promise<void> {
    const promptId = consumePaste(this.arm, Date.now());
    this.arm = null;
    if (!promptId) return; // plain human paste flows through the regular diff sync
    ev.preventDefault();
    const text = ev.clipboardData?.getData('text/plain') ?? '';
    if (!text || !this.snapshot) return;
    const pos = Array.from(this.editor.value.slice(0, this.editor.selectionStart)).length;
    await this.flushEdits();
    await this.client.applyOp({
      kind: 'paste_ai_response',
      pos,
      text,
      prompt_id: promptId,
      expected_revision: this.snapshot.revision,
    });
    await this.refresh();
  }

  private async onManualLabel(label: 'ai_written' | 'ai_influenced' | ''): Promise<void> {
    if (!this.snapshot) return;
    const start = Array.from(this.editor.value.slice(0, this.editor.selectionStart)).length;
    const end = Array.from(this.editor.value.slice(0, this.editor.selectionEnd)).length;
    if (start === end) return;
    await this.flushEdits();
    if (label === '') {
      await this.client.applyOp({ kind: 'manual_unlabel', start, end });
    } else {
      const promptId = window.prompt('Link a prompt id (optional):') || undefined;
      await this.client.applyOp({ kind: 'manual_label', start, end, label, prompt_id: promptId });
    }
    await this.refresh();
  }

  private scheduleSync(): void {
    if (this.syncTimer !== null) window.clearTimeout(this.syncTimer);
    this.syncTimer = window.setTimeout(() => void this.flushEdits().then(() => this.refresh()), DEBOUNCE_MS);
  }

  private async flushEdits(): Promise<void> {
    if (!this.snapshot) return;
    const edit = computeEdit(this.lastSyncedText, this.editor.value);
    if (!edit) return;
    const revision = await this.client.applyOp(editToOp(edit, this.snapshot.revision));
    this.snapshot = { ...this.snapshot, revision };
    this.lastSyncedText = this.editor.value;
  }

  async refresh(): Promise<void> {
    this.snapshot = await this.client.export();
    this.lastSyncedText = this.snapshot.text;
    if (this.editor.value !== this.snapshot.text) {
      this.editor.value = this.snapshot.text;
    }
    this.renderOverlay();
    this.renderCards();
    await this.renderViz();
  }

  private renderOverlay(highlightRanges: { start: number; end: number }[] = []): void {
    this.overlay.replaceChildren();
    if (!this.snapshot) return;
    const chars = Array.from(this.snapshot.text);
    for (const span of this.snapshot.spans) {
      const piece = el('span', {}, chars.slice(span.start, span.end).join(''));
      if (span.label !== 'human') {
        piece.style.background = LABEL_COLORS[span.label];
      }
      if (highlightRanges.some((r) => r.start < span.end && span.start < r.end)) {
        piece.classList.add('linked');
      }
      if (span.prompt_id) piece.dataset.prompt = span.prompt_id;
      this.overlay.appendChild(piece);
    }
  }

  private async highlightPrompt(promptId: string | null): Promise<void> {
    if (!promptId) {
      this.renderOverlay();
      return;
    }
    const report = await this.client.report();
    this.renderOverlay(rangesForPrompt(report, promptId));
  }

  private pinPrompt(promptId: string): void {
    this.pinnedPrompt = this.pinnedPrompt === promptId ? null : promptId;
    void this.highlightPrompt(this.pinnedPrompt);
    this.cardsHost
      .querySelectorAll<HTMLElement>('.card')
      .forEach((c) => c.classList.toggle('pinned', c.dataset.prompt === this.pinnedPrompt));
  }

  private async renderViz(): Promise<void> {
    const [stats, glyphs] = await Promise.all([this.client.stats(), this.client.timeline()]);
    this.vizHost.replaceChildren(el('div', { class: 'panel-title' }, 'Provenance'));
    this.vizHost.appendChild(this.renderPie(stats));
    this.vizHost.appendChild(this.renderBars(stats));
    this.vizHost.appendChild(this.renderTimeline(glyphs));
  }

  private renderPie(stats: Stats): SVGSVGElement {
    const svg = document.createElementNS('http://www.w3.org/2000/svg', 'svg');
    svg.setAttribute('viewBox', '-1.1 -1.1 2.2 2.2');
    svg.setAttribute('class', 'pie');
    const slices = pieSlices(stats);
    if (slices.length === 1) {
      const circle = document.createElementNS(svg.namespaceURI, 'circle') as SVGCircleElement;
      circle.setAttribute('r', '1');
      circle.setAttribute('fill', slices[0].color);
      svg.appendChild(circle);
      return svg;
    }
    for (const s of slices) {
      const large = s.endAngle - s.startAngle > Math.PI ? 1 : 0;
      const x0 = Math.sin(s.startAngle);
      const y0 = -Math.cos(s.startAngle);
      const x1 = Math.sin(s.endAngle);
      const y1 = -Math.cos(s.endAngle);
      const path = document.createElementNS(svg.namespaceURI, 'path') as SVGPathElement;
      path.setAttribute('d', `M 0 0 L ${x0} ${y0} A 1 1 0 ${large} 1 ${x1} ${y1} Z`);
      path.setAttribute('fill', s.color);
      svg.appendChild(path);
    }
    return svg;
  }

  private renderBars(stats: Stats): HTMLElement {
    const host = el('div', { class: 'bars' });
    const max = Math.max(1, ...promptBars(stats).map((b) => b.count));
    for (const bar of promptBars(stats)) {
      const row = el('div', { class: 'bar-row' });
      row.appendChild(el('span', { class: 'bar-label' }, `${bar.category} (${bar.count})`));
      const fill = el('div', { class: 'bar-fill' });
      fill.style.width = `${(bar.count / max) * 100}%`;
      fill.style.background = bar.color;
      row.appendChild(fill);
      host.appendChild(row);
    }
    return host;
  }

  private renderTimeline(glyphs: TimelineGlyphDto[]): HTMLElement {
    const viewport = el('div', { class: 'timeline-viewport' });
    const viewportPx = Math.max(1, this.vizHost.clientWidth || 300);
    const geom = timelineGeometry(glyphs.length, viewportPx);
    const track = el('div', { class: 'timeline-track' });
    track.style.width = `${geom.totalWidth}px`;
    viewport.style.overflowX = geom.scroll ? 'scroll' : 'hidden';
    const promptMap = this.snapshot ? glyphPromptMap(this.snapshot) : new Map<number, string>();
    for (const g of glyphs) {
      const rect = el('div', { class: 'glyph', 'data-seq': String(g.seq) });
      rect.style.width = `${geom.glyphWidth}px`;
      rect.style.background = GLYPH_COLORS[g.category];
      const pid = promptMap.get(g.seq);
      if (pid) {
        rect.addEventListener('mouseenter', () => this.highlightPrompt(pid));
        rect.addEventListener('mouseleave', () => this.highlightPrompt(this.pinnedPrompt));
        rect.addEventListener('click', () => this.pinPrompt(pid));
      }
      track.appendChild(rect);
    }
    viewport.appendChild(track);
    return viewport;
  }
}

export async function boot(baseUrl: string, root: HTMLElement): Promise<App> {
  const params = new URLSearchParams(window.location.search);
  const existing = params.get('session');
  const client = existing
    ? new SessionClient(baseUrl, existing)
    : await SessionClient.create(baseUrl);
  const app = new App(client, root);
  await app.start();
  return app;
}
