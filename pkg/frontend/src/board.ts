/** DOM rendering for the stone line and the what-if panel. */

import type { MoveOption, Outcome, Position } from './types';
import { isTerminal } from './types';
import type { BlockId } from './session';

export interface BoardOptions {
  selected: BlockId | null;
  /** Blocks respond to clicks only while a move can actually be played. */
  interactive: boolean;
  /** Result text shown instead of stones once the board is empty. */
  banner: string | null;
  onSelect: (block: BlockId) => void;
}

interface BlockSpec {
  id: BlockId;
  count: number;
  color: 'black' | 'white';
}

function blockSpecs(g: Position): BlockSpec[] {
  if (g.y === 0) {
    // Outer runs with nothing between them act as one sweepable group.
    return [{ id: 'run', count: g.x + g.z, color: 'black' }];
  }
  const specs: BlockSpec[] = [];
  if (g.x > 0) specs.push({ id: 'left', count: g.x, color: 'black' });
  specs.push({ id: 'middle', count: g.y, color: 'white' });
  if (g.z > 0) specs.push({ id: 'right', count: g.z, color: 'black' });
  return specs;
}

export function renderBoard(root: HTMLElement, g: Position, opts: BoardOptions): void {
  root.textContent = '';
  if (isTerminal(g)) {
    const banner = document.createElement('div');
    banner.className = 'banner';
    banner.textContent = opts.banner ?? 'no stones left';
    root.appendChild(banner);
    return;
  }
  for (const spec of blockSpecs(g)) {
    const block = document.createElement('button');
    block.type = 'button';
    block.className = 'block';
    block.dataset.block = spec.id;
    block.dataset.count = String(spec.count);
    if (spec.id === opts.selected) block.classList.add('selected');
    block.disabled = !opts.interactive;
    block.title = `${spec.count} ${spec.color} stone${spec.count === 1 ? '' : 's'}`;
    for (let i = 0; i < spec.count; i++) {
      const stone = document.createElement('span');
      stone.className = `stone ${spec.color}`;
      block.appendChild(stone);
    }
    block.addEventListener('click', () => opts.onSelect(spec.id));
    root.appendChild(block);
  }
}

export interface WhatifEntry {
  to: Position;
  /** null renders the move without a badge (service unreachable). */
  outcome: Outcome | null;
}

export function whatifEntries(options: MoveOption[] | null, fallback: Position[]): WhatifEntry[] {
  if (options !== null) {
    return options.map((m) => ({ to: m.to, outcome: m.outcome }));
  }
  return fallback.map((to) => ({ to, outcome: null }));
}

export function renderWhatif(root: HTMLElement, entries: WhatifEntry[], hints: boolean): void {
  root.textContent = '';
  root.hidden = !hints;
  if (!hints) return;
  const list = document.createElement('ul');
  list.className = 'whatif-list';
  for (const entry of entries) {
    const item = document.createElement('li');
    item.dataset.x = String(entry.to.x);
    item.dataset.y = String(entry.to.y);
    item.dataset.z = String(entry.to.z);
    const label = document.createElement('span');
    label.className = 'whatif-move';
    label.textContent = `(${entry.to.x}, ${entry.to.y}, ${entry.to.z})`;
    item.appendChild(label);
    if (entry.outcome !== null) {
      const badge = document.createElement('span');
      badge.className = `badge badge-${entry.outcome.toLowerCase()}`;
      badge.dataset.outcome = entry.outcome;
      badge.textContent = entry.outcome;
      item.appendChild(badge);
    }
    list.appendChild(item);
  }
  root.appendChild(list);
}
