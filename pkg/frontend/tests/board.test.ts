import { beforeEach, describe, expect, it, vi } from 'vitest';

import { renderBoard, renderWhatif, whatifEntries } from '../src/board';
import type { BlockId } from '../src/session';
import type { MoveOption } from '../src/types';

let root: HTMLElement;

beforeEach(() => {
  root = document.createElement('div');
  document.body.appendChild(root);
});

function boardOpts(overrides: Partial<Parameters<typeof renderBoard>[2]> = {}) {
  return { selected: null, interactive: true, banner: null, onSelect: () => {}, ...overrides };
}

describe('renderBoard', () => {
  it('draws three two-colored groups for (5, 3, 4)', () => {
    renderBoard(root, { x: 5, y: 3, z: 4 }, boardOpts());
    const blocks = root.querySelectorAll<HTMLElement>('.block');
    expect(blocks).toHaveLength(3);
    expect([...blocks].map((b) => b.dataset.block)).toEqual(['left', 'middle', 'right']);
    expect(blocks[0].querySelectorAll('.stone.black')).toHaveLength(5);
    expect(blocks[1].querySelectorAll('.stone.white')).toHaveLength(3);
    expect(blocks[2].querySelectorAll('.stone.black')).toHaveLength(4);
  });

  it('draws one merged group when the middle block is empty', () => {
    renderBoard(root, { x: 4, y: 0, z: 0 }, boardOpts());
    const blocks = root.querySelectorAll<HTMLElement>('.block');
    expect(blocks).toHaveLength(1);
    expect(blocks[0].dataset.block).toBe('run');
    expect(blocks[0].querySelectorAll('.stone')).toHaveLength(4);

    renderBoard(root, { x: 1, y: 0, z: 3 }, boardOpts());
    expect(root.querySelectorAll('.block')).toHaveLength(1);
    expect(root.querySelector<HTMLElement>('.block')!.querySelectorAll('.stone')).toHaveLength(4);
  });

  it('skips outer blocks that hold no stones', () => {
    renderBoard(root, { x: 0, y: 2, z: 3 }, boardOpts());
    expect([...root.querySelectorAll<HTMLElement>('.block')].map((b) => b.dataset.block)).toEqual([
      'middle',
      'right',
    ]);
  });

  it('renders the empty board as a result banner', () => {
    renderBoard(root, { x: 0, y: 0, z: 0 }, boardOpts({ banner: 'you won' }));
    expect(root.querySelectorAll('.block')).toHaveLength(0);
    expect(root.querySelector('.banner')!.textContent).toBe('you won');
  });

  it('marks the selected block and honors interactivity', () => {
    renderBoard(root, { x: 2, y: 1, z: 2 }, boardOpts({ selected: 'middle' as BlockId, interactive: false }));
    const middle = root.querySelector<HTMLButtonElement>('[data-block="middle"]')!;
    expect(middle.classList.contains('selected')).toBe(true);
    expect(middle.disabled).toBe(true);
  });

  it('reports clicks through onSelect', () => {
    const onSelect = vi.fn();
    renderBoard(root, { x: 2, y: 1, z: 2 }, boardOpts({ onSelect }));
    root.querySelector<HTMLButtonElement>('[data-block="right"]')!.click();
    expect(onSelect).toHaveBeenCalledWith('right');
  });
});

describe('renderWhatif', () => {
  const options: MoveOption[] = [
    { to: { x: 0, y: 1, z: 1 }, outcome: 'P' },
    { to: { x: 1, y: 0, z: 1 }, outcome: 'N' },
  ];

  it('badges each option with its outcome class', () => {
    renderWhatif(root, whatifEntries(options, []), true);
    const items = root.querySelectorAll('li');
    expect(items).toHaveLength(2);
    expect(items[0].querySelector('.badge')!.textContent).toBe('P');
    expect(items[1].querySelector('.badge')!.textContent).toBe('N');
    expect(items[0].dataset).toMatchObject({ x: '0', y: '1', z: '1' });
  });

  it('degrades to an unbadged list when there is no analysis', () => {
    renderWhatif(root, whatifEntries(null, [{ x: 0, y: 1, z: 1 }]), true);
    const items = root.querySelectorAll('li');
    expect(items).toHaveLength(1);
    expect(items[0].querySelector('.badge')).toBeNull();
    expect(items[0].textContent).toContain('(0, 1, 1)');
  });

  it('stays hidden while hints are off', () => {
    renderWhatif(root, whatifEntries(options, []), false);
    expect(root.hidden).toBe(true);
    expect(root.querySelectorAll('li')).toHaveLength(0);
  });
});
