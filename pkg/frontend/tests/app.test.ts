import { afterEach, beforeEach, describe, expect, it, vi } from 'vitest';

import { initApp } from '../src/main';
import type { AnalysisResponse, EngineMoveResponse, Position } from '../src/types';

/**
 * Canned service for wiring tests. Values follow the real engine: outcomes
 * for these tiny positions are easy to read off by hand (normal play, run
 * of n stones is lost for the mover exactly when n = 0).
 */
const ANALYZE: Record<string, AnalysisResponse> = {
  'x=1&y=1&z=1&convention=normal': {
    position: { x: 1, y: 1, z: 1 },
    convention: 'normal',
    outcome: 'N',
    auxValue: 0,
    moves: [
      { to: { x: 1, y: 0, z: 1 }, outcome: 'N' },
      { to: { x: 0, y: 1, z: 1 }, outcome: 'P' },
      { to: { x: 1, y: 1, z: 0 }, outcome: 'P' },
    ],
    winningMove: { x: 0, y: 1, z: 1 },
  },
  'x=0&y=1&z=1&convention=normal': {
    position: { x: 0, y: 1, z: 1 },
    convention: 'normal',
    outcome: 'P',
    auxValue: 1,
    moves: [
      { to: { x: 0, y: 0, z: 1 }, outcome: 'N' },
      { to: { x: 0, y: 1, z: 0 }, outcome: 'N' },
    ],
    winningMove: null,
  },
  'x=0&y=0&z=1&convention=normal': {
    position: { x: 0, y: 0, z: 1 },
    convention: 'normal',
    outcome: 'N',
    auxValue: 0,
    moves: [{ to: { x: 0, y: 0, z: 0 }, outcome: 'P' }],
    winningMove: { x: 0, y: 0, z: 0 },
  },
  'x=2&y=1&z=2&convention=normal': {
    position: { x: 2, y: 1, z: 2 },
    convention: 'normal',
    outcome: 'P',
    auxValue: 0,
    moves: [
      { to: { x: 2, y: 0, z: 2 }, outcome: 'N' },
      { to: { x: 0, y: 1, z: 2 }, outcome: 'N' },
      { to: { x: 1, y: 1, z: 2 }, outcome: 'N' },
      { to: { x: 2, y: 1, z: 0 }, outcome: 'N' },
      { to: { x: 2, y: 1, z: 1 }, outcome: 'N' },
    ],
    winningMove: null,
  },
  'x=2&y=0&z=2&convention=normal': {
    position: { x: 2, y: 0, z: 2 },
    convention: 'normal',
    outcome: 'N',
    auxValue: 1,
    moves: [
      { to: { x: 0, y: 0, z: 0 }, outcome: 'P' },
      { to: { x: 1, y: 0, z: 0 }, outcome: 'N' },
      { to: { x: 2, y: 0, z: 0 }, outcome: 'N' },
      { to: { x: 3, y: 0, z: 0 }, outcome: 'N' },
    ],
    winningMove: { x: 0, y: 0, z: 0 },
  },
};

const ENGINE_MOVE: Record<string, EngineMoveResponse> = {
  'x=0&y=1&z=1&convention=normal': { move: { x: 0, y: 0, z: 1 } },
  'x=2&y=1&z=2&convention=normal': { move: { x: 2, y: 0, z: 2 } },
};

function fakeService(url: string): Response {
  const [path, query] = url.split('?');
  const table = path === '/api/analyze' ? ANALYZE : path === '/api/engine-move' ? ENGINE_MOVE : null;
  const body = table?.[query ?? ''];
  if (!body) throw new Error(`no canned response for ${url}`);
  return new Response(JSON.stringify(body), { status: 200, headers: { 'Content-Type': 'application/json' } });
}

async function waitFor(condition: () => boolean, what: string, timeoutMs = 3000): Promise<void> {
  const start = Date.now();
  while (!condition()) {
    if (Date.now() - start > timeoutMs) throw new Error(`timed out waiting for ${what}`);
    await new Promise((resolve) => setTimeout(resolve, 10));
  }
}

let root: HTMLElement;

function query<T extends HTMLElement>(selector: string): T {
  const found = root.querySelector<T>(selector);
  if (!found) throw new Error(`missing ${selector}`);
  return found;
}

function setCounts(g: Position): void {
  query<HTMLInputElement>('#setup-x').value = String(g.x);
  query<HTMLInputElement>('#setup-y').value = String(g.y);
  query<HTMLInputElement>('#setup-z').value = String(g.z);
}

function badges(): string[] {
  return [...root.querySelectorAll<HTMLElement>('#whatif li')].map(
    (item) => item.querySelector('.badge')?.textContent ?? '',
  );
}

async function idle(): Promise<void> {
  await waitFor(() => !query<HTMLDivElement>('#status-line').textContent!.includes('thinking'), 'app to settle');
}

async function startGame(g: Position): Promise<void> {
  setCounts(g);
  query<HTMLButtonElement>('#start').click();
  await idle();
}

async function sweep(block: string, newCount: number): Promise<void> {
  query<HTMLButtonElement>(`[data-block="${block}"]`).click();
  const slider = query<HTMLInputElement>('#slider');
  slider.value = String(newCount);
  query<HTMLButtonElement>('#slider-confirm').click();
  await idle();
}

beforeEach(() => {
  vi.stubGlobal('fetch', vi.fn().mockImplementation((url: string) => Promise.resolve(fakeService(url))));
  root = document.createElement('div');
  document.body.appendChild(root);
  initApp(root);
});

afterEach(() => {
  vi.unstubAllGlobals();
  root.remove();
});

describe('game start', () => {
  it('locks the setup, draws the board, and badges every option', async () => {
    await startGame({ x: 1, y: 1, z: 1 });

    expect(query<HTMLInputElement>('#setup-x').disabled).toBe(true);
    expect(query<HTMLSelectElement>('#setup-convention').disabled).toBe(true);
    expect(root.querySelectorAll('.block')).toHaveLength(3);
    expect(query<HTMLDivElement>('#status-line').textContent).toContain('(1, 1, 1)');
    expect(badges()).toEqual(['N', 'P', 'P']);
  });

  it('refuses to start on an empty board', async () => {
    setCounts({ x: 0, y: 0, z: 0 });
    query<HTMLButtonElement>('#start').click();
    expect(query<HTMLDivElement>('#message').textContent).toMatch(/empty board/);
    expect(query<HTMLInputElement>('#setup-x').disabled).toBe(false);
  });

  it('lets the engine open when engine-first is set', async () => {
    query<HTMLInputElement>('#setup-engine-first').checked = true;
    await startGame({ x: 2, y: 1, z: 2 });

    // Engine swept the middle; the outer runs now render as one merged group.
    expect(query<HTMLDivElement>('#status-line').textContent).toContain('(2, 0, 2)');
    const blocks = root.querySelectorAll<HTMLElement>('.block');
    expect(blocks).toHaveLength(1);
    expect(blocks[0].querySelectorAll('.stone')).toHaveLength(4);
  });
});

describe('human move flow', () => {
  it('rejects an illegal selection inline without changing state', async () => {
    await startGame({ x: 1, y: 1, z: 1 });
    const fetchCalls = (fetch as ReturnType<typeof vi.fn>).mock.calls.length;

    query<HTMLButtonElement>('[data-block="middle"]').click();
    const slider = query<HTMLInputElement>('#slider');
    slider.value = '1';
    query<HTMLButtonElement>('#slider-confirm').click();

    expect(query<HTMLDivElement>('#message').textContent).toMatch(/not a legal sweep/);
    expect(query<HTMLDivElement>('#status-line').textContent).toContain('(1, 1, 1)');
    expect((fetch as ReturnType<typeof vi.fn>).mock.calls.length).toBe(fetchCalls);
  });

  it('applies the sweep, the engine reply, and fresh badges', async () => {
    await startGame({ x: 1, y: 1, z: 1 });
    await sweep('left', 0);

    // Human to (0,1,1); engine replied (0,0,1); the one option left is the winning take-all.
    expect(query<HTMLDivElement>('#status-line').textContent).toContain('(0, 0, 1)');
    expect(badges()).toEqual(['P']);
  });

  it('runs a game to the result banner', async () => {
    await startGame({ x: 1, y: 1, z: 1 });
    await sweep('left', 0);
    await sweep('run', 0);

    expect(root.querySelectorAll('.block')).toHaveLength(0);
    expect(query<HTMLDivElement>('.banner').textContent).toBe('you won');
    expect(query<HTMLDivElement>('#status-line').textContent).toBe('you won');
    expect(query<HTMLDivElement>('#whatif').hidden).toBe(true);
  });
});

describe('undo', () => {
  it('rewinds the human sweep and the engine reply', async () => {
    await startGame({ x: 1, y: 1, z: 1 });
    await sweep('left', 0);
    expect(query<HTMLDivElement>('#status-line').textContent).toContain('(0, 0, 1)');

    query<HTMLButtonElement>('#undo').click();
    await idle();

    expect(query<HTMLDivElement>('#status-line').textContent).toContain('(1, 1, 1)');
    expect(badges()).toEqual(['N', 'P', 'P']);
  });

  it('stays disabled until the human has swept', async () => {
    expect(query<HTMLButtonElement>('#undo').disabled).toBe(true);
    await startGame({ x: 1, y: 1, z: 1 });
    expect(query<HTMLButtonElement>('#undo').disabled).toBe(true);
    await sweep('left', 0);
    expect(query<HTMLButtonElement>('#undo').disabled).toBe(false);
  });
});

describe('service degradation', () => {
  it('starts unbadged when the service is down and refuses submissions', async () => {
    (fetch as ReturnType<typeof vi.fn>).mockRejectedValue(new TypeError('fetch failed'));
    await startGame({ x: 1, y: 1, z: 1 });

    expect(query<HTMLDivElement>('#service-notice').hidden).toBe(false);
    const items = root.querySelectorAll('#whatif li');
    expect(items).toHaveLength(3);
    expect(root.querySelectorAll('#whatif .badge')).toHaveLength(0);

    await sweep('left', 0);
    expect(query<HTMLDivElement>('#message').textContent).toMatch(/cannot be submitted/);
    expect(query<HTMLDivElement>('#status-line').textContent).toContain('(1, 1, 1)');
  });

  it('holds the turn for the engine after a failed reply and recovers on retry', async () => {
    await startGame({ x: 1, y: 1, z: 1 });
    (fetch as ReturnType<typeof vi.fn>).mockRejectedValue(new TypeError('fetch failed'));
    await sweep('left', 0);

    // The human sweep landed but the engine reply did not.
    expect(query<HTMLDivElement>('#status-line').textContent).toContain('(0, 1, 1)');
    expect(query<HTMLDivElement>('#service-notice').hidden).toBe(false);

    await sweep('middle', 0);
    expect(query<HTMLDivElement>('#message').textContent).toMatch(/engine reply is pending/);
    expect(query<HTMLDivElement>('#status-line').textContent).toContain('(0, 1, 1)');

    (fetch as ReturnType<typeof vi.fn>).mockImplementation((url: string) => Promise.resolve(fakeService(url)));
    query<HTMLButtonElement>('#retry').click();
    await idle();

    expect(query<HTMLDivElement>('#service-notice').hidden).toBe(true);
    expect(query<HTMLDivElement>('#status-line').textContent).toContain('(0, 0, 1)');
    expect(badges()).toEqual(['P']);
  });
});

describe('hints toggle', () => {
  it('hides and reshows the what-if panel mid-game', async () => {
    await startGame({ x: 1, y: 1, z: 1 });
    expect(query<HTMLDivElement>('#whatif').hidden).toBe(false);

    const hints = query<HTMLInputElement>('#setup-hints');
    hints.checked = false;
    hints.dispatchEvent(new Event('change'));
    expect(query<HTMLDivElement>('#whatif').hidden).toBe(true);

    hints.checked = true;
    hints.dispatchEvent(new Event('change'));
    expect(query<HTMLDivElement>('#whatif').hidden).toBe(false);
    expect(badges()).toEqual(['N', 'P', 'P']);
  });
});
