/** Client-side game session: history, status, and the move model.
 *
 * The session is a pure value; every transition returns a fresh object.
 * The current position is always the replay of the history from the
 * initial position, and the status is derived from terminality plus the
 * convention (last mover wins under normal play, loses under misere).
 */

import type { Convention, Position } from './types';
import { isTerminal, samePosition, stoneCount } from './types';

export type Mover = 'human' | 'engine';

export type Status = 'ongoing' | 'humanWon' | 'engineWon';

export interface HistoryEntry {
  mover: Mover;
  /** Position after the sweep. Positions are the whole game state, so this replays. */
  move: Position;
}

export interface GameSession {
  convention: Convention;
  initial: Position;
  position: Position;
  history: HistoryEntry[];
  status: Status;
  hints: boolean;
}

/** Thrown when a requested sweep is not on the allowed list; callers show it inline. */
export class IllegalMoveError extends Error {
  constructor(message: string) {
    super(message);
    this.name = 'IllegalMoveError';
  }
}

export function replay(initial: Position, history: HistoryEntry[]): Position {
  return history.length === 0 ? initial : history[history.length - 1].move;
}

function deriveStatus(position: Position, lastMover: Mover | null, convention: Convention): Status {
  if (!isTerminal(position)) return 'ongoing';
  if (lastMover === null) throw new Error('terminal position with empty history');
  const lastMoverWins = convention === 'normal';
  const humanMovedLast = lastMover === 'human';
  return humanMovedLast === lastMoverWins ? 'humanWon' : 'engineWon';
}

export function createSession(initial: Position, convention: Convention, hints: boolean): GameSession {
  if (initial.x < 0 || initial.y < 0 || initial.z < 0) {
    throw new Error('stone counts must be non-negative');
  }
  if (isTerminal(initial)) {
    throw new Error('a game cannot start on an empty board');
  }
  return { convention, initial, position: initial, history: [], status: 'ongoing', hints };
}

function extend(session: GameSession, mover: Mover, to: Position): GameSession {
  const history = [...session.history, { mover, move: to }];
  const position = replay(session.initial, history);
  return {
    ...session,
    history,
    position,
    status: deriveStatus(position, mover, session.convention),
  };
}

/**
 * Apply the human's sweep. `allowed` is the service's legal-move list for
 * the current position; anything outside it is rejected without touching
 * the session.
 */
export function applyHumanMove(session: GameSession, to: Position, allowed: Position[]): GameSession {
  if (session.status !== 'ongoing') {
    throw new IllegalMoveError('the game is over');
  }
  if (!allowed.some((g) => samePosition(g, to))) {
    throw new IllegalMoveError(`(${to.x}, ${to.y}, ${to.z}) is not a legal sweep from here`);
  }
  return extend(session, 'human', to);
}

/** Apply the engine's reply. The destination still has to be a legal sweep. */
export function applyEngineMove(session: GameSession, to: Position): GameSession {
  if (session.status !== 'ongoing') {
    throw new IllegalMoveError('the game is over');
  }
  if (!legalMoves(session.position).some((g) => samePosition(g, to))) {
    throw new IllegalMoveError(`engine reply (${to.x}, ${to.y}, ${to.z}) is not a legal sweep`);
  }
  return extend(session, 'engine', to);
}

/**
 * Take back the most recent human sweep together with any engine reply
 * after it, by replaying the shortened history. A session with no human
 * move yet comes back unchanged.
 */
export function undoMove(session: GameSession): GameSession {
  const history = [...session.history];
  while (history.length > 0 && history[history.length - 1].mover === 'engine') {
    history.pop();
  }
  if (history.length === 0) {
    return session;
  }
  history.pop();
  const position = replay(session.initial, history);
  const lastMover = history.length === 0 ? null : history[history.length - 1].mover;
  return {
    ...session,
    history,
    position,
    status: deriveStatus(position, lastMover, session.convention),
  };
}

export function setHints(session: GameSession, hints: boolean): GameSession {
  return { ...session, hints };
}

export function nextMover(session: GameSession, engineFirst: boolean): Mover {
  if (session.history.length === 0) {
    return engineFirst ? 'engine' : 'human';
  }
  return session.history[session.history.length - 1].mover === 'human' ? 'engine' : 'human';
}

/**
 * Legal sweeps in the engine's enumeration order: shrink the middle block,
 * then the left, then the right, each new count ascending. With no middle
 * block the two outer runs act as one, and a sweep may stop anywhere
 * inside it, so every strictly smaller single run is reachable.
 */
export function legalMoves(g: Position): Position[] {
  const out: Position[] = [];
  if (g.y > 0) {
    for (let y = 0; y < g.y; y++) out.push({ x: g.x, y, z: g.z });
    for (let x = 0; x < g.x; x++) out.push({ x, y: g.y, z: g.z });
    for (let z = 0; z < g.z; z++) out.push({ x: g.x, y: g.y, z });
  } else {
    const run = g.x + g.z;
    for (let t = 0; t < run; t++) out.push({ x: t, y: 0, z: 0 });
  }
  return out;
}

/** Blocks the player can click: the three colored groups, or the merged outer run. */
export type BlockId = 'left' | 'middle' | 'right' | 'run';

export function availableBlocks(g: Position): BlockId[] {
  if (isTerminal(g)) return [];
  if (g.y === 0) return ['run'];
  const blocks: BlockId[] = [];
  if (g.x > 0) blocks.push('left');
  blocks.push('middle');
  if (g.z > 0) blocks.push('right');
  return blocks;
}

export function blockCount(g: Position, block: BlockId): number {
  switch (block) {
    case 'left':
      return g.x;
    case 'middle':
      return g.y;
    case 'right':
      return g.z;
    case 'run':
      return g.x + g.z;
  }
}

/** Destination after sweeping `block` down to `newCount` stones. */
export function blockDestination(g: Position, block: BlockId, newCount: number): Position {
  switch (block) {
    case 'left':
      return { x: newCount, y: g.y, z: g.z };
    case 'middle':
      return { x: g.x, y: newCount, z: g.z };
    case 'right':
      return { x: g.x, y: g.y, z: newCount };
    case 'run':
      return { x: newCount, y: 0, z: 0 };
  }
}

export function describeStatus(session: GameSession): string {
  switch (session.status) {
    case 'ongoing':
      return `${stoneCount(session.position)} stones on the board`;
    case 'humanWon':
      return 'you won';
    case 'engineWon':
      return 'the engine won';
  }
}
