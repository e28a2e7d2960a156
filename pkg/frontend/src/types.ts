/** Wire types shared with the analysis service. Field names match its JSON exactly. */

export type Convention = 'normal' | 'misere';

export type Outcome = 'P' | 'N';

export interface Position {
  x: number;
  y: number;
  z: number;
}

export interface MoveOption {
  to: Position;
  outcome: Outcome;
}

export interface AnalysisResponse {
  position: Position;
  convention: Convention;
  outcome: Outcome;
  auxValue: number;
  moves: MoveOption[];
  winningMove: Position | null;
}

export interface EngineMoveResponse {
  move: Position;
}

export interface HealthResponse {
  status: string;
  builtTables: string[];
  maxN: number;
}

export function samePosition(a: Position, b: Position): boolean {
  return a.x === b.x && a.y === b.y && a.z === b.z;
}

export function stoneCount(g: Position): number {
  return g.x + g.y + g.z;
}

export function isTerminal(g: Position): boolean {
  return stoneCount(g) === 0;
}
