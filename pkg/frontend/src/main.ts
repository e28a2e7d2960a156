/** Page wiring: one game session against the engine, served by the analysis API. */

import { ApiClient, ApiError } from './api';
import { renderBoard, renderWhatif, whatifEntries } from './board';
import type { BlockId, GameSession } from './session';
import {
  applyEngineMove,
  applyHumanMove,
  blockCount,
  blockDestination,
  createSession,
  describeStatus,
  IllegalMoveError,
  legalMoves,
  nextMover,
  setHints,
  undoMove,
} from './session';
import type { AnalysisResponse, Convention, Position } from './types';

export interface AppConfig {
  /** Analysis service origin; empty string targets the page's own origin. */
  baseUrl?: string;
}

const TEMPLATE = `
  <fieldset class="setup" id="setup">
    <label>left <input id="setup-x" type="number" min="0" value="5"></label>
    <label>middle <input id="setup-y" type="number" min="0" value="3"></label>
    <label>right <input id="setup-z" type="number" min="0" value="4"></label>
    <label>rules
      <select id="setup-convention">
        <option value="normal">normal (last sweep wins)</option>
        <option value="misere">misere (last sweep loses)</option>
      </select>
    </label>
    <label><input id="setup-engine-first" type="checkbox"> engine moves first</label>
    <label><input id="setup-hints" type="checkbox" checked> show hints</label>
    <button id="start" type="button">start game</button>
  </fieldset>
  <div id="status-line" class="status-line"></div>
  <div id="board" class="board"></div>
  <div id="slider-panel" class="slider-panel" hidden>
    <span id="slider-label"></span>
    <input id="slider" type="range" min="0" value="0">
    <span id="slider-value"></span>
    <button id="slider-confirm" type="button">sweep</button>
    <button id="slider-cancel" type="button">cancel</button>
  </div>
  <div id="message" class="message"></div>
  <div id="service-notice" class="service-notice" hidden>
    service unreachable, hints degraded
    <button id="retry" type="button">retry</button>
  </div>
  <div id="whatif" class="whatif" hidden></div>
  <div class="controls">
    <button id="undo" type="button">undo</button>
    <button id="new-game" type="button">new game</button>
  </div>
`;

export function initApp(root: HTMLElement, config: AppConfig = {}): void {
  const api = new ApiClient(config.baseUrl ?? '');
  root.innerHTML = TEMPLATE;

  const el = <T extends HTMLElement>(id: string): T => {
    const found = root.querySelector<T>(`#${id}`);
    if (!found) throw new Error(`missing element #${id}`);
    return found;
  };
  const inputX = el<HTMLInputElement>('setup-x');
  const inputY = el<HTMLInputElement>('setup-y');
  const inputZ = el<HTMLInputElement>('setup-z');
  const selectConvention = el<HTMLSelectElement>('setup-convention');
  const checkEngineFirst = el<HTMLInputElement>('setup-engine-first');
  const checkHints = el<HTMLInputElement>('setup-hints');
  const buttonStart = el<HTMLButtonElement>('start');
  const statusLine = el<HTMLDivElement>('status-line');
  const boardEl = el<HTMLDivElement>('board');
  const sliderPanel = el<HTMLDivElement>('slider-panel');
  const sliderLabel = el<HTMLSpanElement>('slider-label');
  const slider = el<HTMLInputElement>('slider');
  const sliderValue = el<HTMLSpanElement>('slider-value');
  const buttonConfirm = el<HTMLButtonElement>('slider-confirm');
  const buttonCancel = el<HTMLButtonElement>('slider-cancel');
  const messageEl = el<HTMLDivElement>('message');
  const serviceNotice = el<HTMLDivElement>('service-notice');
  const buttonRetry = el<HTMLButtonElement>('retry');
  const whatifEl = el<HTMLDivElement>('whatif');
  const buttonUndo = el<HTMLButtonElement>('undo');
  const buttonNewGame = el<HTMLButtonElement>('new-game');

  let session: GameSession | null = null;
  let engineFirst = false;
  let analysis: AnalysisResponse | null = null;
  let serviceDown = false;
  let selectedBlock: BlockId | null = null;
  let busy = false;
  let message = '';

  /** Serializes API work: at most one request chain in flight, inputs locked meanwhile. */
  async function run(work: () => Promise<void>): Promise<void> {
    if (busy) return;
    busy = true;
    render();
    try {
      await work();
    } finally {
      busy = false;
      render();
    }
  }

  async function refreshAnalysis(): Promise<void> {
    if (!session || session.status !== 'ongoing') {
      analysis = null;
      return;
    }
    try {
      analysis = await api.analyze(session.position, session.convention);
      serviceDown = false;
    } catch (err) {
      analysis = null;
      if (err instanceof ApiError) {
        serviceDown = false;
        message = err.message;
      } else {
        serviceDown = true;
      }
    }
  }

  async function engineStep(): Promise<void> {
    if (!session || session.status !== 'ongoing') return;
    const reply = await api.engineMove(session.position, session.convention);
    session = applyEngineMove(session, reply.move);
  }

  /** Plays the engine reply when it is the engine's turn, then re-analyzes. */
  async function settle(): Promise<void> {
    if (session && session.status === 'ongoing' && nextMover(session, engineFirst) === 'engine') {
      try {
        await engineStep();
      } catch (err) {
        serviceDown = !(err instanceof ApiError);
        message = err instanceof ApiError ? err.message : 'the engine reply failed, retry when the service is back';
      }
    }
    await refreshAnalysis();
  }

  function startGame(): void {
    const counts = [inputX, inputY, inputZ].map((input) => Number(input.value));
    if (!counts.every((n) => Number.isInteger(n) && n >= 0)) {
      message = 'stone counts must be non-negative integers';
      render();
      return;
    }
    const [x, y, z] = counts;
    try {
      session = createSession({ x, y, z }, selectConvention.value as Convention, checkHints.checked);
    } catch (err) {
      message = err instanceof Error ? err.message : String(err);
      render();
      return;
    }
    engineFirst = checkEngineFirst.checked;
    analysis = null;
    selectedBlock = null;
    message = '';
    void run(settle);
  }

  function confirmMove(): void {
    if (!session || selectedBlock === null) return;
    if (nextMover(session, engineFirst) !== 'human') {
      message = 'the engine reply is pending, press retry';
      render();
      return;
    }
    const candidate: Position = blockDestination(session.position, selectedBlock, slider.valueAsNumber);
    if (analysis === null) {
      message = 'service unreachable, moves cannot be submitted';
      render();
      return;
    }
    let advanced: GameSession;
    try {
      advanced = applyHumanMove(
        session,
        candidate,
        analysis.moves.map((m) => m.to),
      );
    } catch (err) {
      if (err instanceof IllegalMoveError) {
        message = err.message;
        render();
        return;
      }
      throw err;
    }
    session = advanced;
    analysis = null;
    selectedBlock = null;
    message = '';
    void run(settle);
  }

  function selectBlock(block: BlockId): void {
    if (!session || busy || session.status !== 'ongoing') return;
    selectedBlock = block;
    const count = blockCount(session.position, block);
    slider.max = String(count - 1);
    slider.value = String(count - 1);
    message = '';
    render();
  }

  function undo(): void {
    if (!session || busy) return;
    const rewound = undoMove(session);
    if (rewound === session) return;
    session = rewound;
    analysis = null;
    selectedBlock = null;
    message = '';
    void run(refreshAnalysis);
  }

  function newGame(): void {
    if (busy) return;
    session = null;
    analysis = null;
    selectedBlock = null;
    message = '';
    render();
  }

  function statusText(): string {
    if (!session) return 'set up a game';
    if (session.status !== 'ongoing') return describeStatus(session);
    const g = session.position;
    const turn = busy ? 'engine is thinking' : 'your turn';
    return `${session.convention} play, position (${g.x}, ${g.y}, ${g.z}), ${turn}`;
  }

  function render(): void {
    const playing = session !== null;
    const ongoing = session !== null && session.status === 'ongoing';
    const interactive = ongoing && !busy;

    // Convention and starting layout lock for the duration of a game.
    for (const input of [inputX, inputY, inputZ]) input.disabled = playing;
    selectConvention.disabled = playing;
    checkEngineFirst.disabled = playing;
    buttonStart.disabled = playing || busy;

    statusLine.textContent = statusText();

    if (session) {
      renderBoard(boardEl, session.position, {
        selected: selectedBlock,
        interactive,
        banner: session.status === 'ongoing' ? null : describeStatus(session),
        onSelect: selectBlock,
      });
    } else {
      boardEl.textContent = '';
    }

    const picking = interactive && selectedBlock !== null && session !== null;
    sliderPanel.hidden = !picking;
    if (picking && session && selectedBlock) {
      const dest = blockDestination(session.position, selectedBlock, slider.valueAsNumber);
      sliderLabel.textContent = `${selectedBlock} block down to ${slider.value} stone${slider.value === '1' ? '' : 's'}`;
      sliderValue.textContent = `(${dest.x}, ${dest.y}, ${dest.z})`;
    }

    messageEl.textContent = message;
    serviceNotice.hidden = !(serviceDown && playing);

    if (session && session.hints && ongoing) {
      const entries = whatifEntries(analysis ? analysis.moves : null, legalMoves(session.position));
      renderWhatif(whatifEl, entries, true);
    } else {
      renderWhatif(whatifEl, [], false);
    }

    buttonUndo.disabled = busy || !session || !session.history.some((entry) => entry.mover === 'human');
    buttonNewGame.disabled = busy || !session;
  }

  buttonStart.addEventListener('click', startGame);
  buttonConfirm.addEventListener('click', confirmMove);
  buttonCancel.addEventListener('click', () => {
    selectedBlock = null;
    render();
  });
  slider.addEventListener('input', render);
  buttonRetry.addEventListener('click', () => void run(settle));
  buttonUndo.addEventListener('click', undo);
  buttonNewGame.addEventListener('click', newGame);
  checkHints.addEventListener('change', () => {
    if (session) session = setHints(session, checkHints.checked);
    render();
  });

  render();
}
