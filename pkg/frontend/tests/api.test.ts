import { afterEach, describe, expect, it, vi } from 'vitest';

import { ApiClient, ApiError } from '../src/api';
import type { AnalysisResponse } from '../src/types';

const SAMPLE: AnalysisResponse = {
  position: { x: 1, y: 1, z: 1 },
  convention: 'normal',
  outcome: 'N',
  auxValue: 0,
  moves: [{ to: { x: 1, y: 0, z: 1 }, outcome: 'N' }],
  winningMove: { x: 0, y: 1, z: 1 },
};

function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { 'Content-Type': 'application/json' },
  });
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe('ApiClient', () => {
  it('queries analyze with the position and convention', async () => {
    const fetchMock = vi.fn().mockResolvedValue(jsonResponse(200, SAMPLE));
    vi.stubGlobal('fetch', fetchMock);
    const client = new ApiClient('http://svc:9000');

    const result = await client.analyze({ x: 1, y: 1, z: 1 }, 'normal');

    expect(result).toEqual(SAMPLE);
    expect(fetchMock).toHaveBeenCalledTimes(1);
    expect(fetchMock.mock.calls[0][0]).toBe('http://svc:9000/api/analyze?x=1&y=1&z=1&convention=normal');
  });

  it('queries engine-move and health on their paths', async () => {
    const fetchMock = vi
      .fn()
      .mockResolvedValueOnce(jsonResponse(200, { move: { x: 0, y: 1, z: 1 } }))
      .mockResolvedValueOnce(jsonResponse(200, { status: 'ready', builtTables: [], maxN: 512 }));
    vi.stubGlobal('fetch', fetchMock);
    const client = new ApiClient();

    await client.engineMove({ x: 1, y: 1, z: 1 }, 'misere');
    await client.health();

    expect(fetchMock.mock.calls[0][0]).toBe('/api/engine-move?x=1&y=1&z=1&convention=misere');
    expect(fetchMock.mock.calls[1][0]).toBe('/api/health');
  });

  it('raises ApiError with the detail from an error body', async () => {
    vi.stubGlobal(
      'fetch',
      vi.fn().mockImplementation(() =>
        Promise.resolve(jsonResponse(422, { detail: 'x = 900 exceeds this server capacity' })),
      ),
    );
    const client = new ApiClient();

    const failure = client.analyze({ x: 900, y: 0, z: 0 }, 'normal');

    await expect(failure).rejects.toThrowError(ApiError);
    await expect(client.analyze({ x: 900, y: 0, z: 0 }, 'normal')).rejects.toMatchObject({
      status: 422,
      message: 'x = 900 exceeds this server capacity',
    });
  });

  it('falls back to the status text for a non-JSON error body', async () => {
    vi.stubGlobal(
      'fetch',
      vi.fn().mockResolvedValue(new Response('boom', { status: 502, statusText: 'Bad Gateway' })),
    );
    const client = new ApiClient();

    await expect(client.health()).rejects.toMatchObject({ status: 502, message: 'Bad Gateway' });
  });

  it('propagates network failures unchanged', async () => {
    vi.stubGlobal('fetch', vi.fn().mockRejectedValue(new TypeError('fetch failed')));
    const client = new ApiClient();

    await expect(client.health()).rejects.toThrowError(TypeError);
  });
});
