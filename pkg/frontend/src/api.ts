/** Thin fetch client for the three service endpoints. */

import type { AnalysisResponse, Convention, EngineMoveResponse, HealthResponse, Position } from './types';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

function positionQuery(g: Position, convention: Convention): string {
  const params = new URLSearchParams({
    x: String(g.x),
    y: String(g.y),
    z: String(g.z),
    convention,
  });
  return params.toString();
}

export class ApiClient {
  /** baseUrl '' means same-origin; otherwise e.g. 'http://127.0.0.1:8000'. */
  constructor(private readonly baseUrl: string = '') {}

  private async get<T>(path: string): Promise<T> {
    const response = await fetch(this.baseUrl + path, { headers: { Accept: 'application/json' } });
    if (!response.ok) {
      let detail = response.statusText;
      try {
        const body = await response.json();
        if (typeof body?.detail === 'string') detail = body.detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  analyze(g: Position, convention: Convention): Promise<AnalysisResponse> {
    return this.get<AnalysisResponse>(`/api/analyze?${positionQuery(g, convention)}`);
  }

  engineMove(g: Position, convention: Convention): Promise<EngineMoveResponse> {
    return this.get<EngineMoveResponse>(`/api/engine-move?${positionQuery(g, convention)}`);
  }

  health(): Promise<HealthResponse> {
    return this.get<HealthResponse>('/api/health');
  }
}
