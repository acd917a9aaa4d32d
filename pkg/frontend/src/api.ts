import type {
  MoveBody,
  SessionPayload,
  SnapshotPayload,
  TrajectoryRowPayload,
} from './types';

export class ServiceError extends Error {
  constructor(
    readonly status: number,
    message: string
  ) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin typed client over the mediation service endpoints. */
export class CockpitClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init)
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    const body = await response.json().catch(() => ({}));
    if (!response.ok) {
      // surface the violated invariant verbatim
      const message =
        typeof body === 'object' && body !== null && 'error' in body
          ? String((body as { error: unknown }).error)
          : `request failed with status ${response.status}`;
      throw new ServiceError(response.status, message);
    }
    return body as T;
  }

  async createSession(documentText: string): Promise<string> {
    const created = await this.request<{ session_id: string }>('/sessions', {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: documentText,
    });
    return created.session_id;
  }

  getSession(sessionId: string): Promise<SessionPayload> {
    return this.request(`/sessions/${sessionId}`);
  }

  move(sessionId: string, move: MoveBody): Promise<SnapshotPayload> {
    return this.request(`/sessions/${sessionId}/moves`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(move),
    });
  }

  whatIf(sessionId: string, move: MoveBody): Promise<SnapshotPayload> {
    return this.request(`/sessions/${sessionId}/whatif`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(move),
    });
  }

  undo(sessionId: string): Promise<{ stage: number; snapshot: SnapshotPayload }> {
    return this.request(`/sessions/${sessionId}/undo`, { method: 'POST' });
  }

  async trajectory(sessionId: string): Promise<TrajectoryRowPayload[]> {
    const payload = await this.request<{ rows: TrajectoryRowPayload[] }>(
      `/sessions/${sessionId}/trajectory`
    );
    return payload.rows;
  }
}
