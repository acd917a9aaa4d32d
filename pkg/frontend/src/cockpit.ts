import { CockpitClient, ServiceError } from './api';
import { clampWeight } from './format';
import type { MoveBody, Polarity, SessionPayload, SnapshotPayload } from './types';

export interface MoveDraft {
  party: string | null;
  persuasiveId: string | null;
  target: string | null;
  polarity: Polarity;
  weight: number;
}

export interface CockpitState {
  sessionId: string | null;
  payload: SessionPayload | null;
  draft: MoveDraft;
  preview: SnapshotPayload | null;
  error: string | null;
}

const EMPTY_DRAFT: MoveDraft = {
  party: null,
  persuasiveId: null,
  target: null,
  polarity: 'attack',
  weight: 0.5,
};

/**
 * Drives the mediator's flows against the service. All evaluation lives
 * server-side: after every commit or undo the controller re-fetches the
 * session instead of patching local state.
 */
export class CockpitController {
  state: CockpitState = {
    sessionId: null,
    payload: null,
    draft: { ...EMPTY_DRAFT },
    preview: null,
    error: null,
  };

  constructor(private readonly client: CockpitClient) {}

  private async guard<T>(action: () => Promise<T>): Promise<T | null> {
    this.state.error = null;
    try {
      return await action();
    } catch (error) {
      this.state.error =
        error instanceof ServiceError ? error.message : String(error);
      return null;
    }
  }

  private async refresh(): Promise<void> {
    if (!this.state.sessionId) return;
    this.state.payload = await this.client.getSession(this.state.sessionId);
  }

  get currentSnapshot(): SnapshotPayload | null {
    const snapshots = this.state.payload?.snapshots;
    return snapshots && snapshots.length > 0 ? snapshots[snapshots.length - 1] : null;
  }

  get nextStageIndex(): number {
    return (this.state.payload?.document.ledger.length ?? 0) + 1;
  }

  /** Upload a session document and adopt the created session. */
  async loadDocument(documentText: string): Promise<void> {
    await this.guard(async () => {
      const sessionId = await this.client.createSession(documentText);
      this.state.sessionId = sessionId;
      this.state.draft = { ...EMPTY_DRAFT };
      this.state.preview = null;
      await this.refresh();
    });
  }

  /** Attach to an existing session by id. */
  async openSession(sessionId: string): Promise<void> {
    await this.guard(async () => {
      this.state.sessionId = sessionId;
      this.state.draft = { ...EMPTY_DRAFT };
      this.state.preview = null;
      await this.refresh();
    });
  }

  selectParty(party: string): void {
    this.state.draft = { ...EMPTY_DRAFT, party };
    this.state.preview = null;
  }

  selectPersuasive(persuasiveId: string): void {
    this.state.draft.persuasiveId = persuasiveId;
    this.state.preview = null;
  }

  composeRelation(target: string, polarity: Polarity, weight: number): void {
    this.state.draft.target = target;
    this.state.draft.polarity = polarity;
    this.state.draft.weight = clampWeight(weight);
    this.state.preview = null;
  }

  private draftMove(): MoveBody {
    const { party, persuasiveId, target, polarity, weight } = this.state.draft;
    if (!party || !persuasiveId || !target) {
      throw new ServiceError(0, 'move draft is incomplete');
    }
    return {
      stage_index: this.nextStageIndex,
      target_party: party,
      persuasive_id: persuasiveId,
      relation: { source: persuasiveId, target, polarity, weight },
    };
  }

  /** Ask the service what the drafted move would do; commits nothing. */
  async preview(): Promise<SnapshotPayload | null> {
    return this.guard(async () => {
      const sessionId = this.requireSession();
      const snapshot = await this.client.whatIf(sessionId, this.draftMove());
      this.state.preview = snapshot;
      return snapshot;
    });
  }

  /** Commit the drafted move, then re-fetch the whole session. */
  async commit(): Promise<SnapshotPayload | null> {
    return this.guard(async () => {
      const sessionId = this.requireSession();
      const snapshot = await this.client.move(sessionId, this.draftMove());
      this.state.preview = null;
      this.state.draft = { ...EMPTY_DRAFT, party: this.state.draft.party };
      await this.refresh();
      return snapshot;
    });
  }

  async undo(): Promise<void> {
    await this.guard(async () => {
      const sessionId = this.requireSession();
      await this.client.undo(sessionId);
      this.state.preview = null;
      await this.refresh();
    });
  }

  async trajectory() {
    return this.guard(() => this.client.trajectory(this.requireSession()));
  }

  private requireSession(): string {
    if (!this.state.sessionId) {
      throw new ServiceError(0, 'no session loaded');
    }
    return this.state.sessionId;
  }
}
