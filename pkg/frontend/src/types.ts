// Payload types mirroring the mediation service's JSON bodies.
// The cockpit never recomputes scores: these types are its whole world.

export type Polarity = 'support' | 'attack';
export type ArgumentClass = 'goal' | 'pro' | 'con';
export type Provenance =
  | 'party'
  | 'mediator-opinion'
  | 'mediator-factual'
  | 'mediator-mandatory'
  | 'mediator-dispositive';

export interface ArgumentNode {
  id: string;
  text: string;
  class: ArgumentClass;
  provenance: Provenance;
  base_score: number;
}

export interface RelationEdge {
  source: string;
  target: string;
  polarity: Polarity;
  weight: number;
}

export interface FrameworkDocument {
  party_label: string;
  arguments: ArgumentNode[];
  relations: RelationEdge[];
}

export interface PersuasiveEntry {
  argument: ArgumentNode;
  known_relations?: RelationEdge[];
  norm_priority?: number;
}

export interface MoveBody {
  stage_index: number;
  target_party: string;
  persuasive_id: string;
  relation: RelationEdge;
}

export interface SessionDocument {
  version: string;
  frameworks: FrameworkDocument[];
  config: {
    variable_class: 'BUV' | 'BJV' | 'CUV' | 'CJV';
    roles: Record<string, string>;
    k?: number;
    x?: number;
    y?: number;
    floors?: Record<string, number>;
    bjv_literal_distance?: boolean;
  };
  persuasive_sets: Record<string, PersuasiveEntry[]>;
  ledger: MoveBody[];
}

export interface ConstraintFiring {
  constraint: 'C1' | 'C2';
  target: string;
  trigger: string;
}

export interface EvaluationPayload {
  scores: Record<string, number>;
  constraint_trace: ConstraintFiring[];
}

export interface SnapshotPayload {
  stage_index: number;
  evaluations: Record<string, EvaluationPayload>;
  goal_scores: Record<string, number>;
  values: Record<string, number>;
  distance: number;
  consensus: boolean;
}

export interface SessionPayload {
  session_id: string;
  document: SessionDocument;
  snapshots: SnapshotPayload[];
}

export interface TrajectoryRowPayload {
  stage: number;
  goal_scores: Record<string, number>;
  values: Record<string, number>;
  distance: number;
  consensus: boolean;
}
