import { fixed6 } from './format';
import { edgeColor, edgeWidth, layeredLayout } from './layout';
import type {
  FrameworkDocument,
  PersuasiveEntry,
  Provenance,
  SessionDocument,
  SessionPayload,
  SnapshotPayload,
  TrajectoryRowPayload,
} from './types';

// The view model is a pure projection of service payloads: every number in
// it is a service value run through fixed6, never a client-side computation.

export interface NodeView {
  id: string;
  text: string;
  kind: 'goal' | 'pro' | 'con';
  badge: string;
  locked: boolean;
  baseScore: string;
  score: string;
  column: number;
  row: number;
}

export interface EdgeView {
  source: string;
  target: string;
  polarity: 'support' | 'attack';
  weight: string;
  color: string;
  width: number;
}

export interface GraphView {
  party: string;
  role: string;
  goalScore: string;
  mappedValue: string;
  nodes: NodeView[];
  edges: EdgeView[];
}

export interface TrajectoryRowView {
  stage: number;
  distance: string;
  consensus: boolean;
  values: Record<string, string>;
  goalScores: Record<string, string>;
}

export interface BannerView {
  consensus: boolean;
  distance: string;
  text: string;
}

export interface ViewModel {
  sessionId: string;
  stage: number;
  graphs: GraphView[];
  banner: BannerView;
}

const BADGES: Record<Provenance, string> = {
  party: '',
  'mediator-opinion': 'opinion',
  'mediator-factual': 'fact',
  'mediator-mandatory': 'mandatory norm',
  'mediator-dispositive': 'dispositive norm',
};

export function provenanceBadge(provenance: Provenance): string {
  return BADGES[provenance];
}

export function isLocked(provenance: Provenance): boolean {
  return provenance === 'mediator-factual' || provenance === 'mediator-mandatory';
}

export function snapshotBanner(snapshot: SnapshotPayload): BannerView {
  return {
    consensus: snapshot.consensus,
    distance: fixed6(snapshot.distance),
    text: snapshot.consensus
      ? `Consensus reached (distance ${fixed6(snapshot.distance)})`
      : `Still in dispute, distance ${fixed6(snapshot.distance)}`,
  };
}

/**
 * The document stores the stage-0 frameworks plus the move ledger; the graph
 * on screen is the ledger folded into them. Purely structural: argument
 * metadata comes from the persuasive catalogue, scores from the snapshot.
 */
export function currentFrameworks(document: SessionDocument): FrameworkDocument[] {
  const byId = new Map<string, PersuasiveEntry>();
  for (const entries of Object.values(document.persuasive_sets)) {
    for (const entry of entries) byId.set(entry.argument.id, entry);
  }
  return document.frameworks.map((framework) => {
    const grown: FrameworkDocument = {
      party_label: framework.party_label,
      arguments: [...framework.arguments],
      relations: [...framework.relations],
    };
    for (const move of document.ledger) {
      if (move.target_party !== framework.party_label) continue;
      const entry = byId.get(move.persuasive_id);
      if (entry) grown.arguments.push(entry.argument);
      grown.relations.push(move.relation);
    }
    return grown;
  });
}

export function buildViewModel(payload: SessionPayload): ViewModel {
  const latest = payload.snapshots[payload.snapshots.length - 1];
  const graphs = currentFrameworks(payload.document).map((framework) => {
    const party = framework.party_label;
    const evaluation = latest.evaluations[party];
    const positions = layeredLayout(framework);
    const nodes: NodeView[] = framework.arguments.map((argument) => {
      const position = positions.get(argument.id) ?? { column: 0, row: 0 };
      return {
        id: argument.id,
        text: argument.text,
        kind: argument.class,
        badge: provenanceBadge(argument.provenance),
        locked: isLocked(argument.provenance),
        baseScore: fixed6(argument.base_score),
        score: fixed6(evaluation.scores[argument.id]),
        column: position.column,
        row: position.row,
      };
    });
    const edges: EdgeView[] = framework.relations.map((relation) => ({
      source: relation.source,
      target: relation.target,
      polarity: relation.polarity,
      weight: fixed6(relation.weight),
      color: edgeColor(relation.polarity),
      width: edgeWidth(relation.weight),
    }));
    return {
      party,
      role: payload.document.config.roles[party] ?? '',
      goalScore: fixed6(latest.goal_scores[party]),
      mappedValue: fixed6(latest.values[party]),
      nodes,
      edges,
    };
  });
  return {
    sessionId: payload.session_id,
    stage: latest.stage_index,
    graphs,
    banner: snapshotBanner(latest),
  };
}

export interface PersuasiveGroups {
  opinion: PersuasiveEntry[];
  factual: PersuasiveEntry[];
  mandatory: PersuasiveEntry[];
  dispositive: PersuasiveEntry[];
}

/** Catalogue for one party, grouped by argument class, minus already-played items. */
export function groupPersuasive(payload: SessionPayload, party: string): PersuasiveGroups {
  const played = new Set(
    payload.document.ledger
      .filter((move) => move.target_party === party)
      .map((move) => move.persuasive_id)
  );
  const groups: PersuasiveGroups = { opinion: [], factual: [], mandatory: [], dispositive: [] };
  for (const entry of payload.document.persuasive_sets[party] ?? []) {
    if (played.has(entry.argument.id)) continue;
    switch (entry.argument.provenance) {
      case 'mediator-opinion':
        groups.opinion.push(entry);
        break;
      case 'mediator-factual':
        groups.factual.push(entry);
        break;
      case 'mediator-mandatory':
        groups.mandatory.push(entry);
        break;
      case 'mediator-dispositive':
        groups.dispositive.push(entry);
        break;
      default:
        break;
    }
  }
  return groups;
}

export interface ComparisonRow {
  label: string;
  current: string;
  hypothetical: string;
  changed: boolean;
}

/** Side-by-side rows for the preview pane: current stage vs what-if result. */
export function compareSnapshots(
  current: SnapshotPayload,
  preview: SnapshotPayload
): ComparisonRow[] {
  const rows: ComparisonRow[] = [];
  const parties = Object.keys(current.goal_scores).sort();
  for (const party of parties) {
    rows.push({
      label: `SF(goal) ${party}`,
      current: fixed6(current.goal_scores[party]),
      hypothetical: fixed6(preview.goal_scores[party]),
      changed: fixed6(current.goal_scores[party]) !== fixed6(preview.goal_scores[party]),
    });
    rows.push({
      label: `value ${party}`,
      current: fixed6(current.values[party]),
      hypothetical: fixed6(preview.values[party]),
      changed: fixed6(current.values[party]) !== fixed6(preview.values[party]),
    });
  }
  rows.push({
    label: 'distance',
    current: fixed6(current.distance),
    hypothetical: fixed6(preview.distance),
    changed: fixed6(current.distance) !== fixed6(preview.distance),
  });
  rows.push({
    label: 'consensus',
    current: String(current.consensus),
    hypothetical: String(preview.consensus),
    changed: current.consensus !== preview.consensus,
  });
  return rows;
}

export interface ChartPoint {
  stage: number;
  distance: number;
  consensus: boolean;
}

export interface TrajectoryChart {
  points: ChartPoint[];
  thresholdLine: number; // consensus is exactly distance 0
}

export function trajectoryChart(rows: TrajectoryRowPayload[]): TrajectoryChart {
  return {
    points: rows.map((row) => ({
      stage: row.stage,
      distance: row.distance,
      consensus: row.consensus,
    })),
    thresholdLine: 0,
  };
}

export function trajectoryRows(rows: TrajectoryRowPayload[]): TrajectoryRowView[] {
  return rows.map((row) => ({
    stage: row.stage,
    distance: fixed6(row.distance),
    consensus: row.consensus,
    values: Object.fromEntries(
      Object.entries(row.values).map(([party, value]) => [party, fixed6(value)])
    ),
    goalScores: Object.fromEntries(
      Object.entries(row.goal_scores).map(([party, value]) => [party, fixed6(value)])
    ),
  }));
}
