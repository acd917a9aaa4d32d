// Hand-built payloads for unit tests. The numbers are deliberately treated
// as opaque: the cockpit must render whatever the service sends.

import type { SessionPayload, SnapshotPayload } from '../src/types';

export function stageZeroSnapshot(): SnapshotPayload {
  return {
    stage_index: 0,
    evaluations: {
      supermarket: {
        scores: { theta_s: 1.0, b1: 0.9, b2: 0.9, b3: 0.7, b4: 0.9, b5: 0.7 },
        constraint_trace: [],
      },
      zhang: {
        scores: { theta_z: 1.0, a1: 0.963, a2: 0.7, a3: 0.9 },
        constraint_trace: [],
      },
    },
    goal_scores: { supermarket: 1.0, zhang: 1.0 },
    values: { supermarket: 0.2, zhang: 1.0 },
    distance: 0.8,
    consensus: false,
  };
}

export function stageOneSnapshot(): SnapshotPayload {
  const snapshot = stageZeroSnapshot();
  return {
    ...snapshot,
    stage_index: 1,
    evaluations: {
      ...snapshot.evaluations,
      supermarket: {
        scores: { ...snapshot.evaluations.supermarket.scores, theta_s: 0.75, p6: 1.0 },
        constraint_trace: [],
      },
    },
    goal_scores: { supermarket: 0.75, zhang: 1.0 },
    values: { supermarket: 0.4, zhang: 1.0 },
    distance: 0.6,
  };
}

export function sessionPayload(): SessionPayload {
  return {
    session_id: 'abc123',
    document: {
      version: '1',
      frameworks: [
        {
          party_label: 'supermarket',
          arguments: [
            { id: 'theta_s', text: '20% responsibility.', class: 'goal', provenance: 'party', base_score: 1.0 },
            { id: 'b1', text: 'Good weather.', class: 'pro', provenance: 'party', base_score: 0.9 },
            { id: 'b2', text: 'Sign posted.', class: 'pro', provenance: 'party', base_score: 0.9 },
            { id: 'b3', text: 'Duty of care.', class: 'pro', provenance: 'party', base_score: 0.7 },
            { id: 'b4', text: 'Fell outside.', class: 'pro', provenance: 'party', base_score: 0.9 },
            { id: 'b5', text: 'Not pushed.', class: 'pro', provenance: 'party', base_score: 0.7 },
          ],
          relations: [
            { source: 'b1', target: 'theta_s', polarity: 'support', weight: 0.5 },
            { source: 'b2', target: 'theta_s', polarity: 'support', weight: 0.7 },
            { source: 'b3', target: 'theta_s', polarity: 'support', weight: 0.7 },
            { source: 'b4', target: 'theta_s', polarity: 'support', weight: 0.9 },
            { source: 'b5', target: 'theta_s', polarity: 'support', weight: 0.4 },
          ],
        },
        {
          party_label: 'zhang',
          arguments: [
            { id: 'theta_z', text: 'Full responsibility.', class: 'goal', provenance: 'party', base_score: 1.0 },
            { id: 'a1', text: 'Wet floor.', class: 'pro', provenance: 'party', base_score: 0.9 },
            { id: 'a2', text: 'Not cleaned.', class: 'pro', provenance: 'party', base_score: 0.7 },
            { id: 'a3', text: 'No handrails.', class: 'pro', provenance: 'party', base_score: 0.9 },
          ],
          relations: [
            { source: 'a1', target: 'theta_z', polarity: 'support', weight: 0.9 },
            { source: 'a2', target: 'a1', polarity: 'support', weight: 0.9 },
            { source: 'a3', target: 'theta_z', polarity: 'support', weight: 0.5 },
          ],
        },
      ],
      config: {
        variable_class: 'CUV',
        roles: { supermarket: 'payer', zhang: 'payee' },
        k: 0.5,
        x: 0.2,
        y: 1.0,
      },
      persuasive_sets: {
        supermarket: [
          {
            argument: {
              id: 'p6',
              text: 'Partly liable for safety failure.',
              class: 'con',
              provenance: 'mediator-mandatory',
              base_score: 1.0,
            },
            known_relations: [{ source: 'p6', target: 'theta_s', polarity: 'attack', weight: 0.5 }],
            norm_priority: 1,
          },
          {
            argument: {
              id: 'p4',
              text: 'Stairs are part of the premises.',
              class: 'con',
              provenance: 'mediator-opinion',
              base_score: 0.8,
            },
          },
        ],
        zhang: [],
      },
      ledger: [],
    },
    snapshots: [stageZeroSnapshot()],
  };
}
