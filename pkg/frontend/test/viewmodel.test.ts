import { describe, expect, it } from 'vitest';

import { fixed6, clampWeight } from '../src/format';
import { layeredLayout, edgeColor, edgeWidth } from '../src/layout';
import {
  buildViewModel,
  compareSnapshots,
  currentFrameworks,
  groupPersuasive,
  snapshotBanner,
  trajectoryChart,
  trajectoryRows,
} from '../src/viewmodel';
import { renderGraph, renderTrajectoryChart } from '../src/render';
import { sessionPayload, stageOneSnapshot, stageZeroSnapshot } from './fixtures';

describe('formatting', () => {
  it('renders 6 decimal places', () => {
    expect(fixed6(0.75)).toBe('0.750000');
    expect(fixed6(1)).toBe('1.000000');
    expect(fixed6(0.6000000000000001)).toBe('0.600000');
  });

  it('clamps the weight slider to [0,1]', () => {
    expect(clampWeight(1.5)).toBe(1);
    expect(clampWeight(-0.2)).toBe(0);
    expect(clampWeight(0.37)).toBe(0.37);
    expect(clampWeight(Number.NaN)).toBe(0);
  });
});

describe('layout', () => {
  it('puts the goal on the right edge', () => {
    const framework = sessionPayload().document.frameworks[1]; // zhang
    const positions = layeredLayout(framework);
    const columns = [...positions.values()].map((p) => p.column);
    const goal = positions.get('theta_z')!;
    expect(goal.column).toBe(Math.max(...columns));
    // a2 feeds a1 feeds the goal: strictly increasing columns
    expect(positions.get('a2')!.column).toBeLessThan(positions.get('a1')!.column);
    expect(positions.get('a1')!.column).toBeLessThan(goal.column);
  });

  it('colors attacks red and supports green, width grows with weight', () => {
    expect(edgeColor('attack')).toBe('#c62828');
    expect(edgeColor('support')).toBe('#2e7d32');
    expect(edgeWidth(1)).toBeGreaterThan(edgeWidth(0.2));
  });
});

describe('view model', () => {
  it('is a pure projection of the payload, no recomputation', () => {
    const payload = sessionPayload();
    // plant an inconsistent score: the UI must render it verbatim
    payload.snapshots[0].evaluations.zhang.scores.a1 = 0.123456789;
    const model = buildViewModel(payload);
    const zhang = model.graphs.find((g) => g.party === 'zhang')!;
    const a1 = zhang.nodes.find((n) => n.id === 'a1')!;
    expect(a1.score).toBe('0.123457');
  });

  it('annotates nodes with provenance badges and locked base scores', () => {
    const payload = sessionPayload();
    payload.document.frameworks[0].arguments.push({
      id: 'p6',
      text: 'Partly liable.',
      class: 'con',
      provenance: 'mediator-mandatory',
      base_score: 1.0,
    });
    payload.snapshots[0].evaluations.supermarket.scores.p6 = 1.0;
    const model = buildViewModel(payload);
    const market = model.graphs.find((g) => g.party === 'supermarket')!;
    const p6 = market.nodes.find((n) => n.id === 'p6')!;
    expect(p6.badge).toBe('mandatory norm');
    expect(p6.locked).toBe(true);
    expect(p6.baseScore).toBe('1.000000');
  });

  it('carries mapped values, goal scores and the dispute banner', () => {
    const model = buildViewModel(sessionPayload());
    const market = model.graphs.find((g) => g.party === 'supermarket')!;
    expect(market.goalScore).toBe('1.000000');
    expect(market.mappedValue).toBe('0.200000');
    expect(market.role).toBe('payer');
    expect(model.banner.consensus).toBe(false);
    expect(model.banner.distance).toBe('0.800000');
  });

  it('folds the ledger into the displayed graphs', () => {
    const payload = sessionPayload();
    payload.document.ledger.push({
      stage_index: 1,
      target_party: 'supermarket',
      persuasive_id: 'p6',
      relation: { source: 'p6', target: 'theta_s', polarity: 'attack', weight: 0.5 },
    });
    payload.snapshots.push(stageOneSnapshot());
    const grown = currentFrameworks(payload.document);
    const market = grown.find((fw) => fw.party_label === 'supermarket')!;
    expect(market.arguments.some((a) => a.id === 'p6')).toBe(true);
    expect(market.relations.some((r) => r.source === 'p6' && r.polarity === 'attack')).toBe(true);
    // untouched party and the stage-0 document stay as served
    expect(grown.find((fw) => fw.party_label === 'zhang')!.arguments).toHaveLength(4);
    expect(payload.document.frameworks[0].arguments.some((a) => a.id === 'p6')).toBe(false);

    const model = buildViewModel(payload);
    const marketGraph = model.graphs.find((g) => g.party === 'supermarket')!;
    const p6 = marketGraph.nodes.find((n) => n.id === 'p6')!;
    expect(p6.score).toBe('1.000000');
    expect(p6.locked).toBe(true);
  });

  it('turns the banner positive exactly when the latest snapshot reports consensus', () => {
    const settled = { ...stageOneSnapshot(), distance: 0, consensus: true };
    const banner = snapshotBanner(settled);
    expect(banner.consensus).toBe(true);
    expect(banner.distance).toBe('0.000000');
    expect(banner.text).toContain('Consensus reached');
    expect(snapshotBanner(stageZeroSnapshot()).consensus).toBe(false);
  });

  it('groups the persuasive catalogue by class and hides played items', () => {
    const payload = sessionPayload();
    let groups = groupPersuasive(payload, 'supermarket');
    expect(groups.mandatory.map((e) => e.argument.id)).toEqual(['p6']);
    expect(groups.opinion.map((e) => e.argument.id)).toEqual(['p4']);
    expect(groups.factual).toEqual([]);

    payload.document.ledger.push({
      stage_index: 1,
      target_party: 'supermarket',
      persuasive_id: 'p6',
      relation: { source: 'p6', target: 'theta_s', polarity: 'attack', weight: 0.5 },
    });
    groups = groupPersuasive(payload, 'supermarket');
    expect(groups.mandatory).toEqual([]);
  });
});

describe('preview comparison', () => {
  it('shows current vs hypothetical side by side and flags changes', () => {
    const rows = compareSnapshots(stageZeroSnapshot(), stageOneSnapshot());
    const byLabel = Object.fromEntries(rows.map((row) => [row.label, row]));
    expect(byLabel['SF(goal) supermarket']).toMatchObject({
      current: '1.000000',
      hypothetical: '0.750000',
      changed: true,
    });
    expect(byLabel['value supermarket']).toMatchObject({
      current: '0.200000',
      hypothetical: '0.400000',
    });
    expect(byLabel['distance']).toMatchObject({
      current: '0.800000',
      hypothetical: '0.600000',
      changed: true,
    });
    expect(byLabel['SF(goal) zhang'].changed).toBe(false);
  });
});

describe('trajectory', () => {
  const rows = [
    { stage: 0, goal_scores: { a: 1 }, values: { a: 0.2 }, distance: 0.8, consensus: false },
    { stage: 1, goal_scores: { a: 0.75 }, values: { a: 0.4 }, distance: 0.6, consensus: false },
    { stage: 2, goal_scores: { a: 0.1 }, values: { a: 1.0 }, distance: 0, consensus: true },
  ];

  it('charts distance per stage with the consensus threshold at 0', () => {
    const chart = trajectoryChart(rows);
    expect(chart.points.map((p) => p.distance)).toEqual([0.8, 0.6, 0]);
    expect(chart.thresholdLine).toBe(0);
  });

  it('formats rows to 6 decimal places', () => {
    const formatted = trajectoryRows(rows);
    expect(formatted[1].distance).toBe('0.600000');
    expect(formatted[2].consensus).toBe(true);
  });
});

describe('string renderers', () => {
  it('renders an svg per graph with scores on every node', () => {
    const model = buildViewModel(sessionPayload());
    const svg = renderGraph(model.graphs[1]);
    expect(svg).toContain('data-party="zhang"');
    expect(svg).toContain('SF 0.963000 (base 0.900000)');
    expect(svg).toContain('stroke="#2e7d32"'); // support edges
  });

  it('renders the threshold line in the trajectory chart', () => {
    const svg = renderTrajectoryChart(
      trajectoryChart([
        { stage: 0, goal_scores: {}, values: {}, distance: 0.8, consensus: false },
        { stage: 1, goal_scores: {}, values: {}, distance: 0, consensus: true },
      ])
    );
    expect(svg).toContain('data-role="threshold"');
    expect(svg).toContain('data-stage="1"');
  });
});
