import type { ComparisonRow, GraphView, TrajectoryChart, ViewModel } from './viewmodel';

// String renderers keep the drawing logic testable without a DOM; main.ts
// assigns the results to innerHTML.

const CELL_W = 180;
const CELL_H = 70;
const NODE_W = 150;
const NODE_H = 46;

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

function nodeCenter(graph: GraphView, id: string): { x: number; y: number } {
  const node = graph.nodes.find((candidate) => candidate.id === id);
  if (!node) return { x: 0, y: 0 };
  return {
    x: node.column * CELL_W + NODE_W / 2 + 10,
    y: node.row * CELL_H + NODE_H / 2 + 10,
  };
}

export function renderGraph(graph: GraphView): string {
  const columns = Math.max(0, ...graph.nodes.map((node) => node.column)) + 1;
  const rows = Math.max(0, ...graph.nodes.map((node) => node.row)) + 1;
  const width = columns * CELL_W + 20;
  const height = rows * CELL_H + 20;

  const edges = graph.edges
    .map((edge) => {
      const from = nodeCenter(graph, edge.source);
      const to = nodeCenter(graph, edge.target);
      return (
        `<line x1="${from.x}" y1="${from.y}" x2="${to.x}" y2="${to.y}" ` +
        `stroke="${edge.color}" stroke-width="${edge.width}" data-edge="${edge.source}->${edge.target}">` +
        `<title>${edge.polarity} weight ${edge.weight}</title></line>`
      );
    })
    .join('');

  const nodes = graph.nodes
    .map((node) => {
      const x = node.column * CELL_W + 10;
      const y = node.row * CELL_H + 10;
      const badge = node.badge ? ` <tspan font-style="italic">[${node.badge}]</tspan>` : '';
      const lock = node.locked ? ' &#128274;' : '';
      return (
        `<g data-node="${node.id}">` +
        `<rect x="${x}" y="${y}" width="${NODE_W}" height="${NODE_H}" rx="6" ` +
        `fill="${node.kind === 'goal' ? '#fff8e1' : node.kind === 'con' ? '#ffebee' : '#e8f5e9'}" stroke="#555"/>` +
        `<text x="${x + 8}" y="${y + 18}" font-size="12">${escapeHtml(node.id)}${badge}${lock}</text>` +
        `<text x="${x + 8}" y="${y + 36}" font-size="11" data-role="score">SF ${node.score} (base ${node.baseScore})</text>` +
        `<title>${escapeHtml(node.text)}</title>` +
        `</g>`
      );
    })
    .join('');

  return (
    `<svg viewBox="0 0 ${width} ${height}" width="${width}" height="${height}" data-party="${graph.party}">` +
    edges +
    nodes +
    `</svg>`
  );
}

export function renderBanner(model: ViewModel): string {
  const cls = model.banner.consensus ? 'banner consensus' : 'banner dispute';
  return `<div class="${cls}" data-role="banner">${escapeHtml(model.banner.text)}</div>`;
}

export function renderComparison(rows: ComparisonRow[]): string {
  const body = rows
    .map(
      (row) =>
        `<tr${row.changed ? ' class="changed"' : ''}>` +
        `<td>${escapeHtml(row.label)}</td><td>${row.current}</td><td>${row.hypothetical}</td></tr>`
    )
    .join('');
  return (
    `<table data-role="comparison"><thead><tr><th></th><th>current</th><th>preview</th></tr></thead>` +
    `<tbody>${body}</tbody></table>`
  );
}

export function renderTrajectoryChart(chart: TrajectoryChart): string {
  const width = 360;
  const height = 160;
  const pad = 24;
  const stages = Math.max(1, chart.points.length - 1);
  const x = (stage: number) => pad + (stage / stages) * (width - 2 * pad);
  const y = (distance: number) => height - pad - distance * (height - 2 * pad);

  const polyline = chart.points
    .map((point) => `${x(point.stage)},${y(point.distance)}`)
    .join(' ');
  const markers = chart.points
    .map(
      (point) =>
        `<circle cx="${x(point.stage)}" cy="${y(point.distance)}" r="3" ` +
        `fill="${point.consensus ? '#2e7d32' : '#c62828'}" data-stage="${point.stage}"/>`
    )
    .join('');
  return (
    `<svg viewBox="0 0 ${width} ${height}" width="${width}" height="${height}" data-role="trajectory">` +
    `<line x1="${pad}" y1="${y(chart.thresholdLine)}" x2="${width - pad}" y2="${y(chart.thresholdLine)}" ` +
    `stroke="#2e7d32" stroke-dasharray="4 3" data-role="threshold"/>` +
    `<polyline points="${polyline}" fill="none" stroke="#1565c0" stroke-width="2"/>` +
    markers +
    `</svg>`
  );
}
