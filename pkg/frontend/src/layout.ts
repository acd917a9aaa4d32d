import type { FrameworkDocument } from './types';

export interface NodePosition {
  column: number;
  row: number;
}

/**
 * Layered layout by topological depth: influence flows left to right, so a
 * node's column is how far its longest influence chain still has to travel,
 * and the goal (never a source) ends up on the right edge. Rows order nodes
 * within a column by id.
 */
export function layeredLayout(framework: FrameworkDocument): Map<string, NodePosition> {
  const outgoing = new Map<string, string[]>();
  for (const argument of framework.arguments) outgoing.set(argument.id, []);
  for (const relation of framework.relations) {
    outgoing.get(relation.source)?.push(relation.target);
  }

  const chain = new Map<string, number>();
  const chainLength = (id: string): number => {
    const known = chain.get(id);
    if (known !== undefined) return known;
    const targets = outgoing.get(id) ?? [];
    const length = targets.length === 0 ? 0 : 1 + Math.max(...targets.map(chainLength));
    chain.set(id, length);
    return length;
  };
  framework.arguments.forEach((argument) => chainLength(argument.id));

  const deepest = Math.max(0, ...chain.values());
  const byColumn = new Map<number, string[]>();
  for (const argument of framework.arguments) {
    const column = deepest - (chain.get(argument.id) ?? 0);
    const ids = byColumn.get(column) ?? [];
    ids.push(argument.id);
    byColumn.set(column, ids);
  }

  const positions = new Map<string, NodePosition>();
  for (const [column, ids] of byColumn) {
    ids.sort();
    ids.forEach((id, row) => positions.set(id, { column, row }));
  }
  return positions;
}

export function edgeColor(polarity: 'support' | 'attack'): string {
  return polarity === 'attack' ? '#c62828' : '#2e7d32';
}

export function edgeWidth(weight: number): number {
  return 1 + 3 * weight;
}
