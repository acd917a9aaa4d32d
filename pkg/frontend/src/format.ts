// Every number shown in the cockpit is the service's value rendered to
// 6 decimal places; there is deliberately no arithmetic here.

export function fixed6(value: number): string {
  return value.toFixed(6);
}

export function clampWeight(value: number): number {
  if (Number.isNaN(value)) return 0;
  return Math.min(1, Math.max(0, value));
}
