import { CockpitClient } from './api';
import { CockpitController } from './cockpit';
import {
  buildViewModel,
  compareSnapshots,
  groupPersuasive,
  trajectoryChart,
} from './viewmodel';
import {
  renderBanner,
  renderComparison,
  renderGraph,
  renderTrajectoryChart,
} from './render';
import type { Polarity } from './types';

// Browser bootstrap: wires the controller to the static page in index.html.

const serviceUrl =
  new URLSearchParams(window.location.search).get('service') ?? 'http://127.0.0.1:8000';
const controller = new CockpitController(new CockpitClient(serviceUrl));

const el = <T extends HTMLElement>(id: string): T => {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
};

async function redraw(): Promise<void> {
  const errorBox = el<HTMLDivElement>('error');
  errorBox.textContent = controller.state.error ?? '';

  const payload = controller.state.payload;
  if (!payload) return;
  const model = buildViewModel(payload);

  el<HTMLDivElement>('banner').innerHTML = renderBanner(model);
  el<HTMLDivElement>('graphs').innerHTML = model.graphs
    .map(
      (graph) =>
        `<figure><figcaption>${graph.party} (${graph.role}) — SF ${graph.goalScore}, ` +
        `value ${graph.mappedValue}</figcaption>${renderGraph(graph)}</figure>`
    )
    .join('');

  const rows = await controller.trajectory();
  if (rows) {
    el<HTMLDivElement>('chart').innerHTML = renderTrajectoryChart(trajectoryChart(rows));
  }

  const partySelect = el<HTMLSelectElement>('party');
  partySelect.innerHTML = payload.document.frameworks
    .map((fw) => `<option value="${fw.party_label}">${fw.party_label}</option>`)
    .join('');
  if (controller.state.draft.party) partySelect.value = controller.state.draft.party;

  const party = partySelect.value;
  const groups = groupPersuasive(payload, party);
  el<HTMLSelectElement>('persuasive').innerHTML = (
    [
      ['opinion', groups.opinion],
      ['factual', groups.factual],
      ['mandatory', groups.mandatory],
      ['dispositive', groups.dispositive],
    ] as const
  )
    .map(
      ([label, entries]) =>
        `<optgroup label="${label}">` +
        entries
          .map((entry) => `<option value="${entry.argument.id}">${entry.argument.id}</option>`)
          .join('') +
        `</optgroup>`
    )
    .join('');

  const framework = payload.document.frameworks.find((fw) => fw.party_label === party);
  el<HTMLSelectElement>('target').innerHTML = (framework?.arguments ?? [])
    .map((argument) => `<option value="${argument.id}">${argument.id}</option>`)
    .join('');

  const preview = controller.state.preview;
  const current = controller.currentSnapshot;
  el<HTMLDivElement>('comparison').innerHTML =
    preview && current ? renderComparison(compareSnapshots(current, preview)) : '';
}

el<HTMLButtonElement>('load').addEventListener('click', async () => {
  const file = el<HTMLInputElement>('document-file').files?.[0];
  if (!file) return;
  await controller.loadDocument(await file.text());
  await redraw();
});

el<HTMLSelectElement>('party').addEventListener('change', async (event) => {
  controller.selectParty((event.target as HTMLSelectElement).value);
  await redraw();
});

function readDraft(): void {
  controller.selectPersuasive(el<HTMLSelectElement>('persuasive').value);
  controller.composeRelation(
    el<HTMLSelectElement>('target').value,
    el<HTMLSelectElement>('polarity').value as Polarity,
    Number(el<HTMLInputElement>('weight').value)
  );
}

el<HTMLButtonElement>('preview').addEventListener('click', async () => {
  readDraft();
  await controller.preview();
  await redraw();
});

el<HTMLButtonElement>('commit').addEventListener('click', async () => {
  readDraft();
  await controller.commit();
  await redraw();
});

el<HTMLButtonElement>('undo').addEventListener('click', async () => {
  await controller.undo();
  await redraw();
});

el<HTMLInputElement>('weight').addEventListener('input', (event) => {
  const input = event.target as HTMLInputElement;
  el<HTMLSpanElement>('weight-value').textContent = Number(input.value).toFixed(2);
});
