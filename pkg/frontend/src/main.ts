/** DOM wiring: controls on the left, cloud and histogram panels on the right. */

import { PanelClient, debounce } from "./client";
import { HistogramView } from "./histogram";
import { PRESETS } from "./presets";
import { coordLabel } from "./projection";
import { CloudView, MARKER_LABELS } from "./scatter";
import {
  ALPHABET_SIZES,
  DIMS,
  EntryCoord,
  ExplorerState,
  cloudRequest,
  concentrationRequest,
  defaultState,
  paperProjection,
  requestKey,
  validateState,
} from "./state";
import { CloudRequest, ConcentrationDoc, ConcentrationRequest, PointCloudDoc } from "./types";

const API_BASE = (import.meta.env?.VITE_API_BASE as string | undefined) ?? "";

const state: ExplorerState = defaultState();
let currentCloud: PointCloudDoc | null = null;

const byId = <T extends HTMLElement>(id: string) => document.getElementById(id) as T;

const banner = byId<HTMLDivElement>("banner");
const cloudContainer = byId<HTMLDivElement>("cloud");
const histogramCanvas = byId<HTMLCanvasElement>("histogram");
const cloudStatus = byId<HTMLDivElement>("cloud-status");
const proportionLabel = byId<HTMLDivElement>("proportion");
const axisCaption = byId<HTMLDivElement>("axis-caption");

const cloudView = new CloudView(cloudContainer);
const histogramView = new HistogramView(histogramCanvas);
const cloudClient = new PanelClient<CloudRequest, PointCloudDoc>(`${API_BASE}/api/cloud`);
const concentrationClient = new PanelClient<ConcentrationRequest, ConcentrationDoc>(
  `${API_BASE}/api/concentration`,
);

let lastCloudKey = "";
let lastConcentrationKey = "";

function showBanner(message: string | null): void {
  banner.textContent = message ?? "";
  banner.style.display = message ? "block" : "none";
}

async function refresh(force = false): Promise<void> {
  const problems = validateState(state);
  if (problems.length > 0) {
    showBanner(problems.join("; "));
    return;
  }
  showBanner(null);

  const cloudBody = cloudRequest(state);
  const cloudKey = requestKey(cloudBody);
  if (force || cloudKey !== lastCloudKey) {
    lastCloudKey = cloudKey;
    cloudStatus.textContent = "computing...";
    const result = await cloudClient.request(cloudBody);
    if (result !== null) {
      if (result.ok) {
        currentCloud = result.value;
        cloudView.setData(result.value, state.projection);
        axisCaption.textContent = cloudView.axisCaption(state.projection);
        cloudStatus.textContent = `${result.value.count} points (${result.value.mode})`;
      } else {
        cloudStatus.textContent = "error";
        showBanner(`cloud: ${result.detail}`);
      }
    }
  } else if (currentCloud) {
    // projection-only change: re-plot the cached cloud, no new request
    cloudView.setData(currentCloud, state.projection);
    axisCaption.textContent = cloudView.axisCaption(state.projection);
  }

  const concentrationBody = concentrationRequest(state);
  const concentrationKey = requestKey(concentrationBody);
  if (force || concentrationKey !== lastConcentrationKey) {
    lastConcentrationKey = concentrationKey;
    const result = await concentrationClient.request(concentrationBody);
    if (result !== null) {
      if (result.ok) {
        histogramView.render(result.value);
        const doc = result.value;
        proportionLabel.textContent =
          `${(100 * doc.proportion_within).toFixed(2)}% of ${doc.count_total} products lie ` +
          `within ${doc.threshold.toPrecision(3)} of e^{A+B} (${doc.distance_norm} norm)`;
      } else {
        proportionLabel.textContent = "error";
        showBanner(`concentration: ${result.detail}`);
      }
    }
  }
}

const scheduleRefresh = debounce(() => void refresh(), 250);

function onStateChanged(): void {
  renderMatrixGrids();
  renderProjectionSelectors();
  syncSimpleControls();
  scheduleRefresh();
}

/* ---------- controls ---------- */

function renderMatrixGrids(): void {
  const host = byId<HTMLDivElement>("grids");
  host.innerHTML = "";
  state.matrices.forEach((matrix, index) => {
    const block = document.createElement("div");
    block.className = "grid-block";
    const title = document.createElement("div");
    title.className = "grid-title";
    title.textContent = `matrix ${String.fromCharCode(65 + index)}`;
    block.appendChild(title);
    const table = document.createElement("div");
    table.className = "grid";
    table.style.gridTemplateColumns = `repeat(${matrix.length}, 1fr)`;
    matrix.forEach((row, r) => {
      row.forEach((value, c) => {
        const input = document.createElement("input");
        input.type = "number";
        input.step = "0.1";
        input.value = String(value);
        input.addEventListener("input", () => {
          state.matrices[index][r][c] = Number(input.value);
          scheduleRefresh();
        });
        table.appendChild(input);
      });
    });
    block.appendChild(table);
    host.appendChild(block);
  });
}

function entryOptions(dim: number): EntryCoord[] {
  const coords: EntryCoord[] = [];
  for (const part of ["re", "im"] as const) {
    for (let row = 0; row < dim; row++) {
      for (let col = 0; col < dim; col++) {
        coords.push({ row, col, part });
      }
    }
  }
  return coords;
}

function renderProjectionSelectors(): void {
  const host = byId<HTMLDivElement>("projection");
  host.innerHTML = "";
  const dim = state.matrices[0].length;
  for (const axis of ["x", "y", "z", "color"] as const) {
    const label = document.createElement("label");
    label.textContent = axis;
    const select = document.createElement("select");
    for (const coord of entryOptions(dim)) {
      const option = document.createElement("option");
      option.value = JSON.stringify(coord);
      option.textContent = coordLabel(coord);
      const current = state.projection[axis];
      option.selected =
        coord.row === current.row && coord.col === current.col && coord.part === current.part;
      select.appendChild(option);
    }
    select.addEventListener("change", () => {
      state.projection[axis] = JSON.parse(select.value) as EntryCoord;
      scheduleRefresh();
    });
    label.appendChild(select);
    host.appendChild(label);
  }
}

function resizeMatrices(alphabetSize: number, dim: number): void {
  const old = state.matrices;
  state.matrices = Array.from({ length: alphabetSize }, (_, k) =>
    Array.from({ length: dim }, (_, r) =>
      Array.from({ length: dim }, (_, c) => old[k]?.[r]?.[c] ?? 0),
    ),
  );
  const clamp = (coord: EntryCoord) => ({
    ...coord,
    row: Math.min(coord.row, dim - 1),
    col: Math.min(coord.col, dim - 1),
  });
  state.projection = {
    x: clamp(state.projection.x),
    y: clamp(state.projection.y),
    z: clamp(state.projection.z),
    color: clamp(state.projection.color),
  };
}

function syncSimpleControls(): void {
  byId<HTMLInputElement>("n-slider").value = String(state.n);
  byId<HTMLSpanElement>("n-value").textContent = String(state.n);
  byId<HTMLSelectElement>("mode").value = state.mode;
  byId<HTMLInputElement>("count").value = String(state.count);
  byId<HTMLInputElement>("count").disabled = state.mode !== "sample";
  byId<HTMLInputElement>("seed").value = String(state.seed);
  const auto = state.threshold === null;
  byId<HTMLInputElement>("threshold-auto").checked = auto;
  byId<HTMLInputElement>("threshold").disabled = auto;
  if (!auto) {
    byId<HTMLInputElement>("threshold").value = String(state.threshold);
  }
  byId<HTMLSelectElement>("alphabet").value = String(state.matrices.length);
  byId<HTMLSelectElement>("dim").value = String(state.matrices[0].length);
}

function wireControls(): void {
  const presetSelect = byId<HTMLSelectElement>("preset");
  PRESETS.forEach((preset, index) => {
    const option = document.createElement("option");
    option.value = String(index);
    option.textContent = preset.name;
    option.title = preset.description;
    presetSelect.appendChild(option);
  });
  presetSelect.addEventListener("change", () => {
    const preset = PRESETS[Number(presetSelect.value)];
    state.matrices = preset.matrices.map((m) => m.map((row) => [...row]));
    state.projection = paperProjection();
    onStateChanged();
  });

  const alphabetSelect = byId<HTMLSelectElement>("alphabet");
  for (const size of ALPHABET_SIZES) {
    const option = document.createElement("option");
    option.value = String(size);
    option.textContent = `${size} matrices`;
    alphabetSelect.appendChild(option);
  }
  alphabetSelect.addEventListener("change", () => {
    resizeMatrices(Number(alphabetSelect.value), state.matrices[0].length);
    onStateChanged();
  });

  const dimSelect = byId<HTMLSelectElement>("dim");
  for (const dim of DIMS) {
    const option = document.createElement("option");
    option.value = String(dim);
    option.textContent = `${dim} x ${dim}`;
    dimSelect.appendChild(option);
  }
  dimSelect.addEventListener("change", () => {
    resizeMatrices(state.matrices.length, Number(dimSelect.value));
    onStateChanged();
  });

  byId<HTMLInputElement>("n-slider").addEventListener("input", (event) => {
    state.n = Number((event.target as HTMLInputElement).value);
    byId<HTMLSpanElement>("n-value").textContent = String(state.n);
    scheduleRefresh();
  });
  byId<HTMLSelectElement>("mode").addEventListener("change", (event) => {
    state.mode = (event.target as HTMLSelectElement).value as "exhaustive" | "sample";
    syncSimpleControls();
    scheduleRefresh();
  });
  byId<HTMLInputElement>("count").addEventListener("input", (event) => {
    state.count = Number((event.target as HTMLInputElement).value);
    scheduleRefresh();
  });
  byId<HTMLInputElement>("seed").addEventListener("input", (event) => {
    state.seed = Number((event.target as HTMLInputElement).value);
    scheduleRefresh();
  });
  byId<HTMLInputElement>("threshold").addEventListener("input", (event) => {
    state.threshold = Number((event.target as HTMLInputElement).value);
    scheduleRefresh();
  });
  byId<HTMLInputElement>("threshold-auto").addEventListener("change", (event) => {
    const auto = (event.target as HTMLInputElement).checked;
    state.threshold = auto ? null : Number(byId<HTMLInputElement>("threshold").value);
    syncSimpleControls();
    scheduleRefresh();
  });

  byId<HTMLButtonElement>("snapshot").addEventListener("click", () => {
    const link = document.createElement("a");
    link.download = "cloud.png";
    link.href = cloudView.snapshotPng();
    link.click();
  });
  byId<HTMLButtonElement>("download").addEventListener("click", () => {
    if (!currentCloud) return;
    const blob = new Blob([JSON.stringify(currentCloud, null, 2)], {
      type: "application/json",
    });
    const link = document.createElement("a");
    link.download = "cloud.json";
    link.href = URL.createObjectURL(blob);
    link.click();
    URL.revokeObjectURL(link.href);
  });

  const legend = byId<HTMLDivElement>("legend");
  for (const [name, label] of Object.entries(MARKER_LABELS)) {
    const item = document.createElement("span");
    item.className = `legend-item legend-${name}`;
    item.textContent = label;
    legend.appendChild(item);
  }
}

wireControls();
renderMatrixGrids();
renderProjectionSelectors();
syncSimpleControls();
void refresh(true);
