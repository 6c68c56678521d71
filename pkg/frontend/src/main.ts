import { AmaClient } from "./api.js";
import { LayoutCanvas } from "./canvas.js";
import { EditorController } from "./controller.js";
import { GaugePanel } from "./gauges.js";
import { LayoutDocument, ObjectiveSpec, SearchParams } from "./types.js";

const DEMO_DOC: LayoutDocument = {
  schema_version: 1,
  frame: { width: 800, height: 600 },
  objects: [
    { id: "header", x: 40, y: 30, w: 720, h: 80 },
    { id: "nav", x: 40, y: 140, w: 180, h: 380 },
    { id: "content", x: 260, y: 140, w: 380, h: 380 },
    { id: "aside", x: 620, y: 250, w: 140, h: 180 },
  ],
};

function serviceBase(): string {
  const fromQuery = new URLSearchParams(location.search).get("service");
  return fromQuery ?? `${location.protocol}//${location.hostname}:8000`;
}

function el<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

function start(): void {
  const client = new AmaClient(serviceBase());
  const controller = new EditorController(client, DEMO_DOC);
  new LayoutCanvas(el<HTMLCanvasElement>("editor-canvas"), controller);
  const gauges = new GaugePanel(el("gauges"));
  controller.subscribe((state) => gauges.render(state));

  const status = el("service-status");
  client
    .health()
    .then((h) => (status.textContent = `service ok (v${h.version})`))
    .catch(() => (status.textContent = "service unreachable"));

  // what-if panel
  const modeSelect = el<HTMLSelectElement>("objective-mode");
  const targetInput = el<HTMLInputElement>("target-av");
  const seedInput = el<HTMLInputElement>("seed");
  const itersInput = el<HTMLInputElement>("iterations");
  const runButton = el<HTMLButtonElement>("run-whatif");
  const acceptButton = el<HTMLButtonElement>("accept-proposal");
  const rejectButton = el<HTMLButtonElement>("reject-proposal");
  const proposalInfo = el("proposal-info");

  runButton.addEventListener("click", () => {
    const objective: ObjectiveSpec =
      modeSelect.value === "maximize"
        ? { mode: "maximize", weights: [1, 1, 1, 1, 1] }
        : { mode: "match_target", target: Number(targetInput.value) };
    const params: SearchParams = {
      seed: Number(seedInput.value) || 0,
      iterations: Math.min(200_000, Math.max(0, Number(itersInput.value) || 5000)),
    };
    void controller.runWhatIf(objective, params);
  });
  acceptButton.addEventListener("click", () => controller.acceptProposal());
  rejectButton.addEventListener("click", () => controller.rejectProposal());

  controller.subscribe((state) => {
    runButton.disabled = state.pendingOptimize;
    runButton.textContent = state.pendingOptimize ? "optimizing…" : "Run what-if";
    const hasProposal = state.proposal !== null;
    acceptButton.disabled = !hasProposal;
    rejectButton.disabled = !hasProposal;
    targetInput.disabled = modeSelect.value === "maximize";
    proposalInfo.textContent = state.proposal
      ? `proposal score ${state.proposal.score.toFixed(4)} (${state.proposal.evaluations} evals)`
      : "";
  });
  modeSelect.addEventListener("change", () => {
    targetInput.disabled = modeSelect.value === "maximize";
  });

  // import / export
  const filePicker = el<HTMLInputElement>("import-file");
  el<HTMLButtonElement>("import-button").addEventListener("click", () => filePicker.click());
  filePicker.addEventListener("change", async () => {
    const file = filePicker.files?.[0];
    if (!file) return;
    try {
      controller.replaceDocument(JSON.parse(await file.text()) as LayoutDocument);
    } catch {
      el("service-status").textContent = "import failed: not a layout document";
    }
    filePicker.value = "";
  });
  el<HTMLButtonElement>("export-button").addEventListener("click", () => {
    const blob = new Blob([controller.exportDocument()], { type: "application/json" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = "layout.json";
    link.click();
    URL.revokeObjectURL(link.href);
  });
  el<HTMLButtonElement>("remove-button").addEventListener("click", () =>
    controller.removeSelected(),
  );

  void controller.evaluateNow();
}

start();
