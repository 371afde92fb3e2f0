import { ApiClient, ApiError, NetworkError } from "./api";
import { buildChartModel, hoverLabel, polylinePoints } from "./chart";
import { DEFAULT_FORM, FormState, RELEVANT_FIELDS, reseedFromCluster, toRequest, validateForm } from "./form";
import { RunHistory } from "./history";
import { buildResultPanel } from "./panel";
import type { ClusterResponse } from "./types";

const NUMERIC_FIELDS = [
  "seed", "epsilon", "alpha", "max_iters", "t",
  "taylor_degree", "num_walks", "max_walk_len", "rng_seed",
] as const;

const ALGORITHMS = Object.keys(RELEVANT_FIELDS);

export class App {
  private form: FormState = { ...DEFAULT_FORM };
  private pending = false;
  private readonly history: RunHistory;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    storage: Pick<Storage, "getItem" | "setItem"> = window.localStorage,
  ) {
    this.history = new RunHistory(storage);
    this.render();
    void this.loadStats();
  }

  private el<K extends keyof HTMLElementTagNameMap>(tag: K, cls?: string, text?: string) {
    const node = document.createElement(tag);
    if (cls) node.className = cls;
    if (text !== undefined) node.textContent = text;
    return node;
  }

  private async loadStats(): Promise<void> {
    try {
      const stats = await this.api.graphStats();
      const header = this.root.querySelector("#graph-stats");
      if (header) header.textContent = `graph: ${stats.n} vertices, ${stats.m} edges, max degree ${stats.max_degree}`;
    } catch {
      /* stats are decorative; the form still works */
    }
  }

  private render(): void {
    this.root.textContent = "";
    const header = this.el("div", "header");
    header.appendChild(this.el("h1", undefined, "local cluster explorer"));
    header.appendChild(Object.assign(this.el("span"), { id: "graph-stats" }));
    this.root.appendChild(header);
    this.root.appendChild(this.buildForm());
    this.root.appendChild(Object.assign(this.el("div", "banner"), { id: "banner" }));
    this.root.appendChild(Object.assign(this.el("div", "result"), { id: "result" }));
    this.root.appendChild(Object.assign(this.el("div", "chart"), { id: "chart" }));
    this.root.appendChild(this.buildHistoryPanel());
  }

  private buildForm(): HTMLElement {
    const form = this.el("form");
    form.id = "run-form";

    const algo = this.el("select") as HTMLSelectElement;
    algo.id = "field-algorithm";
    for (const name of ALGORITHMS) {
      algo.appendChild(Object.assign(this.el("option", undefined, name), { value: name }));
    }
    algo.value = this.form.algorithm;
    algo.onchange = () => {
      this.form.algorithm = algo.value;
      this.render();
    };
    form.appendChild(this.labeled("algorithm", algo));

    const relevant = new Set<string>(["seed", ...RELEVANT_FIELDS[this.form.algorithm]]);
    for (const name of NUMERIC_FIELDS) {
      if (!relevant.has(name)) continue;
      const input = this.el("input") as HTMLInputElement;
      input.id = `field-${name}`;
      input.value = this.form[name];
      input.oninput = () => {
        this.form[name] = input.value;
      };
      form.appendChild(this.labeled(name, input));
    }

    const sweep = this.el("input") as HTMLInputElement;
    sweep.type = "checkbox";
    sweep.id = "field-run_sweep";
    sweep.checked = this.form.run_sweep;
    sweep.onchange = () => {
      this.form.run_sweep = sweep.checked;
    };
    form.appendChild(this.labeled("run sweep", sweep));

    const submit = this.el("button", undefined, "run") as HTMLButtonElement;
    submit.id = "submit";
    submit.type = "submit";
    submit.disabled = this.pending; // one in-flight request per tab
    form.appendChild(submit);
    form.onsubmit = (ev) => {
      ev.preventDefault();
      void this.submit();
    };
    return form;
  }

  private labeled(text: string, control: HTMLElement): HTMLElement {
    const row = this.el("label", "row");
    row.appendChild(this.el("span", undefined, text));
    row.appendChild(control);
    const err = this.el("span", "field-error");
    err.id = `${control.id}-error`;
    row.appendChild(err);
    return row;
  }

  private showFieldError(field: string, message: string): void {
    const slot = this.root.querySelector(`#field-${field}-error`);
    if (slot) slot.textContent = message;
  }

  private clearErrors(): void {
    this.root.querySelectorAll(".field-error").forEach((n) => (n.textContent = ""));
    const banner = this.root.querySelector("#banner");
    if (banner) banner.textContent = "";
  }

  async submit(): Promise<void> {
    if (this.pending) return;
    this.clearErrors();
    const errors = validateForm(this.form);
    if (errors.length > 0) {
      for (const e of errors) this.showFieldError(e.field, e.message);
      return;
    }
    this.pending = true;
    this.setSubmitDisabled(true);
    const request = toRequest(this.form);
    try {
      const response = await this.api.cluster(request);
      this.history.append(request, response);
      this.renderResult(response);
      this.renderHistory();
    } catch (e) {
      if (e instanceof ApiError && e.body.field) {
        this.showFieldError(e.body.field, e.body.message);
      } else if (e instanceof NetworkError) {
        this.showBanner("service unreachable - check the connection and retry");
      } else {
        this.showBanner(String(e));
      }
    } finally {
      this.pending = false;
      this.setSubmitDisabled(false);
    }
  }

  private setSubmitDisabled(disabled: boolean): void {
    const btn = this.root.querySelector("#submit") as HTMLButtonElement | null;
    if (btn) btn.disabled = disabled;
  }

  private showBanner(message: string): void {
    const banner = this.root.querySelector("#banner");
    if (banner) banner.textContent = message;
  }

  private renderResult(resp: ClusterResponse): void {
    const panel = buildResultPanel(resp);
    const host = this.root.querySelector("#result");
    if (!host) return;
    host.textContent = "";
    const dl = this.el("dl");
    const rows: [string, string][] = [
      ["cluster size", panel.size],
      ["volume", panel.volume],
      ["conductance", panel.conductance],
      ["support", panel.supportSize],
      ["pushes", panel.pushCount],
      ["pushed volume", panel.pushedVolume],
      ["iterations", panel.iterations],
      ["diffusion ms", panel.diffusionMs],
      ["sweep ms", panel.sweepMs],
    ];
    for (const [k, v] of rows) {
      dl.appendChild(this.el("dt", undefined, k));
      dl.appendChild(this.el("dd", undefined, v));
    }
    host.appendChild(dl);

    const members = this.el("div", "members");
    for (const v of panel.members) {
      const chip = this.el("button", "member", String(v)) as HTMLButtonElement;
      chip.type = "button";
      chip.onclick = () => {
        this.form = reseedFromCluster(this.form, v);
        this.render();
        (this.root.querySelector("#submit") as HTMLButtonElement | null)?.focus();
      };
      members.appendChild(chip);
    }
    host.appendChild(members);
    this.renderChart(resp.sweep_curve);
  }

  private renderChart(curve: [number, number][]): void {
    const host = this.root.querySelector("#chart");
    if (!host) return;
    host.textContent = "";
    const model = buildChartModel(curve);
    if (model.empty) {
      host.appendChild(this.el("p", "placeholder", "no sweep curve for this run"));
      return;
    }
    const W = 480;
    const H = 160;
    const ns = "http://www.w3.org/2000/svg";
    const svg = document.createElementNS(ns, "svg");
    svg.setAttribute("viewBox", `0 0 ${W} ${H}`);
    const line = document.createElementNS(ns, "polyline");
    line.setAttribute("points", polylinePoints(model, W, H));
    line.setAttribute("fill", "none");
    line.setAttribute("stroke", "#36c");
    svg.appendChild(line);
    for (const p of model.points) {
      const dot = document.createElementNS(ns, "circle");
      dot.setAttribute("cx", String(p.x * W));
      dot.setAttribute("cy", String(p.y * H));
      dot.setAttribute("r", p.isMinimum ? "6" : "3");
      dot.setAttribute("fill", p.isMinimum ? "#c33" : "#36c");
      if (p.isMinimum) dot.setAttribute("data-minimum", "true");
      const title = document.createElementNS(ns, "title");
      title.textContent = hoverLabel(p);
      dot.appendChild(title);
      svg.appendChild(dot);
    }
    host.appendChild(svg);
  }

  private buildHistoryPanel(): HTMLElement {
    const panel = this.el("div", "history");
    panel.id = "history";
    const head = this.el("div");
    head.appendChild(this.el("h2", undefined, "history"));
    const exportBtn = this.el("button", undefined, "export JSON") as HTMLButtonElement;
    exportBtn.type = "button";
    exportBtn.onclick = () => {
      const blob = new Blob([this.history.exportJson()], { type: "application/json" });
      const link = this.el("a") as HTMLAnchorElement;
      link.href = URL.createObjectURL(blob);
      link.download = "localcluster-session.json";
      link.click();
    };
    head.appendChild(exportBtn);
    panel.appendChild(head);
    panel.appendChild(Object.assign(this.el("ol"), { id: "history-list" }));
    return panel;
  }

  private renderHistory(): void {
    const list = this.root.querySelector("#history-list");
    if (!list) return;
    list.textContent = "";
    for (const entry of this.history.list()) {
      const phi = entry.conductance === null ? "-" : String(entry.conductance);
      list.appendChild(
        this.el(
          "li",
          undefined,
          `${entry.timestamp} ${entry.request.algorithm} seed=${entry.request.seed} size=${entry.size} φ=${phi}`,
        ),
      );
    }
  }
}

if (typeof document !== "undefined" && document.querySelector("#app")) {
  new App(document.querySelector("#app") as HTMLElement, new ApiClient());
}
