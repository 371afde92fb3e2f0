import type { ClusterRequest } from "./types";
import { FieldError, validateRequest } from "./validate";

/** Raw form state: every field a string as typed, plus the algorithm pick. */
export interface FormState {
  algorithm: string;
  seed: string;
  epsilon: string;
  alpha: string;
  max_iters: string;
  t: string;
  taylor_degree: string;
  num_walks: string;
  max_walk_len: string;
  rng_seed: string;
  run_sweep: boolean;
}

export const DEFAULT_FORM: FormState = {
  algorithm: "pr_nibble_optimized",
  seed: "0",
  epsilon: "1e-5",
  alpha: "0.01",
  max_iters: "",
  t: "",
  taylor_degree: "",
  num_walks: "",
  max_walk_len: "",
  rng_seed: "",
  run_sweep: true,
};

// which optional parameters each algorithm actually reads
export const RELEVANT_FIELDS: Record<string, (keyof FormState)[]> = {
  nibble: ["epsilon", "max_iters"],
  pr_nibble_original: ["epsilon", "alpha"],
  pr_nibble_optimized: ["epsilon", "alpha"],
  hkpr: ["epsilon", "t", "taylor_degree"],
  rand_hkpr: ["t", "num_walks", "max_walk_len", "rng_seed"],
};

function parseField(name: string, raw: string): number {
  const value = Number(raw);
  return raw.trim() === "" ? NaN : value;
}

/** Build the request body from the form, leaving blank fields to the service defaults. */
export function toRequest(form: FormState): ClusterRequest {
  const body: ClusterRequest = { algorithm: form.algorithm, seed: parseField("seed", form.seed) };
  const relevant = RELEVANT_FIELDS[form.algorithm] ?? [];
  for (const name of relevant) {
    const raw = form[name];
    if (typeof raw === "string" && raw.trim() !== "") {
      (body as unknown as Record<string, number>)[name] = parseField(name, raw);
    }
  }
  if (!form.run_sweep) body.run_sweep = false;
  return body;
}

export function validateForm(form: FormState): FieldError[] {
  return validateRequest(toRequest(form) as unknown as Record<string, unknown>);
}

/** The explore loop: keep every parameter, swap in the clicked seed. */
export function reseedFromCluster(form: FormState, vertexId: number): FormState {
  return { ...form, seed: String(vertexId) };
}
