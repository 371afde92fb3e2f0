// Generated by scripts/sync-schema.mjs from the service's request schema.
// Do not edit; run `npm run sync-schema` instead.
export const clusterRequestSchema = {
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "ClusterRequest",
  "type": "object",
  "required": [
    "algorithm",
    "seed"
  ],
  "additionalProperties": false,
  "properties": {
    "algorithm": {
      "enum": [
        "nibble",
        "pr_nibble_original",
        "pr_nibble_optimized",
        "hkpr",
        "rand_hkpr"
      ]
    },
    "seed": {
      "type": "integer",
      "minimum": 0
    },
    "epsilon": {
      "type": "number",
      "exclusiveMinimum": 0
    },
    "alpha": {
      "type": "number",
      "exclusiveMinimum": 0,
      "exclusiveMaximum": 1
    },
    "max_iters": {
      "type": "integer",
      "minimum": 1
    },
    "t": {
      "type": "number",
      "exclusiveMinimum": 0
    },
    "taylor_degree": {
      "type": "integer",
      "minimum": 1
    },
    "num_walks": {
      "type": "integer",
      "minimum": 1
    },
    "max_walk_len": {
      "type": "integer",
      "minimum": 0
    },
    "rng_seed": {
      "type": "integer"
    },
    "hkpr_threshold_uses_exp_t": {
      "type": "boolean"
    },
    "run_sweep": {
      "type": "boolean"
    }
  }
} as const;
