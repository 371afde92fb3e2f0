// Client-side request validation driven by the same JSON schema the service
// enforces, so both sides accept exactly the same parameter space.
import { clusterRequestSchema as schema } from "./schema";

interface PropertySchema {
  type?: string;
  enum?: readonly string[];
  minimum?: number;
  maximum?: number;
  exclusiveMinimum?: number;
  exclusiveMaximum?: number;
}

export interface FieldError {
  field: string;
  message: string;
}

const properties: Record<string, PropertySchema> = schema.properties;
const required: readonly string[] = schema.required;

function checkValue(name: string, rule: PropertySchema, value: unknown): FieldError | null {
  if (rule.enum) {
    if (typeof value !== "string" || !rule.enum.includes(value)) {
      return { field: name, message: `must be one of ${rule.enum.join(", ")}` };
    }
    return null;
  }
  if (rule.type === "boolean") {
    return typeof value === "boolean" ? null : { field: name, message: "must be a boolean" };
  }
  if (typeof value !== "number" || Number.isNaN(value)) {
    return { field: name, message: "must be a number" };
  }
  if (rule.type === "integer" && !Number.isInteger(value)) {
    return { field: name, message: "must be an integer" };
  }
  if (rule.minimum !== undefined && value < rule.minimum) {
    return { field: name, message: `must be >= ${rule.minimum}` };
  }
  if (rule.maximum !== undefined && value > rule.maximum) {
    return { field: name, message: `must be <= ${rule.maximum}` };
  }
  if (rule.exclusiveMinimum !== undefined && value <= rule.exclusiveMinimum) {
    return { field: name, message: `must be > ${rule.exclusiveMinimum}` };
  }
  if (rule.exclusiveMaximum !== undefined && value >= rule.exclusiveMaximum) {
    return { field: name, message: `must be < ${rule.exclusiveMaximum}` };
  }
  return null;
}

export function validateRequest(body: Record<string, unknown>): FieldError[] {
  const errors: FieldError[] = [];
  for (const name of required) {
    if (body[name] === undefined) {
      errors.push({ field: name, message: "is required" });
    }
  }
  for (const [name, value] of Object.entries(body)) {
    if (value === undefined) continue;
    const rule = properties[name];
    if (!rule) {
      errors.push({ field: name, message: "unknown parameter" });
      continue;
    }
    const err = checkValue(name, rule, value);
    if (err) errors.push(err);
  }
  return errors;
}
