import type { ClusterRequest, ClusterResponse } from "./types";

export interface RunHistoryEntry {
  request: ClusterRequest;
  response: ClusterResponse;
  timestamp: string;
  size: number;
  conductance: number | null;
}

interface StorageLike {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
}

const KEY = "localcluster-history";

/** Append-only run log for the session, persisted in browser storage. */
export class RunHistory {
  private entries: RunHistoryEntry[];

  constructor(private readonly storage: StorageLike) {
    const raw = storage.getItem(KEY);
    this.entries = raw ? (JSON.parse(raw) as RunHistoryEntry[]) : [];
  }

  append(request: ClusterRequest, response: ClusterResponse, now = new Date()): RunHistoryEntry {
    const entry: RunHistoryEntry = {
      request,
      response,
      timestamp: now.toISOString(),
      size: response.cluster.length,
      conductance: response.conductance,
    };
    this.entries.push(entry);
    this.storage.setItem(KEY, JSON.stringify(this.entries));
    return entry;
  }

  list(): readonly RunHistoryEntry[] {
    return this.entries;
  }

  get length(): number {
    return this.entries.length;
  }

  /** Session export; the UI offers this as a JSON download. */
  exportJson(): string {
    return JSON.stringify(this.entries, null, 2);
  }
}

export class MemoryStorage implements StorageLike {
  private map = new Map<string, string>();

  getItem(key: string): string | null {
    return this.map.get(key) ?? null;
  }

  setItem(key: string, value: string): void {
    this.map.set(key, value);
  }
}
