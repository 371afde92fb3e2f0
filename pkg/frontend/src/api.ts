import type {
  ClusterRequest,
  ClusterResponse,
  GraphStats,
  NeighborSample,
  ServiceError,
} from "./types";

export class ApiError extends Error {
  constructor(public readonly body: ServiceError) {
    super(body.message);
  }
}

export class NetworkError extends Error {}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly base = "/api/v1",
    private readonly fetchImpl: FetchLike = (...args) => fetch(...args),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let resp: Response;
    try {
      resp = await this.fetchImpl(this.base + path, init);
    } catch (e) {
      throw new NetworkError(String(e));
    }
    const body = await resp.json();
    if (!resp.ok) {
      throw new ApiError(body as ServiceError);
    }
    return body as T;
  }

  graphStats(): Promise<GraphStats> {
    return this.request("/graph");
  }

  neighbors(vertexId: number, limit = 20): Promise<NeighborSample> {
    return this.request(`/vertex/${vertexId}/neighbors?limit=${limit}`);
  }

  cluster(req: ClusterRequest): Promise<ClusterResponse> {
    return this.request("/cluster", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(req),
    });
  }
}
