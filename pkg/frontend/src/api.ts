// API client for the driftscan analysis service, or for a static export
// bundle. The UI never computes statistics: p-values, orderings, grouping
// attributes, lineage sets, and histograms all come from these payloads.

export interface FeatureMeta {
  name: string;
  origin: "raw" | "engineered";
  kind: "numeric" | "categorical";
}

export interface Thresholds {
  alpha: number;
  analysis_threshold: number;
}

export interface Meta {
  features: FeatureMeta[];
  dates: string[];
  thresholds: Thresholds;
  granularity: string;
}

export type SortMode = "original" | "alphabetical" | "most_alarms" | "least_sum_p";

export interface SchemaFeature {
  name: string;
  kind: "numeric" | "categorical";
  attributes: Record<string, string>;
}

export interface MatrixDoc {
  features: string[];
  dates: string[];
  divergence: number[][];
  raw_p: number[][];
  norm_p: number[][];
  alarm: boolean[][];
  thresholds: Thresholds;
  granularity: string;
  schema: {
    timestamp_column: string;
    features: SchemaFeature[];
    lineage: [string, string][];
  };
  orderings: Record<SortMode, string[]>;
}

export interface HistogramData {
  mass: number[];
  special_mass: number;
  sample_count: number;
}

export interface HistogramPayload {
  reference: HistogramData;
  target: HistogramData;
  special_label: "NaN" | "missing+new";
  binning:
    | { kind: "numeric"; bin_count: number; lower: number; upper: number }
    | { kind: "categorical"; vocabulary: string[] };
  labels: string[];
}

export interface LineagePayload {
  ancestors: string[];
  descendants: string[];
}

export interface ApiClient {
  meta(): Promise<Meta>;
  matrix(): Promise<MatrixDoc>;
  histogram(feature: string, date: string): Promise<HistogramPayload>;
  lineage(feature: string): Promise<LineagePayload>;
  related(features: string[], commonOnly: boolean): Promise<LineagePayload>;
}

async function getJson<T>(url: string): Promise<T> {
  const resp = await fetch(url);
  if (!resp.ok) throw new Error(`${url}: HTTP ${resp.status}`);
  return (await resp.json()) as T;
}

/** Talks to a running `driftscan serve` instance. */
export class LiveClient implements ApiClient {
  constructor(private baseUrl: string) {}

  meta(): Promise<Meta> {
    return getJson(`${this.baseUrl}/api/meta`);
  }
  matrix(): Promise<MatrixDoc> {
    return getJson(`${this.baseUrl}/api/matrix`);
  }
  histogram(feature: string, date: string): Promise<HistogramPayload> {
    return getJson(`${this.baseUrl}/api/histogram/${encodeURIComponent(feature)}?date=${date}`);
  }
  lineage(feature: string): Promise<LineagePayload> {
    return getJson(`${this.baseUrl}/api/lineage/${encodeURIComponent(feature)}`);
  }
  related(features: string[], commonOnly: boolean): Promise<LineagePayload> {
    const names = features.map(encodeURIComponent).join(",");
    return getJson(`${this.baseUrl}/api/related?features=${names}&common=${commonOnly}`);
  }
}

/** Combine per-feature lineage payloads the way the live /api/related
 * endpoint does: union or intersection, minus the queried features. */
export function combineRelated(
  perFeature: LineagePayload[],
  features: string[],
  commonOnly: boolean,
): LineagePayload {
  const combine = (sets: string[][]): string[] => {
    if (sets.length === 0) return [];
    let acc = new Set(sets[0]);
    for (const next of sets.slice(1)) {
      const other = new Set(next);
      acc = commonOnly
        ? new Set([...acc].filter((x) => other.has(x)))
        : new Set([...acc, ...other]);
    }
    for (const f of features) acc.delete(f);
    return [...acc].sort();
  };
  return {
    ancestors: combine(perFeature.map((p) => p.ancestors)),
    descendants: combine(perFeature.map((p) => p.descendants)),
  };
}

/** Reads an exported bundle (static hosting, no service process). */
export class BundleClient implements ApiClient {
  constructor(private baseUrl: string) {}

  meta(): Promise<Meta> {
    return getJson(`${this.baseUrl}/api/meta.json`);
  }
  matrix(): Promise<MatrixDoc> {
    return getJson(`${this.baseUrl}/api/matrix.json`);
  }
  histogram(feature: string, date: string): Promise<HistogramPayload> {
    return getJson(`${this.baseUrl}/api/histogram/${encodeURIComponent(feature)}/${date}.json`);
  }
  lineage(feature: string): Promise<LineagePayload> {
    return getJson(`${this.baseUrl}/api/lineage/${encodeURIComponent(feature)}.json`);
  }
  async related(features: string[], commonOnly: boolean): Promise<LineagePayload> {
    const payloads = await Promise.all(features.map((f) => this.lineage(f)));
    return combineRelated(payloads, features, commonOnly);
  }
}

/** Wraps an endpoint so that only the most recent in-flight request can
 * resolve; stale responses are discarded. */
export function latestWins<A extends unknown[], T>(
  fn: (...args: A) => Promise<T>,
): (...args: A) => Promise<T | undefined> {
  let current = 0;
  return async (...args: A) => {
    const ticket = ++current;
    const result = await fn(...args);
    return ticket === current ? result : undefined;
  };
}
