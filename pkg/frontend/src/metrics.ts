/** Rating dimensions and their raw integer scales, mirroring the server. */

export const BASIC_EMOTIONS = [
  "happiness",
  "sadness",
  "anger",
  "disgust",
  "fear",
  "pride",
] as const;

export const DIMENSIONS = ["valence", "arousal"] as const;

export const ALL_METRICS = [...BASIC_EMOTIONS, ...DIMENSIONS] as const;

export type Metric = (typeof ALL_METRICS)[number];

export type Labels = Record<Metric, number>;

/** Inclusive raw bounds: basic emotions 0–4, valence/arousal 1–5. */
export function scaleFor(metric: Metric): [number, number] {
  return (DIMENSIONS as readonly string[]).includes(metric) ? [1, 5] : [0, 4];
}

export function inRange(metric: Metric, value: number): boolean {
  const [lo, hi] = scaleFor(metric);
  return Number.isInteger(value) && value >= lo && value <= hi;
}

/** Polish display names shown next to each control. */
export const METRIC_NAMES_PL: Record<Metric, string> = {
  happiness: "radość",
  sadness: "smutek",
  anger: "złość",
  disgust: "wstręt",
  fear: "strach",
  pride: "duma",
  valence: "znak emocji",
  arousal: "pobudzenie",
};
