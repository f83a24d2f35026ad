/** Typed client for the annotation service HTTP API. The server is the
 * single source of truth; every response is validated against its schema. */

import { z } from "zod";

const SessionResponse = z.object({ session: z.string() });

const SetProgress = z.object({
  set_id: z.string(),
  done: z.number().int(),
  total: z.number().int(),
});

const AssignmentsResponse = z.object({ sets: z.array(SetProgress) });

const LabelMap = z.record(z.string(), z.number().int());

const NextTextResponse = z.object({
  text_id: z.string().nullable(),
  clean_text: z.string().nullable(),
  position: z.number().int(),
  total: z.number().int(),
  draft: LabelMap.nullable().optional(),
});

const RatingAck = z.object({
  stored: z.boolean(),
  final: z.boolean(),
  set_done: z.number().int(),
  set_total: z.number().int(),
});

const ResumeResponse = z.object({
  pending: z.array(SetProgress),
  set_id: z.string().nullable(),
  position: z.number().int().nullable(),
  draft: LabelMap.nullable(),
});

const AggregateResponse = z.object({
  text_id: z.string(),
  count: z.number().int(),
  mean: z.record(z.string(), z.number()),
  sd: z.record(z.string(), z.number()),
});

const ErrorBody = z.object({
  detail: z.object({ error: z.string(), detail: z.string().default("") }),
});

export type SetProgress = z.infer<typeof SetProgress>;
export type NextText = z.infer<typeof NextTextResponse>;
export type RatingAck = z.infer<typeof RatingAck>;
export type ResumeState = z.infer<typeof ResumeResponse>;
export type Aggregate = z.infer<typeof AggregateResponse>;

/** Server-raised domain error (NotAssigned, ScaleViolation, ...). */
export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    detail: string,
  ) {
    super(`${code}: ${detail}`);
  }
}

export class ApiClient {
  private session: string | null = null;

  constructor(private readonly baseUrl: string) {}

  get authenticated(): boolean {
    return this.session !== null;
  }

  private async request(
    method: "GET" | "POST",
    path: string,
    body?: unknown,
  ): Promise<unknown> {
    const headers: Record<string, string> = { "content-type": "application/json" };
    if (this.session) headers.authorization = `Bearer ${this.session}`;
    const response = await fetch(this.baseUrl + path, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload: unknown = await response.json();
    if (!response.ok) {
      const parsed = ErrorBody.safeParse(payload);
      if (parsed.success) {
        throw new ApiError(
          response.status,
          parsed.data.detail.error,
          parsed.data.detail.detail,
        );
      }
      throw new ApiError(response.status, "HttpError", JSON.stringify(payload));
    }
    return payload;
  }

  async openSession(annotatorId: string, token = ""): Promise<void> {
    const raw = await this.request("POST", "/api/session", {
      annotator_id: annotatorId,
      token,
    });
    this.session = SessionResponse.parse(raw).session;
  }

  async assignments(): Promise<SetProgress[]> {
    const raw = await this.request("GET", "/api/assignments");
    return AssignmentsResponse.parse(raw).sets;
  }

  async nextText(setId: string): Promise<NextText> {
    const raw = await this.request("GET", `/api/sets/${setId}/next`);
    return NextTextResponse.parse(raw);
  }

  async submitRating(
    textId: string,
    setId: string,
    labels: Record<string, number>,
    final: boolean,
  ): Promise<RatingAck> {
    const raw = await this.request("POST", "/api/ratings", {
      text_id: textId,
      set_id: setId,
      labels,
      final,
    });
    return RatingAck.parse(raw);
  }

  async postpone(setId: string): Promise<void> {
    await this.request("POST", "/api/postpone", { set_id: setId });
  }

  async resume(): Promise<ResumeState> {
    const raw = await this.request("GET", "/api/resume");
    return ResumeResponse.parse(raw);
  }

  async aggregate(textId: string): Promise<Aggregate> {
    const raw = await this.request("GET", `/api/texts/${textId}/aggregate`);
    return AggregateResponse.parse(raw);
  }
}
