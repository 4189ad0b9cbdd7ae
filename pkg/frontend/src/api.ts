/**
 * Typed client for the quizforge HTTP API.
 * The UI talks to the service through this module only.
 */

export interface CorpusStats {
  n_sentences: number;
  n_words: number;
  min_len: number;
  max_len: number;
  mean_len: number;
}

export type McqStatus = "suggested" | "accepted" | "rejected";

export interface Mcq {
  id: string;
  material_id: string;
  doc_index: number;
  stem: string;
  options: string[];
  answer: string;
  keyword_position: number;
  status: McqStatus;
  seed: number;
}

export interface ExamMeta {
  subject: string;
  session?: string | null;
  class_level?: string | null;
  term?: string | null;
}

export interface BankEntry extends Mcq {
  exam_meta: ExamMeta;
  accepted_at: string;
}

export interface GenerateParams {
  n?: number;
  top_k?: number;
  seed?: number;
  max_questions?: number;
}

/** Error body the service returns: {error: <module error name>, detail}. */
export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly error: string,
    detail?: string,
  ) {
    super(detail ? `${error}: ${detail}` : error);
  }

  get isConflict(): boolean {
    return this.status === 409;
  }
}

export class QuizforgeApi {
  constructor(private readonly baseUrl: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.baseUrl + path, init);
    if (!response.ok) {
      let name = `HTTP ${response.status}`;
      let detail: string | undefined;
      try {
        const body = await response.json();
        name = body.error ?? name;
        detail = typeof body.detail === "string" ? body.detail : undefined;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, name, detail);
    }
    return (await response.json()) as T;
  }

  uploadMaterial(title: string, text: string): Promise<{ id: string }> {
    return this.request(`/materials?title=${encodeURIComponent(title)}`, {
      method: "POST",
      headers: { "Content-Type": "text/plain; charset=utf-8" },
      body: text,
    });
  }

  stats(materialId: string): Promise<CorpusStats> {
    return this.request(`/materials/${materialId}/stats`);
  }

  generate(materialId: string, params: GenerateParams = {}): Promise<Mcq[]> {
    return this.request(`/materials/${materialId}/generate`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(params),
    });
  }

  questions(materialId: string, status?: McqStatus): Promise<Mcq[]> {
    const query = status ? `?status=${status}` : "";
    return this.request(`/materials/${materialId}/questions${query}`);
  }

  accept(questionId: string): Promise<Mcq> {
    return this.request(`/questions/${questionId}/accept`, { method: "POST" });
  }

  reject(questionId: string): Promise<Mcq> {
    return this.request(`/questions/${questionId}/reject`, { method: "POST" });
  }

  bank(materialId: string, meta: ExamMeta): Promise<{ banked: number }> {
    return this.request(`/materials/${materialId}/bank`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(meta),
    });
  }

  exportBank(): Promise<BankEntry[]> {
    return this.request("/bank/export");
  }

  /** Direct download link for the bank document. */
  exportUrl(): string {
    return `${this.baseUrl}/bank/export`;
  }
}
