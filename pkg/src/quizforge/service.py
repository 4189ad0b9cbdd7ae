"""HTTP service backing the teacher review board.

Thin layer over the core modules: uploads go to the store, generation and
extraction run the same pure functions the CLI uses (identical inputs and
seeds give byte-identical JSON), and review/bank mutations are serialized
by the store. Module errors map 1:1 onto status codes.
"""

import os

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel, Field

from .bank import ExamMeta, QuestionBank, derive_seed, make_material
from .errors import QuizforgeError, UnsupportedUpload
from .mcq import generate_mcqs, mcq_to_dict, questions_to_json
from .pipeline import build_corpus
from .termweight import extract_keywords

_STATUS_CODES = {
    "NotFound": 404,
    "AlreadyReviewed": 409,
    "UnsupportedUpload": 415,
}


class GenerateRequest(BaseModel):
    """Generation parameters; the material id comes from the URL path."""

    n: int = Field(default=1, ge=1)
    top_k: int = Field(default=5, ge=1)
    seed: int | None = None
    max_questions: int | None = Field(default=None, ge=1)


class ExamMetaBody(BaseModel):
    subject: str = Field(min_length=1)
    session: str | None = None
    class_level: str | None = None
    term: str | None = None


def create_app(db_path: str | None = None) -> FastAPI:
    path = db_path or os.environ.get("QUIZFORGE_DB_PATH", "quizforge.db")
    store = QuestionBank(path)

    app = FastAPI(title="quizforge")
    app.state.store = store

    origin = os.environ.get("QUIZFORGE_UI_ORIGIN", "*")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[origin],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(QuizforgeError)
    async def _module_error(request: Request, exc: QuizforgeError):
        name = type(exc).__name__
        return JSONResponse(
            status_code=_STATUS_CODES.get(name, 400),
            content={"error": name, "detail": str(exc)},
        )

    @app.exception_handler(RequestValidationError)
    async def _validation_error(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"error": "ValidationError", "detail": str(exc)},
        )

    @app.post("/materials")
    async def upload_material(request: Request, title: str = "untitled"):
        raw = await request.body()
        if raw.startswith(b"%PDF-"):
            raise UnsupportedUpload("PDF uploads are not supported; convert to plain text first")
        try:
            body = raw.decode("utf-8")
        except UnicodeDecodeError:
            raise UnsupportedUpload("upload must be UTF-8 plain text")
        if "\x00" in body:
            raise UnsupportedUpload("upload must be UTF-8 plain text")
        material_id = store.store_material(make_material(title=title, body=body))
        return {"id": material_id}

    @app.get("/materials/{material_id}/stats")
    def material_stats(material_id: str):
        corpus = build_corpus(store.get_material(material_id))
        stats = corpus.stats
        return {
            "n_sentences": stats.n_sentences,
            "n_words": stats.n_words,
            "min_len": stats.min_len,
            "max_len": stats.max_len,
            "mean_len": stats.mean_len,
        }

    @app.post("/materials/{material_id}/generate")
    def generate(material_id: str, req: GenerateRequest):
        material = store.get_material(material_id)
        corpus = build_corpus(material)
        keywords = extract_keywords(corpus, n=req.n, top_k=req.top_k)
        seed = req.seed if req.seed is not None else derive_seed(material_id)
        questions = generate_mcqs(keywords, corpus, seed)
        if req.max_questions is not None:
            questions = questions[: req.max_questions]
        store.save_questions(questions)
        return Response(content=questions_to_json(questions), media_type="application/json")

    @app.get("/materials/{material_id}/questions")
    def list_questions(material_id: str, status: str | None = None):
        store.get_material(material_id)
        questions = store.questions_for(material_id, status)
        return Response(content=questions_to_json(questions), media_type="application/json")

    @app.post("/questions/{question_id}/accept")
    def accept_question(question_id: str):
        return mcq_to_dict(store.review(question_id, "accept"))

    @app.post("/questions/{question_id}/reject")
    def reject_question(question_id: str):
        return mcq_to_dict(store.review(question_id, "reject"))

    @app.post("/materials/{material_id}/bank")
    def bank_material(material_id: str, meta: ExamMetaBody):
        store.get_material(material_id)
        entries = store.bank_accepted(
            material_id,
            ExamMeta(
                subject=meta.subject,
                session=meta.session,
                class_level=meta.class_level,
                term=meta.term,
            ),
        )
        return {"banked": len(entries)}

    @app.get("/bank/export")
    def export_bank(subject: str | None = None, session: str | None = None):
        return Response(
            content=store.export_bank(subject=subject, session=session),
            media_type="application/json",
        )

    return app
