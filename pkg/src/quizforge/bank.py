"""Persistence: materials, suggested/reviewed questions, accepted bank.

Backed by a single SQLite file, so a teacher's desk install needs no server.
Materials are keyed by a content hash (uploading the same text twice is a
no-op), questions by their deterministic generation id. All writes funnel
through one lock; readers see consistent snapshots.
"""

import json
import sqlite3
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from hashlib import sha256
from pathlib import Path

from .errors import EmptyMaterial, NotFound, NothingAccepted
from .mcq import ACCEPTED, Mcq, apply_review, mcq_from_dict, mcq_to_dict
from .pipeline import RawMaterial

_SCHEMA = """
CREATE TABLE IF NOT EXISTS materials (
    id TEXT PRIMARY KEY,
    title TEXT NOT NULL,
    body TEXT NOT NULL,
    created_at TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS questions (
    id TEXT PRIMARY KEY,
    material_id TEXT NOT NULL,
    doc_index INTEGER NOT NULL,
    stem TEXT NOT NULL,
    options TEXT NOT NULL,
    answer TEXT NOT NULL,
    keyword_position INTEGER NOT NULL,
    status TEXT NOT NULL,
    seed INTEGER NOT NULL,
    reviewed_at TEXT
);
CREATE TABLE IF NOT EXISTS bank_entries (
    question_id TEXT PRIMARY KEY,
    material_id TEXT NOT NULL,
    subject TEXT NOT NULL,
    session TEXT,
    accepted_at TEXT NOT NULL,
    entry_json TEXT NOT NULL
);
"""


@dataclass(frozen=True)
class ExamMeta:
    subject: str
    session: str | None = None
    class_level: str | None = None
    term: str | None = None


@dataclass(frozen=True)
class BankEntry:
    mcq: Mcq
    exam_meta: ExamMeta
    accepted_at: str

    @property
    def id(self) -> str:
        return self.mcq.id


def content_id(title: str, body: str) -> str:
    """Stable 128-bit identifier derived from the material's content."""
    digest = sha256(title.encode("utf-8") + b"\x00" + body.encode("utf-8"))
    return digest.hexdigest()[:32]


def make_material(title: str, body: str) -> RawMaterial:
    return RawMaterial(id=content_id(title, body), title=title, body=body)


def derive_seed(material_id: str) -> int:
    """Default RNG seed for a material: re-generating stays reproducible."""
    return int(material_id[:12], 16)


def _utcnow() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds").replace("+00:00", "Z")


def _entry_dict(mcq: Mcq, meta: ExamMeta, accepted_at: str) -> dict:
    entry = mcq_to_dict(mcq)
    entry["exam_meta"] = {
        "subject": meta.subject,
        "session": meta.session,
        "class_level": meta.class_level,
        "term": meta.term,
    }
    entry["accepted_at"] = accepted_at
    return entry


def _entry_from_dict(data: dict) -> BankEntry:
    meta = data["exam_meta"]
    mcq_fields = {k: v for k, v in data.items() if k not in ("exam_meta", "accepted_at")}
    return BankEntry(
        mcq=mcq_from_dict(mcq_fields),
        exam_meta=ExamMeta(
            subject=meta["subject"],
            session=meta.get("session"),
            class_level=meta.get("class_level"),
            term=meta.get("term"),
        ),
        accepted_at=data["accepted_at"],
    )


class QuestionBank:
    """Single-file store for one deployment. Open once, share freely."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._conn = sqlite3.connect(str(self.path), check_same_thread=False)
        self._lock = threading.Lock()
        with self._conn:
            self._conn.executescript(_SCHEMA)

    def close(self) -> None:
        self._conn.close()

    # -- materials ----------------------------------------------------------

    def store_material(self, material: RawMaterial) -> str:
        """Persist a material; the same title+body always maps to one id."""
        if not material.body or not material.body.strip():
            raise EmptyMaterial("cannot store a material with an empty body")
        mid = content_id(material.title, material.body)
        with self._lock, self._conn:
            self._conn.execute(
                "INSERT OR IGNORE INTO materials (id, title, body, created_at) VALUES (?, ?, ?, ?)",
                (mid, material.title, material.body, _utcnow()),
            )
        return mid

    def get_material(self, material_id: str) -> RawMaterial:
        row = self._conn.execute(
            "SELECT id, title, body FROM materials WHERE id = ?", (material_id,)
        ).fetchone()
        if row is None:
            raise NotFound(f"no material with id {material_id!r}")
        return RawMaterial(id=row[0], title=row[1], body=row[2])

    # -- questions ----------------------------------------------------------

    def save_questions(self, mcqs: list[Mcq]) -> None:
        with self._lock, self._conn:
            self._conn.executemany(
                "INSERT OR IGNORE INTO questions "
                "(id, material_id, doc_index, stem, options, answer, keyword_position, status, seed) "
                "VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?)",
                [
                    (
                        m.id, m.material_id, m.doc_index, m.stem,
                        json.dumps(list(m.options), ensure_ascii=False),
                        m.answer, m.keyword_position, m.status, m.seed,
                    )
                    for m in mcqs
                ],
            )

    @staticmethod
    def _row_to_mcq(row) -> Mcq:
        return Mcq(
            id=row[0],
            material_id=row[1],
            doc_index=row[2],
            stem=row[3],
            options=tuple(json.loads(row[4])),
            answer=row[5],
            keyword_position=row[6],
            status=row[7],
            seed=row[8],
        )

    _Q_COLS = "id, material_id, doc_index, stem, options, answer, keyword_position, status, seed"

    def get_question(self, question_id: str) -> Mcq:
        row = self._conn.execute(
            f"SELECT {self._Q_COLS} FROM questions WHERE id = ?", (question_id,)
        ).fetchone()
        if row is None:
            raise NotFound(f"no question with id {question_id!r}")
        return self._row_to_mcq(row)

    def questions_for(self, material_id: str, status: str | None = None) -> list[Mcq]:
        """Questions of a material in generation order, optionally by status."""
        if status is None:
            rows = self._conn.execute(
                f"SELECT {self._Q_COLS} FROM questions WHERE material_id = ? ORDER BY rowid",
                (material_id,),
            ).fetchall()
        else:
            rows = self._conn.execute(
                f"SELECT {self._Q_COLS} FROM questions WHERE material_id = ? AND status = ? ORDER BY rowid",
                (material_id, status),
            ).fetchall()
        return [self._row_to_mcq(r) for r in rows]

    def review(self, question_id: str, decision: str) -> Mcq:
        """Apply an accept/reject decision and record when it happened."""
        with self._lock, self._conn:
            mcq = self.get_question(question_id)
            updated = apply_review(mcq, decision)
            self._conn.execute(
                "UPDATE questions SET status = ?, reviewed_at = ? WHERE id = ?",
                (updated.status, _utcnow(), question_id),
            )
        return updated

    # -- bank ---------------------------------------------------------------

    def bank_accepted(self, material_id: str, meta: ExamMeta) -> list[BankEntry]:
        """Turn every accepted question of a material into a bank entry.

        Idempotent: re-running with the same material adds nothing new.
        Returns all entries of the material, previously banked ones included.
        """
        with self._lock, self._conn:
            rows = self._conn.execute(
                f"SELECT {self._Q_COLS}, reviewed_at FROM questions "
                "WHERE material_id = ? AND status = ? ORDER BY rowid",
                (material_id, ACCEPTED),
            ).fetchall()
            if not rows:
                raise NothingAccepted(f"material {material_id!r} has no accepted questions")
            for row in rows:
                mcq = self._row_to_mcq(row[:9])
                accepted_at = row[9] or _utcnow()
                entry = _entry_dict(mcq, meta, accepted_at)
                self._conn.execute(
                    "INSERT OR IGNORE INTO bank_entries "
                    "(question_id, material_id, subject, session, accepted_at, entry_json) "
                    "VALUES (?, ?, ?, ?, ?, ?)",
                    (
                        mcq.id, material_id, meta.subject, meta.session,
                        accepted_at, json.dumps(entry, ensure_ascii=False),
                    ),
                )
        rows = self._conn.execute(
            "SELECT entry_json FROM bank_entries WHERE material_id = ? "
            "ORDER BY accepted_at, question_id",
            (material_id,),
        ).fetchall()
        return [_entry_from_dict(json.loads(r[0])) for r in rows]

    def export_bank(self, subject: str | None = None, session: str | None = None) -> str:
        """Canonical JSON document of bank entries, deterministically ordered."""
        query = "SELECT entry_json FROM bank_entries"
        clauses, params = [], []
        if subject is not None:
            clauses.append("subject = ?")
            params.append(subject)
        if session is not None:
            clauses.append("session = ?")
            params.append(session)
        if clauses:
            query += " WHERE " + " AND ".join(clauses)
        query += " ORDER BY accepted_at, question_id"
        entries = [json.loads(r[0]) for r in self._conn.execute(query, params).fetchall()]
        return json.dumps(entries, indent=2, ensure_ascii=False) + "\n"

    def import_bank(self, document: str) -> int:
        """Load an exported document; round-trips back out byte-identical."""
        entries = json.loads(document)
        count = 0
        with self._lock, self._conn:
            for entry in entries:
                if entry.get("status") != ACCEPTED:
                    raise ValueError(
                        f"bank entry {entry.get('id')!r} has status {entry.get('status')!r}, expected accepted"
                    )
                meta = entry["exam_meta"]
                self._conn.execute(
                    "INSERT OR IGNORE INTO bank_entries "
                    "(question_id, material_id, subject, session, accepted_at, entry_json) "
                    "VALUES (?, ?, ?, ?, ?, ?)",
                    (
                        entry["id"], entry["material_id"], meta["subject"],
                        meta.get("session"), entry["accepted_at"],
                        json.dumps(entry, ensure_ascii=False),
                    ),
                )
                count += 1
        return count
