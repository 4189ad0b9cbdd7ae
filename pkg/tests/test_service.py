import json
import os
import subprocess
import sys

import pytest
from fastapi.testclient import TestClient

from quizforge.service import create_app

from util import FIXTURES

FIXTURE_TEXT = (FIXTURES / "analytical_engine.txt").read_text(encoding="utf-8")


@pytest.fixture()
def client(tmp_path):
    app = create_app(db_path=str(tmp_path / "service.db"))
    with TestClient(app) as c:
        yield c
    app.state.store.close()


def upload(client, text=FIXTURE_TEXT, title="analytical_engine.txt"):
    response = client.post(f"/materials?title={title}", content=text.encode("utf-8"))
    assert response.status_code == 200, response.text
    return response.json()["id"]


class TestUpload:
    def test_returns_id(self, client):
        assert upload(client)

    def test_same_text_same_id(self, client):
        assert upload(client) == upload(client)

    def test_empty_file(self, client):
        response = client.post("/materials", content=b"")
        assert response.status_code == 400
        assert response.json()["error"] == "EmptyMaterial"

    def test_pdf_rejected(self, client):
        response = client.post("/materials", content=b"%PDF-1.4 binary junk")
        assert response.status_code == 415
        assert response.json()["error"] == "UnsupportedUpload"

    def test_non_utf8_rejected(self, client):
        response = client.post("/materials", content=b"\xff\xfe\x00broken")
        assert response.status_code == 415


class TestStats:
    def test_stats_shape(self, client):
        mid = upload(client)
        stats = client.get(f"/materials/{mid}/stats").json()
        assert stats["n_sentences"] == 5
        assert stats["min_len"] <= stats["mean_len"] <= stats["max_len"]

    def test_unknown_material(self, client):
        response = client.get("/materials/none/stats")
        assert response.status_code == 404
        assert response.json()["error"] == "NotFound"


class TestGenerate:
    def test_generates_suggested_questions(self, client):
        mid = upload(client)
        response = client.post(f"/materials/{mid}/generate", json={})
        assert response.status_code == 200
        questions = response.json()
        assert questions
        assert all(q["status"] == "suggested" for q in questions)
        assert all(len(q["options"]) == 4 for q in questions)

    def test_identical_seed_identical_bytes(self, client):
        mid = upload(client)
        a = client.post(f"/materials/{mid}/generate", json={"seed": 5})
        b = client.post(f"/materials/{mid}/generate", json={"seed": 5})
        assert a.content == b.content
        ids = [q["id"] for q in a.json()]
        assert ids == [q["id"] for q in b.json()]

    def test_default_seed_is_reproducible(self, client):
        mid = upload(client)
        a = client.post(f"/materials/{mid}/generate", json={})
        b = client.post(f"/materials/{mid}/generate", json={})
        assert a.content == b.content

    def test_max_questions_cap(self, client):
        mid = upload(client)
        response = client.post(f"/materials/{mid}/generate", json={"max_questions": 3})
        assert len(response.json()) == 3

    def test_validation_maps_to_400(self, client):
        mid = upload(client)
        response = client.post(f"/materials/{mid}/generate", json={"n": 0})
        assert response.status_code == 400
        assert response.json()["error"] == "ValidationError"

    def test_unknown_material_404(self, client):
        response = client.post("/materials/none/generate", json={})
        assert response.status_code == 404

    def test_insufficient_keywords_400(self, client):
        mid = upload(client, text="Zebra lion otter walk pace.", title="tiny.txt")
        response = client.post(f"/materials/{mid}/generate", json={"top_k": 1})
        # one sentence, top_k=1: pool of a single keyword
        assert response.status_code == 400
        assert response.json()["error"] == "InsufficientKeywords"


class TestReviewFlow:
    def generate(self, client):
        mid = upload(client)
        questions = client.post(f"/materials/{mid}/generate", json={"seed": 5}).json()
        return mid, questions

    def test_listing_by_status(self, client):
        mid, questions = self.generate(client)
        listed = client.get(f"/materials/{mid}/questions?status=suggested").json()
        assert {q["id"] for q in listed} == {q["id"] for q in questions}

    def test_accept_then_accept_conflicts(self, client):
        _, questions = self.generate(client)
        qid = questions[0]["id"]
        first = client.post(f"/questions/{qid}/accept")
        assert first.status_code == 200
        assert first.json()["status"] == "accepted"
        second = client.post(f"/questions/{qid}/accept")
        assert second.status_code == 409
        assert second.json()["error"] == "AlreadyReviewed"

    def test_reject(self, client):
        _, questions = self.generate(client)
        qid = questions[0]["id"]
        assert client.post(f"/questions/{qid}/reject").json()["status"] == "rejected"

    def test_unknown_question_404(self, client):
        assert client.post("/questions/none/accept").status_code == 404


class TestBankEndpoints:
    def test_bank_and_export(self, client):
        mid, questions = TestReviewFlow().generate(client)
        for q in questions[:2]:
            client.post(f"/questions/{q['id']}/accept")
        banked = client.post(
            f"/materials/{mid}/bank",
            json={"subject": "Computer Science", "session": "2019/2020"},
        )
        assert banked.status_code == 200
        assert banked.json()["banked"] == 2

        export = client.get("/bank/export")
        entries = json.loads(export.content)
        assert len(entries) == 2
        assert all(e["status"] == "accepted" for e in entries)

        filtered = client.get("/bank/export?subject=History").json()
        assert filtered == []

    def test_bank_requires_subject(self, client):
        mid, _ = TestReviewFlow().generate(client)
        response = client.post(f"/materials/{mid}/bank", json={})
        assert response.status_code == 400

    def test_bank_nothing_accepted(self, client):
        mid, _ = TestReviewFlow().generate(client)
        response = client.post(f"/materials/{mid}/bank", json={"subject": "cs"})
        assert response.status_code == 400
        assert response.json()["error"] == "NothingAccepted"

    def test_export_empty_bank(self, client):
        assert client.get("/bank/export").json() == []


class TestCliHttpParity:
    def test_generate_output_is_byte_identical(self, tmp_path):
        """CLI and HTTP run the same core operations on the same inputs."""
        fixture = FIXTURES / "harvard_mark.txt"
        out = tmp_path / "cli_questions.json"
        env = dict(os.environ)
        env["QUIZFORGE_DB_PATH"] = str(tmp_path / "parity.db")
        result = subprocess.run(
            [sys.executable, "-m", "quizforge.cli", "generate", str(fixture),
             "--seed", "123", "--out", str(out)],
            capture_output=True, text=True, env=env,
        )
        assert result.returncode == 0, result.stderr

        app = create_app(db_path=str(tmp_path / "parity.db"))
        with TestClient(app) as client:
            mid = client.post(
                "/materials?title=harvard_mark.txt",
                content=fixture.read_bytes(),
            ).json()["id"]
            response = client.post(f"/materials/{mid}/generate", json={"seed": 123})
        app.state.store.close()
        assert response.content == out.read_bytes()
