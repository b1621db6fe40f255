"""Regenerate the frontend test fixtures from the real service.

Usage: python3 tools/capture_ui_fixtures.py
Writes JSON response documents for the reference hierarchy into
frontend/tests/fixtures/ so the UI tests exercise genuine wire payloads.
"""

import json
import sys
from pathlib import Path

from fastapi.testclient import TestClient

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from conftest import H1_TEXT  # noqa: E402

from rolerank.service import create_app  # noqa: E402

OUT = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures"


def main() -> None:
    client = TestClient(create_app(hierarchy_text=H1_TEXT))
    OUT.mkdir(parents=True, exist_ok=True)

    fixtures = {
        "roles.json": client.get("/roles"),
        "authorize_s1.json": client.post("/authorize", json={"require": ["p1", "p2"], "s": 1}),
        "authorize_s2.json": client.post("/authorize", json={"require": ["p1", "p2"], "s": 2}),
        "authorize_exact.json": client.post(
            "/authorize", json={"require": ["p1", "p2", "p3", "p4"], "s": 1}
        ),
        "sweep.json": client.post(
            "/sweep", json={"require": ["p1", "p2"], "sMin": 0.1, "sMax": 10, "steps": 25}
        ),
    }
    for name, response in fixtures.items():
        assert response.status_code == 200, (name, response.status_code, response.text)
        (OUT / name).write_text(json.dumps(response.json(), indent=2) + "\n", encoding="utf-8")
        print(f"wrote {OUT / name}")


if __name__ == "__main__":
    main()
