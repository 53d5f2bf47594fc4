"""HTTP service tests over the in-process ASGI app."""

import pytest
from fastapi.testclient import TestClient

from mtoh.service import create_app
from mtoh.counts import total
from mtoh.solvers import Algorithm, solve


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_info(client):
    payload = client.get("/").json()
    assert payload["name"] == "mtoh"
    assert "/solve" in payload["endpoints"]


class TestSolve:
    def test_62_five_disks(self, client):
        payload = client.get("/solve", params={"alg": "62", "n": 5}).json()
        assert payload["length"] == 83
        assert len(payload["moves"]) == 83
        assert payload["solved"] is True
        assert payload["variant"] == "free"
        assert payload["initial_colors"] == [1, 0, 0]

    def test_moves_match_solver(self, client):
        payload = client.get("/solve", params={"alg": "67d", "n": 3}).json()
        trace = solve(Algorithm.F67_DOWN, 3)
        got = [(m["disk"], m["from"], m["to"]) for m in payload["moves"]]
        want = [(m.disk, m.src.name, m.dst.name) for m in trace.moves]
        assert got == want

    def test_default_variant_for_100_is_colored(self, client):
        payload = client.get("/solve", params={"alg": "100", "n": 2}).json()
        assert payload["variant"] == "colored-rbb"

    def test_100_on_free_tower(self, client):
        payload = client.get(
            "/solve", params={"alg": "100", "n": 3, "variant": "free"}
        ).json()
        assert payload["length"] == 13

    def test_incompatible_variant_rejected(self, client):
        response = client.get(
            "/solve", params={"alg": "sf", "n": 3, "variant": "free"}
        )
        assert response.status_code == 422

    def test_unknown_algorithm_rejected(self, client):
        assert client.get("/solve", params={"alg": "63", "n": 3}).status_code == 422

    def test_budget_rejected(self, client):
        assert client.get("/solve", params={"alg": "62", "n": 40}).status_code == 422


class TestCount:
    def test_trivial(self, client):
        payload = client.get("/count", params={"alg": "100", "n": 1}).json()
        assert payload["total"] == 1

    def test_large_exact(self, client):
        payload = client.get("/count", params={"alg": "62", "n": 64}).json()
        assert payload["total"] == total(Algorithm.F62, 64)
        assert payload["total_by_recurrence"] == payload["total"]
        assert len(payload["per_disk"]) == 64


class TestOracle:
    def test_single_instance(self, client):
        payload = client.get("/oracle", params={"n": 2}).json()
        assert payload["optimal_length"] == 4
        assert len(payload["moves"]) == 4

    def test_workers_do_not_change_the_answer(self, client):
        one = client.get("/oracle", params={"n": 4, "workers": 1}).json()
        four = client.get("/oracle", params={"n": 4, "workers": 4}).json()
        assert one == four

    def test_report(self, client):
        payload = client.get("/oracle/report", params={"max_n": 3}).json()
        assert [r["n"] for r in payload["rows"]] == [1, 2, 3]
        assert payload["rows"][2]["free_optimum"] == 11

    def test_budget(self, client):
        assert client.get("/oracle", params={"n": 9}).status_code == 422


class TestReports:
    def test_tables_all_ok(self, client):
        payload = client.get("/tables").json()
        assert payload["ok"] is True
        assert [t["table"] for t in payload["tables"]] == [
            "T1", "T4", "T6", "TSF", "T9", "T10",
        ]

    def test_single_table(self, client):
        payload = client.get("/tables", params={"table": "TSF"}).json()
        assert payload["tables"][0]["rows"][7]["total"] == 2464

    def test_unknown_table(self, client):
        assert client.get("/tables", params={"table": "T3"}).status_code == 422

    def test_crossings(self, client):
        payload = client.get("/crossings", params={"max_n": 5}).json()
        rows = {r["row"]: r["values"] for r in payload["rows"]}
        assert rows["62-total"] == [0, 0, 1, 5, 8]

    def test_ratios(self, client):
        payload = client.get("/ratios", params={"max_n": 8}).json()
        last = payload["rows"][-1]
        assert last["total_62"] == 2050
        assert last["ratio_62"]["decimal"].startswith("0.625")
        assert payload["limits"]["62/100"] == "67/108"

    def test_verify(self, client):
        payload = client.get("/verify", params={"max_n": 4}).json()
        assert payload["ok"] is True
        names = {c["name"] for c in payload["checks"]}
        assert "table-T10" in names

    def test_doomsday(self, client):
        payload = client.get("/doomsday").json()
        assert payload["elapsed_seconds"] == "9223372036854775808"
        assert payload["exact_62_total"] == str(total(Algorithm.F62, 64))
        assert payload["ratio_estimate_digits"] == "1.065077851664807113e+30"
