"""HTTP service wrapping the tower engine.

Every CLI command maps to one endpoint here; the CLI is a thin client.
All handlers are pure computations over query parameters, so responses
are deterministic and safe to cache.

Run with: ``uvicorn mtoh.service.app:app``
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, HTTPException, Query

from .. import analysis, counts, oracle, published, verification
from ..core import Trace, parse_variant, variant_token, PostId, POSTS
from ..solvers import Algorithm, compatible_variants, default_variant, solve
from . import schemas

SOLVE_MAX_N = 12

ENDPOINTS = [
    "/solve",
    "/count",
    "/verify",
    "/oracle",
    "/oracle/report",
    "/crossings",
    "/tables",
    "/ratios",
    "/doomsday",
]


def _algorithm(token: str) -> Algorithm:
    try:
        return Algorithm(token)
    except ValueError:
        raise HTTPException(
            status_code=422,
            detail=f"unknown algorithm {token!r}; expected one of "
            f"{[a.value for a in Algorithm]}",
        )


def _variant_for(alg: Algorithm, token: Optional[str]):
    if token is None:
        return default_variant(alg)
    allowed = compatible_variants(alg)
    if token not in allowed:
        raise HTTPException(
            status_code=422,
            detail=f"algorithm {alg.value!r} does not run on variant {token!r}; "
            f"allowed: {list(allowed)}",
        )
    try:
        return parse_variant(token)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


def _trace_moves(trace: Trace) -> "list[schemas.TraceMove]":
    return [
        schemas.TraceMove(
            index=i,
            disk=mv.disk,
            colors=list(cols),
            **{"from": mv.src.name, "to": mv.dst.name},
        )
        for i, (mv, cols) in enumerate(zip(trace.moves, trace.colors[1:]), start=1)
    ]


def create_app() -> FastAPI:
    app = FastAPI(
        title="mtoh",
        version="0.1.0",
        description="Magnetic Tower of Hanoi rules engine, solvers and reports",
    )

    @app.get("/", response_model=schemas.ServiceInfo)
    def info() -> schemas.ServiceInfo:
        return schemas.ServiceInfo(name="mtoh", version="0.1.0", endpoints=ENDPOINTS)

    @app.get("/solve", response_model=schemas.SolveResponse)
    def solve_endpoint(
        alg: str = Query(...),
        n: int = Query(..., ge=1, le=SOLVE_MAX_N),
        variant: Optional[str] = Query(None),
    ) -> schemas.SolveResponse:
        algorithm = _algorithm(alg)
        var = _variant_for(algorithm, variant)
        trace = solve(algorithm, n, var)
        start_post = next(
            (p for p in POSTS if trace.start.stacks[p]), PostId.S
        )
        from ..core import is_solved

        return schemas.SolveResponse(
            alg=algorithm.value,
            n=n,
            variant=variant_token(var),
            start=start_post.name,
            length=len(trace),
            solved=is_solved(trace.end),
            initial_colors=list(trace.colors[0]),
            moves=_trace_moves(trace),
        )

    @app.get("/count", response_model=schemas.CountResponse)
    def count_endpoint(
        alg: str = Query(...),
        n: int = Query(..., ge=1, le=256),
    ) -> schemas.CountResponse:
        algorithm = _algorithm(alg)
        return schemas.CountResponse(
            alg=algorithm.value,
            n=n,
            total=counts.total(algorithm, n),
            per_disk=[counts.per_disk(algorithm, k) for k in range(1, n + 1)],
            total_by_recurrence=counts.total_by_recurrence(algorithm, n),
        )

    @app.get("/verify", response_model=schemas.VerifyResponse)
    def verify_endpoint(
        max_n: int = Query(8, ge=1, le=verification.TRACE_MAX_N),
    ) -> schemas.VerifyResponse:
        report = verification.run_verification(max_n=max_n)
        return schemas.VerifyResponse(
            ok=report.ok,
            max_n=report.max_n,
            checks=[
                schemas.VerifyCheckResponse(
                    name=c.name, passed=c.passed, blocking=c.blocking, detail=c.detail
                )
                for c in report.checks
            ],
        )

    @app.get("/oracle", response_model=schemas.OracleResponse)
    def oracle_endpoint(
        n: int = Query(..., ge=1, le=oracle.BFS_MAX_N),
        variant: str = Query("free"),
        workers: int = Query(1, ge=1, le=16),
    ) -> schemas.OracleResponse:
        try:
            var = parse_variant(variant)
            result = oracle.bfs_optimal(n, var, workers=workers)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return schemas.OracleResponse(
            n=n,
            variant=variant_token(var),
            optimal_length=result.optimal_length,
            states_explored=result.states_explored,
            moves=_trace_moves(result.trace),
        )

    @app.get("/oracle/report", response_model=schemas.OracleReportResponse)
    def oracle_report_endpoint(
        max_n: int = Query(6, ge=1, le=oracle.BFS_MAX_N),
    ) -> schemas.OracleReportResponse:
        rows = oracle.optimality_report(max_n)
        return schemas.OracleReportResponse(
            max_n=max_n,
            rows=[
                schemas.OracleReportRow(
                    n=r.n,
                    lengths=r.lengths,
                    free_optimum=r.free_optimum,
                    colored_optimum=r.colored_optimum,
                    semifree_optimum=r.semifree_optimum,
                    gaps=r.gaps,
                    states_free=r.states_free,
                )
                for r in rows
            ],
        )

    @app.get("/crossings", response_model=schemas.CrossingsResponse)
    def crossings_endpoint(
        max_n: int = Query(8, ge=1, le=verification.TRACE_MAX_N),
    ) -> schemas.CrossingsResponse:
        table = analysis.crossings_table(max_n)
        return schemas.CrossingsResponse(
            max_n=max_n,
            rows=[{"row": label, "values": values} for label, values in table.items()],
        )

    @app.get("/tables", response_model=schemas.TablesResponse)
    def tables_endpoint(table: Optional[str] = Query(None)) -> schemas.TablesResponse:
        if table is not None and table not in published.TABLE_IDS:
            raise HTTPException(
                status_code=422,
                detail=f"unknown table {table!r}; know {list(published.TABLE_IDS)}",
            )
        ids = [table] if table else list(published.TABLE_IDS)
        reports = [analysis.table_report(tid) for tid in ids]
        return schemas.TablesResponse(
            ok=all(r.ok for r in reports),
            tables=[
                schemas.TableReportResponse(
                    table=r.table,
                    title=r.title,
                    ok=r.ok,
                    rows=r.rows,
                    mismatches=[
                        schemas.TableMismatch(
                            table=m.table,
                            row=m.row,
                            column=m.column,
                            computed=m.computed,
                            published=m.published,
                        )
                        for m in r.mismatches
                    ],
                )
                for r in reports
            ],
        )

    @app.get("/ratios", response_model=schemas.RatiosResponse)
    def ratios_endpoint(
        max_n: int = Query(20, ge=2, le=200),
    ) -> schemas.RatiosResponse:
        rows = analysis.efficiency_series(max_n)

        def ratio_value(fr) -> schemas.RatioValue:
            return schemas.RatioValue(
                numerator=fr.numerator,
                denominator=fr.denominator,
                decimal=counts.decimal_string(fr, 12),
            )

        return schemas.RatiosResponse(
            max_n=max_n,
            rows=[
                schemas.RatioRow(
                    n=r.n,
                    total_100=r.total_100,
                    total_67=r.total_67,
                    total_sf=r.total_sf,
                    total_62=r.total_62,
                    ratio_67=ratio_value(r.ratio_67),
                    ratio_sf=ratio_value(r.ratio_sf),
                    ratio_62=ratio_value(r.ratio_62),
                )
                for r in rows
            ],
            limits={
                "67/100": "2/3",
                "sf/100": "3/4",
                "62/100": "67/108",
            },
        )

    @app.get("/doomsday", response_model=schemas.DoomsdayResponse)
    def doomsday_endpoint() -> schemas.DoomsdayResponse:
        r = counts.doomsday_report()
        return schemas.DoomsdayResponse(
            elapsed_seconds=str(r.elapsed_seconds),
            colored_total=str(r.colored_total),
            ratio_estimate_digits=r.ratio_estimate_digits,
            ratio_remaining_digits=r.ratio_remaining_digits,
            published_total_digits=r.published_total_digits,
            published_remaining_digits=r.published_remaining_digits,
            exact_62_total=str(r.exact_62_total),
            exact_62_remaining=str(r.exact_62_remaining),
        )

    return app


app = create_app()
