"""Request/response models for the HTTP service."""

from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field


class TraceMove(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    index: int
    disk: int
    from_post: str = Field(alias="from")
    to_post: str = Field(alias="to")
    colors: List[int] = Field(description="(S, I, D) effective colors after the move")


class SolveResponse(BaseModel):
    alg: str
    n: int
    variant: str
    start: str
    length: int
    solved: bool
    initial_colors: List[int]
    moves: List[TraceMove]


class CountResponse(BaseModel):
    alg: str
    n: int
    total: int
    per_disk: List[int]
    total_by_recurrence: int


class RatioValue(BaseModel):
    numerator: int
    denominator: int
    decimal: str


class RatioRow(BaseModel):
    n: int
    total_100: int
    total_67: int
    total_sf: int
    total_62: int
    ratio_67: RatioValue
    ratio_sf: RatioValue
    ratio_62: RatioValue


class RatiosResponse(BaseModel):
    max_n: int
    rows: List[RatioRow]
    limits: dict


class CrossingsResponse(BaseModel):
    max_n: int
    rows: List[dict] = Field(description="each row: {row: label, values: [...]}")


class TableMismatch(BaseModel):
    table: str
    row: str
    column: str
    computed: int
    published: int


class TableReportResponse(BaseModel):
    table: str
    title: str
    ok: bool
    rows: List[dict]
    mismatches: List[TableMismatch]


class TablesResponse(BaseModel):
    ok: bool
    tables: List[TableReportResponse]


class VerifyCheckResponse(BaseModel):
    name: str
    passed: bool
    blocking: bool
    detail: str


class VerifyResponse(BaseModel):
    ok: bool
    max_n: int
    checks: List[VerifyCheckResponse]


class OracleResponse(BaseModel):
    n: int
    variant: str
    optimal_length: int
    states_explored: int
    moves: List[TraceMove]


class OracleReportRow(BaseModel):
    n: int
    lengths: dict
    free_optimum: int
    colored_optimum: int
    semifree_optimum: int
    gaps: dict
    states_free: int


class OracleReportResponse(BaseModel):
    max_n: int
    rows: List[OracleReportRow]


class DoomsdayResponse(BaseModel):
    elapsed_seconds: str
    colored_total: str
    ratio_estimate_digits: str
    ratio_remaining_digits: str
    published_total_digits: str
    published_remaining_digits: str
    exact_62_total: str
    exact_62_remaining: str


class ServiceInfo(BaseModel):
    name: str
    version: str
    endpoints: List[str]
