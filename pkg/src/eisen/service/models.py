"""Pydantic request/response schemas shared by the HTTP API and the CLI.

Solution coordinates are serialized as decimal strings: a_n outgrows 64-bit
integers near n = 45, and strings survive every JSON consumer unharmed.
Triple coordinates and chord lengths stay ints (they are bounded by the
caller-supplied z_max / figure sizes).
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

MethodName = Literal["power", "recurrence", "descent"]
FigureName = Literal["k222", "k333"]


class SolveRequest(BaseModel):
    p: int = Field(ge=2, description="base of the right-hand side p^n")
    n: int = Field(ge=0, description="exponent")
    method: MethodName = "power"


class SolveResponse(BaseModel):
    p: int
    n: int
    a: str
    b: str
    A: str
    B: str
    form_value: str
    gcd: str
    method: MethodName
    p_divides_a: bool


class TableRow(BaseModel):
    n: int
    a: str
    b: str
    A: str
    B: str


class TableResponse(BaseModel):
    n_max: int
    rows: list[TableRow]


class CorollaryPair(BaseModel):
    A: str
    B: str
    coprime: bool


class CorollaryResponse(BaseModel):
    n: int
    exponent: int
    form_value: str
    pairs: list[CorollaryPair]


class TripleModel(BaseModel):
    x: int
    y: int
    z: int
    origin: str
    primitive: bool
    params: Optional[tuple[int, int]] = None


class MissingTriple(BaseModel):
    x: int
    y: int
    z: int
    primitive: bool


class UnsoundTriple(BaseModel):
    x: int
    y: int
    z: int


class CoverageModel(BaseModel):
    z_max: int
    generated_count: int
    brute_count: int
    missing: list[MissingTriple]
    unsound: list[UnsoundTriple]


class TriplesResponse(BaseModel):
    z_max: int
    count: int
    triples: list[TripleModel]
    coverage: Optional[CoverageModel] = None


class ExactCoord(BaseModel):
    """The exact value r + s·√3, components as fraction strings."""

    r: str
    s: str


class PointModel(BaseModel):
    x: ExactCoord
    y: ExactCoord


class DistanceEntry(BaseModel):
    a: str
    b: str
    distance: int


class EmbedChecks(BaseModel):
    on_circle: bool
    expected_distances: bool
    all_pairs_integral: bool
    ptolemy: bool
    ptolemy_quadruples: int
    odd_degrees: dict[str, int]


class EmbedResponse(BaseModel):
    figure: FigureName
    radius_sq: str
    labels: list[str]
    points: dict[str, PointModel]
    distances: list[DistanceEntry]
    checks: Optional[EmbedChecks] = None
