"""Glue between the core package and the wire schemas.

Every endpoint and every CLI subcommand goes through these functions, so
the two front ends cannot drift apart. Handlers raise the core domain
errors; the API layer maps them to status codes and the CLI to exit codes.
"""

from __future__ import annotations

import itertools
from math import gcd

from .. import solvers, triples
from ..geometry import Embedding, build_k222, build_k333, circular_order, emit_svg, ptolemy_check
from ..solvers import Method
from .models import (
    CorollaryPair,
    CorollaryResponse,
    CoverageModel,
    DistanceEntry,
    EmbedChecks,
    EmbedResponse,
    ExactCoord,
    PointModel,
    SolveResponse,
    TableResponse,
    TableRow,
    TripleModel,
    TriplesResponse,
)


def solve(p: int, n: int, method: str = "power") -> SolveResponse:
    chosen = Method(method)
    if chosen is Method.RECURRENCE:
        if p != 7:
            raise ValueError("the recurrence method is defined for p = 7 only")
        pair = solvers.recurrence_solution(n)
    elif chosen is Method.DESCENT:
        pair = solvers.ascend(p, n)
    else:
        pair = solvers.eisenstein_solution(p, n)
    positive = pair.normalized()
    return SolveResponse(
        p=p,
        n=n,
        a=str(pair.a),
        b=str(pair.b),
        A=str(positive.A),
        B=str(positive.B),
        form_value=str(pair.form_value()),
        gcd=str(gcd(pair.a, pair.b)),
        method=chosen.value,
        p_divides_a=pair.a % p == 0,
    )


def table(n_max: int) -> TableResponse:
    rows = []
    for pair in solvers.solution_table(n_max):
        positive = pair.normalized()
        rows.append(
            TableRow(n=pair.exponent, a=str(pair.a), b=str(pair.b), A=str(positive.A), B=str(positive.B))
        )
    return TableResponse(n_max=n_max, rows=rows)


def corollary(n: int) -> CorollaryResponse:
    pairs = solvers.corollary_solutions(n)
    return CorollaryResponse(
        n=n,
        exponent=2 * n,
        form_value=str(7 ** (2 * n)),
        pairs=[CorollaryPair(A=str(p.A), B=str(p.B), coprime=p.is_coprime()) for p in pairs],
    )


def enumerate_triples(z_max: int, verify: bool = False) -> TriplesResponse:
    found = triples.enumerate_triples(z_max)
    models = [
        TripleModel(
            x=t.x, y=t.y, z=t.z, origin=t.origin.value, primitive=t.primitive, params=t.params
        )
        for t in found
    ]
    coverage = None
    if verify:
        report = triples.verify_parametrization(z_max)
        coverage = CoverageModel.model_validate(report.to_dict())
    return TriplesResponse(z_max=z_max, count=len(models), triples=models, coverage=coverage)


def _build(figure: str) -> Embedding:
    if figure == "k222":
        return build_k222()
    if figure == "k333":
        return build_k333()
    raise ValueError(f"unknown figure {figure!r} (expected k222 or k333)")


def _run_checks(embedding: Embedding) -> EmbedChecks:
    matrix = embedding.distance_matrix()
    labels = embedding.labels()
    points = [embedding.points[name] for name in labels]
    order = [labels[i] for i in circular_order(points)]

    quadruples = 0
    ptolemy_ok = True
    for quad in itertools.combinations(order, 4):
        quadruples += 1
        if not ptolemy_check(*(embedding.points[name] for name in quad)):
            ptolemy_ok = False

    odd_degrees = {name: 0 for name in labels}
    for (a, b), d in matrix.items():
        if d % 2:
            odd_degrees[a] += 1
            odd_degrees[b] += 1

    return EmbedChecks(
        on_circle=not embedding.off_circle(),
        expected_distances=not embedding.expected_failures(),
        all_pairs_integral=True,  # distance_matrix() would have raised otherwise
        ptolemy=ptolemy_ok,
        ptolemy_quadruples=quadruples,
        odd_degrees=odd_degrees,
    )


def embed(figure: str, check: bool = False) -> EmbedResponse:
    embedding = _build(figure)
    matrix = embedding.distance_matrix()

    def coord(v) -> ExactCoord:
        return ExactCoord(r=str(v.r), s=str(v.s))

    return EmbedResponse(
        figure=figure,
        radius_sq=str(embedding.radius_sq),
        labels=embedding.labels(),
        points={
            name: PointModel(x=coord(p.x), y=coord(p.y)) for name, p in sorted(embedding.points.items())
        },
        distances=[DistanceEntry(a=a, b=b, distance=d) for (a, b), d in sorted(matrix.items())],
        checks=_run_checks(embedding) if check else None,
    )


def embed_svg(figure: str, scale: float = 40.0) -> str:
    return emit_svg(_build(figure), scale)
