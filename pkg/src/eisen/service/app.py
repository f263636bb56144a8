"""FastAPI application exposing the solver, parametrization and embedding
operations as a stateless compute service."""

from __future__ import annotations

from fastapi import FastAPI, Query, Request, Response
from fastapi.responses import JSONResponse

from ..errors import ConstructionFailed, EisenError, NoRepresentation
from . import handlers
from .models import (
    CorollaryResponse,
    EmbedResponse,
    FigureName,
    SolveRequest,
    SolveResponse,
    TableResponse,
    TriplesResponse,
)

app = FastAPI(
    title="eisen",
    version="0.1.0",
    description=(
        "Exact constructions and verification for the quadratic form "
        "a² + ab + b²: solutions of a² + ab + b² = pⁿ, the parametrization "
        "of x² + xy + y² = z², and integer-distance circle embeddings."
    ),
)


@app.exception_handler(NoRepresentation)
async def no_representation_handler(request: Request, exc: NoRepresentation) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(ConstructionFailed)
async def construction_failed_handler(request: Request, exc: ConstructionFailed) -> JSONResponse:
    return JSONResponse(status_code=500, content={"detail": str(exc)})


@app.exception_handler(EisenError)
async def domain_error_handler(request: Request, exc: EisenError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(ValueError)
async def value_error_handler(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok"}


@app.post("/solve", response_model=SolveResponse)
def solve(request: SolveRequest) -> SolveResponse:
    return handlers.solve(request.p, request.n, request.method)


@app.get("/table", response_model=TableResponse)
def table(n_max: int = Query(ge=0)) -> TableResponse:
    return handlers.table(n_max)


@app.get("/corollary", response_model=CorollaryResponse)
def corollary(n: int = Query(ge=1)) -> CorollaryResponse:
    return handlers.corollary(n)


@app.get("/triples", response_model=TriplesResponse)
def triples(z_max: int = Query(ge=1), verify: bool = False) -> TriplesResponse:
    return handlers.enumerate_triples(z_max, verify)


@app.get("/embed/{figure}", response_model=EmbedResponse)
def embed(figure: FigureName, check: bool = False) -> EmbedResponse:
    return handlers.embed(figure, check)


@app.get("/embed/{figure}/svg")
def embed_svg(figure: FigureName, scale: float = Query(default=40.0, gt=0)) -> Response:
    return Response(content=handlers.embed_svg(figure, scale), media_type="image/svg+xml")
