"""HTTP service wrapping the core package.

Every operation the CLI offers is an endpoint here; the CLI is a thin client.
Domain errors surface as JSON ``{"error": <token>, "detail": ...}`` with a
422 status (404 for unknown series names).
"""

from __future__ import annotations

from typing import Iterator, Literal

from fastapi import FastAPI, Query
from fastapi.responses import JSONResponse, StreamingResponse
from pydantic import BaseModel, Field

from . import __version__
from .census import (
    BadQuery,
    CensusQuery,
    GroupBy,
    OutOfRange,
    RECONCILE_TARGETS,
    appendix_listing,
    census_json,
    enumerate_involutions,
    reconcile,
    reconcile_json,
    run_census,
)
from .paths import (
    InvalidPath,
    LabelledMotzkinPath,
    ascii_drawing,
    involution_of_path,
    path_of_involution,
)
from .perms import NotABijection, NotAnInvolution, Permutation
from .series import (
    BIVARIATE_SERIES,
    DEFAULT_ORDER,
    InternalMismatch,
    UNIVARIATE_SERIES,
    UnknownSeries,
    bivariate_by_name,
    series_by_name,
)
from .structure import (
    ArityMismatch,
    FineClass,
    NotADyckPath,
    NotIrreducible,
    OutOfDomain,
    PositionOutOfRange,
    Undecomposable,
    classify,
    skeleton_decomposition,
)

MAX_LENGTH = 16
MAX_BIVARIATE_ORDER = 20

_GROUP_BY = {
    "none": GroupBy.NONE,
    "class": GroupBy.FINE_CLASS,
    "fixed": GroupBy.FIXED_POINTS,
    "class_fixed": GroupBy.FINE_CLASS_FIXED_POINTS,
}


class CensusRequest(BaseModel):
    n: int = Field(ge=1, le=MAX_LENGTH)
    avoid: list[str] = []
    by: Literal["none", "class", "fixed", "class_fixed"] = "none"
    witnesses: int = Field(0, ge=0, le=1000)


class BucketEntry(BaseModel):
    key: str
    count: int
    witnesses: list[str] | None = None


class CensusResponse(BaseModel):
    n: int
    avoid: list[str]
    group_by: str
    total: int
    buckets: list[BucketEntry]


class ClassifyResponse(BaseModel):
    permutation: str
    fine_class: str
    sketch: str | None


class PathResponse(BaseModel):
    permutation: str
    path: str
    labelling: str
    irreducible: bool
    drawing: str | None


class UnpathResponse(BaseModel):
    path: str
    permutation: str


class RcResponse(BaseModel):
    permutation: str
    reverse_complement: str


class SeriesListResponse(BaseModel):
    univariate: list[str]
    bivariate: list[str]


class SeriesResponse(BaseModel):
    name: str
    order: int
    coefficients: list[str] | None = None
    rows: list[list[str]] | None = None
    pretty: list[str]


class ReconcileRequest(BaseModel):
    series: str
    max_n: int = Field(ge=1, le=14)


class ReconcileRowModel(BaseModel):
    n: int
    series: int
    census: int
    ok: bool
    witnesses: list[str]


class ReconcileResponse(BaseModel):
    series: str
    passed: bool
    rows: list[ReconcileRowModel]


class AppendixResponse(BaseModel):
    n: int
    count: int
    involutions: list[str]


class EnumerateResponse(BaseModel):
    n: int
    avoid: list[str]
    count: int
    involutions: list[str]


_ERROR_STATUS: list[tuple[type[Exception], int]] = [
    (UnknownSeries, 404),
    (NotABijection, 422),
    (NotAnInvolution, 422),
    (InvalidPath, 422),
    (OutOfDomain, 422),
    (PositionOutOfRange, 422),
    (ArityMismatch, 422),
    (NotADyckPath, 422),
    (NotIrreducible, 422),
    (Undecomposable, 422),
    (BadQuery, 422),
    (OutOfRange, 422),
    (InternalMismatch, 500),
]


def _parse_patterns(texts: list[str]) -> tuple[Permutation, ...]:
    return tuple(Permutation.parse(t) for t in texts)


def create_app() -> FastAPI:
    app = FastAPI(title="invol", version=__version__)

    for exc_type, status in _ERROR_STATUS:
        def handler(request, exc, status=status):  # noqa: ARG001
            return JSONResponse(
                status_code=status,
                content={"error": type(exc).__name__, "detail": str(exc)},
            )

        app.add_exception_handler(exc_type, handler)

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/census", response_model=CensusResponse)
    def census(request: CensusRequest) -> CensusResponse:
        query = CensusQuery(
            n=request.n,
            avoid=_parse_patterns(request.avoid),
            group_by=_GROUP_BY[request.by],
        )
        report = run_census(query, witness_cap=request.witnesses)
        payload = census_json(report)
        buckets = [
            BucketEntry(
                key=key,
                count=count,
                witnesses=payload["witnesses"].get(key) if request.witnesses else None,
            )
            for key, count in payload["buckets"].items()
        ]
        return CensusResponse(
            n=request.n,
            avoid=payload["avoid"],
            group_by=payload["group_by"],
            total=report.total,
            buckets=buckets,
        )

    @app.get("/enumerate")
    def enumerate_endpoint(
        n: int = Query(ge=1, le=MAX_LENGTH),
        avoid: str = "",
        format: Literal["lines", "csv", "json"] = "lines",
    ):
        patterns = _parse_patterns([t for t in avoid.split(",") if t])
        CensusQuery(n=n, avoid=patterns)  # validates pattern lengths
        if format == "json":
            members = [str(p) for p in enumerate_involutions(n, patterns)]
            return EnumerateResponse(
                n=n,
                avoid=[p.compact() for p in patterns],
                count=len(members),
                involutions=members,
            )

        def lines() -> Iterator[str]:
            if format == "csv":
                yield "permutation\n"
            for p in enumerate_involutions(n, patterns):
                yield f"{p}\n"

        media = "text/csv" if format == "csv" else "text/plain"
        return StreamingResponse(lines(), media_type=media)

    @app.get("/classify", response_model=ClassifyResponse)
    def classify_endpoint(perm: str) -> ClassifyResponse:
        p = Permutation.parse(perm)
        fine = classify(p)
        sketch = None
        if fine is not FineClass.ONE:
            sketch = skeleton_decomposition(p).sketch()
        return ClassifyResponse(permutation=str(p), fine_class=fine.token, sketch=sketch)

    @app.get("/path", response_model=PathResponse)
    def path_endpoint(perm: str, draw: bool = False) -> PathResponse:
        p = Permutation.parse(perm)
        path = path_of_involution(p)
        return PathResponse(
            permutation=str(p),
            path=path.text(),
            labelling=path.kind().value,
            irreducible=path.is_irreducible(),
            drawing=ascii_drawing(path) if draw else None,
        )

    @app.get("/unpath", response_model=UnpathResponse)
    def unpath_endpoint(path: str) -> UnpathResponse:
        parsed = LabelledMotzkinPath.parse(path)
        return UnpathResponse(path=parsed.text(), permutation=str(involution_of_path(parsed)))

    @app.get("/rc", response_model=RcResponse)
    def rc_endpoint(perm: str) -> RcResponse:
        p = Permutation.parse(perm)
        return RcResponse(permutation=str(p), reverse_complement=str(p.reverse_complement()))

    @app.get("/series", response_model=SeriesListResponse)
    def series_list() -> SeriesListResponse:
        return SeriesListResponse(
            univariate=sorted(UNIVARIATE_SERIES),
            bivariate=sorted(BIVARIATE_SERIES),
        )

    @app.get("/series/{name}", response_model=SeriesResponse)
    def series_endpoint(
        name: str, order: int = Query(DEFAULT_ORDER, ge=1, le=48)
    ) -> SeriesResponse:
        if name in BIVARIATE_SERIES:
            if order > MAX_BIVARIATE_ORDER:
                raise BadQuery(
                    f"bivariate series are limited to order {MAX_BIVARIATE_ORDER}"
                )
            series = bivariate_by_name(name, order)
            return SeriesResponse(
                name=name,
                order=order,
                rows=series.coefficient_string_rows(),
                pretty=series.pretty(),
            )
        series = series_by_name(name, order)
        return SeriesResponse(
            name=name,
            order=order,
            coefficients=series.coefficient_strings(),
            pretty=[series.pretty()],
        )

    @app.post("/reconcile", response_model=ReconcileResponse)
    def reconcile_endpoint(request: ReconcileRequest) -> ReconcileResponse:
        report = reconcile(request.series, request.max_n)
        payload = reconcile_json(report)
        return ReconcileResponse(
            series=report.series,
            passed=report.passed,
            rows=[ReconcileRowModel(**row) for row in payload["rows"]],
        )

    @app.get("/reconcile/targets")
    def reconcile_targets() -> dict:
        return {"targets": sorted(RECONCILE_TARGETS)}

    @app.get("/appendix", response_model=AppendixResponse)
    def appendix_endpoint(n: int) -> AppendixResponse:
        members = appendix_listing(n)
        return AppendixResponse(
            n=n, count=len(members), involutions=[str(p) for p in members]
        )

    return app


app = create_app()
