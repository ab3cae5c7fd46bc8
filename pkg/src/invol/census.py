"""Exhaustive enumeration of involutions under avoidance constraints, with
grouped tallies and reconciliation against the counting series.

Generation goes through labelled Motzkin paths: a 4321 constraint selects the
unitary labelling and a 3412 constraint the maximal labelling, so those
patterns never need a post-filter; any remaining patterns are filtered.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .perms import Permutation
from .paths import LabellingKind, enumerate_paths, involution_of_path
from .series import Series, UnknownSeries, series_by_name
from .structure import FineClass, classify

DEFAULT_WITNESS_CAP = 100


class BadQuery(ValueError):
    """Census query outside the supported shape."""


class OutOfRange(ValueError):
    """Requested listing outside the supported range."""


class GroupBy(enum.Enum):
    NONE = "none"
    FINE_CLASS = "fine_class"
    FIXED_POINTS = "fixed_points"
    FINE_CLASS_FIXED_POINTS = "fine_class_fixed_points"


_CLASS_ORDER = [
    FineClass.ONE,
    FineClass.TYPE12,
    FineClass.TYPE21,
    FineClass.SIMPLE,
    FineClass.INFLATION_OF_SIMPLE,
]

_PATTERN_4321 = Permutation.parse("4321")
_PATTERN_3412 = Permutation.parse("3412")


@dataclass(frozen=True, slots=True)
class CensusQuery:
    n: int
    avoid: tuple[Permutation, ...] = ()
    group_by: GroupBy = GroupBy.NONE

    def __post_init__(self) -> None:
        if self.n < 1:
            raise BadQuery("census length must be >= 1")
        for q in self.avoid:
            if len(q) not in (3, 4):
                raise BadQuery(f"avoided patterns must have length 3 or 4, got {q}")


@dataclass(slots=True)
class CensusReport:
    query: CensusQuery
    total: int
    buckets: dict[object, int]
    witnesses: dict[object, list[Permutation]] = field(default_factory=dict)


def bucket_token(key: object) -> str:
    if isinstance(key, FineClass):
        return key.token
    if isinstance(key, tuple):
        return "/".join(bucket_token(k) for k in key)
    return str(key)


def enumerate_involutions(
    n: int, avoid: Iterable[Permutation] = ()
) -> Iterator[Permutation]:
    """Involutions of length n avoiding every given pattern, in the order
    induced by path enumeration (deterministic).
    """
    patterns = list(avoid)
    if _PATTERN_4321 in patterns:
        kind = LabellingKind.UNITARY
        rest = [q for q in patterns if q != _PATTERN_4321]
    elif _PATTERN_3412 in patterns:
        kind = LabellingKind.MAXIMAL
        rest = [q for q in patterns if q != _PATTERN_3412]
    else:
        kind = None
        rest = patterns
    for path in enumerate_paths(n, kind):
        p = involution_of_path(path)
        if rest and not p.avoids_all(rest):
            continue
        yield p


def _group_keys(p: Permutation, group_by: GroupBy) -> object | None:
    if group_by is GroupBy.NONE:
        return None
    if group_by is GroupBy.FINE_CLASS:
        return classify(p)
    fixed = sum(1 for i, v in enumerate(p.values, start=1) if v == i)
    if group_by is GroupBy.FIXED_POINTS:
        return fixed
    return (classify(p), fixed)


def run_census(
    query: CensusQuery,
    witness_cap: int = 0,
) -> CensusReport:
    """Count involutions per the query, with deterministic bucket ordering.
    ``witness_cap`` > 0 also records up to that many members per bucket.
    """
    counts: dict[object, int] = {}
    witnesses: dict[object, list[Permutation]] = {}
    total = 0
    for p in enumerate_involutions(query.n, query.avoid):
        total += 1
        key = _group_keys(p, query.group_by)
        if key is None:
            continue
        counts[key] = counts.get(key, 0) + 1
        if witness_cap:
            bucket = witnesses.setdefault(key, [])
            if len(bucket) < witness_cap:
                bucket.append(p)
    return CensusReport(
        query=query,
        total=total,
        buckets=_ordered_buckets(counts, query.group_by),
        witnesses=witnesses,
    )


def _ordered_buckets(counts: dict[object, int], group_by: GroupBy) -> dict[object, int]:
    if group_by is GroupBy.NONE:
        return {}
    if group_by is GroupBy.FINE_CLASS:
        return {cls: counts.get(cls, 0) for cls in _CLASS_ORDER}
    if group_by is GroupBy.FIXED_POINTS:
        return {k: counts[k] for k in sorted(counts)}
    ordered: dict[object, int] = {}
    for cls in _CLASS_ORDER:
        for key in sorted(k for k in counts if k[0] is cls):
            ordered[key] = counts[key]
    return ordered


# ----------------------------------------------------------------------------
# Reconciliation of census counts against the counting series.
# ----------------------------------------------------------------------------

# series name -> (avoided pattern texts, fine classes to count, or None for all)
RECONCILE_TARGETS: dict[str, tuple[tuple[str, ...], frozenset[FineClass] | None]] = {
    "I4321": (("4321",), None),
    "I3412": (("3412",), None),
    "alpha_I4321": (("4321",), frozenset({FineClass.TYPE12})),
    "beta_I4321": (("4321",), frozenset({FineClass.TYPE21})),
    "gamma_x": (("4321",), frozenset({FineClass.SIMPLE})),
    "delta_I4321": (("4321",), frozenset({FineClass.INFLATION_OF_SIMPLE})),
    "gamma_plus_delta": (
        ("4321",),
        frozenset({FineClass.SIMPLE, FineClass.INFLATION_OF_SIMPLE}),
    ),
    "I4321_132": (("4321", "132"), None),
    "I4321_312": (("4321", "312"), None),
    "I3412_123": (("3412", "123"), None),
    "I3412_1234": (("3412", "1234"), None),
    "I3412_132": (("3412", "132"), None),
    "I3412_213": (("3412", "213"), None),
}


@dataclass(slots=True)
class ReconcileRow:
    n: int
    series_count: int
    census_count: int
    ok: bool
    witnesses: list[Permutation] = field(default_factory=list)


@dataclass(slots=True)
class ReconcileReport:
    series: str
    rows: list[ReconcileRow]
    passed: bool


def reconcile(name: str, n_max: int, witness_cap: int = 3) -> ReconcileReport:
    """Compare census counts with series coefficients for n = 1..n_max.

    A disagreement is reported, not raised; the report carries the first few
    census members of the offending bucket as witnesses.
    """
    if name not in RECONCILE_TARGETS:
        raise UnknownSeries(name)
    if n_max < 1:
        raise BadQuery("n_max must be >= 1")
    avoid_texts, classes = RECONCILE_TARGETS[name]
    avoid = tuple(Permutation.parse(t) for t in avoid_texts)
    series = series_by_name(name, max(n_max, 1))
    rows = []
    for n in range(1, n_max + 1):
        members: list[Permutation] = []
        count = 0
        for p in enumerate_involutions(n, avoid):
            if classes is not None and classify(p) not in classes:
                continue
            count += 1
            if len(members) < witness_cap:
                members.append(p)
        expected = int(series.coefficient(n))
        ok = expected == count
        rows.append(
            ReconcileRow(
                n=n,
                series_count=expected,
                census_count=count,
                ok=ok,
                witnesses=[] if ok else members,
            )
        )
    return ReconcileReport(series=name, rows=rows, passed=all(r.ok for r in rows))


def appendix_listing(n: int) -> list[Permutation]:
    """All simple involutions of I_n(4321), sorted lexicographically."""
    if not 5 <= n <= 10:
        raise OutOfRange(f"appendix listings cover lengths 5..10, got {n}")
    simple = [
        p
        for p in enumerate_involutions(n, (_PATTERN_4321,))
        if classify(p) is FineClass.SIMPLE
    ]
    return sorted(simple, key=lambda p: p.values)


# ----------------------------------------------------------------------------
# Plain-text / CSV / JSON report shapes.
# ----------------------------------------------------------------------------


def census_table(report: CensusReport) -> str:
    q = report.query
    avoid = ",".join(p.compact() for p in q.avoid) or "-"
    lines = [
        f"n={q.n} avoid={avoid} group_by={q.group_by.value} total={report.total}"
    ]
    if report.buckets:
        width = max(len(bucket_token(k)) for k in report.buckets)
        for key, count in report.buckets.items():
            lines.append(f"{bucket_token(key):<{width}}  {count}")
        for key, members in report.witnesses.items():
            shown = " ".join(p.compact() for p in members)
            lines.append(f"# {bucket_token(key)}: {shown}")
    return "\n".join(lines)


def census_csv(report: CensusReport) -> str:
    lines = ["bucket,count"]
    if report.buckets:
        lines.extend(f"{bucket_token(k)},{c}" for k, c in report.buckets.items())
    else:
        lines.append(f"total,{report.total}")
    return "\n".join(lines)


def census_json(report: CensusReport) -> dict:
    q = report.query
    return {
        "n": q.n,
        "avoid": [p.compact() for p in q.avoid],
        "group_by": q.group_by.value,
        "total": report.total,
        "buckets": {bucket_token(k): c for k, c in report.buckets.items()},
        "witnesses": {
            bucket_token(k): [str(p) for p in members]
            for k, members in report.witnesses.items()
        },
    }


def reconcile_table(report: ReconcileReport) -> str:
    lines = [f"series={report.series}", "n  series  census  status"]
    for row in report.rows:
        status = "pass" if row.ok else "FAIL"
        lines.append(f"{row.n:<2} {row.series_count:>7} {row.census_count:>7}  {status}")
        if row.witnesses:
            lines.append("   witnesses: " + " ".join(p.compact() for p in row.witnesses))
    lines.append("result: " + ("pass" if report.passed else "FAIL"))
    return "\n".join(lines)


def reconcile_json(report: ReconcileReport) -> dict:
    return {
        "series": report.series,
        "passed": report.passed,
        "rows": [
            {
                "n": r.n,
                "series": r.series_count,
                "census": r.census_count,
                "ok": r.ok,
                "witnesses": [str(p) for p in r.witnesses],
            }
            for r in report.rows
        ],
    }
