"""Command-line client for the invol service.

By default every command talks to an in-process copy of the HTTP app, so no
server is needed; ``--url`` (or INVOL_URL) points the same commands at a
running instance, and ``invol serve`` starts one.

Exit codes: 0 success, 1 reconciliation failure, 2 usage or domain error.
"""

from __future__ import annotations

import json
import sys

import click
import httpx

from .census import DEFAULT_WITNESS_CAP
from .series import DEFAULT_ORDER

_FORMATS_COUNT = ("table", "csv", "json")
_FORMATS_ENUM = ("lines", "csv", "json")
_FORMATS_SERIES = ("human", "json", "bfile")


class ServiceClient:
    """HTTP client bound to a remote URL or to the app in-process."""

    def __init__(self, url: str | None):
        if url:
            self._client = httpx.Client(base_url=url, timeout=300.0)
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

                from .api import create_app

                self._client = TestClient(create_app())

    def get(self, route: str, **params) -> httpx.Response:
        return self._client.get(route, params=params)

    def post(self, route: str, payload: dict) -> httpx.Response:
        return self._client.post(route, json=payload)

    def stream_lines(self, route: str, **params):
        with self._client.stream("GET", route, params=params) as response:
            if response.status_code >= 400:
                response.read()
                _fail(response)
            for line in response.iter_lines():
                yield line


def _fail(response: httpx.Response) -> None:
    try:
        body = response.json()
        token = body.get("error", f"HTTP{response.status_code}")
        detail = body.get("detail", "")
    except Exception:
        token, detail = f"HTTP{response.status_code}", response.text
    click.echo(f"error: {token}: {detail}".rstrip(": "), err=True)
    sys.exit(2)


def _checked(response: httpx.Response) -> dict:
    if response.status_code >= 400:
        _fail(response)
    return response.json()


@click.group()
@click.option("--url", envvar="INVOL_URL", default=None, help="Remote service URL; defaults to in-process.")
@click.pass_context
def main(ctx: click.Context, url: str | None) -> None:
    """Pattern-avoiding involutions: census, classification, paths, series."""
    ctx.obj = ServiceClient(url)


def _avoid_list(avoid: str) -> list[str]:
    return [tok for tok in avoid.split(",") if tok]


@main.command()
@click.option("--n", required=True, type=int)
@click.option("--avoid", default="", help="Comma-separated patterns, e.g. 4321,132.")
@click.option("--by", type=click.Choice(["none", "class", "fixed", "class_fixed"]), default="none")
@click.option("--format", "fmt", type=click.Choice(_FORMATS_COUNT), default="table")
@click.option(
    "--witnesses",
    type=int,
    default=0,
    is_flag=False,
    flag_value=DEFAULT_WITNESS_CAP,
    help="Record members per bucket (bare flag caps at 100; pass a number to adjust).",
)
@click.pass_obj
def count(client: ServiceClient, n: int, avoid: str, by: str, fmt: str, witnesses: int) -> None:
    """Census of involutions of length N avoiding the given patterns."""
    body = _checked(
        client.post(
            "/census",
            {"n": n, "avoid": _avoid_list(avoid), "by": by, "witnesses": witnesses},
        )
    )
    if fmt == "json":
        click.echo(json.dumps(body, indent=2))
        return
    if fmt == "csv":
        click.echo("bucket,count")
        if body["buckets"]:
            for bucket in body["buckets"]:
                click.echo(f"{bucket['key']},{bucket['count']}")
        else:
            click.echo(f"total,{body['total']}")
        return
    avoid_text = ",".join(body["avoid"]) or "-"
    click.echo(f"n={body['n']} avoid={avoid_text} group_by={body['group_by']} total={body['total']}")
    for bucket in body["buckets"]:
        click.echo(f"{bucket['key']}  {bucket['count']}")
        if bucket.get("witnesses"):
            click.echo("  " + " | ".join(bucket["witnesses"]))


@main.command("enumerate")
@click.option("--n", required=True, type=int)
@click.option("--avoid", default="")
@click.option("--format", "fmt", type=click.Choice(_FORMATS_ENUM), default="lines")
@click.pass_obj
def enumerate_cmd(client: ServiceClient, n: int, avoid: str, fmt: str) -> None:
    """Stream the involutions of length N avoiding the given patterns."""
    if fmt == "json":
        body = _checked(client.get("/enumerate", n=n, avoid=avoid, format="json"))
        click.echo(json.dumps(body, indent=2))
        return
    for line in client.stream_lines("/enumerate", n=n, avoid=avoid, format=fmt):
        click.echo(line)


@main.command()
@click.argument("perm", nargs=-1, required=True)
@click.pass_obj
def classify(client: ServiceClient, perm: tuple[str, ...]) -> None:
    """Fine class of an involution, with its decomposition sketch."""
    body = _checked(client.get("/classify", perm=" ".join(perm)))
    token = body["fine_class"]
    if token in ("type12", "type21", "inflation_of_simple"):
        click.echo(f"{token} {body['sketch']}")
    else:
        click.echo(token)


@main.command()
@click.argument("perm", nargs=-1, required=True)
@click.option("--draw", is_flag=True, help="Also print an ASCII rendering.")
@click.pass_obj
def path(client: ServiceClient, perm: tuple[str, ...], draw: bool) -> None:
    """Labelled Motzkin path of an involution."""
    body = _checked(client.get("/path", perm=" ".join(perm), draw=draw))
    click.echo(body["path"])
    if draw and body.get("drawing"):
        click.echo(body["drawing"])


@main.command()
@click.argument("path_text")
@click.pass_obj
def unpath(client: ServiceClient, path_text: str) -> None:
    """Involution of a labelled Motzkin path, e.g. UUD[2]UHUD[3]D[2]D[1]."""
    body = _checked(client.get("/unpath", path=path_text))
    click.echo(body["permutation"])


@main.command()
@click.argument("perm", nargs=-1, required=True)
@click.pass_obj
def rc(client: ServiceClient, perm: tuple[str, ...]) -> None:
    """Reverse-complement of a permutation."""
    body = _checked(client.get("/rc", perm=" ".join(perm)))
    click.echo(body["reverse_complement"])


@main.command()
@click.argument("name", required=False)
@click.option("--order", type=int, default=None, envvar="INVOL_SERIES_ORDER")
@click.option("--format", "fmt", type=click.Choice(_FORMATS_SERIES), default="human")
@click.pass_obj
def series(client: ServiceClient, name: str | None, order: int | None, fmt: str) -> None:
    """Expand a named counting series (run without a name to list them)."""
    if name is None:
        body = _checked(client.get("/series"))
        click.echo("univariate: " + " ".join(body["univariate"]))
        click.echo("bivariate:  " + " ".join(body["bivariate"]))
        return
    body = _checked(client.get(f"/series/{name}", order=order or DEFAULT_ORDER))
    if fmt == "json":
        click.echo(json.dumps(body, indent=2))
        return
    if fmt == "bfile":
        if body.get("coefficients") is None:
            click.echo("error: BadQuery: b-file output is for univariate series", err=True)
            sys.exit(2)
        for i, c in enumerate(body["coefficients"]):
            click.echo(f"{i} {c}")
        return
    for line in body["pretty"]:
        click.echo(line)


@main.command()
@click.argument("name")
@click.option("--max", "max_n", type=int, default=10, help="Check n = 1..MAX.")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table")
@click.pass_obj
def reconcile(client: ServiceClient, name: str, max_n: int, fmt: str) -> None:
    """Cross-check census counts against a named series; exit 1 on mismatch."""
    body = _checked(client.post("/reconcile", {"series": name, "max_n": max_n}))
    if fmt == "json":
        click.echo(json.dumps(body, indent=2))
    else:
        click.echo(f"series={body['series']}")
        click.echo("n  series  census  status")
        for row in body["rows"]:
            status = "pass" if row["ok"] else "FAIL"
            click.echo(f"{row['n']:<2} {row['series']:>7} {row['census']:>7}  {status}")
            if row["witnesses"]:
                click.echo("   witnesses: " + "; ".join(row["witnesses"]))
        click.echo("result: " + ("pass" if body["passed"] else "FAIL"))
    if not body["passed"]:
        sys.exit(1)


@main.command()
@click.option("--n", required=True, type=int)
@click.pass_obj
def appendix(client: ServiceClient, n: int) -> None:
    """Golden listing of the simple involutions avoiding 4321 (5 <= n <= 10)."""
    body = _checked(client.get("/appendix", n=n))
    for text in body["involutions"]:
        click.echo(text)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("invol.api:app", host=host, port=port)


if __name__ == "__main__":
    main()
