"""``coinstack`` command line.

Exit codes: 0 success, 1 amount not representable, 2 bad input,
3 resource/search limit, 4 infinite gap (gcd > 1), 5 benchmark mismatch.
"""
from __future__ import annotations

import json
import statistics
import sys
import time

import click

from .denominations import DenominationSet, parse_denominations
from .errors import DenominationError, OracleLimitExceeded, ResourceLimit
from .frobenius import FrobeniusKind, frobenius_number, is_representable
from .genfunc import literal_gf, render, simplified_gf
from .recurrence import e_sequence, e_term_dp, e_term_fast

EXIT_OK = 0
EXIT_NOT_REPRESENTABLE = 1
EXIT_PARSE = 2
EXIT_LIMIT = 3
EXIT_INFINITE_GAP = 4
EXIT_MISMATCH = 5

HUGE_DIGITS = 30

FORMAT = click.option(
    "--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text", show_default=True
)
DENOMS = click.option("--denoms", required=True, help="Comma-separated coin values, e.g. 2,5")


def _lift_int_str_limit() -> None:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


def envelope(command: str, ds: DenominationSet, result: dict) -> str:
    return json.dumps({"command": command, "denominations": ds.serialize(), "result": result}, indent=2) + "\n"


def _load(ctx: click.Context, text: str) -> DenominationSet:
    try:
        return parse_denominations(text)
    except DenominationError as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(EXIT_PARSE)


def _limit(ctx: click.Context, exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    ctx.exit(EXIT_LIMIT)


@click.group()
def cli() -> None:
    """Count ordered coin stacks and answer Frobenius coin-problem queries."""
    _lift_int_str_limit()


@cli.command()
@DENOMS
@click.option("--n", type=click.IntRange(min=0), required=True)
@FORMAT
@click.pass_context
def series(ctx: click.Context, denoms: str, n: int, fmt: str) -> None:
    """Print E_0..E_n."""
    ds = _load(ctx, denoms)
    try:
        terms = e_sequence(ds, n).terms
    except ResourceLimit as exc:
        _limit(ctx, exc)
    if fmt == "json":
        click.echo(envelope("series", ds, {"n": str(n), "terms": [str(t) for t in terms]}), nl=False)
    else:
        sep = "," if fmt == "csv" else " "
        click.echo("".join(f"{i}{sep}{t}\n" for i, t in enumerate(terms)), nl=False)


@cli.command()
@DENOMS
@click.option("--target", type=click.IntRange(min=0), required=True)
@FORMAT
@click.pass_context
def decide(ctx: click.Context, denoms: str, target: int, fmt: str) -> None:
    """Is TARGET payable? Exit 0 if so, 1 if not."""
    ds = _load(ctx, denoms)
    try:
        report = is_representable(ds, target)
    except ResourceLimit as exc:
        _limit(ctx, exc)
    verdict = "representable" if report.representable else "not-representable"
    if fmt == "json":
        result = {"target": str(target), "representable": report.representable, "count": str(report.e_value)}
        click.echo(envelope("decide", ds, result), nl=False)
    elif fmt == "csv":
        click.echo(f"{target},{verdict},{report.e_value}")
    else:
        click.echo(f"{verdict} count={report.e_value}")
    ctx.exit(EXIT_OK if report.representable else EXIT_NOT_REPRESENTABLE)


@cli.command()
@DENOMS
@FORMAT
@click.pass_context
def frobenius(ctx: click.Context, denoms: str, fmt: str) -> None:
    """Largest amount that cannot be paid."""
    ds = _load(ctx, denoms)
    try:
        res = frobenius_number(ds)
    except ResourceLimit as exc:
        _limit(ctx, exc)
    if fmt == "json":
        result = {
            "kind": res.kind.value,
            "value": None if res.value is None else str(res.value),
            "certificate": None if res.certificate is None else [str(c) for c in res.certificate],
        }
        click.echo(envelope("frobenius", ds, result), nl=False)
    else:
        if res.kind is FrobeniusKind.FINITE:
            shown = str(res.value)
        elif res.kind is FrobeniusKind.ALL_REPRESENTABLE:
            shown = "none (all amounts representable)"
        else:
            shown = f"none (gcd {ds.gcd}, infinitely many gaps)"
        sep = "," if fmt == "csv" else " "
        click.echo(f"{res.kind.value}{sep}{shown}")
    ctx.exit(EXIT_INFINITE_GAP if res.kind is FrobeniusKind.INFINITE_GAP else EXIT_OK)


@cli.command()
@DENOMS
@click.option("--form", type=click.Choice(["literal", "simplified"]), default="simplified", show_default=True)
@FORMAT
@click.pass_context
def genfunc(ctx: click.Context, denoms: str, form: str, fmt: str) -> None:
    """Numerator P and denominator Q of the generating function."""
    ds = _load(ctx, denoms)
    gf = literal_gf(ds) if form == "literal" else simplified_gf(ds)
    p, q = render(gf.numerator), render(gf.denominator)
    if fmt == "json":
        result = {
            "form": form,
            "numerator": gf.numerator.to_json(),
            "denominator": gf.denominator.to_json(),
            "numerator_text": p,
            "denominator_text": q,
        }
        click.echo(envelope("genfunc", ds, result), nl=False)
    elif fmt == "csv":
        click.echo(f"P,{p}\nQ,{q}")
    else:
        click.echo(f"P: {p}\nQ: {q}")


def _timed(fn, repeat: int) -> tuple[float, int]:
    times = []
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), value


def _describe(value: int) -> dict:
    digits = len(str(value))
    if digits > HUGE_DIGITS:
        return {"digits": str(digits)}
    return {"value": str(value), "digits": str(digits)}


@cli.command()
@DENOMS
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--strategy", type=click.Choice(["dp", "fast", "both"]), default="both", show_default=True)
@click.option("--repeat", type=click.IntRange(min=1), default=5, show_default=True)
@FORMAT
@click.pass_context
def bench(ctx: click.Context, denoms: str, n: int, strategy: str, repeat: int, fmt: str) -> None:
    """Time the sliding-window DP against polynomial exponentiation."""
    ds = _load(ctx, denoms)
    runners = {"dp": lambda: e_term_dp(ds, n), "fast": lambda: e_term_fast(ds, n)}
    chosen = ["dp", "fast"] if strategy == "both" else [strategy]
    timings = {}
    try:
        for name in chosen:
            timings[name] = _timed(runners[name], repeat)
    except (ResourceLimit, OracleLimitExceeded) as exc:
        _limit(ctx, exc)
    values = {v for _, v in timings.values()}
    if len(values) > 1:
        click.echo("error: strategies disagree", err=True)
        ctx.exit(EXIT_MISMATCH)
    value = values.pop()
    described = _describe(value)
    if fmt == "json":
        result = {
            "n": str(n),
            "repeat": str(repeat),
            "median_seconds": {name: f"{t:.6f}" for name, (t, _) in timings.items()},
            "equal": True,
            **described,
        }
        click.echo(envelope("bench", ds, result), nl=False)
    else:
        lines = [f"{name} median={t:.6f}s" for name, (t, _) in timings.items()]
        if strategy == "both":
            lines.append("equal=yes")
        lines.append(f"value={described['value']}" if "value" in described else f"digits={described['digits']}")
        click.echo("\n".join(lines))


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
