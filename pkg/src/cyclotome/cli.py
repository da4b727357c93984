"""Command-line front end: compute, cross-verify, and sweep parameter sets.

Reports are emitted as JSON (default), CSV, or a human-readable table.
Frequencies are serialized as decimal strings so exact values survive
consumers that parse numbers into 64-bit floats.  Exit codes are stable
for scripting: 0 success, 1 verification mismatch, 2 invalid parameters,
3 work budget exceeded.
"""

from __future__ import annotations

import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import lru_cache
from itertools import product

import click

from .charsums import CharSystem, NotSemiprimitiveError, f_charsum, f_closed, f_enumerate, gaussian_period_closed
from .code import (
    BadParametersError,
    BudgetExceededError,
    CodeParams,
    WeightDistribution,
    brute_distribution,
    build_code,
    semi_analytic_distribution,
)
from .fields import (
    BadModulusError,
    BadPolynomialError,
    FieldTooLargeError,
    NonPrimeError,
    build_tower,
    is_prime,
)
from .theorem import NotApplicable, TheoremCase, classify, table_distribution

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_BAD_PARAMS = 2
EXIT_BUDGET = 3

DEFAULT_BUDGET = 500_000_000
DEFAULT_SWEEP_BUDGET = 10_000_000

_PARAM_ERRORS = (
    BadParametersError,
    NonPrimeError,
    BadPolynomialError,
    FieldTooLargeError,
    BadModulusError,
    NotSemiprimitiveError,
    ValueError,
)


@dataclass
class RunReport:
    """One computation or verification, in a JSON-stable shape."""

    params: dict
    method: str
    classification: dict
    distribution: "list | None"
    checks: "dict | None"
    timing: float
    verdict: "str | None" = None

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "RunReport":
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls.from_dict(json.loads(text))


def _classification_dict(case) -> dict:
    if isinstance(case, NotApplicable):
        return {"applicable": False, "reason": case.reason}
    return {
        "applicable": True,
        "case": case.label,
        "j": case.j,
        "gamma": case.gamma,
        "sqrt_r": case.sqrt_r,
        "N": case.N,
    }


def _distribution_json(dist: "WeightDistribution | None") -> "list | None":
    if dist is None:
        return None
    return [[w, str(f)] for w, f in dist.items()]


def _parse_poly(text: "str | None") -> "tuple[int, ...] | None":
    if text is None:
        return None
    try:
        return tuple(int(c) for c in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise BadPolynomialError(f"cannot parse polynomial {text!r}: {exc}") from exc


def _build(p: int, s: int, m: int, h: int, e: int, poly: "str | None") -> CodeParams:
    tower = build_tower(p, s, m, poly=_parse_poly(poly))
    return build_code(tower, h, e)


def _first_diff(a: WeightDistribution, b: WeightDistribution) -> "list | None":
    for w in sorted(set(a.counts) | set(b.counts)):
        if a.counts.get(w) != b.counts.get(w):
            return [w, str(a.counts.get(w, 0)), str(b.counts.get(w, 0))]
    return None


def _compute_methods(
    params: CodeParams, case, method: str, budget: int
) -> tuple[dict, "dict[str, WeightDistribution]"]:
    """Run the requested methods; returns (checks, name -> distribution)."""
    checks: dict = {}
    dists: dict[str, WeightDistribution] = {}
    want = ["brute", "semi", "table"] if method == "all" else [method]
    applicable = isinstance(case, TheoremCase)
    for name in want:
        if name == "brute":
            try:
                dists["brute"] = brute_distribution(params, budget=budget)
            except BudgetExceededError as exc:
                if method == "brute":
                    raise
                checks["brute"] = f"skipped: {exc}"
        elif not applicable:
            checks[name] = f"not applicable: {case.reason}"
        elif name == "semi":
            dists["semi"] = semi_analytic_distribution(params, case)
        else:
            dists["table"] = table_distribution(case, params)
    if len(dists) > 1:
        names = sorted(dists)
        agree = all(dists[a] == dists[b] for a, b in zip(names, names[1:]))
        checks["methods_agree"] = agree
        if not agree:
            for a, b in zip(names, names[1:]):
                diff = _first_diff(dists[a], dists[b])
                if diff:
                    checks["first_diff"] = {"methods": [a, b], "weight_freqs": diff}
                    break
    return checks, dists


def _verification_checks(params: CodeParams, case: TheoremCase, budget: int) -> dict:
    """The full cross-check suite behind ``verify`` (all comparisons exact)."""
    tw = params.tower
    r, n_ord = tw.r, params.N
    system = CharSystem(tw, n_ord)
    checks: dict = {}

    dists = {
        "brute": brute_distribution(params, budget=budget),
        "semi": semi_analytic_distribution(params, case, system),
        "table": table_distribution(case, params),
    }
    checks["three_way_equal"] = dists["brute"] == dists["semi"] == dists["table"]
    if not checks["three_way_equal"]:
        for a, b in (("brute", "semi"), ("brute", "table")):
            diff = _first_diff(dists[a], dists[b])
            if diff:
                checks["first_diff"] = {"methods": [a, b], "weight_freqs": diff}
                break

    f_total = 0
    f_ok = True
    for c in product(range(n_ord), repeat=3):
        fe = f_enumerate(params, c)
        fc = f_charsum(params, system, c)
        fl = f_closed(params, case, c)
        f_total += fe
        if not fe == fc == fl:
            f_ok = False
            checks.setdefault("f_first_diff", {"c": list(c), "counts": [fe, fc, fl]})
    checks["f_triple_equal"] = f_ok
    checks["f_partition"] = f_total == r * r - 1 - 3 * (r - 1)

    dist = dists["brute"]
    checks["frequency_total"] = dist.total() == r * r
    checks["mean_weight"] = (
        dist.weighted_sum() * tw.q == params.n * r * r * (tw.q - 1)
    )

    periods = [system.gaussian_period(u).as_integer() for u in range(n_ord)]
    checks["periods_rational"] = all(v is not None for v in periods)
    checks["period_sum"] = sum(v or 0 for v in periods) == -1
    checks["periods_match_closed"] = all(
        periods[u] == gaussian_period_closed(case, u) for u in range(n_ord)
    )

    checks["jacobi_boundary"] = system.jacobi_sum(n_ord, n_ord) == r - 2 and all(
        system.jacobi_sum(i, n_ord - i) == -1 for i in range(1, n_ord)
    )
    big = math.lcm(tw.p, n_ord)
    gauss_ok = True
    for i in range(1, n_ord):
        for j in range(1, n_ord):
            if i + j == n_ord:
                continue
            k = (i + j - 1) % n_ord + 1
            lhs = system.gauss_sum(k) * system.jacobi_sum(i, j).embed(big)
            if lhs != system.gauss_sum(i) * system.gauss_sum(j):
                gauss_ok = False
    checks["gauss_jacobi_relation"] = gauss_ok
    return checks


def _emit_report(report: RunReport, fmt: str) -> None:
    if fmt == "json":
        click.echo(report.to_json())
    elif fmt == "csv":
        click.echo("weight,frequency")
        for w, f in report.distribution or []:
            click.echo(f"{w},{f}")
    else:
        pr = report.params
        click.echo(
            "parameters: p={p} s={s} m={m} h={h} e={e}  (q={q}, r={r}, n={n}, N={N})".format(**pr)
        )
        cl = report.classification
        if cl["applicable"]:
            click.echo(
                f"classification: case {cl['case']} (j={cl['j']}, gamma={cl['gamma']}, sqrt_r={cl['sqrt_r']})"
            )
        else:
            click.echo(f"classification: not applicable ({cl['reason']})")
        click.echo(f"method: {report.method}  [{report.timing:.3f}s]")
        if report.distribution:
            width = max(len(str(w)) for w, _ in report.distribution)
            click.echo("weight  frequency")
            for w, f in report.distribution:
                click.echo(f"{w:>{width}}  {f}")
        if report.checks:
            click.echo(f"checks: {json.dumps(report.checks, sort_keys=True)}")
        if report.verdict:
            click.echo(f"verdict: {report.verdict}")


_shared_options = [
    click.option("--p", "p", type=int, required=True, help="Field characteristic (prime)."),
    click.option("--s", "s", type=int, required=True, help="Base extension degree: q = p**s."),
    click.option("--m", "m", type=int, required=True, help="Top extension degree: r = q**m."),
    click.option("--h", "h", type=int, required=True, help="Divisor of q-1; code length is h(r-1)/(q-1)."),
    click.option("--e", "e", type=int, default=3, show_default=True, help="Divisor of h (closed forms need 3)."),
    click.option("--poly", type=str, default=None, help="Defining polynomial override, comma-separated GF(p) coefficients, constant first, monic, degree s*m."),
    click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True, help="Brute-force work cap, in r^2*n units."),
    click.option("--format", "fmt", type=click.Choice(["json", "csv", "pretty"]), default="json", show_default=True),
]


def _with_shared(fn):
    for opt in reversed(_shared_options):
        fn = opt(fn)
    return fn


@click.group()
def main() -> None:
    """Exact weight distributions of two-generator trace codes."""


@main.command()
@_with_shared
@click.option(
    "--method",
    type=click.Choice(["brute", "semi", "table", "all"]),
    default="all",
    show_default=True,
    help="Computation route; 'all' cross-checks every route it can run.",
)
def compute(p, s, m, h, e, poly, budget, fmt, method) -> None:
    """Compute one weight distribution (optionally by every method)."""
    t0 = time.monotonic()
    try:
        params = _build(p, s, m, h, e, poly)
        case = classify(params)
        checks, dists = _compute_methods(params, case, method, budget)
    except BudgetExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    except _PARAM_ERRORS as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BAD_PARAMS)
    agreed = checks.get("methods_agree", True)
    dist = None
    if dists and agreed:
        dist = next(iter(dists.values()))
    report = RunReport(
        params=params.describe(),
        method=method,
        classification=_classification_dict(case),
        distribution=_distribution_json(dist),
        checks=checks or None,
        timing=round(time.monotonic() - t0, 6),
    )
    _emit_report(report, fmt)
    if not agreed:
        sys.exit(EXIT_MISMATCH)


@main.command()
@_with_shared
def verify(p, s, m, h, e, poly, budget, fmt) -> None:
    """Run every method plus the class-count and character-sum cross-checks."""
    t0 = time.monotonic()
    try:
        params = _build(p, s, m, h, e, poly)
        case = classify(params)
        if isinstance(case, NotApplicable):
            raise BadParametersError(f"verify needs applicable parameters: {case.reason}")
        checks = _verification_checks(params, case, budget)
        dist = table_distribution(case, params)
    except BudgetExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    except _PARAM_ERRORS as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BAD_PARAMS)
    passed = all(v is not False for v in checks.values())
    report = RunReport(
        params=params.describe(),
        method="verify",
        classification=_classification_dict(case),
        distribution=_distribution_json(dist),
        checks=checks,
        timing=round(time.monotonic() - t0, 6),
        verdict="PASS" if passed else "FAIL",
    )
    _emit_report(report, fmt)
    if not passed:
        sys.exit(EXIT_MISMATCH)


def _sweep_candidates(max_r: int, e: int):
    """All (p, s, m, h) with 3 <= q = p**s, r = q**m <= max_r, e | h | q-1."""
    for p in range(2, max_r + 1):
        if not is_prime(p):
            continue
        s = 1
        while p**s <= max_r:
            q = p**s
            m = 1
            while q ** (m + 1) <= max_r:
                m += 1
            for mm in range(1, m + 1):
                for h in range(e, q, e):
                    if (q - 1) % h == 0:
                        yield (p, s, mm, h)
            s += 1


@lru_cache(maxsize=32)
def _cached_tower(p: int, s: int, m: int):
    return build_tower(p, s, m)


def _sweep_item(job: tuple) -> dict:
    p, s, m, h, e, budget = job
    t0 = time.monotonic()
    row = {"p": p, "s": s, "m": m, "h": h, "e": e}
    try:
        params = build_code(_cached_tower(p, s, m), h, e)
    except _PARAM_ERRORS as exc:  # pragma: no cover - candidates are pre-filtered
        row.update(status="error", reason=str(exc))
        return row
    row.update(q=params.tower.q, r=params.tower.r, n=params.n, N=params.N)
    case = classify(params)
    if isinstance(case, NotApplicable):
        row.update(case="", status="not_applicable", reason=case.reason)
    elif params.tower.r ** 2 * params.n > budget:
        row.update(case=case.label, status="skipped_budget", reason="")
    else:
        checks = _verification_checks(params, case, budget)
        ok = all(v is not False for v in checks.values())
        row.update(case=case.label, status="PASS" if ok else "FAIL", reason="")
        if not ok:
            row["failed_checks"] = sorted(k for k, v in checks.items() if v is False)
    row["seconds"] = round(time.monotonic() - t0, 6)
    return row


_SWEEP_COLUMNS = ["p", "s", "m", "h", "e", "q", "r", "n", "N", "case", "status", "reason", "seconds"]


@main.command()
@click.option("--max-r", type=int, required=True, help="Upper bound on the big field size r.")
@click.option("--e", "e", type=int, default=3, show_default=True)
@click.option("--budget", type=int, default=DEFAULT_SWEEP_BUDGET, show_default=True, help="Per-item brute-force cap in r^2*n units; larger items are classified only.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "pretty"]), default="json", show_default=True)
def sweep(max_r, e, budget, fmt) -> None:
    """Enumerate, classify, and verify every parameter set with r <= MAX_R.

    Items run in parallel when CYCLOTOME_THREADS > 1; output order is by
    parameter tuple regardless.
    """
    if max_r < 2:
        click.echo("error: --max-r must be at least 2", err=True)
        sys.exit(EXIT_BAD_PARAMS)
    jobs = [(p, s, m, h, e, budget) for (p, s, m, h) in sorted(_sweep_candidates(max_r, e))]
    threads = max(1, int(os.environ.get("CYCLOTOME_THREADS", "1") or "1"))
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_sweep_item, jobs))
    else:
        rows = [_sweep_item(job) for job in jobs]
    if fmt == "csv":
        click.echo(",".join(_SWEEP_COLUMNS))
        for row in rows:
            click.echo(",".join(str(row.get(col, "")) for col in _SWEEP_COLUMNS))
    elif fmt == "pretty":
        for row in rows:
            click.echo(
                "p={p} s={s} m={m} h={h}: r={r} n={n} N={N} case={case} -> {status} {reason}".format(
                    **{col: row.get(col, "") for col in _SWEEP_COLUMNS}
                ).rstrip()
            )
    else:
        for row in rows:
            click.echo(json.dumps(row, sort_keys=True))


if __name__ == "__main__":
    main()
