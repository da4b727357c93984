"""Applicability test and closed-form weight-distribution tables.

The closed forms cover e = 3 parameter sets in the semiprimitive regime:
some power p**j is congruent to -1 mod N (j minimal) and s*m = 2*j*gamma.
Four tables apply, selected by two independent bits:

* major case 1 when gamma, p and (p**j + 1)/N are all odd, else 2
  (this decides the sign pattern of the sqrt(r) terms);
* minor case 1 when N divides (q-1)/h (g is an N-th power), else 2.

Each table is encoded symbolically in (r, sqrt(r), N, h, q) exactly as
printed, one (weight, frequency) formula pair per row, rather than as
numbers; instantiation asserts integrality of every entry, drops empty
rows, and merges rows whose weights collide.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .code import CodeParams, WeightDistribution


class NotApplicableError(ValueError):
    """Table machinery invoked for parameters outside its hypotheses."""


class NonIntegerFrequencyError(ArithmeticError):
    """A table row failed to instantiate to an integer (misapplied case)."""


@dataclass(frozen=True)
class TheoremCase:
    """Classification data for an applicable parameter set."""

    j: int
    gamma: int
    case_major: int
    case_minor: int
    sqrt_r: int
    N: int

    @property
    def label(self) -> str:
        return f"{self.case_major}.{self.case_minor}"


@dataclass(frozen=True)
class NotApplicable:
    """Returned by classify with the first failed hypothesis."""

    reason: str


def classify(params: CodeParams) -> Union[TheoremCase, NotApplicable]:
    """Check the closed-form hypotheses and pick the (major, minor) sub-case."""
    tw = params.tower
    p, n_ord = tw.p, params.N
    if params.e != 3:
        return NotApplicable(f"e = {params.e}, closed forms need e = 3")
    if n_ord < 2:
        return NotApplicable(f"N = {n_ord} < 2")
    j = next((c for c in range(1, n_ord + 1) if pow(p, c, n_ord) == n_ord - 1), None)
    if j is None:
        return NotApplicable(f"no j with p**j = -1 mod N (p = {p}, N = {n_ord})")
    sm = tw.degree
    if sm % (2 * j):
        return NotApplicable(f"2j = {2 * j} does not divide s*m = {sm}")
    gamma = sm // (2 * j)
    major = 1 if gamma % 2 and p % 2 and ((p**j + 1) // n_ord) % 2 else 2
    minor = 1 if ((tw.q - 1) // params.h) % n_ord == 0 else 2
    return TheoremCase(
        j=j,
        gamma=gamma,
        case_major=major,
        case_minor=minor,
        sqrt_r=p ** (sm // 2),
        N=n_ord,
    )


# ---------------------------------------------------------------------------
# symbolic tables; each row maps (r, sr, N, h, q, sg) -> (weight, frequency)
# where sr = sqrt(r) and sg = (-1)**gamma (only the major-2 tables read sg)

Row = Callable[[int, int, int, int, int, int], tuple[Fraction, Fraction]]


def _fr(num, den) -> Fraction:
    return Fraction(num, den)


_TABLE_1_1: list[Row] = [
    lambda r, sr, N, h, q, sg: (
        _fr(h * (r - sr * (N - 1)), q),
        _fr((r - 1) * (r + sr * (N * N - 3 * N + 2) - 3 * N + 1), N**3),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(h * (r + sr), q),
        _fr((r - 1) * (N - 1) * (r * (N - 1) ** 2 - sr * (N - 2) - (N - 1) * (2 * N + 1)), N**3),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(h * (3 * r - sr * (N - 3)), 3 * q),
        _fr(3 * (sr + 1) * (r - 1) * (N - 1) * (sr * (N - 1) - 1), N**3),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(h * (3 * r - sr * (2 * N - 3)), 3 * q),
        _fr(3 * (sr + 1) * (r - 1) * (N - 1) * (sr - N + 1), N**3),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(2 * h * (r - sr * (N - 1)), 3 * q),
        _fr(3 * (r - 1), N),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(2 * h * (r + sr), 3 * q),
        _fr(3 * (r - 1) * (N - 1), N),
    ),
]

_TABLE_1_2: list[Row] = [
    lambda r, sr, N, h, q, sg: (
        _fr(h * (r - sr * (N - 1)), q),
        _fr((r - 1) * (sr + 1) ** 2, N**3),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(h * (r + sr), q),
        _fr((r - 1) * (r * (N - 1) ** 3 - 2 * sr - (N - 1) * (2 * N * N - 4 * N - 1)), N**3),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(h * (3 * r - sr * (N - 3)), 3 * q),
        _fr(3 * (r - 1) * (r * (N - 1) ** 2 + 2 * sr - 2 * N * N + 2 * N + 1), N**3),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(h * (3 * r - sr * (2 * N - 3)), 3 * q),
        _fr(3 * (sr + 1) * (r - 1) * (sr * (N - 1) - N - 1), N**3),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(h * (2 * r - sr * (N - 2)), 3 * q),
        _fr(6 * (r - 1), N),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(2 * h * (r + sr), 3 * q),
        _fr(3 * (r - 1) * (N - 2), N),
    ),
]

_TABLE_2_1: list[Row] = [
    lambda r, sr, N, h, q, sg: (
        _fr(h * (r + sg * sr * (N - 1)), q),
        _fr((r - 1) * (r - sg * sr * (N * N - 3 * N + 2) - 3 * N + 1), N**3),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(h * (r - sg * sr), q),
        _fr(
            (r - 1) * (N - 1) * (r * (N - 1) ** 2 + sg * sr * (N - 2) - (N - 1) * (2 * N + 1)),
            N**3,
        ),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(h * (3 * r + sg * sr * (N - 3)), 3 * q),
        _fr(3 * (r - 1) * (N - 1) * (r * (N - 1) - sg * sr * (N - 2) - 1), N**3),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(h * (3 * r + sg * sr * (2 * N - 3)), 3 * q),
        _fr(3 * (r - 1) * (N - 1) * (r + sg * sr * (N - 2) - N + 1), N**3),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(2 * h * (r + sg * sr * (N - 1)), 3 * q),
        _fr(3 * (r - 1), N),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(2 * h * (r - sg * sr), 3 * q),
        _fr(3 * (r - 1) * (N - 1), N),
    ),
]

_TABLE_2_2: list[Row] = [
    lambda r, sr, N, h, q, sg: (
        _fr(h * (r + sg * sr * (N - 1)), q),
        _fr((r - 1) * (r - 2 * sg * sr + 1), N**3),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(h * (r - sg * sr), q),
        _fr((r - 1) * (r * (N - 1) ** 3 + 2 * sg * sr - (N - 1) * (2 * N * N - 4 * N - 1)), N**3),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(h * (3 * r + sg * sr * (N - 3)), 3 * q),
        _fr(3 * (r - 1) * (r * (N - 1) ** 2 - 2 * sg * sr - 2 * N * N + 2 * N + 1), N**3),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(h * (3 * r + sg * sr * (2 * N - 3)), 3 * q),
        _fr(3 * (r - 1) * (r * (N - 1) + 2 * sg * sr - N - 1), N**3),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(h * (2 * r + sg * sr * (N - 2)), 3 * q),
        _fr(6 * (r - 1), N),
    ),
    lambda r, sr, N, h, q, sg: (
        _fr(2 * h * (r - sg * sr), 3 * q),
        _fr(3 * (r - 1) * (N - 2), N),
    ),
]

_TABLES: dict[tuple[int, int], list[Row]] = {
    (1, 1): _TABLE_1_1,
    (1, 2): _TABLE_1_2,
    (2, 1): _TABLE_2_1,
    (2, 2): _TABLE_2_2,
}


def instantiate_table(
    major: int, minor: int, params: CodeParams, gamma: "int | None" = None
) -> WeightDistribution:
    """Evaluate one table's rows for the given parameters.

    No hypothesis checking here beyond integrality; this is the raw
    substitution used both by ``table_distribution`` and by the check that
    the two N = 2 tables coincide.
    """
    tw = params.tower
    if tw.degree % 2:
        raise NotApplicableError("sqrt(r) is not an integer: s*m is odd")
    sr = tw.p ** (tw.degree // 2)
    if (major, minor) not in _TABLES:
        raise NotApplicableError(f"no table for case ({major}, {minor})")
    if major == 2 and gamma is None:
        raise NotApplicableError("major case 2 needs gamma for the sign")
    sg = 1 if gamma is None or gamma % 2 == 0 else -1
    hist: dict[int, int] = {0: 1}
    for row in _TABLES[(major, minor)]:
        weight, freq = row(tw.r, sr, params.N, params.h, tw.q, sg)
        if freq.denominator != 1 or freq < 0:
            raise NonIntegerFrequencyError(
                f"row frequency {freq} is not a nonnegative integer"
            )
        if freq == 0:
            continue
        if weight.denominator != 1 or not 0 <= weight <= params.n:
            raise NonIntegerFrequencyError(f"row weight {weight} out of range")
        w = int(weight)
        hist[w] = hist.get(w, 0) + int(freq)
    return WeightDistribution(hist)


def table_distribution(case: TheoremCase, params: CodeParams) -> WeightDistribution:
    """Instantiate the table selected by ``classify`` for these parameters.

    The hypotheses are re-verified against a fresh classification so a
    stale or hand-built case cannot silently select the wrong table.
    """
    fresh = classify(params)
    if fresh != case:
        raise NotApplicableError(f"case {case} does not match parameters ({fresh})")
    dist = instantiate_table(case.case_major, case.case_minor, params, case.gamma)
    dist.validate(params)
    return dist
