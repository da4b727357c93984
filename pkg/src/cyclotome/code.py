"""The two-generator trace codes and their weight distributions.

A parameter set (p, s, m, h, e) with h dividing q - 1 and e dividing h
determines g = alpha**((q-1)/h), beta = alpha**((r-1)/e) and the length
n = h(r-1)/(q-1).  The codeword attached to a pair (a, b) in GF(r)**2 is
the vector of relative traces of a g**i + b (beta g)**i for i < n.

Two independent routes to the weight distribution live here:

* ``brute_distribution`` walks all r**2 pairs and counts nonzero
  codeword coordinates directly (trace-table driven, no character theory);
* ``semi_analytic_distribution`` assembles the histogram from Gaussian
  periods and the closed-form class counts f(c), touching no codeword.

The bridge between them is the modified weight lambda(a, b); the Hamming
weight is always h(r-1)/q - lambda(a, b).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import TYPE_CHECKING

from .charsums import CharSystem, NonIntegerResultError, f_closed
from .cycint import CycInt
from .fields import ZERO, FieldElement, FieldTower

if TYPE_CHECKING:
    from .theorem import TheoremCase


class BadParametersError(ValueError):
    """Divisibility constraints among h, e, q violated."""


class BudgetExceededError(RuntimeError):
    """Brute-force enumeration would exceed the configured work budget."""


@dataclass(frozen=True, eq=False)
class CodeParams:
    """Validated code parameters over a fixed tower."""

    tower: FieldTower
    h: int
    e: int
    n: int
    N: int
    g_log: int
    beta_log: int

    @property
    def g(self) -> FieldElement:
        return self.tower.element(self.g_log)

    @property
    def beta(self) -> FieldElement:
        return self.tower.element(self.beta_log)

    def describe(self) -> dict:
        tw = self.tower
        return {
            "p": tw.p, "s": tw.s, "m": tw.m, "h": self.h, "e": self.e,
            "q": tw.q, "r": tw.r, "n": self.n, "N": self.N,
        }


def build_code(tower: FieldTower, h: int, e: int = 3) -> CodeParams:
    """Validate (h, e) against the tower and derive (g, beta, n, N)."""
    q, r, m = tower.q, tower.r, tower.m
    if e <= 1:
        raise BadParametersError(f"e = {e} must exceed 1")
    if h < e or h % e:
        raise BadParametersError(f"h = {h} is not a positive multiple of e = {e}")
    if (q - 1) % h:
        raise BadParametersError(f"h = {h} does not divide q-1 = {q - 1}")
    n = h * (r - 1) // (q - 1)
    params = CodeParams(
        tower=tower,
        h=h,
        e=e,
        n=n,
        N=math.gcd(m, e * (q - 1) // h),
        g_log=(q - 1) // h,
        beta_log=(r - 1) // e,
    )
    # g must have order n and g*beta order n as well; both follow from the
    # divisibilities, so a failure here means the table build went wrong
    assert (r - 1) // math.gcd(r - 1, params.g_log) == n
    assert (params.g_log + params.beta_log) * n % (r - 1) == 0
    return params


class WeightDistribution:
    """Exact map weight -> frequency; zero-frequency entries are dropped."""

    __slots__ = ("counts",)

    def __init__(self, counts: dict):
        self.counts = {int(w): int(f) for w, f in counts.items() if f}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeightDistribution) and other.counts == self.counts

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def items(self) -> list[tuple[int, int]]:
        return sorted(self.counts.items())

    def total(self) -> int:
        return sum(self.counts.values())

    def weighted_sum(self) -> int:
        """Sum of weight * frequency, for the mean-weight identity."""
        return sum(w * f for w, f in self.counts.items())

    def validate(self, params: CodeParams) -> None:
        """Raise ValueError on any violated structural invariant."""
        r2 = params.tower.r ** 2
        if self.total() != r2:
            raise ValueError(f"frequencies sum to {self.total()}, expected {r2}")
        if self.counts.get(0) != 1:
            raise ValueError("weight 0 must occur exactly once")
        bad = [w for w in self.counts if w < 0 or w > params.n]
        if bad:
            raise ValueError(f"weights out of range [0, {params.n}]: {bad}")
        if any(f < 0 for f in self.counts.values()):
            raise ValueError("negative frequency")

    def __repr__(self) -> str:
        return f"WeightDistribution({dict(self.items())})"


def codeword(params: CodeParams, a: FieldElement, b: FieldElement) -> list[FieldElement]:
    """The length-n vector of traces of a g**i + b (beta g)**i."""
    tw = params.tower
    n1 = tw.r - 1
    dg, dbg = params.g_log, (params.beta_log + params.g_log) % n1
    out = []
    ai, bi = a.index, b.index
    for _ in range(params.n):
        out.append(tw.trace_to_q(FieldElement(tw, tw.add(ai, bi))))
        if ai != ZERO:
            ai = (ai + dg) % n1
        if bi != ZERO:
            bi = (bi + dbg) % n1
    return out


def hamming_weight(word: list[FieldElement]) -> int:
    return sum(1 for x in word if x.index != ZERO)


def brute_distribution(params: CodeParams, budget: "int | None" = None) -> WeightDistribution:
    """Exact weight histogram over all r**2 pairs by direct coordinate counts.

    Work is ~r**2 * n trace-table lookups; ``budget`` (same unit) guards
    against accidental huge runs.
    """
    tw = params.tower
    r, n, n1 = tw.r, params.n, tw.r - 1
    cost = r * r * n
    if budget is not None and cost > budget:
        raise BudgetExceededError(f"r^2*n = {cost} exceeds budget {budget}")
    zech = tw.zech
    trace_q = tw.trace_q_table
    nonzero_trace = bytes(1 if trace_q[k] != ZERO else 0 for k in range(n1))
    dg = params.g_log
    dbg = (params.beta_log + params.g_log) % n1
    hist = Counter()
    hist[0] = 1  # (a, b) = (0, 0)
    for a_idx in range(n1):  # b = 0 column: entries tr(a g**i)
        ai = a_idx
        w = 0
        for _ in range(n):
            w += nonzero_trace[ai]
            ai += dg
            if ai >= n1:
                ai -= n1
        hist[w] += 1
    for b_idx in range(n1):
        offsets = [0] * n
        bi = b_idx
        for i in range(n):
            offsets[i] = bi
            bi += dbg
            if bi >= n1:
                bi -= n1
        # a = 0 row: same histogram shape as the a-only column with g*beta
        w = sum(nonzero_trace[o] for o in offsets)
        hist[w] += 1
        for a_idx in range(n1):
            ai = a_idx
            w = 0
            for di in offsets:
                z = zech[ai - di]  # negative index wraps, same residue class
                if z != ZERO:
                    x = di + z
                    if x >= n1:
                        x -= n1
                    w += nonzero_trace[x]
                ai += dg
                if ai >= n1:
                    ai -= n1
            hist[w] += 1
    return WeightDistribution(hist)


def lambda_weight(
    params: CodeParams, system: CharSystem, a: FieldElement, b: FieldElement
) -> Fraction:
    """Modified weight: (hN/eq) times the sum of periods at (a + beta**i b) g**i.

    The period at argument 0 is the coset size (r-1)/N.  The sum of the e
    periods is always a rational integer even when single periods are not.
    """
    tw = params.tower
    n1 = tw.r - 1
    acc = CycInt.zero(tw.p)
    const = 0
    for i in range(1, params.e + 1):
        bb = ZERO if b.index == ZERO else (b.index + i * params.beta_log) % n1
        t = tw.add(a.index, bb)
        if t == ZERO:
            const += system.eta_zero
        else:
            arg = (t + i * params.g_log) % n1
            acc = acc + system.gaussian_period(arg % params.N)
    val = acc.as_integer()
    if val is None:
        raise NonIntegerResultError("period sum came out irrational")
    return Fraction(params.h * params.N * (val + const), params.e * tw.q)


def codeword_weight_from_lambda(
    params: CodeParams, system: CharSystem, a: FieldElement, b: FieldElement
) -> int:
    """Hamming weight via h(r-1)/q minus the modified weight."""
    w = Fraction(params.h * (params.tower.r - 1), params.tower.q) - lambda_weight(
        params, system, a, b
    )
    if w.denominator != 1:
        raise NonIntegerResultError(f"weight {w} is not an integer")
    return int(w)


def semi_analytic_distribution(
    params: CodeParams, case: "TheoremCase", system: "CharSystem | None" = None
) -> WeightDistribution:
    """Assemble the histogram from class data instead of codewords.

    Nondegenerate pairs are grouped by the N**3 coset vectors: the weight
    comes from enumerated Gaussian periods, the frequency from the closed
    form f(c).  Pairs with some a + beta**t b = 0 split into 3N coset
    families of b with (r-1)/N members each.  The zero pair adds weight 0.
    """
    if params.e != 3:
        raise BadParametersError("semi-analytic assembly is defined for e = 3")
    tw = params.tower
    n1, n_ord = tw.r - 1, params.N
    if system is None:
        system = CharSystem(tw, n_ord)
    eta = []
    for u in range(n_ord):
        v = system.gaussian_period(u).as_integer()
        if v is None:
            raise NonIntegerResultError(f"period at coset {u} is irrational")
        eta.append(v)
    hq = Fraction(params.h * n1, tw.q)
    coef = Fraction(params.h * n_ord, 3 * tw.q)

    def as_weight(lam: Fraction) -> int:
        w = hq - lam
        if w.denominator != 1:
            raise NonIntegerResultError(f"weight {w} is not an integer")
        return int(w)

    hist = Counter()
    hist[0] = 1
    for c in product(range(n_ord), repeat=3):
        freq = f_closed(params, case, c)
        if freq:
            lam = coef * sum(eta[(-ci) % n_ord] for ci in c)
            hist[as_weight(lam)] += freq
    # degenerate families a = -beta**t b, b != 0, one weight per coset of b
    for t in range(1, 4):
        for k in range(n_ord):
            lam = Fraction(system.eta_zero)
            for i in range(1, 4):
                if i == t:
                    continue
                diff = tw.sub(i * params.beta_log % n1, t * params.beta_log % n1)
                arg = (k + i * params.g_log + diff) % n1
                lam += eta[arg % n_ord]
            hist[as_weight(coef * lam)] += n1 // n_ord
    dist = WeightDistribution(hist)
    dist.validate(params)
    return dist
