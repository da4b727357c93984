"""Gaussian periods, Gauss sums, Jacobi sums, and the coset-pair counts f.

Everything is evaluated exactly: sums over GF(r) are bucketed into integer
count tables in one pass over the field, then assembled into cyclotomic
integers (:class:`~cyclotome.cycint.CycInt`).  The multiplicative
character chi of order N sends alpha**k to zeta_N**k; the additive
character psi sends x to zeta_p**trace_to_p(x).  Every character,
including the principal one, takes the value 0 at 0 inside Gauss and
Jacobi sums; the boundary evaluations r - 2 and -1 below pin that
convention.

The pair count f(c) for a coset vector c = (c1, c2, c3) is the number of
(a, b) in GF(r)**2 with (a + beta**i b) * g**i * alpha**(c_i) an N-th
power for i = 1, 2, 3.  It is computed three independent ways: direct
enumeration, the Jacobi-sum identity, and the semiprimitive closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .cycint import CycInt
from .fields import ZERO, BadModulusError, FieldElement, FieldTower

if TYPE_CHECKING:
    from .code import CodeParams
    from .theorem import TheoremCase


class NonIntegerResultError(ArithmeticError):
    """A sum that must be a rational integer came out irrational or indivisible."""


class NotSemiprimitiveError(ValueError):
    """Closed form requested without the semiprimitive hypotheses."""


class CharSystem:
    """Character data for one tower and one character order N.

    Holds the two bucket tables that all character sums here reduce to:
    ``period_counts[u][t]`` counts field elements in coset u with absolute
    trace t, and ``pair_counts[u][v]`` counts solutions of a + b = 1 with
    a in coset u and b in coset v.  Immutable after construction; Jacobi
    sums are memoized.
    """

    def __init__(self, tower: FieldTower, order: int):
        if (tower.r - 1) % order:
            raise BadModulusError(f"N = {order} does not divide r-1 = {tower.r - 1}")
        self.tower = tower
        self.order = order
        self.p = tower.p
        self.r = tower.r
        trace_p = tower.trace_p_table
        counts = [[0] * self.p for _ in range(order)]
        for k in range(tower.r - 1):
            counts[k % order][trace_p[k]] += 1
        self.period_counts = counts
        self._periods: dict[int, CycInt] = {}
        self._pair_counts: list[list[int]] | None = None
        self._jacobi: dict[tuple[int, int], CycInt] = {}

    # -- characters ------------------------------------------------------------

    def chi(self, x: FieldElement, power: int = 1) -> CycInt:
        """chi**power at x; zero element maps to 0 by convention."""
        if x.index == ZERO:
            return CycInt.zero(self.order)
        return CycInt.root_of_unity(self.order, power * (x.index % self.order))

    def psi(self, x: FieldElement) -> CycInt:
        """Canonical additive character zeta_p**trace_to_p(x)."""
        return CycInt.root_of_unity(self.p, self.tower.trace_to_p(x))

    # -- character sums ----------------------------------------------------------

    @property
    def eta_zero(self) -> int:
        """Period at argument 0: the coset size (r-1)/N."""
        return (self.r - 1) // self.order

    def gaussian_period(self, u_coset: int) -> CycInt:
        """Sum of psi over the coset alpha**u_coset * C, in Z[zeta_p]."""
        u = u_coset % self.order
        if u not in self._periods:
            self._periods[u] = CycInt(self.p, self.period_counts[u])
        return self._periods[u]

    def gauss_sum(self, i: int) -> CycInt:
        """Sum of chi**i(x) psi(x) over nonzero x, in Z[zeta_lcm(p, N)]."""
        n = self.order
        m = math.lcm(self.p, n)
        vec = [0] * m
        wp, wn = m // self.p, m // n
        for u in range(n):
            row = self.period_counts[u]
            base = wn * (i * u % n)
            for t in range(self.p):
                if row[t]:
                    vec[(base + wp * t) % m] += row[t]
        return CycInt(m, vec)

    def _pairs(self) -> list[list[int]]:
        if self._pair_counts is None:
            tw, n = self.tower, self.order
            jc = [[0] * n for _ in range(n)]
            for k in range(tw.r - 1):
                b = tw.sub(0, k)  # 1 - alpha**k
                if b != ZERO:
                    jc[k % n][b % n] += 1
            self._pair_counts = jc
        return self._pair_counts

    def jacobi_sum(self, i: int, j: int) -> CycInt:
        """Sum of chi**i(a) chi**j(b) over a + b = 1, in Z[zeta_N]."""
        n = self.order
        key = (i % n, j % n)
        if key not in self._jacobi:
            vec = [0] * n
            for u, row in enumerate(self._pairs()):
                for v, cnt in enumerate(row):
                    if cnt:
                        vec[(key[0] * u + key[1] * v) % n] += cnt
            self._jacobi[key] = CycInt(n, vec)
        return self._jacobi[key]


@dataclass(frozen=True)
class XiMu:
    """Coset indices of the variable-change data attached to a coset vector.

    xi_i = g**i (1 - beta**i) c_i / c_3 for i = 1, 2, and
    mu = beta / (1 - beta**2); what enters the count formula are the cosets
    of xi1*mu, xi2*mu and xi1/xi2.
    """

    xi1_coset: int
    xi2_coset: int
    ximu1_coset: int
    ximu2_coset: int
    xi_ratio_coset: int


def xi_mu(params: "CodeParams", c: tuple[int, int, int]) -> XiMu:
    """Coset data for a coset vector, with the beta-free reductions cross-checked.

    Because beta, -1 and 1 + beta are all N-th powers, the three relevant
    cosets collapse to those of g*c1/c3, g**2*c2/c3 and (g*c2/c1)**-1; the
    raw field computation must agree with that reduction.
    """
    if params.e != 3:
        raise ValueError("xi/mu data is defined for e = 3 only")
    tw, n = params.tower, params.N
    n1 = tw.r - 1
    k1, k2, k3 = (ci % n for ci in c)
    g, b = params.g_log, params.beta_log
    omb = tw.sub(0, b)  # 1 - beta, nonzero
    omb2 = tw.sub(0, 2 * b % n1)  # 1 - beta**2
    xi1 = (g + omb + k1 - k3) % n1
    xi2 = (2 * g + omb2 + k2 - k3) % n1
    mu = (b - omb2) % n1
    ximu1 = (xi1 + mu) % n1
    ximu2 = (xi2 + mu) % n1
    ratio = (xi1 - xi2) % n1
    out = XiMu(
        xi1_coset=xi1 % n,
        xi2_coset=xi2 % n,
        ximu1_coset=ximu1 % n,
        ximu2_coset=ximu2 % n,
        xi_ratio_coset=ratio % n,
    )
    # reduced forms; failure would mean the character conventions drifted
    assert out.ximu1_coset == (g + k1 - k3) % n
    assert out.ximu2_coset == (2 * g + k2 - k3) % n
    assert out.xi_ratio_coset == (-(g + k2 - k1)) % n
    assert (out.ximu1_coset - out.ximu2_coset - out.xi_ratio_coset) % n == 0
    return out


def f_enumerate(params: "CodeParams", c: tuple[int, int, int]) -> int:
    """Count pairs (a, b) in the class of c by direct double loop over GF(r)**2."""
    tw, n = params.tower, params.N
    n1 = tw.r - 1
    g, b = params.g_log, params.beta_log
    targets = [((i + 1) * g + (ci % n)) % n for i, ci in enumerate(c)]
    shifts = [(i * b) % n1 for i in (1, 2, 3)]
    count = 0
    all_indices = range(-1, n1)  # ZERO == -1 first, then every nonzero index
    for a_idx in all_indices:
        for b_idx in all_indices:
            for i in range(3):
                bb = ZERO if b_idx == ZERO else (b_idx + shifts[i]) % n1
                t = tw.add(a_idx, bb)
                if t == ZERO or (t + targets[i]) % n:
                    break
            else:
                count += 1
    return count


def f_charsum(params: "CodeParams", system: CharSystem, c: tuple[int, int, int]) -> int:
    """Evaluate f(c) through the Jacobi-sum identity, exactly in Z[zeta_N]."""
    n, r = params.N, params.tower.r
    xm = xi_mu(params, c)
    deltas = (
        (xm.ximu1_coset == 0) + (xm.ximu2_coset == 0) + (xm.xi_ratio_coset == 0)
    )
    total = CycInt.from_int(n, r + 1 - n * deltas)
    for i in range(1, n):
        for j in range(1, n):
            if i + j == n:
                continue
            phase = CycInt.root_of_unity(n, i * xm.ximu1_coset + j * xm.ximu2_coset)
            total = total + phase * system.jacobi_sum(i, j)
    val = total.as_integer()
    if val is None:
        raise NonIntegerResultError(f"character sum for {c} is irrational: {total!r}")
    num = (r - 1) * val
    if num % n**3 or num < 0:
        raise NonIntegerResultError(f"count for {c} is not a nonnegative integer: {num}/{n**3}")
    return num // n**3


def jacobi_offdiagonal_value(case: "TheoremCase") -> int:
    """Common value of J(chi**i, chi**j) for i + j != N under the case hypotheses."""
    if case is None:
        raise NotSemiprimitiveError("no applicable case")
    if case.case_major == 1:
        return case.sqrt_r
    return -case.sqrt_r if case.gamma % 2 == 0 else case.sqrt_r


def f_closed(params: "CodeParams", case: "TheoremCase", c: tuple[int, int, int]) -> int:
    """Closed form for f(c): the Jacobi sums replaced by their +-sqrt(r) value."""
    if case is None:
        raise NotSemiprimitiveError("closed form needs the semiprimitive hypotheses")
    n, r = params.N, params.tower.r
    s = jacobi_offdiagonal_value(case)
    cg = params.g_log % n
    k1, k2, k3 = (ci % n for ci in c)
    d1 = (cg + k2 - k1) % n == 0
    d2 = (2 * cg + k2 - k3) % n == 0
    d3 = (cg + k1 - k3) % n == 0
    dsum = d1 + d2 + d3
    braced = r + 1 - n * dsum + s * (n * n * d2 * d3 - n * dsum + 2)
    num = (r - 1) * braced
    if num % n**3 or num < 0:
        raise NonIntegerResultError(f"closed form for {c} not a nonnegative integer")
    return num // n**3


def gaussian_period_closed(case: "TheoremCase", i: int) -> int:
    """Semiprimitive closed form of the period at coset i.

    One distinguished coset (0, or N/2 when the all-odd case makes N even)
    carries the large value; the other N-1 cosets share the small one.
    """
    if case is None:
        raise NotSemiprimitiveError("no applicable case")
    n, sr = case.N, case.sqrt_r
    if case.case_major == 1:
        special, generic = (n - 1) * sr - 1, -sr - 1
        special_coset = n // 2
    else:
        sign = -1 if case.gamma % 2 else 1
        special, generic = -sign * (n - 1) * sr - 1, sign * sr - 1
        special_coset = 0
    num = special if i % n == special_coset else generic
    if num % n:
        raise NotSemiprimitiveError(f"period value {num}/{n} is not integral")
    return num // n
