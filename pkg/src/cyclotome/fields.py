"""Arithmetic in the tower GF(p) < GF(q) < GF(r) with q = p**s, r = q**m.

The extension GF(r) is built in one step as GF(p)[x]/(f) for a primitive
polynomial f of degree s*m, so the residue of x is a generator ``alpha`` of
the multiplicative group.  Nonzero elements are represented by their
discrete logarithm base alpha (an int in ``[0, r-2]``); zero is the
sentinel ``ZERO = -1``.  With this representation multiplication is index
addition mod r-1 and addition uses a precomputed Zech logarithm table
``zech[k] = dlog(1 + alpha**k)``.

The intermediate field GF(q) is the subfield fixed by the map
``x -> x**q``; its nonzero elements are exactly the indices divisible by
(r-1)/(q-1).  Both trace maps (down to GF(q) and down to GF(p)) are
precomputed lazily as index tables.
"""

from __future__ import annotations

import itertools
from array import array
from functools import cached_property

ZERO = -1

DEFAULT_FIELD_CAP = 1 << 24


class NonPrimeError(ValueError):
    """The claimed characteristic is not a prime number."""


class FieldTooLargeError(ValueError):
    """Requested field order exceeds the table-size cap."""


class NoPrimitivePolynomialError(RuntimeError):
    """Exhausted the search space without a primitive polynomial (internal bug)."""


class BadPolynomialError(ValueError):
    """A user-supplied defining polynomial is malformed or not primitive."""


class LogOfZeroError(ValueError):
    """Discrete logarithm of the zero element requested."""


class BadModulusError(ValueError):
    """Coset modulus N does not divide the group order r-1."""


class TowerMismatchError(ValueError):
    """Operands belong to different field towers."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the field cap."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d, twos = n - 1, 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(twos - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division (n stays below the cap squared)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over GF(p); coefficient lists, constant first


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    # f monic; remainder of a*b has degree < deg f
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    deg_f = len(f) - 1
    for i in range(len(prod) - 1, deg_f - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(deg_f):
                prod[i - deg_f + j] = (prod[i - deg_f + j] - c * f[j]) % p
    return _poly_trim(prod)


def _poly_powmod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    acc = list(base)
    while e:
        if e & 1:
            result = _poly_mulmod(result, acc, f, p)
        acc = _poly_mulmod(acc, acc, f, p)
        e >>= 1
    return result


def _is_primitive(f: list[int], p: int) -> bool:
    """True iff x generates the full group of order p**deg(f) - 1 modulo f.

    Succeeding forces f irreducible: the powers of x then exhaust every
    nonzero residue, so the quotient ring is a field.
    """
    order = p ** (len(f) - 1) - 1
    x = [0, 1] if len(f) > 2 else _poly_trim([(-f[0]) % p])
    if _poly_powmod(x, order, f, p) != [1]:
        return False
    return all(_poly_powmod(x, order // ell, f, p) != [1] for ell in prime_factors(order))


def find_primitive_polynomial(p: int, degree: int, index: int = 0) -> tuple[int, ...]:
    """The index-th monic primitive polynomial of the given degree over GF(p).

    Candidates are scanned in lexicographic order of the coefficient vector
    (c_0, ..., c_{degree-1}); index 0 is the deterministic default used by
    ``build_tower``.  Returned constant-first, including the leading 1.
    """
    if not is_prime(p):
        raise NonPrimeError(f"p = {p} is not prime")
    seen = 0
    for low in itertools.product(range(p), repeat=degree):
        f = list(low) + [1]
        if _is_primitive(f, p):
            if seen == index:
                return tuple(f)
            seen += 1
    raise NoPrimitivePolynomialError(f"no primitive polynomial of degree {degree} over GF({p})")


class FieldElement:
    """Element of a :class:`FieldTower`, stored as a dlog index or ZERO."""

    __slots__ = ("tower", "index")

    def __init__(self, tower: "FieldTower", index: int):
        self.tower = tower
        self.index = index

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.tower is not self.tower:
            raise TowerMismatchError("operands belong to different towers")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldElement)
            and other.tower is self.tower
            and other.index == self.index
        )

    def __hash__(self) -> int:
        return hash((id(self.tower), self.index))

    def __bool__(self) -> bool:
        return self.index != ZERO

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.tower, self.tower.add(self.index, other.index))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.tower, self.tower.sub(self.index, other.index))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.tower, self.tower.neg(self.index))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.tower, self.tower.mul(self.index, other.index))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.tower, self.tower.mul(self.index, self.tower.inv(other.index)))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.tower, self.tower.pow(self.index, e))

    def dlog(self) -> int:
        if self.index == ZERO:
            raise LogOfZeroError("dlog(0) is undefined")
        return self.index

    def coset_index(self, n: int) -> int:
        return self.tower.coset_index_of(self.index, n)

    def coeffs(self) -> tuple[int, ...]:
        """Coefficients over GF(p) of this element, constant first."""
        return self.tower.coeffs_of_index(self.index)

    def __repr__(self) -> str:
        body = "0" if self.index == ZERO else f"a^{self.index}"
        return f"<GF({self.tower.r}) {body}>"


class FieldTower:
    """GF(p) < GF(q) < GF(r) with exp/log/Zech tables over a fixed generator.

    Logically immutable: every operation is a pure read, so a tower may be
    shared freely between threads or processes.  The two trace tables are
    materialized lazily on first use; a race there at worst recomputes the
    identical array, never exposes a partial one.
    """

    def __init__(self, p: int, s: int, m: int, poly: tuple[int, ...]):
        self.p = p
        self.s = s
        self.m = m
        self.q = p**s
        self.r = self.q**m
        self.degree = s * m
        self.defining_polynomial = poly
        self._n1 = self.r - 1  # multiplicative group order
        self._build_tables()

    # -- construction ------------------------------------------------------

    def _build_tables(self) -> None:
        p, d, r = self.p, self.degree, self.r
        f_low = self.defining_polynomial[:d]
        pow_packed = array("q", bytes(8 * (r - 1)))
        log_packed = array("q", bytes(8 * r))
        vec = [0] * d
        vec[0] = 1
        weights = [p**i for i in range(d)]
        for k in range(r - 1):
            packed = sum(c * w for c, w in zip(vec, weights))
            pow_packed[k] = packed
            log_packed[packed] = k
            lead = vec[d - 1]
            vec[1:] = vec[: d - 1]
            vec[0] = 0
            if lead:
                for i in range(d):
                    vec[i] = (vec[i] - lead * f_low[i]) % p
        if pow_packed[0] != 1:
            raise NoPrimitivePolynomialError("generator power table corrupt")
        zech = array("q", bytes(8 * (r - 1)))
        for k in range(r - 1):
            packed = pow_packed[k]
            c0 = packed % p
            bumped = packed - c0 + (c0 + 1) % p
            zech[k] = log_packed[bumped] if bumped else ZERO
        self._pow_packed = pow_packed
        self._log_packed = log_packed
        self.zech = zech
        self.neg_shift = 0 if p == 2 else (r - 1) // 2
        # canonical labels: GF(q)* and GF(p)* sit at index multiples of these
        self.subfield_step = (r - 1) // (self.q - 1)
        self.prime_step = (r - 1) // (p - 1)

    # -- raw index arithmetic (ZERO = -1 marks the zero element) ------------

    def add(self, i: int, j: int) -> int:
        if i == ZERO:
            return j
        if j == ZERO:
            return i
        z = self.zech[(j - i) % self._n1]
        return ZERO if z == ZERO else (i + z) % self._n1

    def neg(self, i: int) -> int:
        return ZERO if i == ZERO else (i + self.neg_shift) % self._n1

    def sub(self, i: int, j: int) -> int:
        return self.add(i, self.neg(j))

    def mul(self, i: int, j: int) -> int:
        if i == ZERO or j == ZERO:
            return ZERO
        return (i + j) % self._n1

    def inv(self, i: int) -> int:
        if i == ZERO:
            raise LogOfZeroError("zero has no inverse")
        return (-i) % self._n1

    def pow(self, i: int, e: int) -> int:
        if i == ZERO:
            if e <= 0:
                raise LogOfZeroError("0**e undefined for e <= 0")
            return ZERO
        return (i * e) % self._n1

    # -- public element API --------------------------------------------------

    def zero(self) -> FieldElement:
        return FieldElement(self, ZERO)

    def one(self) -> FieldElement:
        return FieldElement(self, 0)

    def alpha(self) -> FieldElement:
        """The distinguished generator of GF(r)*."""
        return FieldElement(self, 1 % self._n1)

    def element(self, index: int) -> FieldElement:
        """alpha**index, or zero for index == ZERO."""
        if index != ZERO:
            index %= self._n1
        return FieldElement(self, index)

    def from_coeffs(self, coeffs: "list[int] | tuple[int, ...]") -> FieldElement:
        """Element with the given GF(p) coefficient vector, constant first."""
        p = self.p
        packed = 0
        for i, c in enumerate(coeffs):
            packed += (c % p) * p**i
        if packed == 0:
            return self.zero()
        if packed >= self.r:
            raise ValueError("coefficient vector too long")
        return FieldElement(self, self._log_packed[packed])

    def coeffs_of_index(self, index: int) -> tuple[int, ...]:
        packed = 0 if index == ZERO else self._pow_packed[index]
        out = []
        for _ in range(self.degree):
            packed, c = divmod(packed, self.p)
            out.append(c)
        return tuple(out)

    def elements(self):
        """Iterate over all r elements (zero first)."""
        yield self.zero()
        for k in range(self._n1):
            yield FieldElement(self, k)

    def dlog(self, x: FieldElement) -> int:
        return x.dlog()

    def coset_index_of(self, index: int, n: int) -> int:
        """dlog mod n; 0 exactly when the element is an n-th power."""
        if index == ZERO:
            raise LogOfZeroError("coset index of 0 is undefined")
        if self._n1 % n:
            raise BadModulusError(f"N = {n} does not divide r-1 = {self._n1}")
        return index % n

    def coset_index(self, x: FieldElement, n: int) -> int:
        return self.coset_index_of(x.index, n)

    # -- traces --------------------------------------------------------------

    @cached_property
    def trace_q_table(self) -> array:
        """index -> index of the relative trace into GF(q) (ZERO for zero trace)."""
        n1, q = self._n1, self.q
        table = array("q", bytes(8 * n1))
        for k in range(n1):
            acc, e = k, k
            for _ in range(self.m - 1):
                e = e * q % n1
                acc = self.add(acc, e)
            table[k] = acc
        return table

    @cached_property
    def trace_p_table(self) -> array:
        """index -> absolute trace into GF(p), as an integer residue."""
        n1, p = self._n1, self.p
        const_of_index = {ZERO: 0}
        for c in range(1, p):
            const_of_index[self._log_packed[c]] = c
        table = array("q", bytes(8 * n1))
        for k in range(n1):
            acc, e = k, k
            for _ in range(self.degree - 1):
                e = e * p % n1
                acc = self.add(acc, e)
            table[k] = const_of_index[acc]
        return table

    def trace_to_q(self, x: FieldElement) -> FieldElement:
        """Relative trace sum of x**(q**i) for i < m; lands in GF(q)."""
        if x.index == ZERO:
            return self.zero()
        return FieldElement(self, self.trace_q_table[x.index])

    def trace_to_p(self, x: FieldElement) -> int:
        """Absolute trace sum of x**(p**i) for i < s*m, as an int in [0, p)."""
        if x.index == ZERO:
            return 0
        return self.trace_p_table[x.index]

    def trace_to_q_index(self, index: int) -> int:
        return ZERO if index == ZERO else self.trace_q_table[index]

    def trace_to_p_index(self, index: int) -> int:
        return 0 if index == ZERO else self.trace_p_table[index]

    def in_subfield_q(self, x: FieldElement) -> bool:
        return x.index == ZERO or x.index % self.subfield_step == 0

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, s={self.s}, m={self.m}, r={self.r})"


def build_tower(
    p: int,
    s: int,
    m: int,
    poly: "tuple[int, ...] | list[int] | None" = None,
    cap: int = DEFAULT_FIELD_CAP,
) -> FieldTower:
    """Construct the tower GF(p) < GF(p**s) < GF(p**(s*m)).

    The defining polynomial defaults to the lexicographically first monic
    primitive polynomial of degree s*m over GF(p), so towers (and hence
    all derived tables) are reproducible.  A caller-supplied ``poly``
    (constant-first coefficients, monic, length s*m + 1) must be primitive.
    """
    if not is_prime(p):
        raise NonPrimeError(f"p = {p} is not prime")
    if s < 1 or m < 1:
        raise ValueError("s and m must be positive")
    r = p ** (s * m)
    if r > cap:
        raise FieldTooLargeError(f"r = {r} exceeds cap {cap}")
    if poly is None:
        poly_t = find_primitive_polynomial(p, s * m)
    else:
        poly_t = tuple(c % p for c in poly)
        if len(poly_t) != s * m + 1:
            raise BadPolynomialError(
                f"polynomial must have degree {s * m} (got {len(poly_t) - 1})"
            )
        if poly_t[-1] != 1:
            raise BadPolynomialError("polynomial must be monic")
        if not _is_primitive(list(poly_t), p):
            raise BadPolynomialError(f"{poly_t} is not primitive over GF({p})")
    return FieldTower(p, s, m, poly_t)
