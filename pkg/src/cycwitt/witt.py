"""The cyclotomic Witt ring.

Elements are finite integer combinations of basis classes ``phi(n)``,
one for each n >= 1, where ``phi(n)`` stands for the full Galois orbit
of primitive n-th roots of unity and ``phi(1)`` is the ring unit.  The
product of two basis classes is again an integer combination, computed
prime by prime:

* coprime indices multiply to ``phi(n*m)``;
* at a single prime p, ``phi(p^a) * phi(p^b)`` is
  ``euler_phi(p^b) * phi(p^a)`` for a > b >= 1, and for a = b >= 1 it is
  ``euler_phi(p^a) * (phi(p^a) + ... + phi(1)) - p^(a-1) * phi(p^a)``.

The operator family F_m ("take m-th powers of roots") acts by

    F_m phi(n) = g * prod(1 - 1/p for p | g, p not dividing n/g) * phi(n/g),
    g = gcd(m, n),

always with integer coefficients, and each F_m is a ring endomorphism.
The companion index-multiplication family V_m sends phi(n) to phi(m*n)
(additively; V_a V_b = V_ab).  Scalar projections: trace
(coefficientwise Mobius), the root-count map f0 (coefficientwise
totient), and the coefficient-of-phi(1) projection ``integral``.

Note: V_m is often described as the adjoint of F_m, but against the
``inner`` pairing below that holds only on the image pairs
(phi(m*n) against phi(n)); inner(F_3 phi(4), phi(4)) = 2 while
inner(phi(4), V_3 phi(4)) = 0, so the literal adjunction identity
fails.  See the test suite and the verification notes for the
counterexample.

Everything in this module is exact integer/rational arithmetic except
``zeta_partial_check``, which evaluates truncated Dirichlet series in
floating point with explicit tail bounds.  The closed forms here are
verified against the literal root-multiset model in ``cycwitt.roots``
by the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith import (
    divisors,
    euler_phi,
    factor,
    is_prime,
    mobius,
    phi_mu_tables,
    prime_factors,
    ramanujan_sum,
)

__all__ = [
    "WittElement", "phi", "ZERO", "ONE",
    "add", "neg", "scale", "basis_mul", "mul",
    "frobenius", "verschiebung", "trace", "t_m", "f0", "integral", "inner",
    "parseval_check", "ParsevalReport",
    "zeta_partial_check", "ZetaReport",
    "hom_classify",
]


class WittElement:
    """Sparse integer combination of basis classes phi(n).

    Immutable and canonical: zero coefficients are never stored, so
    equality and hashing are structural.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for n, v in dict(coeffs).items():
                if not isinstance(n, int) or n < 1:
                    raise ValueError(f"basis index must be a positive integer, got {n!r}")
                if v:
                    c[n] = v
        object.__setattr__(self, "_c", c)

    def __setattr__(self, name, value):
        raise AttributeError("WittElement is immutable")

    def items(self) -> tuple[tuple[int, int], ...]:
        """Sorted (index, coefficient) pairs; the canonical serialized form."""
        return tuple(sorted(self._c.items()))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._c))

    def coeff(self, n: int) -> int:
        return self._c.get(n, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if not isinstance(other, WittElement):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self.items())

    def __add__(self, other):
        if not isinstance(other, WittElement):
            return NotImplemented
        c = dict(self._c)
        for n, v in other._c.items():
            c[n] = c.get(n, 0) + v
        return WittElement(c)

    def __neg__(self):
        return WittElement({n: -v for n, v in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, WittElement):
            return NotImplemented
        c = dict(self._c)
        for n, v in other._c.items():
            c[n] = c.get(n, 0) - v
        return WittElement(c)

    def __mul__(self, other):
        if isinstance(other, int):
            return WittElement({n: v * other for n, v in self._c.items()})
        if isinstance(other, WittElement):
            return mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = ONE
        for _ in range(k):
            out = mul(out, self)
        return out

    def divexact(self, k: int) -> "WittElement":
        """Divide every coefficient by k; inexactness is an internal error."""
        c = {}
        for n, v in self._c.items():
            q, r = divmod(v, k)
            if r:
                raise ArithmeticError(
                    f"inexact division of {v}*phi({n}) by {k}: implementation bug"
                )
            c[n] = q
        return WittElement(c)

    def to_pairs(self) -> list[list[int]]:
        return [[n, v] for n, v in self.items()]

    @classmethod
    def from_pairs(cls, pairs) -> "WittElement":
        c = {}
        for n, v in pairs:
            c[n] = c.get(n, 0) + v
        return cls(c)

    def __repr__(self):
        if not self._c:
            return "WittElement(0)"
        body = " + ".join(f"{v}*phi({n})" for n, v in self.items())
        return f"WittElement({body})"


def phi(n: int) -> WittElement:
    """The basis class of the primitive n-th roots of unity."""
    if n < 1:
        raise ValueError(f"phi() requires n >= 1, got {n}")
    return WittElement({n: 1})


ZERO = WittElement()
ONE = phi(1)


def add(a: WittElement, b: WittElement) -> WittElement:
    return a + b


def neg(a: WittElement) -> WittElement:
    return -a


def scale(c: int, a: WittElement) -> WittElement:
    return a * c


def _local_basis_mul(p: int, a: int, b: int) -> dict[int, int]:
    """phi(p^a) * phi(p^b) within the single-prime tower, as {p^j: coeff}."""
    if a < b:
        a, b = b, a
    if b == 0:
        return {p**a: 1}
    if a > b:
        return {p**a: euler_phi(p**b)}
    tot = euler_phi(p**a)
    out = {p**j: tot for j in range(a + 1)}
    out[p**a] = tot - p ** (a - 1)
    if out[p**a] == 0:
        del out[p**a]
    return out


@lru_cache(maxsize=None)
def _basis_mul_items(n: int, m: int) -> tuple[tuple[int, int], ...]:
    acc = {1: 1}
    for p in sorted(set(prime_factors(n)) | set(prime_factors(m))):
        a = b = 0
        nn, mm = n, m
        while nn % p == 0:
            a += 1
            nn //= p
        while mm % p == 0:
            b += 1
            mm //= p
        local = _local_basis_mul(p, a, b)
        acc = {u * q: cu * cq for u, cu in acc.items() for q, cq in local.items()}
    return tuple(sorted(acc.items()))


def basis_mul(n: int, m: int) -> WittElement:
    """Product phi(n) * phi(m) as an integer combination of basis classes."""
    if n < 1 or m < 1:
        raise ValueError("basis_mul() requires positive indices")
    if n > m:
        n, m = m, n
    return WittElement(dict(_basis_mul_items(n, m)))


def mul(a: WittElement, b: WittElement) -> WittElement:
    """Bilinear extension of basis_mul."""
    acc: dict[int, int] = {}
    for n, cn in a.items():
        for m, cm in b.items():
            c = cn * cm
            for d, cd in _basis_mul_items(*((n, m) if n <= m else (m, n))):
                acc[d] = acc.get(d, 0) + c * cd
    return WittElement(acc)


@lru_cache(maxsize=None)
def _frobenius_basis(m: int, n: int) -> tuple[int, int]:
    """F_m on phi(n): returns (target index, integer coefficient)."""
    g = math.gcd(m, n)
    tgt = n // g
    num, den = g, 1
    for p in prime_factors(g):
        if tgt % p:
            num *= p - 1
            den *= p
    q, r = divmod(num, den)
    assert r == 0
    return tgt, q


def frobenius(m: int, a: WittElement) -> WittElement:
    """The m-th power operator F_m, additively extended; m = 0 gives f0(a)*phi(1)."""
    if m < 0:
        raise ValueError(f"frobenius() requires m >= 0, got {m}")
    if m == 0:
        return ONE * f0(a)
    acc: dict[int, int] = {}
    for n, c in a.items():
        tgt, k = _frobenius_basis(m, n)
        acc[tgt] = acc.get(tgt, 0) + c * k
    return WittElement(acc)


def verschiebung(m: int, a: WittElement) -> WittElement:
    """The index-multiplication operator: phi(n) -> phi(m*n), additively."""
    if m < 1:
        raise ValueError(f"verschiebung() requires m >= 1, got {m}")
    return WittElement({m * n: c for n, c in a.items()})


def trace(a: WittElement) -> int:
    """Sum of all roots counted with coefficients: coefficientwise Mobius."""
    return sum(c * mobius(n) for n, c in a.items())


def f0(a: WittElement) -> int:
    """Root-count projection: coefficientwise Euler totient; a ring homomorphism."""
    return sum(c * euler_phi(n) for n, c in a.items())


def t_m(m: int, a: WittElement) -> int:
    """trace of F_m(a); on the basis this is the Ramanujan sum C_n^m."""
    if m == 0:
        return f0(a)
    return trace(frobenius(m, a))


def integral(a: WittElement) -> int:
    """Coefficient of phi(1)."""
    return a.coeff(1)


def inner(a: WittElement, b: WittElement) -> int:
    """integral(a*b); the basis classes are orthogonal with norm euler_phi(n).

    Complex conjugation permutes each orbit of primitive roots, so it
    fixes every basis class; conjugation is therefore the identity here.
    """
    return integral(mul(a, b))


@dataclass
class ParsevalReport:
    """Exact finite Fourier orthogonality check at level N."""

    N: int
    pairs_checked: int = 0
    failures: list = field(default_factory=list)  # (n, m, lhs, rhs) Fractions

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        verdict = "PASS" if self.ok else f"FAIL ({len(self.failures)} mismatches)"
        return (
            f"parseval N={self.N}: {self.pairs_checked} divisor pairs checked, "
            f"orthogonality exact in rationals: {verdict}"
        )


def parseval_check(N: int) -> ParsevalReport:
    """For all n, m | N verify euler_phi(n)*[n == m] == (1/N) * sum over z <= N
    of C_n^z * C_m^z, exactly in rationals."""
    if N < 1:
        raise ValueError(f"parseval_check() requires N >= 1, got {N}")
    report = ParsevalReport(N)
    ds = divisors(N)
    cols = {d: [ramanujan_sum(d, z) for z in range(1, N + 1)] for d in ds}
    for n in ds:
        for m in ds:
            lhs = Fraction(euler_phi(n) if n == m else 0)
            rhs = Fraction(sum(x * y for x, y in zip(cols[n], cols[m])), N)
            report.pairs_checked += 1
            if lhs != rhs:
                report.failures.append((n, m, lhs, rhs))
    return report


def _zeta_value(t: int, terms: int = 100_000) -> float:
    """Riemann zeta at integer t >= 2 by direct series.

    Tail corrected by M^(1-t)/(t-1) - M^(-t)/2 + t*M^(-t-1)/12; the
    remaining error is O(t^3 * M^(-t-3)), far below float resolution
    for M = 1e5.
    """
    m = float(terms)
    s = sum(k ** -float(t) for k in range(terms, 0, -1))
    return s + m ** (1 - t) / (t - 1) - m ** (-t) / 2 + t * m ** (-t - 1) / 12


@dataclass
class ZetaReport:
    """Truncated Dirichlet-series identity check for Ramanujan sums."""

    m: int
    t: int
    cutoff: int
    tol: float
    partial_sum: float
    reference: float
    tail_bound: float

    @property
    def difference(self) -> float:
        return abs(self.partial_sum - self.reference)

    @property
    def ok(self) -> bool:
        return self.difference <= self.tol

    def summary(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        return (
            f"zeta check m={self.m} t={self.t} N={self.cutoff}: "
            f"partial={self.partial_sum:.12f} reference={self.reference:.12f} "
            f"|diff|={self.difference:.3e} (tol {self.tol:.1e}, "
            f"tail bound {self.tail_bound:.1e}): {verdict}"
        )


def zeta_partial_check(m: int, t: int, cutoff: int, tol: float) -> ZetaReport:
    """Compare sum over n <= cutoff of C_n^m / n^t with
    (sum of d**(1-t) over d | m) / zeta(t).

    The absolute series converges for t >= 2 since |C_n^m| is bounded
    by the divisor sum of gcd(n, m), hence of m; the reported tail
    bound is sigma_1(m) * cutoff^(1-t) / (t-1).
    """
    if m < 1:
        raise ValueError(f"requires m >= 1, got {m}")
    if t < 2:
        raise ValueError(f"requires t >= 2 for absolute convergence, got {t}")
    phi_tab, mu_tab = phi_mu_tables(cutoff)
    partial = 0.0
    for n in range(cutoff, 0, -1):  # ascending magnitude for float accuracy
        g = math.gcd(n, m)
        k = n // g
        if mu_tab[k] == 0:
            continue
        c = mu_tab[k] * phi_tab[n] // phi_tab[k]
        partial += c / n**t
    sigma = divisors(m)
    reference = sum(d ** (1 - t) for d in sigma) / _zeta_value(t)
    tail = sum(sigma) * cutoff ** (1 - t) / (t - 1)
    return ZetaReport(m, t, cutoff, tol, partial, reference, tail)


def _expected_homs(p: int, k: int) -> set[tuple[int, ...]]:
    """Value tables (on phi(p^0)..phi(p^k)) of the k+1 ring maps to the integers:

    the trace of F_{p^i} for 0 <= i < k, plus the root-count map f0.
    """
    out = set()
    for i in range(k):
        vals = [1]
        for m in range(1, k + 1):
            if m <= i:
                vals.append(p**m - p ** (m - 1))
            elif m == i + 1:
                vals.append(-(p**i))
            else:
                vals.append(0)
        out.add(tuple(vals))
    out.add(tuple(euler_phi(p**m) for m in range(k + 1)))
    return out


def hom_classify(p: int, k: int) -> list[dict[int, int]]:
    """All ring homomorphisms from the span of phi(p^0)..phi(p^k) to the integers.

    Solves the multiplicative constraints of the basis products directly
    (a quadratic per level plus cross relations), then checks the
    solution set equals the k+1 known maps; a mismatch would be an
    internal error.  Returns one {p**i: value} assignment per map.
    """
    if not is_prime(p):
        raise ValueError(f"hom_classify() requires a prime, got {p}")
    if k < 1:
        raise ValueError(f"hom_classify() requires depth k >= 1, got {k}")

    solutions: list[tuple[int, ...]] = []

    def extend(xs: list[int], total: int) -> None:
        n = len(xs)
        if n > k:
            solutions.append(tuple(xs))
            return
        pn = p**n
        tot = euler_phi(pn)
        b = pn // p - tot
        disc = b * b + 4 * tot * total
        if disc < 0:
            return
        s = math.isqrt(disc)
        if s * s != disc:
            return
        roots = set()
        for sgn in (s, -s):
            num = -b + sgn
            if num % 2 == 0:
                roots.add(num // 2)
        for x in sorted(roots):
            # cross relations: phi(p^n)*phi(p^j) = euler_phi(p^j)*phi(p^n), j < n
            if all(x * (xs[j] - euler_phi(p**j)) == 0 for j in range(1, n)):
                extend(xs + [x], total + x)

    extend([1], 1)

    # belt and braces: every solution must respect every basis product
    verified = []
    for vals in solutions:
        def ev(w) -> int:
            return sum(
                c * vals[0 if d == 1 else factor(d)[0][1]] for d, c in w.items()
            )
        good = True
        for i in range(k + 1):
            for j in range(k + 1):
                prod = basis_mul(p**i, p**j)
                if ev(prod) != vals[i] * vals[j]:
                    good = False
                    break
            if not good:
                break
        if good:
            verified.append(vals)

    expected = _expected_homs(p, k)
    if set(verified) != expected:
        raise ArithmeticError(
            f"hom classification mismatch at p={p}, k={k}: "
            f"found {sorted(verified)}, expected {sorted(expected)}"
        )
    return [
        {p**i: v for i, v in enumerate(vals)}
        for vals in sorted(verified, reverse=True)
    ]
