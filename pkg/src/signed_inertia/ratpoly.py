"""Exact univariate polynomials over the rationals.

Dense coefficient representation (index = exponent) over ``fractions.Fraction``.
Everything here is exact: no floating point is ever consulted.  The three
primitives the rest of the package relies on are

* :func:`square_free_part` -- same roots, all multiplicities one,
* :func:`real_rooted_inertia` -- sign census of a real-rooted polynomial,
* :func:`isolate_positive_roots` -- Sturm-chain isolation of the positive
  roots together with their multiplicities.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, NamedTuple, Optional, Sequence

Rational = Fraction


class Inertia(NamedTuple):
    """Counts of positive, negative and zero roots (or eigenvalues)."""

    n_plus: int
    n_minus: int
    n_zero: int


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {type(x).__name__}")


class RationalPolynomial:
    """Immutable dense polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coefficients: Iterable = ()) -> None:
        coeffs = [_to_fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPolynomial is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "RationalPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "RationalPolynomial":
        return cls((1,))

    @classmethod
    def variable(cls) -> "RationalPolynomial":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "RationalPolynomial":
        p = cls.one()
        for r in roots:
            p = p * cls((-_to_fraction(r), 1))
        return p

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x) -> Fraction:
        x = _to_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero:
            return "RationalPolynomial(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*t")
            else:
                terms.append(f"{c}*t^{k}")
        return "RationalPolynomial(" + " + ".join(terms) + ")"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "RationalPolynomial":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return RationalPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "RationalPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalPolynomial":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "RationalPolynomial":
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return RationalPolynomial.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RationalPolynomial":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = RationalPolynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other) -> tuple["RationalPolynomial", "RationalPolynomial"]:
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        d = other.degree
        if self.degree < d:
            return RationalPolynomial.zero(), self
        num = list(self.coeffs)
        lead = other.leading
        quo = [Fraction(0)] * (len(num) - d)
        for shift in range(len(num) - 1 - d, -1, -1):
            c = num[shift + d]
            if c == 0:
                continue
            factor = c / lead
            quo[shift] = factor
            for i, bc in enumerate(other.coeffs):
                num[shift + i] -= factor * bc
        return RationalPolynomial(quo), RationalPolynomial(num[:d])

    def __floordiv__(self, other) -> "RationalPolynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "RationalPolynomial":
        return divmod(self, other)[1]

    @staticmethod
    def _coerce(x) -> "RationalPolynomial":
        if isinstance(x, RationalPolynomial):
            return x
        return RationalPolynomial((_to_fraction(x),))

    # -- calculus and normalization -----------------------------------------

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(k * c for k, c in enumerate(self.coeffs) if k >= 1)

    def monic(self) -> "RationalPolynomial":
        if self.is_zero:
            raise ValueError("zero polynomial cannot be made monic")
        lead = self.leading
        return RationalPolynomial(c / lead for c in self.coeffs)

    def shift_down(self, k: int) -> "RationalPolynomial":
        """Divide by t^k; requires the k lowest coefficients to vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError("polynomial is not divisible by t^%d" % k)
        return RationalPolynomial(self.coeffs[k:])

    def compose_scale(self, r) -> "RationalPolynomial":
        """p(r*t) as an exact polynomial."""
        r = _to_fraction(r)
        return RationalPolynomial(c * r**k for k, c in enumerate(self.coeffs))

    def integer_coefficients(self) -> list[int]:
        """Primitive integer coefficient list (content removed, leading > 0)."""
        if self.is_zero:
            return []
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // int_gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = int_gcd(g, abs(v))
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return ints


# -- gcd and square-free machinery ------------------------------------------


def _int_primitive(coeffs: Sequence[int]) -> list[int]:
    g = 0
    for v in coeffs:
        g = int_gcd(g, abs(v))
    if g == 0:
        return []
    out = [v // g for v in coeffs]
    if out[-1] < 0:
        out = [-v for v in out]
    return out


def _int_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    rem = list(a)
    d = len(b) - 1
    lead = b[-1]
    while len(rem) - 1 >= d and rem:
        if rem[-1] == 0:
            rem.pop()
            continue
        factor = rem[-1]
        shift = len(rem) - 1 - d
        rem = [lead * c for c in rem]
        for i, c in enumerate(b):
            rem[shift + i] -= factor * c
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def poly_gcd(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    """Monic gcd via a primitive pseudo-remainder sequence over the integers.

    Taking the primitive part after every pseudo-division step keeps
    coefficient growth polynomial instead of exponential.
    """
    if p.is_zero:
        return q.monic() if not q.is_zero else RationalPolynomial.zero()
    if q.is_zero:
        return p.monic()
    a = p.integer_coefficients()
    b = q.integer_coefficients()
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_pseudo_rem(a, b)
        a, b = b, _int_primitive(r)
    return RationalPolynomial(a).monic()


def square_free_part(p: RationalPolynomial) -> RationalPolynomial:
    """p divided by gcd(p, p'): same root set, every multiplicity one.

    The result is monic.  Raises on the zero polynomial.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no square-free part")
    if p.degree == 0:
        return RationalPolynomial.one()
    g = poly_gcd(p, p.derivative())
    quo, rem = divmod(p, g)
    assert rem.is_zero
    return quo.monic()


def is_square_free(p: RationalPolynomial) -> bool:
    if p.is_zero:
        return False
    if p.degree == 0:
        return True
    return poly_gcd(p, p.derivative()).degree == 0


def square_free_decomposition(
    p: RationalPolynomial,
) -> list[tuple[RationalPolynomial, int]]:
    """Yun decomposition: pairwise-coprime monic square-free factors.

    Returns ``[(q_i, m_i), ...]`` with ``p = lc(p) * prod q_i ** m_i`` and
    every ``q_i`` square-free of positive degree.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no square-free decomposition")
    p = p.monic()
    if p.degree == 0:
        return []
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return [(p, 1)]
    w = (p // g).monic()
    y = p.derivative() // g
    z = y - w.derivative()
    out: list[tuple[RationalPolynomial, int]] = []
    i = 1
    while w.degree > 0:
        gi = poly_gcd(w, z)
        if gi.degree > 0:
            out.append((gi.monic(), i))
        w = (w // gi).monic()
        y = z // gi
        z = y - w.derivative()
        i += 1
    return out


# -- root counting -----------------------------------------------------------


def real_rooted_inertia(p: RationalPolynomial) -> Inertia:
    """Sign census of the roots of a polynomial known to be real-rooted.

    The zero-root multiplicity is the index of the lowest nonzero
    coefficient; Descartes' rule of signs is exact on the remaining factor
    because every root is real.  The caller is responsible for the
    real-rootedness guarantee (characteristic polynomials of symmetric
    matrices satisfy it).
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no root census")
    coeffs = p.coeffs
    n_zero = 0
    while coeffs[n_zero] == 0:
        n_zero += 1
    rest = [c for c in coeffs[n_zero:] if c != 0]
    n_plus = sum(1 for a, b in zip(rest, rest[1:]) if (a > 0) != (b > 0))
    n_minus = p.degree - n_zero - n_plus
    return Inertia(n_plus, n_minus, n_zero)


def cauchy_root_bound(p: RationalPolynomial) -> Fraction:
    """1 + max |a_i / a_d|: every real root lies in (-B, B)."""
    if p.is_zero:
        raise ValueError("zero polynomial has no root bound")
    lead = abs(p.leading)
    m = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    return 1 + m / lead


def _positive_rescale(p: RationalPolynomial) -> RationalPolynomial:
    # rescale by a positive rational: sign at every point is preserved
    if p.degree < 1:
        return p
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // int_gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = int_gcd(g, abs(v))
    return RationalPolynomial(v // g for v in ints)


def sturm_chain(p: RationalPolynomial) -> list[RationalPolynomial]:
    """Standard Sturm chain; members rescaled by positive constants only."""
    chain = [_positive_rescale(p), _positive_rescale(p.derivative())]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        rem = -(chain[-2] % chain[-1])
        if rem.is_zero:
            break
        chain.append(_positive_rescale(rem))
    return [q for q in chain if not q.is_zero]


def _sign_variations(values: Iterable[Fraction]) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(chain: Sequence[RationalPolynomial], a: Fraction, b: Fraction) -> int:
    """Number of distinct roots in (a, b]; endpoints must not be roots."""
    va = _sign_variations(q(a) for q in chain)
    vb = _sign_variations(q(b) for q in chain)
    return va - vb


def count_real_roots(p: RationalPolynomial) -> int:
    """Number of distinct real roots, via a full-line Sturm count."""
    q = square_free_part(p)
    if q.degree == 0:
        return 0
    bound = cauchy_root_bound(q)
    return sturm_count(sturm_chain(q), -bound, bound)


def _isolate_square_free(
    q: RationalPolynomial,
    chain: Sequence[RationalPolynomial],
    lo: Fraction,
    hi: Fraction,
    out: list[tuple[Fraction, Fraction]],
) -> None:
    # invariant: q(lo) != 0 and q(hi) != 0
    k = sturm_count(chain, lo, hi)
    if k == 0:
        return
    if k == 1:
        out.append((lo, hi))
        return
    mid = (lo + hi) / 2
    if q(mid) == 0:
        delta = (hi - lo) / 4
        while (
            q(mid - delta) == 0
            or q(mid + delta) == 0
            or sturm_count(chain, mid - delta, mid + delta) != 1
        ):
            delta /= 2
        _isolate_square_free(q, chain, lo, mid - delta, out)
        out.append((mid - delta, mid + delta))
        _isolate_square_free(q, chain, mid + delta, hi, out)
    else:
        _isolate_square_free(q, chain, lo, mid, out)
        _isolate_square_free(q, chain, mid, hi, out)


def refine_interval(
    q: RationalPolynomial, lo: Fraction, hi: Fraction
) -> tuple[Fraction, Fraction]:
    """Shrink an interval known to contain exactly one simple root of q."""
    mid = (lo + hi) / 2
    vm = q(mid)
    if vm == 0:
        delta = min(mid - lo, hi - mid) / 2
        return (mid - delta, mid + delta)
    if (q(lo) > 0) != (vm > 0):
        return (lo, mid)
    return (mid, hi)


def refine_to_width(
    q: RationalPolynomial, lo: Fraction, hi: Fraction, width: Fraction
) -> tuple[Fraction, Fraction]:
    while hi - lo >= width:
        lo, hi = refine_interval(q, lo, hi)
    return lo, hi


def isolate_positive_roots(
    p: RationalPolynomial,
) -> list[tuple[tuple[Fraction, Fraction], int]]:
    """Disjoint rational intervals around the distinct positive roots of p.

    Each entry is ``((lo, hi), multiplicity)`` with ``0 < lo < root < hi``,
    exactly one distinct root per interval, sorted ascending.  Multiplicities
    come from the square-free decomposition, so they sum to the number of
    positive roots counted with multiplicity.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no isolated roots")
    located: list[tuple[Fraction, Fraction, int, RationalPolynomial]] = []
    for factor, mult in square_free_decomposition(p):
        if factor.coeffs and factor.coeffs[0] == 0:
            factor = factor.shift_down(1)  # square-free: at most one zero root
        if factor.degree < 1:
            continue
        chain = sturm_chain(factor)
        bound = cauchy_root_bound(factor)
        intervals: list[tuple[Fraction, Fraction]] = []
        _isolate_square_free(factor, chain, Fraction(0), bound, intervals)
        for lo, hi in intervals:
            while lo <= 0:
                lo, hi = refine_interval(factor, lo, hi)
            located.append((lo, hi, mult, factor))
    # distinct factors are coprime, so their roots never coincide; shrink
    # until the isolation intervals are pairwise disjoint
    changed = True
    while changed:
        changed = False
        located.sort(key=lambda item: (item[0], item[1]))
        for i in range(len(located) - 1):
            lo1, hi1, m1, f1 = located[i]
            lo2, hi2, m2, f2 = located[i + 1]
            if hi1 > lo2:
                located[i] = (*refine_interval(f1, lo1, hi1), m1, f1)
                located[i + 1] = (*refine_interval(f2, lo2, hi2), m2, f2)
                changed = True
    return [((lo, hi), mult) for lo, hi, mult, _ in located]


def rational_root_in(
    p: RationalPolynomial, lo: Fraction, hi: Fraction
) -> Optional[Fraction]:
    """Exact rational root inside an interval isolating one root of p.

    Returns the root if it is rational, else ``None``.  A rational root u/v
    (lowest terms) of a primitive integer polynomial has v dividing the
    leading coefficient A, so A*root is an integer; refining the bracket
    until its image under multiplication by A is shorter than 1 leaves a
    single integer candidate, which is then checked exactly.
    """
    q = square_free_part(p)
    if q.coeffs and q.coeffs[0] == 0:
        q = q.shift_down(1)
        if lo < 0 < hi:
            return Fraction(0)
    if q.degree < 1:
        return None
    lead = q.integer_coefficients()[-1]
    target = Fraction(1, 2 * lead)
    while hi - lo >= target:
        mid = (lo + hi) / 2
        if q(mid) == 0:
            return mid
        lo, hi = refine_interval(q, lo, hi)
    k = math.floor(lo * lead) + 1  # only integer that can sit in (A*lo, A*hi)
    candidate = Fraction(k, lead)
    if lo < candidate < hi and q(candidate) == 0:
        return candidate
    return None
