"""Exact arithmetic kernel.

Scalars are arbitrary-precision ``int`` and ``fractions.Fraction`` values,
polynomials are dense coefficient tuples over Fraction (degree <= 5 in all
uses here, but nothing below assumes that), and irrational roots are carried
as (square-free polynomial, isolating interval) pairs that can be refined to
any requested width.  No floats enter any computation; ``float()`` conversion
exists only for display convenience.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Union


class DomainError(ValueError):
    """Input outside an operation's stated domain."""


class DegenerateEquationError(DomainError):
    """Equation of lower degree than the solver handles (e.g. quadratic with A=0)."""


class ConsistencyError(RuntimeError):
    """An internal cross-check that should be impossible to fail has failed."""


# interval width below which isolated roots are refined by default
DEFAULT_ROOT_WIDTH = Fraction(1, 10**30)


def integer_sqrt_exact(n: int) -> Union[int, None]:
    """Exact integer square root: r with r*r == n, or None if n is not a square."""
    if n < 0:
        raise DomainError("integer_sqrt_exact: negative argument %r" % (n,))
    r = isqrt(n)
    return r if r * r == n else None


def rational_sqrt_exact(x: Fraction) -> Union[Fraction, None]:
    """Exact rational square root of x >= 0, or None if irrational."""
    x = Fraction(x)
    if x < 0:
        return None
    rn = integer_sqrt_exact(x.numerator)
    if rn is None:
        return None
    rd = integer_sqrt_exact(x.denominator)
    if rd is None:
        return None
    return Fraction(rn, rd)


class Polynomial:
    """Dense univariate polynomial over Fraction.

    coeffs[i] is the coefficient of z^i; trailing zeros are stripped, so the
    zero polynomial has coeffs == () and degree -1.  Instances are immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if self.is_zero():
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero() or other.is_zero():
                return Polynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        return Polynomial(c * Fraction(other) for c in self.coeffs)

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.leading()
        if len(rem) <= d:
            return Polynomial(), Polynomial(rem)
        quo = [Fraction(0)] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            q = rem[i] / lead
            quo[i - d] = q
            if q:
                for j in range(d + 1):
                    rem[i - d + j] -= q * other.coeffs[j]
        return Polynomial(quo), Polynomial(rem[:d])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def antiderivative(self) -> "Polynomial":
        # constant of integration 0
        return Polynomial([Fraction(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def scale_arg(self, s) -> "Polynomial":
        """p(s*z) as a polynomial in z."""
        s = Fraction(s)
        return Polynomial(c * s**i for i, c in enumerate(self.coeffs))

    def primitive(self) -> "Polynomial":
        """Integer-coefficient, content-free, positive-leading normal form."""
        if self.is_zero():
            return self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        if ints[-1] < 0:
            g = -g
        return Polynomial(v // g for v in ints)

    def __repr__(self):
        if self.is_zero():
            return "Polynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append("%s*z^%d" % (c, i))
        return "Polynomial(%s)" % " + ".join(terms)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd via the Euclidean algorithm (exact over Fraction)."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return (Fraction(1) / a.leading()) * a


def square_free_part(p: Polynomial) -> Polynomial:
    if p.degree < 1:
        return p
    return p // poly_gcd(p, p.derivative())


def integrate_sym(p: Polynomial) -> Fraction:
    """Exact integral of p over [-1, 1]: odd powers vanish, z^(2j) gives 2/(2j+1)."""
    total = Fraction(0)
    for i, c in enumerate(p.coeffs):
        if i % 2 == 0:
            total += 2 * c / (i + 1)
    return total


def sturm_chain(p: Polynomial) -> list:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign_variations(chain, x) -> int:
    signs = []
    for q in chain:
        v = q(x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_halfopen(p: Polynomial, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in (lo, hi]; requires p(lo), p(hi) != 0
    after square-free reduction (callers deflate endpoint roots first)."""
    sf = square_free_part(p)
    chain = sturm_chain(sf)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def _deflate_root(p: Polynomial, r: Fraction) -> Polynomial:
    q, rem = divmod(p, Polynomial((-r, 1)))
    if not rem.is_zero():
        raise ConsistencyError("deflation by non-root %s" % (r,))
    return q


def count_roots_open(p: Polynomial, lo, hi) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi)."""
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise DomainError("empty interval (%s, %s)" % (lo, hi))
    if p.is_zero():
        raise DomainError("zero polynomial vanishes identically")
    while p(lo) == 0:
        p = _deflate_root(p, lo)
    while p(hi) == 0:
        p = _deflate_root(p, hi)
    if p.degree < 1:
        return 0
    return count_roots_halfopen(p, lo, hi)


def sturm_positive_on(p: Polynomial, lo, hi) -> bool:
    """True iff p has no root in the open interval (lo, hi) and p((lo+hi)/2) > 0.

    Roots at the endpoints are allowed.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise DomainError("empty interval (%s, %s)" % (lo, hi))
    if p.is_zero():
        return False
    if count_roots_open(p, lo, hi):
        return False
    return p((lo + hi) / 2) > 0


class AlgebraicRoot:
    """A real algebraic number: the unique root of ``poly`` in (lo, hi).

    The polynomial is stored in primitive integer form; the invariant that the
    interval isolates exactly one root (with a sign change) is checked at
    construction.  Refinement methods are pure: they return data, never mutate.
    """

    __slots__ = ("poly", "lo", "hi")

    def __init__(self, poly: Polynomial, lo, hi):
        poly = poly.primitive()
        lo, hi = Fraction(lo), Fraction(hi)
        if not lo < hi:
            raise DomainError("empty isolating interval (%s, %s)" % (lo, hi))
        if poly(lo) * poly(hi) >= 0:
            raise DomainError("no sign change of %r on (%s, %s)" % (poly, lo, hi))
        if count_roots_open(poly, lo, hi) != 1:
            raise DomainError("interval (%s, %s) does not isolate one root" % (lo, hi))
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraicRoot is immutable")

    def refined(self, width) -> "AlgebraicRoot":
        lo, hi = self.refined_interval(width)
        return AlgebraicRoot(self.poly, lo, hi)

    def refined_interval(self, width):
        """Bisect until hi - lo < width; returns (lo, hi) without mutating."""
        width = Fraction(width)
        if width <= 0:
            raise DomainError("refinement width must be positive")
        lo, hi = self.lo, self.hi
        flo = self.poly(lo)
        while hi - lo >= width:
            mid = (lo + hi) / 2
            fmid = self.poly(mid)
            if fmid == 0:
                # rational root: collapse to a tiny bracketing interval
                eps = width / 4
                return mid - eps, mid + eps
            if (flo > 0) != (fmid > 0):
                hi = mid
            else:
                lo, flo = mid, fmid
        return lo, hi

    def decimal_bounds(self, digits: int = 40):
        """Certified decimal enclosure (lo_str, hi_str) with ``digits`` fractional
        digits: lo_str rounded down, hi_str rounded up."""
        if digits < 1:
            raise DomainError("digits must be >= 1")
        lo, hi = self.refined_interval(Fraction(1, 10 ** (digits + 1)))
        return (fraction_to_decimal(lo, digits, "floor"),
                fraction_to_decimal(hi, digits, "ceil"))

    def __float__(self):
        lo, hi = self.refined_interval(Fraction(1, 10**20))
        return float((lo + hi) / 2)

    def _cmp_fraction(self, x: Fraction) -> int:
        if self.poly(x) == 0:
            # x is a rational root of poly; the isolated root is x iff inside
            if self.lo < x < self.hi:
                return 0
        lo, hi = self.lo, self.hi
        flo = self.poly(lo)
        while lo < x < hi:
            mid = (lo + hi) / 2
            fmid = self.poly(mid)
            if fmid == 0:
                return -1 if x > mid else 1
            if (flo > 0) != (fmid > 0):
                hi = mid
            else:
                lo, flo = mid, fmid
        return -1 if hi <= x else 1

    def __lt__(self, other):
        if isinstance(other, AlgebraicRoot):
            a, b = self, other
            while True:
                if a.hi <= b.lo:
                    return True
                if b.hi <= a.lo:
                    return False
                a = a.refined((a.hi - a.lo) / 4)
                b = b.refined((b.hi - b.lo) / 4)
        return self._cmp_fraction(Fraction(other)) < 0

    def __gt__(self, other):
        if isinstance(other, AlgebraicRoot):
            return other < self
        return self._cmp_fraction(Fraction(other)) > 0

    def __repr__(self):
        return "AlgebraicRoot(%r, (%s, %s))" % (self.poly, self.lo, self.hi)


def fraction_to_decimal(x: Fraction, digits: int, rounding: str = "floor") -> str:
    """Decimal string of x with ``digits`` fractional digits, rounded toward
    -infinity ("floor") or +infinity ("ceil")."""
    x = Fraction(x)
    scale = 10**digits
    num = x.numerator * scale
    q, r = divmod(num, x.denominator)  # floor division
    if rounding == "ceil" and r:
        q += 1
    elif rounding not in ("floor", "ceil"):
        raise DomainError("rounding must be 'floor' or 'ceil'")
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, frac = divmod(q, scale)
    return "%s%d.%0*d" % (sign, whole, digits, frac)


def _divisors(n: int) -> list:
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return out


def _rational_roots(p: Polynomial):
    """All rational roots (each listed once) and p with them deflated out."""
    roots = []
    # factor out z^k first
    while not p.is_zero() and p.coeffs[0] == 0:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        p = Polynomial(p.coeffs[1:])
    if p.degree < 1:
        return roots, p
    ip = p.primitive()
    a0 = int(ip.coeffs[0])
    an = int(ip.coeffs[-1])
    for num in _divisors(a0):
        for den in _divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if p(cand) == 0:
                    if cand not in roots:
                        roots.append(cand)
                    while p(cand) == 0 and p.degree >= 1:
                        p = _deflate_root(p, cand)
    return roots, p


def _cauchy_bound(p: Polynomial) -> Fraction:
    lead = abs(p.leading())
    m = max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))
    return 1 + m


def _isolate_irrational(p: Polynomial, width) -> list:
    """Isolating intervals for all real roots of p, which must have no rational
    roots; returns AlgebraicRoots refined below ``width``."""
    if p.degree < 1:
        return []
    sf = square_free_part(p)
    m = _cauchy_bound(sf)
    chain = sturm_chain(sf)

    def var(x):
        return _sign_variations(chain, x)

    out = []
    stack = [(-m, m, var(-m), var(m))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        cnt = vlo - vhi
        if cnt == 0:
            continue
        if cnt == 1 and sf(lo) * sf(hi) < 0:
            out.append(AlgebraicRoot(sf, lo, hi).refined(width))
            continue
        mid = (lo + hi) / 2
        if sf(mid) == 0:
            raise ConsistencyError("unexpected rational root %s" % (mid,))
        vm = var(mid)
        stack.append((lo, mid, vlo, vm))
        stack.append((mid, hi, vm, vhi))
    out.sort(key=lambda r: r.lo)
    return out


def real_roots(p: Polynomial, width=DEFAULT_ROOT_WIDTH) -> list:
    """All distinct real roots of p, sorted ascending.

    Rational roots come back as Fractions; irrational ones as AlgebraicRoots
    with isolating intervals narrower than ``width``.
    """
    if p.is_zero():
        raise DomainError("zero polynomial vanishes identically")
    rational, rest = _rational_roots(p)
    irrational = _isolate_irrational(rest, width)
    merged = sorted(rational) + irrational
    merged.sort(key=lambda r: float(r))
    # float sort is a heuristic; verify exactly for adjacent pairs
    for a, b in zip(merged, merged[1:]):
        if isinstance(a, AlgebraicRoot) or isinstance(b, AlgebraicRoot):
            alg, other, flipped = (a, b, False) if isinstance(a, AlgebraicRoot) else (b, a, True)
            if isinstance(other, AlgebraicRoot):
                ok = a < b
            else:
                ok = (alg > other) if flipped else (alg < other)
            if not ok:
                raise ConsistencyError("root ordering failed")
    return merged


def solve_quadratic_rational(qa, qb, qc) -> list:
    """Real roots of qa*t^2 + qb*t + qc = 0, exact.

    Roots are Fractions when the discriminant is a perfect rational square,
    AlgebraicRoots otherwise; empty list when the discriminant is negative.
    """
    qa, qb, qc = Fraction(qa), Fraction(qb), Fraction(qc)
    if qa == 0:
        raise DegenerateEquationError("leading coefficient is zero")
    disc = qb * qb - 4 * qa * qc
    if disc < 0:
        return []
    root = rational_sqrt_exact(disc)
    if root is not None:
        r1 = (-qb - root) / (2 * qa)
        r2 = (-qb + root) / (2 * qa)
        return sorted({r1, r2})
    return real_roots(Polynomial((qc, qb, qa)))


def cubic_real_roots(p: Polynomial) -> list:
    """All distinct real roots of a cubic, exact (rational or isolated)."""
    if p.degree != 3:
        raise DomainError("cubic_real_roots needs degree 3, got %d" % p.degree)
    return real_roots(p)
