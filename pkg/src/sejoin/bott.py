"""Stage-3 Bott orbifold combinatorics and cohomology.

A stage-3 Bott manifold is encoded by three integers (a, b, c), the
below-diagonal entries of a lower-triangular unipotent matrix; the orbifold
structure adds a 6-vector m of ramification values, ordered
(m1_0, m1_inf, m2_0, m2_inf, m3_0, m3_inf).  Degree-2 classes can be written
in four distinguished bases built from the divisor classes x_i and
y_1 = x_1, y_2 = a*x_1 + x_2, y_3 = b*x_1 + c*x_2 + x_3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .kernel import ConsistencyError, DomainError

# basis tags: position i is "x" or "y" for the i-th basis element;
# "xyx" means {x1, y2, x3}
BASES = ("xxx", "xxy", "xyx", "xyy")


@dataclass(frozen=True)
class BottOrbifold:
    """Bott manifold matrix entries plus ramification vector.

    Ramification values are positive; non-integer rationals are allowed and
    describe cone singularities along the invariant divisors.
    """

    a: int
    b: int
    c: int
    m: Tuple[Fraction, Fraction, Fraction, Fraction, Fraction, Fraction]

    def __init__(self, a: int, b: int, c: int, m: Sequence):
        for name, val in (("a", a), ("b", b), ("c", c)):
            if not isinstance(val, int):
                raise DomainError("%s must be an integer, got %r" % (name, val))
        mv = tuple(Fraction(x) for x in m)
        if len(mv) != 6:
            raise DomainError("m must have six entries, got %d" % len(mv))
        if any(x <= 0 for x in mv):
            raise DomainError("ramification values must be positive")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "m", mv)

    @property
    def abc(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class CohClass:
    """A degree-2 class: three rational coefficients in one of the four
    distinguished bases, tagged with the ambient (a, b, c)."""

    basis: str
    coeffs: Tuple[Fraction, Fraction, Fraction]
    abc: Tuple[int, int, int]

    def __post_init__(self):
        if self.basis not in BASES:
            raise DomainError("unknown basis %r" % (self.basis,))
        object.__setattr__(self, "coeffs", tuple(Fraction(x) for x in self.coeffs))
        if len(self.coeffs) != 3:
            raise DomainError("need exactly three coefficients")


def fan(a: int, b: int, c: int):
    """Primitive collections {v_i, u_i} of the fan: v_i the standard basis,
    u1 = -v1 - a*v2 - b*v3, u2 = -v2 - c*v3, u3 = -v3."""
    return (
        ((1, 0, 0), (-1, -a, -b)),
        ((0, 1, 0), (0, -1, -c)),
        ((0, 0, 1), (0, 0, -1)),
    )


def c1_orb(orb: BottOrbifold, basis: str = "xxx") -> CohClass:
    """Orbifold first Chern class in the requested distinguished basis.

    The third coefficient is 1/m3_0 + 1/m3_inf in every basis.
    """
    a, b, c = orb.a, orb.b, orb.c
    m1_0, m1_inf, m2_0, m2_inf, m3_0, m3_inf = orb.m
    s1 = 1 / m1_0 + 1 / m1_inf
    s2 = 1 / m2_0 + 1 / m2_inf
    s3 = 1 / m3_0 + 1 / m3_inf
    if basis == "xxx":
        coeffs = (s1 + a / m2_0 + b / m3_0, s2 + c / m3_0, s3)
    elif basis == "xxy":
        coeffs = (s1 + a / m2_0 - b / m3_inf, s2 - c / m3_inf, s3)
    elif basis == "xyx":
        coeffs = (s1 - a / m2_inf + (b - a * c) / m3_0, s2 + c / m3_0, s3)
    elif basis == "xyy":
        coeffs = (s1 - a / m2_inf - (b - a * c) / m3_inf, s2 - c / m3_inf, s3)
    else:
        raise DomainError("unknown basis %r" % (basis,))
    return CohClass(basis=basis, coeffs=coeffs, abc=orb.abc)


def c1_orb_general(matrix: Sequence[Sequence[int]], m_pairs: Sequence[Tuple]) -> List[Fraction]:
    """Orbifold first Chern class coefficients in the x-basis for a stage-n
    tower given by a lower-triangular unipotent matrix and n ramification
    pairs (m_i^0, m_i^inf):

        coeff_j = 1/m_j^0 + 1/m_j^inf + sum_{i>j} matrix[i][j] / m_i^0
    """
    n = len(matrix)
    if len(m_pairs) != n:
        raise DomainError("need one ramification pair per stage")
    for i in range(n):
        if len(matrix[i]) != n or matrix[i][i] != 1:
            raise DomainError("matrix must be square unipotent")
        if any(matrix[i][j] != 0 for j in range(i + 1, n)):
            raise DomainError("matrix must be lower triangular")
    out = []
    for j in range(n):
        m0, minf = (Fraction(x) for x in m_pairs[j])
        if m0 <= 0 or minf <= 0:
            raise DomainError("ramification values must be positive")
        coeff = 1 / m0 + 1 / minf
        for i in range(j + 1, n):
            coeff += Fraction(matrix[i][j], 1) / Fraction(m_pairs[i][0])
        out.append(coeff)
    return out


def _to_x(cls: CohClass) -> Tuple[Fraction, Fraction, Fraction]:
    a, b, c = cls.abc
    alpha, beta, gamma = cls.coeffs
    if cls.basis == "xxx":
        return (alpha, beta, gamma)
    if cls.basis == "xxy":
        return (alpha + gamma * b, beta + gamma * c, gamma)
    if cls.basis == "xyx":
        return (alpha + beta * a, beta, gamma)
    return (alpha + beta * a + gamma * b, beta + gamma * c, gamma)


def _from_x(xc, target: str, abc) -> Tuple[Fraction, Fraction, Fraction]:
    a, b, c = abc
    big_a, big_b, big_c = xc
    if target == "xxx":
        return (big_a, big_b, big_c)
    if target == "xxy":
        return (big_a - big_c * b, big_b - big_c * c, big_c)
    if target == "xyx":
        return (big_a - a * big_b, big_b, big_c)
    beta = big_b - big_c * c
    return (big_a - a * beta - b * big_c, beta, big_c)


def basis_change(cls: CohClass, target: str) -> CohClass:
    """Rewrite a class in another distinguished basis (exact)."""
    if target not in BASES:
        raise DomainError("unknown basis %r" % (target,))
    x_coeffs = _to_x(cls)
    out = CohClass(basis=target, coeffs=_from_x(x_coeffs, target, cls.abc), abc=cls.abc)
    if _to_x(out) != x_coeffs:
        raise ConsistencyError("basis change is not invertible")
    return out


def is_log_fano(orb: BottOrbifold) -> bool:
    """True iff the orbifold first Chern class has strictly positive
    coefficients in all four distinguished bases (equivalently, it lies in
    the Kaehler cone)."""
    return all(
        coeff > 0 for basis in BASES for coeff in c1_orb(orb, basis).coeffs
    )


# ------------------------------------------------------------ cohomology ring


class RingElement:
    """Element of the degree-truncated cohomology ring
    Q[x1,x2,x3] / (x1^2, x2(a*x1 + x2), x3(b*x1 + c*x2 + x3)),
    supported on the eight square-free monomials."""

    __slots__ = ("abc", "coeffs")

    def __init__(self, abc: Tuple[int, int, int], coeffs: Dict[Tuple[int, int, int], Fraction] = None):
        self.abc = tuple(abc)
        self.coeffs = {}
        if coeffs:
            for mono, coeff in coeffs.items():
                coeff = Fraction(coeff)
                if coeff:
                    self._accumulate(mono, coeff)

    def _accumulate(self, mono, coeff):
        for reduced, factor in _reduce_monomial(mono, self.abc):
            key = reduced
            new = self.coeffs.get(key, Fraction(0)) + coeff * factor
            if new:
                self.coeffs[key] = new
            elif key in self.coeffs:
                del self.coeffs[key]

    @classmethod
    def generator(cls, abc, i: int) -> "RingElement":
        if i not in (1, 2, 3):
            raise DomainError("generator index must be 1, 2 or 3")
        mono = tuple(1 if j == i - 1 else 0 for j in range(3))
        return cls(abc, {mono: Fraction(1)})

    @classmethod
    def from_class(cls, c: CohClass) -> "RingElement":
        xc = _to_x(c)
        return cls(
            c.abc,
            {
                (1, 0, 0): xc[0],
                (0, 1, 0): xc[1],
                (0, 0, 1): xc[2],
            },
        )

    def __add__(self, other: "RingElement") -> "RingElement":
        if self.abc != other.abc:
            raise DomainError("mixed ambient spaces")
        out = RingElement(self.abc, dict(self.coeffs))
        for mono, coeff in other.coeffs.items():
            out._accumulate(mono, coeff)
        return out

    def __mul__(self, other):
        if isinstance(other, RingElement):
            if self.abc != other.abc:
                raise DomainError("mixed ambient spaces")
            out = RingElement(self.abc)
            for m1, c1 in self.coeffs.items():
                for m2, c2 in other.coeffs.items():
                    prod = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                    out._accumulate(prod, c1 * c2)
            return out
        out = RingElement(self.abc)
        for mono, coeff in self.coeffs.items():
            out._accumulate(mono, coeff * Fraction(other))
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, RingElement)
            and self.abc == other.abc
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.abc, frozenset(self.coeffs.items())))

    def coefficient(self, mono: Tuple[int, int, int]) -> Fraction:
        return self.coeffs.get(tuple(mono), Fraction(0))

    def top_coefficient(self) -> Fraction:
        """Coefficient of the volume monomial x1*x2*x3."""
        return self.coefficient((1, 1, 1))

    def __repr__(self):
        if not self.coeffs:
            return "RingElement(0)"
        names = ("x1", "x2", "x3")
        parts = []
        for mono in sorted(self.coeffs, key=lambda t: (sum(t), t)):
            label = "*".join(n for n, e in zip(names, mono) if e) or "1"
            parts.append("%s*%s" % (self.coeffs[mono], label))
        return "RingElement(%s)" % " + ".join(parts)


def _reduce_monomial(mono, abc):
    """Rewrite a monomial with exponents as a combination of square-free
    monomials using x1^2 = 0, x2^2 = -a*x1*x2, x3^2 = -b*x1*x3 - c*x2*x3;
    anything above total degree 3 dies."""
    a, b, c = abc
    e1, e2, e3 = mono
    if e1 + e2 + e3 > 3:
        return []
    if e1 >= 2:
        return []
    if e2 >= 2:
        out = []
        for reduced, factor in _reduce_monomial((e1 + 1, e2 - 1, e3), abc):
            out.append((reduced, factor * -a))
        return out
    if e3 >= 2:
        out = []
        for reduced, factor in _reduce_monomial((e1 + 1, e2, e3 - 1), abc):
            out.append((reduced, factor * -b))
        for reduced, factor in _reduce_monomial((e1, e2 + 1, e3 - 1), abc):
            out.append((reduced, factor * -c))
        return out
    return [((e1, e2, e3), Fraction(1))]


def ring_multiply(e1: RingElement, e2: RingElement) -> RingElement:
    return e1 * e2


# ------------------------------------------------------------------ H3 matrix


def _integer_rank(rows: List[List[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        pivot_row = next((r for r in range(row, nrows) if mat[r][col] != 0), None)
        if pivot_row is None:
            continue
        mat[row], mat[pivot_row] = mat[pivot_row], mat[row]
        for r in range(row + 1, nrows):
            for ccol in range(col + 1, ncols):
                num = mat[r][ccol] * mat[row][col] - mat[row][ccol] * mat[r][col]
                if num % prev != 0:
                    raise ConsistencyError("Bareiss divisibility failed")
                mat[r][ccol] = num // prev
            mat[r][col] = 0
        prev = mat[row][col]
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


def h3_matrix(orb: BottOrbifold, kahler_coeffs: Sequence) -> Tuple[List[List[Fraction]], int]:
    """The 3x3 obstruction matrix whose full rank forces the middle
    cohomology of the total space to vanish, plus its exact rank.

    ``kahler_coeffs`` = (c1, c2, c3) are the x-basis coefficients of the
    polarizing class; all must be positive.
    """
    c1, c2, c3 = (Fraction(x) for x in kahler_coeffs)
    if c1 <= 0 or c2 <= 0 or c3 <= 0:
        raise DomainError("class coefficients must be positive")
    a, b, c = orb.abc
    mat = [
        [c2, c1 - c2 * a, Fraction(0)],
        [c3, Fraction(0), c1 - c3 * b],
        [Fraction(0), c3, c2 - c3 * c],
    ]
    int_rows = []
    for mrow in mat:
        den = 1
        for x in mrow:
            den = den * x.denominator // _gcd(den, x.denominator)
        int_rows.append([int(x * den) for x in mrow])
    return mat, _integer_rank(int_rows)


def _gcd(x: int, y: int) -> int:
    while y:
        x, y = y, x % y
    return x


# --------------------------------------------------------------- monoid action


def monoid_act(orb: BottOrbifold, lam: Sequence[int], shift: Sequence[int]) -> BottOrbifold:
    """Affine rescaling of the ramification vector, slot by slot:
    m_j -> lam_j * m_j + shift_j with integer lam_j >= 1, shift_j >= 0."""
    lam = tuple(lam)
    shift = tuple(shift)
    if len(lam) != 6 or len(shift) != 6:
        raise DomainError("lam and shift must have six entries")
    for x in lam:
        if not isinstance(x, int) or x < 1:
            raise DomainError("lam entries must be integers >= 1")
    for x in shift:
        if not isinstance(x, int) or x < 0:
            raise DomainError("shift entries must be integers >= 0")
    new_m = tuple(l * mj + sh for l, mj, sh in zip(lam, orb.m, shift))
    return BottOrbifold(orb.a, orb.b, orb.c, new_m)
