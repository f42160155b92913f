"""Generalized Calabi ansatz over the quotient orbifold.

The transverse metric is determined by one profile function Theta on [-1, 1]:
g = (1/r3 + z)*n*g_base + dz^2/Theta + Theta*theta^2.  For Einstein metrics
Theta = F(z)/(1 + r3*z)^2 with F a quartic fixed by the endpoint slope
conditions; the two KE identities below are exactly the conditions that make
the endpoints and the Einstein equation close up.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Tuple

from .join import JoinSpec, ReebRay, quotient_orbifold
from .kernel import (
    ConsistencyError,
    DegenerateEquationError,
    DomainError,
    Polynomial,
    integrate_sym,
    sturm_positive_on,
)


class ProfileInvalidError(RuntimeError):
    """A constructed profile violated positivity or a boundary condition."""


def r3_from_ray(w1: int, w2: int, v3_0: int, v3_inf: int) -> Fraction:
    """Polarization constant of the join metric:
    r3 = (w1*v3_inf - w2*v3_0) / (w1*v3_inf + w2*v3_0)."""
    if min(w1, w2, v3_0, v3_inf) < 1:
        raise DomainError("all arguments must be positive integers")
    diff = w1 * v3_inf - w2 * v3_0
    if diff == 0:
        raise DegenerateEquationError("w1*v3_inf = w2*v3_0 gives r3 = 0")
    r3 = Fraction(diff, w1 * v3_inf + w2 * v3_0)
    if not 0 < abs(r3) < 1:
        raise ConsistencyError("r3 = %s out of range" % r3)
    return r3


@dataclass(frozen=True)
class CalabiData:
    """Inputs of the generalized Calabi construction: the Einstein base
    (twist a, ramifications, Fano index), the fiber data m3*(v3_0, v3_inf),
    the bundle twist n, and the polarization constant r3."""

    a: int
    m2_0: int
    m2_inf: int
    fano_index: int
    v3_0: int
    v3_inf: int
    m3: int
    n: int
    r3: Fraction

    def __post_init__(self):
        if min(self.a, self.m2_0, self.m2_inf, self.fano_index,
               self.v3_0, self.v3_inf, self.m3) < 1:
            raise DomainError("base and fiber data must be positive")
        if gcd(self.v3_0, self.v3_inf) != 1:
            raise DomainError("fiber core must be coprime")
        if self.n == 0:
            raise DomainError("twist n must be nonzero")
        if gcd(abs(self.n), self.m3) != 1:
            raise DomainError("need gcd(n, m3) = 1")
        r3 = Fraction(self.r3)
        object.__setattr__(self, "r3", r3)
        if not 0 < abs(r3) < 1:
            raise DomainError("need 0 < |r3| < 1")
        if (r3 > 0) != (self.n > 0):
            raise DomainError("r3 and n must have the same sign")

    @property
    def m3_0(self) -> int:
        return self.m3 * self.v3_0

    @property
    def m3_inf(self) -> int:
        return self.m3 * self.v3_inf

    @classmethod
    def from_join(cls, spec: JoinSpec, ray: ReebRay) -> "CalabiData":
        """Assemble the Calabi data of a quasi-regular join."""
        if not ray.quasi_regular:
            raise DomainError("irregular ray has no Calabi data")
        quotient = quotient_orbifold(spec, ray)
        return cls(
            a=spec.ypq.a,
            m2_0=spec.ypq.m2_0,
            m2_inf=spec.ypq.m2_inf,
            fano_index=spec.ypq.fano_index,
            v3_0=ray.v3_0,
            v3_inf=ray.v3_inf,
            m3=quotient.m3,
            n=quotient.n,
            r3=r3_from_ray(spec.w1, spec.w2, ray.v3_0, ray.v3_inf),
        )


def _slope_polynomial(data: CalabiData) -> Polynomial:
    # R(t) = (1 - t)/m3_inf - (1 + t)/m3_0, the affine function matching the
    # required endpoint slopes of Theta
    p = Fraction(1, data.m3_inf) - Fraction(1, data.m3_0)
    q = Fraction(1, data.m3_inf) + Fraction(1, data.m3_0)
    return Polynomial((p, -q))


def ke_conditions(data: CalabiData) -> Tuple[bool, bool]:
    """The two exact Einstein conditions.

    ke1: 2*r3*I/n = (1 + r3)/m3_inf + (1 - r3)/m3_0.
    ke2: the weighted slope integral over [-1, 1] vanishes; cross-checked
    against the closed form 3P + P*r3^2 = 2*r3*Q with
    P = 1/m3_inf - 1/m3_0, Q = 1/m3_inf + 1/m3_0.
    """
    r3 = data.r3
    ke1 = (
        2 * r3 * data.fano_index / data.n
        == (1 + r3) / Fraction(data.m3_inf) + (1 - r3) / Fraction(data.m3_0)
    )
    weight = Polynomial((1, r3))
    integral = integrate_sym(weight * weight * _slope_polynomial(data))
    p = Fraction(1, data.m3_inf) - Fraction(1, data.m3_0)
    q = Fraction(1, data.m3_inf) + Fraction(1, data.m3_0)
    closed = 3 * p + p * r3 * r3 - 2 * r3 * q
    if (integral == 0) != (closed == 0):
        raise ConsistencyError("KE2 integral and closed form disagree")
    return ke1, integral == 0


@dataclass(frozen=True)
class CalabiProfile:
    """The Einstein profile: Theta(z) = F(z)/(1 + r3*z)^2 with F quartic,
    F(-1) = F(1) = 0 and F > 0 inside."""

    r3: Fraction
    F: Polynomial
    m3_0: int
    m3_inf: int

    def theta(self, z) -> Fraction:
        z = Fraction(z)
        if not -1 <= z <= 1:
            raise DomainError("z must lie in [-1, 1]")
        return self.F(z) / (1 + self.r3 * z) ** 2

    def grid(self, steps: int) -> List[Tuple[Fraction, Fraction]]:
        """(z, Theta(z)) at steps+1 evenly spaced rational points."""
        if steps < 1:
            raise DomainError("need at least one step")
        return [
            (z, self.theta(z))
            for z in (Fraction(-1) + Fraction(2 * i, steps) for i in range(steps + 1))
        ]


def ke_profile(data: CalabiData) -> CalabiProfile:
    """Construct the Einstein profile for verified Calabi data:
    F(z) = integral from -1 to z of (1 + r3*t)^2 * R(t) dt.

    Every boundary condition and interior positivity is re-verified exactly;
    violations raise loudly since they cannot occur for genuine SE data.
    """
    ke1, ke2 = ke_conditions(data)
    if not (ke1 and ke2):
        raise DomainError("ke_conditions must both hold, got (%s, %s)" % (ke1, ke2))
    r3 = data.r3
    weight = Polynomial((1, r3))
    slope = _slope_polynomial(data)
    integrand = weight * weight * slope
    anti = integrand.antiderivative()
    f = anti + Polynomial((-anti(-1),))
    if f(-1) != 0 or f(1) != 0:
        raise ProfileInvalidError("profile endpoints do not vanish")
    if f.derivative() != integrand:
        raise ProfileInvalidError("profile derivative mismatch")
    # F has simple zeros at the endpoints, so Theta' there is F'/(1 + r3*z)^2
    if f.derivative()(-1) != (1 - r3) ** 2 * Fraction(2, data.m3_inf):
        raise ProfileInvalidError("Theta slope at -1 is wrong")
    if f.derivative()(1) != -((1 + r3) ** 2) * Fraction(2, data.m3_0):
        raise ProfileInvalidError("Theta slope at +1 is wrong")
    if not sturm_positive_on(f, -1, 1):
        raise ProfileInvalidError("profile is not positive on (-1, 1)")
    return CalabiProfile(r3=r3, F=f, m3_0=data.m3_0, m3_inf=data.m3_inf)


def metric_components(profile: CalabiProfile, n: int, z) -> Tuple[Fraction, Fraction, Fraction]:
    """Exact metric coefficients at momentum value z in (-1, 1):
    (base scale (1/r3 + z)*n, dz^2 coefficient 1/Theta, theta^2 coefficient
    Theta)."""
    z = Fraction(z)
    if not -1 < z < 1:
        raise DomainError("z must lie strictly inside (-1, 1)")
    theta = profile.theta(z)
    if theta == 0:
        raise ProfileInvalidError("Theta vanishes inside (-1, 1)")
    base = (1 / profile.r3 + z) * n
    if base <= 0:
        raise ProfileInvalidError("base scale must be positive")
    return base, 1 / theta, theta
