"""Quotients of the 3-sphere by its finite subgroups.

The five families of finite subgroups of the unit quaternions -- cyclic,
binary dihedral, binary tetrahedral, octahedral and icosahedral -- act
freely on the 3-sphere, and the right-handed Lie framing descends to each
quotient.  Its Hirzebruch defect is (2 - sigma(G)) / |G|, where sigma(G)
is three times the signature defect of the universal covering.  sigma(G)
is available both in closed form and by brute-force evaluation of the
fixed-point cotangent sums, which serves as a numerical oracle.

Angles are carried as exact rational multiples of pi; trigonometry enters
only in the final floating-point evaluation.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .defects import FramingOffset, TotalDefect, act
from .errors import DegenerateAngle, NonIntegralDefect

_FAMILY_NAMES = {
    "C": "cyclic",
    "D": "binary dihedral",
    "T": "binary tetrahedral",
    "O": "binary octahedral",
    "I": "binary icosahedral",
}

# Decomposition of each binary polyhedral group into maximal cyclic
# subgroups pairwise intersecting in {1, -1}, derived from the rotation
# axes of the underlying solid: (number of subgroups, their order).
#   tetrahedron: 4 face/vertex axes of order 3, 3 edge axes of order 2;
#   octahedron:  3 vertex axes of order 4, 4 face axes of order 3, 6 edge
#                axes of order 2;
#   icosahedron: 6 vertex axes of order 5, 10 face axes of order 3, 15
#                edge axes of order 2;
# doubled in the binary cover.
_POLYHEDRAL_CYCLIC = {
    "T": ((4, 6), (3, 4)),
    "O": ((3, 8), (4, 6), (6, 4)),
    "I": ((15, 4), (10, 6), (6, 10)),
}


@dataclass(frozen=True)
class FiniteSubgroup:
    """A finite subgroup of the unit quaternions, up to conjugacy."""

    family: str
    m: int = 0

    def __post_init__(self) -> None:
        if self.family not in _FAMILY_NAMES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "C" and self.m < 1:
            raise ValueError("cyclic groups need m >= 1")
        if self.family == "D" and self.m < 2:
            raise ValueError("binary dihedral groups need m >= 2")
        if self.family in "TOI" and self.m:
            raise ValueError(f"family {self.family} takes no parameter")

    @property
    def order(self) -> int:
        return {"C": self.m, "D": 4 * self.m, "T": 24, "O": 48, "I": 120}[self.family]

    @property
    def label(self) -> str:
        if self.family in "CD":
            return f"{self.family}{self.m}"
        return self.family

    @property
    def description(self) -> str:
        name = _FAMILY_NAMES[self.family]
        if self.family in "CD":
            return f"{name} of order {self.order}"
        return name


def cyclic(m: int) -> FiniteSubgroup:
    return FiniteSubgroup("C", m)


def binary_dihedral(m: int) -> FiniteSubgroup:
    return FiniteSubgroup("D", m)


TETRAHEDRAL = FiniteSubgroup("T")
OCTAHEDRAL = FiniteSubgroup("O")
ICOSAHEDRAL = FiniteSubgroup("I")


def parse_group(spec: str) -> FiniteSubgroup:
    """Parse a group spec: C<m>, D<m>, T, O or I."""
    match = re.fullmatch(r"([CDTOI])(\d+)?", spec.strip())
    if not match:
        raise ValueError(f"bad group spec {spec!r}; expected C<m>, D<m>, T, O or I")
    family, digits = match.groups()
    if family in "CD":
        if digits is None:
            raise ValueError(f"family {family} needs a parameter, e.g. {family}3")
        return FiniteSubgroup(family, int(digits))
    if digits is not None:
        raise ValueError(f"family {family} takes no parameter")
    return FiniteSubgroup(family)


def sigma_g(group: FiniteSubgroup) -> int:
    """sigma(G) in closed form: three times the signature defect of the
    universal covering of the quotient."""
    m = group.m
    return {"C": m * m - 3 * m + 2,
            "D": 4 * m * m + 2,
            "T": 98, "O": 242, "I": 722}[group.family]


def element_angles(group: FiniteSubgroup) -> list[Fraction]:
    """Rotation angles of every non-identity element, as multiples of pi.

    Left multiplication by a unit quaternion u rotates two orthogonal
    planes through the same angle theta with cos(theta) = Re(u); the
    multiset of those angles is all the cotangent sum needs.

    Cyclic groups are the m-th roots of unity on a great circle.  Binary
    dihedral groups add, to the cyclic group of order 2m, the 2m elements
    obtained by multiplying with a perpendicular imaginary unit; these are
    pure imaginary quaternions, squaring to -1, so each rotates by pi/2.
    The polyhedral groups are enumerated through their decomposition into
    maximal cyclic subgroups meeting pairwise in {1, -1}.
    """
    family, m = group.family, group.m
    if family == "C":
        return [Fraction(2 * k, m) for k in range(1, m)]
    if family == "D":
        angles = [Fraction(k, m) for k in range(1, 2 * m)]
        angles.extend([Fraction(1, 2)] * (2 * m))
        return angles
    angles = [Fraction(1)]  # the central element -1, shared by all subgroups
    for count, order in _POLYHEDRAL_CYCLIC[family]:
        per_subgroup = [Fraction(2 * k, order) for k in range(1, order) if 2 * k != order]
        angles.extend(per_subgroup * count)
    return angles


def _cot(x: float) -> float:
    return math.cos(x) / math.sin(x)


def sigma_g_bruteforce(group: FiniteSubgroup) -> float:
    """sigma(G) evaluated as 3 times the cotangent sum over the group:
    each element u != 1 contributes cot^2 of half its rotation angle."""
    angles = element_angles(group)
    assert len(angles) + 1 == group.order
    return 3.0 * sum(_cot(float(t) * math.pi / 2) ** 2 for t in angles)


def quotient_framing_defect(group: FiniteSubgroup) -> TotalDefect:
    """Total defect of the descended right Lie framing on the quotient:
    degree 0 and h = (2 - sigma(G)) / |G|."""
    h, remainder = divmod(2 - sigma_g(group), group.order)
    if remainder:
        raise NonIntegralDefect(
            f"2 - sigma({group.label}) is not divisible by the group order")
    return TotalDefect(0, h)


def lens_canonical_offset(m: int) -> FramingOffset:
    """The rho multiple carrying the quotient framing of L(m, 1) to a
    canonical framing: floor((m - 1) / 4) copies."""
    if m < 1:
        raise ValueError("lens parameter must be at least 1")
    offset = FramingOffset((m - 1) // 4, 0)
    landed = act(quotient_framing_defect(cyclic(m)), offset)
    assert -1 <= landed.h <= 2, landed
    return offset


def lens_signature_defect(m: int) -> Fraction:
    """Signature defect of the universal covering of L(m, 1), exactly
    (m - 1)(m - 2) / 3."""
    if m < 1:
        raise ValueError("lens parameter must be at least 1")
    return Fraction((m - 1) * (m - 2), 3)


@dataclass(frozen=True)
class FixedPointData:
    """Fixed-point data for one orientation-preserving diffeomorphism of a
    closed 4-manifold: isolated points rotating orthogonal planes through
    (alpha, beta) and fixed surfaces with self-intersection F.F whose
    normal planes rotate through gamma.  Angles are multiples of pi in the
    open interval (0, 2)."""

    isolated_points: tuple[tuple[Fraction, Fraction], ...] = field(default=())
    surfaces: tuple[tuple[int, Fraction], ...] = field(default=())


def fixed_point_data(points: Sequence[tuple[Fraction | int | str, Fraction | int | str]] = (),
                     surfaces: Sequence[tuple[int, Fraction | int | str]] = ()) -> FixedPointData:
    """Convenience constructor coercing angle entries to Fraction."""
    return FixedPointData(
        tuple((Fraction(a), Fraction(b)) for a, b in points),
        tuple((int(ff), Fraction(g)) for ff, g in surfaces))


def _check_angle(t: Fraction) -> None:
    if not 0 < t < 2:
        raise DegenerateAngle(f"angle multiplier {t} outside the open interval (0, 2)")


def g_signature_local(fp: FixedPointData) -> float:
    """The fixed-point formula for the g-signature:
    -sum cot(alpha/2) cot(beta/2) + sum F.F csc^2(gamma/2)."""
    total = 0.0
    for alpha, beta in fp.isolated_points:
        _check_angle(alpha)
        _check_angle(beta)
        total -= _cot(float(alpha) * math.pi / 2) * _cot(float(beta) * math.pi / 2)
    for self_int, gamma in fp.surfaces:
        _check_angle(gamma)
        total += self_int / math.sin(float(gamma) * math.pi / 2) ** 2
    return total
