"""The integer lattice of stable-framing defects.

A stable framing of a closed oriented 3-manifold sits, within its spin
structure, at an integer point (d, h): the degree d of the normal section
and the Hirzebruch defect h = p1(W, framing) - 3 sigma(W) of any compact
bounding 4-manifold W.  The two generators of the translation group act
by rho: (d, h) -> (d, h + 4) and sigma: (d, h) -> (d - 1, h + 2), so the
framings compatible with one spin structure sweep out an index-4 affine
lattice classified by lambda = 2d + h mod 4.  Canonical framings are the
lattice points minimizing the norm 2|d| + |h|.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Union

from .errors import LambdaMismatch, NonIntegralDefect


class TotalDefect(NamedTuple):
    d: int
    h: int


class FramingOffset(NamedTuple):
    """Translation by m_rho copies of rho and n_sigma copies of sigma."""

    m_rho: int
    n_sigma: int


@dataclass(frozen=True)
class LambdaClass:
    """A residue mod 4; 2 and -2 name the same class."""

    value: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % 4)

    @property
    def representative(self) -> int:
        """The representative in {-1, 0, 1, 2}."""
        return -1 if self.value == 3 else self.value

    def __int__(self) -> int:
        return self.value


LambdaLike = Union[LambdaClass, int]


def _as_lambda(k: LambdaLike) -> LambdaClass:
    return k if isinstance(k, LambdaClass) else LambdaClass(int(k))


def act(p: TotalDefect, off: FramingOffset) -> TotalDefect:
    """Translate a defect by an offset: rho adds (0, 4), sigma adds (-1, 2)."""
    return TotalDefect(p.d - off.n_sigma, p.h + 4 * off.m_rho + 2 * off.n_sigma)


def lambda_class(p: TotalDefect) -> LambdaClass:
    """2d + h mod 4; constant along orbits of the translation action."""
    return LambdaClass(2 * p.d + p.h)


def in_lattice(p: TotalDefect, k: LambdaLike) -> bool:
    return lambda_class(p) == _as_lambda(k)


def defect_norm(p: TotalDefect) -> int:
    """The selection norm 2|d| + |h|."""
    return 2 * abs(p.d) + abs(p.h)


def canonical_set(k: LambdaLike) -> frozenset[TotalDefect]:
    """All minimal-norm points of the lattice with invariant k.

    Found by brute-force search.  Every class contains (0, rep) with
    |rep| <= 2, so minimizers have norm at most 2 and a search window of
    norm <= 4 is more than enough.
    """
    lam = _as_lambda(k)
    candidates = [TotalDefect(d, h)
                  for d in range(-2, 3) for h in range(-4, 5)
                  if 2 * abs(d) + abs(h) <= 4 and (2 * d + h) % 4 == lam.value]
    best = min(defect_norm(p) for p in candidates)
    return frozenset(p for p in candidates if defect_norm(p) == best)


def canonical_offset(p: TotalDefect, target_lambda: int) -> FramingOffset:
    """The offset carrying p to the canonical point (0, target_lambda).

    target_lambda must be a representative with |target_lambda| <= 2 lying
    in the same class as p, otherwise LambdaMismatch is raised.
    """
    key = 2 * p.d + p.h
    if abs(target_lambda) > 2 or (key - target_lambda) % 4:
        raise LambdaMismatch(
            f"target {target_lambda} is not a small representative of the class of {tuple(p)}")
    return FramingOffset(m_rho=-(key - target_lambda) // 4, n_sigma=p.d)


def reverse_orientation(p: TotalDefect) -> TotalDefect:
    """Orientation reversal conjugates (d, h) to (d, -h)."""
    return TotalDefect(p.d, -p.h)


def boundary_defect(euler_char: int, signature: int) -> TotalDefect:
    """Defect of the restriction to the boundary of a framing of a
    4-manifold with the given Euler characteristic and signature."""
    return TotalDefect(euler_char, -3 * signature)


def pullback_cover(p: TotalDefect, r: int, sigma_pi: Fraction | int = 0) -> TotalDefect:
    """Defect of the pulled-back framing on an r-fold cover.

    The degree multiplies; the defect picks up three times the signature
    defect of the covering.  sigma_pi may be a rational; the corrected
    defect must come out an integer or the inputs are inconsistent.
    """
    if r < 1:
        raise ValueError("cover degree must be at least 1")
    corrected = r * Fraction(p.h) + 3 * Fraction(sigma_pi)
    if corrected.denominator != 1:
        raise NonIntegralDefect(
            f"{r}*{p.h} + 3*({sigma_pi}) = {corrected} is not an integer")
    return TotalDefect(r * p.d, int(corrected))


def glue(parts: Iterable[tuple[int, int]], chi_region: int) -> tuple[int, int]:
    """Combine (degree, p1) data of framed 4-manifold pieces glued along a
    region of Euler characteristic chi_region: degrees add and drop chi,
    relative p1 is additive."""
    parts = list(parts)
    if not parts:
        raise ValueError("gluing needs at least one piece")
    return (sum(d for d, _ in parts) - chi_region, sum(p1 for _, p1 in parts))


def two_framing_sum(h1: int, h2: int) -> int:
    """Defect of a Whitney sum of framings: relative p1 is additive."""
    return h1 + h2


def canonical_two_framing_offset(h_phi: int) -> int:
    """Multiples of sigma turning the doubled framing into the defect-0
    2-framing: doubling gives defect 2 h, each sigma adds 2."""
    return -h_phi


def splits_as_double(k: LambdaLike) -> bool:
    """Whether the canonical 2-framing is a double 2*phi of a single honest
    framing canonical in a spin structure of the given class."""
    return _as_lambda(k).value == 0


def splits_as_sum(s_m: int) -> bool:
    """Whether the canonical 2-framing splits as a Whitney sum of two
    framings; decided by the parity of the number s of 2-primary summands
    in first homology."""
    if s_m < 0:
        raise ValueError("s must be nonnegative")
    return s_m % 2 == 0


def lens_double_splits(n: int) -> bool:
    """Double-splitting criterion for the lens space L(n, 1).

    Equivalent to some spin structure having lambda = 0.  The unique spin
    structure for odd n has lambda = 3 - n mod 4, vanishing exactly when
    |n| = 3 mod 4; the two spin structures for even n have odd lambda.
    n = 0 is the product of a 2-sphere with a circle, which splits.
    """
    if n == 0:
        return True
    return abs(n) % 4 == 3
