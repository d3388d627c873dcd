"""Framed-link surgery calculus.

A framed link is recorded by its symmetric linking matrix Q: framings on
the diagonal, pairwise linking numbers off it.  Surgery on the link
produces a closed oriented 3-manifold bounding the 2-handlebody whose
intersection form is Q, and everything computed here (homology of the
result, characteristic sublinks, mu and lambda invariants, the defects of
the framings the handlebody hands down to its boundary) is a function of
that matrix alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .defects import LambdaClass, TotalDefect
from .errors import NotCharacteristic, NotSymmetric, OddFraming
from .exactmath import IntMatrix, exact_signature, smith_normal_form, solve_gf2


@dataclass(frozen=True)
class FramedLink:
    """A framed link, known only through its linking matrix."""

    matrix: IntMatrix

    def __post_init__(self) -> None:
        if not self.matrix.is_symmetric():
            raise NotSymmetric("a linking matrix must be square and symmetric")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "FramedLink":
        return cls(IntMatrix.from_rows(rows))

    @property
    def components(self) -> int:
        return self.matrix.rows

    @property
    def is_even(self) -> bool:
        """True when every framing (diagonal entry) is even."""
        return all(x % 2 == 0 for x in self.matrix.diagonal())


def empty_link() -> FramedLink:
    """The empty link; surgery on it is the 3-sphere."""
    return FramedLink(IntMatrix(()))


def unknot(framing: int) -> FramedLink:
    return FramedLink.from_rows([[framing]])


def chain_link(components: int, framing: int = 2) -> FramedLink:
    """A simple chain of unknots, consecutive components linking once.

    With the default +2 framings, a chain of m-1 components presents the
    lens space L(m, 1).
    """
    rows = [[0] * components for _ in range(components)]
    for i in range(components):
        rows[i][i] = framing
        if i + 1 < components:
            rows[i][i + 1] = rows[i + 1][i] = 1
    return FramedLink.from_rows(rows)


# Plumbing tree on eight vertices: a 7-chain with one extra vertex hung on
# the fifth, all framings +2.  Its form is positive definite of determinant
# one; surgery gives the Poincare homology sphere.
_E8_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7))


def e8_link() -> FramedLink:
    rows = [[0] * 8 for _ in range(8)]
    for i in range(8):
        rows[i][i] = 2
    for i, j in _E8_EDGES:
        rows[i][j] = rows[j][i] = 1
    return FramedLink.from_rows(rows)


@dataclass(frozen=True)
class Sublink:
    """A sublink C, its total self-intersection C.C and its Arf invariant.

    Arf is a knot-theoretic invariant of the embedded sublink that the
    linking matrix does not determine; it is caller-supplied data and
    arf_assumed records whether the default 0 was silently used.
    """

    members: frozenset[int]
    self_intersection: int
    arf: int
    arf_assumed: bool
    bitmask: str

    def __post_init__(self) -> None:
        if self.arf not in (0, 1):
            raise ValueError("arf must be 0 or 1")


def sublink_of(link: FramedLink, members: Sequence[int] | frozenset[int],
               arf: int = 0, arf_assumed: bool = False) -> Sublink:
    """Build a Sublink of the given link, computing C.C and the bitmask."""
    chosen = frozenset(members)
    n = link.components
    if any(i < 0 or i >= n for i in chosen):
        raise ValueError("sublink member out of range")
    q = link.matrix
    cc = sum(q[i, j] for i in chosen for j in chosen)
    bits = "".join("1" if i in chosen else "0" for i in range(n))
    return Sublink(chosen, cc, arf, arf_assumed, bits)


@dataclass(frozen=True)
class HomologyProfile:
    """First homology of the surgered manifold: Betti number, torsion
    coefficients, and the mod-2 ranks r of H1 and s of its torsion part."""

    betti1: int
    torsion: tuple[int, ...]
    r: int
    s: int


@dataclass(frozen=True)
class SpinStructureData:
    """A spin structure of the surgered manifold, indexed by its
    characteristic sublink, with its mu (mod 16) and lambda (mod 4)."""

    sublink: Sublink
    mu: int
    lam: LambdaClass


def basic_invariants(link: FramedLink) -> tuple[int, int, int]:
    """(chi, sigma, tau) of the 2-handlebody: Euler characteristic
    1 + #components, exact signature, and trace of the linking matrix."""
    q = link.matrix
    return (link.components + 1, exact_signature(q), q.trace())


def homology(link: FramedLink) -> HomologyProfile:
    """H1 of the surgered manifold, presented by the linking matrix."""
    form = smith_normal_form(link.matrix)
    betti1 = form.kernel_rank
    torsion = tuple(f for f in form.invariant_factors if f > 1)
    s = sum(1 for f in torsion if f % 2 == 0)
    return HomologyProfile(betti1=betti1, torsion=torsion, r=betti1 + s, s=s)


def characteristic_sublinks(link: FramedLink,
                            arf_table: Mapping[str, int] | None = None) -> list[Sublink]:
    """All sublinks C with lk(C, K_i) = Q_ii mod 2 for every component i.

    These index the spin structures of the surgered manifold; there are
    exactly 2**r of them.  Results are sorted by ascending bitmask.  Arf
    invariants are looked up in arf_table by bitmask, defaulting to 0 with
    arf_assumed set.
    """
    q = link.matrix
    solution = solve_gf2(q, list(q.diagonal()))
    out = []
    for x in solution.solutions():
        members = frozenset(i for i, bit in enumerate(x) if bit)
        bits = "".join(str(bit) for bit in x)
        if arf_table is not None and bits in arf_table:
            arf, assumed = arf_table[bits], False
        else:
            arf, assumed = 0, True
        cc = sum(q[i, j] for i in members for j in members)
        out.append(Sublink(members, cc, arf, assumed, bits))
    out.sort(key=lambda c: c.bitmask)
    return out


def mu_invariant(link: FramedLink, c: Sublink) -> int:
    """mu of the spin structure named by the characteristic sublink c:
    sigma - C.C + 8 Arf(C), as a residue mod 16."""
    q = link.matrix
    n = link.components
    bits = [1 if i in c.members else 0 for i in range(n)]
    for i in range(n):
        if (sum(q[i, j] * bits[j] for j in range(n)) - q[i, i]) % 2:
            raise NotCharacteristic(f"sublink {sorted(c.members)} is not characteristic")
    return (exact_signature(q) - c.self_intersection + 8 * c.arf) % 16


def lambda_from_mu(r: int, mu: int) -> LambdaClass:
    """lambda = 2(1 + r) + mu mod 4, for r the mod-2 rank of H1."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return LambdaClass(2 * (1 + r) + mu)


def mu_representative(mu: int) -> int:
    """Normalize a mod-16 class to its representative in {-7, ..., 8}."""
    return ((mu + 7) % 16) - 7


def spin_structures(link: FramedLink,
                    arf_table: Mapping[str, int] | None = None) -> list[SpinStructureData]:
    """Every spin structure of the surgered manifold with its invariants."""
    r = homology(link).r
    out = []
    for c in characteristic_sublinks(link, arf_table):
        mu = mu_invariant(link, c)
        out.append(SpinStructureData(sublink=c, mu=mu, lam=lambda_from_mu(r, mu)))
    return out


@dataclass(frozen=True)
class NaturalFramings:
    """Defects of the framings a surgery presentation carries naturally.

    All fields except freed_gompf_h assume even framings on every
    component (the handlebody is then parallelizable); accessing them on
    an odd link raises OddFraming.  The parameter n counts the sigma
    twists inserted on the 0-handle before gluing.
    """

    chi: int
    sigma: int
    tau: int
    n: int
    even: bool

    def _require_even(self) -> None:
        if not self.even:
            raise OddFraming("this framing needs even framings on every component")

    @property
    def delta(self) -> TotalDefect:
        """Restriction of the unique framing of the 2-handlebody."""
        self._require_even()
        return TotalDefect(self.chi, -3 * self.sigma)

    @property
    def epsilon_h(self) -> int:
        """Defect of the honest framing delta + chi sigma."""
        self._require_even()
        return 2 * self.chi - 3 * self.sigma

    @property
    def phi_n(self) -> TotalDefect:
        """Stable framing built from n sigma twists on the 0-handle."""
        self._require_even()
        return TotalDefect(self.chi - self.n, 2 * self.n - 3 * self.sigma)

    @property
    def honest_plus_h(self) -> int:
        """Honest framing glued from the right Lie framing plus n rho twists."""
        self._require_even()
        return 4 * self.n + 2 * self.chi - 3 * self.sigma

    @property
    def honest_minus_h(self) -> int:
        """Honest framing glued from the left Lie framing plus n rho twists."""
        self._require_even()
        return 4 * self.n - 2 * self.chi - 3 * self.sigma

    @property
    def phi_half_tau(self) -> TotalDefect | None:
        """The n = tau/2 stable framing, with defect (chi - tau/2, tau - 3 sigma);
        absent when tau is odd (impossible for even links)."""
        self._require_even()
        if self.tau % 2:
            return None
        half = self.tau // 2
        return TotalDefect(self.chi - half, 2 * half - 3 * self.sigma)

    @property
    def freed_gompf_h(self) -> int:
        """Defect of the surgery 2-framing, 2 tau - 6 sigma; defined for
        any framings."""
        return 2 * self.tau - 6 * self.sigma


def natural_framings(link: FramedLink, n: int = 0) -> NaturalFramings:
    chi, sigma, tau = basic_invariants(link)
    return NaturalFramings(chi=chi, sigma=sigma, tau=tau, n=n, even=link.is_even)


def reverse_link_orientation(link: FramedLink) -> FramedLink:
    """The presentation of the oppositely oriented manifold: negate Q.
    The signature negates; component count and chi are unchanged."""
    return FramedLink(-link.matrix)
