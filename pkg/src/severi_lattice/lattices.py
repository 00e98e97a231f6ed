"""Affine sublattices of Z^2: spans, membership, indices, and enumeration.

An affine lattice is a coset ``basepoint + L`` of a full-rank linear
sublattice ``L`` of Z^2.  Every lattice is stored in a single canonical
form, so two equal lattices always have identical representations and can
be used as dict keys or compared with ``==`` directly.

Canonical form: the linear part is the column span of the upper-triangular
basis matrix ``[[d1, e], [0, d2]]`` with ``d1 > 0``, ``d2 > 0`` and
``0 <= e < d1`` (generators are the columns ``(d1, 0)`` and ``(e, d2)``);
the basepoint is the unique coset representative with ``0 <= y < d2`` and
``0 <= x < d1`` after subtracting the ``y`` reduction step.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import DomainError
from .intmat import IntMat, snf

__all__ = [
    "AffineLattice2",
    "Z2",
    "affine_span",
    "lattice_index",
    "rotate90",
    "intermediate_lattices",
    "divisors",
]

Point = tuple[int, int]


def _check_point(p: Sequence[int]) -> Point:
    if len(p) != 2 or type(p[0]) is not int or type(p[1]) is not int:
        raise DomainError(f"expected an integer pair, got {p!r}")
    return (p[0], p[1])


def _canonical_basis(gens: Iterable[Point]) -> tuple[int, int, int]:
    """Reduce a generator list to the canonical triangle ``(d1, e, d2)``.

    Raises DomainError unless the generators span rank two.
    """
    xs: list[int] = []
    w: Point | None = None
    for g in gens:
        gx, gy = g
        while gy:
            if w is None:
                w = (gx, gy)
                break
            wx, wy = w
            q = wy // gy
            wx, wy = wx - q * gx, wy - q * gy
            w = (gx, gy)
            gx, gy = wx, wy
        else:
            if gx:
                xs.append(gx)
    if w is None:
        raise DomainError("generators span rank < 2 (no independent directions)")
    wx, wy = w
    if wy < 0:
        wx, wy = -wx, -wy
    d1 = 0
    for x in xs:
        d1 = gcd(d1, x)
    if d1 == 0:
        raise DomainError("generators span rank < 2 (no independent directions)")
    return (d1, wx % d1, wy)


@dataclass(frozen=True)
class AffineLattice2:
    """Affine sublattice of Z^2 in canonical triangular form."""

    basepoint: Point
    basis: tuple[tuple[int, int], tuple[int, int]]  # rows of [[d1, e], [0, d2]]

    def __post_init__(self) -> None:
        (d1, e), (z, d2) = self.basis
        if z != 0 or d1 <= 0 or d2 <= 0 or not 0 <= e < d1:
            raise DomainError(f"basis {self.basis} is not in canonical form")
        bx, by = self.basepoint
        if not (0 <= by < d2 and 0 <= bx < d1):
            raise DomainError(f"basepoint {self.basepoint} is not reduced")

    @classmethod
    def standard(cls) -> "AffineLattice2":
        return cls((0, 0), ((1, 0), (0, 1)))

    @classmethod
    def from_generators(
        cls, basepoint: Sequence[int], gens: Iterable[Sequence[int]]
    ) -> "AffineLattice2":
        """Lattice ``basepoint + span(gens)``, canonicalized."""
        d1, e, d2 = _canonical_basis(_check_point(g) for g in gens)
        bx, by = _check_point(basepoint)
        k = by // d2
        bx, by = bx - k * e, by - k * d2
        return cls((bx % d1, by), ((d1, e), (0, d2)))

    @classmethod
    def linear_from_generators(cls, gens: Iterable[Sequence[int]]) -> "AffineLattice2":
        return cls.from_generators((0, 0), gens)

    @property
    def d1(self) -> int:
        return self.basis[0][0]

    @property
    def e(self) -> int:
        return self.basis[0][1]

    @property
    def d2(self) -> int:
        return self.basis[1][1]

    @property
    def is_linear(self) -> bool:
        return self.basepoint == (0, 0)

    @property
    def index_in_z2(self) -> int:
        """Index of the linear part in Z^2 (determinant of the basis)."""
        return self.d1 * self.d2

    def generators(self) -> tuple[Point, Point]:
        return ((self.d1, 0), (self.e, self.d2))

    def linear_part(self) -> "AffineLattice2":
        return AffineLattice2((0, 0), self.basis)

    def contains(self, point: Sequence[int]) -> bool:
        """Membership test by solving the triangular system over Z."""
        x, y = _check_point(point)
        dy = y - self.basepoint[1]
        if dy % self.d2:
            return False
        dx = x - self.basepoint[0] - (dy // self.d2) * self.e
        return dx % self.d1 == 0

    def translate(self, basepoint: Sequence[int]) -> "AffineLattice2":
        """Same linear part, coset through ``basepoint``."""
        return AffineLattice2.from_generators(basepoint, self.generators())

    def to_json_dict(self) -> dict:
        return {
            "basepoint": list(self.basepoint),
            "basis": [list(self.basis[0]), list(self.basis[1])],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "AffineLattice2":
        try:
            bp = data["basepoint"]
            basis = data["basis"]
        except (TypeError, KeyError) as exc:
            raise DomainError(f"lattice JSON needs basepoint/basis: {exc}") from exc
        (d1, e), (z, d2) = basis
        if z != 0:
            raise DomainError("lattice basis must be upper triangular")
        return cls.from_generators(bp, [(d1, 0), (e, d2)])

    def __str__(self) -> str:
        return f"{self.basepoint} + <({self.d1},0), ({self.e},{self.d2})>"


Z2 = AffineLattice2.standard()


def affine_span(points: Sequence[Sequence[int]]) -> AffineLattice2:
    """Smallest affine lattice containing all the given points.

    The basepoint is the first point; the linear part is the integer span
    of the differences.  Raises DomainError when the differences do not
    span rank two.
    """
    if not points:
        raise DomainError("affine span of an empty point set")
    pts = [_check_point(p) for p in points]
    p0 = pts[0]
    gens = [(p[0] - p0[0], p[1] - p0[1]) for p in pts[1:]]
    return AffineLattice2.from_generators(p0, gens)


def _require_linear(lat: AffineLattice2, what: str) -> None:
    if not lat.is_linear:
        raise DomainError(f"{what} expects a linear lattice (basepoint 0)")


def lattice_index(sub: AffineLattice2, sup: AffineLattice2) -> int:
    """Index ``[sup : sub]`` of one linear lattice inside another."""
    _require_linear(sub, "lattice_index")
    _require_linear(sup, "lattice_index")
    for g in sub.generators():
        if not sup.contains(g):
            raise DomainError(f"{sub} is not contained in {sup}")
    quot, rem = divmod(sub.index_in_z2, sup.index_in_z2)
    if rem:
        raise DomainError("containment violated (non-integral index)")
    return quot


def rotate90(lat: AffineLattice2) -> AffineLattice2:
    """Image of a linear lattice under the quarter turn (x, y) -> (-y, x)."""
    _require_linear(lat, "rotate90")
    (g1, g2) = lat.generators()
    return AffineLattice2.linear_from_generators(
        [(-g1[1], g1[0]), (-g2[1], g2[0])]
    )


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n`` in ascending order."""
    if n < 1:
        raise DomainError("divisors of a non-positive integer")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def intermediate_lattices(l0: AffineLattice2) -> list[AffineLattice2]:
    """All linear lattices N with ``l0 <= N <= Z^2``, sorted by ``[N : l0]``.

    Requires ``Z^2 / l0`` to be cyclic (first invariant factor 1); then the
    index ``[N : l0]`` is a bijection onto the positive divisors of
    ``[Z^2 : l0]``.  The inclusion is diagonalized by the SNF of the basis:
    in the coordinates where ``l0 = span(e1, idx*e2)``, the lattice of index
    ``d`` over ``l0`` is ``span(e1, (idx/d)*e2)``.
    """
    _require_linear(l0, "intermediate_lattices")
    basis = IntMat.from_rows([list(r) for r in l0.basis])
    res = snf(basis)
    a1, a2 = res.diagonal()
    if a1 != 1:
        raise DomainError(
            f"Z^2 quotient is not cyclic (invariant factors {a1}, {a2})"
        )
    idx = l0.index_in_z2
    q = res.Q
    # Q is unimodular 2x2: invert by adjugate / det
    dq = q.det()
    qa, qb, qc, qd = q.entries
    qinv = ((qd // dq, -qb // dq), (-qc // dq, qa // dq))
    out = []
    for d in divisors(idx):
        m = idx // d
        g1 = (qinv[0][0], qinv[1][0])
        g2 = (m * qinv[0][1], m * qinv[1][1])
        out.append(AffineLattice2.linear_from_generators([g1, g2]))
    return out
