"""Exact triangle calculus on the plane x1 + x2 + x3 = 0.

A point ``v`` of R^3 with positive height ``v1 + v2 + v3`` encodes the closed
equilateral triangle ``tri(v) = {q in H : q <= v}`` (componentwise).  All
predicates below are decided with :class:`fractions.Fraction` arithmetic, so
boundary cases are never misjudged.

Corner ``k`` of ``tri(v)`` is ``v - height(v) * e_k``; the side opposite corner
``k`` lies on the line ``q_k = v_k``.  Barycentric coordinates of ``q`` with
respect to the three corners are ``(v_i - q_i) / height(v)``, which is what
makes the coordinate tests exact and cheap.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "Apex",
    "Corner",
    "DegenerateApexError",
    "RegionId",
    "TailBitingCert",
    "arrow",
    "as_point",
    "contains_closed",
    "contains_open",
    "corner",
    "corners",
    "crossing",
    "height",
    "is_tail_biting",
    "leq",
    "meet",
    "meet_height",
    "precedes",
    "region_memberships",
]


class DegenerateApexError(ValueError):
    """Raised when a predicate needs a proper triangle but height <= 0."""


class Apex(tuple):
    """Immutable rational point of R^3, coordinates coerced to Fraction."""

    __slots__ = ()

    def __new__(cls, x1, x2, x3) -> "Apex":
        return tuple.__new__(cls, (Fraction(x1), Fraction(x2), Fraction(x3)))

    @classmethod
    def of(cls, coords: Iterable) -> "Apex":
        a, b, c = coords
        return cls(a, b, c)

    @property
    def height(self) -> Fraction:
        return self[0] + self[1] + self[2]

    def shifted(self, d1, d2, d3) -> "Apex":
        return Apex(self[0] + d1, self[1] + d2, self[2] + d3)

    def __repr__(self) -> str:
        return "Apex(%s)" % ", ".join(str(c) for c in self)


class Corner(NamedTuple):
    index: int
    point: tuple


class RegionId(enum.Enum):
    TRI = "TRI"
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R12 = "R12"
    R13 = "R13"
    R23 = "R23"

    @classmethod
    def cone(cls, k: int) -> "RegionId":
        return (cls.R1, cls.R2, cls.R3)[k - 1]

    @classmethod
    def slab(cls, i: int, j: int) -> "RegionId":
        i, j = sorted((i, j))
        return {(1, 2): cls.R12, (1, 3): cls.R13, (2, 3): cls.R23}[(i, j)]


@dataclass(frozen=True)
class TailBitingCert:
    ordering: tuple
    type_k: int


def height(v: Sequence) -> Fraction:
    return v[0] + v[1] + v[2]


def as_point(q: Iterable) -> tuple:
    """Coerce to a Fraction triple and check that it lies in H."""
    p = tuple(Fraction(c) for c in q)
    if len(p) != 3:
        raise ValueError("expected three coordinates, got %d" % len(p))
    if p[0] + p[1] + p[2] != 0:
        raise ValueError("point %s does not lie on the plane x1+x2+x3=0" % (p,))
    return p


def _require_proper(v: Sequence) -> Fraction:
    h = v[0] + v[1] + v[2]
    if h <= 0:
        raise DegenerateApexError("apex %s has non-positive height %s" % (tuple(v), h))
    return h


def corner(v: Sequence, k: int) -> tuple:
    """Corner p_k of tri(v)."""
    h = v[0] + v[1] + v[2]
    p = list(v)
    p[k - 1] -= h
    return tuple(p)


def corners(v: Sequence) -> tuple[Corner, Corner, Corner]:
    return tuple(Corner(k, corner(v, k)) for k in (1, 2, 3))  # type: ignore[return-value]


def leq(a: Sequence, b: Sequence) -> bool:
    """Componentwise a <= b."""
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


def contains_closed(v: Sequence, q: Sequence) -> bool:
    q = as_point(q)
    return leq(q, v)


def contains_open(v: Sequence, q: Sequence) -> bool:
    q = as_point(q)
    return q[0] < v[0] and q[1] < v[1] and q[2] < v[2]


def region_memberships(v: Sequence, q: Sequence) -> frozenset[RegionId]:
    """All closed regions of v containing q.

    In barycentric terms (lam_i proportional to v_i - q_i): TRI needs every
    lam >= 0, the slab R_ij needs lam_i, lam_j >= 0 and lam_k <= 0, the cone
    R_k needs lam_i, lam_j <= 0.
    """
    _require_proper(v)
    q = as_point(q)
    lam = [v[i] - q[i] for i in range(3)]  # same signs as the barycentrics
    out = set()
    if all(x >= 0 for x in lam):
        out.add(RegionId.TRI)
    for k in (1, 2, 3):
        i, j = [x for x in (1, 2, 3) if x != k]
        li, lj, lk = lam[i - 1], lam[j - 1], lam[k - 1]
        if li >= 0 and lj >= 0 and lk <= 0:
            out.add(RegionId.slab(i, j))
        if li <= 0 and lj <= 0:
            out.add(RegionId.cone(k))
    return frozenset(out)


def meet(u: Sequence, v: Sequence) -> Apex:
    """Componentwise minimum; tri(meet(u, v)) is tri(u) & tri(v)."""
    return Apex(min(u[0], v[0]), min(u[1], v[1]), min(u[2], v[2]))


def meet_height(u: Sequence, v: Sequence) -> Fraction:
    return min(u[0], v[0]) + min(u[1], v[1]) + min(u[2], v[2])


def precedes(z: Sequence, x: Sequence) -> bool:
    return z[0] < x[0] and z[1] < x[1] and z[2] < x[2]


def crossing(u: Sequence, v: Sequence) -> bool:
    _require_proper(u)
    _require_proper(v)
    return meet_height(u, v) > 0 and not leq(u, v) and not leq(v, u)


def arrow(u: Sequence, v: Sequence, k: int) -> bool:
    """u ->k v: the triangles cross and corner k of tri(v) lies in tri(u)."""
    return crossing(u, v) and leq(corner(v, k), u)


def is_tail_biting(seq: Sequence[Sequence], k: int) -> bool:
    """Every earlier element ->k every later one.

    All pairs are checked. A sequence of length one is vacuously tail-biting.
    """
    n = len(seq)
    if n == 0:
        raise ValueError("empty sequence")
    for a in range(n):
        for b in range(a + 1, n):
            if not arrow(seq[a], seq[b], k):
                return False
    return True
