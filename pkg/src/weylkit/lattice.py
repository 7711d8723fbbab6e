"""Exact vectors in the root space V and its dual V*, and root enumeration.

Roots live in the simple-root basis alpha_0..alpha_n (integer coordinates).
Coweights live in the basis h_1..h_n, h_delta (rational coordinates); the last
coordinate is the h_delta component.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .cartan import CartanData
from .errors import DimensionMismatch, NonTerminating, NotARealRoot

DEFAULT_ROOT_CAP = 10**6


@dataclass(frozen=True, order=True)
class RootVec:
    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[int]):
        object.__setattr__(self, "coords", tuple(int(x) for x in coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def _check(self, other: "RootVec") -> None:
        if len(self.coords) != len(other.coords):
            raise DimensionMismatch(f"{len(self.coords)} vs {len(other.coords)}")

    def __add__(self, other: "RootVec") -> "RootVec":
        self._check(other)
        return RootVec(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "RootVec") -> "RootVec":
        self._check(other)
        return RootVec(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "RootVec":
        return RootVec(-a for a in self.coords)

    def __mul__(self, k: int) -> "RootVec":
        return RootVec(k * a for a in self.coords)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    @classmethod
    def basis(cls, i: int, size: int) -> "RootVec":
        return cls(int(j == i) for j in range(size))

    @classmethod
    def zero(cls, size: int) -> "RootVec":
        return cls([0] * size)

    def __repr__(self) -> str:
        return f"RootVec({list(self.coords)})"


@dataclass(frozen=True)
class CoweightVec:
    """Coordinates (mu_1, ..., mu_n, mu_delta) in the basis h_1..h_n, h_delta."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "coords", tuple(Fraction(x) for x in coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def _check(self, other: "CoweightVec") -> None:
        if len(self.coords) != len(other.coords):
            raise DimensionMismatch(f"{len(self.coords)} vs {len(other.coords)}")

    def __add__(self, other: "CoweightVec") -> "CoweightVec":
        self._check(other)
        return CoweightVec(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "CoweightVec") -> "CoweightVec":
        self._check(other)
        return CoweightVec(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "CoweightVec":
        return CoweightVec(-a for a in self.coords)

    def __mul__(self, k) -> "CoweightVec":
        return CoweightVec(Fraction(k) * a for a in self.coords)

    __rmul__ = __mul__

    def __truediv__(self, k) -> "CoweightVec":
        return CoweightVec(a / Fraction(k) for a in self.coords)

    @property
    def level(self) -> Fraction:
        """The h_delta coordinate, i.e. the pairing with delta."""
        return self.coords[-1]

    @property
    def finite(self) -> tuple[Fraction, ...]:
        return self.coords[:-1]

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.coords)

    @classmethod
    def fundamental(cls, i: int, size: int) -> "CoweightVec":
        """h_i for 1 <= i <= n; ``i = 'delta'`` or ``i = 0`` gives h_delta."""
        idx = size - 1 if i in (0, "delta") else i - 1
        return cls(int(j == idx) for j in range(size))

    @classmethod
    def zero(cls, size: int) -> "CoweightVec":
        return cls([0] * size)

    def __repr__(self) -> str:
        return f"CoweightVec({[str(x) for x in self.coords]})"

    def __str__(self) -> str:
        from .notation import format_coweight

        return format_coweight(self)


def null_root(data: CartanData) -> RootVec:
    if data.marks is None:
        raise ValueError("null root is only defined for affine data")
    return RootVec(data.marks)


def pairing_matrix(data: CartanData) -> list[list[int]]:
    """P with <v, f> = v^T P f (rows: alpha_0..alpha_n, cols: h_1..h_n, h_delta)."""
    n1 = data.size
    c = data.marks
    p = [[0] * n1 for _ in range(n1)]
    # alpha_0 = delta - sum_{i>=1} c_i alpha_i
    for j in range(1, n1):
        p[0][j - 1] = -c[j]
        p[j][j - 1] = 1
    p[0][n1 - 1] = 1
    return p


def pair(v: RootVec, f: CoweightVec, data: CartanData) -> Fraction:
    """The pairing <v, f> between V^(1) and V^(1)*."""
    if len(v) != data.size or len(f) != data.size:
        raise DimensionMismatch(f"expected length {data.size}, got {len(v)} and {len(f)}")
    c = data.marks
    fd = f.coords[-1]
    total = Fraction(v[0]) * (fd - sum(c[j] * f.coords[j - 1] for j in range(1, data.size)))
    for i in range(1, data.size):
        if v[i]:
            total += v[i] * f.coords[i - 1]
    return total


def bilinear(u: RootVec, v: RootVec, data: CartanData) -> Fraction:
    if len(u) != data.size or len(v) != data.size:
        raise DimensionMismatch(f"expected length {data.size}, got {len(u)} and {len(v)}")
    g = data.gram
    return sum(
        (u[i] * g[i][j] * v[j] for i in range(data.size) if u[i] for j in range(data.size) if v[j]),
        Fraction(0),
    )


def norm(v: RootVec, data: CartanData) -> Fraction:
    return bilinear(v, v, data)


def simple_coroot(i: int, data: CartanData) -> CoweightVec:
    """alpha-check_i as a level-zero coweight.

    For i >= 1 this is sum_j A_ji h_j, so that <alpha_j, alpha-check_i> = A_ji;
    alpha-check_0 is -sum_i c_i alpha-check_i.
    """
    n1 = data.size
    if not 0 <= i < n1:
        raise IndexError(f"node {i} out of range 0..{n1 - 1}")
    if i == 0:
        total = CoweightVec.zero(n1)
        for k in range(1, n1):
            total = total - data.marks[k] * simple_coroot(k, data)
        return total
    return CoweightVec([data.matrix[j][i] for j in range(1, n1)] + [0])


def coroot(root: RootVec, data: CartanData) -> CoweightVec:
    """beta-check = sum_i a_i ((alpha_i,alpha_i)/(beta,beta)) alpha-check_i for beta = sum a_i alpha_i."""
    nb = norm(root, data)
    if nb == 0:
        raise NotARealRoot(f"{root} is isotropic")
    lengths = data.root_lengths
    total = CoweightVec.zero(data.size)
    for i, a in enumerate(root):
        if a:
            total = total + simple_coroot(i, data) * (a * lengths[i] / nb)
    return total


def finite_part(v: RootVec, data: CartanData) -> tuple[RootVec, int]:
    """Split v = x + k delta with the alpha_0 coordinate of x equal to zero."""
    k = v[0]
    return v - k * null_root(data), k


def _closure(matrix: Sequence[Sequence[int]], nodes: Sequence[int], cap: int) -> frozenset[tuple[int, ...]]:
    size = len(matrix)
    start = [tuple(int(j == i) for j in range(size)) for i in nodes]
    seen = set(start)
    queue = deque(start)
    while queue:
        v = queue.popleft()
        for i in nodes:
            # s_i v = v - <v, alpha-check_i> alpha_i with <alpha_j, alpha-check_i> = A_ji
            c = sum(v[j] * matrix[j][i] for j in range(size) if v[j])
            if c:
                w = list(v)
                w[i] -= c
                w = tuple(w)
                if w not in seen:
                    seen.add(w)
                    if len(seen) > cap:
                        raise NonTerminating(f"root closure exceeded {cap} roots")
                    queue.append(w)
    return frozenset(seen)


@lru_cache(maxsize=64)
def _finite_roots_cached(data: CartanData, cap: int) -> frozenset[RootVec]:
    nodes = list(range(1, data.size)) if data.affine else list(range(data.size))
    return frozenset(RootVec(v) for v in _closure(data.matrix, nodes, cap))


def enumerate_finite_roots(data: CartanData, cap: int = DEFAULT_ROOT_CAP) -> frozenset[RootVec]:
    """The finite root system Phi: orbit of alpha_1..alpha_n under s_1..s_n.

    For affine data the vectors keep the (zero) alpha_0 slot so they can be
    compared with affine roots directly.
    """
    return _finite_roots_cached(data, cap)


def positive_finite_roots(data: CartanData) -> list[RootVec]:
    return sorted((r for r in enumerate_finite_roots(data) if all(x >= 0 for x in r)), key=height_key)


def height_key(r: RootVec) -> tuple:
    return (sum(r.coords), r.coords)


def is_real_root(v: RootVec, data: CartanData) -> bool:
    if len(v) != data.size:
        return False
    if not data.affine:
        return v in enumerate_finite_roots(data)
    x, _ = finite_part(v, data)
    return not x.is_zero() and x in enumerate_finite_roots(data)


def require_real_root(v: RootVec, data: CartanData) -> None:
    if not is_real_root(v, data):
        raise NotARealRoot(f"{list(v)} is not a real root of {data.name or 'the given system'}")


def highest_root(data: CartanData) -> RootVec:
    """Highest root of the finite system (the unique root of maximal height)."""
    roots = enumerate_finite_roots(data)
    top = max(sum(r) for r in roots)
    best = [r for r in roots if sum(r) == top]
    if len(best) != 1:
        raise ValueError("finite part is not connected; no unique highest root")
    return best[0]
