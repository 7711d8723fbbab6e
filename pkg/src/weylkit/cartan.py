"""Generalized Cartan matrices, their Dynkin data and the builtin A/D registry.

Orientation: ``matrix[i][j]`` is the integer A_ij with ``s_i(alpha_j) = alpha_j -
A_ji alpha_i`` and ``A_ji = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``.  For the
simply-laced builtins the matrix is symmetric, so the two readings agree.
"""
from __future__ import annotations

import json
import math
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Iterable, Mapping, Sequence

from . import linalg
from .errors import InvalidCartan, NotSymmetrizable, UnrecognizedDiagram, UnsupportedType

_BOND = {0: 2, 1: 3, 2: 4, 3: 6}


@dataclass(frozen=True)
class TypeLabel:
    family: str
    rank: int
    affine: bool = False

    def __post_init__(self):
        if self.family not in ("A", "D"):
            raise UnsupportedType(f"family {self.family!r} is not supported (only A and D)")
        if self.family == "A" and self.rank < 1:
            raise UnsupportedType("A_n needs n >= 1")
        if self.family == "D" and self.rank < 4:
            raise UnsupportedType("D_n needs n >= 4; use A1xA1 for D2 and A3 for D3")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}" + ("^(1)" if self.affine else "")

    @classmethod
    def parse(cls, text: str) -> "TypeLabel":
        """Accepts ``D5``, ``D5~``, ``D5^(1)``, ``A_3^(1)`` and similar spellings."""
        m = re.fullmatch(r"\s*([A-Za-z])_?(\d+)\s*(~|\^\(1\)|\^1|\(1\))?\s*", text)
        if not m:
            raise UnsupportedType(f"cannot parse type label {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)), m.group(3) is not None)


@dataclass(frozen=True)
class CartanData:
    """An immutable (generalized) Cartan matrix.

    ``marks`` is the null-root vector c with c_0 = 1 for affine matrices and
    ``None`` for finite ones.  ``automorphisms`` holds named diagram symmetries
    as image lists: ``perm[i]`` is the index j with alpha_i -> alpha_j.
    """

    matrix: tuple[tuple[int, ...], ...]
    marks: tuple[int, ...] | None = None
    name: str = ""
    automorphisms: tuple[tuple[str, tuple[int, ...]], ...] = field(default=(), compare=False)
    aut_groups: tuple[tuple[str, tuple[str, ...]], ...] = field(default=(), compare=False)

    @classmethod
    def from_matrix(
        cls,
        matrix: Sequence[Sequence[int]],
        marks: Sequence[int] | None = None,
        *,
        affine: bool | None = None,
        name: str = "",
        automorphisms: Mapping[str, Sequence[int]] | None = None,
        aut_groups: Mapping[str, Sequence[str]] | None = None,
    ) -> "CartanData":
        """Build and validate.  Marks are computed from the kernel when omitted.

        ``affine=None`` infers affineness from a vanishing determinant.
        """
        mat = tuple(tuple(int(x) for x in row) for row in matrix)
        if marks is None:
            if affine is None:
                affine = linalg.det(mat) == 0
            if affine:
                marks = compute_marks(mat)
        data = cls(
            mat,
            None if marks is None else tuple(int(c) for c in marks),
            name,
            tuple((k, tuple(v)) for k, v in (automorphisms or {}).items()),
            tuple((k, tuple(v)) for k, v in (aut_groups or {}).items()),
        )
        report = validate(data)
        if report:
            raise InvalidCartan("; ".join(report.failures))
        return data

    @property
    def size(self) -> int:
        return len(self.matrix)

    @property
    def rank(self) -> int:
        """Number of finite nodes (size - 1 for affine data)."""
        return self.size - 1 if self.affine else self.size

    @property
    def affine(self) -> bool:
        return self.marks is not None

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.matrix[i][j]

    @cached_property
    def root_lengths(self) -> tuple[Fraction, ...]:
        """Squared lengths (alpha_i, alpha_i), longest root of each component = 2."""
        return _root_lengths(self.matrix)

    @cached_property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(map(tuple, bilinear_gram(self)))

    @property
    def bond_orders(self) -> dict[tuple[int, int], float]:
        """m_ij for i < j; ``math.inf`` for the A1^(1) double edge."""
        out: dict[tuple[int, int], float] = {}
        for i in range(self.size):
            for j in range(i + 1, self.size):
                p = self.matrix[i][j] * self.matrix[j][i]
                out[(i, j)] = _BOND.get(p, math.inf)
        return out

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for (i, j), m in self.bond_orders.items() if m != 2]

    @property
    def automorphism_map(self) -> dict[str, tuple[int, ...]]:
        return dict(self.automorphisms)

    @property
    def aut_group_map(self) -> dict[str, tuple[str, ...]]:
        return dict(self.aut_groups)

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"size": self.size, "matrix": [list(r) for r in self.matrix]}
        out["marks"] = list(self.marks) if self.marks is not None else None
        if self.name:
            out["name"] = self.name
        if self.automorphisms:
            out["automorphisms"] = {k: list(v) for k, v in self.automorphisms}
        return out

    @classmethod
    def from_json(cls, obj: Mapping[str, Any] | str) -> "CartanData":
        if isinstance(obj, str):
            obj = json.loads(obj)
        matrix = obj["matrix"]
        if "size" in obj and obj["size"] != len(matrix):
            raise InvalidCartan(f"size {obj['size']} does not match a {len(matrix)}-row matrix")
        return cls.from_matrix(
            matrix,
            obj.get("marks"),
            name=obj.get("name", ""),
            automorphisms=obj.get("automorphisms"),
        )


@dataclass
class ValidationReport:
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return bool(self.failures)

    def __iter__(self):
        return iter(self.failures)


def compute_marks(matrix: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Unique primitive positive kernel vector, normalized so that c_0 = 1."""
    kernel = linalg.nullspace(matrix)
    if len(kernel) != 1:
        raise InvalidCartan(f"affine matrix needs a 1-dimensional kernel, got dimension {len(kernel)}")
    v = kernel[0]
    lcm = math.lcm(*(x.denominator for x in v))
    ints = [int(x * lcm) for x in v]
    g = math.gcd(*ints)
    ints = [x // g for x in ints]
    if ints[0] < 0:
        ints = [-x for x in ints]
    if any(x <= 0 for x in ints):
        raise InvalidCartan(f"kernel vector {ints} is not positive")
    if ints[0] != 1:
        raise InvalidCartan(f"primitive kernel vector {ints} has c_0 != 1")
    return tuple(ints)


def _root_lengths(matrix: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    n = len(matrix)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        comp = [start]
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j == i or matrix[i][j] == 0:
                    continue
                if matrix[j][i] == 0:
                    raise NotSymmetrizable(f"zero pattern asymmetric at ({i},{j})")
                # (a_i,a_i) A_ji = A_ij (a_j,a_j)
                want = d[i] * matrix[j][i] / matrix[i][j]
                if d[j] is None:
                    d[j] = want
                    comp.append(j)
                    queue.append(j)
                elif d[j] != want:
                    raise NotSymmetrizable(f"inconsistent root lengths around node {j}")
        scale = Fraction(2) / max(d[k] for k in comp)
        for k in comp:
            d[k] *= scale
    return tuple(d)  # type: ignore[arg-type]


def validate(data: CartanData) -> ValidationReport:
    """Collect every violated invariant.  An empty report means valid."""
    rep = ValidationReport()
    a = data.matrix
    n = len(a)
    if any(len(row) != n for row in a):
        rep.failures.append("matrix is not square")
        return rep
    for i in range(n):
        if a[i][i] != 2:
            rep.failures.append(f"diagonal entry A[{i}][{i}] = {a[i][i]} != 2")
        for j in range(n):
            if i == j:
                continue
            if a[i][j] > 0:
                rep.failures.append(f"off-diagonal entry A[{i}][{j}] = {a[i][j]} > 0")
            if j > i and (a[i][j] == 0) != (a[j][i] == 0):
                rep.failures.append(f"zero pattern asymmetry: A[{i}][{j}] = {a[i][j]}, A[{j}][{i}] = {a[j][i]}")
            if j > i and a[i][j] * a[j][i] not in (0, 1, 2, 3):
                if not (n == 2 and data.affine and a[i][j] * a[j][i] == 4):
                    rep.failures.append(f"A[{i}][{j}]*A[{j}][{i}] = {a[i][j] * a[j][i]} is not crystallographic")
    if data.marks is not None:
        c = data.marks
        if len(c) != n:
            rep.failures.append(f"marks have length {len(c)}, expected {n}")
        else:
            if c[0] != 1:
                rep.failures.append(f"c_0 = {c[0]} != 1")
            if any(x <= 0 for x in c):
                rep.failures.append("marks must be positive")
            ac = [sum(a[i][j] * c[j] for j in range(n)) for i in range(n)]
            if any(ac):
                rep.failures.append(f"A.c = {ac} != 0 (null root not in the kernel)")
    if not rep.failures:
        try:
            _root_lengths(a)
        except NotSymmetrizable as exc:
            rep.failures.append(f"not symmetrizable: {exc}")
    for name, perm in data.automorphisms:
        problem = automorphism_problem(a, perm)
        if problem:
            rep.failures.append(f"automorphism {name}: {problem}")
    return rep


def automorphism_problem(matrix: Sequence[Sequence[int]], perm: Sequence[int]) -> str:
    n = len(matrix)
    if sorted(perm) != list(range(n)):
        return f"{list(perm)} is not a permutation of 0..{n - 1}"
    for i in range(n):
        for j in range(n):
            if matrix[perm[i]][perm[j]] != matrix[i][j]:
                return f"does not preserve the Cartan matrix at ({i},{j})"
    return ""


def bilinear_gram(data: CartanData) -> list[list[Fraction]]:
    """G[i][j] = (alpha_i, alpha_j) = A_ji (alpha_i, alpha_i) / 2."""
    d = _root_lengths(data.matrix)
    n = data.size
    g = [[data.matrix[j][i] * d[i] / 2 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            if g[i][j] != g[j][i]:
                raise NotSymmetrizable(f"Gram matrix not symmetric at ({i},{j})")
    return g


# ---------------------------------------------------------------------------
# builtin registry


def _finite_matrix(family: str, n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if family == "A":
        edges = [(i, i + 1) for i in range(n - 1)]
    else:
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    for i, j in edges:
        a[i][j] = a[j][i] = -1
    return a


def _affine_matrix(family: str, n: int) -> tuple[list[list[int]], list[int]]:
    size = n + 1
    a = [[2 if i == j else 0 for j in range(size)] for i in range(size)]
    if family == "A":
        if n == 1:
            return [[2, -2], [-2, 2]], [1, 1]
        edges = [(i, (i + 1) % size) for i in range(size)]
        marks = [1] * size
    else:
        # nodes 0 and 1 hang off 2; n-1 and n hang off n-2
        edges = [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
        marks = [1, 1] + [2] * (n - 3) + [1, 1]
    for i, j in edges:
        a[i][j] = a[j][i] = -1
    return a, marks


def _compose(*perms: Sequence[int]) -> tuple[int, ...]:
    """Image list of the product, rightmost applied first."""
    n = len(perms[0])
    out = list(range(n))
    for p in reversed(perms):
        out = [p[x] for x in out]
    return tuple(out)


def _builtin_automorphisms(family: str, n: int) -> tuple[dict, dict]:
    size = n + 1
    if family == "A":
        if n == 1:
            return {"pi": (1, 0)}, {"all": ("pi",)}
        p1 = tuple((-i) % size for i in range(size))
        p2 = tuple(n - i for i in range(size))
        return {"p1": p1, "p2": p2, "p12": _compose(p1, p2), "p21": _compose(p2, p1)}, {
            "rot": ("p12",),
            "all": ("p1", "p2"),
        }
    sigma1 = tuple([1, 0] + list(range(2, size)))
    sigma2 = tuple(n - i for i in range(size))
    auts = {
        "sigma1": sigma1,
        "sigma2": sigma2,
        "sigma12": _compose(sigma1, sigma2),
        "sigma21": _compose(sigma2, sigma1),
    }
    groups = {"all": ("sigma1", "sigma2")}
    if n % 2 == 1:
        groups["cyc4"] = ("sigma12",)
    return auts, groups


def load_builtin(label: TypeLabel | str) -> CartanData:
    """Builtin A_n / D_n data, affine or finite.

    Affine D_n uses the node layout of the D5^(1) diagram: 0 and 1 attached to 2,
    a chain 2..n-2, and n-1, n attached to n-2.  Finite data is indexed 0..n-1.
    """
    if isinstance(label, str):
        label = TypeLabel.parse(label)
    if label.affine:
        mat, marks = _affine_matrix(label.family, label.rank)
        auts, groups = _builtin_automorphisms(label.family, label.rank)
        return CartanData.from_matrix(mat, marks, name=str(label), automorphisms=auts, aut_groups=groups)
    return CartanData.from_matrix(_finite_matrix(label.family, label.rank), None, affine=False, name=str(label))


# ---------------------------------------------------------------------------
# classification of root subsets


def _coords(v) -> tuple:
    return tuple(getattr(v, "coords", v))


def gram_of(roots: Sequence, ambient: CartanData) -> list[list[Fraction]]:
    g = ambient.gram
    vs = [_coords(r) for r in roots]
    for v in vs:
        if len(v) != ambient.size:
            raise ValueError(f"root {v} has wrong length for a {ambient.size}-node system")
    n = ambient.size
    return [
        [sum(u[i] * g[i][j] * w[j] for i in range(n) for j in range(n) if u[i] and w[j]) for w in vs]
        for u in vs
    ]


def _components(adj: list[set[int]]) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for s in range(len(adj)):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in adj[i]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _path_from(start: int, adj: list[set[int]], allowed: set[int]) -> list[int]:
    order, prev, cur = [start], None, start
    while True:
        nxt = [j for j in adj[cur] if j != prev and j in allowed]
        if not nxt:
            return order
        prev, cur = cur, nxt[0]
        order.append(cur)


def classify_components(roots: Sequence, ambient: CartanData) -> list[tuple[TypeLabel, list]]:
    """Split roots into connected components and recognize each as A_n or D_n.

    Returns ``(label, ordered_roots)`` per component in Bourbaki order: an A_n path
    from one end, or a D_n arm ending at the fork followed by the two short leaves.
    Ties between equivalent orderings are broken by comparing coordinate tuples,
    so the output does not depend on the order of the input.
    """
    roots = list(roots)
    if not roots:
        return []
    g = gram_of(roots, ambient)
    k = len(roots)
    adj: list[set[int]] = [set() for _ in range(k)]
    for i in range(k):
        if g[i][i] <= 0:
            raise UnrecognizedDiagram(f"root {_coords(roots[i])} has non-positive norm")
        for j in range(k):
            if i != j and g[i][j] != 0:
                if 4 * g[i][j] ** 2 != g[i][i] * g[j][j]:
                    raise UnrecognizedDiagram("only simply-laced (single bond) components are recognized")
                if g[i][j] > 0:
                    raise UnrecognizedDiagram("roots with positive pairing do not form a simple system")
                adj[i].add(j)
    key = lambda i: _coords(roots[i])  # noqa: E731
    result = []
    for comp in _components(adj):
        cs = set(comp)
        nedges = sum(len(adj[i]) for i in comp) // 2
        if nedges != len(comp) - 1:
            raise UnrecognizedDiagram(f"component of size {len(comp)} contains a cycle")
        degrees = {i: len(adj[i]) for i in comp}
        forks = [i for i in comp if degrees[i] >= 3]
        if not forks:
            ends = [i for i in comp if degrees[i] <= 1]
            orders = [_path_from(e, adj, cs) for e in ends]
            order = min(orders, key=lambda o: [key(i) for i in o])
            label = TypeLabel("A", len(comp))
        elif len(forks) == 1 and degrees[forks[0]] == 3:
            f = forks[0]
            arms = [_path_from(j, adj, cs - {f}) for j in adj[f]]
            arms.sort(key=lambda arm: (len(arm), [key(i) for i in arm]))
            if len(arms[0]) != 1 or len(arms[1]) != 1:
                raise UnrecognizedDiagram("fork is not of D type (E-type or other branching)")
            long_arm = list(reversed(arms[2]))
            order = long_arm + [f] + sorted([arms[0][0], arms[1][0]], key=key)
            label = TypeLabel("D", len(comp))
        else:
            raise UnrecognizedDiagram("component has more than one branch point")
        result.append((label, [roots[i] for i in order]))
    result.sort(key=lambda item: (item[0].family, item[0].rank, [_coords(r) for r in item[1]]))
    return result
