"""Translations t_mu on the weight lattice and quasi-translations.

A translation by a level-zero coweight mu acts on simple roots by
alpha_i -> alpha_i - <alpha_i, mu> delta, and on level-one coweights by h -> h + mu.
A quasi-translation is an element g, not itself a translation, with some power
g^k a translation; k is recovered together with how g permutes registered
subsystems.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cartan import CartanData
from .errors import NotALatticeTranslation, NotQuasiWithinCap
from .lattice import CoweightVec, RootVec, null_root, pair
from .notation import format_coweight
from .weylgroup import GroupElement, InducedMap, act_on_coweight, induced_map

DEFAULT_KMAX = 24


@dataclass(frozen=True)
class TranslationVector:
    """Level-zero coweight mu = sum_{i>=1} mu_i h_i of a translation."""

    mu: CoweightVec
    data: CartanData = field(repr=False, compare=False)

    @property
    def mu0(self) -> Fraction:
        """Derived from sum_i c_i mu_i = 0 with c_0 = 1."""
        c = self.data.marks
        return -sum((c[i] * self.mu[i - 1] for i in range(1, self.data.size)), Fraction(0))

    @property
    def pattern(self) -> tuple[Fraction, ...]:
        """(mu_0, mu_1, ..., mu_n): translation sends alpha_i to alpha_i - mu_i delta."""
        return (self.mu0,) + tuple(self.mu.finite)

    def __str__(self) -> str:
        return format_coweight(self.mu)

    def __mul__(self, k: int) -> "TranslationVector":
        return TranslationVector(self.mu * k, self.data)

    __rmul__ = __mul__


def translation_element(mu: CoweightVec, data: CartanData) -> GroupElement:
    if len(mu) != data.size:
        raise ValueError(f"coweight has length {len(mu)}, expected {data.size}")
    if mu.level != 0:
        raise ValueError("translation vectors must have zero h_delta coordinate")
    delta = null_root(data)
    n = data.size
    m = np.eye(n, dtype=np.int64)
    for i in range(n):
        p = pair(RootVec.basis(i, n), mu, data)
        if p.denominator != 1:
            raise NotALatticeTranslation(f"<alpha_{i}, mu> = {p} is not an integer")
        for r in range(n):
            m[r, i] -= int(p) * delta[r]
    return GroupElement(m, data, (f"t[{format_coweight(mu)}]",))


def as_translation(g: GroupElement) -> TranslationVector | None:
    """The vector of g if g is a translation, else ``None``."""
    data = g.data
    delta = np.array(data.marks, dtype=np.int64)
    diff = g.matrix - np.eye(data.size, dtype=np.int64)
    mus = []
    for i in range(data.size):
        col = diff[:, i]
        k = int(col[0])  # c_0 = 1, so the multiple of delta is read off alpha_0
        if not (col == k * delta).all():
            return None
        mus.append(-k)
    if sum(c * m for c, m in zip(data.marks, mus)) != 0:
        return None
    return TranslationVector(CoweightVec(mus[1:] + [0]), data)


@dataclass
class QuasiTranslationReport:
    base_order: int
    vector: TranslationVector
    induced_maps: dict[str, InducedMap | None]
    labels: dict[str, list[str]] = field(default_factory=dict)

    @property
    def is_translation(self) -> bool:
        return self.base_order == 1

    def to_json(self) -> dict:
        maps = {}
        for name, m in self.induced_maps.items():
            if m is None:
                maps[name] = "not stabilized"
            else:
                maps[name] = {
                    "perm": list(m.perm),
                    "shifts": list(m.shifts),
                    "order": m.permutation_order(),
                    "images": m.describe(self.labels.get(name, [f"{name}{i}" for i in range(len(m.perm))])),
                }
        return {
            "base_order": self.base_order,
            "vector": str(self.vector),
            "mu_pattern": [str(x) for x in self.vector.pattern],
            "induced_maps": maps,
        }


def quasi_translation_analysis(g: GroupElement, subsystems: Sequence = (), k_max: int = DEFAULT_KMAX) -> QuasiTranslationReport:
    """Smallest k <= k_max with g^k a translation, plus g's action on each subsystem.

    ``subsystems`` are objects with ``name``, ``roots`` and optionally ``labels``.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    p = g
    for k in range(1, k_max + 1):
        vec = as_translation(p)
        if vec is not None:
            maps = {s.name: induced_map(g, s.roots) for s in subsystems}
            labels = {s.name: list(getattr(s, "labels", [])) or [f"{s.name}{i}" for i in range(len(s.roots))] for s in subsystems}
            return QuasiTranslationReport(k, vec, maps, labels)
        p = p * g
    raise NotQuasiWithinCap(f"no power g^k with k <= {k_max} is a translation")


def conjugation_check(w: GroupElement, mu: CoweightVec) -> bool:
    """w t_mu w^-1 == t_{w mu}."""
    data = w.data
    lhs = w * translation_element(mu, data) * w.inverse()
    return lhs == translation_element(act_on_coweight(w, mu), data)
