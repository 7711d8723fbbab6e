"""Centralizers, affine extensions, setwise stabilizers and normalizer assembly.

The centralizer of a set of roots is generated by the reflections through the
finite roots orthogonal to it (plus their affine closure).  Elements exchanging
simple roots, which this reduction misses, come from a bounded breadth-first
search over words, deduplicated by the exact integer matrix.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import linalg
from .cartan import CartanData, TypeLabel, classify_components, gram_of
from .errors import IncompleteVerification, SearchBudgetExceeded
from .lattice import RootVec, _closure, bilinear, enumerate_finite_roots, null_root, require_real_root
from .weylgroup import (
    GroupElement,
    InducedMap,
    diagram_automorphism,
    generate_group,
    induced_map,
    reflection_through,
    simple_reflection,
)

DEFAULT_MAX_LEN = 8
DEFAULT_SEARCH_CAP = 5_000_000


def search_cap() -> int:
    return int(os.environ.get("WEYLKIT_SEARCH_CAP", DEFAULT_SEARCH_CAP))


@dataclass(frozen=True)
class Subsystem:
    """An ordered simple system inside the ambient root system.

    For affine-closed systems ``roots[0]`` is the affine node, mirroring the
    ambient convention that alpha_0 is the extra node.
    """

    name: str
    roots: tuple[RootVec, ...]
    labels: tuple[str, ...]
    sub_cartan: CartanData
    type: TypeLabel
    highest_root: RootVec
    affine_node: RootVec | None = None

    @property
    def affine(self) -> bool:
        return self.affine_node is not None

    @property
    def simple_roots(self) -> tuple[RootVec, ...]:
        return self.roots

    def __len__(self) -> int:
        return len(self.roots)

    def label_of(self, root: RootVec) -> str | None:
        for r, lab in zip(self.roots, self.labels):
            if r == root:
                return lab
        return None


def _sub_cartan_matrix(roots: Sequence[RootVec], data: CartanData) -> list[list[int]]:
    g = gram_of(roots, data)
    k = len(roots)
    out = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            # A_ij = 2 (r_j, r_i) / (r_j, r_j)
            v = 2 * g[j][i] / g[j][j]
            if v.denominator != 1:
                raise ValueError("roots do not form a crystallographic system")
            out[i][j] = int(v)
    return out


def _highest_in_span(roots: Sequence[RootVec], matrix: Sequence[Sequence[int]]) -> RootVec:
    sub_roots = _closure(matrix, list(range(len(roots))), 10**6)
    top = max(sum(c) for c in sub_roots)
    best = [c for c in sub_roots if sum(c) == top]
    if len(best) != 1:
        raise ValueError("subsystem is not connected; highest root is not unique")
    total = RootVec.zero(len(roots[0]))
    for coef, r in zip(best[0], roots):
        total = total + coef * r
    return total


def make_subsystem(name: str, roots: Sequence[RootVec], data: CartanData,
                   labels: Sequence[str] | None = None) -> Subsystem:
    """Subsystem from an ordered, connected simple system.

    If the Gram matrix is degenerate the system is treated as affine with
    ``roots[0]`` as its affine node.
    """
    roots = tuple(roots)
    for r in roots:
        require_real_root(r, data)
    if labels is None:
        labels = [f"{name}{i}" for i in range(len(roots))]
    mat = _sub_cartan_matrix(roots, data)
    affine = linalg.det(mat) == 0
    sub = CartanData.from_matrix(mat, affine=affine, name=f"{name}")
    finite = roots[1:] if affine else roots
    comps = classify_components(finite, data)
    if len(comps) != 1:
        raise ValueError(f"subsystem {name} is not connected")
    label = comps[0][0]
    if affine:
        fmat = [row[1:] for row in mat[1:]]
        highest = _highest_in_span(finite, fmat)
        if highest + roots[0] != null_root(data):
            raise ValueError(f"{name}: affine node is not delta minus the highest root")
        label = TypeLabel(label.family, label.rank, True)
        return Subsystem(name, roots, tuple(labels), sub, label, highest, roots[0])
    return Subsystem(name, roots, tuple(labels), sub, label, _highest_in_span(roots, mat), None)


def _is_positive(r: RootVec) -> bool:
    return all(x >= 0 for x in r)


def orthogonal_subsystem(seeds: Sequence[RootVec], data: CartanData, name: str = "omega") -> list[Subsystem]:
    """Finite roots orthogonal to every seed, split into simple components.

    The simple system is canonical: positive roots of the orthogonal set that are
    not the sum of two of its positive roots.
    """
    for s in seeds:
        require_real_root(s, data)
    omega = [r for r in enumerate_finite_roots(data) if all(bilinear(r, s, data) == 0 for s in seeds)]
    pos = sorted((r for r in omega if _is_positive(r)), key=lambda r: (sum(r), r.coords))
    pos_set = set(pos)
    sums = {a + b for a, b in itertools.combinations(pos, 2)}
    simple = [r for r in pos if r not in sums]
    assert all(r in pos_set for r in simple)
    out = []
    for k, (_, ordered) in enumerate(classify_components(simple, data), start=1):
        cname = f"{name}{k}"
        labels = [f"{cname}_{i}" for i in range(1, len(ordered) + 1)]
        out.append(make_subsystem(cname, ordered, data, labels))
    return out


def affine_extension(sub: Subsystem, data: CartanData, name: str | None = None,
                     affine_label: str | None = None) -> Subsystem:
    """Prepend delta - (highest root) as the affine node."""
    if sub.affine:
        raise ValueError(f"{sub.name} is already affine")
    node = null_root(data) - sub.highest_root
    name = name or sub.name
    labels = [affine_label or f"{name}0"] + list(sub.labels)
    return make_subsystem(name, (node,) + sub.roots, data, labels)


# ---------------------------------------------------------------------------
# stabilizer search


@dataclass
class StabilizerHit:
    element: GroupElement
    word: tuple[str, ...]
    induced_map: InducedMap

    @property
    def length(self) -> int:
        return len(self.word)

    def word_text(self) -> str:
        return " ".join(self.word) if self.word else "e"


def stabilizer_search(
    targets: Sequence[RootVec],
    data: CartanData,
    automorphisms: Sequence[GroupElement] = (),
    max_len: int = DEFAULT_MAX_LEN,
    cap: int | None = None,
) -> list[StabilizerHit]:
    """Shortest words mapping the target list onto itself exactly.

    Breadth-first over words in s_0..s_n followed by the given automorphisms
    (that is the ShortLex generator order), with duplicate matrices dropped.
    For every achievable permutation of ``targets`` the ShortLex-least word
    realizing it is returned.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    cap = search_cap() if cap is None else cap
    gens = [simple_reflection(i, data) for i in range(data.size)] + list(automorphisms)
    names = [f"s{i}" for i in range(data.size)] + [a.word[0] if a.word else f"aut{k}" for k, a in enumerate(automorphisms)]
    gmats = [g.matrix for g in gens]

    tmat = np.array([t.coords for t in targets], dtype=np.int64).T
    lookup = {tuple(col): j for j, col in enumerate(tmat.T)}
    if len(lookup) != len(targets):
        raise ValueError("targets must be distinct")

    def perm_of(m: np.ndarray) -> tuple[int, ...] | None:
        imgs = m @ tmat
        perm = []
        for col in imgs.T:
            j = lookup.get(tuple(col))
            if j is None:
                return None
            perm.append(j)
        return tuple(perm)

    ident = np.eye(data.size, dtype=np.int64)
    seen = {ident.tobytes()}
    frontier: list[tuple[np.ndarray, tuple[int, ...]]] = [(ident, ())]
    found: dict[tuple[int, ...], tuple[np.ndarray, tuple[int, ...]]] = {}
    p = perm_of(ident)
    if p is not None:
        found[p] = (ident, ())
    for _length in range(max_len):
        nxt = []
        for m, word in frontier:
            for gi, gm in enumerate(gmats):
                h = m @ gm
                key = h.tobytes()
                if key in seen:
                    continue
                seen.add(key)
                if len(seen) > cap:
                    raise SearchBudgetExceeded(f"more than {cap} distinct elements visited")
                w = word + (gi,)
                nxt.append((h, w))
                p = perm_of(h)
                if p is not None and p not in found:
                    found[p] = (h, w)
        frontier = nxt
        if not frontier:
            break

    hits = []
    for perm, (m, w) in found.items():
        word = tuple(names[i] for i in w)
        g = GroupElement(m, data, word)
        imap = induced_map(g, list(targets))
        if imap is None or imap.perm != perm or not imap.is_permutation_only:
            raise IncompleteVerification(f"hit {word} failed direct verification")
        hits.append(StabilizerHit(g, word, imap))
    order = {n: k for k, n in enumerate(names)}
    hits.sort(key=lambda h: (h.length, [order[x] for x in h.word]))
    return hits


# ---------------------------------------------------------------------------
# action tables


_A3_GENERATORS = {"p1": (0, 3, 2, 1), "p2": (3, 2, 1, 0)}


def _compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """p o q as image lists."""
    return tuple(p[q[i]] for i in range(len(q)))


def _a3_word(perm: tuple[int, ...]) -> str | None:
    """ShortLex-least word in p1, p2 (rightmost acting first) realizing perm."""
    ident = (0, 1, 2, 3)
    if perm == ident:
        return ""
    frontier = [(ident, "")]
    seen = {ident}
    while frontier:
        nxt = []
        for q, w in frontier:
            for name, g in _A3_GENERATORS.items():
                r = _compose(q, g)
                if r in seen:
                    continue
                seen.add(r)
                if r == perm:
                    return w + name
                nxt.append((r, w + name))
        frontier = nxt
    return None


def describe_map(imap: InducedMap | None, sub: Subsystem) -> str:
    """Short name for an induced diagram map: ``-``, ``pi_<name>``, ``p1p2`` ..."""
    if imap is None:
        return "not stabilized"
    if imap.is_trivial:
        return "-"
    if not imap.is_permutation_only:
        return "; ".join(imap.describe(sub.labels))
    if len(sub.roots) == 2 and imap.perm == (1, 0):
        return f"pi_{sub.name}"
    if sub.affine and sub.type.family == "A" and sub.type.rank == 3:
        word = _a3_word(imap.perm)
        if word is not None:
            return word
    return "(" + " ".join(sub.labels[j] for j in imap.perm) + ")"


@dataclass
class ActionTable:
    row_labels: list[str]
    columns: list[str]
    cells: list[list[str]]
    maps: list[list[InducedMap | None]] = field(repr=False)

    def row(self, label: str) -> dict[str, str]:
        i = self.row_labels.index(label)
        return dict(zip(self.columns, self.cells[i]))

    def to_markdown(self) -> str:
        lines = ["| element | " + " | ".join(self.columns) + " |", "|---" * (len(self.columns) + 1) + "|"]
        for lab, row in zip(self.row_labels, self.cells):
            lines.append(f"| {lab} | " + " | ".join(row) + " |")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"columns": self.columns, "rows": {lab: dict(zip(self.columns, row)) for lab, row in zip(self.row_labels, self.cells)}}


def action_table(elements: Sequence[tuple[str, GroupElement]], subsystems: Sequence[Subsystem]) -> ActionTable:
    cells, maps = [], []
    for _, g in elements:
        row_maps = [induced_map(g, list(s.roots)) for s in subsystems]
        maps.append(row_maps)
        cells.append([describe_map(m, s) for m, s in zip(row_maps, subsystems)])
    return ActionTable([lab for lab, _ in elements], [s.name for s in subsystems], cells, maps)


# ---------------------------------------------------------------------------
# normalizer assembly


@dataclass
class Block:
    """One factor of the complement: a centralizer component and the diagram
    elements acting only on it (and on the normalized subsystem).

    Blocks without a component are ``residual`` (elements fixing every
    centralizer simple root), ``mixed`` (elements that keep each component but
    act on several of them) or ``component-permuting`` (elements exchanging
    centralizer components of the same type).
    """

    component: Subsystem | None
    reflections: list[tuple[str, GroupElement]]
    diagram: list[StabilizerHit]
    kind: str = "component"

    @property
    def generators(self) -> list[GroupElement]:
        return [g for _, g in self.reflections] + [h.element for h in self.diagram]


@dataclass
class NormalizerPresentation:
    subsystem: Subsystem
    subgroup_generators: list[tuple[str, GroupElement]]
    centralizer: list[Subsystem]
    complement_hits: list[StabilizerHit]
    blocks: list[Block]
    commuting: bool
    verification: list[str]
    diagram_group_order: int

    @property
    def complement_generators(self) -> list[StabilizerHit]:
        return [h for b in self.blocks for h in b.diagram]

    @property
    def product_structure(self) -> list[list[str]]:
        """Generator labels of each mutually commuting component block."""
        return [[lab for lab, _ in b.reflections] + [h.word_text() for h in b.diagram]
                for b in self.blocks if b.kind == "component"]

    def to_json(self) -> dict:
        return {
            "subsystem": self.subsystem.name,
            "subsystem_type": str(self.subsystem.type),
            "subgroup_generators": [lab for lab, _ in self.subgroup_generators],
            "centralizer": [
                {"name": c.name, "type": str(c.type), "roots": [list(r) for r in c.roots], "labels": list(c.labels)}
                for c in self.centralizer
            ],
            "diagram_group_order": self.diagram_group_order,
            "complement_hits": [h.word_text() for h in self.complement_hits],
            "blocks": [
                {
                    "component": b.component.name if b.component else None,
                    "kind": b.kind,
                    "reflections": [lab for lab, _ in b.reflections],
                    "diagram": [h.word_text() for h in b.diagram],
                }
                for b in self.blocks
            ],
            "blocks_commute": self.commuting,
            "verification": self.verification,
        }


def _generated(elements: Sequence[GroupElement], data: CartanData) -> set[GroupElement]:
    return set(generate_group(elements)) | {GroupElement.identity(data)}


def _greedy(cands: Sequence[StabilizerHit], base: Sequence[GroupElement], data: CartanData) -> list[StabilizerHit]:
    """Walk candidates in ShortLex order, keeping each one not yet generated."""
    chosen: list[StabilizerHit] = []
    covered = _generated(list(base), data)
    for h in cands:
        if h.element not in covered:
            chosen.append(h)
            covered = _generated(list(base) + [c.element for c in chosen], data)
    return chosen


def assemble_normalizer(
    sub_affine: Subsystem,
    data: CartanData,
    automorphisms: Sequence[GroupElement] = (),
    max_len: int = DEFAULT_MAX_LEN,
    centralizer: Sequence[Subsystem] | None = None,
) -> NormalizerPresentation:
    """N(W_J') = N_J' x| W_J' for an affine-closed subsystem J'.

    The centralizer components default to the affine extensions of
    ``orthogonal_subsystem(J')``; pass them explicitly to keep custom labels.
    The diagram part of the complement is every element that maps the union of
    J' and the centralizer simple systems onto itself.
    """
    subgroup = [(f"s_{lab}", reflection_through(r, data)) for lab, r in zip(sub_affine.labels, sub_affine.roots)]
    if centralizer is None:
        centralizer = [affine_extension(c, data) for c in orthogonal_subsystem(sub_affine.roots, data)]
    centralizer = list(centralizer)

    targets = list(sub_affine.roots) + [r for c in centralizer for r in c.roots]
    k = len(sub_affine.roots)
    spans = []
    start = k
    for c in centralizer:
        spans.append(range(start, start + len(c.roots)))
        start += len(c.roots)

    hits = [
        h
        for h in stabilizer_search(targets, data, automorphisms, max_len)
        if all(h.induced_map.perm[i] < k for i in range(k))
    ]
    log: list[str] = [f"{len(hits)} diagram elements stabilize {sub_affine.name} and the centralizer simple systems"]

    def trivial_on(h: StabilizerHit, span: range) -> bool:
        return all(h.induced_map.perm[i] == i for i in span)

    blocks = []
    for idx, (comp, span) in enumerate(zip(centralizer, spans)):
        others = [s for j, s in enumerate(spans) if j != idx]
        cands = [h for h in hits if not trivial_on(h, span) and all(trivial_on(h, s) for s in others)]
        refl = [(f"s_{lab}", reflection_through(r, data)) for lab, r in zip(comp.labels, comp.roots)]
        blocks.append(Block(comp, refl, _greedy(cands, [], data)))

    base = [h.element for b in blocks for h in b.diagram]
    # diagram elements acting on J' alone, then whatever still permutes the
    # centralizer components among themselves
    residual = _greedy([h for h in hits if all(trivial_on(h, s) for s in spans)], base, data)
    if residual:
        blocks.append(Block(None, [], residual, "residual"))
        base += [h.element for h in residual]
    def keeps_components(h: StabilizerHit) -> bool:
        return all(h.induced_map.perm[i] in span for span in spans for i in span)

    mixed = _greedy([h for h in hits if keeps_components(h)], base, data)
    if mixed:
        blocks.append(Block(None, [], mixed, "mixed"))
        base += [h.element for h in mixed]
        log.append("elements acting on several components at once: " + ", ".join(h.word_text() for h in mixed))
    swaps = _greedy(hits, base, data)
    if swaps:
        blocks.append(Block(None, [], swaps, "component-permuting"))
        log.append("elements permuting centralizer components: " + ", ".join(h.word_text() for h in swaps))

    group = _generated([h.element for b in blocks for h in b.diagram], data)
    missing = [h.word_text() for h in hits if h.element not in group]
    if missing:
        raise IncompleteVerification("diagram elements not generated by the blocks: " + ", ".join(missing))
    log.append(f"blocks generate all {len(hits)} diagram elements")

    # every complement generator must permute the reflections of J'
    sub_set = set(sub_affine.roots)
    complement = [g for b in blocks for g in b.generators]
    for g in complement:
        ginv = g.inverse()
        for lab, r in zip(sub_affine.labels, sub_affine.roots):
            img = g.act(r)
            if img not in sub_set:
                raise IncompleteVerification(f"{g.word or 'element'} sends {lab} outside {sub_affine.name}")
            if g * reflection_through(r, data) * ginv != reflection_through(img, data):
                raise IncompleteVerification(f"conjugate of s_{lab} is not s_(g {lab})")
    log.append(f"conjugation closure verified for {len(complement)} complement generators")

    commuting = True
    for a, b in itertools.combinations([b for b in blocks if b.kind == "component"], 2):
        for x in a.generators:
            for y in b.generators:
                if not x.commutes_with(y):
                    commuting = False
    log.append("component blocks commute elementwise" if commuting else "component blocks do not commute")
    return NormalizerPresentation(sub_affine, subgroup, centralizer, hits, blocks, commuting, log, len(hits))
