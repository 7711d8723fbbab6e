"""Extended affine Weyl group elements as integer matrices on the root space.

Column j of ``GroupElement.matrix`` holds the coordinates of g(alpha_j).
Products follow function composition: ``g * h`` applies h first, and a word
``s1 s3 s2`` means s1 o s3 o s2 (so s2 acts first).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

import numpy as np

from . import linalg
from .cartan import CartanData, automorphism_problem
from .errors import DimensionMismatch, NotDiagramSymmetry, ParseError
from .lattice import CoweightVec, RootVec, bilinear, norm, pairing_matrix, require_real_root

# guards int64 products against silent overflow
_ENTRY_LIMIT = 2**40


class GroupElement:
    __slots__ = ("matrix", "word", "data", "_key", "_dual")

    def __init__(self, matrix, data: CartanData, word: Sequence[str] = ()):
        m = np.array(matrix, dtype=np.int64)
        if m.shape != (data.size, data.size):
            raise DimensionMismatch(f"matrix shape {m.shape} does not fit a {data.size}-node system")
        m.setflags(write=False)
        self.matrix = m
        self.word = tuple(word)
        self.data = data
        self._key = None
        self._dual = None

    @classmethod
    def identity(cls, data: CartanData) -> "GroupElement":
        return cls(np.eye(data.size, dtype=np.int64), data)

    @property
    def size(self) -> int:
        return self.data.size

    @property
    def key(self) -> bytes:
        if self._key is None:
            self._key = self.matrix.tobytes()
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.size == other.size and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.size != self.size:
            raise DimensionMismatch("elements act on different spaces")
        m = self.matrix @ other.matrix
        if np.abs(m).max() > _ENTRY_LIMIT:
            raise OverflowError("matrix entries grew beyond the exact int64 range")
        return GroupElement(m, self.data, self.word + other.word)

    def inverse(self) -> "GroupElement":
        inv = linalg.inverse(self.matrix.tolist())
        if any(x.denominator != 1 for row in inv for x in row):
            raise ValueError("matrix is not unimodular")
        word = (f"({' '.join(self.word)})^-1",) if self.word else ()
        return GroupElement([[int(x) for x in row] for row in inv], self.data, word)

    def __pow__(self, k: int) -> "GroupElement":
        base = self if k >= 0 else self.inverse()
        result = GroupElement.identity(self.data)
        for _ in range(abs(k)):
            result = result * base
        if self.word and k not in (0, 1):
            result.word = (f"({' '.join(self.word)})^{k}",)
        elif k == 1:
            result.word = self.word
        return result

    def conjugate(self, other: "GroupElement") -> "GroupElement":
        """self * other * self^-1."""
        return self * other * self.inverse()

    def commutes_with(self, other: "GroupElement") -> bool:
        return self * other == other * self

    def act(self, v: RootVec) -> RootVec:
        if len(v) != self.size:
            raise DimensionMismatch(f"vector of length {len(v)} for a {self.size}-node system")
        return RootVec(self.matrix @ np.array(v.coords, dtype=np.int64))

    __call__ = act

    @property
    def dual_matrix(self) -> np.ndarray:
        """Matrix of the contragredient action in the basis h_1..h_n, h_delta."""
        if self._dual is None:
            p = pairing_matrix(self.data)
            minv_t = linalg.transpose(linalg.inverse(self.matrix.tolist()))
            f = linalg.matmul(linalg.matmul(linalg.inverse(p), minv_t), p)
            d = np.array([[int(x) for x in row] for row in f], dtype=np.int64)
            d.setflags(write=False)
            self._dual = d
        return self._dual

    def is_identity(self) -> bool:
        return bool((self.matrix == np.eye(self.size, dtype=np.int64)).all())

    def images(self) -> list[RootVec]:
        """Images of alpha_0..alpha_n (the matrix columns)."""
        return [RootVec(col) for col in self.matrix.T]

    def determinant(self) -> int:
        return int(linalg.det(self.matrix.tolist()))

    def to_json(self) -> dict:
        return {"matrix": self.matrix.tolist(), "word": list(self.word)}

    def __repr__(self) -> str:
        w = " ".join(self.word) if self.word else "e"
        return f"GroupElement({w!r}, {self.matrix.tolist()})"


class InfiniteUpToCap(NamedTuple):
    cap: int

    def __str__(self) -> str:
        return f"infinite (no power <= {self.cap} is the identity)"


@dataclass(frozen=True)
class GeneratorToken:
    """One letter of a word: a simple reflection, a named or explicit diagram
    automorphism, or the reflection through an arbitrary real root."""

    kind: str
    index: int | None = None
    name: str = ""
    perm: tuple[int, ...] | None = None
    root: RootVec | None = None

    def __str__(self) -> str:
        if self.kind == "reflection":
            return f"s{self.index}"
        return self.name


def simple_reflection(i: int, data: CartanData) -> GroupElement:
    """s_i alpha_j = alpha_j - A_ji alpha_i."""
    n = data.size
    if not 0 <= i < n:
        raise IndexError(f"node {i} out of range 0..{n - 1}")
    m = np.eye(n, dtype=np.int64)
    for j in range(n):
        m[i, j] -= data.matrix[j][i]
    return GroupElement(m, data, (f"s{i}",))


def diagram_automorphism(perm: Sequence[int], data: CartanData, name: str = "") -> GroupElement:
    """Permutation matrix alpha_i -> alpha_{perm[i]}."""
    perm = tuple(int(p) for p in perm)
    problem = automorphism_problem(data.matrix, perm) if len(perm) == data.size else "wrong length"
    if problem:
        raise NotDiagramSymmetry(f"{list(perm)}: {problem}")
    m = np.zeros((data.size, data.size), dtype=np.int64)
    for i, p in enumerate(perm):
        m[p, i] = 1
    return GroupElement(m, data, (name or f"aut:{list(perm)}".replace(" ", ""),))


def reflection_through(alpha: RootVec, data: CartanData) -> GroupElement:
    """s_alpha(v) = v - 2 (alpha, v)/(alpha, alpha) alpha for a real root alpha."""
    require_real_root(alpha, data)
    na = norm(alpha, data)
    n = data.size
    m = np.eye(n, dtype=np.int64)
    for j in range(n):
        c = 2 * bilinear(alpha, RootVec.basis(j, n), data) / na
        if c.denominator != 1:
            raise ValueError(f"non-integral reflection coefficient {c}")
        for i in range(n):
            m[i, j] -= int(c) * alpha[i]
    return GroupElement(m, data, (f"s[{','.join(map(str, alpha))}]",))


def act_on_coweight(g: GroupElement, f: CoweightVec) -> CoweightVec:
    """Contragredient action, characterized by <g v, g f> = <v, f>."""
    if len(f) != g.size:
        raise DimensionMismatch(f"coweight of length {len(f)} for a {g.size}-node system")
    d = g.dual_matrix
    return CoweightVec(sum((int(d[i, j]) * f[j] for j in range(g.size)), Fraction(0)) for i in range(g.size))


def element_order(g: GroupElement, cap: int = 64) -> int | InfiniteUpToCap:
    if cap < 1:
        raise ValueError("cap must be >= 1")
    p = g
    for k in range(1, cap + 1):
        if p.is_identity():
            return k
        if k < cap:
            p = p * g
    return InfiniteUpToCap(cap)


# ---------------------------------------------------------------------------
# words

_ITEM = re.compile(r"\s*(\(|\)|[^\s()^]+)(\^-?\d+)?")


def _token_element(tok: str, data: CartanData, names: Mapping[str, RootVec] | None) -> GroupElement:
    auts = data.automorphism_map
    if tok in ("e", "id", "1"):
        return GroupElement.identity(data)
    m = re.fullmatch(r"s(\d+)", tok)
    if m:
        digits = m.group(1)
        if len(digits) > 1 and data.size <= 10:
            # compressed product s_{i...j} = s_i ... s_j
            g = GroupElement.identity(data)
            for ch in digits:
                g = g * simple_reflection(int(ch), data)
            return g
        return simple_reflection(int(digits), data)
    m = re.fullmatch(r"s_(\d+)", tok)
    if m:
        return simple_reflection(int(m.group(1)), data)
    if tok.startswith("s_") or (tok.startswith("s[") and tok.endswith("]")):
        from .notation import parse_root

        expr = tok[2:] if tok.startswith("s_") else tok[2:-1]
        g = reflection_through(parse_root(expr, data, names), data)
        g.word = (tok,)
        return g
    if tok in auts:
        return diagram_automorphism(auts[tok], data, tok)
    if tok.startswith("aut:"):
        body = tok[4:].strip()
        try:
            perm = [int(x) for x in body.strip("[]").split(",")]
        except ValueError:
            raise ParseError(f"bad automorphism image list {body!r}") from None
        return diagram_automorphism(perm, data, tok)
    raise ParseError(f"unknown generator {tok!r}")


def parse_tokens(text: str, data: CartanData) -> list[GeneratorToken]:
    """Flat token list for a word without parentheses or powers."""
    out = []
    for tok in text.split():
        m = re.fullmatch(r"s_?(\d+)", tok)
        auts = data.automorphism_map
        if m and (len(m.group(1)) == 1 or "_" in tok or data.size > 10):
            idx = int(m.group(1))
            if idx >= data.size:
                raise ParseError(f"node {idx} out of range in {tok!r}")
            out.append(GeneratorToken("reflection", index=idx))
        elif m:
            out.extend(GeneratorToken("reflection", index=int(ch)) for ch in m.group(1))
        elif tok in auts:
            out.append(GeneratorToken("automorphism", name=tok, perm=auts[tok]))
        elif tok.startswith("aut:"):
            perm = tuple(int(x) for x in tok[4:].strip("[]").split(","))
            out.append(GeneratorToken("automorphism", name=tok, perm=perm))
        else:
            raise ParseError(f"unknown generator {tok!r}")
    return out


def evaluate_word(word: str | Iterable[Union[str, GeneratorToken]], data: CartanData,
                  names: Mapping[str, RootVec] | None = None) -> GroupElement:
    """Evaluate a word; the rightmost letter acts first.

    Text words accept whitespace separated letters (``s0 s1 s4 s5``,
    ``sigma12``, ``aut:[5,4,3,2,0,1]``, compressed ``s232``, root reflections
    ``s_a0123`` / ``s_gamma1``), parentheses and integer powers (``(s1 s2)^-2``).
    """
    if isinstance(word, str):
        g = _parse_word(word, data, names)
        g.word = tuple(word.split())
        return g
    g = GroupElement.identity(data)
    letters = []
    for tok in word:
        if isinstance(tok, GeneratorToken):
            if tok.kind == "reflection":
                h = simple_reflection(tok.index, data)
            elif tok.kind == "automorphism":
                h = diagram_automorphism(tok.perm, data, tok.name)
            else:
                h = reflection_through(tok.root, data)
            letters.append(str(tok))
        else:
            h = _parse_word(str(tok), data, names)
            letters.append(str(tok))
        g = g * h
    g.word = tuple(letters)
    return g


def _parse_word(text: str, data: CartanData, names) -> GroupElement:
    stack: list[GroupElement] = [GroupElement.identity(data)]
    opens: list[int] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _ITEM.match(text, pos)
        if not m:
            raise ParseError("unexpected input", text, pos)
        item, power = m.group(1), m.group(2)
        if item == "(":
            if power:
                raise ParseError("power applied to '('", text, m.start(2))
            stack.append(GroupElement.identity(data))
            opens.append(m.start(1))
        elif item == ")":
            if not opens:
                raise ParseError("unbalanced ')'", text, m.start(1))
            opens.pop()
            inner = stack.pop()
            if power:
                inner = inner ** int(power[1:])
            stack[-1] = stack[-1] * inner
        else:
            try:
                g = _token_element(item, data, names)
            except ParseError as exc:
                raise ParseError(str(exc), text, m.start(1)) from None
            except IndexError as exc:
                raise ParseError(str(exc), text, m.start(1)) from None
            if power:
                g = g ** int(power[1:])
            stack[-1] = stack[-1] * g
        pos = m.end()
    if opens:
        raise ParseError("unbalanced '('", text, opens[-1])
    return stack[0]


def generate_group(generators: Sequence[GroupElement], cap: int = 10_000) -> list[GroupElement]:
    """All elements of the (finite) group generated, in breadth-first order."""
    if not generators:
        return []
    ident = GroupElement.identity(generators[0].data)
    seen = {ident: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in generators:
                h = g * s
                if h not in seen:
                    seen[h] = h
                    if len(seen) > cap:
                        raise ValueError(f"generated group exceeds {cap} elements")
                    nxt.append(h)
        frontier = nxt
    return list(seen)


def resolve_automorphism_group(spec: str | Sequence[str] | None, data: CartanData) -> list[GroupElement]:
    """Generators for a named automorphism subgroup (``cyc4``), a comma separated
    list of automorphism names, or nothing (``None`` / ``"none"``)."""
    if spec is None or spec == "none" or spec == []:
        return []
    groups = data.aut_group_map
    auts = data.automorphism_map
    names: Sequence[str]
    if isinstance(spec, str):
        names = groups[spec] if spec in groups else [s for s in spec.split(",") if s]
    else:
        names = list(spec)
    out = []
    for name in names:
        if name in auts:
            out.append(diagram_automorphism(auts[name], data, name))
        elif name.startswith("aut:"):
            out.append(_token_element(name, data, None))
        else:
            raise ParseError(f"unknown automorphism {name!r}")
    return out


@dataclass(frozen=True)
class InducedMap:
    """How an element permutes an ordered root list, up to multiples of delta.

    ``g(roots[i]) = roots[perm[i]] + shifts[i] * delta``.
    """

    perm: tuple[int, ...]
    shifts: tuple[int, ...]

    @property
    def is_permutation_only(self) -> bool:
        return not any(self.shifts)

    @property
    def is_trivial(self) -> bool:
        return self.perm == tuple(range(len(self.perm))) and not any(self.shifts)

    @property
    def fixes_pointwise_mod_delta(self) -> bool:
        return self.perm == tuple(range(len(self.perm)))

    def permutation_order(self) -> int:
        from math import lcm

        seen: set[int] = set()
        order = 1
        for start in range(len(self.perm)):
            if start in seen:
                continue
            length, i = 0, start
            while i not in seen:
                seen.add(i)
                i = self.perm[i]
                length += 1
            order = lcm(order, length)
        return order

    def describe(self, labels: Sequence[str]) -> list[str]:
        out = []
        for i, (j, k) in enumerate(zip(self.perm, self.shifts)):
            tgt = labels[j]
            if k:
                tgt += f" {'+' if k > 0 else '-'} {'' if abs(k) == 1 else abs(k)}d"
            out.append(f"{labels[i]} -> {tgt}")
        return out


def induced_map(g: GroupElement, roots: Sequence[RootVec]) -> InducedMap | None:
    """The induced map of g on ``roots``, or ``None`` if g does not stabilize
    the list modulo delta."""
    data = g.data
    delta = np.array(data.marks, dtype=np.int64)
    mat = np.array([r.coords for r in roots], dtype=np.int64).T
    images = g.matrix @ mat
    perm, shifts = [], []
    for col in images.T:
        hit = None
        for j, r in enumerate(roots):
            diff = col - mat[:, j]
            k = diff[0]  # delta has c_0 = 1
            if (diff == k * delta).all():
                hit = (j, int(k))
                break
        if hit is None:
            return None
        perm.append(hit[0])
        shifts.append(hit[1])
    if sorted(perm) != list(range(len(roots))):
        return None
    return InducedMap(tuple(perm), tuple(shifts))
