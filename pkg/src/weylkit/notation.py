"""Text notation for roots and coweights.

Roots use the compressed subscript notation: ``a0123`` is alpha_0 + alpha_1 +
alpha_2 + alpha_3 and repeated digits add multiplicity (``a01223345`` is delta
for D5^(1)).  Expressions combine terms with ``+``/``-`` and integer
coefficients: ``a0 + d``, ``-a345``, ``2a1 - d``, ``[1,0,2,2,1,1]``.  ``d`` or
``delta`` is the null root and extra names (``gamma0`` ...) can be supplied.

Coweights are sums of ``h<i>`` and ``hd`` with rational coefficients:
``h1 - h2``, ``1/2 h3 + hd``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

from .cartan import CartanData
from .errors import ParseError
from .lattice import CoweightVec, RootVec, null_root

_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<coef>\d+(?:/\d+)?)?\s*\*?\s*"
    r"(?P<atom>\[[^\]]*\]|a_\d+|a\d+|alpha_?\d+|delta|d\b|h_?delta|hd|h_?\d+|[A-Za-z_][A-Za-z_0-9]*)\s*"
)


def _terms(text: str):
    pos = 0
    first = True
    if not text.strip():
        raise ParseError("empty expression", text, 0)
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("unexpected input", text, pos)
        if not first and m.group("sign") is None:
            raise ParseError("missing '+' or '-' between terms", text, m.start("atom"))
        sign = -1 if m.group("sign") == "-" else 1
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        yield sign * coef, m.group("atom"), m.start("atom")
        pos = m.end()
        first = False


def _coordinate_list(atom: str, size: int, text: str, pos: int) -> list[Fraction]:
    body = atom[1:-1].strip()
    try:
        vals = [Fraction(x.strip()) for x in body.split(",")] if body else []
    except ValueError:
        raise ParseError("bad coordinate list", text, pos) from None
    if len(vals) != size:
        raise ParseError(f"coordinate list has {len(vals)} entries, expected {size}", text, pos)
    return vals


def parse_root(text: str, data: CartanData, names: Mapping[str, RootVec] | None = None) -> RootVec:
    size = data.size
    if text.strip() == "0":
        return RootVec.zero(size)
    total = [Fraction(0)] * size
    for coef, atom, pos in _terms(text):
        if atom.startswith("["):
            vec = _coordinate_list(atom, size, text, pos)
        elif atom in ("d", "delta"):
            vec = list(null_root(data))
        elif re.fullmatch(r"a_\d+|alpha_\d+", atom):
            idx = int(atom.split("_")[1])
            if idx >= size:
                raise ParseError(f"node {idx} out of range", text, pos)
            vec = [int(j == idx) for j in range(size)]
        elif re.fullmatch(r"a\d+|alpha\d+", atom):
            digits = atom.lstrip("alph")
            if size > 10 and len(digits) > 1:
                raise ParseError("compressed notation is ambiguous for more than 10 nodes; use a_<i>", text, pos)
            vec = [0] * size
            for ch in digits:
                idx = int(ch)
                if idx >= size:
                    raise ParseError(f"node {idx} out of range", text, pos)
                vec[idx] += 1
        elif names and atom in names:
            vec = list(names[atom])
        else:
            raise ParseError(f"unknown root name {atom!r}", text, pos)
        total = [t + coef * v for t, v in zip(total, vec)]
    if any(t.denominator != 1 for t in total):
        raise ParseError("root coordinates must be integers", text)
    return RootVec(int(t) for t in total)


def parse_coweight(text: str, data: CartanData, names: Mapping[str, CoweightVec] | None = None) -> CoweightVec:
    size = data.size
    if text.strip() == "0":
        return CoweightVec.zero(size)
    total = [Fraction(0)] * size
    for coef, atom, pos in _terms(text):
        if atom.startswith("["):
            vec = _coordinate_list(atom, size, text, pos)
        elif atom in ("hd", "h_delta", "hdelta"):
            vec = [0] * (size - 1) + [1]
        elif re.fullmatch(r"h_?\d+", atom):
            idx = int(atom.lstrip("h_"))
            if not 1 <= idx < size:
                raise ParseError(f"fundamental weight h{idx} out of range 1..{size - 1}", text, pos)
            vec = [int(j == idx - 1) for j in range(size)]
        elif names and atom in names:
            vec = list(names[atom])
        else:
            raise ParseError(f"unknown coweight term {atom!r}", text, pos)
        total = [t + coef * v for t, v in zip(total, vec)]
    return CoweightVec(total)


def compressed(v: RootVec) -> str | None:
    """``a0123`` style string when all coordinates share a sign, else ``None``."""
    coords = list(v)
    if len(coords) > 10:
        return None
    if not any(coords):
        return "0"
    if all(c >= 0 for c in coords):
        sign = ""
    elif all(c <= 0 for c in coords):
        sign = "-"
        coords = [-c for c in coords]
    else:
        return None
    return sign + "a" + "".join(str(i) * c for i, c in enumerate(coords))


def format_root(v: RootVec, data: CartanData | None = None) -> str:
    """Human-readable root: the shortest of its compressed form and the
    compressed forms of v - k delta for k = v_0 and v_0 - 1 (``a0 + d``)."""
    options = []
    c = compressed(v)
    if c is not None:
        options.append(c)
    if data is not None and data.affine:
        delta = null_root(data)
        for k in (v[0], v[0] - 1):
            c = compressed(v - k * delta) if k else None
            if c is not None:
                shift = f"{'' if abs(k) == 1 else abs(k)}d"
                options.append(f"{'' if k > 0 else '-'}{shift}" if c == "0" else f"{c} {'+' if k > 0 else '-'} {shift}")
    if options:
        return min(options, key=len)
    return _linear_combination(list(v), lambda i: f"a{i}")


def _linear_combination(coeffs, label) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mag = abs(c)
        term = label(i) if mag == 1 else f"{mag} {label(i)}" if isinstance(mag, Fraction) and mag.denominator != 1 else f"{mag}{label(i)}"
        parts.append(("-" if c < 0 else "+", term))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, t in parts[1:]:
        out += f" {s} {t}"
    return out


def format_coweight(f: CoweightVec) -> str:
    n = len(f) - 1
    return _linear_combination(list(f), lambda i: f"h{i + 1}" if i < n else "hd")
