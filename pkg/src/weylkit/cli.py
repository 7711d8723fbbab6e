"""Command-line front end (``weylkit``)."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cartan import CartanData, load_builtin
from .errors import WeylkitError
from .lattice import enumerate_finite_roots, height_key
from .normalizer import (
    DEFAULT_MAX_LEN,
    action_table,
    affine_extension,
    assemble_normalizer,
    make_subsystem,
    orthogonal_subsystem,
    stabilizer_search,
)
from .notation import format_coweight, format_root, parse_coweight, parse_root
from .translations import DEFAULT_KMAX, as_translation, quasi_translation_analysis
from .weylgroup import InfiniteUpToCap, act_on_coweight, element_order, evaluate_word, resolve_automorphism_group


def _load_data(args) -> CartanData:
    if args.cartan_file:
        return CartanData.from_json(Path(args.cartan_file).read_text())
    return load_builtin(args.type)


def _geb(data: CartanData):
    """The gamma/eta/beta fixture when the ambient is D5^(1), else ``None``."""
    from .fixtures import build_geb_system

    geb = build_geb_system()
    return geb if data == geb.data else None


def _names(data):
    geb = _geb(data)
    return dict(geb.names) if geb else {}


def _emit(args, obj: dict, markdown: str) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2, default=str))
    else:
        print(markdown)


def cmd_roots(args) -> int:
    data = _load_data(args)
    roots = sorted(enumerate_finite_roots(data), key=height_key)
    if args.positive:
        roots = [r for r in roots if all(x >= 0 for x in r)]
    obj = {"type": data.name, "count": len(roots), "roots": [list(r) for r in roots]}
    md = "\n".join([f"{len(roots)} roots"] + [f"- {format_root(r, data)}" for r in roots])
    _emit(args, obj, md)
    return 0


def cmd_eval(args) -> int:
    data = _load_data(args)
    names = _names(data)
    g = evaluate_word(args.word, data, names)
    order = element_order(g, args.order_cap)
    vec = as_translation(g)
    obj = {
        "word": args.word,
        "matrix": g.matrix.tolist(),
        "order": f"infinite up to {order.cap}" if isinstance(order, InfiniteUpToCap) else order,
        "identity": g.is_identity(),
        "translation": str(vec) if vec is not None else None,
        "images": [format_root(v, data) for v in g.images()],
    }
    if args.act_on:
        text = args.act_on
        if "h" in text and not any(n in text for n in names):
            image = format_coweight(act_on_coweight(g, parse_coweight(text, data)))
        else:
            image = format_root(g.act(parse_root(text, data, names)), data)
        obj["image"] = image
    lines = [f"word: {args.word or 'e'}", "matrix (columns are images of a0..an):"]
    lines += ["  " + " ".join(f"{x:3d}" for x in row) for row in g.matrix.tolist()]
    lines.append(f"order: {obj['order']}")
    lines.append(f"translation: {obj['translation'] or 'no'}")
    if "image" in obj:
        lines.append(f"image: {obj['image']}")
    _emit(args, obj, "\n".join(lines))
    return 0


def cmd_analyze(args) -> int:
    data = _load_data(args)
    geb = _geb(data)
    g = evaluate_word(args.word, data, dict(geb.names) if geb else None)
    rep = quasi_translation_analysis(g, geb.subsystems if geb else (), args.kmax)
    obj = {"word": args.word} | rep.to_json()
    lines = [f"{args.word}: power {rep.base_order} is a translation by {rep.vector}"]
    for name, info in obj["induced_maps"].items():
        lines.append(f"- {name}: " + (info if isinstance(info, str) else ", ".join(info["images"])))
    _emit(args, obj, "\n".join(lines))
    return 0


def _roots_arg(exprs, data):
    names = _names(data)
    return [parse_root(e, data, names) for e in exprs]


def cmd_centralizer(args) -> int:
    data = _load_data(args)
    seeds = _roots_arg(args.seeds, data)
    comps = orthogonal_subsystem(seeds, data)
    out = []
    for c in comps:
        entry = {"type": str(c.type), "simple_roots": [format_root(r, data) for r in c.roots]}
        if data.affine:
            entry["affine_node"] = format_root(affine_extension(c, data).roots[0], data)
        out.append(entry)
    md = "\n".join(f"- {e['type']}: {', '.join(e['simple_roots'])}"
                   + (f" (affine node {e['affine_node']})" if "affine_node" in e else "") for e in out) or "(empty)"
    _emit(args, {"components": out}, md)
    return 0


def cmd_stabilize(args) -> int:
    data = _load_data(args)
    targets = _roots_arg(args.targets, data)
    auts = resolve_automorphism_group(args.auts, data)
    hits = stabilizer_search(targets, data, auts, args.maxlen)
    obj = {"hits": [{"word": h.word_text(), "length": h.length, "perm": list(h.induced_map.perm)} for h in hits]}
    md = "\n".join(f"- {h.word_text()} (length {h.length}): {list(h.induced_map.perm)}" for h in hits)
    _emit(args, obj, md)
    return 0


def cmd_normalizer(args) -> int:
    data = _load_data(args)
    geb = _geb(data)
    auts = resolve_automorphism_group(args.auts, data)
    if geb and len(args.subsystem) == 1 and args.subsystem[0] in ("gamma", "eta", "beta"):
        sub = getattr(geb, args.subsystem[0])
        cen = [s for s in geb.subsystems if s is not sub]
    else:
        sub = make_subsystem("J", _roots_arg(args.subsystem, data), data)
        if not sub.affine:
            sub = affine_extension(sub, data)
        cen = None
    pres = assemble_normalizer(sub, data, auts, args.maxlen, cen)
    table = action_table([(h.word_text(), h.element) for h in pres.complement_generators],
                         [pres.subsystem] + pres.centralizer)
    obj = pres.to_json() | {"action_table": table.to_json()}
    lines = [f"normalizer of W_{sub.name} ({sub.type})"]
    for b in pres.blocks:
        head = f"{b.component.name} block" if b.component else b.kind
        gens = [lab for lab, _ in b.reflections] + [h.word_text() for h in b.diagram]
        lines.append(f"- {head}: <{', '.join(gens)}>")
    lines += ["", table.to_markdown(), ""] + [f"- {v}" for v in pres.verification]
    _emit(args, obj, "\n".join(lines))
    return 0


def cmd_fixtures(args) -> int:
    from .fixtures import fixture_catalog, fixture_element

    cat = fixture_catalog()
    if args.action == "list":
        _emit(args, cat, "\n".join(f"- {k}: {v['word']}  ({v['description']})" for k, v in cat.items()))
        return 0
    if args.name not in cat:
        print(f"unknown fixture {args.name!r}", file=sys.stderr)
        return 2
    g = fixture_element(args.name)
    vec = as_translation(g)
    obj = cat[args.name] | {"matrix": g.matrix.tolist(), "translation": str(vec) if vec else None,
                            "images": [format_root(v, g.data) for v in g.images()]}
    md = "\n".join(f"{k}: {v}" for k, v in obj.items())
    _emit(args, obj, md)
    return 0


def cmd_reproduce(args) -> int:
    from .fixtures import reproduce

    rep = reproduce(args.suite)
    _emit(args, rep.to_json(), rep.to_markdown())
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", default="D5~", help="builtin Cartan type, e.g. D5~, A3~, A1~ (default D5~)")
    common.add_argument("--cartan-file", help="JSON file with size, matrix and marks")
    common.add_argument("--format", choices=("json", "md"), default="md")

    p = argparse.ArgumentParser(prog="weylkit", description="Exact computations in affine Weyl groups.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("roots", parents=[common], help="list finite roots")
    s.add_argument("--positive", action="store_true")
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("eval", parents=[common], help="evaluate a word")
    s.add_argument("word")
    s.add_argument("--act-on", help="root or coweight expression")
    s.add_argument("--order-cap", type=int, default=64)
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("analyze", parents=[common], help="quasi-translation analysis of a word")
    s.add_argument("word")
    s.add_argument("--kmax", type=int, default=DEFAULT_KMAX)
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("centralizer", parents=[common], help="roots orthogonal to the seeds")
    s.add_argument("--seeds", nargs="+", required=True)
    s.set_defaults(func=cmd_centralizer)

    s = sub.add_parser("stabilize", parents=[common], help="shortest words permuting the targets")
    s.add_argument("--targets", nargs="+", required=True)
    s.add_argument("--auts", default=None, help="automorphism group name (cyc4, all) or comma separated names")
    s.add_argument("--maxlen", type=int, default=DEFAULT_MAX_LEN)
    s.set_defaults(func=cmd_stabilize)

    s = sub.add_parser("normalizer", parents=[common], help="normalizer of a reflection subgroup")
    s.add_argument("--subsystem", nargs="+", required=True, help="gamma, eta, beta or root expressions")
    s.add_argument("--auts", default="cyc4")
    s.add_argument("--maxlen", type=int, default=DEFAULT_MAX_LEN)
    s.set_defaults(func=cmd_normalizer)

    s = sub.add_parser("fixtures", parents=[common], help="named elements")
    s.add_argument("action", choices=("list", "show"))
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_fixtures)

    s = sub.add_parser("reproduce", parents=[common], help="run the reproduction suites")
    s.add_argument("--suite", default="all", choices=("all", "geb", "takenawa", "os", "secondvar", "examples"))
    s.set_defaults(func=cmd_reproduce)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "fixtures" and args.action == "show" and not args.name:
        print("fixtures show needs a name", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except WeylkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
