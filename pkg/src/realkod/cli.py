"""Command-line interface: ``realkod {gallery,analyze,dot,script}``.

Exit status is 0 when the input validates and every requested computation
finished (an ``Unknown`` certification still counts as finished), 1 on
validation or computation failures and 2 on unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

from . import gallery
from .birational import BlowUpError, eliminate_imaginary_loops
from .documents import DocumentError, dumps, from_document, loads, run_script, script_of, to_document
from .homology import homology_report
from .kodaira import classify_real_boundary, kappa, kappa_real
from .pair import RealSNCPair, detect_imaginary_loops, is_snc, real_boundary, validate

EXIT_OK, EXIT_INVALID, EXIT_UNREADABLE = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise DocumentError(path, exc.strerror or str(exc)) from None


def load_pair(text: str) -> RealSNCPair:
    """Parse either a surface document or a script document."""
    doc = loads(text)
    try:
        if isinstance(doc, dict) and "curves" in doc and "components" not in doc:
            return run_script(doc)
        return from_document(doc)
    except DocumentError:
        raise
    except (TypeError, ValueError, KeyError, AttributeError, IndexError) as exc:
        raise DocumentError("document", f"malformed value ({exc})") from None


def analyze(pair: RealSNCPair, loop_elimination: bool = True) -> Tuple[dict, bool]:
    """JSON report for one pair and whether every computation completed."""
    problems = validate(pair)
    report = {"name": pair.name, "validate": problems, "is_snc": is_snc(pair)}
    if problems:
        return report, False
    ok = True
    k = kappa(pair)
    report["kappa"] = k.as_dict()
    if k.zariski is not None:
        report["zariski"] = k.zariski.as_dict(pair)
    if loop_elimination:
        try:
            target, trace = eliminate_imaginary_loops(pair)
            kr = classify_real_boundary(target)
            report["kappa_real"] = {**kr.as_dict(), "loop_elimination": trace.as_dict()}
            if kr.zariski is not None:
                report["zariski_real"] = kr.zariski.as_dict(target)
        except BlowUpError as exc:
            report["kappa_real"] = {"error": str(exc)}
            ok = False
    else:
        raw = classify_real_boundary(pair)
        report["kappa_real_raw"] = {
            **raw.as_dict(),
            "note": "K + B_R on the pair as given; imaginary loops NOT eliminated, "
                    "so this is not the real Kodaira dimension",
            "imaginary_loops": len(detect_imaginary_loops(pair)),
        }
    report["homology"] = homology_report(pair).as_dict()
    return report, ok


def to_dot(pair: RealSNCPair, include_tracked: bool = False) -> str:
    """Weighted dual graph of the boundary in DOT.

    Components of B_R are bold, other boundary components solid, conjugate
    ones dashed; edges at non-real points are dashed and multiplicities
    above one are printed as labels.
    """
    real_b = set(real_boundary(pair).coefficients)
    shown = [cid for cid in sorted(pair.components)
             if pair[cid].in_boundary or include_tracked]
    lines = [f"graph {json.dumps(pair.name or 'pair')} {{", "  node [shape=ellipse];"]
    for cid in shown:
        c = pair[cid]
        if not c.in_boundary:
            style = "dotted"
        elif c.reality.kind == "conjugate":
            style = "dashed"
        elif cid in real_b:
            style = "bold"
        else:
            style = "solid"
        lines.append(f"  c{cid} [label={json.dumps(f'{c.name} ({c.weight})')}, style={style}];")
    keep = set(shown)
    for e in pair.edges.values():
        if e.a in keep and e.b in keep:
            attrs = []
            if not e.is_real:
                attrs.append("style=dashed")
            if e.mult > 1:
                attrs.append(f'label="{e.mult}"')
            tail = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(f"  c{e.a} -- c{e.b}{tail};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- commands ----------------------------------------------------------------

def _gallery_row(name: str, params: tuple) -> dict:
    entry = gallery.ENTRIES[name]
    pair = entry.build(*params)
    hom = homology_report(pair)
    computed = {
        "kappa": str(kappa(pair).value),
        "kappa_real": str(kappa_real(pair).value),
        "torsion": hom.torsion_invariants,
        "weights": sorted(pair.weights()),
        "boundary_component_count": len(pair.boundary_ids()),
    }
    expected = gallery.expected_for(name, params)
    return {"name": name, "params": list(params), "expected": expected, "computed": computed,
            "agrees": all(computed[k] == v for k, v in expected.items())}


def cmd_gallery(args) -> int:
    if args.name == "list":
        for e in gallery.ENTRIES.values():
            params = " ".join(map(str, e.params))
            print(f"{e.name}{' ' + params if params else ''}")
        return EXIT_OK
    if args.name not in gallery.ENTRIES:
        print(f"unknown gallery entry {args.name!r}; try 'gallery list'", file=sys.stderr)
        return EXIT_UNREADABLE
    params = tuple(args.params) or gallery.ENTRIES[args.name].params
    try:
        if args.emit == "script":
            print(dumps(gallery.ENTRIES[args.name].script(*params)))
            return EXIT_OK
        if args.emit == "document":
            print(dumps(to_document(gallery.ENTRIES[args.name].build(*params))))
            return EXIT_OK
        row = _gallery_row(args.name, params)
    except (TypeError, ValueError) as exc:
        print(f"{args.name}: {exc}", file=sys.stderr)
        return EXIT_UNREADABLE
    if args.json:
        print(json.dumps(row, indent=2))
    else:
        print(f"{row['name']} {' '.join(map(str, params))}".rstrip())
        print(f"  {'invariant':<26}{'expected':<50}computed")
        for key, got in row["computed"].items():
            want = row["expected"].get(key, "-")
            mark = "" if key not in row["expected"] else ("  ok" if want == got else "  MISMATCH")
            print(f"  {key:<26}{str(want):<50}{got}{mark}")
    return EXIT_OK if row["agrees"] else EXIT_INVALID


def _analyze_one(path: str, loop_elimination: bool) -> Tuple[dict, int]:
    try:
        pair = load_pair(_read(path))
    except DocumentError as exc:
        return {"input": path, "error": str(exc)}, EXIT_UNREADABLE
    report, ok = analyze(pair, loop_elimination)
    return {"input": path, **report}, EXIT_OK if ok else EXIT_INVALID


def cmd_analyze(args) -> int:
    with ThreadPoolExecutor() as pool:
        results = list(pool.map(lambda p: _analyze_one(p, not args.no_loop_elimination), args.files))
    reports = [r for r, _ in results]
    print(json.dumps(reports[0] if len(reports) == 1 else reports, indent=2))
    for r in reports:
        if "error" in r:
            print(f"{r['input']}: {r['error']}", file=sys.stderr)
    return max(code for _, code in results)


def _load_or_report(path: str) -> Optional[RealSNCPair]:
    try:
        return load_pair(_read(path))
    except DocumentError as exc:
        print(f"{path}: {exc}", file=sys.stderr)
        return None


def cmd_dot(args) -> int:
    pair = _load_or_report(args.file)
    if pair is None:
        return EXIT_UNREADABLE
    text = to_dot(pair, include_tracked=args.all)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if not validate(pair) else EXIT_INVALID


def cmd_script(args) -> int:
    try:
        doc = loads(_read(args.file))
        pair = run_script(doc) if not args.reverse else from_document(doc)
    except DocumentError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_UNREADABLE
    if args.reverse:
        try:
            print(dumps(script_of(pair)))
        except ValueError as exc:
            print(f"{args.file}: {exc}", file=sys.stderr)
            return EXIT_INVALID
    else:
        print(dumps(to_document(pair)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realkod", description="Kodaira and real Kodaira dimensions of real SNC pairs.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gallery", help="build an example surface and compare with expected values")
    g.add_argument("name", help="entry name, or 'list'")
    g.add_argument("params", nargs="*", type=int, help="integer parameters, e.g. 'S 3 5'")
    g.add_argument("--json", action="store_true", help="print the comparison as JSON")
    g.add_argument("--emit", choices=["script", "document"],
                   help="print the blow-up script or the surface document instead")
    g.set_defaults(func=cmd_gallery)

    a = sub.add_parser("analyze", help="JSON report for surface or script documents")
    a.add_argument("files", nargs="+", help="input paths, '-' for stdin")
    a.add_argument("--no-loop-elimination", action="store_true",
                   help="report raw kappa(K + B_R) without removing imaginary loops")
    a.set_defaults(func=cmd_analyze)

    d = sub.add_parser("dot", help="weighted dual graph in DOT")
    d.add_argument("file")
    d.add_argument("--all", action="store_true", help="also draw tracked non-boundary curves")
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_dot)

    s = sub.add_parser("script", help="replay a script document into a surface document")
    s.add_argument("file")
    s.add_argument("--reverse", action="store_true",
                   help="turn a surface document with history back into a script")
    s.set_defaults(func=cmd_script)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
