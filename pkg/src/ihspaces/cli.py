"""Command-line interface.

Exit codes: 0 success (including an UNDETERMINED solve), 1 input error,
2 inconsistent exact sequence, 3 chain-model verification mismatch.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import warnings
from pathlib import Path

from . import catalog, perversity
from .complexes import (
    GradedBetti,
    FacetParseError,
    SimplicialComplex,
    betti,
    chain_complex,
    parse_facets,
)
from .formulas import (
    ConeSpaceSpec,
    HypothesisWarning,
    SuspensionSpaceSpec,
    hi_cone_chain_model,
    hi_open_cone,
    hi_suspension,
    hi_suspension_chain_model,
    ih_open_cone,
)
from .les import InconsistentSequenceError, MVProblem, format_solution, mayer_vietoris, parse_sequence, solve_exact
from .tables import BettiDocumentError, betti_document, format_table, parse_betti_document

EXIT_OK, EXIT_INPUT, EXIT_INCONSISTENT, EXIT_MISMATCH = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(out, text: str = ""):
    out.write(text + "\n")


def _table(b: GradedBetti, args, dim: int) -> str:
    return format_table(b, dense_upto=dim if args.dense else None)


def _load_link(path: str) -> tuple[SimplicialComplex | None, GradedBetti, int]:
    """Facet file or betti-table JSON; returns (complex or None, betti, dim)."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    if path.endswith(".json") or text.lstrip().startswith("{"):
        try:
            b, dim, reduced = parse_betti_document(text)
        except BettiDocumentError as exc:
            raise InputError(f"{path}: {exc}") from None
        if not reduced:
            ranks = dict(b.ranks)
            ranks[0] = ranks.get(0, 0) - 1
            if ranks[0] < 0:
                raise InputError(f"{path}: unreduced table needs rank >= 1 in degree 0")
            b = GradedBetti(ranks, b.top_degree)
        return None, b, dim
    try:
        k = parse_facets(text)
    except FacetParseError as exc:
        raise InputError(f"{path}: {exc}") from None
    if not k.simplices:
        raise InputError(f"{path}: empty complex has no link dimension")
    return k, betti(chain_complex(k)), k.dimension


def _parse_perversity(args) -> perversity.Perversity:
    # ``--extended LIST`` is shorthand for ``--extended --perversity LIST``
    token = args.extended if isinstance(args.extended, str) else args.perversity
    if getattr(args, "perversity_arg", None):
        token = args.perversity_arg
    try:
        return perversity.parse_perversity(token, allow_extended=bool(args.extended))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _perversities(args, dim: int) -> list[perversity.Perversity]:
    if args.sweep_perversities:
        return perversity.sweep(dim)
    return [_parse_perversity(args)]


def _spec(cls, k, b, dim, args):
    try:
        return cls(k if k is not None else b, dim, not args.no_simply_connected)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _cutoff(dim, p):
    try:
        return perversity.cutoff_degree(dim, p)
    except perversity.DomainError as exc:
        raise InputError(str(exc)) from None


# ---------------------------------------------------------------------------
# commands


def cmd_homology(args, out) -> int:
    try:
        k = parse_facets(Path(args.facets).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {args.facets}: {exc.strerror}") from None
    except FacetParseError as exc:
        raise InputError(f"{args.facets}: {exc}") from None
    b = betti(chain_complex(k, reduced=not args.unreduced))
    if not k.simplices:
        if args.format == "json":
            _emit(out, json.dumps(betti_document(b, -1, not args.unreduced), sort_keys=True))
            return EXIT_OK
        _emit(out, "# empty complex: no simplices; reduced homology is Q in degree -1")
        _emit(out, "-1: 1" if not args.unreduced else "(none)")
        _emit(out, f"euler: {b.euler()}")
        return EXIT_OK
    if args.format == "json":
        _emit(out, json.dumps(betti_document(b, k.dimension, not args.unreduced), sort_keys=True))
        return EXIT_OK
    _emit(out, _table(b, args, k.dimension))
    _emit(out, f"euler: {b.euler()}")
    return EXIT_OK


def _verify(label, model, formula, out) -> bool:
    ok = model == formula
    _emit(out, f"verify {label}: {'MATCH' if ok else 'MISMATCH'}")
    if not ok:
        _emit(out, f"  chain model: {dict(model.ranks)}")
        _emit(out, f"  closed form: {dict(formula.ranks)}")
    return ok


def _run_space(args, out, suspension: bool) -> int:
    k, b, dim = _load_link(args.input)
    cls = SuspensionSpaceSpec if suspension else ConeSpaceSpec
    spec = _spec(cls, k, b, dim, args)
    theory = "hi" if suspension else args.theory
    kind = "suspension" if suspension else "cone"
    records = []
    all_ok = True
    if args.verify and k is None:
        print("--verify needs a facet file; skipped", file=sys.stderr)
    for p in _perversities(args, dim):
        cut = _cutoff(dim, p)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", HypothesisWarning)
            tables = {}
            if theory in ("ih", "both"):
                tables["ih"] = ih_open_cone(spec, p)
            if theory in ("hi", "both"):
                tables["hi"] = hi_suspension(spec, p) if suspension else hi_open_cone(spec, p)
        record = {"perversity": p.label, "cutoff": cut}
        record.update({name: betti_document(t, dim + 1) for name, t in tables.items()})
        if args.format == "table":
            _emit(out, f"# {kind} over {Path(args.input).name}, l={dim}, perversity {p.label}, k={cut}")
            for note in spec.notes():
                _emit(out, f"# {note}")
            for name, t in tables.items():
                _emit(out, name.upper())
                _emit(out, _table(t, args, dim + 1))
        if args.verify and k is not None:
            model = hi_suspension_chain_model(k, p) if suspension else hi_cone_chain_model(k, p)
            target = tables["hi"] if "hi" in tables else hi_open_cone(spec, p)
            if args.format == "table":
                ok = _verify("HI chain model", model, target, out)
            else:
                ok = model == target
                record["verify"] = "MATCH" if ok else "MISMATCH"
            all_ok &= ok
        records.append(record)
    if args.format == "json":
        payload = records if args.sweep_perversities else records[0]
        _emit(out, json.dumps(payload, sort_keys=True))
    return EXIT_OK if all_ok else EXIT_MISMATCH


def cmd_cone(args, out) -> int:
    return _run_space(args, out, suspension=False)


def cmd_suspension(args, out) -> int:
    return _run_space(args, out, suspension=True)


def cmd_example(args, out) -> int:
    p = _parse_perversity(args)
    try:
        report = catalog.run_example(args.name, p)
    except catalog.UnknownEntryError as exc:
        raise InputError(str(exc)) from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    entry = catalog.get(args.name)
    link = catalog.get(report.construction[1])
    top = entry.dim
    cmp_ = report.comparison
    if args.format == "json":
        doc = {
            "name": report.name,
            "construction": list(report.construction),
            "perversity": cmp_.perversity,
            "cutoff": report.cutoff,
            "hi": betti_document(cmp_.hi, top),
            "ordinary": betti_document(cmp_.ordinary, top),
            "differ": sorted(cmp_.differ),
        }
        if cmp_.ih is not None:
            doc["ih"] = betti_document(cmp_.ih, top)
        _emit(out, json.dumps(doc, sort_keys=True))
        return EXIT_OK
    kind, link_name = report.construction
    _emit(out, f"# {report.name}: {kind} over {link_name} (l={link.dim}), "
               f"perversity {cmp_.perversity}, k={report.cutoff}")
    if cmp_.ih is not None:
        _emit(out, "IH")
        _emit(out, _table(cmp_.ih, args, top))
    else:
        _emit(out, "IH: not computed for suspensions")
    _emit(out, "HI")
    _emit(out, _table(cmp_.hi, args, top))
    if cmp_.ih is None:
        _emit(out, "ordinary H~ of the model space")
        _emit(out, _table(cmp_.ordinary, args, top))
        _emit(out, f"differ (HI vs ordinary): {_degrees(cmp_.differ)}")
    else:
        _emit(out, f"differ: {_degrees(cmp_.differ)}")
    for note in cmp_.notes:
        _emit(out, f"note: {note}")
    for line in report.provenance:
        _emit(out, f"source: {line}")
    return EXIT_OK


def _degrees(ds) -> str:
    return ", ".join(map(str, sorted(ds))) if ds else "(none)"


def load_mv_problem(text: str) -> MVProblem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    try:
        tables = [parse_betti_document(doc[key])[0] for key in ("A", "B", "intersection")]
        raw = doc.get("ranks", {})
        ranks = {int(j): r for j, r in raw.items()}
    except KeyError as exc:
        raise InputError(f"missing field {exc}") from None
    except (BettiDocumentError, ValueError, AttributeError) as exc:
        raise InputError(str(exc)) from None
    return MVProblem(*tables, ranks)


def cmd_mv(args, out) -> int:
    try:
        text = Path(args.problem).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.problem}: {exc.strerror}") from None
    problem = load_mv_problem(text)
    result = mayer_vietoris(problem)
    if not result.determined:
        _emit(out, "UNDETERMINED: supplied ranks do not pin the union")
        for r in result.residuals:
            _emit(out, f"constraint: {r}")
        return EXIT_OK
    if args.format == "json":
        _emit(out, json.dumps(betti_document(result.betti, problem.top() + 1), sort_keys=True))
    else:
        _emit(out, _table(result.betti, args, problem.top() + 1))
    return EXIT_OK


def cmd_sequence(args, out) -> int:
    try:
        spec = parse_sequence(Path(args.file).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    sol = solve_exact(spec)
    if not sol.determined:
        _emit(out, "UNDETERMINED")
    out.write(format_solution(sol))
    return EXIT_OK


def cmd_catalog(args, out) -> int:
    if args.format == "json":
        _emit(out, catalog.export_json())
        return EXIT_OK
    for name, e in catalog.CATALOG.items():
        what = f"{e.construction[0]} over {e.construction[1]}" if e.is_composite else f"l={e.dim}"
        _emit(out, f"{name}: {what}")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ihspaces", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--dense", action="store_true", help="print every degree, zeros included")

    def perv(p):
        p.add_argument("--perversity", default="m", help="zero|m|um|top or p(2),p(3),...[,...]")
        p.add_argument("--extended", nargs="?", const=True, default=False, metavar="LIST",
                       help="allow non-classical perversities, optionally giving the list")

    h = sub.add_parser("homology", help="reduced Betti numbers of a facet file")
    h.add_argument("facets")
    h.add_argument("--unreduced", action="store_true")
    fmt(h)
    h.set_defaults(func=cmd_homology)

    for name, func, help_ in (("cone", cmd_cone, "IH/HI of the open cone on a link"),
                              ("suspension", cmd_suspension, "HI of the suspension of a link")):
        c = sub.add_parser(name, help=help_)
        c.add_argument("input", help="facet file or betti-table JSON")
        perv(c)
        if name == "cone":
            c.add_argument("--theory", choices=("ih", "hi", "both"), default="both")
        c.add_argument("--verify", action="store_true", help="check against the chain model")
        c.add_argument("--sweep-perversities", action="store_true")
        c.add_argument("--no-simply-connected", action="store_true",
                       help="do not assert that the link is simply connected")
        fmt(c)
        c.set_defaults(func=func)

    e = sub.add_parser("example", help="worked example from the catalog")
    e.add_argument("name")
    e.add_argument("perversity_arg", nargs="?", metavar="PERVERSITY",
                   help="same as --perversity")
    perv(e)
    fmt(e)
    e.set_defaults(func=cmd_example)

    m = sub.add_parser("mv", help="solve a Mayer-Vietoris problem file")
    m.add_argument("problem")
    fmt(m)
    m.set_defaults(func=cmd_mv)

    s = sub.add_parser("sequence", help="solve a long exact sequence text file")
    s.add_argument("file")
    s.set_defaults(func=cmd_sequence)

    k = sub.add_parser("catalog", help="list or export catalog entries")
    k.add_argument("--format", choices=("table", "json"), default="table")
    k.set_defaults(func=cmd_catalog)
    return parser


_VALUE_FLAGS = ("--perversity", "--extended")


def _attach_negative_values(argv: list[str]) -> list[str]:
    """Turn ``--perversity -1,...`` into ``--perversity=-1,...``.

    argparse would otherwise read a leading minus as an unknown option.
    """
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is not None and re.match(r"^-\d", nxt):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_attach_negative_values(argv))
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InconsistentSequenceError as exc:
        print(f"inconsistent: {exc}", file=sys.stderr)
        if exc.triple:
            print(f"violated at: {' -> '.join(exc.triple)}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
