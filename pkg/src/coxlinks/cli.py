"""Command-line frontend.

Every numeric value is printed together with its tolerance; `--format
json` emits a single JSON document.  Exit codes: 0 success, 1 domain or
validation error, 2 internal or convergence error, 3 broken invariant.
Errors are reported as {"error": {"code", "message", "location"}}.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import chords, coxeter, growth, search, seifert
from .coxeter import Ordering, graph_from_json, graph_to_json
from .errors import (
    AmbiguityError,
    ConvergenceError,
    CoxlinksError,
    DomainError,
    InconclusiveError,
    InvariantViolationError,
    ParseError,
    PositivityError,
    UnsupportedError,
)
from .intpoly import (
    LEHMER_POLYNOMIAL,
    is_reciprocal,
    is_salem,
    mahler_measure,
    parse_poly,
    poly_from_json,
    poly_text,
    poly_to_json,
)


class _UsageError(DomainError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _read_arg(arg):
    """Inline literal, or the contents of an existing file, or stdin."""
    if arg == "-":
        return sys.stdin.read()
    if os.path.exists(arg):
        with open(arg, "r", encoding="utf-8") as fh:
            return fh.read()
    return arg


def _load_poly(arg):
    text = _read_arg(arg).strip()
    if text.startswith("{"):
        return poly_from_json(json.loads(text))
    return parse_poly(text)


def _load_graph(arg):
    text = _read_arg(arg).strip()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"graph input is not valid JSON: {exc}") from exc
    return graph_from_json(obj)


def _load_diagram(arg):
    text = _read_arg(arg).strip()
    if text.startswith("{"):
        return chords.diagram_from_json(json.loads(text))
    return chords.diagram_from_text(text)


def _load_ordering(spec_text, n):
    if spec_text is None:
        return Ordering.identity(n)
    return Ordering.of(int(x) for x in spec_text.split(","))


def _num(value, tol):
    return {"value": value, "tol": tol}


def _poly_payload(p):
    return {"text": poly_text(p), "coeffs": poly_to_json(p)["coeffs"]}


# ---------------------------------------------------------------------------
# subcommand implementations
# ---------------------------------------------------------------------------


def _cmd_mahler(args):
    p = _load_poly(args.poly)
    tol = args.tol or 1e-8
    return {"polynomial": _poly_payload(p), "mahler_measure": _num(mahler_measure(p, tol), tol)}


def _cmd_salem(args):
    p = _load_poly(args.poly)
    tol = args.tol or 1e-8
    return {
        "polynomial": _poly_payload(p),
        "reciprocal": is_reciprocal(p),
        "salem": is_salem(p, tol),
        "mahler_measure": _num(mahler_measure(p, tol), tol),
    }


def _certificate_payload(cert):
    if isinstance(cert, coxeter.MinorsCertificate):
        return {"type": "leading_principal_minors", "minors": list(cert.minors)}
    if isinstance(cert, coxeter.KernelCertificate):
        return {"type": "kernel_vector", "vector": list(cert.vector)}
    if isinstance(cert, coxeter.NegativeCertificate):
        return {
            "type": "negative_direction",
            "vector": list(cert.vector),
            "value": cert.value,
        }
    return {
        "type": "extremal_eigenvalues",
        "min_eigenvalue": cert.min_eigenvalue,
        "max_eigenvalue": cert.max_eigenvalue,
        "tol": cert.tol,
    }


def _cmd_classify(args):
    g = _load_graph(args.graph)
    c = coxeter.classify(g)
    return {
        "graph": graph_to_json(g),
        "kind": c.kind,
        "certificate": _certificate_payload(c.certificate),
    }


def _cmd_element(args):
    g = _load_graph(args.graph)
    order = _load_ordering(args.order, g.n)
    c = coxeter.coxeter_element(g, order)
    return {"order": list(order.seq), "matrix": [list(r) for r in c]}


def _cmd_charpoly(args):
    g = _load_graph(args.graph)
    order = _load_ordering(args.order, g.n)
    p = coxeter.char_poly_coxeter(g, order)
    return {"order": list(order.seq), "charpoly": _poly_payload(p)}


def _cmd_spectral(args):
    g = _load_graph(args.graph)
    order = _load_ordering(args.order, g.n)
    tol = args.tol or 1e-10
    return {
        "order": list(order.seq),
        "spectral_radius": _num(coxeter.spectral_radius(g, order, tol), tol),
    }


def _cmd_delta(args):
    sig = growth.TupleSignature(args.p)
    d = growth.delta(sig)
    tol = args.tol or 1e-8
    rate = growth.growth_rate(sig, tol)
    return {
        "signature": list(sig.ps),
        "delta": _poly_payload(d),
        "chi": str(growth.orbifold_chi(sig)),
        "excess": str(growth.excess(sig)),
        "growth_rate": _num(rate.value, tol),
        "is_salem": rate.is_salem,
    }


def _cmd_alexander(args):
    text = _read_arg(args.input).strip()
    if text.startswith("{") or text.startswith("["):
        obj = json.loads(text)
    else:
        obj = None
    if isinstance(obj, dict) and "word" in obj:
        sys_ = chords.system_from_json(obj)
        m = seifert.seifert_matrix(sys_)
        src = {"seifert_matrix": [list(r) for r in m.matrix]}
    elif isinstance(obj, list):
        m = seifert.SeifertMatrix.of(obj)
        src = {}
    elif isinstance(obj, dict) and "matrix" in obj:
        m = seifert.SeifertMatrix.of(obj["matrix"])
        src = {}
    else:
        raise DomainError(
            "alexander expects a chord-system JSON object with 'word' and "
            "'order', or a row-major integer matrix"
        )
    return {"alexander": _poly_payload(seifert.alexander(m)), **src}


def _cmd_realize(args):
    g = _load_graph(args.graph)
    budget = args.budget or chords.DEFAULT_REALIZE_BUDGET
    d = chords.realize(g, budget)
    if d is None:
        return {"graph": graph_to_json(g), "diagram": None, "definitive": True}
    return {
        "graph": graph_to_json(g),
        "diagram": chords.diagram_to_json(d),
        "word": chords.diagram_to_text(d),
    }


def _cmd_obstruct(args):
    g = _load_graph(args.graph)
    w = chords.obstruction(g)
    if w is None:
        return {"graph": graph_to_json(g), "witness": None}
    return {
        "graph": graph_to_json(g),
        "witness": {
            "hub": w.hub,
            "independent_set": list(w.independent),
            "induced_cycle": list(w.cycle),
        },
    }


def _cmd_positive(args):
    d = _load_diagram(args.diagram)
    sys_ = chords.make_positive(d)
    return {
        "system": chords.system_to_json(sys_),
        "word": chords.diagram_to_text(sys_.diagram),
        "order": list(sys_.order.seq),
        "positive": chords.is_positive(sys_),
    }


def _cmd_search_tuples(args):
    rep = search.min_mahler_delta(args.kmax, args.pmax, args.tol or 1e-4)
    return rep.to_json()


def _cmd_search_trees(args):
    return search.min_spectral_radius(args.nmax, "trees").to_json()


def _cmd_search_graphs(args):
    return search.min_spectral_radius(args.nmax, "all-graphs").to_json()


def _cmd_search_orderings(args):
    d = _load_diagram(args.diagram)
    return search.ordering_invariance_scan(d).to_json()


def _cmd_search_excess(args):
    return search.min_positive_excess(args.kmax, args.pmax).to_json()


def _cmd_lehmer_verify(args):
    tol = args.tol or 1e-8
    checks = {}
    d = growth.delta((2, 3, 7))
    checks["delta_2_3_7_is_lehmer"] = d == LEHMER_POLYNOMIAL
    cp = coxeter.char_poly_coxeter(coxeter.e_series(10))
    checks["e10_charpoly_is_lehmer"] = cp == LEHMER_POLYNOMIAL
    pa = seifert.pretzel_alexander((2, 3, 7))
    target = LEHMER_POLYNOMIAL.compose_neg().positive_leading()
    checks["pretzel_2_3_7_is_lehmer_at_minus_x"] = pa == target
    if not all(checks.values()):
        failed = sorted(k for k, v in checks.items() if not v)
        raise InvariantViolationError(f"identity checks failed: {failed}")
    return {
        "checks": checks,
        "lehmer_polynomial": _poly_payload(LEHMER_POLYNOMIAL),
        "mahler_measure": _num(mahler_measure(LEHMER_POLYNOMIAL, tol), tol),
    }


# ---------------------------------------------------------------------------
# wiring
# ---------------------------------------------------------------------------


def build_parser():
    parser = _Parser(prog="coxlinks", description=__doc__)
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--tol", type=float, default=None, help="numeric tolerance override")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn)
        return p

    add("mahler", _cmd_mahler, "Mahler measure of a polynomial").add_argument("poly")
    add("salem", _cmd_salem, "Salem classification of a polynomial").add_argument("poly")
    add("classify", _cmd_classify, "spherical/affine/indefinite").add_argument("graph")
    p = add("element", _cmd_element, "Coxeter element matrix")
    p.add_argument("graph")
    p.add_argument("--order", default=None, help="comma-separated product order")
    p = add("charpoly", _cmd_charpoly, "exact characteristic polynomial")
    p.add_argument("graph")
    p.add_argument("--order", default=None)
    p = add("spectral", _cmd_spectral, "spectral radius of the Coxeter element")
    p.add_argument("graph")
    p.add_argument("--order", default=None)
    p = add("delta", _cmd_delta, "growth-series denominator of a signature")
    p.add_argument("p", type=int, nargs="+")
    add("alexander", _cmd_alexander, "Alexander polynomial").add_argument("input")
    p = add("realize", _cmd_realize, "find a chord diagram for a graph")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=None)
    add("obstruct", _cmd_obstruct, "induced-cycle obstruction witness").add_argument("graph")
    add("positive", _cmd_positive, "positive ordering of a diagram").add_argument("diagram")
    psearch = sub.add_parser("search", help="desk-scale enumerations")
    ssub = psearch.add_subparsers(dest="search_command", required=True)
    p = ssub.add_parser("tuples")
    p.set_defaults(func=_cmd_search_tuples)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--pmax", type=int, default=16)
    p = ssub.add_parser("trees")
    p.set_defaults(func=_cmd_search_trees)
    p.add_argument("--nmax", type=int, default=10)
    p = ssub.add_parser("graphs")
    p.set_defaults(func=_cmd_search_graphs)
    p.add_argument("--nmax", type=int, default=7)
    p = ssub.add_parser("orderings")
    p.set_defaults(func=_cmd_search_orderings)
    p.add_argument("diagram")
    p = ssub.add_parser("excess")
    p.set_defaults(func=_cmd_search_excess)
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--pmax", type=int, default=100)
    add("lehmer-verify", _cmd_lehmer_verify, "one-shot cross-module identity check")
    return parser


def _render_text(payload, indent=0):
    lines = []
    pad = "  " * indent
    if isinstance(payload, dict):
        for k, v in payload.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                lines.extend(_render_text(v, indent))
            else:
                lines.append(f"{pad}- {json.dumps(v)}")
    else:
        lines.append(f"{pad}{json.dumps(payload)}")
    return lines


def _is_flat(v):
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return False


_ERROR_CODES = (
    (ParseError, "parse", 1),
    (PositivityError, "positivity", 1),
    (UnsupportedError, "unsupported", 1),
    (DomainError, "domain", 1),
    (AmbiguityError, "ambiguity", 2),
    (InconclusiveError, "inconclusive", 2),
    (ConvergenceError, "convergence", 2),
    (InvariantViolationError, "invariant-violation", 3),
)


def _error_payload(exc):
    for klass, code, status in _ERROR_CODES:
        if isinstance(exc, klass):
            location = None
            if isinstance(exc, ParseError):
                location = {"position": exc.position}
            elif isinstance(exc, PositivityError):
                location = {"pair": list(exc.pair)}
            return {"error": {"code": code, "message": str(exc), "location": location}}, status
    return {"error": {"code": "internal", "message": str(exc), "location": None}}, 2


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        payload = args.func(args)
    except SystemExit:
        raise
    except CoxlinksError as exc:
        # errors are structured JSON in either format
        payload, status = _error_payload(exc)
        print(json.dumps(payload, indent=2))
        return status
    except Exception as exc:  # pragma: no cover
        print(json.dumps({"error": {"code": "internal", "message": str(exc), "location": None}}))
        return 2
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(_render_text(payload)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
