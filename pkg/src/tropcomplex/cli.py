"""Command line driver.

Every subcommand loads a fixture, runs one slice of the library, and prints
a JSON report: {"format", "command", "inputs", "result", "verdicts"} with
verdict entries [check name, "pass" | "fail", detail].  Exit code 0 when all
checks pass, 1 when any fails, 2 on invalid input.  Reports use sorted keys
and lowest-terms rationals so identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import InputError, PreconditionFailed, UnknownName
from .delta import link_of
from .structure import classify, local_matrix
from .divisors import (TwoPieceFunction, class_group, div_two_piece,
                       div_vertex_function, lin_equiv_witness,
                       local_cartier_test, ridge_multiplicity, weil_test)
from .curves import germ_space, intersect_degree, is_balanced, restrict_divisor
from .embedded import derive_structure, push_forward_and_compare, robustness_check
from .degeneration import (build_structure_from_degeneration, specialize,
                           verify_theorem)
from .serialize import (FORMAT, breakpoints_from_json, canonical_json,
                        curve_to_json, divisor_to_json, germ_to_json,
                        point_sum_to_json, rat, sha256_of_file)

# Subcommand -> library operations it exercises; a disjoint cover of the
# public operation set, used by the coverage test.
OPERATIONS = {
    "validate": ("build_complex", "link_of"),
    "classify": ("check_weak", "local_matrix", "classify"),
    "div": ("div_vertex_function", "ridge_multiplicity", "div_two_piece"),
    "cartier": ("local_cartier_test", "weil_test"),
    "classgroup": ("class_group",),
    "equiv": ("lin_equiv_witness",),
    "balance": ("germ_space", "is_balanced"),
    "intersect": ("restrict_divisor", "intersect_degree"),
    "import-embedded": ("duplicate_sheets", "alpha_from_balancing"),
    "robust": ("robustness_check",),
    "pushforward": ("push_forward_and_compare",),
    "degen-build": ("build_structure_from_degeneration",),
    "specialize": ("specialize",),
    "verify": ("verify_theorem",),
}


def _file_input(path):
    return {"path": str(path), "sha256": sha256_of_file(path)}


def _load(path):
    from .serialize import load_fixture_file

    return load_fixture_file(path)


def _named_divisor(fx, name):
    if name not in fx.divisors:
        raise UnknownName("no divisor named %r in the fixture" % (name,))
    return fx.divisors[name]


def _named_curve(fx, name):
    if name not in fx.curves:
        raise UnknownName("no curve named %r in the fixture" % (name,))
    return fx.curves[name]


def _values(spec_str, fx, count):
    """Comma-separated integers, or the name of a stored vertex function."""
    parts = [p.strip() for p in spec_str.split(",")]
    if all(p.lstrip("-").isdigit() for p in parts if p):
        values = [int(p) for p in parts if p]
    elif spec_str in fx.functions:
        values = list(fx.functions[spec_str])
    else:
        raise UnknownName("no vertex function named %r" % (spec_str,))
    if len(values) != count:
        raise InputError(
            "expected %d vertex values, got %d" % (count, len(values))
        )
    return values


def _cell(spec_str):
    parts = spec_str.split(",")
    if len(parts) != 2:
        raise InputError("cell must be given as 'dim,index'")
    return int(parts[0]), int(parts[1])


# ---------------------------------------------------------------------------
# Subcommand handlers: (result, verdicts, extra inputs)


def cmd_validate(args):
    fx = _load(args.fixture)
    if fx.kind == "embedded":
        E = fx.embedded
        result = {
            "kind": "embedded",
            "N": E.N,
            "n": E.n,
            "bounded_cells": [len(level) for level in E.bounded],
            "unbounded_cells": len(E.unbounded),
        }
        return result, [["validate", "pass", "embedded complex well formed"]], {}
    X = fx.complex
    degrees = []
    for v in range(X.counts[0]):
        link = link_of(X, (0, v))
        degrees.append(len(link[0]) if link else 0)
    result = {
        "kind": fx.kind,
        "n": X.n,
        "simplices": list(X.counts),
        "regular": X.is_regular(),
        "vertex_link_sizes": degrees,
    }
    return result, [["validate", "pass", "complex well formed"]], {}


def cmd_classify(args):
    fx = _load(args.fixture)
    T = fx.structure()
    X = T.complex
    res = classify(T, jobs=args.jobs)
    matrices = []
    if res.weak.passed and X.n >= 2:
        for qi in range(X.counts[X.n - 2]):
            m = local_matrix(T, (X.n - 2, qi))
            matrices.append([qi, [list(row) for row in m.matrix]])
    result = {
        "verdict": res.verdict,
        "violations": [[r, lhs, rhs] for r, lhs, rhs in res.weak.violations],
        "isolated_ridges": list(res.weak.isolated_ridges),
        "inertia": [[qi, list(ine.as_tuple())] for qi, ine in res.inertias],
        "local_matrices": matrices,
    }
    ok = res.verdict == "tropical"
    return result, [["classify", "pass" if ok else "fail", res.verdict]], {}


def cmd_div(args):
    fx = _load(args.fixture)
    T = fx.structure()
    X = T.complex
    verdicts = []
    extra = {}
    if args.phi is not None:
        values = _values(args.phi, fx, X.counts[0])
        D = div_vertex_function(T, values)
        result = {"divisor": divisor_to_json(D), "phi": values}
        consistent = True
        if X.n >= 1:
            for r in range(X.counts[X.n - 1]):
                ridge = (X.n - 1, r)
                base = [values[v] for v in X.vertices_of(ridge)]
                opp = [values[X.opp_vertex(t)] for t in X.link0(ridge)]
                if ridge_multiplicity(T, r, base, opp) != D.coeff(r):
                    consistent = False
        verdicts.append(["div", "pass", "divisor computed"])
        verdicts.append(["ridge-multiplicity-consistency",
                        "pass" if consistent else "fail",
                         "linear local values reproduce the coefficients"])
    elif args.two_piece is not None:
        with open(args.two_piece, "r", encoding="utf-8") as fh:
            piece = json.load(fh)
        extra["two_piece"] = _file_input(args.two_piece)
        f = TwoPieceFunction(
            int(piece["facet"]),
            tuple(int(x) for x in piece["normal"]),
            Fraction(int(piece["offset"][0]), int(piece["offset"][1])),
        )
        D = div_two_piece(T, f)
        result = {"divisor": divisor_to_json(D)}
        verdicts.append(["div", "pass", "divisor computed"])
    else:
        raise InputError("div needs --phi or --two-piece")
    return result, verdicts, extra


def cmd_cartier(args):
    fx = _load(args.fixture)
    T = fx.structure()
    X = T.complex
    D = _named_divisor(fx, args.divisor)
    passed, failures = weil_test(T, D, jobs=args.jobs)
    statuses = []
    germs = []
    if X.n >= 2:
        for qi in range(X.counts[X.n - 2]):
            verdict = local_cartier_test(T, D, (X.n - 2, qi))
            statuses.append([qi, verdict.status])
            if verdict.germ is not None:
                germs.append([qi, germ_to_json(verdict.germ)])
    result = {
        "statuses": statuses,
        "germs": germs,
        "weil": {"passed": passed, "failures": list(failures)},
    }
    verdicts = [["weil", "pass" if passed else "fail",
                 "Q-Cartier at every codimension-two cell" if passed
                 else "fails at %s" % (list(failures),)]]
    return result, verdicts, {}


def cmd_classgroup(args):
    fx = _load(args.fixture)
    T = fx.structure()
    pres = class_group(T)
    s = pres.snf[0]
    result = {
        "free_rank": pres.free_rank,
        "invariant_factors": list(pres.invariant_factors),
        "matrix": [list(row) for row in pres.matrix],
        "snf_diagonal": [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0))],
    }
    return result, [["classgroup", "pass", "presentation computed"]], {}


def cmd_equiv(args):
    fx = _load(args.fixture)
    T = fx.structure()
    D = _named_divisor(fx, args.divisor)
    Dp = _named_divisor(fx, args.other)
    res = lin_equiv_witness(T, D, Dp)
    result = {
        "phi": list(res.phi) if res.phi is not None else None,
        "certificate": None,
    }
    if res.certificate is not None:
        cert = dict(res.certificate)
        result["certificate"] = {
            "kind": cert["kind"],
            "torsion_residues": [list(map(int, r)) if isinstance(r, (list, tuple))
                                 else int(r) for r in cert["torsion_residues"]],
            "free_residues": [rat(x) for x in cert["free_residues"]],
        }
    ok = res.phi is not None
    detail = "witness found" if ok else "no integral witness"
    return result, [["equivalent", "pass" if ok else "fail", detail]], {}


def cmd_balance(args):
    fx = _load(args.fixture)
    T = fx.structure()
    X = T.complex
    C = _named_curve(fx, args.curve)
    res = is_balanced(T, C)
    dims = []
    for v in sorted(C.support_vertices(X)):
        dims.append([v, len(germ_space(T, v).basis)])
    result = {
        "balanced": res.balanced,
        "germ_dimensions": dims,
        "certificate": None,
    }
    if res.certificate is not None:
        v, germ = res.certificate
        result["certificate"] = [v, [rat(x) for x in germ]]
    ok = res.balanced
    return result, [["balanced", "pass" if ok else "fail",
                     "curve is balanced" if ok else "balancing fails"]], {}


def cmd_intersect(args):
    fx = _load(args.fixture)
    T = fx.structure()
    D = _named_divisor(fx, args.divisor)
    C = _named_curve(fx, args.curve)
    res = intersect_degree(T, D, C)
    result = {
        "point_sum": point_sum_to_json(res.point_sum),
        "degree": rat(res.degree),
    }
    extra = {}
    if args.breakpoints is not None:
        with open(args.breakpoints, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        extra["breakpoints"] = _file_input(args.breakpoints)
        g = breakpoints_from_json(data)
        P = restrict_divisor(T, C, g)
        result["restricted"] = point_sum_to_json(P)
        result["restricted_degree"] = rat(P.degree)
    detail = "degree %d/%d" % (res.degree.numerator, res.degree.denominator)
    return result, [["intersect", "pass", detail]], {}


def cmd_import_embedded(args):
    fx = _load(args.fixture)
    if fx.embedded is None:
        raise InputError("import-embedded needs an embedded fixture")
    X, pi, T, solutions = derive_structure(fx.embedded)
    alpha = sorted((r, s, v) for (r, s), v in T.alpha.items())
    result = {
        "complex": X.to_json(),
        "pi": [list(level) for level in pi],
        "alpha": [list(entry) for entry in alpha],
        "balancing": [
            [ridge, list(sol.coefficients), sol.d]
            for ridge, sol in sorted(solutions.items())
        ],
    }
    return result, [["import", "pass", "structure constants derived"]], {}


def cmd_robust(args):
    fx = _load(args.fixture)
    if fx.embedded is None:
        raise InputError("robust needs an embedded fixture")
    k, idx = _cell(args.cell)
    res = robustness_check(fx.embedded, k, idx)
    result = {
        "cell": [k, idx],
        "robust": res.robust,
        "certificate": list(res.certificate) if res.certificate is not None
        else None,
        "maximal_unbounded_cell": res.maximal_unbounded_cell,
    }
    detail = "cell (%d,%d)" % (k, idx)
    return result, [["robust", "pass" if res.robust else "fail", detail]], {}


def cmd_pushforward(args):
    fx = _load(args.fixture)
    if fx.embedded is None:
        raise InputError("pushforward needs an embedded fixture")
    E = fx.embedded
    if args.function is not None:
        f = _values(args.function, fx, len(E.vertices))
        res = push_forward_and_compare(E, f=f)
        result = {
            "pushed": [[r, m] for r, m in sorted(res.pushed.items())],
            "oracle": [[r, m] for r, m in sorted(res.oracle.items())],
            "verdict": res.verdict,
        }
        ok = res.verdict == "pass"
        return result, [["pushforward-oracle", "pass" if ok else "fail",
                         "divisor push-forward matches embedded weights"]], {}
    if args.divisor is not None:
        D = _named_divisor(fx, args.divisor)
        res = push_forward_and_compare(E, D=D)
        result = {"pushed": [[r, m] for r, m in sorted(res.pushed.items())]}
        return result, [["pushforward", "pass", "multiplicities summed"]], {}
    raise InputError("pushforward needs --function or --divisor")


def cmd_degen_build(args):
    fx = _load(args.fixture)
    if fx.degeneration is None:
        raise InputError("degen-build needs a degeneration fixture")
    T = build_structure_from_degeneration(fx.complex, fx.degeneration)
    alpha = sorted((r, s, v) for (r, s), v in T.alpha.items())
    result = {
        "mode": fx.degeneration.mode,
        "alpha": [list(entry) for entry in alpha],
    }
    return result, [["consistency", "pass",
                     "%s data consistent" % fx.degeneration.mode]], {}


def cmd_specialize(args):
    fx = _load(args.fixture)
    if fx.degeneration is None:
        raise InputError("specialize needs a degeneration fixture")
    T = build_structure_from_degeneration(fx.complex, fx.degeneration)
    res = specialize(T, fx.degeneration, args.name)
    if res.kind == "divisor":
        result = {
            "kind": "divisor",
            "divisor": divisor_to_json(res.divisor),
            "verdict": res.verdict,
        }
        ok = res.verdict == "pass"
        verdicts = [["weil", "pass" if ok else "fail",
                     "specialized divisor is summable" if ok
                     else "specialized divisor fails the summable test"]]
    else:
        result = {
            "kind": "curve",
            "curve": curve_to_json(res.curve),
            "verdict": res.verdict,
        }
        detail = ("specialized curve is balanced" if res.verdict == "balanced"
                  else "specialized curve is not balanced (warning)")
        verdicts = [["specialize", "pass", detail]]
    return result, verdicts, {}


def cmd_verify(args):
    fx = _load(args.fixture)
    if fx.degeneration is None:
        raise InputError("verify needs a degeneration fixture")
    T = build_structure_from_degeneration(fx.complex, fx.degeneration)
    try:
        res = verify_theorem(T, fx.degeneration, args.divisor, args.curve)
    except PreconditionFailed as exc:
        result = {"precondition": exc.verdict, "message": str(exc)}
        return result, [[exc.verdict, "fail", str(exc)]], {}
    result = {
        "divisor": res.divisor,
        "curve": res.curve,
        "computed": rat(res.computed),
        "claimed": rat(res.claimed),
        "match": res.match,
    }
    detail = "computed %d/%d, claimed %d/%d" % (
        res.computed.numerator, res.computed.denominator,
        res.claimed.numerator, res.claimed.denominator,
    )
    return result, [["theorem", "pass" if res.match else "fail", detail]], {}


HANDLERS = {
    "validate": cmd_validate,
    "classify": cmd_classify,
    "div": cmd_div,
    "cartier": cmd_cartier,
    "classgroup": cmd_classgroup,
    "equiv": cmd_equiv,
    "balance": cmd_balance,
    "intersect": cmd_intersect,
    "import-embedded": cmd_import_embedded,
    "robust": cmd_robust,
    "pushforward": cmd_pushforward,
    "degen-build": cmd_degen_build,
    "specialize": cmd_specialize,
    "verify": cmd_verify,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tcx",
        description="Tropical complexes: structure constants, divisors, "
                    "curves, and intersection numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("fixture", help="fixture file (JSON, format tcx-1)")
        return p

    add("validate", "check a fixture's complex is well formed")

    p = add("classify", "weak test and local inertia classification")
    p.add_argument("--jobs", type=int, default=None)

    p = add("div", "divisor of a PL function")
    p.add_argument("--phi", help="comma-separated vertex values, or a stored "
                                 "function name")
    p.add_argument("--two-piece", help="JSON file {facet, normal, offset}")

    p = add("cartier", "local Cartier test and summable-divisor check")
    p.add_argument("--divisor", "-D", required=True)
    p.add_argument("--jobs", type=int, default=None)

    add("classgroup", "divisor class group presentation")

    p = add("equiv", "linear equivalence witness")
    p.add_argument("--divisor", "-D", required=True)
    p.add_argument("--other", "-E", required=True)

    p = add("balance", "germ spaces and the balancing test")
    p.add_argument("--curve", "-C", required=True)

    p = add("intersect", "divisor-curve intersection product")
    p.add_argument("--divisor", "-D", required=True)
    p.add_argument("--curve", "-C", required=True)
    p.add_argument("--breakpoints", help="JSON breakpoint function on the "
                                         "curve; also reports its divisor")

    add("import-embedded", "duplicate sheets and derive structure constants")

    p = add("robust", "robustness at a bounded cell of an embedded complex")
    p.add_argument("--cell", required=True, help="'dim,index'")

    p = add("pushforward", "push a divisor or div(f) to bounded cells")
    p.add_argument("--divisor", "-D")
    p.add_argument("--function", "-f",
                   help="vertex values (or stored name); compared against "
                        "the embedded weight oracle")

    add("degen-build", "structure constants from degeneration data")

    p = add("specialize", "specialize a named divisor or curve")
    p.add_argument("name")

    p = add("verify", "compare computed and claimed intersection numbers")
    p.add_argument("--divisor", "-D", required=True)
    p.add_argument("--curve", "-C", required=True)

    return parser


def run(argv):
    """Execute one subcommand; print the report; return the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = HANDLERS[args.command]
    report = {"format": FORMAT, "command": args.command, "inputs": {}}
    try:
        report["inputs"]["fixture"] = _file_input(args.fixture)
        result, verdicts, extra_inputs = handler(args)
    except (InputError, OSError) as exc:
        report["result"] = {}
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        report["verdicts"] = []
        print(canonical_json(report))
        print("%s: error: %s" % (args.command, exc), file=sys.stderr)
        return 2
    report["inputs"].update(extra_inputs)
    report["result"] = result
    report["verdicts"] = verdicts
    print(canonical_json(report))
    summary = ", ".join("%s: %s" % (name, status) for name, status, _ in verdicts)
    print("%s: %s" % (args.command, summary or "ok"), file=sys.stderr)
    return 0 if all(status == "pass" for _, status, _ in verdicts) else 1


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
