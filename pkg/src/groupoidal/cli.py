"""Command-line front end.

Every command prints one JSON document carrying ``"schema": 1``.  Exit codes:
0 success, 1 unreadable input, 2 input fails validation, 3 two independent
computations disagree (a bug).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import algebra as alg
from . import germs
from . import representations as rep
from .catalog import GROUPOID_KINDS, catalog_get, catalog_list, groupoid_get, named_graph
from .errors import GroupoidalError, InternalInconsistency, ValidationError
from .fields import Field, PrimeField, parse_field
from .leavitt import DirectedGraph, leavitt_algebra, leavitt_dimension_check
from .semigroup import (
    InverseSemigroup,
    PartialInjection,
    build_from_partial_injections,
    build_from_table,
    classify,
    enumerate_congruences,
    maximal_subgroup,
)
from .spectrum import all_characters, proper_characters, tight_characters, ultrafilter_characters

SCHEMA = 1
PROPERTIES = ("simplicity", "semiprimitivity", "primitivity", "congruence-free", "tight", "hausdorff")
TARGETS = ("semigroup-algebra", "contracted", "universal", "tight-groupoid")
CONGRUENCE_ORACLE_LIMIT = 8


class InputError(Exception):
    """Input could not be parsed (exit 1)."""


# ---------------------------------------------------------------- input


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def load_semigroup(source: str) -> InverseSemigroup:
    """``catalog:<name>`` or a JSON file in table form or generator form."""
    if source.startswith("catalog:"):
        return catalog_get(source[len("catalog:"):])
    data = _read_json(source)
    if not isinstance(data, dict):
        raise InputError("expected a JSON object")
    if "mul" in data:
        mul = data["mul"]
        if not isinstance(mul, list) or not all(isinstance(r, list) for r in mul):
            raise InputError("'mul' must be a list of rows")
        if "n" in data and data["n"] != len(mul):
            raise ValidationError("'n' does not match the table size", witness=(data["n"], len(mul)))
        return build_from_table(mul, data.get("labels"), name=Path(source).stem)
    if "generators" in data:
        try:
            ambient = int(data["ambient"])
            gens = [PartialInjection(ambient, frozenset(tuple(p) for p in g["pairs"])) for g in data["generators"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad generator description: {exc}") from None
        return build_from_partial_injections(gens, name=Path(source).stem)
    raise InputError("expected keys 'mul' (table form) or 'generators' (generator form)")


def load_graph(path: str) -> DirectedGraph:
    if path.startswith("graph:"):
        return named_graph(path[len("graph:"):])
    data = _read_json(path)
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise InputError("graph JSON needs 'vertices' and 'edges'")
    return DirectedGraph.from_json(data)


# ---------------------------------------------------------------- reports


def spectrum_summary(S: InverseSemigroup) -> dict:
    out = {"characters": len(all_characters(S)), "ultrafilters": None, "tight": None, "proper": None}
    if S.zero is not None:
        out.update(
            proper=len(proper_characters(S)),
            ultrafilters=len(ultrafilter_characters(S)),
            tight=len(tight_characters(S)),
        )
    return out


def cmd_analyze(args) -> dict:
    S = load_semigroup(args.input)
    report = classify(S)
    body = report.to_json(S)
    return {
        "command": "analyze",
        "semigroup": {"name": S.name, "size": S.n, "idempotents": len(S.idempotents), "has_zero": S.zero is not None},
        "congruence_free": report.is_congruence_free,
        "tight": report.is_tight,
        "report": body,
        "spectrum": spectrum_summary(S),
    }


def _groupoid_for(S: InverseSemigroup, kind: str) -> germs.FiniteGroupoid:
    return germs.standard_groupoid(S, kind)


def groupoid_json(G: germs.FiniteGroupoid) -> dict:
    data = germs.orbits_and_isotropy(G)
    return {
        "name": G.name,
        "objects": [G.object_label(x) for x in range(G.n_objects)],
        "arrows": [G.arrow_label(g) for g in range(G.n_arrows)],
        "d": list(G.d),
        "r": list(G.r),
        "orbits": [list(O) for O in data.orbits],
        "isotropy_orders": [H.order for H in data.isotropy],
        "minimal": germs.is_minimal(G),
        "effective": germs.is_effective(G),
    }


def cmd_groupoid(args) -> dict:
    if args.input.startswith("groupoid:"):
        G = groupoid_get(args.input[len("groupoid:"):])
    else:
        G = _groupoid_for(load_semigroup(args.input), args.kind)
    return {"command": "groupoid", "kind": args.kind, "groupoid": groupoid_json(G)}


def _algebra_for(S: InverseSemigroup, target: str, F: Field):
    """``(algebra, groupoid)`` for a check target."""
    if target == "semigroup-algebra":
        return alg.semigroup_algebra(S, F), _groupoid_for(S, "universal")
    if target == "contracted":
        return alg.semigroup_algebra(S, F, contracted=True), _groupoid_for(S, "contracted")
    kind = "universal" if target == "universal" else "tight"
    G = _groupoid_for(S, kind)
    return alg.groupoid_algebra(G, F), G


def cmd_algebra(args) -> dict:
    S = load_semigroup(args.input)
    F = parse_field(args.field)
    A, _ = _algebra_for(S, args.target, F)
    rad = alg.radical(A)
    decision = alg.is_simple(A, args.seed)
    wed = None
    if isinstance(F, PrimeField) and rad.shape[0] == 0:
        wed = alg.wedderburn_components(A)
    out = {
        "command": "algebra",
        "target": args.target,
        "field": str(F),
        "dim": A.dim,
        "unital": A.is_unital,
        "center_dim": int(alg.center(A).shape[0]),
        "radical_dim": int(rad.shape[0]),
        "simplicity": {"verdict": decision.verdict, "method": decision.method},
        "wedderburn_dims": wed,
    }
    if args.tight:
        pres = alg.tight_relators(S, F)
        out["tight"] = {
            "covers": len(pres.covers),
            "relators": int(pres.relators.shape[0]),
            "ideal_dim": int(pres.ideal.shape[0]),
            "kernel_rank": int(pres.kernel.shape[0]),
            "quotient_dim": pres.quotient_dim,
        }
    return out


def _combine(property_name, algebra_side, groupoid_side):
    """Verdict and method tag from two (possibly undecided) answers."""
    if algebra_side is not None and groupoid_side is not None:
        if algebra_side != groupoid_side:
            raise InternalInconsistency(
                f"{property_name}: algebra and groupoid answers disagree",
                witness={"algebra": algebra_side, "groupoid": groupoid_side},
            )
        return algebra_side, "both-agree"
    if groupoid_side is not None:
        return groupoid_side, "groupoid-criterion"
    if algebra_side is not None:
        return algebra_side, "algebra-linear-algebra"
    return None, "undecided"


def _check_simplicity(S, target, F, seed):
    A, G = _algebra_for(S, target, F)
    criterion = germs.is_effective(G) and germs.is_minimal(G)
    details = {"effective": germs.is_effective(G), "minimal": germs.is_minimal(G)}
    if target == "contracted":
        r = classify(S)
        semigroup_side = bool(r.is_congruence_free and r.is_tight)
        details["congruence_free_and_tight"] = semigroup_side
        if semigroup_side != criterion:
            raise InternalInconsistency("semigroup and groupoid simplicity criteria disagree", witness=details)
    decision = alg.is_simple(A, seed)
    details["algebra_method"] = decision.method
    verdict, method = _combine("simplicity", decision.value, criterion)
    return verdict, method, details


def _semigroup_side(A, G, F) -> dict:
    """Module witnesses live on the groupoid algebra; the semigroup-side algebra
    is cross-checked through its radical dimension."""
    return {"radical_dim": int(alg.radical(A).shape[0])}


def _check_semiprimitivity(S, target, F, seed):
    A, G = _algebra_for(S, target, F)
    report = rep.semiprimitivity_witness(G, F)
    if report.radical_dim != _semigroup_side(A, G, F)["radical_dim"]:
        raise InternalInconsistency("semigroup and groupoid algebras have different radicals", witness=S.name)
    details = {
        "radical_dim": report.radical_dim,
        "semiprimitive_isotropy_objects": len(report.semiprimitive_points),
        "dense": report.dense,
    }
    if target == "semigroup-algebra":
        groups = {
            S.labels[e]: alg.radical(alg.groupoid_algebra(germs.group_groupoid(maximal_subgroup(S, e)), F)).shape[0] == 0
            for e in S.idempotents
        }
        details["maximal_subgroups_semiprimitive"] = groups
        if all(groups.values()) != report.verdict:
            raise InternalInconsistency("semiprimitivity differs from the maximal subgroup criterion", witness=details)
    return report.verdict, report.method, details


def _check_primitivity(S, target, F, seed):
    A, G = _algebra_for(S, target, F)
    report = rep.primitivity_witness(G, F, seed=seed)
    direct = alg.is_simple(A, seed).value
    if direct is not None and report.verdict is not None and direct != report.verdict:
        raise InternalInconsistency("semigroup algebra and groupoid witness disagree on primitivity", witness=S.name)
    details = {
        "dense_orbits": [list(O) for O in report.dense_orbits],
        "isotropy_primitive": report.isotropy_primitive,
        "witness_dim": None if report.witness is None else report.witness.dim,
    }
    return report.verdict, report.method, details


def _check_congruence_free(S, target, F, seed):
    r = classify(S)
    oracle = None
    if S.n <= CONGRUENCE_ORACLE_LIMIT:
        oracle = len(enumerate_congruences(S)) == 2
    verdict, method = _combine("congruence-free", oracle, r.is_congruence_free)
    return verdict, method, {"congruence_count_checked": oracle is not None}


def _check_tight(S, target, F, seed):
    r = classify(S)
    if S.zero is None:
        return r.is_tight, "groupoid-criterion", {"has_zero": False}
    # tight exactly when every proper character is tight
    spectral = len(tight_characters(S)) == len(proper_characters(S))
    verdict, method = _combine("tight", spectral, r.is_tight)
    return verdict, method, {"has_zero": True}


def _check_hausdorff(S, target, F, seed):
    r = classify(S)
    return r.is_hausdorff, "groupoid-criterion", {"witness": r.to_json(S)["hausdorff_witness"]}


CHECKS = {
    "simplicity": _check_simplicity,
    "semiprimitivity": _check_semiprimitivity,
    "primitivity": _check_primitivity,
    "congruence-free": _check_congruence_free,
    "tight": _check_tight,
    "hausdorff": _check_hausdorff,
}


def cmd_check(args) -> dict:
    S = load_semigroup(args.input)
    F = parse_field(args.field)
    verdict, method, details = CHECKS[args.property](S, args.target, F, args.seed)
    return {
        "command": "check",
        "property": args.property,
        "target": args.target,
        "field": str(F),
        "semigroup": S.name,
        "verdict": verdict,
        "method": method,
        "details": details,
    }


def cmd_leavitt(args) -> dict:
    E = load_graph(args.graph)
    F = parse_field(args.field)
    L = leavitt_algebra(E, F)
    report = leavitt_dimension_check(E, F, L)
    return {
        "command": "leavitt",
        "field": str(F),
        "graph": {"vertices": E.vertices, "edges": [list(e) for e in E.edges], "sinks": list(E.sinks())},
        "semigroup_size": L.semigroup.n,
        "relators": int(L.presentation.relators.shape[0]),
        "quotient_dim": L.presentation.quotient_dim,
        "isomorphism_verified": True,
        **report.to_json(),
    }


def cmd_catalog(args) -> dict:
    if args.action == "list":
        return {"command": "catalog list", **catalog_list()}
    if not args.name:
        raise InputError("catalog get needs a name")
    S = catalog_get(args.name)
    return {"command": "catalog get", "name": S.name, "semigroup": S.to_json(), "has_zero": S.zero is not None}


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="also write the report to PATH")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="groupoidal", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="classify an inverse semigroup")
    a.add_argument("input", help="catalog:<name> or JSON file")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("groupoid", parents=[common], help="germ groupoid of a semigroup")
    g.add_argument("input", help="catalog:<name>, JSON file, or groupoid:<catalog groupoid>")
    g.add_argument("--kind", choices=GROUPOID_KINDS, default="universal")
    g.set_defaults(func=cmd_groupoid)

    al = sub.add_parser("algebra", parents=[common], help="structure of a semigroup or groupoid algebra")
    al.add_argument("input")
    al.add_argument("--field", default="q")
    al.add_argument("--target", choices=TARGETS, default="contracted")
    al.add_argument("--tight", action="store_true", help="also build the tight relator presentation")
    al.set_defaults(func=cmd_algebra)

    c = sub.add_parser("check", parents=[common], help="decide a property by two independent routes")
    c.add_argument("property", choices=PROPERTIES)
    c.add_argument("target", choices=TARGETS)
    c.add_argument("input")
    c.add_argument("--field", default="q")
    c.set_defaults(func=cmd_check)

    lv = sub.add_parser("leavitt", parents=[common], help="Leavitt algebra of an acyclic graph")
    lv.add_argument("graph", help="JSON file {vertices, edges} or graph:<name>")
    lv.add_argument("--field", default="q")
    lv.set_defaults(func=cmd_leavitt)

    cat = sub.add_parser("catalog", parents=[common], help="list or fetch catalog semigroups")
    cat.add_argument("action", choices=("list", "get"))
    cat.add_argument("name", nargs="?")
    cat.set_defaults(func=cmd_catalog)
    return p


def _emit(payload: dict, path: str | None) -> None:
    text = json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=True, default=str)
    print(text)
    if path:
        Path(path).write_text(text + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except InputError as exc:
        _emit({"error": "parse", "message": str(exc)}, None)
        return 1
    except InternalInconsistency as exc:
        _emit({"error": "internal-inconsistency", "message": str(exc), "witness": exc.witness}, None)
        return 3
    except GroupoidalError as exc:
        _emit({"error": "validation", "kind": type(exc).__name__, "message": str(exc), "witness": exc.witness}, None)
        return 2
    _emit(payload, args.json)
    return 0


if __name__ == "__main__":
    sys.exit(main())
