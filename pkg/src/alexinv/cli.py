"""Command-line front end.  Every subcommand prints one JSON document.

Exit codes: 0 success, 1 domain error, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import charvar, globalalex, lonne
from .braidvk import (BraidMonodromyData, RealArrangement, real_arrangement_monodromy,
                      vk_presentation)
from .cyclotomic import CharacterPoint
from .laurent import AlexanderPolynomial
from .localsing import (QuasiHomWeights, ResolutionData, catalog_listing,
                        faces_of_quasiadjunction, lct_polytope, lct_threshold,
                        local_monodromy_charpoly, lookup, quasiadjunction_polytopes,
                        spectrum_genfn)
from .serialize import frac_str, parse_frac, parse_poly, poly_to_json
from .words import GroupPresentation, abelianization, simplify_presentation

SCHEMA = "alexinv/1"


class InputError(Exception):
    """Malformed command input (exit code 2)."""


def _parsed(fn, *args):
    try:
        return fn(*args)
    except Exception as exc:  # anything going wrong while decoding input
        raise InputError(str(exc)) from exc


def _fracs(text: str) -> list[Fraction]:
    return _parsed(lambda s: [parse_frac(x) for x in s.split(",") if x.strip()], text)


def _ints(text: str) -> list[int]:
    return _parsed(lambda s: [int(x) for x in s.split(",") if x.strip()], text)


def _load(args) -> object:
    if args.input and args.input != "-":
        with open(args.input) as fh:
            raw = fh.read()
    else:
        raw = sys.stdin.read()
    return _parsed(json.loads, raw)


def _alex_json(p: AlexanderPolynomial) -> dict:
    factors, rest = p.cyclotomic_factors()
    return {"text": p.text(), "coeffs": p.coeffs(),
            "cyclotomic": {str(n): k for n, k in sorted(factors.items())},
            "cyclotomic_product": rest == [1]}


def _alex_arg(text: str) -> AlexanderPolynomial:
    return _parsed(lambda s: AlexanderPolynomial(parse_poly(s, 1)), text)


def _resolution(args) -> tuple[ResolutionData, str]:
    if args.name:
        return lookup(args.name).resolution, args.name
    return _parsed(ResolutionData.from_json, _load(args)), "input"


def _presentation(data) -> GroupPresentation:
    return _parsed(GroupPresentation.from_json, data)


# subcommands --------------------------------------------------------------

def cmd_spectrum(args):
    w = QuasiHomWeights(tuple(_fracs(args.weights)))
    s = spectrum_genfn(w)
    return {"spectrum": [[frac_str(a), m] for a, m in s.entries],
            "milnor_number": frac_str(w.milnor_number)}


def cmd_local_alex(args):
    if args.name:
        w = lookup(args.name).weights
        if w is None:
            return {"polynomial": _alex_json(AlexanderPolynomial.one())}
    else:
        w = QuasiHomWeights(tuple(_fracs(args.weights)))
    p = local_monodromy_charpoly(w)
    red, k = p.strip_t_minus_1()
    return {"polynomial": _alex_json(p), "t_minus_1_exponent": k}


def cmd_qadj(args):
    rd, name = _resolution(args)
    regions = quasiadjunction_polytopes(rd)
    faces = faces_of_quasiadjunction(rd)
    return {"source": name,
            "regions": [q.to_json() for q in regions],
            "faces": [{"a": [frac_str(x) for x in a], "b": frac_str(b)} for a, b in faces]}


def cmd_lct(args):
    rd, name = _resolution(args)
    poly = lct_polytope(rd)
    return {"source": name, "polytope": poly.to_json(),
            "threshold": frac_str(lct_threshold(rd))}


def _presentation_out(p: GroupPresentation, simplify: bool) -> dict:
    out = {"presentation": p.to_json(), "text": p.text()}
    phi = abelianization(p)
    out["abelianization"] = {"free_rank": phi.target_rank, "torsion": list(phi.torsion)}
    if simplify:
        q, _ = simplify_presentation(p)
        out["simplified"] = q.to_json()
    return out


def cmd_vk(args):
    data = _parsed(BraidMonodromyData.from_json, _load(args))
    if args.affine:
        data = data.affine()
    return _presentation_out(vk_presentation(data), args.simplify)


def cmd_arrangement(args):
    arr = _parsed(RealArrangement.from_json, _load(args))
    mono = real_arrangement_monodromy(arr, seed=args.seed)
    if args.affine:
        mono = mono.affine()
    out = _presentation_out(vk_presentation(mono), args.simplify)
    out["monodromy"] = mono.to_json()
    return out


def cmd_charvar(args):
    p = _presentation(_load(args))
    rep = charvar.characteristic_variety(p, depth=args.depth, probe_order=args.probe_order)
    return {"fitting_generators": {str(i): [poly_to_json(f) for f in g]
                                   for i, g in rep.fitting_generators.items()},
            "fitting_text": {str(i): [f.text() for f in g]
                             for i, g in rep.fitting_generators.items()},
            "depth_table": [[chi.to_json(), d] for chi, d in rep.depth_table],
            "notes": rep.notes}


def cmd_depth(args):
    data = _load(args)
    p = _presentation(data["presentation"] if "presentation" in data else data)
    text = args.character if args.character else None
    if text is None:
        chi = _parsed(CharacterPoint.from_json, data["character"])
    else:
        chi = CharacterPoint(tuple(_fracs(text)))
    if args.generator_angles:
        d = charvar.depth_from_generator_angles(p, chi.angles)
    else:
        d = charvar.depth_at_character(p, chi)
    return {"character": chi.to_json(), "depth": d}


def cmd_cover_rank(args):
    data = _load(args)
    p = _presentation(data["presentation"])
    orders = _parsed(lambda v: [int(x) for x in v], data["orders"])
    images = _parsed(lambda v: [[int(x) for x in r] for r in v], data["images"])
    return {"b1": charvar.unbranched_cover_rank(p, orders, images)}


def cmd_cover_b1(args):
    data = _load(args)
    spec = _parsed(lambda d: charvar.BranchedCoverSpec(tuple(d["orders"]),
                                                       tuple(d["meridian_images"])), data)
    if "depths" in data:
        table = _parsed(lambda rows: {CharacterPoint.from_json(c): int(k) for c, k in rows},
                        data["depths"])
        missing = [c for c in spec.characters() if not c.is_trivial() and c not in table]
        if missing:
            raise ValueError(f"depth table lacks character {missing[0].to_json()}")
        b1 = charvar.branched_cover_b1(spec, table)
    else:
        p = _presentation(data["presentation"])
        images = _parsed(lambda v: [[int(x) for x in r] for r in v], data["generator_images"])
        ncomp = len(spec.meridian_images)

        def oracle(chi, active):
            if len(active) != ncomp:
                raise ValueError("presentation route needs every component active; "
                                 "supply a depth table instead")
            return charvar.depth_from_generator_angles(
                p, [chi.value_exponent(v) for v in images])
        b1 = charvar.branched_cover_b1(spec, oracle)
    return {"b1": b1}


def cmd_building_data(args):
    deg = charvar.cyclic_building_data(_ints(args.degrees), args.order, _ints(args.weights))
    return {"line_bundle_degree": deg}


def cmd_superabundance(args):
    data = _load(args)
    degree, points = _parsed(lambda d: (int(d["degree"]),
                                        [[parse_frac(x) for x in q] for q in d["points"]]), data)
    pc = globalalex.PointConditionSet(degree, tuple(map(tuple, points)))
    return {"superabundance": globalalex.superabundance_p2(pc), "degree": pc.degree,
            "points": len(pc.points)}


def _faces(text: str):
    def parse(s):
        out = []
        for part in filter(None, (x.strip() for x in s.split(","))):
            g, _, k = part.partition(":")
            out.append((parse_frac(g), int(k) if k else 1))
        return out
    return _parsed(parse, text)


def cmd_global_alex(args):
    res = globalalex.alexander_from_contributing_faces(args.degree, _faces(args.faces))
    return {"polynomial": _alex_json(res.polynomial),
            "components": [{"face": frac_str(g), "superabundance": s, "dimension": d}
                           for g, s, d in res.components],
            "notes": list(res.notes)}


def cmd_divisibility(args):
    cand = _alex_arg(args.candidate)
    locals_ = _parsed(globalalex.LocalTypeList.parse, args.locals)
    inf = _alex_arg(args.at_infinity) if args.at_infinity else None
    v = globalalex.check_divisibility(cand, locals_, inf, h1_is_z=args.h1_z)
    lp = globalalex.local_product(locals_)
    return {"divides": v.divides, "reasons": v.reasons,
            "certificates": {k: _alex_json(q) for k, q in v.certificates.items()},
            "local_product": {"reduced": _alex_json(lp.reduced),
                              "t_minus_1_exponent": lp.t_minus_1}}


def cmd_milnor(args):
    c = globalalex.milnor_charpoly_constraint(args.lines, _ints(args.multiplicities))
    return {"base_exponent": c.base_exponent,
            "bounds": {str(n): b for n, b in sorted(c.bounds.items())},
            "family": c.family_text(), "notes": list(c.notes)}


def cmd_lonne_bp(args):
    p = lonne.bp_presentation(args.n, args.d)
    return {"presentation": p.to_json(), "text": p.text()}


def cmd_lonne_disc(args):
    p = lonne.discriminant_presentation(args.n, args.d)
    return _presentation_out(p, False)


def cmd_catalog(args):
    if args.name:
        return {"entries": [lookup(args.name).to_json()]}
    return {"entries": catalog_listing()}


# parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="JSON input file (default: standard input)")
    common.add_argument("--output", help="write JSON here instead of standard output")
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for the generic-rotation retry stream")
    ap = argparse.ArgumentParser(prog="alexinv", parents=[common],
                                 description="Alexander-type invariants of plane curve complements")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(fn=fn)
        return p

    p = add("spectrum", cmd_spectrum, "spectrum of a quasi-homogeneous germ")
    p.add_argument("--weights", required=True)
    p = add("local-alex", cmd_local_alex, "local Alexander polynomial")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--weights")
    g.add_argument("--name")
    for name, fn, h in (("qadj", cmd_qadj, "quasi-adjunction regions and faces"),
                        ("lct", cmd_lct, "log canonical threshold polytope")):
        p = add(name, fn, h)
        p.add_argument("--name", help="catalog name; otherwise resolution JSON is read")
    for name, fn, h in (("vk", cmd_vk, "van Kampen presentation from braid monodromy"),
                        ("arrangement", cmd_arrangement, "real line arrangement pipeline")):
        p = add(name, fn, h)
        p.add_argument("--affine", action="store_true", help="drop the relation at infinity")
        p.add_argument("--simplify", action="store_true")
    p = add("charvar", cmd_charvar, "Fitting ideals of the Alexander module")
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--probe-order", type=int, default=None)
    p = add("depth", cmd_depth, "depth of a torsion character")
    p.add_argument("--character", help="comma-separated angles in [0, 1)")
    p.add_argument("--generator-angles", action="store_true",
                   help="angles are per generator rather than abelianization coordinates")
    add("cover-rank", cmd_cover_rank, "b1 of an unbranched abelian cover")
    add("cover-b1", cmd_cover_b1, "b1 of a branched abelian cover")
    p = add("building-data", cmd_building_data, "degree of the line bundle of a character")
    p.add_argument("--degrees", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--weights", required=True)
    add("superabundance", cmd_superabundance, "superabundance of point conditions on P^2")
    p = add("global-alex", cmd_global_alex, "Alexander polynomial from contributing faces")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--faces", required=True, help="gamma:s,... e.g. 1/6:1")
    p = add("divisibility", cmd_divisibility, "divisibility by local polynomials")
    p.add_argument("--candidate", required=True)
    p.add_argument("--locals", required=True, help="name:count,... e.g. cusp:6")
    p.add_argument("--at-infinity")
    p.add_argument("--h1-z", action="store_true", help="H1 of the complement is Z")
    p = add("milnor", cmd_milnor, "Milnor monodromy constraint for a line arrangement")
    p.add_argument("--lines", type=int, required=True)
    p.add_argument("--multiplicities", required=True)
    for name, fn, h in (("lonne-bp", cmd_lonne_bp, "Brieskorn-Pham discriminant presentation"),
                        ("lonne-disc", cmd_lonne_disc, "projective discriminant presentation")):
        p = add(name, fn, h)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
    p = add("catalog", cmd_catalog, "bundled singularity data")
    p.add_argument("--name")
    return ap


def _emit(doc: dict, args) -> None:
    text = json.dumps(doc, sort_keys=True, indent=2 if getattr(args, "pretty", False) else None)
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


@dataclass
class CommandResult:
    status: str
    payload: dict
    diagnostics: list = field(default_factory=list)
    exit_code: int = 0
    args: argparse.Namespace | None = None


def _error(code: int, msg: str, args=None) -> CommandResult:
    return CommandResult("error", {"schema": SCHEMA, "status": "error", "error": msg},
                         [msg], code, args)


def run(argv=None) -> CommandResult:
    """Parse arguments and run one subcommand; nothing is written."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return _error(code, "usage") if code else CommandResult("ok", {}, [], 0)
    try:
        payload = args.fn(args)
    except InputError as exc:
        return _error(2, f"malformed input: {exc}", args)
    except KeyError as exc:
        msg = str(exc.args[0]) if exc.args else "missing key"
        if msg.startswith("unknown catalog name"):
            return _error(1, msg, args)
        return _error(2, f"malformed input: missing key {msg}", args)
    except TypeError as exc:
        return _error(2, f"malformed input: {exc}", args)
    except (ValueError, ArithmeticError, IndexError) as exc:
        return _error(1, str(exc), args)
    return CommandResult("ok", {"schema": SCHEMA, "status": "ok", **payload}, [], 0, args)


def main(argv=None) -> int:
    res = run(argv)
    if res.args is not None:
        _emit(res.payload, res.args)
    for line in res.diagnostics:
        print(line, file=sys.stderr)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
