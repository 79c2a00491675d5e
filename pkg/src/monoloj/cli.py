"""Command-line front end.

Exit codes: 0 success, 1 internal assertion failure, 2 invalid input,
3 unsupported dimension or mode (including non-exact filtration results).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from math import ceil

from . import io
from .arith import InvalidInput, UnsupportedDimension, fmt
from .closure import closure_contains, closure_generators, contains_closure, power_oracle_member
from .exponent import Power, lct, lct_diagonal_oracle, loj_filtration, loj_ideal, sharpness_witness, theta
from .families import analyze, loj_at, walls
from .geometry import MonomialIdeal, member, member_oracle, newton_polyhedron, scale
from .infinity import loj_infinity_min, nondegenerate_at_infinity
from .multiplicity import check_teissier, milnor_and_gradient, mixed_multiplicities

EXIT_INTERNAL, EXIT_INPUT, EXIT_UNSUPPORTED = 1, 2, 3


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, plain: str, payload: dict) -> None:
        if self.as_json:
            print(json.dumps(payload, indent=2, sort_keys=True))
        else:
            print(plain)


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise InvalidInput(f"expected comma-separated integers, got {text!r}") from exc


def _ideal(path) -> MonomialIdeal:
    return io.ideal_from_json(io.load_json(path))


def _filtration(path):
    obj = io.load_json(path)
    if isinstance(obj, dict) and "kind" in obj:
        return io.filtration_from_json(obj)
    return Power(io.ideal_from_json(obj))


# -- subcommands ---------------------------------------------------------------------


def cmd_facets(args, out):
    poly = newton_polyhedron(_ideal(args.ideal))
    lines = [f"{list(f.normal)} {fmt(f.offset)}{' compact' if f.compact else ''}" for f in poly.facets]
    out.emit("\n".join(lines), io.polyhedron_to_json(poly))


def cmd_closure(args, out):
    ideal = closure_generators(_ideal(args.ideal))
    out.emit("\n".join(str(list(g)) for g in ideal.gens), io.ideal_to_json(ideal))


def cmd_member(args, out):
    ideal = _ideal(args.ideal)
    point = _int_list(args.point)
    if len(point) != ideal.dim:
        raise InvalidInput("point dimension mismatch")
    poly = newton_polyhedron(ideal)
    ans = member(poly, point)
    payload = {"member": ans}
    if args.verify:
        lp = member_oracle(poly, point)
        power, k = power_oracle_member(ideal, point)
        payload["verify"] = {"lp": lp, "power": power, "k": k, "agree": lp == power == ans}
    out.emit(_bool(ans), payload)
    return _verdict(args, payload)


def cmd_contain(args, out):
    a, b = _ideal(args.a), _ideal(args.b)
    cert = contains_closure(b, args.q, a, args.p)
    payload = {"member": cert.member, "certificate_ok": cert.check()}
    if cert.member:
        payload["witness"] = {"kind": "convex", "generators": len(cert.witness)}
    else:
        w = cert.witness
        payload["witness"] = {"kind": "facet", "monomial": list(w.monomial), "normal": list(w.normal),
                              "offset": fmt(w.offset), "deficit": fmt(w.deficit)}
    if args.verify:
        target = scale(newton_polyhedron(a), args.p)
        oracle = all(member_oracle(target, g) for g in b.power(args.q).gens)
        payload["verify"] = {"lp": oracle, "agree": oracle == cert.member and cert.check()}
    out.emit(_bool(cert.member), payload)
    return _verdict(args, payload)


def _loj_payload(res):
    return {
        "value": fmt(res.value),
        "maximizers": [list(u) for u in res.maximizers],
        "per_candidate": [{"u": list(c.u), "va": fmt(c.va), "vb": fmt(c.vb), "ratio": fmt(c.ratio)}
                          for c in res.per_candidate],
        "lower_bound_only": res.lower_bound_only,
    }


def cmd_loj(args, out):
    a, b = _filtration(args.a), _filtration(args.b)
    res = loj_filtration(a, b)
    payload = _loj_payload(res)
    if args.verify and isinstance(a, Power) and isinstance(b, Power) and res.value is not None:
        checks = []
        for p in (1, 2, 3):
            expected = ceil(p * res.value)
            if expected > 64:
                continue
            found = next(q for q in range(1, expected + 1) if closure_contains(b.ideal, q, a.ideal, p))
            checks.append({"p": p, "min_q": found, "expected": expected})
        payload["verify"] = {"containment": checks, "agree": all(c["min_q"] == c["expected"] for c in checks)}
    plain = fmt(res.value) + (" (lower bound)" if res.lower_bound_only else "")
    out.emit(plain, payload)
    if res.lower_bound_only:
        return EXIT_UNSUPPORTED
    return _verdict(args, payload)


def cmd_lct(args, out):
    spec = _filtration(args.ideal)
    target = spec.ideal if isinstance(spec, Power) else spec
    value = lct(target)
    payload = {"lct": fmt(value)}
    if args.verify:
        oracle = lct_diagonal_oracle(target)
        payload["verify"] = {"diagonal": fmt(oracle), "agree": oracle == value}
    out.emit(fmt(value), payload)
    return _verdict(args, payload)


def cmd_theta(args, out):
    rep = theta(_ideal(args.ideal))
    payload = {"lct": fmt(rep.lct), "loj_m": fmt(rep.loj_m), "theta": fmt(rep.theta), "rigid": rep.rigid,
               "diagonal_facet": None if rep.diagonal_facet is None else
               {"normal": list(rep.diagonal_facet[0]), "offset": fmt(rep.diagonal_facet[1])}}
    out.emit(f"{fmt(rep.theta)}\nrigid: {_bool(rep.rigid)}", payload)


def cmd_mixed(args, out):
    i_ideal, j_ideal = _ideal(args.i), _ideal(args.j)
    table = mixed_multiplicities(i_ideal, j_ideal, args.n0)
    payload = {"dim": table.dim, "e": list(table.e), "window": {"n0": table.window[0], "span": table.window[1]},
               "stable": table.stable}
    if args.verify:
        rep = check_teissier(i_ideal, j_ideal)
        payload["verify"] = {"checks": [{"name": c.name, "holds": c.holds, "detail": c.detail} for c in rep.checks],
                             "agree": rep.ok}
    out.emit(" ".join(str(e) for e in table.e), payload)
    return _verdict(args, payload)


def cmd_milnor(args, out):
    rep = milnor_and_gradient(_int_list(args.exponents))
    payload = {"mu": rep.mu, "L": fmt(rep.loj),
               "checks": [{"name": c.name, "holds": c.holds, "detail": c.detail} for c in rep.checks]}
    out.emit(f"mu={rep.mu} L={fmt(rep.loj)}", payload)
    return 0 if all(c.holds for c in rep.checks) else EXIT_INTERNAL


def cmd_family(args, out):
    spec = io.family_from_json(io.load_json(args.file))
    if args.action == "walls":
        ws = walls(spec)
        out.emit("\n".join(str(w) for w in ws) or "(none)", {"walls": [str(w) for w in ws]})
        return
    rep = analyze(spec)
    chambers = []
    lines = ["walls: " + (", ".join(str(w) for w in rep.walls) or "(none)")]
    for ch in rep.chambers:
        left = "[" if ch.closed_lo else "("
        right = "]" if ch.closed_hi else ")"
        interval = f"{left}{ch.lo}, {ch.hi}{right}"
        labels = [io.label_json(l) for l in ch.maximizers]
        chambers.append({"interval": interval, "lo": str(ch.lo), "hi": str(ch.hi), "sample": fmt(ch.sample),
                         "maximizers": labels, "formula": {"a0": fmt(ch.formula.a0), "a1": fmt(ch.formula.a1),
                                                           "b0": fmt(ch.formula.b0), "b1": fmt(ch.formula.b1)}})
        lines.append(f"{interval}: {labels}")
    lines.append(f"L(0)={fmt(loj_at(spec, 0))} L(1)={fmt(loj_at(spec, 1))}")
    lines.append(f"inv_L_affine: {_bool(rep.inv_L_affine)}")
    payload = {"walls": [str(w) for w in rep.walls], "chambers": chambers,
               "wall_maximizers": [[io.label_json(l) for l in m] for m in rep.wall_maximizers],
               "inv_L_affine": rep.inv_L_affine, "L0": fmt(loj_at(spec, 0)), "L1": fmt(loj_at(spec, 1))}
    out.emit("\n".join(lines), payload)


def cmd_sharpness(args, out):
    vals = [_int_list(part) for part in args.valuations.split(";") if part.strip()]
    w = sharpness_witness(vals, args.p)
    payload = {"N": w.n, "p": w.p, "q": w.q, "witness": list(w.witness),
               "checks": [{"v": list(v), "v_mq": fmt(l), "v_JNp": fmt(r), "holds": l >= r}
                          for v, l, r in w.valuation_checks],
               "facet": {"normal": list(w.facet[0]), "offset": w.facet[1]},
               "witness_outside": w.witness_outside, "ok": w.ok}
    out.emit(f"N={w.n} p={w.p} q={w.q} witness={list(w.witness)} ok={_bool(w.ok)}", payload)
    return 0 if w.ok else EXIT_INTERNAL


def cmd_infinity_check(args, out):
    res = nondegenerate_at_infinity(io.map_from_json(io.load_json(args.file)))
    payload = {"nondegenerate": res.nondegenerate,
               "offending_w": None if res.offending_w is None else list(res.offending_w),
               "tested": [list(w) for w in res.tested]}
    plain = "nondegenerate" if res.nondegenerate else f"degenerate at w={list(res.offending_w)}"
    out.emit(plain, payload)


def cmd_infinity_min(args, out):
    rows = io.table_from_json(io.load_json(args.file))
    labels = args.labels.split(",") if args.labels else None
    value = loj_infinity_min(rows, labels)
    out.emit(fmt(value), {"value": fmt(value)})


def _random_ideal(rng: random.Random, dim: int, top: int = 6) -> MonomialIdeal:
    gens = [tuple(rng.randint(1, top) if i == j else 0 for j in range(dim)) for i in range(dim)]
    gens += [tuple(rng.randint(0, top - 1) for _ in range(dim)) for _ in range(rng.randint(0, 3))]
    gens = [g for g in gens if any(g)]
    return MonomialIdeal(tuple(gens))


def cmd_selftest(args, out):
    rng = random.Random(args.seed)
    failures = []
    for trial in range(args.count):
        dim = rng.choice((2, 2, 3))
        ideal = _random_ideal(rng, dim)
        poly = newton_polyhedron(ideal)
        point = tuple(rng.randint(0, 6) for _ in range(dim))
        if member(poly, point) != member_oracle(poly, point):
            failures.append(f"membership {ideal.gens} {point}")
        if member(poly, point) != power_oracle_member(ideal, point)[0]:
            failures.append(f"power oracle {ideal.gens} {point}")
        if closure_generators(closure_generators(ideal)) != closure_generators(ideal):
            failures.append(f"idempotence {ideal.gens}")
        if dim == 2:
            loj = loj_ideal(ideal, MonomialIdeal.maximal(2)).value
            p = rng.randint(1, 3)
            expected = ceil(p * loj)
            if expected <= 64:
                found = next(q for q in range(1, expected + 1)
                             if closure_contains(MonomialIdeal.maximal(2), q, ideal, p))
                if found != expected:
                    failures.append(f"loj containment {ideal.gens} p={p}")
        if lct(ideal) != lct_diagonal_oracle(ideal):
            failures.append(f"lct oracle {ideal.gens}")
        if theta(ideal).theta < 1:
            failures.append(f"theta {ideal.gens}")
    payload = {"seed": args.seed, "count": args.count, "failures": failures}
    out.emit(f"{args.count - len(failures)}/{args.count} passed" if not failures else "\n".join(failures), payload)
    return EXIT_INTERNAL if failures else 0


def _verdict(args, payload) -> int:
    if getattr(args, "verify", False) and not payload.get("verify", {}).get("agree", True):
        return EXIT_INTERNAL
    return 0


# -- parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the full result as JSON")
    common.add_argument("--verify", action="store_true", help="also run the brute-force oracle")

    parser = argparse.ArgumentParser(prog="monoloj", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("facets", cmd_facets, "Newton polyhedron facets of an ideal")
    p.add_argument("ideal")
    p = add("closure", cmd_closure, "generators of the integral closure")
    p.add_argument("ideal")
    p = add("member", cmd_member, "is a monomial in the integral closure?")
    p.add_argument("ideal")
    p.add_argument("--point", required=True, help="exponent vector, e.g. 1,4")
    p = add("contain", cmd_contain, "decide b^q inside closure(a^p)")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--q", type=int, required=True)
    p = add("loj", cmd_loj, "Łojasiewicz exponent Loj_b(a)")
    p.add_argument("--a", required=True, help="ideal or filtration file")
    p.add_argument("--b", required=True, help="ideal or filtration file")
    p = add("lct", cmd_lct, "log canonical threshold")
    p.add_argument("--ideal", required=True, help="ideal or filtration file")
    p = add("theta", cmd_theta, "Θ = lct * Loj_m / d and rigidity")
    p.add_argument("--ideal", required=True)
    p = add("mixed", cmd_mixed, "mixed multiplicities e(I^[i], J^[d-i])")
    p.add_argument("--i", required=True)
    p.add_argument("--j", required=True)
    p.add_argument("--n0", type=int, default=None)
    p = add("milnor", cmd_milnor, "Milnor number and gradient exponent of a Brieskorn polynomial")
    p.add_argument("--exponents", required=True, help="e.g. 3,4")
    p = add("family", cmd_family, "one-parameter wall and chamber analysis")
    p.add_argument("action", choices=("analyze", "walls"))
    p.add_argument("file")
    p = add("sharpness", cmd_sharpness, "sharpness construction for a valuation set")
    p.add_argument("--valuations", required=True, help="semicolon-separated pairs, e.g. '1,1;1,2'")
    p.add_argument("--p", type=int, default=1)
    p = add("infinity-check", cmd_infinity_check, "Newton nondegeneracy at infinity (two variables)")
    p.add_argument("file")
    p = add("infinity-min", cmd_infinity_min, "finite-minimum exponent from a divisor table")
    p.add_argument("file")
    p.add_argument("--labels", default=None, help="restrict to these divisor labels (local version)")
    p = add("selftest", cmd_selftest, "randomized oracle cross-checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=50)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = _Out(args.json)
    try:
        code = args.func(args, out)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except UnsupportedDimension as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except AssertionError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
