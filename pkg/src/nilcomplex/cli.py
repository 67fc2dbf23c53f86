"""Command-line front end.

Exit codes: 0 = success / all checks pass, 1 = verification failure,
2 = usage error.  All randomness flows from --seed.
"""

from __future__ import annotations

import argparse
import json
from fractions import Fraction

from . import catalogue, charts, group, moduli, orbits
from .acs import AlmostComplexStructure, classify_m, is_integrable
from .catalogue import DomainViolation, SamplingExhausted, UnknownAlgebra
from .exactnum import rational_str


def _fail(msg: str, code: int = 1):
    print(f"FAIL: {msg}")
    raise SystemExit(code)


def _params_from_args(pairs):
    out = {}
    for p in pairs or ():
        if "=" not in p:
            raise SystemExit(2)
        k, v = p.split("=", 1)
        out[k.strip()] = Fraction(v)
    return out


def _load_matrix(path):
    with open(path) as f:
        return json.load(f)


def _emit(args, payload, text):
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        print(text)


def cmd_list(args):
    rows = []
    for e in catalogue.entries():
        alias = f" ({', '.join(e.aliases)})" if e.aliases else ""
        rows.append(f"{e.name}{alias}")
    _emit(args, {"algebras": [e.name for e in catalogue.entries()],
                 "aliases": {e.name: list(e.aliases) for e in catalogue.entries()}},
          "\n".join(rows))
    return 0


def cmd_show(args):
    e = catalogue.get(args.algebra)
    if args.json:
        doc = [a for a in catalogue.dump_json()["algebras"] if a["name"] == e.name][0]
        print(json.dumps(doc, indent=1, sort_keys=True))
        return 0
    lines = [f"{e.name}  aliases: {', '.join(e.aliases) or '-'}",
             f"expected moduli dimension: {e.expected_dim}",
             "brackets:"]
    for (i, j), row in sorted(e.algebra.table.items()):
        out = " + ".join(f"{rational_str(c)}*x{k}" if c != 1 else f"x{k}"
                         for k, c in sorted(row.items()))
        lines.append(f"  [x{i}, x{j}] = {out}")
    lines.append("families:")
    for f in e.families:
        tag = "" if f.samplable else "  (metadata only)"
        lines.append(f"  {f.name}: params {', '.join(f.param_names())};"
                     f" conditions {list(f.conditions)}{tag}")
    lines.append("representatives:")
    for r in e.representatives:
        extra = f" [{r.expected_m}]" if r.expected_m else ""
        chart = " +chart" if r.chart else ""
        lines.append(f"  {r.name}: params {', '.join(r.param_names()) or '-'}{extra}{chart}")
    print("\n".join(lines))
    return 0


def _resolve_J(args, e):
    """J from --rep/--param, --family/--param, or --j FILE."""
    if args.j:
        return AlmostComplexStructure.from_json(_load_matrix(args.j)), None
    params = _params_from_args(args.param)
    if args.rep:
        r = e.representative(args.rep)
        return r.instantiate(params), r
    fam = e.family(args.family) if args.family else e.families[0]
    if set(fam.param_names()) - set(params):
        params = {**fam.random_admissible(args.seed), **params}
    return fam.instantiate(params), fam


def cmd_sample(args):
    e = catalogue.get(args.algebra)
    fam = e.family(args.family) if args.family else e.families[0]
    values = fam.random_admissible(args.seed)
    J = fam.instantiate(values)
    payload = {"algebra": e.name, "family": fam.name,
               "params": {k: rational_str(v) for k, v in sorted(values.items())},
               "J": J.to_json(), "integrable": is_integrable(e.algebra, J)}
    _emit(args, payload,
          f"{e.name}/{fam.name} sample at "
          + ", ".join(f"{k}={rational_str(v)}" for k, v in sorted(values.items()))
          + f"\nintegrable: {payload['integrable']}\n"
          + "\n".join(" ".join(rational_str(x) for x in row) for row in J.m))
    return 0


def cmd_verify(args):
    e = catalogue.get(args.algebra)
    try:
        if args.rep or args.j:
            J, _ = _resolve_J(args, e)
            ok = is_integrable(e.algebra, J)
            _emit(args, {"integrable": ok},
                  f"{e.name}: integrable = {ok}")
            return 0 if ok else 1
        fams = [e.family(args.family)] if args.family else \
            [f for f in e.families if f.samplable]
        results = []
        for fam in fams:
            bad = 0
            for n in range(args.samples):
                values = fam.random_admissible(args.seed + n)
                J = fam.instantiate(values)
                if not is_integrable(e.algebra, J):
                    bad += 1
            results.append({"family": fam.name, "samples": args.samples, "failures": bad})
            print(f"{e.name}/{fam.name}: {args.samples - bad}/{args.samples} integrable")
        total_bad = sum(r["failures"] for r in results)
        return 0 if total_bad == 0 else 1
    except DomainViolation as ex:
        _fail(f"DomainViolation: {ex}")


def cmd_classify_m(args):
    e = catalogue.get(args.algebra)
    J, _ = _resolve_J(args, e)
    kind = classify_m(e.algebra, J)
    try:
        inv = orbits.orbit_invariants(e, J)
        params = {k: rational_str(v) for k, v in inv.get("params", {}).items()}
        text = f"m is {kind}; matches {inv['representative']} at {params}"
        payload = {"m": kind, "representative": inv["representative"], "params": params}
    except orbits.NotInRepresentativeForm:
        text = f"m is {kind}"
        payload = {"m": kind, "representative": None}
    _emit(args, payload, text)
    return 0


def cmd_act(args):
    e = catalogue.get(args.algebra)
    J = AlmostComplexStructure.from_json(_load_matrix(args.j))
    phi = [[Fraction(x) for x in row] for row in _load_matrix(args.phi)]
    try:
        out = orbits.act(e.algebra, phi, J)
    except orbits.NotAutomorphism as ex:
        _fail(str(ex))
    print(json.dumps(out.to_json()))
    return 0


def cmd_verify_witness(args):
    doc = _load_matrix(args.file)
    e = catalogue.get(args.algebra or doc["algebra"])
    J1 = AlmostComplexStructure.from_json(doc["J1"])
    J2 = AlmostComplexStructure.from_json(doc["J2"])
    if "phi" not in doc and args.search:
        found = orbits.randomized_equivalence_search(e, J1, J2, seed=args.seed,
                                                     attempts=args.search)
        print(f"randomized search: {found['status']}")
        return 0 if found["status"] == "equivalent" else 1
    phi = [[Fraction(x) for x in row] for row in doc["phi"]]
    ok = orbits.verify_witness(e.algebra, J1, J2, phi)
    print(f"witness {'accepted' if ok else 'REJECTED'} for {e.name}")
    return 0 if ok else 1


def cmd_mul(args):
    e = catalogue.get(args.algebra)
    a = [Fraction(x) for x in _load_matrix(args.a)]
    x = [Fraction(x) for x in _load_matrix(args.x)]
    prod = group.multiply(e.algebra, a, x)
    print(json.dumps([rational_str(c) for c in prod]))
    return 0


def cmd_chart_verify(args):
    e = catalogue.get(args.algebra)
    reps = [e.representative(args.rep)] if args.rep else \
        [r for r in e.representatives if r.chart is not None]
    failures = 0
    for r in reps:
        if r.chart is None:
            print(f"{e.name}/{r.name}: no chart catalogued")
            continue
        for n in range(args.seeds):
            values = r.random_admissible(args.seed + n,
                                         extra_conditions=r.chart.conditions)
            phis = charts.chart_polys(r, values)
            J = r.instantiate(values)
            ahf = charts.antiholo_fields(e, J)
            shown = {k: rational_str(v) for k, v in sorted(values.items())}
            print(f"{e.name}/{r.name} @ {shown}")
            grid_bad = 0
            for j in range(1, 7):
                cells = []
                for k in range(1, 4):
                    res = charts.apply_derivation(ahf[j - 1], phis[k - 1])
                    ok = res.is_zero()
                    grid_bad += 0 if ok else 1
                    cells.append("pass" if ok else "FAIL")
                print(f"  X~_{j}^- phi^1..3: " + "  ".join(cells))
            try:
                charts.verify_chart(e, r, values, jacobian_points=10,
                                    seed=args.seed + n, phis=phis)
                charts.verify_chart_multiplication(e, r, values, pairs=args.pairs,
                                                   seed=args.seed + n, phis=phis)
                status = "pass"
            except (charts.NotAnnihilated, charts.DegenerateJacobian,
                    charts.Mismatch, AssertionError) as ex:
                status = f"FAIL ({ex})"
            if status != "pass" or grid_bad:
                failures += 1
            print(f"  jacobian + relations + multiplication: {status}")
    return 0 if failures == 0 else 1


def cmd_moduli_dim(args):
    e = catalogue.get(args.algebra)
    fam = e.family(args.family) if args.family else None
    rep = moduli.dimension_report(e, family=fam, samples=args.samples,
                                  tol=args.tol, seed=args.seed)
    ok = rep["agree"] >= rep["tangent_dims"].count(rep["expected_dim"])
    verdict = "pass" if rep["agree"] == len(rep["tangent_dims"]) else "FAIL"
    if args.json:
        print(json.dumps(rep, indent=1, sort_keys=True))
    else:
        for s in rep["samples"]:
            print(f"  sample {s['params']}: tangent dim {s['tangent_dim']}, "
                  f"family rank {s['family_rank']}")
        print(f"{e.name}: expected {rep['expected_dim']}, "
              f"agree {rep['agree']}/{len(rep['tangent_dims'])} -> {verdict}")
    return 0 if verdict == "pass" else 1


def cmd_nonexistence_check(args):
    rep = catalogue.nonexistence_spotcheck(args.name, samples=args.samples,
                                           seed=args.seed)
    if args.json:
        print(json.dumps(rep, indent=1, sort_keys=True))
    else:
        n = len(rep["samples"])
        bad = sum(1 for s in rep["samples"] if s["integrable"])
        print(f"{args.name}: {n - bad}/{n} samples fail integrability "
              f"(as they must); borrowed family {rep['borrowed_family']}")
    return 0 if rep["all_fail"] else 1


def cmd_report(args):
    name = args.algebra
    try:
        e = catalogue.get(name)
    except UnknownAlgebra:
        norm = name.upper().replace(",", "").replace("-", "M").replace("_", "")
        if norm in ("M14M1", "M18M1"):
            args.name = name
            args.samples = 20
            return cmd_nonexistence_check(args)
        raise
    sections = {}

    def section(label, fn):
        try:
            fn()
            sections[label] = "pass"
        except Exception as ex:  # noqa: BLE001 - report collects all failures
            sections[label] = f"FAIL: {type(ex).__name__}: {str(ex)[:100]}"

    def family_sweep():
        for fam in e.families:
            if not fam.samplable:
                continue
            for n in range(args.samples):
                J = fam.instantiate(fam.random_admissible(args.seed + n))
                assert is_integrable(e.algebra, J), fam.name

    def rep_tables():
        from .exactnum import GaussianRational
        from .expr import evaluate
        from .acs import check_m_table
        for r in e.representatives:
            values = r.random_admissible(args.seed)
            J = r.instantiate(values)
            assert is_integrable(e.algebra, J), r.name
            if r.expected_m:
                assert classify_m(e.algebra, J) == r.expected_m, r.name
            if r.m_table:
                env = dict(r._env(values))
                claimed = {}
                for pair, co in r.m_table:
                    coeffs = [GaussianRational(0)] * 6
                    for k, ce in co:
                        coeffs[k - 1] = GaussianRational.coerce(evaluate(ce, env))
                    claimed[pair] = coeffs
                assert check_m_table(e.algebra, J, claimed), r.name

    def automorphisms():
        for fam in e.automorphisms:
            for n in range(5):
                phi = fam.instantiate_matrix(fam.random_admissible(args.seed + n))
                assert orbits.is_automorphism(e.algebra, phi), fam.name

    def chart_section():
        for r in e.representatives:
            if r.chart is None:
                continue
            values = r.random_admissible(args.seed,
                                         extra_conditions=r.chart.conditions)
            phis = charts.chart_polys(r, values)
            charts.verify_chart(e, r, values, jacobian_points=5, phis=phis)
            charts.verify_chart_multiplication(e, r, values, pairs=20, phis=phis)

    def moduli_section():
        rep = moduli.dimension_report(e, samples=5, tol=args.tol, seed=args.seed)
        assert rep["agree"] == 5, rep["tangent_dims"]

    section("family integrability sweep", family_sweep)
    section("representative tables", rep_tables)
    section("automorphism families", automorphisms)
    section("holomorphic charts & multiplication", chart_section)
    section("moduli dimension", moduli_section)
    if args.json:
        print(json.dumps({"algebra": e.name, "sections": sections},
                         indent=1, sort_keys=True))
    else:
        print(f"report for {e.name}")
        for label, status in sections.items():
            print(f"  {label}: {status}")
    return 0 if all(v == "pass" for v in sections.values()) else 1


def build_parser():
    ap = argparse.ArgumentParser(
        prog="nilcomplex",
        description="Exact verification of the catalogue of complex "
                    "structures on 6-dimensional nilpotent Lie algebras")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p, algebra_positional=False):
        if algebra_positional:
            p.add_argument("algebra")
        else:
            p.add_argument("--algebra", required=True)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("list", help="catalogued algebras")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_list)

    p = sub.add_parser("show", help="brackets, families, representatives")
    common(p, True)
    p.set_defaults(fn=cmd_show)

    p = sub.add_parser("sample", help="random admissible family member")
    common(p)
    p.add_argument("--family")
    p.set_defaults(fn=cmd_sample)

    p = sub.add_parser("verify", help="integrability of families/representatives")
    common(p)
    p.add_argument("--family")
    p.add_argument("--rep")
    p.add_argument("--j", help="JSON file with a 6x6 matrix")
    p.add_argument("--param", action="append", metavar="K=V")
    p.add_argument("--samples", type=int, default=10)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("classify-m", help="abelian/Heisenberg classification")
    common(p)
    p.add_argument("--family")
    p.add_argument("--rep")
    p.add_argument("--j")
    p.add_argument("--param", action="append", metavar="K=V")
    p.set_defaults(fn=cmd_classify_m)

    p = sub.add_parser("act", help="apply an automorphism to J")
    common(p)
    p.add_argument("--j", required=True)
    p.add_argument("--phi", required=True)
    p.set_defaults(fn=cmd_act)

    p = sub.add_parser("verify-witness", help="check an equivalence witness file")
    p.add_argument("file")
    p.add_argument("--algebra")
    p.add_argument("--search", type=int, metavar="ATTEMPTS",
                   help="if the file has no phi, try sampled automorphisms; "
                        "the outcome is 'equivalent' or 'inconclusive'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify_witness)

    p = sub.add_parser("mul", help="group multiplication in coordinates")
    p.add_argument("algebra")
    p.add_argument("a")
    p.add_argument("x")
    p.set_defaults(fn=cmd_mul)

    p = sub.add_parser("chart-verify", help="holomorphy + multiplication identities")
    common(p, True)
    p.add_argument("--rep")
    p.add_argument("--seeds", type=int, default=5)
    p.add_argument("--pairs", type=int, default=20)
    p.set_defaults(fn=cmd_chart_verify)

    p = sub.add_parser("moduli-dim", help="sampled tangent dimensions")
    common(p, True)
    p.add_argument("--family")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--tol", type=float, default=moduli.DEFAULT_TOL)
    p.set_defaults(fn=cmd_moduli_dim)

    p = sub.add_parser("nonexistence-check",
                       help="gamma=+1 families fail on the gamma=-1 twins")
    p.add_argument("name", choices=catalogue.spotcheck_names())
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_nonexistence_check)

    p = sub.add_parser("report", help="full verification dossier")
    common(p, True)
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--tol", type=float, default=moduli.DEFAULT_TOL)
    p.set_defaults(fn=cmd_report)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit as ex:
        return int(ex.code or 0)
    except (UnknownAlgebra, DomainViolation, SamplingExhausted) as ex:
        print(f"FAIL: {type(ex).__name__}: {ex}")
        return 1
    except FileNotFoundError as ex:
        print(f"error: {ex}")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
