"""Command-line interface.

Exit codes: 0 on success, 1 when a mathematical invariant or cross-route
agreement fails, 2 on input errors (malformed documents, unknown
components, bad arguments).  Diagnostics go to standard error.  The
default output is a human-readable table; --json switches every
subcommand to machine-readable output in which all exact rationals are
strings ("a/b") and all integers are JSON integers.

The default normalization mode for the Sato-Levine computation is
"derived"; the environment variable LESCOP_NORMALIZATION may change the
default, and a document's "normalization" field overrides both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import documents, floer, invariants, lens, presentation, ring
from .corpus import corpus as builtin_corpus
from .corpus import descriptions as corpus_descriptions

ENV_NORMALIZATION = "LESCOP_NORMALIZATION"

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_INPUT = 2


class CliInputError(Exception):
    """Bad command usage that is not a document error (exit code 2)."""


def _err(msg):
    print(f"error: {msg}", file=sys.stderr)


def _rat_str(x):
    return str(Fraction(x))


def _poly_json(p):
    return {ring.exponent_str(k): str(Fraction(c)) for k, c in p.terms.items()}


def _emit(args, human_lines, payload):
    if args.json:
        print(json.dumps(payload))
    else:
        for line in human_lines:
            print(line)


def _load_document(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise CliInputError(f"cannot read {path}: {e}") from None
    return documents.parse(text)


def _resolve_mode(doc):
    mode = os.environ.get(ENV_NORMALIZATION)
    if mode is not None and mode not in invariants.NORMALIZATION_MODES:
        raise CliInputError(
            f"{ENV_NORMALIZATION} must be one of {list(invariants.NORMALIZATION_MODES)}, "
            f"got {mode!r}"
        )
    if doc.normalization is not None:
        mode = doc.normalization
    return mode or invariants.DERIVED


def _bundle(doc):
    if doc.bundle_w2 is None:
        return None
    return floer.BundleSpec(w2=doc.bundle_w2)


def cmd_alexander(args):
    doc = _load_document(args.file)
    p = doc.presentation
    comp = args.component or (p.components[0].name if p.components else None)
    if comp is None:
        raise invariants.WrongComponentCountError("document has no components")
    poly = invariants.alexander(p, comp)
    report = invariants.InvariantReport(
        name="alexander", value=poly, route="symmetrized Seifert determinant"
    )
    d2 = poly.second_derivative_at_one()
    _emit(
        args,
        [
            f"component = {comp}",
            f"alexander = {poly}",
            f"delta2_at_1 = {d2}",
        ],
        {
            "component": comp,
            "alexander": _poly_json(report.value),
            "display": str(poly),
            "delta2_at_1": _rat_str(d2),
        },
    )
    return EXIT_OK


_LESCOP_ROUTES = {
    1: "Delta''(1)/2 - h/12",
    2: "-h * sato_levine",
    3: "h * mu_squared",
}


def cmd_lescop(args):
    doc = _load_document(args.file)
    p = doc.presentation
    n = len(p.components)
    report = invariants.InvariantReport(
        name="lescop",
        value=invariants.lescop(p),
        route=_LESCOP_ROUTES.get(n, "vanishes for b1 >= 4"),
    )
    _emit(
        args,
        [
            f"lescop = {report.value}",
            f"b1 = {n}",
            f"torsion_order = {p.base_order}",
            f"route = {report.route}",
        ],
        {
            "lescop": _rat_str(report.value),
            "b1": n,
            "torsion_order": p.base_order,
            "route": report.route,
        },
    )
    return EXIT_OK


def cmd_sato_levine(args):
    doc = _load_document(args.file)
    p = doc.presentation
    mode = _resolve_mode(doc)
    report = invariants.InvariantReport(
        name="sato_levine",
        value=invariants.sato_levine(p, mode),
        route=f"Delta'' jump under blow-down, {mode} normalization",
    )
    value = report.value
    disagree = invariants.modes_disagree(p)
    payload = {"sato_levine": _rat_str(value), "mode": mode, "mode_mismatch": disagree}
    lines = [f"sato_levine = {value}", f"mode = {mode}"]
    if disagree:
        both = {
            m: invariants.sato_levine(p, m) for m in invariants.NORMALIZATION_MODES
        }
        payload["modes"] = {m: _rat_str(v) for m, v in both.items()}
        print(
            "warning: normalization modes disagree: "
            + ", ".join(f"{m}={v}" for m, v in both.items()),
            file=sys.stderr,
        )
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_mu2(args):
    doc = _load_document(args.file)
    p = doc.presentation
    mode = _resolve_mode(doc)
    report = invariants.InvariantReport(
        name="mu_squared",
        value=invariants.milnor_mu_squared(p, mode),
        route="sato_levine jump under blow-down of the third component",
    )
    _emit(
        args,
        [f"mu_squared = {report.value}", f"mode = {mode}"],
        {"mu_squared": _rat_str(report.value), "mode": mode},
    )
    return EXIT_OK


def cmd_chi(args):
    doc = _load_document(args.file)
    p = doc.presentation
    bundle = _bundle(doc)
    reports = {}
    if args.route in ("closed", "both"):
        reports[floer.CLOSED_FORM] = floer.chi_closed_form(p, bundle)
    if args.route in ("triangle", "both"):
        reports[floer.TRIANGLE] = floer.chi_via_triangle(p, bundle)
    any_report = next(iter(reports.values()))
    lines = [f"chi[{route}] = {r.chi}" for route, r in reports.items()]
    lines.append(f"ambiguity = {any_report.ambiguity}")
    payload = {
        "routes": {route: r.chi for route, r in reports.items()},
        "ambiguity": any_report.ambiguity,
        "bundle_w2": list(any_report.bundle.w2),
    }
    if len(reports) == 2:
        chis = {r.chi for r in reports.values()}
        agree = len(chis) == 1
        payload["agree"] = agree
        if not agree:
            _err(f"routes disagree: {payload['routes']}")
            _emit(args, lines, payload)
            return EXIT_INVARIANT
        lines.append("routes agree")
    _emit(args, lines, payload)
    return EXIT_OK


def cmd_casson(args):
    try:
        text = Path(args.chainfile).read_text(encoding="utf-8")
    except OSError as e:
        raise CliInputError(f"cannot read {args.chainfile}: {e}") from None
    chain = documents.parse_chain(text)
    report = invariants.InvariantReport(
        name="casson",
        value=invariants.casson(chain),
        route="surgery ledger: sum of sign * Delta''(1)/2 per step",
    )
    chi = floer.taubes_chi(chain)
    _emit(
        args,
        [f"casson = {report.value}", f"taubes_chi = {chi}"],
        {"casson": _rat_str(report.value), "taubes_chi": _rat_str(chi)},
    )
    return EXIT_OK


def cmd_lens(args):
    breakdown = lens.rep_classes(args.p)
    _emit(
        args,
        [
            f"p = {breakdown.p}",
            f"central = {breakdown.central_classes}",
            f"spheres = {breakdown.sphere_classes}",
            f"factor = {breakdown.euler_factor}",
        ],
        {
            "central": breakdown.central_classes,
            "spheres": breakdown.sphere_classes,
            "factor": breakdown.euler_factor,
        },
    )
    return EXIT_OK


def _verify_checks(doc):
    """Run every applicable cross-check; yields (name, status, detail)."""
    p = doc.presentation
    n = len(p.components)
    h = p.base_order

    violations = presentation.validate(p)
    if violations:
        yield "validate", "fail", "; ".join(violations)
        return
    yield "validate", "pass", f"{n} components, base order {h}"

    for c in p.components:
        poly = invariants.alexander(p, c.name)
        sym = poly.involution() == poly
        yield (
            f"alexander-symmetry[{c.name}]",
            "pass" if sym else "fail",
            str(poly),
        )
        at_one = poly.eval_at_one()
        yield (
            f"alexander-at-one[{c.name}]",
            "pass" if at_one == h else "fail",
            f"{at_one} (expected {h})",
        )

    if n == 2:
        s = invariants.sato_levine(p, invariants.DERIVED)
        before = invariants.alexander(p, p.components[0].name)
        after_p = presentation.blow_down(p, p.components[1].name, -1)
        after = invariants.knot_alexander(after_p.components[0].seifert, h)
        residue = after - (ring.ONE + s * ring.Z * ring.Z) * before
        ok = ring.divides_z_power(residue, 3)
        yield "z3-structure", "pass" if ok else "fail", f"s = {s}"

    if n >= 1:
        closed = floer.chi_closed_form(p, _bundle(doc))
        triangle = floer.chi_via_triangle(p, _bundle(doc))
        agree = closed.chi == triangle.chi
        yield (
            "route-agreement",
            "pass" if agree else "fail",
            f"closed_form = {closed.chi}, triangle = {triangle.chi}",
        )

        if h == 1 or n not in (2, 3):
            lam = invariants.lescop(p)
            predicted = floer.lescop_to_chi(lam, n, h)
            ok = predicted == closed.chi
            yield (
                "theorem1-consistency",
                "pass" if ok else "fail",
                f"lescop = {lam} predicts chi = {predicted}, closed form = {closed.chi}",
            )
        else:
            yield (
                "theorem1-consistency",
                "skip",
                "normalization of the case formulas is ambiguous for "
                f"b1 = {n} with torsion order {h} > 1",
            )

        if n <= 6:
            chis = set()
            for mask in range(1, 2**n):
                w2 = tuple((mask >> i) & 1 for i in range(n))
                chis.add(floer.chi_closed_form(p, floer.BundleSpec(w2=w2)).chi)
            yield (
                "bundle-independence",
                "pass" if len(chis) == 1 else "fail",
                f"{2**n - 1} admissible bundles, chi values {sorted(chis)}",
            )


def cmd_verify(args):
    overall_ok = True
    results = []
    for path in args.files:
        doc = _load_document(path)
        checks = []
        for name, status, detail in _verify_checks(doc):
            checks.append({"name": name, "status": status, "detail": detail})
            if status == "fail":
                overall_ok = False
        results.append({"file": str(path), "checks": checks})
    if args.json:
        print(json.dumps({"ok": overall_ok, "results": results}))
    else:
        for res in results:
            print(f"{res['file']}:")
            for chk in res["checks"]:
                print(f"  {chk['name']}: {chk['status'].upper()} ({chk['detail']})")
    return EXIT_OK if overall_ok else EXIT_INVARIANT


def cmd_examples(args):
    entries = builtin_corpus()
    if args.name is not None:
        if args.name not in entries:
            raise CliInputError(f"unknown example {args.name!r}")
        sys.stdout.write(documents.serialize(entries[args.name]))
        return EXIT_OK
    if args.write is not None:
        out_dir = Path(args.write)
        out_dir.mkdir(parents=True, exist_ok=True)
        for name, doc in entries.items():
            target = out_dir / f"{name}.json"
            target.write_text(documents.serialize(doc), encoding="utf-8")
            if not args.json:
                print(target)
        if args.json:
            print(json.dumps(sorted(str(out_dir / f"{n}.json") for n in entries)))
        return EXIT_OK
    desc = corpus_descriptions()
    if args.json:
        print(json.dumps([{"name": n, "description": desc[n]} for n in entries]))
    else:
        width = max(len(n) for n in entries)
        for name in entries:
            print(f"{name:<{width}}  {desc[name]}")
    return EXIT_OK


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="lescop",
        description="Exact invariants of 3-manifolds from surgery presentations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    sp = add("alexander", cmd_alexander, "Alexander polynomial of a component")
    sp.add_argument("file")
    sp.add_argument("--component", help="component name (default: first)")

    sp = add("lescop", cmd_lescop, "Lescop invariant of the presented manifold")
    sp.add_argument("file")

    sp = add("chi", cmd_chi, "Euler characteristic of instanton Floer homology")
    sp.add_argument("file")
    sp.add_argument(
        "--route",
        choices=("closed", "triangle", "both"),
        default="both",
        help="computation route (default: both, which cross-checks)",
    )

    sp = add("sato-levine", cmd_sato_levine, "Sato-Levine invariant (2 components)")
    sp.add_argument("file")

    sp = add("mu2", cmd_mu2, "squared triple linking number (3 components)")
    sp.add_argument("file")

    sp = add("casson", cmd_casson, "Casson invariant of a +-1-surgery chain")
    sp.add_argument("chainfile")

    sp = add("lens", cmd_lens, "SU(2)-representation counting for Z/p")
    sp.add_argument("--p", type=int, required=True)

    sp = add("verify", cmd_verify, "run every applicable cross-check on files")
    sp.add_argument("files", nargs="+")

    sp = add("examples", cmd_examples, "list or export built-in presentations")
    sp.add_argument("name", nargs="?", help="print this example document")
    sp.add_argument("--write", metavar="DIR", help="write all examples into DIR")

    return parser


def run(argv):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except documents.DocumentError as e:
        _err(str(e))
        return EXIT_INPUT
    except (CliInputError, lens.InvalidPError) as e:
        _err(str(e))
        return EXIT_INPUT
    except (
        presentation.UnknownComponentError,
        invariants.WrongComponentCountError,
        floer.InadmissibleBundleError,
    ) as e:
        _err(str(e))
        return EXIT_INPUT
    except (
        invariants.InvalidPresentationError,
        presentation.InvalidSpecError,
        floer.NonIntegralChiError,
    ) as e:
        _err(str(e))
        return EXIT_INVARIANT


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
