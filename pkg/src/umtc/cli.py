"""Command line front end: ``umtc <command> [flags]``.

Every command prints a JSON report (or writes it to ``--out``) and exits with 0 when all verdicts
pass, 1 when some verdict fails and 2 on input errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from ._numeric import phase_turns
from .bundle import CategoryBundle, bundle_to_dict, load_bundle, save_bundle, verify_bundle
from .errors import UMTCError, ValidationError
from .fingerprint import bundle_fingerprint
from .fusion import global_dimension, max_multiplicativity_residual
from .modular import killing_ring_check, modularity_check, verlinde_reconstruct
from .points import (Mode, comparability_resolve, holomorphic_obstruction, intersection_category,
                     modular_spectrum_check, trivial_pairing)
from .report import ReportDocument
from .solver import enumerate_ubtcs
from .subcategories import (centralizer, closure, deligne_product, double_centralizer_check,
                            enumerate_subcategories, is_modular_sub, is_prime, prime_factorize)

COMMANDS = ("validate", "dims", "smatrix", "modularity", "subcats", "centralizer", "prime-factor",
            "solve-braidings", "point-check", "product")


def _labels(bundle: CategoryBundle, members) -> list[str]:
    return [bundle.labels[m] for m in members]


def _parse_labels(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def _require_braided(bundle: CategoryBundle, what: str):
    if bundle.R is None:
        raise ValidationError(f"{what} needs an R table; bundle {bundle.name!r} has none", [])


def _fingerprint_summary(fp) -> dict:
    return {"rank": fp.rank, "twists": list(fp.twists), "fs_indicators": list(fp.fs_indicators)}


# --- commands -----------------------------------------------------------------------------

def cmd_validate(args, rep: ReportDocument):
    try:
        bundle = load_bundle(args.bundle)
    except ValidationError as exc:
        # axiom failures are the verdict of this command, not an input error
        rep.verdicts["ring"] = False
        rep.witnesses["violations"] = [{"axiom": v.axiom, "indices": list(v.indices), "detail": v.detail}
                                       for v in exc.violations]
        rep.error = str(exc)
        return
    coh = verify_bundle(bundle)
    rep.data["name"] = bundle.name
    rep.data["rank"] = bundle.rank
    rep.verdicts["ring"] = coh.ring.valid
    for key in ("pentagon", "hexagon", "unitarity"):
        check = getattr(coh, key)
        if check is None:
            continue
        rep.verdicts[key] = check.passed
        rep.residuals[key] = check.max_residual
        if not check.passed and getattr(check, "worst", None) is not None:
            rep.witnesses[key] = list(check.worst)


def cmd_dims(args, rep: ReportDocument):
    bundle = load_bundle(args.bundle)
    dims = bundle.dims
    res = max_multiplicativity_residual(bundle.ring, dims.d)
    rep.data["labels"] = list(bundle.labels)
    rep.data["d"] = list(np.asarray(dims.d))
    rep.data["global_dimension"] = global_dimension(dims)
    rep.residuals["multiplicativity"] = res
    rep.verdicts["multiplicativity"] = res < bundle.tol


def cmd_smatrix(args, rep: ReportDocument):
    bundle = load_bundle(args.bundle)
    _require_braided(bundle, "smatrix")
    md = bundle.modular_data
    rep.data["labels"] = list(bundle.labels)
    rep.data["d"] = list(md.d)
    rep.data["global_dimension"] = md.Dsq
    rep.data["twist_turns"] = [phase_turns(t) for t in md.theta]
    rep.add_matrix("Stilde", md.Stilde)
    rep.add_matrix("T", md.T)
    sym = float(np.max(np.abs(md.Stilde - md.Stilde.T)))
    first = float(np.max(np.abs(md.Stilde[0] - md.d)))
    rep.residuals["symmetry"] = sym
    rep.residuals["first_row"] = first
    rep.verdicts["symmetric"] = sym < bundle.tol
    rep.verdicts["first_row_is_d"] = first < bundle.tol


def cmd_modularity(args, rep: ReportDocument):
    bundle = load_bundle(args.bundle)
    _require_braided(bundle, "modularity")
    md = bundle.modular_data
    verdict = modularity_check(md, bundle.tol)
    rep.verdicts["modular"] = verdict.modular
    rep.residuals["unitarity"] = verdict.residual
    rep.data["global_dimension"] = md.Dsq
    if verdict.modular:
        rep.residuals["killing_ring"] = killing_ring_check(md)
        rep.residuals["verlinde"] = verlinde_reconstruct(md, bundle.tol).max_deviation
    else:
        rep.witnesses["degenerate"] = _labels(bundle, verdict.degenerate)


def cmd_subcats(args, rep: ReportDocument):
    bundle = load_bundle(args.bundle)
    subs = enumerate_subcategories(bundle)
    rows = []
    for D in subs:
        row = {"members": list(D.labels), "rank": D.rank}
        if bundle.R is not None:
            row["modular"] = is_modular_sub(bundle, D).modular
            row["centralizer"] = list(centralizer(bundle, D).centralizer.labels)
        rows.append(row)
    rep.data["subcategories"] = rows
    if bundle.R is not None and bundle.is_modular:
        dc = double_centralizer_check(bundle)
        rep.verdicts["double_centralizer"] = dc.passed
        if dc.counterexamples:
            rep.witnesses["double_centralizer"] = [[_labels(bundle, a), _labels(bundle, b)]
                                                   for a, b in dc.counterexamples]


def cmd_centralizer(args, rep: ReportDocument):
    bundle = load_bundle(args.bundle)
    _require_braided(bundle, "centralizer")
    D = closure(bundle, _parse_labels(args.of))
    res = centralizer(bundle, D, args.method)
    rep.data["subcategory"] = list(D.labels)
    rep.data["centralizer"] = list(res.centralizer.labels)
    rep.data["method"] = res.method
    rep.witnesses["excluded"] = {bundle.labels[x]: bundle.labels[y] for x, y in sorted(res.witness.items())}
    if bundle.is_modular:
        ZZ = centralizer(bundle, res.centralizer, args.method).centralizer
        rep.verdicts["double_centralizer"] = ZZ.members == D.members


def cmd_prime_factor(args, rep: ReportDocument):
    bundle = load_bundle(args.bundle)
    _require_braided(bundle, "prime-factor")
    pf = prime_factorize(bundle)
    rep.data["ranks"] = list(pf.ranks)
    rep.data["factors"] = [{"members": list(f.labels), "twists": list(fp.twists)}
                           for f, fp in zip(pf.factors, (bundle_fingerprint(b) for b in pf.bundles))]
    rep.data["bijection"] = {bundle.labels[c]: [pf.factors[i].labels[j] for i, j in enumerate(t)]
                             for c, t in sorted(pf.bijection.items())}
    rep.data["prime"] = len(pf.factors) == 1
    rep.residuals["S_kronecker"] = pf.s_residual
    rep.residuals["T_kronecker"] = pf.t_residual
    rep.verdicts["certified"] = max(pf.s_residual, pf.t_residual) < bundle.tol
    if len(pf.factors) == 1:
        rep.verdicts["prime"] = is_prime(bundle).prime or bundle.rank == 1


def cmd_solve_braidings(args, rep: ReportDocument):
    ring_bundle = load_bundle(args.ring)
    sources = [load_bundle(p) for p in args.F] if args.F else [ring_bundle]
    F_list = []
    for b in sources:
        if b.F is None:
            raise ValidationError(f"bundle {b.name!r} carries no F table", [])
        if b.ring != ring_bundle.ring:
            raise ValidationError(f"F table of {b.name!r} lives on a different fusion ring", [])
        F_list.append(b.F)
    tol = ring_bundle.tol
    cat = enumerate_ubtcs(ring_bundle.ring, F_list, tol)
    rep.data["count"] = cat.count
    rep.data["count_labelled"] = cat.count_labelled
    rep.data["modular_count"] = cat.modular_count
    solutions = []
    for k, e in enumerate(cat.entries):
        b = e.bundle(f"{ring_bundle.name}_braiding{k}")
        solutions.append({"f_class": e.f_class, "modular": e.modular, "residual": e.residual,
                          "fingerprint": _fingerprint_summary(e.fingerprint), "bundle": bundle_to_dict(b)})
    rep.data["solutions"] = solutions
    worst = max((e.residual for e in cat.entries), default=0.0)
    rep.residuals["hexagon"] = worst
    rep.verdicts["hexagon"] = worst < tol
    if args.expect is not None:
        rep.verdicts["expected_count"] = cat.count == args.expect


def cmd_point_check(args, rep: ReportDocument):
    bundle = load_bundle(args.bundle)
    _require_braided(bundle, "point-check")
    D1 = closure(bundle, _parse_labels(args.left))
    D2 = closure(bundle, _parse_labels(args.right))
    rep.data["left"] = list(D1.labels)
    rep.data["right"] = list(D2.labels)
    rep.data["mode"] = Mode(args.mode).value
    pairing = trivial_pairing(bundle, D1, D2, args.mode)
    rep.verdicts["trivial_pairing"] = pairing.passed
    if pairing.caveat:
        rep.data["caveat"] = pairing.caveat
    if pairing.failures:
        rep.witnesses["pairing"] = [_labels(bundle, f) for f in pairing.failures]
    inter = intersection_category(bundle, D1, D2)
    rep.data["intersection"] = list(inter.labels)
    rep.data["modular_spectrum"] = {side: modular_spectrum_check(bundle, D).passed
                                    for side, D in (("left", D1), ("right", D2))}
    if trivial_pairing(bundle, D1, D2, Mode.MONODROMY).passed:
        holo = holomorphic_obstruction(bundle, D1, D2)
        rep.verdicts["trivial_intersection"] = holo.passed
        if holo.witness is not None:
            rep.witnesses["intersection"] = bundle.labels[holo.witness]
    if bundle.is_modular:
        v = comparability_resolve(bundle, D1, D2)
        rep.data["outcome"] = v.outcome.value
        rep.data["closures"] = [list(C.labels) for C in v.closures]
        rep.data["certificates"] = v.certificates
        rep.verdicts["comparable"] = not v.obstruction
        if v.witness is not None:
            w = dict(v.witness)
            for key in ("subcategory", "pair"):
                if key in w:
                    w[key] = _labels(bundle, w[key])
            if "sector" in w:
                w["sector"] = bundle.labels[w["sector"]]
            rep.witnesses["obstruction"] = w


def cmd_product(args, rep: ReportDocument):
    A = load_bundle(args.left)
    B = load_bundle(args.right)
    P = deligne_product(A, B, args.name)
    rep.data["name"] = P.name
    rep.data["rank"] = P.rank
    dA, dB, dP = (global_dimension(x.dims) for x in (A, B, P))
    rep.data["global_dimension"] = dP
    rep.residuals["dimension_multiplicativity"] = abs(dP - dA * dB)
    rep.verdicts["dimension_multiplicativity"] = abs(dP - dA * dB) < P.tol
    rep.verdicts["coherent"] = verify_bundle(P).passed
    if args.bundle_out:
        save_bundle(P, args.bundle_out)
        rep.data["bundle_path"] = str(args.bundle_out)
    else:
        rep.data["bundle"] = bundle_to_dict(P)


HANDLERS = {
    "validate": cmd_validate, "dims": cmd_dims, "smatrix": cmd_smatrix, "modularity": cmd_modularity,
    "subcats": cmd_subcats, "centralizer": cmd_centralizer, "prime-factor": cmd_prime_factor,
    "solve-braidings": cmd_solve_braidings, "point-check": cmd_point_check, "product": cmd_product,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="umtc", description="Checks and computations on skeletal modular tensor categories.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", type=Path, help="write the JSON report here instead of stdout")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True
    helps = {
        "validate": "ring axioms, pentagon, hexagon and unitarity",
        "dims": "Frobenius-Perron dimensions and global dimension",
        "smatrix": "twists, S~ and T",
        "modularity": "non-degeneracy of S~, with degenerate witnesses",
        "subcats": "all fusion subcategories and their centralizers",
        "prime-factor": "prime factorization with Kronecker certificates",
    }
    for name in ("validate", "dims", "smatrix", "modularity", "subcats", "prime-factor"):
        p = sub.add_parser(name, parents=[common], help=helps[name])
        p.add_argument("bundle", help="bundle file or catalog name")
    p = sub.add_parser("centralizer", parents=[common], help="Müger centralizer of a subcategory")
    p.add_argument("bundle")
    p.add_argument("--of", required=True, help="comma-separated generating labels")
    p.add_argument("--method", choices=("auto", "smatrix", "monodromy"), default="auto")
    p = sub.add_parser("solve-braidings", parents=[common], help="enumerate braidings over a fusion ring")
    p.add_argument("--ring", required=True, help="bundle supplying the fusion ring")
    p.add_argument("--F", action="append", default=[], help="bundle supplying an F table (repeatable)")
    p.add_argument("--expect", type=int, help="expected number of inequivalent solutions")
    p = sub.add_parser("point-check", parents=[common], help="pairing, intersection and comparability of two subcategories")
    p.add_argument("--bundle", required=True)
    p.add_argument("--left", required=True, help="comma-separated labels")
    p.add_argument("--right", required=True, help="comma-separated labels")
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.MONODROMY.value)
    p = sub.add_parser("product", parents=[common], help="Deligne product of two bundles")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--name")
    p.add_argument("--bundle-out", type=Path, help="save the product bundle here")
    return parser


def dispatch(argv: list[str]) -> ReportDocument:
    """Parse ``argv`` and run the command. Usage errors raise ``SystemExit(2)`` from argparse."""
    args = build_parser().parse_args(argv)
    rep = ReportDocument(command=list(argv))
    try:
        HANDLERS[args.command](args, rep)
    except (UMTCError, FileNotFoundError, ValueError) as exc:
        rep.error = f"{type(exc).__name__}: {exc}"
        rep.input_error = True
    return rep


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    rep = dispatch(argv)
    text = rep.to_json()
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if rep.input_error:
        print(f"umtc: {rep.error}", file=sys.stderr)
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
