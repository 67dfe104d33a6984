"""Command-line entry point: ``orbitforge <subcommand> ...``.

Every subcommand prints JSON (or a table) to stdout. Numbers are printed
exactly as rationals or elements of Q(sqrt2), or as decimal enclosures
whose endpoints are rounded outward; no bare floats are printed.

Exit codes: 0 success, 1 computational failure (e.g. the level scan hit
N_max, or a claim failed), 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import claims, corpus
from . import presentation as pres
from .cohomology import (
    AffineAction,
    OrthoRep,
    PreconditionError,
    affine_fixed_point,
    central_gap_check,
    cocycle_space,
    coboundary_space,
    decompose,
    h1_dim,
    h1_of_cocycle,
    invariant_vectors,
    is_strongly_cohomological,
    orbit_decomposition_probe,
    validate_rep,
)
from .diagnostics import density_report, lattice_report, support_growth
from .presentation import Presentation
from .scalars import approximate_real, decimal_enclosure, parse_rational, small_unit
from .sequences import SparseVec
from .tower import ScanLimitExceeded, approximate_pair, default_n_max
from .wreath import approximate_orbit

BUILTIN_PRESENTATIONS = {
    "z": pres.integers,
    "z2": pres.free_abelian_2,
    "heisenberg": pres.heisenberg,
    "f2": lambda: pres.free_group(2),
}


class InputError(ValueError):
    """Bad command-line input; exit code 2."""


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from None


def _positive(text: str) -> Fraction:
    q = _rational(text)
    if q <= 0:
        raise InputError(f"expected a positive rational, got {text}")
    return q


def _load_json(text: str):
    path = Path(text)
    if path.exists():
        return json.loads(path.read_text())
    return json.loads(text)


def _vector(text: str, domain: str) -> SparseVec:
    """``"0:1/2,3:-1/3"``, ``""`` for zero, or a JSON file/string in SparseVec form."""
    text = text.strip()
    if text.startswith("{") or text.endswith(".json"):
        obj = _load_json(text)
        obj.setdefault("domain", domain)
        return SparseVec.from_json(obj)
    entries = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        idx, sep, val = part.partition(":")
        if not sep:
            raise InputError(f"vector entries look like index:value, got {part!r}")
        entries[int(idx)] = _rational(val)
    return SparseVec(entries, domain)


def _presentation(text: str) -> Presentation:
    if text.lower() in BUILTIN_PRESENTATIONS:
        return BUILTIN_PRESENTATIONS[text.lower()]()
    return Presentation.load(text)


def _rep(text: str) -> OrthoRep:
    return OrthoRep.from_json(_load_json(text))


def _cocycle(args, P, R) -> list:
    if args.b is not None:
        obj = _load_json(args.b)
        if isinstance(obj, dict):
            obj = obj["b"]
        return [[Fraction(str(x)) for x in v] for v in obj]
    return corpus.random_cocycle(P, R, random.Random(args.seed))


def _vec_str(v) -> list:
    return [str(x) for x in v]


# ---------------------------------------------------------------------------
# subcommands


def cmd_approx_real(args, out) -> int:
    t, eps = _rational(args.t), _positive(args.eps)
    k, u = small_unit(eps)
    q = approximate_real(t, eps)
    err = q - t
    lo, hi = err.enclose(40)
    _emit(
        {
            "t": str(t),
            "eps": str(eps),
            "unit_power": k,
            "unit": str(u),
            "approximation": {"exact": str(q), "json": q.to_json()},
            "error": {"exact": str(err), "enclosure": decimal_enclosure(lo, hi)},
            "certified": abs(err) <= eps,
        },
        out,
    )
    return 0


def cmd_orbit_approx(args, out) -> int:
    target = _vector(args.target, "Z")
    eps = _positive(args.eps)
    res = approximate_orbit(target, eps)
    lo, hi = res.dist2.enclose(40)
    _emit(
        {
            "target": target.to_json(),
            "element": res.element.to_json(),
            "distance2": {"exact": str(res.dist2), "enclosure": decimal_enclosure(lo, hi)},
            "eps2": {"exact": str(eps * eps)},
            "certified": res.certified,
        },
        out,
    )
    return 0


def cmd_stab_approx(args, out) -> int:
    x0, z = _vector(args.x0, "N"), _vector(args.z, "N")
    eps = _positive(args.eps)
    n_max = args.n_max if args.n_max is not None else default_n_max()
    cert = approximate_pair(x0, z, eps, n_max=n_max)
    _emit(cert.to_json(), out)
    return 0


def _load_pr(args):
    P, R = _presentation(args.pres), _rep(args.rep)
    report = validate_rep(P, R)
    if not report.ok:
        raise PreconditionError(json.dumps(report.to_json(), sort_keys=True))
    return P, R


def cmd_h1(args, out) -> int:
    P, R = _load_pr(args)
    result = {
        "dim": R.dim,
        "dim_Z1": len(cocycle_space(P, R)),
        "dim_B1": len(coboundary_space(R)),
        "dim_H1": h1_dim(P, R),
        "invariant_dim": len(invariant_vectors(R)),
    }
    if args.b is not None:
        result["cocycle_class"] = h1_of_cocycle(P, R, _cocycle(args, P, R)).to_json()
    _emit(result, out)
    return 0


def cmd_strong_coh(args, out) -> int:
    P, R = _load_pr(args)
    _emit(is_strongly_cohomological(P, R).to_json(), out)
    return 0


def cmd_gap_check(args, out) -> int:
    P, R = _load_pr(args)
    z = P.word(args.z) if args.z else (P.central[0] if P.central else None)
    if z is None:
        raise InputError("no central word: pass --z or declare one in the presentation")
    report = central_gap_check(P, R, z, _cocycle(args, P, R), L=args.L)
    _emit(report.to_json(), out)
    return 0 if report.bound_holds else 1


def cmd_decompose_orbit(args, out) -> int:
    P, R = _load_pr(args)
    A = AffineAction(P, R, _cocycle(args, P, R))
    v = affine_fixed_point(A)
    probe = orbit_decomposition_probe(A, L=args.L)
    _emit(
        {
            "blocks": [b.to_json() for b in decompose(R)],
            "cocycle": [_vec_str(x) for x in A.b],
            "fixed_point": None if v is None else _vec_str(v),
            "probe": probe.to_json(),
        },
        out,
    )
    return 0


def cmd_diagnose(args, out) -> int:
    if args.probe == "lattice":
        report = lattice_report(args.n)
    elif args.probe == "density":
        rng = random.Random(args.seed)
        targets = [claims.random_target(rng, 8) for _ in range(args.count)]
        report = density_report(targets, _positive(args.eps))
    else:
        if args.action == "affine":
            if not (args.pres and args.rep):
                raise InputError("affine growth needs --pres and --rep")
            P, R = _load_pr(args)
            action = AffineAction(P, R, _cocycle(args, P, R))
        else:
            action = args.action
        report = support_growth(action, L=args.L, seed=args.seed)
    if args.format == "csv":
        out.write(report.to_csv())
    else:
        _emit(report.to_json(), out)
    return 0 if report.ok else 1


def cmd_verify_claims(args, out) -> int:
    results = claims.verify_claims(args.seed)
    if args.format == "json":
        out.write(claims.render(results))
    else:
        for r in results:
            out.write(f"[{'PASS' if r.passed else 'FAIL'}] {r.key:>2}  {r.title}: {r.detail}\n")
        out.write(f"{sum(r.passed for r in results)}/{len(results)} checks passed\n")
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orbitforge", description="Exact constructions for affine isometric actions.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("approx-real", help="approximate a rational by an element of Z[sqrt2]")
    s.add_argument("--t", required=True)
    s.add_argument("--eps", required=True)
    s.set_defaults(func=cmd_approx_real)

    s = sub.add_parser("orbit-approx", help="approximate a target by the Z[sqrt2] wr Z orbit of 0")
    s.add_argument("--target", required=True, help='"i:q,..." or a SparseVec JSON file')
    s.add_argument("--eps", required=True)
    s.set_defaults(func=cmd_orbit_approx)

    s = sub.add_parser("stab-approx", help="move x0 within eps of z by a stabilizer of some A_n")
    s.add_argument("--x0", required=True)
    s.add_argument("--z", required=True)
    s.add_argument("--eps", required=True)
    s.add_argument("--n-max", type=int, default=None, help="level ceiling (env ORBITFORGE_NMAX, default 10^6)")
    s.set_defaults(func=cmd_stab_approx)

    def rep_args(s, with_b=True):
        s.add_argument("--pres", required=True, help="presentation file or one of " + ", ".join(BUILTIN_PRESENTATIONS))
        s.add_argument("--rep", required=True, help="representation JSON file")
        if with_b:
            s.add_argument("--b", default=None, help="cocycle JSON (per-generator vectors); seeded random if absent")
            s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("h1", help="dimensions of Z^1, B^1, H^1")
    rep_args(s)
    s.set_defaults(func=cmd_h1)

    s = sub.add_parser("strong-coh", help="is the representation strongly cohomological")
    rep_args(s, with_b=False)
    s.set_defaults(func=cmd_strong_coh)

    s = sub.add_parser("gap-check", help="check the central spectral-gap bound on word extensions")
    rep_args(s)
    s.add_argument("--z", default=None, help="central word (default: first declared central word)")
    s.add_argument("-L", type=int, default=8)
    s.set_defaults(func=cmd_gap_check)

    s = sub.add_parser("decompose-orbit", help="fixed point and radii of an affine action")
    rep_args(s)
    s.add_argument("-L", type=int, default=8)
    s.set_defaults(func=cmd_decompose_orbit)

    s = sub.add_parser("diagnose", help="density, lattice and support-growth probes")
    s.add_argument("probe", choices=["lattice", "density", "growth"])
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--eps", default="1/1000")
    s.add_argument("--count", type=int, default=10)
    s.add_argument("--action", choices=["wreath-int", "wreath-quad", "affine"], default="wreath-int")
    s.add_argument("--pres", default=None)
    s.add_argument("--rep", default=None)
    s.add_argument("--b", default=None)
    s.add_argument("-L", type=int, default=5)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.set_defaults(func=cmd_diagnose)

    s = sub.add_parser("verify-claims", help="run the seeded self-test suite")
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_verify_claims)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    if getattr(args, "L", 1) < 1:
        print("error: L must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args, out)
    except ScanLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        # PreconditionError and InputError are ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
