"""Command-line front end: psi, bound, dickman, omega, vw-verify, calpha,
rb, arctan, and the verify suite.

Output is JSON lines by default (CSV for per-n tables); every record embeds
the resolved run configuration and the library version, and floats are
serialized with 12 significant digits.  Exit codes: 0 success, 1 domain
error (or failed verify), 2 usage error.
"""

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass, is_dataclass

from . import __version__
from .bounds import make_bound_report
from .dickman import U_MAX, martin_prediction, rho
from .polyarith import build_factored, parse_poly, t0
from .primdiv import n_arctan, r_b
from .quadfield import c_alpha, make_context, verify_prop54, windowed_cassels
from .smoothsieve import sieve_range, smooth_bound
from .vwmachinery import VWInstance, lemma31_check, vw_prop21, vw_prop32

__all__ = ["main"]


def _fmt_float(v):
    if v != v:  # nan
        return "nan"
    if v == float("inf"):
        return "inf"
    if v == float("-inf"):
        return "-inf"
    return float(f"{v:.12g}")


def _clean(obj):
    """12-significant-digit floats, JSON-safe infinities, dataclass unwrap."""
    if is_dataclass(obj) and not isinstance(obj, type):
        return _clean(asdict(obj))
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, bytearray):
        return list(obj)
    return obj


def _emit(records, fmt, out, header_keys=None):
    if fmt == "json":
        lines = [json.dumps(_clean(r), sort_keys=True) for r in records]
        text = "\n".join(lines) + "\n"
    else:
        rows = [_clean(r) for r in records]
        keys = header_keys or sorted({k for r in rows for k in r})
        lines = [",".join(keys)]
        for r in rows:
            lines.append(",".join(str(r.get(k, "")) for k in keys))
        text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _poly_from_args(args):
    if getattr(args, "factors", None):
        data = json.loads(args.factors)
        if not isinstance(data, list):
            raise ValueError("--factors wants a JSON array of coefficient arrays")
        return build_factored(data)
    if getattr(args, "poly", None):
        return build_factored([parse_poly(args.poly)])
    raise ValueError("one of --poly / --factors is required")


@dataclass
class RunConfig:
    """Fully resolved run configuration; embedded in every emitted record so
    outputs are self-describing."""

    subcommand: str
    options: dict
    format: str
    out: str
    threads: int
    seed: int
    version: str = __version__


def _config(args, **extra):
    opts = {
        k: v
        for k, v in vars(args).items()
        if k not in ("func", "schema", "cmd", "format", "out", "threads", "seed")
    }
    opts.update(extra)
    cfg = RunConfig(
        subcommand=args.cmd,
        options=opts,
        format=args.format,
        out=args.out,
        threads=args.threads,
        seed=args.seed,
    )
    return asdict(cfg)


_SCHEMAS = {
    "psi": {
        "psi": "exact count of n in [1, x] with f(n) y-smooth",
        "x": "range end",
        "y": "smoothness bound (resolved from --u when given)",
        "u": "log x / log y when supplied",
        "ratio": "psi / x",
        "martin": "product of rho(d_j u) over factor degrees (null if d_j*u > 20)",
        "thm11_main": "main-term coefficient gamma_f(u) g^[u]/(d(d-1)^([u]-1) u^[u])",
        "thm11_main_x": "main term times x (d >= 2 only)",
        "t0": "monotonicity threshold T_0(f) used by downstream instances",
        "dump columns": "n, f(n), pplus, smooth (CSV with --dump)",
    },
    "bound": {
        "d": "total degree",
        "g": "number of irreducible factors",
        "u": "smoothness parameter",
        "m": "floor(u)",
        "gamma": "improvement factor gamma_f(u)",
        "thm11_main": "gamma * g^m / (d (d-1)^(m-1) u^m)",
        "timofeev_main": "(g+eps)^m / (d (d-1)^(m-1) u^m)",
        "timofeev_eps": "epsilon used in the comparator",
        "hmyrova_main": "exp(-u log(u/e)), c(f) normalized to 1",
        "hmyrova_applicable": "true iff g = 1 (irreducible f)",
        "cassels": "1 - gamma_f(d,1,1)/d when g = 1",
        "thm11_u_in_range": "1 <= u <= sqrt(log x)/log log x (when x given)",
    },
    "dickman": {"u": "argument", "rho": "Dickman rho(u)"},
    "omega": {"k": "modulus", "omega": "number of roots of f mod k"},
    "vw-verify": {
        "lhs": "exact smooth count on (z, x]",
        "V/W": "totals; v_plus/w_plus and v_minus/w_minus are the depth split",
        "verdict_2_1": "lhs < V + sqrt(lhs W) (vacuous pass when lhs = 0)",
        "verdict_2_2": "lhs < V + W/2 + sqrt(VW + W^2/4)",
        "monotone_v/monotone_w": "depth-m vs depth-(m+1) relations when computed",
        "t0": "threshold T_0(f) recorded per the open question",
    },
    "calpha": {
        "count": "number of n with a prime ideal unique to (n + sqrt m)",
        "witnesses": "(n, p, n mod p) per counted n",
        "include_zero": "whether the exclusion range starts at k = 0",
        "residual report": "c_alpha, x - psi, residual, r log x/x (via --prop54)",
    },
    "rb": {
        "count": "R_b(x): n <= x such that n^2 + b has a primitive divisor",
        "ratio": "count / x",
        "dump columns": "b, n, pplus, has_primitive, method, criterion_mismatch",
    },
    "arctan": {"count": "N(x): n <= x with arctan n irreducible (equals R_1(x))"},
    "verify": {
        "cid": "criterion number 1..10",
        "name": "criterion short name",
        "passed": "boolean",
        "seconds": "wall time",
        "details": "criterion-specific measurements",
    },
}


def _maybe_schema(args):
    if getattr(args, "schema", False):
        sys.stdout.write(json.dumps(_SCHEMAS[args.cmd], indent=2, sort_keys=True) + "\n")
        return True
    return False


def _cmd_psi(args):
    if _maybe_schema(args):
        return 0
    f = _poly_from_args(args)
    if args.u is not None:
        y = smooth_bound(args.x, args.u)
    elif args.y is not None:
        y = args.y
    else:
        raise ValueError("one of --y / --u is required")
    table = sieve_range(f, 1, args.x, y, need_pplus=args.dump,
                        segment_size=args.segment_size, threads=args.threads)
    rec = {
        "psi": table.psi,
        "x": args.x,
        "y": float(y),
        "u": args.u,
        "ratio": table.psi / args.x,
        "t0": t0(f),
        "config": _config(args, resolved_y=float(y)),
    }
    if args.u is not None:
        if max(f.degrees) * args.u <= U_MAX:
            rec["martin"] = martin_prediction(f.degrees, args.u)
        else:
            rec["martin"] = None
        if f.d >= 2:
            rep = make_bound_report(f.d, f.g, args.u, x=args.x)
            rec["thm11_main"] = rep.thm11_main
            rec["thm11_main_x"] = rep.thm11_main_x
            rec["thm11_u_in_range"] = rep.thm11_u_in_range
    if args.dump:
        rows = [
            {"n": n, "f_n": f(n), "pplus": table.pplus_of(n),
             "smooth": int(table.flag(n))}
            for n in range(1, args.x + 1)
        ]
        _emit(rows, "csv", args.out, header_keys=["n", "f_n", "pplus", "smooth"])
        return 0
    _emit([rec], args.format, args.out)
    return 0


def _parse_grid(text, conv):
    return [conv(tok) for tok in str(text).split(",") if tok != ""]


def _cmd_bound(args):
    if _maybe_schema(args):
        return 0
    records = []
    for d in _parse_grid(args.d, int):
        for g in _parse_grid(args.g, int):
            for u in _parse_grid(args.u, float):
                rep = make_bound_report(d, g, u, eps=args.eps, x=args.x)
                rec = asdict(rep)
                rec["config"] = _config(args, d=d, g=g, u=u)
                records.append(rec)
    _emit(records, args.format, args.out)
    return 0


def _cmd_dickman(args):
    if _maybe_schema(args):
        return 0
    n = int(round(args.u_max / args.step))
    rows = []
    for i in range(n + 1):
        u = i * args.step
        rows.append({"u": u, "rho": rho(u)})
    if args.format == "json":
        _emit([{"grid": rows, "config": _config(args)}], "json", args.out)
    else:
        _emit(rows, "csv", args.out, header_keys=["u", "rho"])
    return 0


def _cmd_omega(args):
    if _maybe_schema(args):
        return 0
    from .modroots import omega

    f = _poly_from_args(args)
    records = []
    for k in _parse_grid(args.k, int):
        records.append({"k": k, "omega": omega(f, k), "config": _config(args, k=k)})
    _emit(records, args.format, args.out)
    return 0


def _vw_one(spec):
    f = build_factored(spec["factors"])
    inst = VWInstance(f, spec["x"], spec["z"], spec["y"],
                      depth=spec.get("depth", 1))
    method = spec.get("method", "prop32" if "depth" in spec else "prop21")
    if method == "prop21":
        rep = vw_prop21(inst)
    elif method == "prop32":
        rep = vw_prop32(inst)
    else:
        raise ValueError(f"unknown vw method {method!r}")
    rec = asdict(rep)
    if spec.get("kappa") is not None:
        rec["lemma31"] = asdict(lemma31_check(inst, spec["kappa"]))
    rec["instance"] = {k: v for k, v in spec.items() if k != "factors"}
    rec["instance"]["poly"] = f.pretty()
    return rec


def _cmd_vw(args):
    if _maybe_schema(args):
        return 0
    specs = []
    if args.config:
        with open(args.config) as fh:
            specs = json.load(fh)
        if not isinstance(specs, list):
            raise ValueError("vw config must be a JSON array of instances")
    else:
        f = _poly_from_args(args)
        spec = {"factors": [list(p.coeffs) for p in f.factors],
                "x": args.x, "z": args.z, "y": args.y}
        if args.depth is not None:
            spec["depth"] = args.depth
        if args.kappa is not None:
            spec["kappa"] = args.kappa
        specs = [spec]
    records = []
    for spec in specs:
        rec = _vw_one(spec)
        rec["config"] = _config(args)
        records.append(rec)
    _emit(records, args.format, args.out)
    return 0


def _cmd_calpha(args):
    if _maybe_schema(args):
        return 0
    ctx = make_context(args.m)
    if args.window:
        n_str, m_str = args.window.split(",")
        res = windowed_cassels(ctx, int(n_str), int(m_str),
                               include_zero=not args.exclude_zero,
                               collect_witnesses=args.dump)
    elif args.x is not None:
        res = c_alpha(ctx, args.x, collect_witnesses=args.dump)
    else:
        raise ValueError("one of --x / --window is required")
    rec = asdict(res)
    if not args.dump:
        rec.pop("witnesses", None)
    if args.prop54:
        rec["prop54"] = asdict(verify_prop54(ctx, args.x))
    rec["config"] = _config(args)
    if args.dump and args.format == "csv":
        rows = [{"n": n, "p": p, "cls": c} for n, p, c in res.witnesses]
        _emit(rows, "csv", args.out, header_keys=["n", "p", "cls"])
        return 0
    _emit([rec], args.format, args.out)
    return 0


def _cmd_rb(args):
    if _maybe_schema(args):
        return 0
    res = r_b(args.b, args.x, collect_records=args.dump)
    if args.dump:
        rows = [asdict(r) for r in res.records]
        _emit(rows, "csv", args.out,
              header_keys=["b", "n", "pplus", "has_primitive", "method",
                           "criterion_mismatch"])
        return 0
    rec = {"b": args.b, "x": args.x, "count": res.count, "ratio": res.ratio,
           "config": _config(args)}
    _emit([rec], args.format, args.out)
    return 0


def _cmd_arctan(args):
    if _maybe_schema(args):
        return 0
    res = n_arctan(args.x)
    rec = {"x": args.x, "count": res.count,
           "n1_by_definition": res.n1_by_definition,
           "config": _config(args)}
    _emit([rec], args.format, args.out)
    return 0


def _cmd_verify(args):
    if _maybe_schema(args):
        return 0
    from .acceptance import run_all

    results = run_all(level=args.level, threads=args.threads)
    records = []
    all_pass = True
    for res in results:
        line = f"criterion {res.cid:>2}: {'PASS' if res.passed else 'FAIL'} - {res.name} ({res.seconds:.1f}s)"
        sys.stdout.write(line + "\n")
        all_pass &= res.passed
        rec = asdict(res)
        rec.pop("seconds")  # volatile; byte-identical output across runs
        rec["config"] = {"level": args.level, "version": __version__}
        records.append(rec)
    if args.out:
        _emit(records, "json", args.out)
    sys.stdout.write("verify: ALL PASS\n" if all_pass else "verify: FAILURES PRESENT\n")
    return 0 if all_pass else 1


def _add_common(sp, poly=False):
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.add_argument("--out", default=None, help="output path (default stdout)")
    sp.add_argument("--threads", type=int,
                    default=int(os.environ.get("POLYSMOOTH_THREADS", "1")))
    sp.add_argument("--seed", type=int, default=0,
                    help="recorded in the config echo; all algorithms are "
                         "internally deterministic")
    sp.add_argument("--schema", action="store_true",
                    help="print column documentation and exit")
    if poly:
        sp.add_argument("--poly", help="polynomial, symbolic or JSON coefficients")
        sp.add_argument("--factors",
                        help="JSON array of coefficient arrays (lowest degree first)")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="polysmooth",
        description="Smooth values of integer polynomials: exact sieves, "
                    "Dickman rho, bound coefficients, V/W machinery, and the "
                    "quadratic-field / primitive-divisor applications.",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("psi", help="exact Psi_f(x, y)")
    _add_common(sp, poly=True)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--y", type=float)
    sp.add_argument("--u", type=float)
    sp.add_argument("--segment-size", type=int, default=1 << 20)
    sp.add_argument("--dump", action="store_true",
                    help="emit the per-n CSV table (n, f(n), pplus, smooth)")
    sp.set_defaults(func=_cmd_psi)

    sp = sub.add_parser("bound", help="closed-form bound coefficients")
    _add_common(sp)
    sp.add_argument("--d", required=True, help="total degree (comma grid ok)")
    sp.add_argument("--g", required=True, help="factor count (comma grid ok)")
    sp.add_argument("--u", required=True, help="parameter u (comma grid ok)")
    sp.add_argument("--eps", type=float, default=0.0)
    sp.add_argument("--x", type=float, default=None)
    sp.set_defaults(func=_cmd_bound)

    sp = sub.add_parser("dickman", help="(u, rho(u)) on a grid")
    _add_common(sp)
    sp.add_argument("--u-max", type=float, default=10.0)
    sp.add_argument("--step", type=float, default=0.01)
    sp.set_defaults(func=_cmd_dickman)

    sp = sub.add_parser("omega", help="root counts omega_f(k)")
    _add_common(sp, poly=True)
    sp.add_argument("--k", required=True, help="modulus (comma grid ok)")
    sp.set_defaults(func=_cmd_omega)

    sp = sub.add_parser("vw-verify", help="V/W reports on instances")
    _add_common(sp, poly=True)
    sp.add_argument("--config", help="JSON file with an instance array")
    sp.add_argument("--x", type=int)
    sp.add_argument("--z", type=int)
    sp.add_argument("--y", type=float)
    sp.add_argument("--depth", type=int, default=None)
    sp.add_argument("--kappa", type=int, default=None,
                    help="also run the recursion-lemma check at this kappa")
    sp.set_defaults(func=_cmd_vw)

    sp = sub.add_parser("calpha", help="unique prime-ideal count in Q(sqrt m)")
    _add_common(sp)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--x", type=int)
    sp.add_argument("--window", help="N,M for the windowed count on (N, N+M]")
    sp.add_argument("--exclude-zero", action="store_true",
                    help="start the exclusion range at k = 1 instead of 0 "
                         "(windowed mode only)")
    sp.add_argument("--prop54", action="store_true",
                    help="attach the residual report against x - Psi_f(x,x)")
    sp.add_argument("--dump", action="store_true", help="emit witnesses")
    sp.set_defaults(func=_cmd_calpha)

    sp = sub.add_parser("rb", help="primitive-divisor count R_b(x)")
    _add_common(sp)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--dump", action="store_true",
                    help="emit per-n PrimDivRecords as CSV")
    sp.set_defaults(func=_cmd_rb)

    sp = sub.add_parser("arctan", help="arctangent irreducibility count N(x)")
    _add_common(sp)
    sp.add_argument("--x", type=int, required=True)
    sp.set_defaults(func=_cmd_arctan)

    sp = sub.add_parser("verify", help="run the acceptance suite")
    _add_common(sp)
    sp.add_argument("--level", choices=["quick", "full"], default="full")
    sp.set_defaults(func=_cmd_verify)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return e.code if e.code is not None else 0
    try:
        return args.func(args)
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
