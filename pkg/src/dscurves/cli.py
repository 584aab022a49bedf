"""Command line front end.

Every subcommand prints a single JSON report with a fixed field order,
so a fixed invocation gives byte-identical output; enumerate instead
streams one candidate per line.  Integers beyond 2^53 are serialized as
decimal strings.  Exit status: 0 on success, 2 for rejected input (the
message names the flag where one is responsible), 1 for a computation
that started and failed, including a reproduction mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .carlitz import carlitz_phi, place_counts, unit_group, zeta_numerator
from .curves import (
    FamilyParams,
    Hyperelliptic,
    PlaneProjective,
    count_points,
    curve_from_str,
    drinfeld_dl_counts,
    family_zeta,
    howe_cubic,
    howe_interpolation,
)
from .drinfeld import DrinfeldAction, basechange_phi, drinfeld_phi, rank3_check
from .enumtree import enumerate as enumerate_candidates
from .errors import (
    DSError,
    InputError,
    NotACurveError,
    SizeLimitError,
    ValidationError,
)
from .fields import field_from_order
from .fpoly import poly_from_str, ratfunc_from_str
from .reference import TARGETS, run_target
from .zeta import ZetaData, admissible_pairs

SCHEMA_VERSION = 1
_INT_LIMIT = 1 << 53


def _flagged(flag: str, fn, *args):
    """Run a converter and pin validation failures on one flag."""
    try:
        return fn(*args)
    except (InputError, ValueError) as e:
        raise InputError(f"{flag}: {e}") from e


def _ints_csv(s: str) -> list[int]:
    return [int(part) for part in s.split(",") if part.strip() != ""]


def _jsonable(v):
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return str(v) if abs(v) > _INT_LIMIT else v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if v is None or isinstance(v, (str, float)):
        return v
    return str(v)


def _envelope(args, inputs: dict, outputs: dict, seed=None, t0=None) -> dict:
    env = {
        "schema_version": SCHEMA_VERSION,
        "command": args.label,
        "inputs": _jsonable(inputs),
        "outputs": _jsonable(outputs),
    }
    if seed is not None:
        env["seed"] = seed
    if args.timing and t0 is not None:
        env["timing_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    return env


def _emit(args, env: dict) -> None:
    if args.format == "json":
        print(json.dumps(env, indent=2))
        return
    outputs = env["outputs"]
    table = None
    scalars = []
    for key, val in outputs.items():
        if isinstance(val, list) and val and all(isinstance(x, dict) for x in val):
            table = (key, val)
        else:
            scalars.append((key, val))
    if args.format == "csv":
        import csv as _csv

        w = _csv.writer(sys.stdout, lineterminator="\n")
        if table is None:
            for key, val in scalars:
                w.writerow([key, _cell(val)])
        else:
            head = list(table[1][0])
            w.writerow(head)
            for row in table[1]:
                w.writerow([_cell(row.get(k)) for k in head])
        return
    for key, val in scalars:
        print(f"{key}: {_cell(val)}")
    if table is not None:
        head = list(table[1][0])
        rows = [[_cell(r.get(k)) for k in head] for r in table[1]]
        widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(head)]
        print("  ".join(h.ljust(w) for h, w in zip(head, widths)))
        for r in rows:
            print("  ".join(c.ljust(w) for c, w in zip(r, widths)))


def _cell(v) -> str:
    if isinstance(v, str):
        return v
    return json.dumps(v, separators=(",", ":"))


def _mpoly_str(form) -> str:
    return repr(form)[6:-1].replace(" ", "")


def _model_str(c) -> str:
    if isinstance(c, Hyperelliptic):
        q = c.field.q
        f = c.f.to_str("x")
        if c.h:
            return f"hyp q={q} h={c.h.to_str('x')} f={f}"
        return f"hyp q={q} f={f}"
    if isinstance(c, PlaneProjective):
        return f"plane q={c.field.q} F={_mpoly_str(c.form)}"
    return repr(c)


def _zeta_outputs(z: ZetaData, ds_m=None) -> dict:
    out = {
        "q": z.q,
        "g": z.g,
        "P": list(z.P),
        "h": z.real_weil(),
        "counts": z.counts_list(z.g),
        "places": z.places(z.g),
    }
    if ds_m is not None:
        out["ds"] = z.ds_check(ds_m)
    return out


# --- subcommand handlers ---------------------------------------------------


def cmd_admissible(args):
    pairs = admissible_pairs(_flagged("--genus", int, args.genus))
    inputs = {"genus": args.genus}
    return inputs, {"genus": args.genus, "pairs": [list(p) for p in pairs]}, None


def cmd_zeta_from_counts(args):
    counts = _flagged("--counts", _ints_csv, args.counts)
    z = _flagged("--counts", ZetaData.from_counts, args.q, args.g, counts)
    inputs = {"q": args.q, "g": args.g, "counts": counts}
    if args.ds is not None:
        inputs["ds"] = args.ds
    return inputs, _zeta_outputs(z, args.ds), None


def cmd_zeta_from_places(args):
    places = _flagged("--places", _ints_csv, args.places)
    z = _flagged("--places", ZetaData.from_places, args.q, args.g, places)
    inputs = {"q": args.q, "g": args.g, "places": places}
    if args.ds is not None:
        inputs["ds"] = args.ds
    return inputs, _zeta_outputs(z, args.ds), None


def cmd_zeta_from_h(args):
    h = _flagged("--h", _ints_csv, args.h)
    z = _flagged("--h", ZetaData.from_real_weil, args.q, h)
    inputs = {"q": args.q, "h": h}
    if args.ds is not None:
        inputs["ds"] = args.ds
    return inputs, _zeta_outputs(z, args.ds), None


def cmd_enumerate(args):
    zeros = _flagged("--zero", _ints_csv, args.zero) if args.zero else ()
    stream = enumerate_candidates(
        args.q, args.g, a1=args.a1, zeros=zeros, ds_m=args.ds_m, jobs=args.jobs
    )
    if args.format == "csv":
        print("a,h,P")
    for cand in stream:
        rec = {
            "a": list(cand.a),
            "h": list(cand.h),
            "P": _jsonable(list(cand.z.P)),
        }
        if args.format == "json":
            print(json.dumps(rec, separators=(", ", ": ")))
        elif args.format == "csv":
            print(",".join(" ".join(str(x) for x in rec[k]) for k in ("a", "h", "P")))
        else:
            print(f"a={rec['a']}  h={rec['h']}  P={rec['P']}")
    return None


def cmd_count(args):
    c = _flagged("--curve", curve_from_str, args.curve)
    m = _flagged("--m", int, args.m)
    if m < 1:
        raise InputError("--m: must be at least 1")
    counts = [count_points(c, j) for j in range(1, m + 1)]
    inputs = {"curve": args.curve, "m": m}
    outputs = {"model": _model_str(c), "q": c.field.q, "counts": counts}
    return inputs, outputs, None


_FAMILY_NAMES = {
    "hermitian": "hermitian",
    "suzuki": "suzuki",
    "ree": "ree",
    "drinfeld": "drinfeld-dl",
    "drinfelddl": "drinfeld-dl",
}


def cmd_family(args):
    key = args.name.strip().lower().replace("-", "").replace("_", "")
    name = _FAMILY_NAMES.get(key)
    if name is None:
        raise InputError(f"--name: unknown family {args.name!r}")
    inputs = {"name": name, "param": args.param}
    if args.m is not None:
        inputs["m"] = args.m
    if name == "drinfeld-dl":
        m = args.m if args.m is not None else 2
        counts = [drinfeld_dl_counts(args.param, j) for j in range(1, m + 1)]
        return inputs, {"family": name, "param": args.param,
                        "q": args.param, "counts": counts}, None
    z = family_zeta(FamilyParams(name, args.param))
    outputs = {"family": name, "param": args.param, "q": z.q, "g": z.g,
               "P": list(z.P)}
    if args.m is not None:
        outputs["counts"] = z.counts_list(args.m)
    return inputs, outputs, None


def cmd_carlitz_phi(args):
    F = _flagged("--q", field_from_order, args.q)
    M = _flagged("--M", poly_from_str, F, args.M)
    phi = _flagged("--M", carlitz_phi, M)
    inputs = {"q": args.q, "M": args.M}
    return inputs, {"q": args.q, "M": M.to_str(), "phi": phi.to_str()}, None


def _carlitz_group(args):
    F = _flagged("--q", field_from_order, args.q)
    M = _flagged("--M", poly_from_str, F, args.M)
    gens = ()
    if args.H:
        gens = tuple(
            _flagged("--H", poly_from_str, F, part)
            for part in args.H.split(",")
        )
    G = _flagged("--H" if args.H else "--M", unit_group, M, gens)
    return M, gens, G


def cmd_carlitz_places(args):
    M, gens, G = _carlitz_group(args)
    a = place_counts(G, _flagged("--dmax", int, args.dmax))
    inputs = {"q": args.q, "M": args.M, "H": args.H or "", "dmax": args.dmax}
    outputs = {"M": M.to_str(), "q": args.q,
               "H": [g.to_str() for g in gens], "a": a}
    return inputs, outputs, None


def cmd_carlitz_zeta(args):
    M, gens, G = _carlitz_group(args)
    z = zeta_numerator(G)
    a = place_counts(G, max(1, min(z.g, 16)))
    inputs = {"q": args.q, "M": args.M, "H": args.H or ""}
    outputs = {"M": M.to_str(), "q": args.q,
               "H": [g.to_str() for g in gens],
               "a": a, "P": list(z.P), "genus": z.g}
    return inputs, outputs, None


def _split_u(flag: str, F, s: str, n=None):
    parts = [p.strip() for p in s.split(";")]
    if n is not None and len(parts) != n:
        raise InputError(f"{flag}: expected {n} entries, got {len(parts)}")
    return tuple(_flagged(flag, ratfunc_from_str, F, p) for p in parts)


def cmd_drinfeld_phi(args):
    F = _flagged("--q", field_from_order, args.q)
    u = _split_u("--u", F, args.u, args.n)
    D = _flagged("--u", DrinfeldAction, F, u)
    M = _flagged("--M", poly_from_str, F, args.M)
    phi = drinfeld_phi(D, M)
    inputs = {"q": args.q, "n": args.n, "M": args.M, "u": args.u}
    outputs = {"q": args.q, "n": args.n, "M": M.to_str(),
               "u": [str(ui) for ui in u], "phi": phi.to_str()}
    return inputs, outputs, None


def cmd_drinfeld_rank3(args):
    F = field_from_order(2)
    u = _split_u("--u", F, args.u, 3)
    v = rank3_check(*u)
    outputs = {"u": [str(ui) for ui in u]}
    outputs.update(v._asdict())
    return {"u": args.u}, outputs, None


def cmd_drinfeld_basechange(args):
    F = _flagged("--q", field_from_order, args.q)
    M = _flagged("--M", poly_from_str, F, args.M)
    r = basechange_phi(args.q, args.n, M)
    inputs = {"q": args.q, "n": args.n, "M": args.M}
    outputs = {"q": args.q, "n": args.n, "M": M.to_str(),
               "phi": r.phi.to_str(),
               "routes_equal": r.routes_equal,
               "coefficients_in_base": r.coefficients_in_base}
    return inputs, outputs, None


def cmd_howe_cubic(args):
    c = howe_cubic(args.q, args.n)
    counts = [count_points(c, 1), count_points(c, 3)]
    inputs = {"q": args.q, "n": args.n}
    outputs = {"q": args.q, "n": args.n, "model": _model_str(c),
               "genus": c.genus, "counts": counts}
    return inputs, outputs, None


def cmd_howe_interpolation(args):
    c = howe_interpolation(args.q, seed=args.seed, tries=args.tries)
    counts = [count_points(c, 1), count_points(c, 2)]
    inputs = {"q": args.q, "tries": args.tries}
    outputs = {"q": args.q, "model": _model_str(c), "genus": c.genus,
               "counts": counts}
    return inputs, outputs, args.seed


def cmd_reproduce(args):
    items = run_target(args.target)
    rows = [
        {"name": it.name, "pass": it.ok,
         "expected": _jsonable(it.expected), "got": _jsonable(it.got)}
        for it in items
    ]
    ok = all(it.ok for it in items)
    inputs = {"target": args.target}
    outputs = {"target": args.target, "ok": ok, "items": rows}
    return inputs, outputs, None, (0 if ok else 1)


# --- parser ----------------------------------------------------------------


def _common_flags(p, suppress: bool) -> None:
    def d(v):
        return argparse.SUPPRESS if suppress else v

    p.add_argument("--format", choices=("json", "csv", "table"),
                   default=d("json"), help="output format (default json)")
    p.add_argument("--seed", type=int, default=d(0),
                   help="seed for randomized searches (default 0)")
    p.add_argument("--jobs", type=int, default=d(1),
                   help="worker processes where supported (default 1)")
    p.add_argument("--timing", action="store_true", default=d(False),
                   help="include timing_ms in the report")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dscurves",
        description="Diophantine stability of curves over finite fields.",
    )
    _common_flags(p, suppress=False)
    # the same flags are accepted after the subcommand; a SUPPRESS default
    # keeps the subparser from clobbering the value parsed at the top level
    common = argparse.ArgumentParser(add_help=False)
    _common_flags(common, suppress=True)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("admissible", parents=[common],
                        help="admissible (q, m) pairs for a genus")
    sp.add_argument("--genus", type=int, required=True)
    sp.set_defaults(func=cmd_admissible, label="admissible")

    zp = sub.add_parser("zeta", help="zeta data from counts, places, or h")
    zs = zp.add_subparsers(dest="subcommand", required=True)
    for name, handler, flag in (
        ("from-counts", cmd_zeta_from_counts, "--counts"),
        ("from-places", cmd_zeta_from_places, "--places"),
        ("from-h", cmd_zeta_from_h, "--h"),
    ):
        sp = zs.add_parser(name, parents=[common])
        sp.add_argument("--q", type=int, required=True)
        if name != "from-h":
            sp.add_argument("--g", type=int, required=True)
        sp.add_argument(flag, required=True,
                        help="comma-separated integers")
        sp.add_argument("--ds", type=int, default=None,
                        help="extension degree for the stability check")
        sp.set_defaults(func=handler, label=f"zeta {name}")

    sp = sub.add_parser("enumerate", parents=[common],
                        help="stream stable isogeny-class candidates")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--a1", type=int, default=None)
    sp.add_argument("--zero", default=None,
                    help="comma-separated depths forced to zero")
    sp.add_argument("--ds-m", dest="ds_m", type=int, default=None)
    sp.set_defaults(func=cmd_enumerate, label="enumerate")

    sp = sub.add_parser("count", parents=[common], help="point counts of one curve")
    sp.add_argument("--curve", required=True,
                    help='model string, e.g. "hyp q=2 h=1 f=x^5+x^3"')
    sp.add_argument("--m", type=int, default=1,
                    help="count over F_{q^j} for j = 1..m")
    sp.set_defaults(func=cmd_count, label="count")

    sp = sub.add_parser("family", parents=[common], help="closed-form family zeta data")
    sp.add_argument("--name", required=True,
                    help="hermitian, suzuki, ree, or drinfeld-dl")
    sp.add_argument("--param", type=int, required=True)
    sp.add_argument("--m", type=int, default=None,
                    help="also list counts up to F_{q^m}")
    sp.set_defaults(func=cmd_family, label="family")

    cp = sub.add_parser("carlitz", help="Carlitz cyclotomic covers")
    cs = cp.add_subparsers(dest="subcommand", required=True)
    sp = cs.add_parser("phi", parents=[common])
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--M", required=True)
    sp.set_defaults(func=cmd_carlitz_phi, label="carlitz phi")
    sp = cs.add_parser("places", parents=[common])
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--M", required=True)
    sp.add_argument("--H", default=None,
                    help="comma-separated subgroup generators")
    sp.add_argument("--dmax", type=int, required=True)
    sp.set_defaults(func=cmd_carlitz_places, label="carlitz places")
    sp = cs.add_parser("zeta", parents=[common])
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--M", required=True)
    sp.add_argument("--H", default=None)
    sp.set_defaults(func=cmd_carlitz_zeta, label="carlitz zeta")

    dp = sub.add_parser("drinfeld", help="Drinfeld torsion polynomials")
    ds = dp.add_subparsers(dest="subcommand", required=True)
    sp = ds.add_parser("phi", parents=[common])
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n", type=int, required=True, help="rank")
    sp.add_argument("--M", required=True)
    sp.add_argument("--u", required=True,
                    help='semicolon-separated coefficients "u1;u2;u3"')
    sp.set_defaults(func=cmd_drinfeld_phi, label="drinfeld phi")
    sp = ds.add_parser("rank3-check", parents=[common])
    sp.add_argument("--u", required=True)
    sp.set_defaults(func=cmd_drinfeld_rank3, label="drinfeld rank3-check")
    sp = ds.add_parser("basechange", parents=[common])
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--M", required=True)
    sp.set_defaults(func=cmd_drinfeld_basechange, label="drinfeld basechange")

    hp = sub.add_parser("howe", help="curves with no new points in one step")
    hs = hp.add_subparsers(dest="subcommand", required=True)
    sp = hs.add_parser("cubic", parents=[common])
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n", type=int, required=True,
                    help="a non-square element code")
    sp.set_defaults(func=cmd_howe_cubic, label="howe cubic")
    sp = hs.add_parser("interpolation", parents=[common])
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--tries", type=int, default=200)
    sp.set_defaults(func=cmd_howe_interpolation, label="howe interpolation")

    sp = sub.add_parser("reproduce", parents=[common], help="recompute a pinned reference target")
    sp.add_argument("target", choices=sorted(TARGETS))
    sp.set_defaults(func=cmd_reproduce, label="reproduce")

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        result = args.func(args)
    except (InputError, ValidationError, NotACurveError, SizeLimitError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except DSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if result is None:
        return 0
    if len(result) == 4:
        inputs, outputs, seed, code = result
    else:
        inputs, outputs, seed = result
        code = 0
    _emit(args, _envelope(args, inputs, outputs, seed=seed, t0=t0))
    return code


if __name__ == "__main__":
    sys.exit(main(argv=sys.argv[1:]))
