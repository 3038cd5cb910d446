"""Command-line interface: ``homfcc <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds, encoders, locality, reproduce, verify
from .config import RunConfig
from .errors import DomainError, FCCError, ShapeError
from .functions import analyze_linear, parse_matrix, parse_selector
from .ring import Code, RingParams, ball, hom_distance, hom_weight, min_distance, sphere
from .search import DEFAULT_BUDGET, certificate_ok, exact_Nh

SCHEMA = 1


def _vec(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    out = []
    for pos, part in enumerate(text.split(","), 1):
        try:
            out.append(int(part))
        except ValueError:
            raise DomainError(f"entry {pos} of vector {text!r} is not an integer") from None
    return tuple(out)


def _frac(v: Fraction):
    return {"num": v.numerator, "den": v.denominator, "value": float(v)}


def _emit(args, payload: dict, human: str) -> None:
    if args.output == "json":
        print(json.dumps({"schema": SCHEMA, "command": args.command, **payload}, indent=2))
    else:
        print(human)


def _function(args, ring):
    return parse_selector(args.function, ring, args.k)


# --- subcommands -----------------------------------------------------------

def cmd_weight(args):
    ring = RingParams(args.s)
    vecs = [ring.word(_vec(v)) for v in args.vec]
    ws = [hom_weight(v, ring) for v in vecs]
    _emit(args, {"s": args.s, "weights": [{"vec": list(v), "weight": w} for v, w in zip(vecs, ws)]},
          "\n".join(str(w) for w in ws))


def cmd_dist(args):
    ring = RingParams(args.s)
    if len(args.vec) != 2:
        raise ShapeError("dist needs exactly two --vec arguments")
    x, y = (ring.word(_vec(v)) for v in args.vec)
    d = hom_distance(x, y, ring)
    _emit(args, {"s": args.s, "x": list(x), "y": list(y), "distance": d}, str(d))


def cmd_ball(args):
    ring = RingParams(args.s)
    c = ring.word(_vec(args.center))
    words = (sphere if args.sphere else ball)(c, args.radius, ring)
    _emit(args, {"s": args.s, "center": list(c), "radius": args.radius, "sphere": args.sphere,
                 "size": len(words), "words": [list(w) for w in words]},
          f"size {len(words)}\n" + "\n".join(",".join(map(str, w)) for w in words))


def cmd_locality(args):
    ring = RingParams(args.s)
    f = _function(args, ring)
    prof = locality.lambda0(f, args.rho)
    contiguous = locality.contiguous_block_check(f, None, args.rho)
    lines = [f"lambda0 = {prof.lambda0}", f"witness = {','.join(map(str, prof.witness))}",
             f"contiguous (natural order) = {contiguous}"]
    if prof.per_value_bounds:
        lo, hi = prof.per_value_bounds
        lines.append(f"bracket = [{lo},{hi}]")
    _emit(args, {"function": f.label(), "s": args.s, "k": args.k, "rho": args.rho,
                 "lambda0": prof.lambda0, "witness": list(prof.witness), "contiguous": contiguous,
                 "bracket": list(prof.per_value_bounds) if prof.per_value_bounds else None},
          "\n".join(lines))


def cmd_tau(args):
    ring = RingParams(args.s)
    f = _function(args, ring)
    tau = locality.build_tau(f, args.lam, args.rho)
    _emit(args, {"function": f.label(), "lambda": tau.lam, "rho": tau.rho,
                 "assignment": list(tau.assignment)},
          " ".join(map(str, tau.assignment)))


def cmd_drm(args):
    ring = RingParams(args.s)
    f = _function(args, ring)
    if args.all:
        from .ring import all_words
        vecs = [tuple(int(a) for a in w) for w in all_words(ring, args.k)]
    else:
        vecs = [_vec(v) for v in args.vec]
    D = bounds.requirement_matrix(f, args.t, vecs)
    if args.out:
        Path(args.out).write_text(json.dumps(D.to_json(), indent=2))
    _emit(args, {"matrix": D.to_json()}, "\n".join(" ".join(map(str, r)) for r in D.entries))


def _load_matrix(path) -> bounds.RequirementMatrix:
    return bounds.RequirementMatrix.from_json(Path(path).read_text())


def cmd_bound(args):
    mode = args.mode
    if mode in ("generic", "z4"):
        if not args.matrix:
            raise DomainError(f"--mode {mode} needs --matrix")
        D = _load_matrix(args.matrix)
        ring = RingParams(args.s) if args.s else D.ring
        if mode == "generic":
            frac, val = bounds.plotkin_fraction_generic(D), bounds.plotkin_bound_generic(D)
        else:
            frac, val = bounds.plotkin_fraction_z4(D, ring), bounds.plotkin_bound_z4(D, ring)
        _emit(args, {"mode": mode, "M": D.size, "sum": D.total(), "fraction": _frac(frac), "bound": val},
              str(val))
    elif mode == "msum":
        b = bounds.modular_sum_lower_bound(args.s, args.t)
        _emit(args, {"mode": mode, "s": args.s, "t": args.t, "fraction": _frac(b.value),
                     "bound": b.ceiling, "optimal": b.optimal},
              f"{b.value} (= {float(b.value)}), ceiling {b.ceiling}"
              + (f", optimal r = {b.optimal}" if b.optimal is not None else ""))
    elif mode == "linear":
        ring = RingParams(args.s)
        f = _function(args, ring)
        info = analyze_linear(f)
        lb = bounds.linear_plotkin_bound(f, args.t)
        _emit(args, {"mode": mode, "A": info.kernel_weight_sum, "kernel_size": info.kernel_size,
                     "fraction": _frac(lb), "bound": max(0, math.ceil(lb))},
              f"A = {info.kernel_weight_sum}, bound {lb} (= {float(lb)})")
    elif mode == "lambda":
        ub = bounds.upper_bound_from_lambda(args.lam, args.t)
        _emit(args, {"mode": mode, "lambda": args.lam, "t": args.t, "bound": ub}, str(ub))
    else:  # pragma: no cover - argparse restricts choices
        raise DomainError(mode)


def cmd_nh_search(args):
    D = _load_matrix(args.matrix)
    ring = RingParams(args.s) if args.s else (D.ring or RingParams(2))
    res = exact_Nh(D, ring, r_max=args.r_max, budget=args.budget)
    cert = [list(w) for w in res.certificate] if res.certificate is not None else None
    ok = certificate_ok(D, res.certificate, ring) if cert is not None else None
    _emit(args, {"value": res.value, "exhausted": res.exhausted, "lower_bound": res.lower_bound_used,
                 "certificate": cert, "certificate_valid": ok, "nodes": res.nodes,
                 "strategy": res.strategy, "notes": res.notes},
          f"N_h = {res.value}" + ("" if res.exhausted else " (budget exhausted)")
          + ("" if cert is None else "\n" + "\n".join(",".join(map(str, w)) for w in cert)))


def cmd_construct(args):
    ring = RingParams(args.s)
    if args.kind == "explicit":
        code = encoders.explicit_code(args.lam, args.t, ring)
        d = min_distance(code)
        _emit(args, {"lambda": args.lam, "t": args.t, "length": code.length, "min_distance": d,
                     "codewords": [list(w) for w in code.words]},
              f"length {code.length}, min distance {d}\n"
              + "\n".join(",".join(map(str, w)) for w in code.words))
        return
    if args.kind == "msum":
        enc = encoders.encoder_modular_sum(ring, args.k, args.t)
    else:
        f = _function(args, ring)
        if args.kind == "lambda4":
            enc = encoders.encoder_lambda4(f, args.t, locality.build_tau(f, 4, 2 * args.t))
        elif args.kind == "tau":
            lam = args.lam or locality.lambda0(f, 2 * args.t).lambda0
            tau = locality.build_tau(f, lam, 2 * args.t)
            if lam >= 2:
                code = encoders.explicit_code(lam, args.t, ring)
            else:
                code = Code(ring, ((),))
            enc = encoders.encoder_via_tau(f, args.t, tau, code)
        elif args.kind == "linear":
            if not args.generator:
                raise DomainError("--kind linear needs --generator")
            gring, G = parse_matrix(Path(args.generator).read_text())
            if gring != ring:
                raise ShapeError("generator matrix is over a different ring")
            enc = encoders.encoder_linear(f, G, args.t)
        else:  # pragma: no cover
            raise DomainError(args.kind)
    data = enc.to_json()
    if args.out:
        Path(args.out).write_text(json.dumps(data))
    _emit(args, {"encoder": data}, f"{enc.tag} encoder: k={enc.k}, r={enc.r}"
          + (f", written to {args.out}" if args.out else ""))


def _load_encoder(args):
    enc = encoders.SystematicEncoder.from_json(Path(args.encoder).read_text())
    if args.function:
        f = parse_selector(args.function, enc.ring, enc.k)
    elif enc.function is not None:
        f = enc.function
    else:
        raise DomainError("encoder file carries no function; pass --function")
    return enc, f


def cmd_verify(args):
    enc, f = _load_encoder(args)
    rep = verify.verify_fcc(enc, f, args.t)
    payload = rep.to_json()
    payload.pop("schema")
    for key in ("injective_on_image", "sufficient_condition", "code_min_distance"):
        if key in enc.provenance:
            payload[key] = enc.provenance[key]
    human = f"{rep.status} ({rep.pairs_total} pairs scanned, {rep.pairs_checked} with distinct values)"
    if rep.counterexample:
        c = rep.counterexample
        human += (f"\ncounterexample x={','.join(map(str, c.x))} y={','.join(map(str, c.y))}"
                  f" distance {c.distance} < {c.required}")
    if "injective_on_image" in enc.provenance:
        human += f"\ninjective on Im(f): {enc.provenance['injective_on_image']}"
    _emit(args, payload, human)


def cmd_simulate(args):
    enc, f = _load_encoder(args)
    rep = verify.verify_fcc(enc, f, args.t)
    if args.exhaustive:
        from .ring import all_words
        errs = verify.error_patterns(enc.k + enc.r, args.t, enc.ring)
        fails = 0
        total = 0
        for x in all_words(enc.ring, enc.k):
            x = tuple(int(a) for a in x)
            want = f(x)
            for e in errs:
                total += 1
                fails += verify.simulate_channel(enc, f, args.t, x, e, rep).value != want
        _emit(args, {"verified": rep.ok, "trials": total, "failures": fails},
              f"{total - fails}/{total} transmissions decoded to the correct value")
        return
    x = _vec(args.x)
    e = _vec(args.e) if args.e else (0,) * (enc.k + enc.r)
    res = verify.simulate_channel(enc, f, args.t, x, e, rep)
    value = list(res.value) if isinstance(res.value, tuple) else res.value
    _emit(args, {"x": list(x), "e": list(e), "decoded_value": value, "decoded_message": list(res.message),
                 "expected": list(f(x)) if isinstance(f(x), tuple) else f(x), "warning": res.warning},
          f"decoded f = {res.value} (true f(x) = {f(x)})" + (f"\nwarning: {res.warning}" if res.warning else ""))


def cmd_optimal(args):
    ring = RingParams(args.s)
    f = _function(args, ring)
    res = verify.exact_optimal_redundancy(f, args.t, r_max=args.r_max, budget=args.budget)
    if res.certificate is not None and args.out:
        Path(args.out).write_text(json.dumps(res.certificate.to_json()))
    _emit(args, {"function": f.label(), "s": args.s, "k": args.k, "t": args.t,
                 "value": res.value, "exhausted": res.exhausted, "lower_bound": res.lower_bound_used,
                 "nodes": res.nodes, "strategy": res.strategy, "notes": res.notes},
          f"r = {res.value}" if res.exhausted and res.certificate is not None
          else f"undetermined: {'; '.join(res.notes)} (refuted r < {res.refuted_below})")


def cmd_table(args):
    rows = reproduce.table_rows(args.s, range(1, args.t_max + 1), budget=args.budget)
    _emit(args, {"rows": [r.as_dict() for r in rows]}, reproduce.render(rows))


# --- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="homfcc", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *opts):
        sp = sub.add_parser(name)
        sp.set_defaults(fn=fn)
        sp.add_argument("--output", choices=("human", "json"), default="human")
        for opt in opts:
            opt(sp)
        return sp

    s_req = lambda sp: sp.add_argument("--s", type=int, required=True)
    k_req = lambda sp: sp.add_argument("--k", type=int, required=True)
    t_req = lambda sp: sp.add_argument("--t", type=int, required=True)
    fn_req = lambda sp: sp.add_argument("--function", required=True,
                                        help="wh | wdist:T | msum | msum-linear | const:V | linear:PATH | table:PATH")
    budget = lambda sp: sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    rmax = lambda sp: sp.add_argument("--r-max", type=int, default=None)

    add("weight", cmd_weight, s_req, lambda sp: sp.add_argument("--vec", action="append", required=True))
    add("dist", cmd_dist, s_req, lambda sp: sp.add_argument("--vec", action="append", required=True))
    add("ball", cmd_ball, s_req, lambda sp: sp.add_argument("--center", required=True),
        lambda sp: sp.add_argument("--radius", type=int, required=True),
        lambda sp: sp.add_argument("--sphere", action="store_true"))
    add("locality", cmd_locality, s_req, k_req, fn_req, lambda sp: sp.add_argument("--rho", type=int, required=True))
    add("tau", cmd_tau, s_req, k_req, fn_req, lambda sp: sp.add_argument("--rho", type=int, required=True),
        lambda sp: sp.add_argument("--lambda", dest="lam", type=int, required=True))
    add("drm", cmd_drm, s_req, k_req, t_req, fn_req,
        lambda sp: sp.add_argument("--vec", action="append", default=[]),
        lambda sp: sp.add_argument("--all", action="store_true", help="use every message"),
        lambda sp: sp.add_argument("--out"))
    add("bound", cmd_bound,
        lambda sp: sp.add_argument("--mode", choices=("generic", "z4", "msum", "linear", "lambda"), required=True),
        lambda sp: sp.add_argument("--matrix"),
        lambda sp: sp.add_argument("--s", type=int),
        lambda sp: sp.add_argument("--k", type=int),
        lambda sp: sp.add_argument("--t", type=int),
        lambda sp: sp.add_argument("--function"),
        lambda sp: sp.add_argument("--lambda", dest="lam", type=int))
    add("nh-search", cmd_nh_search, lambda sp: sp.add_argument("--matrix", required=True),
        lambda sp: sp.add_argument("--s", type=int), rmax, budget)
    add("construct", cmd_construct,
        lambda sp: sp.add_argument("--kind", choices=("explicit", "lambda4", "tau", "msum", "linear"), required=True),
        s_req, t_req,
        lambda sp: sp.add_argument("--k", type=int),
        lambda sp: sp.add_argument("--function"),
        lambda sp: sp.add_argument("--lambda", dest="lam", type=int),
        lambda sp: sp.add_argument("--generator", help="matrix file 's r l' for the linear construction"),
        lambda sp: sp.add_argument("--out"))
    add("verify", cmd_verify, lambda sp: sp.add_argument("--encoder", required=True), t_req,
        lambda sp: sp.add_argument("--function"))
    add("simulate", cmd_simulate, lambda sp: sp.add_argument("--encoder", required=True), t_req,
        lambda sp: sp.add_argument("--function"),
        lambda sp: sp.add_argument("--x", default=""),
        lambda sp: sp.add_argument("--e", default=""),
        lambda sp: sp.add_argument("--exhaustive", action="store_true",
                                   help="every message against every error of weight <= t"))
    add("optimal", cmd_optimal, s_req, k_req, t_req, fn_req, rmax, budget, lambda sp: sp.add_argument("--out"))
    add("table", cmd_table, s_req, lambda sp: sp.add_argument("--t-max", type=int, default=3),
        lambda sp: sp.add_argument("--budget", type=int, default=200_000))
    return p


def _require(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise DomainError("missing required option(s): " + ", ".join("--" + n.replace("_", "-") for n in missing))


_NEEDS = {
    ("bound", "msum"): ("s", "t"),
    ("bound", "linear"): ("s", "k", "t", "function"),
    ("bound", "lambda"): ("lam", "t"),
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        RunConfig.from_args(args).validate()
        if args.command == "bound":
            _require(args, *_NEEDS.get(("bound", args.mode), ()))
        if args.command == "construct" and args.kind != "explicit":
            _require(args, "k", *(() if args.kind == "msum" else ("function",)))
        if args.command == "construct" and args.kind == "explicit":
            _require(args, "lam")
        args.fn(args)
    except FCCError as exc:
        print(f"homfcc {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"homfcc {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
