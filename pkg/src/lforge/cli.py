"""Command-line interface: ``lforge <group> <command> ...``.

Exit codes: 0 success, 1 domain error (reported with the originating module
and a witness), 2 usage error (bad arguments or unparsable input).
"""

import argparse
import json
import sys
import time

from . import acceptance
from .config import Config, set_config
from .errors import LforgeError, ParseError
from .f1_closure import (
    augmentation_check,
    build_tower,
    classify_generator,
    closure_fixed_count,
    cyc_factor,
    hom_count_affine_line,
    is_lambda_stable,
)
from .f1_modules import (
    F1Module,
    SquareZeroElem,
    hom_count,
    hom_count_sqzero,
    iter_simple,
    primes_upto,
    square_zero_lambda,
    validate_module,
    verdict,
)
from .lambda_rings import ExceedsBound, check_axioms, degree, sample_pairs
from .monoid import FreeAdd, PointedMonoid, ZERO, fixed_point_count, points
from .parsing import parse_element, parse_int_list, parse_monoid, parse_poly, parse_ring, parse_series
from .symmetric import newton_adams, universal_names, universal_P, universal_P2
from .witt import (
    WittVector,
    artin_hasse,
    artin_hasse_inv,
    frobenius_witt,
    ghost,
    verschiebung,
    witt_add,
    witt_mul,
    witt_neg,
    witt_nonunital,
    witt_sym_names,
    witt_sym_polys,
)
from .zeta import (
    ZetaSpec,
    dirichlet_partial,
    euler_product,
    fixed_point_zeta,
    geometric_zeta_f1mod,
    verify_identities,
)

CONFIG_FIELDS = [
    ("series_order", "truncation order for lambda_t series"),
    ("universal_n_max", "largest n for P_n"),
    ("universal_nm_max", "largest n*m for P_{n,m}"),
    ("witt_length", "default Witt vector length"),
    ("k_max_stability", "k bound for bounded stability checks"),
    ("module_bound", "default N_bound for F1-module families"),
    ("zeta_precision_bits", "working precision for zeta values"),
]


def _fmt(x):
    if isinstance(x, int):
        return str(x)
    if hasattr(x, "format") and not isinstance(x, str):
        try:
            return x.format()
        except TypeError:
            pass
    return str(x)


def _poly_payload(P, names):
    return {"polynomial": P.format(names), "variables": names, "terms": P.to_json(len(names))}


# -- universal ---------------------------------------------------------------


def cmd_universal(args, cfg):
    if args.action == "pn":
        P, names = universal_P(args.n), universal_names(args.n)
        return {"n": args.n, **_poly_payload(P, names)}, P.format(names)
    if args.action == "pnm":
        P = universal_P2(args.n, args.m)
        names = [f"x{i}" for i in range(1, args.n * args.m + 1)]
        return {"n": args.n, "m": args.m, **_poly_payload(P, names)}, P.format(names)
    P = newton_adams(args.n)
    names = [f"x{i}" for i in range(1, args.n + 1)]
    return {"k": args.n, **_poly_payload(P, names)}, P.format(names)


# -- lambda ------------------------------------------------------------------


def cmd_lambda(args, cfg):
    R = parse_ring(_pick(args, "ring"))
    if args.action == "axioms":
        report = check_axioms(R, sample_pairs(R, args.samples, seed=args.seed), args.n_max)
        d = report.to_dict()
        lines = [f"{R.name}: {'all axioms pass' if report.passed else 'FAILED'} ({args.samples} pairs, n <= {args.n_max})"]
        for k, r in d["axioms"].items():
            lines.append(f"  axiom {k}: {'ok' if r['passed'] else 'fails, witness ' + str(r['witness'])} ({r['checks']} checks)")
        return d, "\n".join(lines)
    x = parse_element(R, _pick(args, "element"))
    base = {"ring": R.name, "element": _fmt(x)}
    if args.action == "series":
        order = args.order or cfg.series_order
        s = R.lambda_t(x, order)
        coeffs = [_fmt(c) for c in s.coeffs]
        return {**base, "order": order, "coefficients": coeffs}, " + ".join(
            f"({c})*t^{i}" if i else f"({c})" for i, c in enumerate(coeffs)
        ) + f" + O(t^{order + 1})"
    if args.action == "eval":
        v = R.lambda_n(x, args.n)
        return {**base, "n": args.n, "value": _fmt(v)}, _fmt(v)
    if args.action == "adams":
        v = R.adams(x, args.k)
        return {**base, "k": args.k, "value": _fmt(v)}, _fmt(v)
    d = degree(R, x, args.bound)
    if isinstance(d, ExceedsBound):
        return {**base, "degree": None, "exceeds_bound": d.bound}, str(d)
    return {**base, "degree": d}, str(d)


# -- monoid ------------------------------------------------------------------


def cmd_monoid(args, cfg):
    if args.action == "fixed":
        k = _pick(args, "k")
        n = fixed_point_count(k)
        return {"k": k, "fixed_points": n}, str(n)
    source, target = _pick(args, "source"), _pick(args, "target")
    source = FreeAdd() if source in ("N", "N+", "Nplus") else parse_monoid(source)
    target = parse_monoid(target)
    maps = points(source, target)
    pm = PointedMonoid(target)
    rendered = [["0" if b is ZERO else pm.format(b) for b in m] for m in maps]
    return {"source": source.name, "target": target.name, "count": len(maps), "maps": rendered}, (
        f"{len(maps)} maps: " + "; ".join(",".join(r) for r in rendered)
    )


# -- witt --------------------------------------------------------------------


def _witt_arg(text):
    return WittVector(parse_int_list(text))


def cmd_witt(args, cfg):
    a = args.action
    if a == "ghost":
        w = ghost(WittVector(parse_int_list(args.components)))
        return {"components": parse_int_list(args.components), "ghost": w.to_list()}, ", ".join(map(str, w.to_list()))
    if a in ("add", "mul"):
        x, y = _witt_arg(args.a), _witt_arg(args.b)
        r = witt_add(x, y) if a == "add" else witt_mul(x, y)
        return {"a": x.to_list(), "b": y.to_list(), "result": r.to_list()}, ", ".join(map(str, r.to_list()))
    if a == "neg":
        r = witt_neg(_witt_arg(args.a))
        return {"result": r.to_list()}, ", ".join(map(str, r.to_list()))
    if a == "ah":
        length = args.length or cfg.witt_length
        f = parse_series(args.series, order=length)
        r = artin_hasse(f, length)
        return {"series": args.series, "length": length, "components": r.to_list()}, ", ".join(map(str, r.to_list()))
    if a == "ah-inv":
        f = artin_hasse_inv(_witt_arg(args.a))
        return {"series": [int(c) for c in f.coeffs], "text": f.format()}, f.format()
    if a in ("frobenius", "verschiebung"):
        x = _witt_arg(args.a)
        r = frobenius_witt(x, args.n) if a == "frobenius" else verschiebung(x, args.n)
        return {"a": x.to_list(), "n": args.n, "result": r.to_list()}, ", ".join(map(str, r.to_list()))
    if a == "nonunital":
        T = witt_nonunital(parse_int_list(args.orders), args.length or cfg.witt_length)
        d = T.to_dict()
        return d, f"W(M) = M^{d['length']}, componentwise addition, zero multiplication ({d['group_order']} elements)"
    polys = witt_sym_polys(args.n)
    names = witt_sym_names(args.n)
    d = {k: [p.format(names) for p in v] for k, v in polys.items()}
    text = "\n".join(f"{k}[{i}] = {p}" for k, v in d.items() for i, p in enumerate(v, 1))
    return {"n": args.n, "variables": names, **d}, text


# -- f1 ----------------------------------------------------------------------


def cmd_f1(args, cfg):
    a = args.action
    if a in ("ideal-check", "classify", "factor"):
        f = parse_poly(args.poly)
        if a == "factor":
            d = cyc_factor(f).to_dict()
            return {"polynomial": str(f), **d}, json.dumps(d)
        if a == "ideal-check":
            v = is_lambda_stable(f, args.k_max or cfg.k_max_stability)
            d = v.to_dict()
            text = d["verdict"] + (f", witness k={d['witness']}" if d["verdict"] == "not_stable" else "")
            return {"polynomial": str(f), **d}, text
        c = classify_generator(f).to_dict()
        return {"polynomial": str(f), **c}, c["kind"] + "".join(f", {k}={v}" for k, v in c.items() if k != "kind")
    if a == "tower":
        t = build_tower(args.n).to_dict()
        steps = " -> ".join(f"(n={s['n']}, p={s['p']}, i={s['i']})" for s in t["steps"]) or "empty tower"
        return t, f"{steps}; certified={t['certified']}"
    if a == "homcount":
        M = parse_monoid(args.monoid)
        n = hom_count_affine_line(M)
        return {"monoid": M.name, "count": n}, str(n)
    if a == "fixed":
        n = closure_fixed_count(args.n)
        return {"n": args.n, "fixed_points": n}, str(n)
    ok = augmentation_check(args.n)
    return {"n": args.n, "commutes": ok}, str(ok).lower()


# -- f1mod -------------------------------------------------------------------


def _family(text, p, bound):
    """'0,0,0' gives a_q at the primes q <= bound in order (missing ones are 0);
    '2:2,4:3' gives explicit indices."""
    if ":" in text:
        out = {}
        for part in text.split(","):
            try:
                n, v = part.split(":")
                out[int(n)] = int(v)
            except ValueError:
                raise ParseError(f"cannot read family entry {part!r}", witness=part) from None
        return out
    values = parse_int_list(text)
    ps = primes_upto(bound)
    if len(values) > len(ps):
        raise ParseError(f"{len(values)} values given but only {len(ps)} primes <= {bound}", witness=text)
    return dict(zip(ps, values))


def cmd_f1mod(args, cfg):
    bound = args.bound or cfg.module_bound
    if args.action == "enumerate":
        records = []
        nondeg = []
        count = 0
        for P, values in iter_simple(args.p, bound):
            v = verdict(P)
            count += 1
            rec = {"prime_values": {str(q): a for q, a in values.items()}, **v.to_dict()}
            if args.all:
                records.append(rec)
            if v.non_degenerate:
                nondeg.append(rec)
        d = {"p": args.p, "bound": bound, "families": count, "non_degenerate": nondeg}
        if args.all:
            d["records"] = records
        return d, f"{count} families on C_{args.p}; non-degenerate: {len(nondeg)} (n(P) = {[r['n_count'] for r in nondeg]})"
    P = F1Module.cyclic(args.p, _family(args.family, args.p, bound), bound)
    if args.action == "validate":
        ok, witness = validate_module(P)
        return {"module": P.to_dict(), "valid": ok, "witness": witness}, "valid" if ok else f"invalid, witness {witness}"
    if args.action == "lambda":
        e = SquareZeroElem(args.z, args.m, P.orders)
        r = square_zero_lambda(P, e, args.n, args.n)
        return {"element": str(e), "n": args.n, "value": [r.z, list(r.m)]}, str(r)
    direct = hom_count(P)
    via = hom_count_sqzero(P)
    d = {"module": P.to_dict(), "hom_count": direct, "via_square_zero": via, "verdict": verdict(P, direct).to_dict()}
    return d, f"{direct} (square-zero route: {via})"


# -- zeta --------------------------------------------------------------------


def cmd_zeta(args, cfg):
    prec = cfg.zeta_precision_bits
    a = args.action
    if a == "verify-identities":
        rows = verify_identities(prec)
        d = {"checks": [{"name": n, "passed": ok, "detail": det} for n, ok, det in rows]}
        return d, "\n".join(f"[{'PASS' if ok else 'FAIL'}] {n}: {det}" for n, ok, det in rows)
    if a == "euler":
        spec = {"primes": ZetaSpec.primes(), "monoidcat": ZetaSpec.monoidcat(), "f1modules": ZetaSpec.f1modules()}[args.spec]
        r = euler_product(spec, args.s, args.bound, prec)
        d = {"spec": args.spec, **r.to_dict()}
    elif a == "dirichlet":
        d = dirichlet_partial(args.s, args.terms, prec).to_dict()
    elif a == "fixed":
        d = fixed_point_zeta(args.s, args.terms, prec).to_dict()
    else:
        d = geometric_zeta_f1mod(args.s, args.primes, args.bound or cfg.module_bound, prec).to_dict()
    return d, f"{d['value']} (tail bound {d['tail_bound']}, bound {d['bound_used']})"


# -- verify ------------------------------------------------------------------


def cmd_verify(args, cfg):
    only = parse_int_list(args.only) if args.only else None
    results = []
    for r in acceptance.run(args.level, only):
        results.append(r)
        if not args.json:
            print(r.line(), flush=True)
    d = {"level": args.level, "passed": all(r.passed for r in results), "criteria": [r.to_dict() for r in results]}
    summary = f"{sum(r.passed for r in results)}/{len(results)} criteria passed"
    return d, summary


# -- parser ------------------------------------------------------------------


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _real(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    return int(v) if v.is_integer() else v


def _common(suppress):
    p = argparse.ArgumentParser(add_help=False)
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS if suppress else False, help="emit a JSON envelope")
    p.add_argument("--timing", action="store_true", default=argparse.SUPPRESS if suppress else False, help="add wall time to the output")
    for name, help_text in CONFIG_FIELDS:
        p.add_argument("--" + name.replace("_", "-"), type=_positive, default=default, help=f"{help_text} (env LFORGE_{name.upper()})")
    return p


def _ring_args(p):
    p.add_argument("ring", nargs="?", help="Z, Z[x], C6, Z[C6], C2xC3, ...")
    p.add_argument("--ring", dest="ring_opt", help="same as the positional ring")


def _pick(args, name):
    """Positional value or its --flag twin; exactly one must be given."""
    pos, opt = getattr(args, name, None), getattr(args, name + "_opt", None)
    if pos is not None and opt is not None and pos != opt:
        raise ValueError(f"{name} given twice with different values")
    value = pos if pos is not None else opt
    if value is None:
        raise ValueError(f"missing required argument: {name}")
    return value


def build_parser():
    common = _common(suppress=True)
    parser = argparse.ArgumentParser(prog="lforge", description="Lambda-rings, Witt vectors and F1 computations.", parents=[_common(False)])
    groups = parser.add_subparsers(dest="group", required=True, metavar="{universal,lambda,monoid,witt,f1,f1mod,zeta,verify}")

    def sub(group_parsers, name, **kw):
        return group_parsers.add_parser(name, parents=[common], **kw)

    u = groups.add_parser("universal", help="universal lambda-ring polynomials").add_subparsers(dest="action", required=True)
    p = sub(u, "pn", help="P_n")
    p.add_argument("n", type=_positive)
    p = sub(u, "pnm", help="P_{n,m}")
    p.add_argument("n", type=_positive)
    p.add_argument("m", type=_positive)
    p = sub(u, "adams", help="psi^k in terms of lambda^i")
    p.add_argument("n", type=_positive, metavar="k")

    lam = groups.add_parser("lambda", help="lambda operations on Z, Z[x], Z[M]").add_subparsers(dest="action", required=True)
    for name in ("series", "eval", "adams", "degree"):
        p = sub(lam, name)
        _ring_args(p)
        p.add_argument("element", nargs="?", help="e.g. 'g+h', '2*u6^3 - 1'")
        p.add_argument("--elem", dest="element_opt", help="same as the positional element")
        if name == "series":
            p.add_argument("--order", type=_positive)
        if name == "eval":
            p.add_argument("--n", type=int, required=True)
        if name == "adams":
            p.add_argument("--k", type=_positive, required=True)
        if name == "degree":
            p.add_argument("--bound", type=_positive, default=8)
    p = sub(lam, "axioms", help="check the six axioms on random pairs")
    _ring_args(p)
    p.add_argument("--samples", type=_positive, default=20)
    p.add_argument("--n-max", type=_positive, default=3)
    p.add_argument("--seed", type=int, default=0)

    mon = groups.add_parser("monoid", help="pointed monoids and their points").add_subparsers(dest="action", required=True)
    p = sub(mon, "points", help="maps of pointed monoids SOURCE+ -> TARGET+")
    p.add_argument("source", nargs="?", help="N+ (or Nplus) or a finite monoid such as C2")
    p.add_argument("target", nargs="?")
    p.add_argument("--domain", dest="source_opt")
    p.add_argument("--codomain", dest="target_opt")
    p = sub(mon, "fixed", help="points of the affine line over Q/Z fixed by psi^k")
    p.add_argument("k", type=_positive, nargs="?")
    p.add_argument("--k", dest="k_opt", type=_positive)

    w = groups.add_parser("witt", help="big Witt vectors").add_subparsers(dest="action", required=True)
    p = sub(w, "ghost")
    p.add_argument("--components", required=True)
    for name in ("add", "mul"):
        p = sub(w, name)
        p.add_argument("--a", required=True)
        p.add_argument("--b", required=True)
    p = sub(w, "neg")
    p.add_argument("--a", required=True)
    p = sub(w, "ah", help="Artin-Hasse components of a series")
    p.add_argument("--series", required=True)
    p.add_argument("--length", type=_positive)
    p = sub(w, "ah-inv", help="series of a Witt vector")
    p.add_argument("--a", required=True)
    for name in ("frobenius", "verschiebung"):
        p = sub(w, name)
        p.add_argument("--a", required=True)
        p.add_argument("--n", type=_positive, required=True)
    p = sub(w, "sym-polys", help="symbolic addition and multiplication polynomials")
    p.add_argument("--n", type=_positive, required=True)
    p = sub(w, "nonunital", help="W of a group with zero multiplication")
    p.add_argument("--orders", required=True)
    p.add_argument("--length", type=_positive)

    f1 = groups.add_parser("f1", help="lambda-ideals of Z[x] and extensions of F1").add_subparsers(dest="action", required=True)
    for name in ("ideal-check", "classify", "factor"):
        p = sub(f1, name)
        p.add_argument("poly", help="monic polynomial such as 'x^5-1'")
        if name == "ideal-check":
            p.add_argument("--k-max", type=_positive)
    p = sub(f1, "tower")
    p.add_argument("n", type=_positive)
    p = sub(f1, "homcount")
    p.add_argument("monoid")
    p = sub(f1, "fixed")
    p.add_argument("n", type=_positive)
    p = sub(f1, "augmentation")
    p.add_argument("n", type=_positive)

    fm = groups.add_parser("f1mod", help="F1-modules on cyclic groups").add_subparsers(dest="action", required=True)
    p = sub(fm, "enumerate")
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--bound", type=_positive)
    p.add_argument("--all", action="store_true", help="list every family")
    for name in ("homcount", "validate", "lambda"):
        p = sub(fm, name)
        p.add_argument("--p", type=_positive, required=True)
        p.add_argument("--family", default="", help="values at primes '0,0,0' or explicit 'n:a,...'")
        p.add_argument("--bound", type=_positive)
        if name == "lambda":
            p.add_argument("--z", type=int, default=0)
            p.add_argument("--m", type=int, default=1)
            p.add_argument("--n", type=_positive, required=True)

    z = groups.add_parser("zeta", help="zeta functions").add_subparsers(dest="action", required=True)
    p = sub(z, "euler")
    p.add_argument("--spec", choices=["primes", "monoidcat", "f1modules"], default="primes")
    p.add_argument("--s", type=_real, required=True)
    p.add_argument("--bound", type=_positive, required=True)
    for name in ("dirichlet", "fixed"):
        p = sub(z, name)
        p.add_argument("--s", type=_real, required=True)
        p.add_argument("--terms", type=_positive, required=True)
    p = sub(z, "f1mod")
    p.add_argument("--s", type=_real, required=True)
    p.add_argument("--primes", type=int, required=True)
    p.add_argument("--bound", type=_positive)
    sub(z, "verify-identities")

    v = groups.add_parser("verify", help="run the acceptance suite", parents=[common])
    v.add_argument("level", nargs="?", choices=["quick", "full"], default="quick")
    v.add_argument("--only", help="comma-separated criterion numbers")
    return parser


HANDLERS = {
    "universal": cmd_universal,
    "lambda": cmd_lambda,
    "monoid": cmd_monoid,
    "witt": cmd_witt,
    "f1": cmd_f1,
    "f1mod": cmd_f1mod,
    "zeta": cmd_zeta,
    "verify": cmd_verify,
}


def _command_name(args):
    action = getattr(args, "action", None)
    return args.group if action is None else f"{args.group} {action}"


def _emit(args, envelope, text, stream=None):
    stream = stream or sys.stdout
    if args.json:
        stream.write(json.dumps(envelope, indent=2) + "\n")
    else:
        stream.write(text + "\n")


def dispatch(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        cfg = Config.from_env(**{name: getattr(args, name, None) for name, _ in CONFIG_FIELDS})
    except ValueError as exc:
        print(f"lforge: error: {exc}", file=sys.stderr)
        return 2
    envelope = {"command": _command_name(args), "config": cfg.to_dict()}
    previous = set_config(cfg)
    start = time.perf_counter()
    try:
        result, text = HANDLERS[args.group](args, cfg)
    except ParseError as exc:
        envelope["error"] = exc.to_dict()
        _emit(args, envelope, f"lforge: usage error: {exc}", sys.stdout if args.json else sys.stderr)
        return 2
    except LforgeError as exc:
        envelope["error"] = exc.to_dict()
        text = f"lforge: {exc.module} error: {exc}" + (f" (witness: {exc.witness!r})" if exc.witness is not None else "")
        _emit(args, envelope, text, sys.stdout if args.json else sys.stderr)
        return 1
    except ValueError as exc:
        envelope["error"] = {"error": "UsageError", "module": "cli", "message": str(exc)}
        _emit(args, envelope, f"lforge: usage error: {exc}", sys.stdout if args.json else sys.stderr)
        return 2
    finally:
        set_config(previous)
    envelope["result"] = result
    if args.timing:
        envelope["timing_seconds"] = round(time.perf_counter() - start, 6)
        text += f"\n[{envelope['timing_seconds']:.3f}s]"
    _emit(args, envelope, text)
    if args.group == "verify" and not result["passed"]:
        return 1
    return 0


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
