"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 failed check (sweep violation or a
false identity).  All output is deterministic; --json switches to the stable
JSON schema documented in the README.
"""

import argparse
import json
import os
import sys

from . import cache as cache_mod
from . import gamma, grothpoly, quiver
from .shapes import partition, perm


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


class InputError(ValueError):
    pass


def parse_ints(text: str, what: str):
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1]
    if not text:
        return ()
    out = []
    pos = 0
    for chunk in text.split(","):
        try:
            out.append(int(chunk.strip()))
        except ValueError:
            raise InputError(f"malformed {what} {text!r}: bad entry at position {pos}")
        pos += len(chunk) + 1
    return tuple(out)


def parse_partition(text: str):
    parts = parse_ints(text, "partition")
    try:
        return partition(parts)
    except ValueError as exc:
        raise InputError(str(exc))


def parse_perm(text: str):
    try:
        return perm(parse_ints(text, "permutation"))
    except ValueError as exc:
        raise InputError(str(exc))


def parse_ranks(text: str) -> quiver.RankConditions:
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    try:
        data = json.loads(text)
        return quiver.RankConditions.from_json(data)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"malformed rank conditions: {exc}")


def _gamma_json(element: gamma.GammaElement):
    return [
        {"partition": list(p), "coeff": c} for p, c in element.sorted_items()
    ]


def _quiver_json(element: quiver.QuiverElement):
    return [
        {"mu": [list(p) for p in mu], "coeff": c}
        for mu, c in element.sorted_items()
    ]


def _quiver_text(element: quiver.QuiverElement) -> str:
    lines = []
    for mu, c in element.sorted_items():
        body = " (x) ".join("G[" + ",".join(str(x) for x in p) + "]" for p in mu)
        lines.append(f"{c:+d} * {body}")
    return "\n".join(lines) if lines else "0"


def _emit(args, text, payload):
    print(json.dumps(payload, sort_keys=True) if args.json else text)


def build_parser() -> _Parser:
    top = _Parser(prog="kschub", description="Exact K-theoretic Schubert calculus")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true")
        p.add_argument("--cache", metavar="PATH")
        p.add_argument("--threads", type=int)

    p = sub.add_parser("groth", help="double Grothendieck polynomial of a permutation")
    p.add_argument("--perm", required=True)
    common(p)

    p = sub.add_parser("stable", help="truncated stable Grothendieck polynomial")
    p.add_argument("--perm", required=True)
    p.add_argument("--vars-x", type=int, default=3)
    p.add_argument("--vars-y", type=int, default=0)
    p.add_argument("--degree", type=int, default=6)
    common(p)

    p = sub.add_parser("straighten", help="expand G_I into the partition basis")
    p.add_argument("--seq", required=True)
    common(p)

    p = sub.add_parser("lr", help="product G_lambda * G_mu (or one coefficient)")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu")
    common(p)

    p = sub.add_parser("coprod", help="coproduct of a basis element (or one coefficient)")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--sigma")
    p.add_argument("--tau")
    common(p)

    p = sub.add_parser("quiver", help="quiver coefficients for rank conditions")
    p.add_argument("--ranks", required=True, metavar="FILE|JSON")
    common(p)

    p = sub.add_parser("sweep", help="alternating-sign conjecture sweep")
    p.add_argument("--bundles", type=int, required=True)
    p.add_argument("--max-rank", type=int, required=True)
    common(p)

    p = sub.add_parser("expand-gw", help="expansion of G_w in the stable basis")
    p.add_argument("--perm", required=True)
    common(p)

    p = sub.add_parser("check", help="identity checkers")
    p.add_argument("kind", choices=["jt", "gtos", "gysin"])
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--seq", default="")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--vars-x", type=int, default=2)
    p.add_argument("--vars-y", type=int, default=0)
    p.add_argument("--degree", type=int, default=5)
    common(p)

    return top


def run(argv) -> int:
    args = build_parser().parse_args(argv)
    if args.cache:
        cache_mod.load_cache(args.cache)
    code = 0
    try:
        if args.command == "groth":
            value = grothpoly.groth_double(parse_perm(args.perm)).value
            _emit(args, value.to_text(), {"poly": value.to_text()})
        elif args.command == "stable":
            value = grothpoly.stable_truncation(
                parse_perm(args.perm), args.vars_x, args.vars_y, args.degree
            )
            _emit(args, value.to_text(), {"degree": args.degree, "poly": value.to_text()})
        elif args.command == "straighten":
            element = gamma.straighten(parse_ints(args.seq, "sequence"))
            _emit(args, element.to_text(), _gamma_json(element))
        elif args.command == "lr":
            lam, mu = parse_partition(args.lam), parse_partition(args.mu)
            if args.nu is not None:
                c = gamma.lr_coeff(lam, mu, parse_partition(args.nu))
                _emit(args, str(c), {"coeff": c})
            else:
                element = gamma.GammaElement(gamma.lr_table(lam, mu))
                _emit(args, element.to_text(), _gamma_json(element))
        elif args.command == "coprod":
            lam = parse_partition(args.lam)
            if args.sigma is not None or args.tau is not None:
                if args.sigma is None or args.tau is None:
                    raise InputError("--sigma and --tau go together")
                c = gamma.coprod_coeff(
                    parse_partition(args.sigma), parse_partition(args.tau), lam
                )
                _emit(args, str(c), {"coeff": c})
            else:
                table = gamma.coproduct(gamma.GammaElement.basis(lam))
                items = sorted(table.items())
                text = "\n".join(
                    f"{c:+d} * G[{','.join(map(str, s))}] (x) G[{','.join(map(str, t))}]"
                    for (s, t), c in items
                )
                _emit(
                    args,
                    text or "0",
                    [{"lambda": list(s), "mu": list(t), "coeff": c} for (s, t), c in items],
                )
        elif args.command == "quiver":
            element = quiver.quiver_coeffs(parse_ranks(args.ranks))
            _emit(args, _quiver_text(element), _quiver_json(element))
        elif args.command == "sweep":
            report = quiver.conjecture_sweep(args.bundles, args.max_rank, args.threads)
            text = "\n".join(
                f"{k}: {report[k]}"
                for k in (
                    "bundles",
                    "max_rank",
                    "rank_conditions",
                    "distinct_diagrams",
                    "max_mu_weight",
                    "wall_time_seconds",
                )
            ) + f"\nviolations: {len(report['violations'])}"
            _emit(args, text, report)
            if report["violations"]:
                code = 2
        elif args.command == "expand-gw":
            element = quiver.expand_gw(parse_perm(args.perm))
            _emit(args, element.to_text(), _gamma_json(element))
        elif args.command == "check":
            if args.kind == "jt":
                ok = gamma.jacobi_trudi_check(
                    args.a, parse_ints(args.seq, "sequence"), args.degree
                )
            elif args.kind == "gtos":
                ok = gamma.series_identities_check(
                    "gtos", k=args.k, n_x=args.vars_x, D=args.degree
                )
            else:
                ok = gamma.series_identities_check(
                    "gysin", m=args.m, i=args.i,
                    n_x=args.vars_x, n_y=args.vars_y, D=args.degree,
                )
            _emit(args, "OK" if ok else "FAIL", {"ok": ok})
            if not ok:
                code = 2
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.cache:
        try:
            cache_mod.save_cache(args.cache)
        except OSError as exc:
            print(f"cache {args.cache}: not saved ({exc})", file=sys.stderr)
    return code


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
