"""Command-line front end.

Exit codes: 0 success, 1 domain error, 2 parse or usage error, 3 oracle/formula
mismatch.  Every subcommand accepts ``--json``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bernstein import DEFAULT_CAP, lorentz_degree, to_bernstein
from .construct import BasisFamily, Variant, basis_for_nodes, dn, interval_basis, max_dim, optimal_nodes
from .errors import ParseError, PosBasisError
from .nodes import nodes_to_json, omega_type
from .omega import as_omega, omega_str, sigma, tau
from .oracle import dn_oracle, tau_oracle_canonical
from .polycore import Polynomial, fmt_rat, rat
from .sets import parse_set_expr, profile
from .verify import verify_positive_basis

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_MISMATCH = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _omega_arg(text: str):
    if not text or set(text) - {"0", "1"}:
        raise ParseError(f"omega must be a string of 0/1 digits, got {text!r}")
    return as_omega(text)


def parse_coeffs(text: str) -> Polynomial:
    """Lowest-degree-first coefficients, as a JSON array or comma-separated list."""
    text = text.strip()
    if text.startswith("["):
        try:
            items = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad coefficient array: {exc.msg}", exc.pos) from None
        if not isinstance(items, list):
            raise ParseError("coefficient JSON must be an array")
    else:
        items = [s.strip() for s in text.split(",")]
    try:
        return Polynomial([rat(v) for v in items])
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad coefficient: {exc}") from None


def _load_json(src: str):
    if src == "-":
        text = sys.stdin.read()
    elif src.lstrip().startswith(("{", "[")):
        text = src
    else:
        try:
            text = Path(src).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {src}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", exc.pos) from None


def _polys_from_json(data) -> list[Polynomial]:
    if isinstance(data, dict) and "basis" in data:
        return list(BasisFamily.from_json(data).expanded)
    if isinstance(data, list):
        try:
            return [Polynomial.from_json(c) for c in data]
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad coefficient list: {exc}") from None
    raise ParseError("expected a basis family object or a list of coefficient arrays")


def _cap(arg_cap):
    if arg_cap is not None:
        return arg_cap
    env = os.environ.get("POSBASIS_LORENTZ_CAP")
    if env is None:
        return DEFAULT_CAP
    try:
        return int(env)
    except ValueError:
        raise ParseError(f"POSBASIS_LORENTZ_CAP must be an integer, got {env!r}") from None


# each handler returns (exit code, json payload, text lines)


def cmd_profile(args):
    prof = profile(parse_set_expr(args.set))
    data = prof.to_json()
    lines = [f"{k}: {v}" for k, v in data.items()]
    return EXIT_OK, data, lines


def cmd_dn(args):
    omega = parse_set_expr(args.set)
    res = dn(omega, args.n)
    return EXIT_OK, {"n": args.n, "dn": res.degree, "branch": res.branch.value}, [str(res.degree)]


def cmd_maxdim(args):
    val = max_dim(parse_set_expr(args.set), args.m)
    return EXIT_OK, {"m": args.m, "max_dim": val}, [str(val)]


def cmd_tau(args):
    w = _omega_arg(args.omega)
    val = tau(w)
    return EXIT_OK, {"omega": omega_str(w), "tau": val}, [str(val)]


def cmd_sigma(args):
    w = _omega_arg(args.omega)
    val = sigma(w)
    return EXIT_OK, {"omega": omega_str(w), "sigma": val}, [str(val)]


def cmd_nodes(args):
    omega = parse_set_expr(args.set)
    t = optimal_nodes(omega, args.n)
    w = omega_type(omega, t)
    data = {"nodes": nodes_to_json(t), "omega": omega_str(w), "sigma": sigma(w) if len(t) else 0}
    return EXIT_OK, data, [" ".join(data["nodes"])]


def cmd_basis(args):
    omega = parse_set_expr(args.set)
    fam = basis_for_nodes(omega, optimal_nodes(omega, args.n))
    data = fam.to_json()
    # the family itself is JSON; text mode prints it too so it can be piped to verify
    return EXIT_OK, data, [json.dumps(data)]


def cmd_interval_basis(args):
    try:
        a, b = rat(args.a), rat(args.b)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    fam = interval_basis(a, b, args.m, Variant(args.variant))
    data = fam.to_json()
    lines = [f"nodes: {' '.join(data['nodes'])}"] + [str(f) for f in fam.polys]
    return EXIT_OK, data, lines


def cmd_lorentz(args):
    p = parse_coeffs(args.coeffs)
    L = lorentz_degree(p, _cap(args.cap))
    coeffs = [fmt_rat(c) for c in to_bernstein(p, L)]
    return EXIT_OK, {"poly": p.to_json(), "lorentz_degree": L, "bernstein": coeffs}, [str(L)]


def cmd_verify(args):
    omega = parse_set_expr(args.set)
    polys = _polys_from_json(_load_json(args.basis))
    rep = verify_positive_basis(omega, polys)
    line = rep.verdict if rep.accepted else f"{rep.verdict}: {rep.reason}"
    return EXIT_OK, rep.to_json(), [line]


def cmd_oracle_tau(args):
    w = _omega_arg(args.omega)
    got, want = tau_oracle_canonical(w), tau(w)
    flag = "MATCH" if got == want else "MISMATCH"
    data = {"omega": omega_str(w), "oracle": got, "formula": want, "result": flag}
    return (EXIT_OK if got == want else EXIT_MISMATCH), data, [f"oracle={got} formula={want} {flag}"]


def cmd_oracle_dn(args):
    omega = parse_set_expr(args.set)
    res = dn_oracle(omega, args.n)
    want = dn(omega, args.n).degree
    flag = "MATCH" if res.value == want else "MISMATCH"
    data = {
        "n": args.n,
        "oracle": res.value,
        "formula": want,
        "result": flag,
        "nodes": nodes_to_json(res.nodes),
        "omega": omega_str(res.omega),
    }
    return (EXIT_OK if res.value == want else EXIT_MISMATCH), data, [f"oracle={res.value} formula={want} {flag}"]


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="posbasis", description="Positive bases of polynomial spaces on compact sets.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    p = add("profile", cmd_profile, "holes, lambda, eccentric points")
    p.add_argument("set")
    p = add("dn", cmd_dn, "least maximal degree of an n-element positive basis")
    p.add_argument("set")
    p.add_argument("n", type=int)
    p = add("maxdim", cmd_maxdim, "largest dimension with a positive basis in degree <= m")
    p.add_argument("set")
    p.add_argument("m", type=int)
    p = add("tau", cmd_tau, "degree of the extremal polynomial of a 0/1 sequence")
    p.add_argument("omega")
    p = add("sigma", cmd_sigma, "max of tau over contractions")
    p.add_argument("omega")
    p = add("nodes", cmd_nodes, "optimal node system")
    p.add_argument("set")
    p.add_argument("n", type=int)
    p = add("basis", cmd_basis, "optimal positive basis as JSON")
    p.add_argument("set")
    p.add_argument("n", type=int)
    p = add("interval-basis", cmd_interval_basis, "maximal positive basis on [a, b]")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("m", type=int)
    p.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.STANDARD.value)
    p = add("lorentz", cmd_lorentz, "least degree of a positive Bernstein representation")
    p.add_argument("coeffs", help="lowest degree first, e.g. '2,0,1' or '[\"1/4\",0,1]'")
    p.add_argument("--cap", type=int, default=None)
    p = add("verify", cmd_verify, "check a family is a positive basis")
    p.add_argument("set")
    p.add_argument("basis", help="file, '-' for stdin, or inline JSON")

    op = sub.add_parser("oracle", help="brute-force cross-checks")
    osub = op.add_subparsers(dest="oracle", required=True, parser_class=_Parser)
    p = osub.add_parser("tau")
    p.add_argument("omega")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle_tau)
    p = osub.add_parser("dn")
    p.add_argument("set")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle_dn)
    return ap


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        code, data, lines = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except PosBasisError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN
    if args.json:
        print(json.dumps(data, indent=2), file=out)
    else:
        for line in lines:
            print(line, file=out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
