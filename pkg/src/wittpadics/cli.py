"""Command-line front end.

Exit codes: 0 on success, 1 when the computation reports a domain failure
(for example the requested root does not exist), 2 on usage errors.
Precision resolves flag > WITTPADICS_PRECISION env var > config file > 8.
"""

import argparse
import json
import os
import sys
from pathlib import Path

from .analytic import ExactExponent, pexp, plog, polar, ppow
from .errors import LengthLimit, NotPrime, PadicError
from .padic import PAdicInt, PAdicNumber, teichmuller
from .primes import check_prime
from .roots import (
    RootReason,
    fermat_quotient,
    flt_local_witness,
    general_root,
    sqrt_2adic,
    wieferich_search,
)
from .witt import padic_to_witt

DEFAULT_PRECISION = 8
ENV_PRECISION = "WITTPADICS_PRECISION"
DEFAULT_CONFIG = "~/.wittpadics.conf"

# JSON integers above this are emitted as decimal strings.
_JSON_INT_LIMIT = 2**53


class UsageError(Exception):
    pass


def load_config(path: Path) -> dict[str, str]:
    out: dict[str, str] = {}
    try:
        text = path.read_text()
    except OSError:
        return out
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#") or "=" not in line:
            continue
        key, _, value = line.partition("=")
        out[key.strip()] = value.strip()
    return out


def _encode_int(n: int):
    return n if abs(n) < _JSON_INT_LIMIT else str(n)


def _padic_int_json(x: PAdicInt) -> dict:
    return {
        "p": x.p,
        "precision": x.precision,
        "residue": _encode_int(x.residue),
        "modulus": _encode_int(x.modulus),
    }


def _padic_number_json(x: PAdicNumber) -> dict:
    if x.is_zero:
        return {"p": x.p, "zero": True}
    return {
        "p": x.p,
        "zero": False,
        "valuation": x.valuation,
        "unit": _padic_int_json(x.unit),
    }


def render_padic_int(x: PAdicInt) -> str:
    signed = x.lift_signed()
    if signed != x.residue:
        return f"{x.residue} ≡ {signed} (mod {x.p}^{x.precision})"
    return f"{x.residue} (mod {x.p}^{x.precision})"


def render_padic_number(x: PAdicNumber) -> str:
    if x.is_zero:
        return "0"
    if x.valuation == 0:
        return render_padic_int(x.unit)
    return f"{x.p}^{x.valuation} * {render_padic_int(x.unit)}"


def parse_integer(text: str, what: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise UsageError(f"{what} must be a decimal integer, got {text!r}") from None


def parse_value(text: str, p: int, precision: int) -> PAdicNumber:
    """Accept an integer or a rational written m/n with p not dividing n."""
    if "/" in text:
        num_text, _, den_text = text.partition("/")
        m = parse_integer(num_text, "numerator")
        n = parse_integer(den_text, "denominator")
        if n == 0:
            raise UsageError("denominator must be nonzero")
        if n % p == 0:
            raise UsageError(f"denominator {n} must not be divisible by p = {p}")
        return PAdicNumber.from_rational(m, n, p, precision)
    return PAdicNumber.from_integer(parse_integer(text, "value"), p, precision)


def parse_exponent(text: str, p: int) -> ExactExponent:
    """Accept u or u/d where d is a power of p."""
    if "/" not in text:
        return ExactExponent(parse_integer(text, "exponent"), 0)
    num_text, _, den_text = text.partition("/")
    u = parse_integer(num_text, "exponent numerator")
    d = parse_integer(den_text, "exponent denominator")
    if d < 1:
        raise UsageError(f"exponent denominator must be positive, got {d}")
    k = 0
    while d % p == 0:
        d //= p
        k += 1
    if d != 1:
        raise UsageError(f"exponent denominator must be a power of p = {p}")
    return ExactExponent(u, k).normalized(p)


def _unit_padic_int(value: PAdicNumber, precision: int) -> PAdicInt:
    """Residue form of a value with non-negative valuation, at the CLI precision."""
    if value.is_zero:
        return PAdicInt(value.p, precision, 0)
    if value.valuation < 0:
        raise UsageError("value must be a p-adic integer (non-negative valuation)")
    x = value.to_padic_int()
    return x.with_precision(min(precision, x.precision))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wittpadics",
        description="Exact p-adic arithmetic on truncated Witt vectors.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=False, help="prime p")
    common.add_argument("--precision", type=int, default=None, help="digits of precision (default 8)")
    common.add_argument("--output", choices=("human", "json"), default=None, help="output format")
    common.add_argument("--config", default=None, help=f"config file (default {DEFAULT_CONFIG})")

    sub = parser.add_subparsers(dest="command", required=True)

    p_convert = sub.add_parser("convert", parents=[common], help="convert between residue and Witt form")
    p_convert.add_argument("--value", required=True, help="integer or rational m/n")
    p_convert.add_argument("--to", choices=("witt", "padic"), default="witt")

    p_teich = sub.add_parser("teichmuller", parents=[common], help="multiplicative digit lift")
    p_teich.add_argument("--value", required=True)

    p_log = sub.add_parser("log", parents=[common], help="truncated p-adic logarithm")
    p_log.add_argument("--value", required=True)

    p_exp = sub.add_parser("exp", parents=[common], help="truncated p-adic exponential")
    p_exp.add_argument("--value", required=True)

    p_pow = sub.add_parser("pow", parents=[common], help="power with integer or u/p^k exponent")
    p_pow.add_argument("--value", required=True)
    p_pow.add_argument("--exponent", required=True)

    p_polar = sub.add_parser("polar", parents=[common], help="module/argument decomposition")
    p_polar.add_argument("--value", required=True)

    p_root = sub.add_parser("root", parents=[common], help="all m-th roots, or a failure reason")
    p_root.add_argument("--value", required=True)
    p_root.add_argument("--degree", type=int, required=True)

    p_fq = sub.add_parser("fermat-quotient", parents=[common], help="(x^(p-1) - 1)/p")
    p_fq.add_argument("--value", required=True)

    p_wief = sub.add_parser("wieferich", parents=[common], help="primes with base^(p-1) = 1 mod p^2")
    p_wief.add_argument("--base", type=int, required=True)
    p_wief.add_argument("--limit", type=int, required=True)

    sub.add_parser("flt-witness", parents=[common], help="local Fermat-equation witness")

    return parser


def _resolve_precision(args, config: dict[str, str]) -> int:
    if args.precision is not None:
        value = args.precision
    elif os.environ.get(ENV_PRECISION):
        try:
            value = int(os.environ[ENV_PRECISION])
        except ValueError:
            raise UsageError(f"{ENV_PRECISION} must be an integer") from None
    elif "precision" in config:
        try:
            value = int(config["precision"])
        except ValueError:
            raise UsageError("config key 'precision' must be an integer") from None
    else:
        value = DEFAULT_PRECISION
    if value < 1:
        raise UsageError(f"precision must be >= 1, got {value}")
    return value


def _resolve_output(args, config: dict[str, str]) -> str:
    if args.output is not None:
        return args.output
    mode = config.get("output", "human")
    if mode not in ("human", "json"):
        raise UsageError("config key 'output' must be 'human' or 'json'")
    return mode


def _require_p(args) -> int:
    if args.p is None:
        raise UsageError("--p is required for this command")
    try:
        check_prime(args.p)
    except NotPrime as exc:
        raise UsageError(str(exc)) from None
    return args.p


def _root_failure_reason(report, value: PAdicNumber, value_text: str, degree: int) -> str:
    p = value.p
    if report.reason is RootReason.VALUATION_NOT_DIVISIBLE:
        return f"valuation {value.valuation} is not divisible by {degree}"
    if report.reason is RootReason.WITT_DIGIT_NONZERO:
        msg = f"Witt digit {report.digit_index} nonzero"
        if report.digit_index == 1 and not value.is_zero and value.valuation == 0:
            q = fermat_quotient(value)
            msg += f"; q_1({value_text}) ≡ {q.residue % p} (mod {p})"
        return msg
    if report.reason is RootReason.NOT_KTH_RESIDUE:
        return f"{value_text} is not a {degree}-th power residue mod {p}"
    if report.reason is RootReason.MOD8_FAILURE:
        return "unit is not 1 mod 8"
    return report.reason.value


def _dispatch(args, precision: int):
    """Run one command; returns (json_result, human_lines) or raises."""
    command = args.command

    if command == "wieferich":
        hits = wieferich_search(args.base, args.limit)
        return hits, [" ".join(str(p) for p in hits) if hits else "(none)"]

    if command == "flt-witness":
        p = _require_p(args)
        witness = flt_local_witness(p, precision)
        if witness is None:
            return None, [f"no witness for p = {p}"]
        result = {
            "p": witness.p,
            "x": witness.x,
            "y": witness.y,
            "sum": _encode_int(witness.sum),
            "root": _padic_int_json(witness.root),
        }
        lines = [
            f"x = {witness.x}, y = {witness.y}, sum = {witness.sum}",
            f"root: {render_padic_int(witness.root)}",
        ]
        return result, lines

    p = _require_p(args)

    if command == "convert":
        value = parse_value(args.value, p, precision)
        x = _unit_padic_int(value, precision)
        if args.to == "witt":
            w = padic_to_witt(x)
            return {"witt": w.to_json_dict()}, [str(w)]
        return _padic_int_json(x), [render_padic_int(x)]

    if command == "teichmuller":
        a = PAdicInt(p, precision, parse_integer(args.value, "value"))
        lift = teichmuller(a)
        return _padic_int_json(lift), [render_padic_int(lift)]

    if command == "log":
        x = PAdicInt(p, precision, parse_integer(args.value, "value"))
        theta = plog(x)
        return _padic_int_json(theta), [render_padic_int(theta)]

    if command == "exp":
        theta = PAdicInt(p, precision, parse_integer(args.value, "value"))
        u = pexp(theta)
        return _padic_int_json(u), [render_padic_int(u)]

    if command == "pow":
        value = parse_value(args.value, p, precision)
        exponent = parse_exponent(args.exponent, p)
        result = ppow(value, exponent)
        return _padic_number_json(result), [render_padic_number(result)]

    if command == "polar":
        value = parse_value(args.value, p, precision)
        form = polar(value)
        result = {
            "valuation": form.valuation,
            "teich_digit": form.teich_digit,
            "argument": _padic_int_json(form.argument),
        }
        lines = [
            f"valuation: {form.valuation}",
            f"teichmuller digit: {form.teich_digit}",
            f"argument: {render_padic_int(form.argument)}",
        ]
        return result, lines

    if command == "fermat-quotient":
        value = parse_value(args.value, p, precision)
        q = fermat_quotient(value)
        return _padic_int_json(q), [render_padic_int(q)]

    if command == "root":
        value = parse_value(args.value, p, precision)
        if p == 2:
            if args.degree != 2:
                raise UsageError("for p = 2 only --degree 2 is supported")
            report = sqrt_2adic(value)
        else:
            report = general_root(value, args.degree)
        if not report.exists:
            reason = _root_failure_reason(report, value, args.value, args.degree)
            raise _RootFailure(reason)
        result = {
            "degree": args.degree,
            "output_precision": report.output_precision,
            "roots": [_padic_number_json(r) for r in report.roots],
        }
        lines = [f"root: {render_padic_number(r)}" for r in report.roots]
        return result, lines

    raise UsageError(f"unknown command {command!r}")


class _RootFailure(Exception):
    pass


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    config_path = Path(args.config).expanduser() if args.config else Path(DEFAULT_CONFIG).expanduser()
    config = load_config(config_path)

    try:
        precision = _resolve_precision(args, config)
        output = _resolve_output(args, config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        result, lines = _dispatch(args, precision)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotPrime, LengthLimit) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _RootFailure as exc:
        if output == "json":
            print(json.dumps({"ok": False, "reason": str(exc), "precision": precision}, sort_keys=True))
        else:
            print(f"no root: {exc}", file=sys.stderr)
        return 1
    except PadicError as exc:
        if output == "json":
            print(json.dumps({"ok": False, "reason": str(exc), "precision": precision}, sort_keys=True))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1

    if output == "json":
        print(json.dumps({"ok": True, "result": result, "precision": precision}, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return 0


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
