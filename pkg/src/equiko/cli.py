"""Command-line interface.

Commands cover the built-in computations (sl3, gl3, hecke, psl2zp, sl2zp,
cstar), closed forms for arbitrary signatures (fuchsian), user-supplied
Gamma-CW files (complex), and the full regression sweep (verify).  Output is
deterministic: identical invocations produce identical bytes.

Exit codes: 0 success; 1 domain error (composite prime, failed hypothesis,
invalid lift); 2 parse error (malformed signature or file); 3 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import arithmetic_k, bredon, cwfile, fuchsian, ko_assembly
from . import verify as verify_mod

BOTT_NOTE = "remaining groups by Bott periodicity"


def _print_doc(args, command: str, inputs: dict, groups: dict,
               text_lines: list[str], ambiguous_degrees=(), extra=None) -> int:
    if args.format == "json":
        doc = {
            "command": command,
            "inputs": inputs,
            "groups": groups,
            "extension_ambiguous": bool(ambiguous_degrees),
        }
        if ambiguous_degrees:
            doc["ambiguous_degrees"] = sorted(ambiguous_degrees)
        if extra:
            doc.update(extra)
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(text_lines))
    return 0


def _k_payload(k0, k1) -> tuple[dict, list[str]]:
    groups = {"K0": str(k0), "K1": str(k1)}
    return groups, [f"K0 = {k0}, K1 = {k1}", BOTT_NOTE]


def _ko_payload(gg) -> tuple[dict, list[str]]:
    groups = {f"KO{n}": str(gg.entry(n)) for n in range(8)}
    lines = [
        f"KO{n} = {gg.entry(n)}" + (" (up to extension)" if gg.is_ambiguous(n) else "")
        for n in range(8)
    ]
    return groups, lines + [BOTT_NOTE]


# -- commands ----------------------------------------------------------------


def _cmd_sl3(args) -> int:
    datum = bredon.sl3_datum()
    h = bredon.bredon_homology(datum)
    if args.ko:
        ko_assembly.ensure_ko_hypothesis(datum.stabilisers())
        gg = ko_assembly.ko_from_bredon(h)
        groups, lines = _ko_payload(gg)
        return _print_doc(args, "sl3", {}, groups, lines)
    k0, k1 = ko_assembly.collapse_complex(h)
    groups, lines = _k_payload(k0, k1)
    return _print_doc(args, "sl3", {}, groups, lines)


def _cmd_gl3(args) -> int:
    from .groups import GroupId

    datum = bredon.sl3_datum()
    h = ko_assembly.kunneth_times_z2(bredon.bredon_homology(datum))
    if args.ko:
        ko_assembly.ensure_ko_hypothesis(
            [GroupId.times_z2(g) for g in datum.stabilisers()]
        )
        gg = ko_assembly.ko_from_bredon(h)
        groups, lines = _ko_payload(gg)
        return _print_doc(args, "gl3", {}, groups, lines)
    k0, k1 = ko_assembly.collapse_complex(h)
    groups, lines = _k_payload(k0, k1)
    return _print_doc(args, "gl3", {}, groups, lines)


def _cmd_fuchsian(args) -> int:
    try:
        sig = fuchsian.parse_signature(args.signature)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    inputs = {"signature": str(sig), "lift": bool(args.lift)}
    if args.lift:
        datum = bredon.lifted_fuchsian_datum(sig)
        k0, k1 = ko_assembly.collapse_complex(bredon.bredon_homology(datum))
    else:
        k0, k1 = fuchsian.equivariant_k(sig)
    groups, lines = _k_payload(k0, k1)
    return _print_doc(args, "fuchsian", inputs, groups, lines)


def _cmd_hecke(args) -> int:
    sig = fuchsian.hecke_signature(args.prime)
    h0, h1 = fuchsian.hecke_bredon(args.prime)
    groups = {"H0": str(h0), "H1": str(h1)}
    lines = [f"signature = {sig}", f"H0 = {h0}", f"H1 = {h1}"]
    return _print_doc(
        args, "hecke", {"p": args.prime}, groups, lines,
        extra={"signature": str(sig)},
    )


def _cmd_psl2zp(args) -> int:
    k0, k1 = arithmetic_k.psl_zp_k(args.prime)
    groups, lines = _k_payload(k0, k1)
    return _print_doc(args, "psl2zp", {"p": args.prime}, groups, lines)


def _cmd_sl2zp(args) -> int:
    k0, k1 = arithmetic_k.sl_zp_k(args.prime)
    groups, lines = _k_payload(k0, k1)
    return _print_doc(args, "sl2zp", {"p": args.prime}, groups, lines)


def _cmd_cstar(args) -> int:
    if args.ko:
        gg = arithmetic_k.cstar_ko_p11(args.prime)
        groups, lines = _ko_payload(gg)
        return _print_doc(
            args, "cstar", {"p": args.prime, "ko": True}, groups, lines,
            ambiguous_degrees=gg.extension_ambiguous,
        )
    k0, k1 = arithmetic_k.cstar_k_p11(args.prime)
    groups, lines = _k_payload(k0, k1)
    return _print_doc(args, "cstar", {"p": args.prime, "ko": False}, groups, lines)


def _cmd_complex(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    datum = cwfile.parse_cw(text)
    if args.emit:
        print(cwfile.format_cw(datum), end="")
        return 0
    h = bredon.bredon_homology(datum)
    groups = {f"H{n}": str(g) for n, g in enumerate(h)}
    lines = [f"name = {datum.name}"]
    lines += [f"H{n} = {g}" for n, g in enumerate(h)]
    collapsible = all(g.is_zero() for g in h[3:])
    if collapsible:
        k0, k1 = ko_assembly.collapse_complex(h)
        groups["K0"], groups["K1"] = str(k0), str(k1)
        k_groups, k_lines = _k_payload(k0, k1)
        lines += k_lines
    if args.ko:
        ko_assembly.ensure_ko_hypothesis(datum.stabilisers())
        gg = ko_assembly.ko_from_bredon(h)
        ko_groups, ko_lines = _ko_payload(gg)
        groups.update(ko_groups)
        lines += ko_lines
    return _print_doc(
        args, "complex", {"file": args.file, "ko": bool(args.ko)}, groups, lines,
        extra={"name": datum.name},
    )


_PRIMES_RE = re.compile(r"^(\d+)\.\.(\d+)$")


def _cmd_verify(args) -> int:
    m = _PRIMES_RE.match(args.primes)
    if not m:
        print(f"error: --primes expects A..B, got {args.primes!r}", file=sys.stderr)
        return 2
    lo, hi = int(m.group(1)), int(m.group(2))
    results = verify_mod.verify_all(lo, hi)
    passed = all(r.passed for r in results)
    if args.format == "json":
        doc = {
            "command": "verify",
            "inputs": {"primes": args.primes},
            "checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail}
                for r in results
            ],
            "passed": passed,
        }
        print(json.dumps(doc, indent=2))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}")
        n_ok = sum(1 for r in results if r.passed)
        print(f"{n_ok}/{len(results)} checks passed")
    return 0 if passed else 3


# -- parser ------------------------------------------------------------------


def _add_format(sub) -> None:
    sub.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="output format (default: text)",
    )


def _add_prime(sub) -> None:
    sub.add_argument("-p", "--prime", type=int, required=True, help="a prime number")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equiko",
        description=(
            "Exact Bredon homology and equivariant K/KO-homology of "
            "classifying spaces for proper actions."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sl3", help="equivariant K or KO groups for SL_3(Z)")
    p.add_argument("--ko", action="store_true", help="compute KO instead of K")
    _add_format(p)
    p.set_defaults(func=_cmd_sl3)

    p = sub.add_parser("gl3", help="equivariant K or KO groups for GL_3(Z)")
    p.add_argument("--ko", action="store_true", help="compute KO instead of K")
    _add_format(p)
    p.set_defaults(func=_cmd_gl3)

    p = sub.add_parser("fuchsian", help="equivariant K for a Fuchsian signature")
    p.add_argument(
        "--signature", required=True, metavar="[g,s;m1,...]",
        help='signature, e.g. "[0,0;2,3,7]" or "[1,2;]"',
    )
    p.add_argument(
        "--lift", action="store_true",
        help="use the central Z/2 extension (s >= 1, periods in {2,3})",
    )
    _add_format(p)
    p.set_defaults(func=_cmd_fuchsian)

    p = sub.add_parser("hecke", help="signature and Bredon homology of Gamma_0(p)")
    _add_prime(p)
    _add_format(p)
    p.set_defaults(func=_cmd_hecke)

    p = sub.add_parser("psl2zp", help="equivariant K for PSL_2(Z[1/p])")
    _add_prime(p)
    _add_format(p)
    p.set_defaults(func=_cmd_psl2zp)

    p = sub.add_parser("sl2zp", help="equivariant K for SL_2(Z[1/p])")
    _add_prime(p)
    _add_format(p)
    p.set_defaults(func=_cmd_sl2zp)

    p = sub.add_parser(
        "cstar", help="K or KO of the reduced C*-algebra (p = 11 mod 12)"
    )
    _add_prime(p)
    p.add_argument("--ko", action="store_true", help="compute KO instead of K")
    _add_format(p)
    p.set_defaults(func=_cmd_cstar)

    p = sub.add_parser("complex", help="Bredon homology of a Gamma-CW file")
    p.add_argument("--file", required=True, help="path to a Gamma-CW file")
    p.add_argument("--ko", action="store_true", help="also compute KO (if valid)")
    p.add_argument(
        "--emit", action="store_true",
        help="re-serialize the parsed file and exit (round-trip check)",
    )
    _add_format(p)
    p.set_defaults(func=_cmd_complex)

    p = sub.add_parser("verify", help="recompute and check every published value")
    p.add_argument(
        "--primes", default="2..200", metavar="A..B",
        help="prime range for the sweeps (default 2..200)",
    )
    _add_format(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except cwfile.CWFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
