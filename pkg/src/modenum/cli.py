"""Command-line frontend: ``modenum <command> [options]``.

Exit status: 0 on success, 2 on usage errors, 3 when ``--verify`` finds a
mismatch, 4 on domain errors (including oracle size caps).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import core, numtheory as nt, qcomb, subset, sweeps, words
from .errors import DomainError, ModEnumError, ParseError
from .poly import Polynomial, class_sums, coeff_class, parse_poly, poly_rem, simplify, to_json, x_pow_minus_one

EXIT_USAGE = 2
EXIT_MISMATCH = 3
EXIT_DOMAIN = 4

#: Default cap on the number of objects an oracle may enumerate.
DEFAULT_MAX_BRUTE = 2**24


class Mismatch(Exception):
    pass


class UsageError(Exception):
    pass


def max_brute() -> int:
    raw = os.environ.get("MODENUM_MAX_BRUTE")
    if raw is None:
        return DEFAULT_MAX_BRUTE
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"MODENUM_MAX_BRUTE must be an integer, got {raw!r}") from None


def _check_brute(objects: int, what: str) -> None:
    cap = max_brute()
    if objects > cap:
        raise DomainError(f"oracle would enumerate {objects} {what}; MODENUM_MAX_BRUTE={cap}")


def fmt_rational(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


@dataclass
class CountTable:
    n: int
    values: list
    provenance: str = "closed-form"
    label: str = "count"
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.values) != self.n:
            raise ValueError("table length must equal n")
        if self.provenance not in ("closed-form", "oracle", "both-agree"):
            raise ValueError(f"bad provenance {self.provenance!r}")

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "values": [fmt_rational(v) for v in self.values],
            "provenance": self.provenance,
        }
        out.update(self.extra)
        return out

    def render(self) -> str:
        cells = [fmt_rational(v) for v in self.values]
        wi = max(1, len(str(self.n - 1)))
        wv = max(len(self.label), *(len(c) for c in cells))
        lines = [f"{'i':>{wi}}  {self.label:>{wv}}"]
        lines += [f"{i:>{wi}}  {c:>{wv}}" for i, c in enumerate(cells)]
        lines.append(f"provenance: {self.provenance}")
        return "\n".join(lines)


def _agree(table: CountTable, oracle: Sequence, what: str) -> CountTable:
    if [Fraction(v) for v in table.values] != [Fraction(v) for v in oracle]:
        raise Mismatch(
            f"{what}: closed form {[fmt_rational(v) for v in table.values]} "
            f"!= oracle {[fmt_rational(v) for v in oracle]}"
        )
    table.provenance = "both-agree"
    return table


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _emit_poly(args, p: Polynomial, **extra) -> None:
    payload = {"poly": to_json(p), "text": str(p)}
    payload.update(extra)
    _emit(args, str(p), payload)


def _emit_table(args, table: CountTable, i: int | None) -> None:
    if i is None:
        _emit(args, table.render(), table.to_json())
        return
    value = table.values[i % table.n]
    payload = table.to_json()
    payload.update({"i": i, "value": fmt_rational(value)})
    text = fmt_rational(value)
    if table.provenance != "closed-form":
        text += f"  [{table.provenance}]"
    _emit(args, text, payload)


def _poly_arg(text: str) -> Polynomial:
    try:
        return parse_poly(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


# -- commands --------------------------------------------------------------


def cmd_simplify(args) -> None:
    p = simplify(args.poly, args.n)
    if args.verify:
        if p != poly_rem(args.poly, x_pow_minus_one(args.n)):
            raise Mismatch("fold disagrees with division by x^n - 1")
        if p != core.simplify_from_residues(core.ResidueSystem.trivial(args.poly, args.n)):
            raise Mismatch("fold disagrees with reconstruction from cyclotomic residues")
    _emit_poly(args, p, provenance="both-agree" if args.verify else "closed-form")


def cmd_cyclotomic(args) -> None:
    p = nt.cyclotomic(args.n)
    if args.verify:
        prod = Polynomial((1,))
        for d in nt.divisors(args.n):
            prod = prod * nt.cyclotomic(d)
        if prod != x_pow_minus_one(args.n) or p.degree != nt.euler_phi(args.n):
            raise Mismatch("cyclotomic product identity fails")
    _emit_poly(args, p)


def cmd_ramanujan(args) -> None:
    v = nt.ramanujan(args.n, args.l)
    if args.verify and v != nt.ramanujan_holder(args.n, args.l):
        raise Mismatch("Moebius sum and Holder form disagree")
    _emit(args, str(v), {"n": args.n, "l": args.l, "value": str(v)})


def cmd_invariant(args) -> None:
    a, n = args.poly, args.n
    if args.other is not None:
        same = core.invariant_equal(a, args.other, n)
        if args.verify and same != (not poly_rem(a - args.other, nt.cyclotomic(n))):
            raise Mismatch("invariant disagrees with remainder mod Phi_n")
        _emit(args, "equal" if same else "different", {"n": n, "equal": same})
        return
    rep = core.g_poly(a, n)
    if args.verify and not core.check_canonical(a, rep, n):
        raise Mismatch("representative fails its congruence checks")
    g = [core.g_coeff(a, n, i) for i in range(n)]
    if args.json:
        _emit_poly(args, rep, n=n, g=[fmt_rational(v) for v in g])
    else:
        print(rep)


def _parse_residue(text: str) -> tuple[int, Polynomial]:
    d, sep, poly = text.partition(":")
    if not sep:
        d, sep, poly = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected D:POLY, got {text!r}")
    try:
        return int(d), parse_poly(poly)
    except (ValueError, ParseError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_crt(args) -> None:
    n = args.n
    divs = nt.divisors(n)
    targets = {d: Polynomial() for d in divs}
    for d, p in args.residue or []:
        if d not in targets:
            raise UsageError(f"{d} does not divide {n}")
        targets[d] = p
    a = core.crt_combine(targets, n)
    if args.verify:
        if a != core.simplify_from_residues(core.ResidueSystem(n, targets)):
            raise Mismatch("sweep construction disagrees with the Ramanujan-sum formula")
        for d, t in targets.items():
            if poly_rem(a - t, nt.cyclotomic(d)):
                raise Mismatch(f"result is not congruent to the target mod Phi_{d}")
    _emit_poly(args, a, provenance="both-agree" if args.verify else "closed-form")


def cmd_qmultinomial(args) -> None:
    j, ks = args.j, args.k
    if args.n is None:
        _emit_poly(args, qcomb.q_multinomial(j, ks))
        return
    n = args.n
    if args.residue:
        r = qcomb.q_multinomial_residue(j, ks, n)
        if args.verify and poly_rem(qcomb.q_multinomial(j, ks) - r, nt.cyclotomic(n)):
            raise Mismatch("residue is not congruent mod Phi_n")
        _emit_poly(args, r)
        return
    table = CountTable(n, [qcomb.q_multinomial_class(j, ks, n, i) for i in range(n)])
    if args.verify:
        _agree(table, class_sums(qcomb.q_multinomial(j, ks), n), "q-multinomial")
    _emit_table(args, table, args.i)


def cmd_qcatalan(args) -> None:
    j = args.j
    if args.n is None:
        c = qcomb.q_catalan(j)
        if args.verify:
            _check_brute(qcomb.catalan_number(j), "Dyck words")
            if c != words.enumerate_major("dyck", j, j):
                raise Mismatch("quotient formula disagrees with Dyck enumeration")
        _emit_poly(args, c)
        return
    r = qcomb.q_catalan_residue(j, args.n)
    if args.verify and poly_rem(qcomb.q_catalan(j) - r, nt.cyclotomic(args.n)):
        raise Mismatch("residue is not congruent mod Phi_n")
    _emit_poly(args, r)


def cmd_catalan(args) -> None:
    j, n = args.j, args.n
    table = CountTable(n, qcomb.catalan_major_table(j, n))
    if args.verify:
        _check_brute(qcomb.catalan_number(j), "Dyck words")
        _agree(table, class_sums(words.enumerate_major("dyck", j, j), n), "q-Catalan")
    _emit_table(args, table, args.i)


def cmd_subsetsum(args) -> None:
    j, n = args.j, args.n
    if n > j:
        if args.no_fallback:
            raise DomainError(f"closed form needs n <= j, got n={n}, j={j}")
        poly = subset.subset_sum_poly(j)
        table = CountTable(n, [coeff_class(poly, n, i) for i in range(n)], provenance="oracle")
    else:
        table = CountTable(n, subset.subset_sum_table(n, j))
    if args.verify:
        _check_brute(2**j, "subsets")
        brute = subset.subset_sum_brute(n, j, max_j=j)
        if table.provenance == "oracle":
            if [Fraction(v) for v in table.values] != brute:
                raise Mismatch("expansion disagrees with subset enumeration")
        else:
            _agree(table, brute, "subset sum")
    _emit_table(args, table, args.i)


def _word_report(w: str, rigid: int | None) -> dict:
    out = {
        "word": w,
        "length": len(w),
        "flat": words.is_flat(w),
        "dyck": words.is_dyck(w),
        "major_index": words.major_index(w),
        "descent_count": words.descent_count(w),
    }
    if w:
        out["gamma"] = words.gamma(w)
    if out["flat"] and not out["dyck"]:
        out["delta"] = words.delta(w)
        out["delta_inv"] = words.delta_inv(w)
    if rigid is not None:
        if len(w) % rigid:
            out["rigid"] = None
            out["straightened"] = None
        else:
            out["rigid"] = words.is_d_rigid(w, rigid)
            out["straightened"] = words.is_d_straightened(w, rigid)
    return out


def cmd_dyck(args) -> None:
    if args.classes is not None:
        counts = {n: words.delta_class_count(n) for n in range(1, args.classes + 1)}
        text = "\n".join(f"{n:>3}  {c}" for n, c in counts.items())
        _emit(args, text, {"delta_classes": {str(n): c for n, c in counts.items()}})
        return
    if args.word is None:
        raise UsageError("dyck needs a WORD or --classes N")
    try:
        w = words.as_word(args.word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = _word_report(w, args.rigid)
    if args.orbit:
        orbit = words.delta_orbit(w)
        n = len(w)
        majors = [words.major_index(u) for u in orbit]
        if args.verify:
            if words.delta(orbit[-1]) != w:
                raise Mismatch(f"delta^{n}(w) != w")
            if w.count("1") >= 2:
                steps = {(majors[(k + 1) % n] - majors[k]) % n for k in range(n - 1)}
                steps.add((words.major_index(w) - majors[-1]) % n)
                if len(steps) != 1 or 0 in steps:
                    raise Mismatch(f"major index steps along the orbit: {sorted(steps)}")
        rep["orbit"] = orbit
        rep["orbit_major_index"] = majors
        rep["period"] = words.delta_period(w)
    if args.json:
        print(json.dumps(rep, sort_keys=True))
        return
    width = max(len(k) for k in rep)
    for k, v in rep.items():
        if k == "orbit":
            v = " ".join(v)
        elif k == "orbit_major_index":
            v = " ".join(map(str, v))
        print(f"{k:<{width}}  {v}")


def cmd_sweep(args) -> None:
    results = []
    failed = False
    for name, ok, detail in sweeps.run(args.only, seed=args.seed, scale=args.scale):
        results.append({"check": name, "ok": ok, "detail": detail})
        failed |= not ok
        if not args.json:
            print(f"{'PASS' if ok else 'FAIL'}  {name:<16} {detail}", flush=True)
    if args.json:
        print(json.dumps({"seed": args.seed, "scale": args.scale, "results": results}))
    if failed:
        raise Mismatch("sweep failed")


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--verify", action="store_true", help="cross-check against a brute-force oracle"
    )

    parser = argparse.ArgumentParser(
        prog="modenum", description="Exact modular enumeration via cyclotomic residues."
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("simplify", parents=[common], help="remainder mod x^n - 1")
    p.add_argument("poly", type=_poly_arg)
    p.add_argument("-n", type=_positive, required=True)
    p.set_defaults(func=cmd_simplify)

    p = sub.add_parser("cyclotomic", parents=[common], help="n-th cyclotomic polynomial")
    p.add_argument("n", type=_positive)
    p.set_defaults(func=cmd_cyclotomic)

    p = sub.add_parser("ramanujan", parents=[common], help="Ramanujan sum c_n(l)")
    p.add_argument("n", type=_positive)
    p.add_argument("l", type=int)
    p.set_defaults(func=cmd_ramanujan)

    p = sub.add_parser(
        "grep-invariant", parents=[common], help="canonical representative mod Phi_n"
    )
    p.add_argument("poly", type=_poly_arg)
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--other", type=_poly_arg, help="compare with this polynomial mod Phi_n")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("crt", parents=[common], help="combine residues mod Phi_d, d | n")
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument(
        "-r", "--residue", type=_parse_residue, action="append",
        metavar="D:POLY", help="target residue mod Phi_D (missing divisors default to 0)",
    )
    p.set_defaults(func=cmd_crt)

    p = sub.add_parser("qmultinomial", parents=[common], help="q-multinomial coefficients")
    p.add_argument("-j", type=_nonneg, required=True)
    p.add_argument("-k", type=_nonneg, nargs="+", required=True)
    p.add_argument("-n", type=_positive)
    p.add_argument("-i", type=int)
    p.add_argument("--residue", action="store_true", help="print the residue mod Phi_n")
    p.set_defaults(func=cmd_qmultinomial)

    p = sub.add_parser("qcatalan", parents=[common], help="q-Catalan polynomial or residue")
    p.add_argument("-j", type=_nonneg, required=True)
    p.add_argument("-n", type=int, help="residue mod Phi_n (n >= 2)")
    p.set_defaults(func=cmd_qcatalan)

    p = sub.add_parser("catalan", parents=[common], help="Dyck words by major index mod n")
    p.add_argument("-j", type=_nonneg, required=True)
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("-i", type=int)
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("subsetsum", parents=[common], help="subsets of {1..j} by sum mod n")
    p.add_argument("-j", type=_nonneg, required=True)
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("-i", type=int)
    p.add_argument(
        "--no-fallback", action="store_true",
        help="fail instead of expanding N(j) when n > j",
    )
    p.set_defaults(func=cmd_subsetsum)

    p = sub.add_parser("dyck", parents=[common], help="word statistics, delta orbits, rigidity")
    p.add_argument("word", nargs="?")
    p.add_argument("--orbit", action="store_true", help="list the delta orbit")
    p.add_argument("--rigid", type=int, metavar="D", help="test D-rigidity")
    p.add_argument("--classes", type=_positive, metavar="N",
                   help="count delta-orbits for lengths 1..N")
    p.set_defaults(func=cmd_dyck)

    p = sub.add_parser("sweep", parents=[common], help="run the property sweeps")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scale", type=float, default=1.0, help="shrink ranges, 0 < scale <= 1")
    p.add_argument("--only", nargs="+", choices=sorted(sweeps.CHECKS), metavar="CHECK")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"modenum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Mismatch as exc:
        print(f"modenum: oracle mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ModEnumError, ValueError) as exc:
        print(f"modenum: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return 0


if __name__ == "__main__":
    sys.exit(main())
