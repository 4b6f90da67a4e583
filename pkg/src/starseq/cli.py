"""Command-line surface.

Exit codes:
    0  success, all requested verifications passed
    1  a verification or cross-check failed
    2  usage error (argparse)
    3  domain error (bad number, non-prime seed entry, ...)
    4  resource limit (term size guard, factoring stall, mother ceiling)
    5  input/output error (unreadable b-file, failed fetch with no fixture)

Structured output (--format structured) prints a single JSON object per
command. Integers that can exceed 64 bits are encoded as decimal strings
so consumers never lose precision; prime powers are objects with "p",
"e" and "value" fields. The schema is stable and documented in README.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from . import analysis, embedding, mother, oeis, star_core, star_stream
from .config import CONFIG_ENV_VAR, Config
from .errors import MotherLimitError, StallError, TermSizeError
from .factoring import PrimePower, as_prime_power

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_LIMIT = 4
EXIT_IO = 5


def _fmt_pp(pp: PrimePower) -> str:
    return str(pp)


def _pp_obj(pp: PrimePower) -> dict:
    return {"p": str(pp.p), "e": pp.e, "value": str(pp.value)}


def _frac_obj(f: Fraction) -> dict:
    return {"numerator": str(f.numerator), "denominator": str(f.denominator)}


def parse_prime_power(text: str) -> PrimePower:
    """Accepts 'p^e' or a plain integer value like '8' (meaning 2^3)."""
    s = text.strip()
    if "^" in s:
        base, _, exp = s.partition("^")
        return as_prime_power(int(base) ** int(exp))
    return as_prime_power(int(s))


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "structured":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _config_from_args(args) -> Config:
    if getattr(args, "config", None):
        cfg = Config.from_file(args.config)
    else:
        cfg = Config.from_env()
    return cfg.override(
        trial_bound=getattr(args, "trial_bound", None),
        rho_rounds=getattr(args, "rho_rounds", None),
        rho_iterations=getattr(args, "rho_iterations", None),
        max_term_digits=getattr(args, "max_term_digits", None),
        suffix_depth=getattr(args, "suffix_depth", None),
        mother_source_ceiling=getattr(args, "mother_ceiling", None),
    )


# -- subcommand handlers -----------------------------------------------------


def cmd_gross(args) -> int:
    cfg = _config_from_args(args)
    terms = star_core.gross_prefix(args.x, args.terms, cfg.max_term_digits)
    _emit(
        args,
        {"command": "gross", "x": str(args.x), "terms": [str(t) for t in terms]},
        [" ".join(str(t) for t in terms)],
    )
    return EXIT_OK


def cmd_star(args) -> int:
    cfg = _config_from_args(args)
    stream = star_stream.StarStream(args.x, budget=cfg.budget(), mode=args.policy)
    items = stream.take(args.terms)
    lines = [" ".join(str(t) for t in items)]
    payload = {
        "command": "star",
        "x": str(args.x),
        "terms": [
            _pp_obj(t.pp) | {"gross_index": t.gross_index, "position": t.position}
            if isinstance(t, star_stream.StarTerm)
            else {
                "composite_cofactor": str(t.value),
                "gross_index": t.gross_index,
                "position": t.position,
            }
            for t in items
        ],
        "stalled": stream.stalled,
    }
    if stream.stalled:
        s = stream.stall
        payload["stall"] = {
            "gross_index": s.gross_index,
            "cofactor_digits": len(str(s.cofactor)),
        }
        print(
            f"note: factoring stalled at gross index {s.gross_index}; "
            f"{len(items)} of {args.terms} terms shown",
            file=sys.stderr,
        )
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_mother(args) -> int:
    cfg = _config_from_args(args)
    seq = mother.MotherSequence(cfg.mother_source_ceiling)
    terms = seq.prefix(args.count)
    _emit(
        args,
        {
            "command": "mother",
            "terms": [
                _pp_obj(t.value) | {"index": t.index, "source": str(t.source), "slot": t.slot}
                for t in terms
            ],
        },
        [" ".join(str(t) for t in terms)],
    )
    return EXIT_OK


def cmd_occurrences(args) -> int:
    cfg = _config_from_args(args)
    value = parse_prime_power(args.value)
    seq = mother.MotherSequence(cfg.mother_source_ceiling)
    hits = seq.occurrences(value, args.limit)
    _emit(
        args,
        {
            "command": "occurrences",
            "value": _pp_obj(value),
            "indices": hits,
        },
        [" ".join(str(i) for i in hits)],
    )
    return EXIT_OK


def cmd_embed(args) -> int:
    cfg = _config_from_args(args)
    eta = star_stream.star_prefix(args.eta_from, args.eta_terms, cfg.budget())
    if len(eta) < args.eta_terms:
        print(
            f"note: eta truncated to {len(eta)} terms by a factoring stall",
            file=sys.stderr,
        )
    seq = mother.MotherSequence(cfg.mother_source_ceiling)
    state = embedding.embed([t.pp for t in eta], args.steps, args.mode, seq)
    ok = embedding.verify_pfd(state) and embedding.verify_numeric(state)
    lines = [
        f"{s.step} {s.u} {s.v} {s.captured_index} {s.value}" for s in state.steps
    ]
    if state.diagnostic:
        lines.append(f"# {state.diagnostic}")
    lines.append(f"# pfd+numeric: {'ok' if ok else 'VIOLATED'}")
    payload = {
        "command": "embed",
        "mode": state.mode,
        "eta": [_pp_obj(pp) for pp in state.eta_terms],
        "captures": [
            {
                "step": s.step,
                "u": s.u,
                "v": s.v,
                "mother_index": s.captured_index,
                "value": _pp_obj(s.value),
            }
            for s in state.steps
        ],
        "verified": ok,
        "diagnostic": state.diagnostic,
    }
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def cmd_diverge(args) -> int:
    cfg = _config_from_args(args)
    report = analysis.divergence_report(args.x, args.depth, cfg.budget())
    lines = ["j  k  value  base  sum(1/value)  sum(1/base)"]
    for r in report.rows:
        lines.append(
            f"{r.j}  {r.gross_index}  {r.value}  {r.prime_base}  "
            f"{r.sum_values}  {r.sum_bases}"
        )
    if report.stalled_at is not None:
        lines.append(f"# stalled at gross index {report.stalled_at}")
    if report.estimate_n is not None:
        digits = len(str(report.estimate_n))
        lines.append(f"# largest processed term has {digits} digits")
    if report.mertens_estimate is not None:
        lines.append(f"# mertens estimate log log n + M = {report.mertens_estimate:.6f}")
    if report.cor_pi is not None:
        c = report.cor_pi
        lines.append(
            f"# prime-count readings: pi(floor(log log n)) = {c.pi_reading}, "
            f"ratio = {c.ratio_reading:.6f}"
            + (" (fragile at this scale)" if c.fragile else "")
        )
    payload = {
        "command": "diverge",
        "x": str(args.x),
        "depth": args.depth,
        "rows": [
            {
                "j": r.j,
                "gross_index": r.gross_index,
                "value": str(r.value),
                "prime_base": str(r.prime_base),
                "sum_values": _frac_obj(r.sum_values),
                "sum_bases": _frac_obj(r.sum_bases),
            }
            for r in report.rows
        ],
        "stalled_at": report.stalled_at,
        "estimate_n": str(report.estimate_n) if report.estimate_n else None,
        "mertens_estimate": report.mertens_estimate,
        "cor_pi": (
            {
                "loglog": report.cor_pi.n_loglog,
                "pi_reading": report.cor_pi.pi_reading,
                "ratio_reading": report.cor_pi.ratio_reading,
                "fragile": report.cor_pi.fragile,
            }
            if report.cor_pi
            else None
        ),
    }
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_extremes(args) -> int:
    cfg = _config_from_args(args)
    report = star_stream.extreme_sums(args.x, args.kmax, cfg.budget())
    lines = ["k  largest  smallest"]
    for row in report.rows:
        lines.append(f"{row.gross_index}  {row.largest}  {row.smallest}")
    lines.append(f"sum 1/largest = {report.sum_largest}")
    lines.append(f"sum 1/smallest = {report.sum_smallest}")
    if report.stalled_at is not None:
        lines.append(f"# stalled at gross index {report.stalled_at}")
    payload = {
        "command": "extremes",
        "x": str(args.x),
        "k_max": args.kmax,
        "rows": [
            {
                "gross_index": r.gross_index,
                "largest": _pp_obj(r.largest),
                "smallest": _pp_obj(r.smallest),
            }
            for r in report.rows
        ],
        "sum_largest": _frac_obj(report.sum_largest),
        "sum_smallest": _frac_obj(report.sum_smallest),
        "stalled_at": report.stalled_at,
    }
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_squarefree(args) -> int:
    cfg = _config_from_args(args)
    hits = star_stream.squarefree_scan(args.x, args.kmax, cfg.budget())
    lines = [f"{k}  {pp}" for k, pp in hits] or ["no repeated prime factors found"]
    payload = {
        "command": "squarefree",
        "x": str(args.x),
        "k_max": args.kmax,
        "hits": [{"gross_index": k} | _pp_obj(pp) for k, pp in hits],
    }
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_seed(args) -> int:
    primes = [int(tok) for tok in args.primes.split(",") if tok.strip()]
    value = star_core.euclid_seed(primes)
    _emit(
        args,
        {"command": "seed", "primes": [str(p) for p in primes], "value": str(value)},
        [str(value)],
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = _config_from_args(args)
    checks: list[tuple[str, bool]] = []
    if args.what == "recip":
        if args.x is None or args.n is None:
            print("verify recip requires --x and --n", file=sys.stderr)
            return EXIT_USAGE
        res = analysis.recip_check(args.x, args.n, cfg.max_term_digits)
        detail = f"1/{args.x} vs {res.rhs}"
        checks.append((f"recip x={args.x} n={args.n} ({detail})", res.equal))
    elif args.what == "lemma1":
        ok = all(
            star_core.gross_via_product(x, args.kmax + 1)
            == star_core.gross_prefix(x, args.kmax + 1)
            for x in range(1, args.xmax + 1)
        )
        checks.append((f"product recursion matches map iteration "
                       f"(x<={args.xmax}, k<={args.kmax})", ok))
    elif args.what == "coprime":
        from math import gcd

        ok = True
        for x in range(1, args.xmax + 1):
            terms = star_core.gross_prefix(x, args.kmax + 1)
            for i in range(len(terms)):
                for j in range(i + 1, len(terms)):
                    if gcd(terms[i], terms[j]) != 1:
                        ok = False
        checks.append((f"pairwise coprime gross terms (x<={args.xmax}, "
                       f"k<={args.kmax})", ok))
    elif args.what == "witness":
        ok = all(
            star_stream.verify_witness(x, args.kmax, cfg.budget())
            for x in range(1, args.xmax + 1)
        )
        checks.append((f"witness prime divides no term (x<={args.xmax}, "
                       f"k<={args.kmax})", ok))
    elif args.what == "odoni":
        report = star_stream.odoni_residue_check(args.kmax, cfg.budget())
        checks.append((f"residues mod 6 through k={args.kmax} "
                       f"({len(report.entries)} primes)", report.ok))
    else:
        print(f"unknown verification {args.what!r}", file=sys.stderr)
        return EXIT_USAGE
    all_ok = all(ok for _, ok in checks)
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in checks]
    _emit(
        args,
        {
            "command": "verify",
            "what": args.what,
            "checks": [{"name": n, "passed": ok} for n, ok in checks],
            "passed": all_ok,
        },
        lines,
    )
    return EXIT_OK if all_ok else EXIT_VERIFY_FAIL


def cmd_oeis(args) -> int:
    cfg = _config_from_args(args)
    bfile = None
    source = "fixture"
    if args.bfile:
        bfile = oeis.load_bfile(args.bfile, args.id)
        source = "file"
    elif args.fetch:
        try:
            bfile = oeis.fetch_bfile(args.id)
            source = "fetch"
        except Exception as exc:  # noqa: BLE001 - fetch is best-effort by design
            print(f"note: fetch failed ({exc}); using bundled fixture",
                  file=sys.stderr)
    include_seed = None
    if args.with_seed:
        include_seed = True
    elif args.no_seed:
        include_seed = False
    report = oeis.oeis_check(
        args.id,
        bfile=bfile,
        x=args.x,
        include_seed=include_seed,
        source=source,
        max_digits=cfg.max_term_digits,
    )
    lines = [
        f"{report.sequence_id} vs chain of {report.x}"
        f"{' (seed included)' if report.include_seed else ''}: "
        f"{report.overlap} overlapping terms"
    ]
    if report.first_mismatch:
        pos, expected, got = report.first_mismatch
        lines.append(f"FAIL  first mismatch at position {pos}: "
                     f"reference {expected}, computed {got}")
    else:
        lines.append("PASS  all overlapping terms match")
    if report.suffix_pattern is not None:
        sp = report.suffix_pattern
        status = "PASS" if sp.ok else "FAIL"
        lines.append(
            f"{status}  last-two-digit alternation 57/93 from term "
            f"{sp.checked_from_term}: {' '.join(f'{s:02d}' for s in sp.suffixes)}"
            + (f" ({sp.detail})" if sp.detail else "")
        )
    payload = {
        "command": "oeis-check",
        "sequence_id": report.sequence_id,
        "x": str(report.x),
        "include_seed": report.include_seed,
        "source": report.source,
        "overlap": report.overlap,
        "first_mismatch": (
            {
                "position": report.first_mismatch[0],
                "reference": str(report.first_mismatch[1]),
                "computed": str(report.first_mismatch[2]),
            }
            if report.first_mismatch
            else None
        ),
        "suffix_pattern": (
            {
                "from_term": report.suffix_pattern.checked_from_term,
                "suffixes": list(report.suffix_pattern.suffixes),
                "ok": report.suffix_pattern.ok,
            }
            if report.suffix_pattern
            else None
        ),
        "passed": report.passed,
    }
    _emit(args, payload, lines)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAIL


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starseq",
        description="Star-map chains, prime-power star sequences, the mother "
        "sequence, parallel embeddings, and exact unit-fraction checks.",
        epilog=f"Config file: --config PATH or the {CONFIG_ENV_VAR} environment "
        "variable (JSON). Exit codes: 0 ok, 1 verification failed, 2 usage, "
        "3 domain error, 4 resource limit, 5 I/O error.",
    )
    parser.add_argument("--format", choices=("text", "structured"), default="text")
    parser.add_argument("--config", help="path to a JSON config file")
    parser.add_argument("--trial-bound", type=int, dest="trial_bound")
    parser.add_argument("--rho-rounds", type=int, dest="rho_rounds")
    parser.add_argument("--rho-iterations", type=int, dest="rho_iterations")
    parser.add_argument("--max-term-digits", type=int, dest="max_term_digits")
    parser.add_argument("--suffix-depth", type=int, dest="suffix_depth")
    parser.add_argument("--mother-ceiling", type=int, dest="mother_ceiling")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gross", help="gross chain terms of x")
    p.add_argument("x", type=int)
    p.add_argument("--terms", type=int, default=6)
    p.set_defaults(func=cmd_gross)

    p = sub.add_parser("star", help="star sequence terms of x")
    p.add_argument("x", type=int)
    p.add_argument("--terms", type=int, default=7)
    p.add_argument("--policy", choices=("strict", "lenient"), default="strict")
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("mother", help="mother sequence prefix")
    p.add_argument("--count", type=int, default=37)
    p.set_defaults(func=cmd_mother)

    p = sub.add_parser("occurrences", help="indices where a value occurs in M")
    p.add_argument("value", help="a prime power, e.g. 13 or 2^3 or 8")
    p.add_argument("--limit", type=int, default=5)
    p.set_defaults(func=cmd_occurrences)

    p = sub.add_parser("embed", help="run the parallel-embedding scheduler")
    p.add_argument("--eta-from", type=int, required=True, dest="eta_from")
    p.add_argument("--eta-terms", type=int, default=7, dest="eta_terms")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--mode", choices=("literal", "monotone"), default="monotone")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("verify", help="run a named verification")
    p.add_argument("what", choices=("recip", "coprime", "witness", "odoni", "lemma1"))
    p.add_argument("--x", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--xmax", type=int, default=50)
    p.add_argument("--kmax", type=int, default=8)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("diverge", help="running reciprocal sums of star terms")
    p.add_argument("x", type=int)
    p.add_argument("--depth", type=int, default=4)
    p.set_defaults(func=cmd_diverge)

    p = sub.add_parser("extremes", help="largest/smallest prime power per term")
    p.add_argument("x", type=int)
    p.add_argument("--kmax", type=int, default=4)
    p.set_defaults(func=cmd_extremes)

    p = sub.add_parser("squarefree", help="repeated prime factors in gross terms")
    p.add_argument("x", type=int)
    p.add_argument("--kmax", type=int, default=5)
    p.set_defaults(func=cmd_squarefree)

    p = sub.add_parser("seed", help="one plus the product of given primes")
    p.add_argument("primes", help="comma-separated primes, e.g. 2,3,5")
    p.set_defaults(func=cmd_seed)

    p = sub.add_parser("oeis", help="cross-check a chain against OEIS data")
    oeis_sub = p.add_subparsers(dest="oeis_command", required=True)
    pc = oeis_sub.add_parser("check")
    pc.add_argument("id", help="OEIS id, e.g. A000058")
    pc.add_argument("--bfile", help="path to a local b-file")
    pc.add_argument("--fetch", action="store_true",
                    help="fetch the live b-file (off by default)")
    pc.add_argument("--x", type=int, help="override the chain base")
    pc.add_argument("--with-seed", action="store_true", dest="with_seed")
    pc.add_argument("--no-seed", action="store_true", dest="no_seed")
    pc.set_defaults(func=cmd_oeis)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TermSizeError, StallError, MotherLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
