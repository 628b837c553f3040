"""Command line front end.

Four subcommands: ``pf`` evaluates a Pfaffian on an index set, ``minor``
evaluates det(T[R; S]) by the formula paths and an oracle, ``double``
prints the doubled matrix, and ``verify`` runs randomized identity
sweeps. Matrices come from files in the format described in the
skewmatrix module.

Exit status: 0 when all requested checks pass, 1 on a mathematical
disagreement, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import random
import sys
from itertools import combinations
from typing import Optional, Sequence

from . import words
from .brill import brill_minor, brill_minor_via_doubling, vanishing_term_check
from .detoracle import MAX_COFACTOR_DIM, det_bareiss, det_cofactor
from .pfaffian import (
    PfCache,
    STRATEGIES,
    pf_eliminate,
    pf_expand,
    pf_matchsum,
    pfaffian,
)
from .scalar import ModularRing, ZZ, format_scalar
from .skewmatrix import (
    IndexSet,
    MatrixFormatError,
    SkewMatrix,
    format_skew_matrix,
    parse_skew_matrix,
    random_skew_matrix,
)

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pfminor",
        description="Exact Pfaffians and skew-matrix minors from matrix files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_pf = sub.add_parser("pf", help="Pfaffian of a principal submatrix")
    p_pf.add_argument("--matrix", required=True, help="matrix file path")
    p_pf.add_argument("--set", required=True, help="comma-separated 1-based indices")
    p_pf.add_argument("--strategy", choices=STRATEGIES, default="expand")

    p_minor = sub.add_parser("minor", help="determinant of T[R; S] via Pfaffians")
    p_minor.add_argument("--matrix", required=True, help="matrix file path")
    p_minor.add_argument("--rows", required=True, help="comma-separated row indices")
    p_minor.add_argument("--cols", required=True, help="comma-separated column indices")
    p_minor.add_argument(
        "--path", choices=("direct", "doubling", "both"), default="both"
    )

    p_verify = sub.add_parser("verify", help="randomized identity sweeps")
    p_verify.add_argument("--max-n", type=int, default=5, dest="max_n")
    p_verify.add_argument("--trials", type=int, default=50)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--entry-bound", type=int, default=9, dest="entry_bound")
    p_verify.add_argument(
        "--inject-sign-fault",
        action="store_true",
        help="negate the sign function for this run; a self-test, verify must fail",
    )

    p_double = sub.add_parser("double", help="print the doubled matrix")
    p_double.add_argument("--matrix", required=True, help="matrix file path")

    return parser


def _load_matrix(path: str) -> SkewMatrix:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_skew_matrix(handle.read())


def _parse_index_set(text: str, flag: str) -> IndexSet:
    text = text.strip()
    if not text:
        return IndexSet()
    try:
        values = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"{flag}: expected comma-separated integers, got {text!r}") from None
    try:
        return IndexSet(values)
    except ValueError as exc:
        raise ValueError(f"{flag}: {exc}") from None


def _cmd_pf(args) -> int:
    T = _load_matrix(args.matrix)
    R = _parse_index_set(args.set, "--set")
    value = pfaffian(T, R, strategy=args.strategy)
    print(f"strategy: {args.strategy}")
    print(f"pfaffian: {format_scalar(value)}")
    return EXIT_OK


def _minor_oracle(T: SkewMatrix, R: IndexSet, S: IndexSet):
    M = T.submatrix(R, S)
    if isinstance(T.ring, ModularRing):
        if len(R) > MAX_COFACTOR_DIM:
            raise ValueError(
                f"no oracle for modular minors larger than {MAX_COFACTOR_DIM}x{MAX_COFACTOR_DIM}"
            )
        return det_cofactor(M)
    return det_bareiss(M)


def _cmd_minor(args) -> int:
    T = _load_matrix(args.matrix)
    R = _parse_index_set(args.rows, "--rows")
    S = _parse_index_set(args.cols, "--cols")
    if len(R) != len(S):
        raise ValueError(
            f"--rows has {len(R)} indices but --cols has {len(S)}; sizes must match"
        )
    reports = []
    if args.path in ("direct", "both"):
        reports.append(("direct", brill_minor(T, R, S)))
    if args.path in ("doubling", "both"):
        reports.append(("doubling", brill_minor_via_doubling(T, R, S)))
    for name, report in reports:
        print(f"{name}: {format_scalar(report.value)}")
        print(f"{name}_terms_evaluated: {report.terms_evaluated}")
        print(f"{name}_terms_skipped_vanishing: {report.terms_skipped_vanishing}")
    if args.path != "both":
        return EXIT_OK
    oracle = _minor_oracle(T, R, S)
    print(f"oracle: {format_scalar(oracle)}")
    values = {format_scalar(report.value) for _, report in reports}
    values.add(format_scalar(oracle))
    if len(values) == 1:
        print("agreement: PASS")
        return EXIT_OK
    print("agreement: FAIL")
    return EXIT_DISAGREE


def _cmd_double(args) -> int:
    T = _load_matrix(args.matrix)
    sys.stdout.write(format_skew_matrix(T.double()))
    return EXIT_OK


class _Suite:
    """Pass/total counter for one verify suite."""

    def __init__(self, name: str):
        self.name = name
        self.passed = 0
        self.total = 0

    def check(self, ok: bool) -> None:
        self.total += 1
        if ok:
            self.passed += 1

    def line(self) -> str:
        return f"{self.name}: {self.passed}/{self.total}"

    @property
    def clean(self) -> bool:
        return self.passed == self.total


def _sample_index_set(rng: random.Random, n: int, size: int) -> IndexSet:
    return IndexSet(rng.sample(range(1, n + 1), size))


def _suite_evaluator_agreement(rng, suite, max_n, trials, bound):
    for _ in range(trials):
        n = rng.randint(0, max_n)
        T = random_skew_matrix(rng, n, ZZ, bound)
        for m in range(0, min(n, 8) + 1):
            R = _sample_index_set(rng, n, m)
            shuffled = list(R)
            rng.shuffle(shuffled)
            for word in (tuple(R), tuple(shuffled)):
                suite.check(pf_matchsum(T, word) == pf_expand(T, word))
            if m % 2 == 0:
                suite.check(pf_eliminate(T, R) == pf_matchsum(T, R))


def _suite_tanner(rng, suite, max_n, trials, bound):
    for _ in range(trials):
        n = rng.randint(2, max(2, max_n))
        T = random_skew_matrix(rng, n, ZZ, bound)
        half = rng.randint(1, max(1, min(n, 8) // 2))
        letters = rng.sample(range(1, n + 1), 2 * half)
        alpha = tuple(letters)
        a = alpha[0]
        total = ZZ.zero
        for x in alpha[1:]:
            head = (a, x)
            rest = words.word_remove(alpha, head)
            s = words.sign(alpha, head + rest)
            term = pf_matchsum(T, head) * pf_matchsum(T, rest)
            if s:
                total = total + term if s > 0 else total - term
        suite.check(total == pf_matchsum(T, alpha))


def _suite_two_sum(rng, suite, max_n, trials, bound):
    for _ in range(trials):
        n = rng.randint(2, max(2, max_n))
        T = random_skew_matrix(rng, n, ZZ, bound)
        r_size = rng.randint(1, n)
        rho = _sample_index_set(rng, n, r_size)
        outside = [i for i in range(1, n + 1) if i not in rho]
        sigma = IndexSet(rng.sample(outside, rng.randint(0, len(outside))))
        tail = list(rho[1:])
        omega = tuple(sorted(rng.sample(tail, rng.randint(0, len(tail)))))
        suite.check(_two_sum_identity_holds(T, tuple(rho), tuple(sigma), omega))


def _two_sum_identity_holds(T, rho, sigma, omega) -> bool:
    """The expansion of P[(rho minus omega) sigma] along the first row index."""
    r1 = rho[0]
    rho_less = words.word_remove(rho, omega)
    direct = pf_matchsum(T, rho_less + sigma)
    total = T.ring.zero
    for r in rho_less[1:]:
        head = (r1, r)
        rest = words.word_remove(rho_less, head)
        s = words.sign(rho_less, head + rest)
        if s:
            term = pf_matchsum(T, head) * pf_matchsum(T, rest + sigma)
            total = total + term if s > 0 else total - term
    tail_parity = (len(rho_less) - 1) & 1
    for s_letter in sigma:
        sigma_rest = words.word_remove(sigma, (s_letter,))
        s = words.sign(sigma, (s_letter,) + sigma_rest)
        if not s:
            continue
        if tail_parity:
            s = -s
        term = pf_matchsum(T, (r1, s_letter)) * pf_matchsum(
            T, words.word_remove(rho_less, (r1,)) + sigma_rest
        )
        total = total + term if s > 0 else total - term
    return total == direct


def _suite_minor_sweeps(rng, agree, doubling, vanishing, max_n, trials, bound):
    for _ in range(trials):
        n = rng.randint(0, max_n)
        T = random_skew_matrix(rng, n, ZZ, bound)
        direct_cache = PfCache()
        doubled_cache = PfCache()
        for m in range(0, n + 1):
            for R in combinations(range(1, n + 1), m):
                for S in combinations(range(1, n + 1), m):
                    report = brill_minor(T, R, S, cache=direct_cache)
                    oracle = det_bareiss(T.submatrix(R, S))
                    agree.check(report.value == oracle)
                    via = brill_minor_via_doubling(T, R, S, cache=doubled_cache)
                    doubling.check(via.value == report.value)
                    no_skip = brill_minor(
                        T, R, S, skip_vanishing=False, cache=direct_cache
                    )
                    vanishing.check(
                        no_skip.value == report.value and vanishing_term_check(T, R, S)
                    )


def _cmd_verify(args) -> int:
    if args.max_n < 0 or args.trials < 1 or args.entry_bound < 0:
        raise ValueError("verify needs --max-n >= 0, --trials >= 1, --entry-bound >= 0")
    original_sign = words.sign
    if args.inject_sign_fault:
        words.sign = lambda a, b, _orig=original_sign: -_orig(a, b)
    try:
        rng = random.Random(args.seed)
        suites = {
            name: _Suite(name)
            for name in (
                "evaluator_agreement",
                "tanner_expansion",
                "two_sum_decomposition",
                "oracle_equivalence",
                "doubling_agreement",
                "vanishing_terms",
            )
        }
        bound = args.entry_bound
        _suite_evaluator_agreement(
            rng, suites["evaluator_agreement"], args.max_n, args.trials, bound
        )
        _suite_tanner(rng, suites["tanner_expansion"], args.max_n, args.trials, bound)
        _suite_two_sum(
            rng, suites["two_sum_decomposition"], args.max_n, args.trials, bound
        )
        _suite_minor_sweeps(
            rng,
            suites["oracle_equivalence"],
            suites["doubling_agreement"],
            suites["vanishing_terms"],
            args.max_n,
            args.trials,
            bound,
        )
    finally:
        words.sign = original_sign
    print(f"seed: {args.seed}")
    print(f"max_n: {args.max_n}")
    print(f"trials: {args.trials}")
    print(f"entry_bound: {args.entry_bound}")
    clean = True
    for suite in suites.values():
        print(suite.line())
        clean = clean and suite.clean
    print(f"result: {'PASS' if clean else 'FAIL'}")
    return EXIT_OK if clean else EXIT_DISAGREE


_COMMANDS = {
    "pf": _cmd_pf,
    "minor": _cmd_minor,
    "verify": _cmd_verify,
    "double": _cmd_double,
}


def run(args: argparse.Namespace) -> int:
    """Dispatch a parsed command; returns the process exit status."""
    try:
        return _COMMANDS[args.command](args)
    except (MatrixFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, IndexError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
