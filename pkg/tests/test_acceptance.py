"""Acceptance suite: every exactness property behind the package, at scale.

Each test function is one acceptance criterion; run with -v to get one
pass/fail line per criterion. All checks are exact equalities, no
tolerances anywhere. The randomized corpora are seeded, so the suite is
reproducible bit for bit.
"""

import math
import random
from dataclasses import dataclass
from itertools import combinations

import pytest

from pfminor import words
from pfminor.brill import (
    MinorReport,
    brill_minor,
    brill_minor_via_doubling,
    vanishing_term_check,
)
from pfminor.detoracle import det_bareiss, det_cofactor
from pfminor.pfaffian import (
    PfCache,
    pf_eliminate,
    pf_expand,
    pf_matchsum,
    pfaffian,
)
from pfminor.scalar import ModularRing, UnsupportedRingError, ZZ
from pfminor.skewmatrix import IndexSet, SkewMatrix, random_skew_matrix

N_MATRICES = 200
MAX_N = 6
ENTRY_BOUND = 9
MOD2 = ModularRing(2)


@dataclass(frozen=True)
class PairRecord:
    R: tuple
    S: tuple
    direct: MinorReport
    no_skip: MinorReport
    doubling: MinorReport
    det_b: object
    det_c: object


@dataclass(frozen=True)
class MatrixRecord:
    T: SkewMatrix
    pairs: tuple


def _all_pairs(n):
    for m in range(n + 1):
        for R in combinations(range(1, n + 1), m):
            for S in combinations(range(1, n + 1), m):
                yield R, S


def _even_subword_total(m):
    return sum(math.comb(m, 2 * k) for k in range(m // 2 + 1))


@pytest.fixture(scope="module")
def corpus():
    """200 integer matrices, sizes cycling 0..6, with every minor pair evaluated."""
    rng = random.Random(0xB5117)
    records = []
    for t in range(N_MATRICES):
        n = t % (MAX_N + 1)
        T = random_skew_matrix(rng, n, ZZ, ENTRY_BOUND)
        direct_cache = PfCache()
        doubled_cache = PfCache()
        pairs = []
        for R, S in _all_pairs(n):
            direct = brill_minor(T, R, S, cache=direct_cache)
            no_skip = brill_minor(T, R, S, skip_vanishing=False, cache=direct_cache)
            doubling = brill_minor_via_doubling(T, R, S, cache=doubled_cache)
            M = T.submatrix(R, S)
            pairs.append(
                PairRecord(R, S, direct, no_skip, doubling, det_bareiss(M), det_cofactor(M))
            )
        records.append(MatrixRecord(T, tuple(pairs)))
    return records


@pytest.fixture(scope="module")
def corpus_mod2():
    """The same sweep shape over integers mod 2, with the cofactor oracle."""
    rng = random.Random(0xB5118)
    records = []
    for t in range(N_MATRICES):
        n = t % (MAX_N + 1)
        T = random_skew_matrix(rng, n, MOD2, ENTRY_BOUND)
        cache = PfCache()
        pairs = []
        for R, S in _all_pairs(n):
            direct = brill_minor(T, R, S, cache=cache)
            pairs.append((R, S, direct, det_cofactor(T.submatrix(R, S))))
        records.append((T, tuple(pairs)))
    return records


def test_criterion_01_oracle_equivalence(corpus):
    """Minor formula equals both determinant oracles on every (R, S) pair."""
    assert len(corpus) >= 200
    checked = 0
    for record in corpus:
        n = record.T.n
        assert len(record.pairs) == math.comb(2 * n, n)
        for pair in record.pairs:
            assert pair.direct.value == pair.det_b == pair.det_c, (record.T, pair.R, pair.S)
            checked += 1
    sixes = [r for r in corpus if r.T.n == 6]
    assert len(sixes) >= 28 and all(len(r.pairs) == 924 for r in sixes)
    assert checked >= 35_000


def test_criterion_02_evaluator_agreement():
    """All three evaluators agree on every sorted subset word at n = 8."""
    rng = random.Random(0xE7A1)
    for _ in range(50):
        T = random_skew_matrix(rng, 8, ZZ, ENTRY_BOUND)
        cache = PfCache()
        for m in range(9):
            for sub in combinations(range(1, 9), m):
                value = pf_matchsum(T, sub)
                assert pf_expand(T, sub, cache) == value
                if m % 2 == 0:
                    assert pf_eliminate(T, IndexSet(sub)) == value


def test_criterion_03_expansion_identity():
    """The first-letter expansion reproduces the brute-force value."""
    rng = random.Random(0xDEC)
    instances = 0
    while instances < 1000:
        n = rng.randint(2, 8)
        T = random_skew_matrix(rng, n, ZZ, ENTRY_BOUND)
        for _ in range(5):
            half = rng.randint(1, min(n, 8) // 2)
            alpha = tuple(rng.sample(range(1, n + 1), 2 * half))
            a = alpha[0]
            total = 0
            for x in alpha[1:]:
                head = (a, x)
                rest = words.word_remove(alpha, head)
                s = words.sign(alpha, head + rest)
                total += s * pf_matchsum(T, head) * pf_matchsum(T, rest)
            assert total == pf_matchsum(T, alpha)
            instances += 1
    assert instances >= 1000


def _two_sum_sides(T, rho, sigma, omega):
    r1 = rho[0]
    rho_less = words.word_remove(rho, omega)
    lhs = pf_matchsum(T, rho_less + sigma)
    total = T.ring.zero
    for r in rho_less[1:]:
        head = (r1, r)
        rest = words.word_remove(rho_less, head)
        s = words.sign(rho_less, head + rest)
        term = pf_matchsum(T, head) * pf_matchsum(T, rest + sigma)
        if s:
            total = total + term if s > 0 else total - term
    flip = (len(rho_less) - 1) % 2 == 1
    for s_letter in sigma:
        sigma_rest = words.word_remove(sigma, (s_letter,))
        s = words.sign(sigma, (s_letter,) + sigma_rest)
        if flip:
            s = -s
        term = pf_matchsum(T, (r1, s_letter)) * pf_matchsum(
            T, words.word_remove(rho_less, (r1,)) + sigma_rest
        )
        if s:
            total = total + term if s > 0 else total - term
    return lhs, total


def test_criterion_04_two_sum_identity():
    """Splitting the expansion into row and column parts changes nothing."""
    rng = random.Random(0x2507)
    instances = 0
    while instances < 500:
        n = rng.randint(2, 8)
        T = random_skew_matrix(rng, n, ZZ, ENTRY_BOUND)
        for _ in range(5):
            r_size = rng.randint(1, n)
            rho = tuple(sorted(rng.sample(range(1, n + 1), r_size)))
            outside = [i for i in range(1, n + 1) if i not in rho]
            sigma = tuple(sorted(rng.sample(outside, rng.randint(0, len(outside)))))
            tail = list(rho[1:])
            omega = tuple(sorted(rng.sample(tail, rng.randint(0, len(tail)))))
            lhs, rhs = _two_sum_sides(T, rho, sigma, omega)
            assert lhs == rhs
            instances += 1
    assert instances >= 500


def test_criterion_05_base_cases():
    """Size-1 minors are single entries; size-2 disjoint minors have the
    closed two-Pfaffian form; both match cofactor expansion exactly."""
    rng = random.Random(0xBA5E)
    for _ in range(200):
        n = rng.randint(1, MAX_N)
        T = random_skew_matrix(rng, n, ZZ, ENTRY_BOUND)
        r = rng.randint(1, n)
        s = rng.randint(1, n)
        value = brill_minor(T, (r,), (s,)).value
        assert value == T.entry(r, s)
        assert value == det_cofactor(T.submatrix((r,), (s,)))
    for _ in range(200):
        T = random_skew_matrix(rng, MAX_N, ZZ, ENTRY_BOUND)
        R = tuple(sorted(rng.sample(range(1, MAX_N + 1), 2)))
        pool = [i for i in range(1, MAX_N + 1) if i not in R]
        S = tuple(sorted(rng.sample(pool, 2)))
        closed_form = pf_matchsum(T, R) * pf_matchsum(T, S) - pf_matchsum(T, R + S)
        value = brill_minor(T, R, S).value
        assert value == closed_form
        assert value == det_cofactor(T.submatrix(R, S))


def test_criterion_06_doubling_path(corpus, generic3):
    """The doubled-matrix route agrees everywhere, and the 3x3 example
    lands on the exact lifted submatrix."""
    for record in corpus:
        for pair in record.pairs:
            assert pair.doubling.value == pair.direct.value, (record.T, pair.R, pair.S)
    doubled = generic3.double()
    assert [doubled.entry(1, b) for b in range(1, 7)] == [0, 0, 2, 2, 3, 3]
    lifted = doubled.submatrix((1, 3), (4, 6))
    original = generic3.submatrix((1, 2), (2, 3))
    assert lifted.entries == original.entries == (2, 3, 0, 7)


def test_criterion_07_vanishing_terms(corpus):
    """Subwords missing part of the overlap contribute exactly zero, and
    skipping them never changes a value or miscounts a term."""
    for record in corpus:
        for pair in record.pairs:
            m = len(pair.R)
            assert pair.no_skip.value == pair.direct.value
            total = _even_subword_total(m)
            assert pair.direct.terms_evaluated + pair.direct.terms_skipped_vanishing == total
            assert pair.no_skip.terms_evaluated == total
            assert pair.no_skip.terms_skipped_vanishing == 0
            if set(pair.R) & set(pair.S):
                assert vanishing_term_check(record.T, pair.R, pair.S)


def test_criterion_08_pfaffian_determinant_law(corpus):
    """The square of a Pfaffian is the principal minor it came from."""
    for record in corpus:
        n = record.T.n
        for m in range(0, n + 1, 2):
            for R in combinations(range(1, n + 1), m):
                pf = pfaffian(record.T, R)
                assert pf * pf == det_bareiss(record.T.submatrix(R, R))


def test_criterion_09_characteristic_two(corpus_mod2):
    """The oracle, evaluator, and expansion checks all hold mod 2, where
    the zero diagonal and repeat conventions are enforced rather than free."""
    assert len(corpus_mod2) >= 200
    for T, pairs in corpus_mod2:
        for R, S, direct, oracle in pairs:
            assert direct.value == oracle, (T, R, S)
    with pytest.raises(UnsupportedRingError):
        pf_eliminate(random_skew_matrix(random.Random(0), 2, MOD2), (1, 2))
    rng = random.Random(0xE7A2)
    for _ in range(50):
        T = random_skew_matrix(rng, 8, MOD2, ENTRY_BOUND)
        cache = PfCache()
        for m in range(9):
            for sub in combinations(range(1, 9), m):
                assert pf_expand(T, sub, cache) == pf_matchsum(T, sub)
    rng = random.Random(0xDEC2)
    instances = 0
    while instances < 1000:
        n = rng.randint(2, 8)
        T = random_skew_matrix(rng, n, MOD2, ENTRY_BOUND)
        for _ in range(5):
            half = rng.randint(1, min(n, 8) // 2)
            alpha = tuple(rng.sample(range(1, n + 1), 2 * half))
            a = alpha[0]
            total = MOD2.zero
            for x in alpha[1:]:
                head = (a, x)
                rest = words.word_remove(alpha, head)
                s = words.sign(alpha, head + rest)
                term = pf_matchsum(T, head) * pf_matchsum(T, rest)
                if s:
                    total = total + term if s > 0 else total - term
            assert total == pf_matchsum(T, alpha)
            instances += 1


def test_criterion_10_sign_fault_detection(corpus, monkeypatch):
    """Negating the sign convention must break the oracle match on some
    size-2 minor; a formula immune to that would be hiding sign errors."""
    original = words.sign
    monkeypatch.setattr(words, "sign", lambda a, b: -original(a, b))
    for record in corpus:
        for pair in record.pairs:
            if len(pair.R) != 2:
                continue
            faulted = brill_minor(record.T, pair.R, pair.S)
            if faulted.value != pair.det_b:
                return
    pytest.fail("sign fault went undetected on every size-2 minor")
