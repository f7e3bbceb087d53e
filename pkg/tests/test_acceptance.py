"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines and the measured constants.  Every tolerance is exact; the stated time
budgets are asserted.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from contextlib import contextmanager

import pytest

from helpers import (
    random_code,
    random_f_table,
    random_free_word,
    random_genword,
    random_table,
)
from thompsonv import words as W
from thompsonv.algebra import (
    is_congruent,
    is_unary_sum,
    multiply as alg_multiply,
    parse_sum,
    phi_of,
    reduce_mod_iv,
    reduce_via_tables,
    sigma_of,
)
from thompsonv.cli import main as cli_main
from thompsonv.generators import (
    evaluate_balanced,
    evaluate_sequential,
    generator_table,
)
from thompsonv.normalform import (
    element_to_word,
    f_word,
    transposition_table,
)
from thompsonv.subgroups import (
    evaluate_free,
    product_size_check,
    verify_distortion,
)
from thompsonv.tables import (
    IDENTITY,
    Table,
    compose,
    enumerate_elements,
    equal_in_v,
    invert,
    longest_entry,
    max_extend,
    multiply,
    restrict,
)

B_TABLE = Table(("a", "ba", "bba", "bbb"), ("a", "baa", "bab", "bb"))
C_TABLE = Table(("aa", "ab", "baa", "bab", "bb"), ("a", "ba", "bba", "bbba", "bbbb"))
SIGMA = generator_table("sigma")


@contextmanager
def criterion(num: int, budget_s: float, detail: str = ""):
    start = time.perf_counter()
    note = {"detail": detail}
    try:
        yield note
    except BaseException:
        print(f"ACCEPTANCE {num}: FAIL ({time.perf_counter() - start:.3f}s)")
        raise
    elapsed = time.perf_counter() - start
    suffix = f" {note['detail']}" if note["detail"] else ""
    print(f"ACCEPTANCE {num}: PASS ({elapsed:.3f}s, budget {budget_s:g}s){suffix}")
    assert elapsed < budget_s


def test_criterion_1_worked_example():
    sum_b = parse_sum("a a^-1 + ba^2 ba^-1 + bab b^2a^-1 + b^2 b^3^-1")
    sum_c = parse_sum("a a^2^-1 + ba ab^-1 + b^2a ba^2^-1 + b^3a bab^-1 + b^4 b^2^-1")
    five_terms = parse_sum("a a^2^-1 + ba ab^-1 + b^2a ba^-1 + b^3a b^2a^-1 + b^4 b^3^-1")
    # warm up before the timed run
    for _ in range(3):
        alg_multiply(sum_c, sum_b)
        multiply(C_TABLE, B_TABLE)
    with criterion(1, 0.001):
        assert sigma_of(B_TABLE) == sum_b
        assert sigma_of(C_TABLE) == sum_c
        product = alg_multiply(sum_c, sum_b)
        assert product == five_terms
        assert reduce_mod_iv(product) == sigma_of(SIGMA)
        assert multiply(C_TABLE, B_TABLE) == SIGMA


def test_criterion_2_catalan_counts():
    W._codes.cache_clear()
    with criterion(2, 1.0) as note:
        counts = [len(W.enumerate_maximal_codes(n)) for n in range(1, 9)]
        assert counts == [1, 1, 2, 5, 14, 42, 132, 429]
        note["detail"] = f"counts {counts}"


def _conj(mid: Table, left: Table) -> Table:
    """left * mid * left^-1 as a maximally extended table."""
    return multiply(left, multiply(mid, invert(left)))


def test_criterion_3_rewriting_identity_battery():
    sigma = SIGMA
    delta = generator_table("delta")
    gamma1 = generator_table("gamma1")
    gamma2 = generator_table("gamma2")
    tp_abb = generator_table("tp_abb")
    any_v = [""] + ["".join(p) for n in range(1, 5)
                    for p in itertools.product("ab", repeat=n)]
    no_b_v = [v for v in any_v if not v.startswith("b")]
    checked = 0
    with criterion(3, 5.0) as note:
        for k in range(1, 7):
            for h in range(2, 7):
                for v in any_v:  # sigma^-1 (a^k|b^h a v) sigma = (a^k+1|b^h-1 a v)
                    lhs = _conj(transposition_table(k, "b" * h + "a" + v), invert(sigma))
                    assert lhs == transposition_table(k + 1, "b" * (h - 1) + "a" + v)
                    checked += 1
                # sigma^-1 (a^k|b^h) sigma = (a^k+1|b^h-1)
                lhs = _conj(transposition_table(k, "b" * h), invert(sigma))
                assert lhs == transposition_table(k + 1, "b" * (h - 1))
                checked += 1
            for v in any_v:  # sigma^-1 (a^k|bav) sigma = (a^k+1|abv)
                lhs = _conj(transposition_table(k, "ba" + v), invert(sigma))
                assert lhs == transposition_table(k + 1, "ab" + v)
                checked += 1
        for k in range(2, 7):  # (ab|b)(a^k|b)(ab|b) = (a^k|ab)
            lhs = multiply(tp_abb, multiply(transposition_table(k, "b"), tp_abb))
            assert lhs == transposition_table(k, "ab")
            checked += 1
        for j in range(2, 6):  # sigma (a^k|a^j b^h v) sigma^-1 = (a^k-1|a^j-1 b^h v)
            for k in range(j + 1, 7):
                for h in range(1, 7):
                    for v in no_b_v:
                        w = "a" * j + "b" * h + v
                        lhs = _conj(transposition_table(k, w), sigma)
                        assert lhs == transposition_table(k - 1, w[1:])
                        checked += 1
        for k in range(3, 7):  # delta (a^k|ab^h v) delta^-1 = (a^k-1|ab^h v)
            for h in range(1, 7):
                for v in no_b_v:
                    w = "a" + "b" * h + v
                    lhs = _conj(transposition_table(k, w), delta)
                    assert lhs == transposition_table(k - 1, w)
                    checked += 1
        for h in range(2, 7):  # gamma1 (a^2|ab^h v) gamma1^-1 = (a^2|ab^h-1 v)
            for v in no_b_v:
                lhs = _conj(transposition_table(2, "a" + "b" * h + v), gamma1)
                assert lhs == transposition_table(2, "a" + "b" * (h - 1) + v)
                checked += 1
        for u in any_v[1:15]:  # gamma2 (a^2|abau) gamma2^-1 = (a^2|abu), u nonempty
            if len(u) > 3:
                continue
            lhs = _conj(transposition_table(2, "ab" + "a" + u), gamma2)
            assert lhs == transposition_table(2, "ab" + u)
            checked += 1
        note["detail"] = f"{checked} instances"


def test_criterion_4_group_and_property_suite():
    rng = random.Random(2024)
    cases = 0
    with criterion(4, 30.0) as note:
        for _ in range(2500):  # group axioms
            t1 = random_table(rng, rng.randint(1, 12))
            t2 = random_table(rng, rng.randint(1, 12))
            t3 = random_table(rng, rng.randint(1, 12))
            assert multiply(multiply(t3, t2), t1) == multiply(t3, multiply(t2, t1))
            assert multiply(t1, IDENTITY) == t1 == multiply(IDENTITY, t1)
            assert multiply(t1, invert(t1)) == IDENTITY
            cases += 1
        for _ in range(2500):  # unique maximum extension under restriction chains
            t = random_table(rng, rng.randint(1, 12))
            results = []
            for _ in range(2):
                s = t
                for _ in range(rng.randint(0, 3)):
                    s = restrict(s, rng.choice(s.domain),
                                 random_code(rng, rng.randint(2, 4)))
                results.append(max_extend(s))
            assert results[0] == results[1] == t
            cases += 1
        for _ in range(2500):  # size inequalities, random part
            t1 = random_table(rng, rng.randint(1, 12), extended=False)
            t2 = random_table(rng, rng.randint(1, 12), extended=False)
            c = compose(t2, t1)
            assert c.size <= t1.size + t2.size
            assert max_extend(c).size <= c.size
            cases += 1
        for _ in range(2500):  # entry-length bound
            t = random_table(rng, rng.randint(1, 12), extended=False)
            assert longest_entry(t) <= t.size - 1
            assert longest_entry(max_extend(t)) <= max_extend(t).size - 1
            cases += 1
        small = [t for n in range(1, 5)
                 for dom in W.enumerate_maximal_codes(n)
                 for rng_code in W.enumerate_maximal_codes(n)
                 for img in itertools.permutations(rng_code)
                 for t in (Table(dom, img),)]
        for t1 in small:  # size inequalities, exhaustive to size 4
            for t2 in small:
                c = compose(t2, t1)
                assert c.size <= t1.size + t2.size
                assert max_extend(c).size <= c.size
        note["detail"] = f"{cases} randomized cases + {len(small)}^2 exhaustive"


def test_criterion_5_word_length_vs_table_size():
    rng = random.Random(2025)
    ratios = []
    with criterion(5, 60.0) as note:
        for _ in range(1000):
            g = random_table(rng, rng.randint(1, 64))
            word = element_to_word(g)
            assert evaluate_balanced(word) == g
            n = g.size
            if n > 1:
                ratios.append(len(word) / (n * (1 + math.ceil(math.log2(n)))))
        c = max(ratios)
        note["detail"] = f"measured c = {c:.3f} over {len(ratios)} elements"
        assert c < 50  # loose regression cap; the bound itself is existential


def test_criterion_6_f_linear_bound():
    rng = random.Random(2026)
    with criterion(6, 30.0) as note:
        worst = 0.0
        for _ in range(1000):
            g = random_f_table(rng, rng.randint(1, 64))
            word = f_word(g)
            assert len(word) < 4 * g.size
            assert evaluate_balanced(word) == g
            worst = max(worst, len(word) / g.size)
        note["detail"] = f"max length/size = {worst:.3f} (< 4)"


def _reduced_free_words(max_len: int):
    out = []

    def extend(word, remaining):
        if word:
            out.append(tuple(word))
        if remaining == 0:
            return
        for letter in ("alpha", "beta"):
            if word and word[-1][0] == letter:
                continue
            for e in range(1, remaining + 1):
                for sign in (1, -1):
                    word.append((letter, sign * e))
                    extend(word, remaining - e)
                    word.pop()

    extend([], max_len)
    return out


def test_criterion_7_distortion_witnesses():
    rng = random.Random(2027)
    with criterion(7, 30.0) as note:
        exhaustive = 0
        for blocks in range(1, 5):  # all shapes with at most two alpha-runs
            for mu in _shaped_words(blocks, 3):
                report = verify_distortion(mu)
                assert report.all_ok, mu
                exhaustive += 1
        for _ in range(200):
            mu = random_free_word(rng, rng.randint(1, 10), 3)
            report = verify_distortion(mu)
            assert report.all_ok, mu
        freeness = 0
        for mu in _reduced_free_words(6):
            assert evaluate_free(mu) != IDENTITY, mu
            freeness += 1
        note["detail"] = (f"{exhaustive} exhaustive + 200 random; "
                          f"freeness checked on {freeness} words")


def _shaped_words(blocks: int, max_exp: int):
    exps = [e * s for e in range(1, max_exp + 1) for s in (1, -1)]
    letters_options = (
        [("alpha" if i % 2 == 0 else "beta") for i in range(blocks)],
        [("beta" if i % 2 == 0 else "alpha") for i in range(blocks)])
    for letters in letters_options:
        for combo in itertools.product(exps, repeat=blocks):
            yield tuple(zip(letters, combo))


def test_criterion_8_product_size_claim():
    rng = random.Random(2028)
    with criterion(8, 10.0):
        done = 0
        while done < 500:
            g = random_table(rng, rng.randint(2, 12))
            h = random_table(rng, rng.randint(2, 12))
            if g.is_identity or h.is_identity:
                continue
            assert product_size_check(g, h)
            done += 1


def test_criterion_9_algebra_correspondence():
    rng = random.Random(2029)
    with criterion(9, 30.0) as note:
        count = 0
        for n in range(1, 5):  # bijection, exhaustive to table size 4
            for dom in W.enumerate_maximal_codes(n):
                for rng_code in W.enumerate_maximal_codes(n):
                    for img in itertools.permutations(rng_code):
                        t = Table(dom, img)
                        s = sigma_of(t)
                        assert is_unary_sum(s, require_maximal=True)
                        assert phi_of(s) == t
                        assert reduce_mod_iv(s) == reduce_via_tables(s)
                        count += 1
        for _ in range(1000):  # homomorphism and congruence sweeps
            t1 = random_table(rng, rng.randint(1, 8), extended=False)
            t2 = random_table(rng, rng.randint(1, 8), extended=False)
            s1, s2 = sigma_of(t1), sigma_of(t2)
            product = alg_multiply(s2, s1)
            assert phi_of(product) == compose(t2, t1)
            assert is_congruent(s1, s2) == equal_in_v(t1, t2)
            assert reduce_mod_iv(product) == reduce_via_tables(product)
        note["detail"] = f"{count} tables exhaustively + 1000 random pairs"


def test_criterion_10_desk_scale_replacements(capsys):
    rng = random.Random(2030)
    with criterion(10, 120.0) as note:
        # counting lower bound for the special-domain family at n <= 5
        for n in (3, 4, 5):
            special = tuple(sorted(["a" * i + "b" for i in range(n - 1)]
                                   + ["a" * (n - 1)]))
            per_range: dict[tuple, int] = {}
            for t in enumerate_elements(n):
                if t.domain == special:
                    key = tuple(sorted(t.image))
                    per_range[key] = per_range.get(key, 0) + 1
            bound = n * (n - 2) * math.factorial(n - 2)
            assert len(per_range) == len(W.enumerate_maximal_codes(n))
            for key, got in per_range.items():
                assert got >= bound, (n, key, got, bound)
        # balanced evaluation agrees with sequential evaluation
        for _ in range(10_000):
            word = random_genword(rng, rng.randint(0, 128))
            assert evaluate_balanced(word) == evaluate_sequential(word)
        note["detail"] = "counting bound at n<=5; 10^4 balanced-vs-sequential words"
    # benchmark report (measured, not asserted)
    assert cli_main(["bench", "--sizes", "16,64,256", "--trials", "2",
                     "--parallel", "4"]) == 0
    out = capsys.readouterr().out
    print("benchmark report (sequential vs balanced vs 4-thread pool, seconds):")
    print(out)


if __name__ == "__main__":
    pytest.main([__file__, "-v", "-s"])
