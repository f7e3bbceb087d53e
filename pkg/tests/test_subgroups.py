"""Tests for subgroup embeddings: shift, finitary permutations, the free
subgroup with distortion witnesses, and doubling."""

from __future__ import annotations

import itertools
import random

import pytest

from helpers import random_free_word, random_table
from thompsonv.subgroups import (
    ALPHA,
    BETA,
    WitnessPair,
    apply_free,
    closed_form_witness,
    double_a,
    double_b,
    evaluate_free,
    finitary_perm_table,
    format_free_word,
    free_generators,
    free_length,
    int_embed,
    parse_free_word,
    product_size_check,
    shift_table,
    verify_distortion,
)
from thompsonv.tables import IDENTITY, Table, invert, max_extend, multiply


def test_shift_table():
    shift = shift_table()
    assert shift == Table(("aa", "ab", "b"), ("a", "ba", "bb"))
    assert multiply(shift, invert(shift)) == IDENTITY
    for z in range(-4, 5):
        assert shift.apply(int_embed(z)) == int_embed(z + 1)


def test_shift_conjugation_moves_transpositions():
    shift = shift_table()
    tau01 = finitary_perm_table({0: 1, 1: 0})
    conjugated = multiply(shift, multiply(tau01, invert(shift)))
    assert conjugated == finitary_perm_table({1: 2, 2: 1})


def test_int_embed():
    assert int_embed(0) == "ab"
    assert int_embed(1) == "ba"
    assert int_embed(-2) == "aaab"
    seen = {int_embed(z) for z in range(-20, 21)}
    assert len(seen) == 41
    for z in range(-20, 21):
        w = int_embed(z)
        assert (w.endswith("b") and set(w[:-1]) <= {"a"}) or (
            w.endswith("a") and set(w[:-1]) <= {"b"})


def test_finitary_perm_table_examples():
    tau01 = finitary_perm_table({0: 1, 1: 0})
    assert tau01 == Table(("aa", "ab", "ba", "bb"), ("aa", "ba", "ab", "bb"))
    assert finitary_perm_table({}) == IDENTITY
    assert finitary_perm_table({3: 3, 5: 5}) == IDENTITY
    assert multiply(tau01, tau01) == IDENTITY
    with pytest.raises(ValueError):
        finitary_perm_table({0: 1, 1: 2})


def test_finitary_perm_homomorphism_exhaustive_s5():
    domain = (-2, -1, 0, 1, 2)
    perms = [dict(zip(domain, img)) for img in itertools.permutations(domain)]

    def key(p):
        return tuple(sorted(p.items()))

    tables = {key(p): finitary_perm_table(p) for p in perms}
    for p in perms:
        for q in perms:
            composed = {z: p[q[z]] for z in domain}
            lhs = multiply(tables[key(p)], tables[key(q)])
            assert lhs == tables[key(composed)]
    # distinct permutations give distinct elements (faithful)
    assert len(set(tables.values())) == len(perms)


def test_free_generators_tables():
    a, b = free_generators()
    assert a is ALPHA and b is BETA
    assert a.size == b.size == 6
    assert max_extend(a) == a
    assert max_extend(b) == b
    assert a.apply("a") == "bbbba"
    assert b.apply("aaa") == "aaaa"
    assert a.apply("ba") == "bbbbb"
    assert b.apply("b") == "aaaba"
    assert multiply(a, invert(a)) == IDENTITY
    assert multiply(b, invert(b)) == IDENTITY


def test_evaluate_free():
    assert evaluate_free((("alpha", 1),)) == ALPHA
    assert evaluate_free(()) == IDENTITY
    commutator = parse_free_word("a^1 b^1 a^-1 b^-1")
    assert evaluate_free(commutator) != IDENTITY
    with pytest.raises(ValueError):
        evaluate_free((("alpha", 1), ("alpha", 2)))
    with pytest.raises(ValueError):
        evaluate_free((("alpha", 0),))


def test_freeness_at_small_length():
    # no reduced word of free length <= 4 evaluates to the identity
    def reduced_words(max_len):
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

    for mu in reduced_words(4):
        assert evaluate_free(mu) != IDENTITY


def test_closed_form_witness_base_cases():
    # single alpha power
    wit = closed_form_witness((("alpha", 1),))
    assert wit.inputs == ("a", "ba")
    assert wit.images == ("bbbba", "bbbbb")
    wit = closed_form_witness((("alpha", -1),))
    assert wit.images == ("bbaaa", "bbaab")
    wit = closed_form_witness((("alpha", 3),))
    assert wit.images == ("bbbaaba", "bbbaabb")
    # single beta power takes inputs (b, ab)
    wit = closed_form_witness((("beta", 1),))
    assert wit.inputs == ("b", "ab")
    assert wit.images == ("aaaba", "aaabb")
    wit = closed_form_witness((("beta", -1),))
    assert wit.images == ("aabaa", "aabab")


def test_closed_form_witness_structure():
    rng = random.Random(83)
    for _ in range(1000):
        mu = random_free_word(rng, rng.randint(1, 8), 3)
        wit = closed_form_witness(mu)
        assert isinstance(wit, WitnessPair)
        assert wit.images == (wit.y + "a", wit.y + "b")
        assert len(wit.y) > free_length(mu)
        # the assembled images agree with one-generator-at-a-time evaluation
        assert apply_free(mu, wit.inputs[0]) == wit.images[0]
        assert apply_free(mu, wit.inputs[1]) == wit.images[1]


def test_verify_distortion_examples():
    assert verify_distortion((("alpha", 1),)).all_ok
    assert verify_distortion(parse_free_word("b^-2 a^3")).all_ok
    report = verify_distortion(parse_free_word("a^2 b^-1 a^1 b^3"))
    assert report.all_ok
    assert report.table_size > report.free_length


def test_verify_distortion_random_sweep():
    rng = random.Random(89)
    for _ in range(40):
        mu = random_free_word(rng, rng.randint(1, 6), 3)
        report = verify_distortion(mu)
        assert report.closed_form_matches
        assert report.witness_exceeds_free_length
        assert report.table_size_exceeds_free_length


def test_apply_free_matches_tables():
    rng = random.Random(97)
    for _ in range(50):
        mu = random_free_word(rng, rng.randint(1, 5), 2)
        t = evaluate_free(mu)
        for d, im in zip(t.domain, t.image):
            assert apply_free(mu, d) in (None, im)
        wit = closed_form_witness(mu)
        assert apply_free(mu, wit.inputs[0]) == wit.images[0]


def test_double_examples():
    assert double_a(IDENTITY) == IDENTITY
    assert double_b(IDENTITY) == IDENTITY
    sigma = Table(("aa", "ab", "b"), ("a", "ba", "bb"))
    assert double_a(sigma) == Table(
        ("aaa", "aab", "ab", "b"), ("aa", "aba", "abb", "b"))
    assert double_b(sigma) == Table(
        ("a", "baa", "bab", "bb"), ("a", "ba", "bba", "bbb"))


def test_doubles_commute_and_are_homomorphisms():
    rng = random.Random(101)
    for _ in range(60):
        g = random_table(rng, rng.randint(1, 10))
        h = random_table(rng, rng.randint(1, 10))
        assert multiply(double_a(g), double_b(h)) == multiply(double_b(h), double_a(g))
        assert double_a(multiply(g, h)) == multiply(double_a(g), double_a(h))
        assert double_b(multiply(g, h)) == multiply(double_b(g), double_b(h))


def test_product_size_check():
    sigma = Table(("aa", "ab", "b"), ("a", "ba", "bb"))
    swap = Table(("a", "b"), ("b", "a"))
    assert product_size_check(sigma, sigma)
    assert multiply(double_a(sigma), double_b(sigma)).size == 6
    assert product_size_check(ALPHA, BETA)
    assert multiply(double_a(ALPHA), double_b(BETA)).size == 12
    assert product_size_check(swap, swap)
    assert multiply(double_a(swap), double_b(swap)).size == 4
    with pytest.raises(ValueError):
        product_size_check(IDENTITY, sigma)


def test_free_word_text_round_trip():
    assert parse_free_word("a^3 b^-2 a^1") == (("alpha", 3), ("beta", -2), ("alpha", 1))
    assert parse_free_word("a b^-1") == (("alpha", 1), ("beta", -1))
    rng = random.Random(103)
    for _ in range(100):
        mu = random_free_word(rng, rng.randint(0, 6), 4)
        assert parse_free_word(format_free_word(mu)) == mu
    with pytest.raises(ValueError):
        parse_free_word("c^2")
    with pytest.raises(ValueError):
        parse_free_word("a^1 a^2")
    with pytest.raises(ValueError):
        parse_free_word("a^0")
