import random

import pytest

from veerlab.braid import BraidWord, parse_braid, power
from veerlab.modular import (
    Classification,
    PSL2Element,
    SL2_A,
    SL2_B,
    SIGMA1_BAR,
    SIGMA2_BAR,
    SL2Matrix,
    classify,
    normal_form,
    parse_matrix,
    project_b3,
    psl_conjugate,
    rademacher,
    rademacher_class,
)
from veerlab.sweeps import random_psl


def test_generator_images():
    assert project_b3(parse_braid("1", 3)) == SL2Matrix(1, 0, -1, 1)
    assert project_b3(parse_braid("2", 3)) == SL2Matrix(1, 1, 0, 1)
    assert project_b3(parse_braid("1 2 1", 3)) == SL2_A
    assert project_b3(power(parse_braid("1 2 1", 3), 4)) == SL2Matrix(1, 0, 0, 1)
    # A = s1 s2 s1 and B = s1^-1 s2^-1 as matrices.
    assert SIGMA1_BAR * SIGMA2_BAR * SIGMA1_BAR == SL2_A
    assert SIGMA1_BAR.inverse() * SIGMA2_BAR.inverse() == SL2_B


def test_projection_is_homomorphism():
    rng = random.Random(2)
    for _ in range(200):
        a = BraidWord(3, tuple(rng.choice([1, -1, 2, -2]) for _ in range(rng.randrange(0, 15))))
        b = BraidWord(3, tuple(rng.choice([1, -1, 2, -2]) for _ in range(rng.randrange(0, 15))))
        ab = BraidWord(3, a.letters + b.letters)
        assert project_b3(ab) == project_b3(a) * project_b3(b)


def test_classify():
    assert classify(SL2Matrix(0, 1, -1, 0)) is Classification.PERIODIC
    assert classify(SL2Matrix(1, 1, 0, 1)) is Classification.REDUCIBLE
    assert classify(SL2Matrix(2, 1, 1, 1)) is Classification.ANOSOV
    assert classify(SL2Matrix(1, 0, 0, 1)) is Classification.PERIODIC
    assert classify(SL2Matrix(-1, 0, 0, -1)) is Classification.PERIODIC


def test_normal_form_examples():
    assert normal_form(PSL2Element(SL2Matrix(1, 0, 0, 1))).exponents == ()
    assert normal_form(PSL2Element(SL2_B)).exponents == (1,)
    # sigma_2-bar = B A.
    assert normal_form(PSL2Element(SIGMA2_BAR)).exponents == (1, 0)
    assert PSL2Element(SL2_B * SL2_A) == PSL2Element(SIGMA2_BAR)


def test_normal_form_round_trip_and_validity():
    rng = random.Random(3)
    for _ in range(2000):
        g = random_psl(rng, 60)
        nf = normal_form(g)
        assert nf.to_psl() == g
        r = nf.exponents
        for i, e in enumerate(r):
            if 0 < i < len(r) - 1:
                assert e in (1, -1)


def test_rademacher_examples():
    assert rademacher(PSL2Element(SL2Matrix(1, 0, 0, 1))) == 0
    # sigma_1-bar inverse is B^-1 A, a single -1 exponent.
    assert PSL2Element(SL2_B.inverse() * SL2_A) == PSL2Element(SIGMA1_BAR.inverse())
    assert rademacher(PSL2Element(SIGMA1_BAR.inverse())) == -1
    w = parse_braid("1 2 1 1 2 1 -1 -1 -1 -1 2 -1 2 -1", 3)
    assert rademacher(PSL2Element(project_b3(w))) == -4


def test_rademacher_class_is_conjugation_invariant():
    rng = random.Random(4)
    for _ in range(400):
        g = random_psl(rng, 30)
        h = random_psl(rng, 20)
        conj = h * g * h.inverse()
        assert rademacher_class(conj) == rademacher_class(g)


def test_rademacher_is_not_a_class_function():
    # Witness pair: conjugating by B shifts the exponent sum by 3.
    c = PSL2Element(SL2Matrix(2, 1, 1, 1))
    b = PSL2Element(SL2_B)
    assert rademacher(c) == 0
    assert rademacher(b * c * b.inverse()) == -3
    assert rademacher_class(c) == rademacher_class(b * c * b.inverse()) == 0


def test_quasimorphism_bound():
    rng = random.Random(5)
    for _ in range(2000):
        g, h = random_psl(rng, 40), random_psl(rng, 40)
        assert abs(rademacher(g * h) - rademacher(g) - rademacher(h)) <= 3


def test_psl_conjugate():
    s1 = PSL2Element(SIGMA1_BAR)
    s2 = PSL2Element(SIGMA2_BAR)
    # Explicit conjugator A, verified by matrix multiplication.
    a = PSL2Element(SL2_A)
    assert a * s1 * a.inverse() == s2
    assert psl_conjugate(s1, s2)
    assert not psl_conjugate(s2, s2 * s2)
    rng = random.Random(6)
    for _ in range(60):
        g = random_psl(rng, 20)
        h = random_psl(rng, 12)
        assert psl_conjugate(g, g)
        assert psl_conjugate(g, h * g * h.inverse())


def test_psl_conjugate_against_ball_search():
    # Oracle: search a radius-9 ball for an explicit conjugator.
    gens = [SL2_A, SL2_B, SL2_B.inverse()]
    ident = PSL2Element(SL2Matrix(1, 0, 0, 1))
    ball = {ident.rep.entries(): ident}
    frontier = [ident]
    for _ in range(9):
        nxt = []
        for g in frontier:
            for m in gens:
                h = PSL2Element(g.rep * m)
                if h.rep.entries() not in ball:
                    ball[h.rep.entries()] = h
                    nxt.append(h)
        frontier = nxt
    elements = list(ball.values())
    small = [g for g in elements if sum(abs(x) for x in g.rep.entries()) <= 6]

    def brute(g, h):
        return any(
            PSL2Element(c.rep * g.rep * c.rep.inverse()) == h for c in elements
        )

    rng = random.Random(7)
    for _ in range(400):
        g, h = rng.choice(small), rng.choice(small)
        if brute(g, h):
            assert psl_conjugate(g, h)
        if psl_conjugate(g, h):
            # For these small elements a ball conjugator always exists.
            assert brute(g, h)


def test_psl_canonicalization():
    m = SL2Matrix(-1, 0, -5, -1)
    g = PSL2Element(m)
    assert g.rep.entries() == (1, 0, 5, 1)
    assert PSL2Element(m.neg()) == g


def test_parse_matrix():
    assert parse_matrix("0 1; -1 0") == SL2_A
    with pytest.raises(ValueError):
        parse_matrix("1 0; 0 2")
    with pytest.raises(ValueError):
        parse_matrix("1 0 0 1")
