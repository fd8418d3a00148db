import random
from fractions import Fraction

import pytest

from veerlab.braid import (
    BraidWord,
    braid3_equal,
    concat,
    conjugate,
    linking_number,
    parse_braid,
    power,
)
from veerlab.modular import (
    Classification,
    SL2Matrix,
    classify,
    project_b3,
)
from veerlab.sweeps import random_word
from veerlab.torus import (
    HALF_TWIST_CUBE,
    check_quasipositive_certificate,
    check_right_veering_certificate,
    decompose,
    dehn_twist_delta,
    family_psi_check,
    phi,
    psi_frontier,
    quasipositive_verdict,
    right_veering,
    rot,
    verify_theorem_lk,
)

W25 = parse_braid("1 2 1 1 2 1 -1 -1 -1 -1 2 -1 2 -1", 3)
PAPER_WITNESS_M4 = [((2,), 1), ((1,), 2)]  # (s2 s1 s2^-1)(s1 s2 s1^-1)


def family_word(j: int, m: int) -> BraidWord:
    return concat(power(HALF_TWIST_CUBE, j), power(BraidWord(3, (-1,)), m))


def test_decompose_examples():
    d = decompose(BraidWord.identity(3))
    assert d.k == 0 and d.w == BraidWord.identity(3)
    d = decompose(power(HALF_TWIST_CUBE, 4))
    assert d.k == 4 and len(d.w) == 0
    d = decompose(W25)
    assert d.k == 2 and linking_number(d.w) == -4
    assert braid3_equal(d.reassemble(), W25)


def test_decompose_alphabet_and_parity():
    rng = random.Random(21)
    for _ in range(400):
        b = random_word(rng, 3, 25)
        d = decompose(b)
        if d.case_tag in (1, 2):
            assert all(l in (-1, 2) for l in d.w.letters)
        else:
            assert all(l in (1, -2) for l in d.w.letters)
        assert d.k % 2 == (0 if d.case_tag in (1, 4) else 1)
        assert braid3_equal(d.reassemble(), b)


def test_rot_examples():
    assert rot(power(HALF_TWIST_CUBE, 4)) == 1
    assert rot(W25) == Fraction(1, 2)
    for m in range(0, 12):
        assert rot(family_word(2, m)) == Fraction(1, 2)


def test_theorem_lk():
    assert linking_number(W25) == 2 and 12 * rot(W25) + phi(W25) == 2
    assert verify_theorem_lk(BraidWord.identity(3))
    rng = random.Random(22)
    for _ in range(1500):
        assert verify_theorem_lk(random_word(rng, 3, 40))


def test_periodic_lift_enumeration():
    # The least right-veering periodic lifts and their matrices.
    a1 = parse_braid("1 2 1", 3)
    a2 = parse_braid("1 2", 3)
    a3 = parse_braid("1 2 1 2", 3)
    assert project_b3(a1) == SL2Matrix(0, 1, -1, 0)
    assert project_b3(a2) == SL2Matrix(1, 1, -1, 0)
    assert project_b3(a3) == SL2Matrix(0, 1, -1, -1)
    assert [linking_number(a) for a in (a1, a2, a3)] == [3, 2, 4]
    z = power(HALF_TWIST_CUBE, 2)
    for a in (a1, a2, a3):
        assert classify(project_b3(a)) is Classification.PERIODIC
        for k in range(3):
            lifted = concat(a, power(z, k))
            assert linking_number(lifted) > 0
            assert right_veering(lifted).value == "yes"
        dropped = concat(a, power(z, -1))
        assert linking_number(dropped) < 0
        assert right_veering(dropped).value == "no"


def test_right_veering_examples():
    assert right_veering(W25).value == "yes"
    assert right_veering(parse_braid("1 2", 3)).value == "yes"
    v = right_veering(parse_braid("-1", 3))
    assert v.value == "no"
    assert v.certificate["n"] == 0 and v.certificate["m"] == -1
    assert right_veering(BraidWord.identity(3)).value == "yes"


def test_right_veering_reducible_family():
    # (s1 s2 s1)^2 s1^-m is reducible about slope infinity with n = 1:
    # right-veering for every m, yet not quasipositive once m >= 5, so the
    # family exhibits the gap between the two monoids.
    for m in (5, 9, 30):
        b = family_word(2, m)
        assert classify(project_b3(b)) is Classification.REDUCIBLE
        v = right_veering(b)
        assert v.value == "yes"
        assert v.certificate["n"] == 1 and v.certificate["m"] == -m
        assert quasipositive_verdict(b).value == "no"


def test_right_veering_unknown_band_exists_and_is_reported():
    rng = random.Random(23)
    values = {"yes": 0, "no": 0, "unknown": 0}
    for _ in range(600):
        b = random_word(rng, 3, 12)
        v = right_veering(b)
        values[v.value] += 1
        assert check_right_veering_certificate(b, v)
        if v.value == "unknown":
            assert rot(b) < Fraction(1, 2)
            from veerlab.braid import invert

            assert rot(invert(b)) < Fraction(1, 2)
    assert values["yes"] and values["no"] and values["unknown"]


def test_quasipositive_family():
    for m in range(5, 51):
        v = quasipositive_verdict(family_word(2, m))
        assert v.value == "no", m
        assert check_quasipositive_certificate(family_word(2, m), v)
    # The Rademacher obstruction itself is what makes them non-quasipositive.
    for m in range(5, 51):
        b = family_word(2, m)
        assert -phi(b) >= 10 * rot(b)
    for m in range(0, 5):
        witness = PAPER_WITNESS_M4 + [((), 1)] * (4 - m)
        v = quasipositive_verdict(family_word(2, m), witness=witness)
        assert v.value == "yes"
        assert check_quasipositive_certificate(family_word(2, m), v)


def test_quasipositive_w25_certificate():
    v = quasipositive_verdict(W25)
    assert v.value == "no"
    assert v.certificate["obstruction"] == "lk2_word_equations"
    assert v.certificate["W"] == "LLLLRLRL"
    assert check_quasipositive_certificate(W25, v)


def test_quasipositive_lk_obstructions():
    assert quasipositive_verdict(parse_braid("-1", 3)).value == "no"
    v = quasipositive_verdict(parse_braid("1 -2", 3))
    assert v.value == "no" and v.certificate["obstruction"] == "lk_zero_nontrivial"
    assert quasipositive_verdict(parse_braid("1 -1", 3)).value == "yes"
    # lk obstructions also fire for other strand counts.
    assert quasipositive_verdict(parse_braid("-3", 5)).value == "no"
    v = quasipositive_verdict(parse_braid("1 -2", 5))
    assert v.value == "no"
    assert v.certificate["certified_by"] == "burau_at_minus_one"
    assert quasipositive_verdict(parse_braid("1 3 2", 5)).value == "yes"


def test_quasipositive_bad_witness_rejected():
    with pytest.raises(ValueError):
        quasipositive_verdict(parse_braid("1", 3), witness=[((), 2)])


def test_monoid_coherence():
    # Products of witnessed-quasipositive words never come back "no".
    rng = random.Random(24)
    for _ in range(60):
        witness_a = [
            (tuple(rng.choice([1, -1, 2, -2]) for _ in range(rng.randrange(0, 4))),
             rng.choice([1, 2]))
            for _ in range(rng.randrange(1, 4))
        ]
        witness_b = [
            (tuple(rng.choice([1, -1, 2, -2]) for _ in range(rng.randrange(0, 4))),
             rng.choice([1, 2]))
            for _ in range(rng.randrange(1, 4))
        ]
        from veerlab.torus import _witness_product

        a = _witness_product(3, witness_a)
        b = _witness_product(3, witness_b)
        assert quasipositive_verdict(a, witness=witness_a).value == "yes"
        assert quasipositive_verdict(b, witness=witness_b).value == "yes"
        combined = quasipositive_verdict(concat(a, b), witness=witness_a + witness_b)
        assert combined.value == "yes"
        assert quasipositive_verdict(concat(a, b)).value != "no"


def test_dehn_twist_delta_examples():
    assert dehn_twist_delta(BraidWord.identity(3), parse_braid("1", 3)) == (
        1, Fraction(0), 1,
    )
    allowed = {(1, Fraction(0), 1), (1, Fraction(1, 4), -2), (1, Fraction(1, 2), -5)}
    allowed_id = {(1, Fraction(0), 1), (1, Fraction(1, 4), -2)}
    rng = random.Random(25)
    seen = set()
    for _ in range(400):
        twist = conjugate(BraidWord(3, (1,)), random_word(rng, 3, 10))
        bprime = random_word(rng, 3, 14)
        t = dehn_twist_delta(bprime, twist)
        assert t in allowed
        seen.add(t)
        assert dehn_twist_delta(BraidWord.identity(3), twist) in allowed_id
    assert seen == allowed  # all three triples actually occur


def test_psi_frontier_examples():
    assert psi_frontier(5) == 3
    assert psi_frontier(4) == 2
    assert psi_frontier(0) == 1
    report = family_psi_check(5)
    assert report["ok"]
    assert [row["fires"] for row in report["rows"]] == [True, True, True, False]
    assert family_psi_check(0)["rows"][0]["fires"] is False
    for m in range(0, 26):
        assert family_psi_check(m)["ok"], m


def test_lk2_frontier_on_real_braids():
    # Random braids with lk = 2 and rot = 1/2: the turn-word certificate
    # must match the brute-force family decider, and a fired certificate
    # must surface as a "no" verdict.
    from fractions import Fraction as F

    from test_farey import brute_force_families
    from veerlab import farey
    from veerlab.modular import PSL2Element

    rng = random.Random(27)
    found = {"yes": 0, "no": 0}
    tries = 0
    while sum(found.values()) < 40 and tries < 120_000:
        tries += 1
        w = random_word(rng, 3, 14)
        if linking_number(w) != 2 or rot(w) != F(1, 2):
            continue
        tw = farey.turn_word(PSL2Element(project_b3(w)))
        if len(tw) > 10:
            continue
        verdict = farey.lk2_nonqp_certificate(tw)
        brute = brute_force_families(tw)
        assert (verdict.value == "no") == (brute is not None), (tw, brute)
        if verdict.value == "yes":
            assert quasipositive_verdict(w).value == "no"
        found[verdict.value] += 1
    assert found["no"] > 0


def test_central_shift():
    z = power(HALF_TWIST_CUBE, 2)
    rng = random.Random(26)
    for _ in range(300):
        b = random_word(rng, 3, 20)
        assert rot(concat(z, b)) == rot(b) + Fraction(1, 2)
        assert phi(concat(z, b)) == phi(b)


def test_strands_guard():
    with pytest.raises(ValueError):
        rot(parse_braid("1", 4))
    with pytest.raises(ValueError):
        right_veering(parse_braid("1", 4))
