import random

import pytest

from veerlab import _core, _pure
from veerlab.sweeps import random_psl, random_word


def test_backends_agree():
    rng = random.Random(61)
    for _ in range(1500):
        g = random_psl(rng, 50)
        entries = g.rep.entries()
        assert _core.nf_exponents(*entries) == _pure.nf_exponents(*entries)
        assert _core.turn_letters(*entries) == _pure.turn_letters(*entries)
        w = random_word(rng, 3, 35)
        assert _core.word_matrix(w.letters) == _pure.word_matrix(w.letters)


def test_fallback_on_large_parabolic():
    # Beyond the compiled syllable cap but still materializable.
    big = (1, 0, 200_001, 1)
    r = _core.nf_exponents(*big)
    assert r == _pure.nf_exponents(*big)
    assert len(r) == 200_002 and sum(r) == -200_001


def test_fallback_on_huge_entries():
    # Entries far beyond int64 with a moderate normal form: a high power
    # of the hyperbolic element B A B^-1 A.
    a, b, c, d = 1, 0, 0, 1
    for _ in range(80):
        # multiply by [[2, 1], [1, 1]] (the matrix of B A B^-1 A)
        a, b, c, d = 2 * a + b, a + b, 2 * c + d, c + d
    assert max(abs(x) for x in (a, b, c, d)) > 2**63
    assert _core.nf_exponents(a, b, c, d) == _pure.nf_exponents(a, b, c, d)
    assert _core.turn_letters(a, b, c, d) == _pure.turn_letters(a, b, c, d)


def test_pure_guards():
    with pytest.raises(ValueError):
        _pure.nf_exponents(1, 0, 0, 2)
    with pytest.raises(ValueError):
        _pure.turn_letters(1, 1, 1, 1)
    with pytest.raises(ValueError):
        _pure.word_matrix([3])
    with pytest.raises(ValueError):
        _pure.nf_exponents(1, 0, 5_000_000, 1)  # oversized output refused


def test_speedups_present_in_this_build():
    # The compiled extension is part of the build; the pure path stays
    # available behind VEERLAB_PURE=1.
    assert _core.USING_SPEEDUPS or "VEERLAB_PURE" in __import__("os").environ
