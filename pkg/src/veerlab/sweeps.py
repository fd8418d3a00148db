"""Seeded randomized property suites.

Each suite returns a dict with the count, the number of failures, and a
few failed examples (never silently dropped).  The CLI sweep command and
the acceptance tests both run these, so a violation found anywhere is
reproducible from its seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from veerlab import burau, farey, linalg, linkinv, symplectic, torus
from veerlab import _core, _pure
from veerlab.braid import BraidWord, concat, conjugate
from veerlab.modular import (
    PSL2Element,
    SL2Matrix,
    normal_form,
    rademacher,
)

__all__ = ["SUITES", "run_suite", "random_word", "random_psl"]


def random_word(rng: random.Random, strands: int, max_len: int) -> BraidWord:
    gens = [k for k in range(-(strands - 1), strands) if k != 0]
    return BraidWord(
        strands, tuple(rng.choice(gens) for _ in range(rng.randrange(0, max_len + 1)))
    )


def random_psl(rng: random.Random, max_len: int) -> PSL2Element:
    a = SL2Matrix(0, 1, -1, 0)
    b = SL2Matrix(1, -1, 1, 0)
    choices = [a, b, b.inverse()]
    m = SL2Matrix(1, 0, 0, 1)
    for _ in range(rng.randrange(0, max_len + 1)):
        m = m * rng.choice(choices)
    return PSL2Element(m)


def _result(name: str, count: int, seed: int, failures: list) -> dict:
    return {
        "suite": name,
        "count": count,
        "seed": seed,
        "failures": len(failures),
        "failed_examples": failures[:5],
    }


def suite_theorem_lk(count: int, seed: int) -> dict:
    """lk = 12 rot + Phi on random 3-braids of length <= 40."""
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        w = random_word(rng, 3, 40)
        if not torus.verify_theorem_lk(w):
            failures.append(str(w))
    return _result("theorem-lk", count, seed, failures)


def suite_rademacher(count: int, seed: int) -> dict:
    """Normal-form Phi equals turn-count Phi; normal form round-trips."""
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        g = random_psl(rng, 60)
        nf = normal_form(g)
        ok = nf.to_psl() == g and rademacher(g) == farey.rademacher_turns(g)
        if not ok:
            failures.append(str(g.rep))
    return _result("rademacher", count, seed, failures)


def suite_kernel_twins(count: int, seed: int) -> dict:
    """Compiled kernels agree with the pure reference implementations."""
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        g = random_psl(rng, 50)
        e = g.rep.entries()
        w = random_word(rng, 3, 30)
        ok = (
            _core.nf_exponents(*e) == _pure.nf_exponents(*e)
            and _core.turn_letters(*e) == _pure.turn_letters(*e)
            and _core.word_matrix(w.letters) == _pure.word_matrix(w.letters)
        )
        if not ok:
            failures.append(str(e))
    return _result("kernel-twins", count, seed, failures)


def suite_quasimorphism(count: int, seed: int) -> dict:
    """|Phi(gh) - Phi(g) - Phi(h)| <= 3 on random pairs."""
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        g = random_psl(rng, 40)
        h = random_psl(rng, 40)
        defect = abs(rademacher(g * h) - rademacher(g) - rademacher(h))
        if defect > 3:
            failures.append({"g": str(g.rep), "h": str(h.rep), "defect": defect})
    return _result("quasimorphism", count, seed, failures)


def suite_dehn_deltas(count: int, seed: int) -> dict:
    """Twist deltas land in the allowed triples, two for trivial starts."""
    rng = random.Random(seed)
    allowed = {(1, Fraction(0), 1), (1, Fraction(1, 4), -2), (1, Fraction(1, 2), -5)}
    allowed_id = {(1, Fraction(0), 1), (1, Fraction(1, 4), -2)}
    failures = []
    for _ in range(count):
        twist = conjugate(BraidWord(3, (1,)), random_word(rng, 3, 10))
        bprime = random_word(rng, 3, 14)
        if torus.dehn_twist_delta(bprime, twist) not in allowed:
            failures.append({"bprime": str(bprime), "twist": str(twist)})
        if torus.dehn_twist_delta(BraidWord.identity(3), twist) not in allowed_id:
            failures.append({"bprime": "", "twist": str(twist)})
    return _result("dehn-deltas", count, seed, failures)


def suite_cochain(count: int, seed: int) -> dict:
    """delta Phi = -12 delta rot on random pairs of 3-braids."""
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        a = random_word(rng, 3, 20)
        b = random_word(rng, 3, 20)
        lhs = torus.phi(a) + torus.phi(b) - torus.phi(concat(a, b))
        rhs = -12 * (torus.rot(a) + torus.rot(b) - torus.rot(concat(a, b)))
        if lhs != rhs:
            failures.append({"a": str(a), "b": str(b)})
    return _result("cochain", count, seed, failures)


def suite_signatures(count: int, seed: int) -> dict:
    """Seifert oracle equals the Meyer-cocycle engine on random closures."""
    rng = random.Random(seed)
    failures = []
    for i in range(count):
        strands = 3 if i % 2 == 0 else 5
        w = random_word(rng, strands, 12)
        if linkinv.seifert_signature(w) != linkinv.meyer_signature(w):
            failures.append({"strands": strands, "word": str(w)})
    return _result("signatures", count, seed, failures)


def suite_sign_maslov(count: int, seed: int) -> dict:
    """sign = -lk + 2 mu on random words in B_3 and B_5."""
    rng = random.Random(seed)
    failures = []
    for i in range(count):
        strands = 3 if i % 2 == 0 else 5
        w = random_word(rng, strands, 12 if strands == 3 else 10)
        report = linkinv.verify_sign_maslov(w)
        if not report["equal"]:
            failures.append(report)
    return _result("sign-maslov", count, seed, failures)


def suite_eq_signature(count: int, seed: int) -> dict:
    """sign(ab) = sign(a) + sign(b) - Meyer on random pairs."""
    rng = random.Random(seed)
    failures = []
    for i in range(count):
        strands = 3 if i % 2 == 0 else 5
        a = random_word(rng, strands, 10)
        b = random_word(rng, strands, 10)
        report = linkinv.verify_eq_signature(a, b)
        if not report["equal"]:
            failures.append({"a": str(a), "b": str(b), **report})
    return _result("eq-signature", count, seed, failures)


def suite_meyer_cocycle(count: int, seed: int) -> dict:
    """Meyer(g1,g2) + Meyer(g1g2,g3) = Meyer(g2,g3) + Meyer(g1,g2g3)."""
    rng = random.Random(seed)
    failures = []
    for i in range(count):
        strands = 3 if i % 2 == 0 else 5
        space = burau.symplectic_space(strands)
        gs = [
            linalg.frac_matrix(burau.burau_matrix(random_word(rng, strands, 8)))
            for _ in range(3)
        ]
        g12 = linalg.mat_mul(gs[0], gs[1])
        g23 = linalg.mat_mul(gs[1], gs[2])
        lhs = symplectic.meyer(space, gs[0], gs[1]) + symplectic.meyer(space, g12, gs[2])
        rhs = symplectic.meyer(space, gs[1], gs[2]) + symplectic.meyer(space, gs[0], g23)
        if lhs != rhs:
            failures.append({"strands": strands})
    return _result("meyer-cocycle", count, seed, failures)


def suite_gg_remark(count: int, seed: int) -> dict:
    """3 sign + 2 lk = -Phi_class on Anosov 3-braids; violations reported."""
    rng = random.Random(seed)
    failures = []
    done = 0
    while done < count:
        w = random_word(rng, 3, 16)
        try:
            report = linkinv.gg_remark_check(w)
        except ValueError:
            continue
        done += 1
        if not report["equal"]:
            failures.append(report)
    return _result("gg-remark", count, seed, failures)


def _random_symplectic(n: int, rng: random.Random) -> linalg.Matrix:
    """A random element of Sp(2n, Q): products of shears and the J swap."""
    space = symplectic.SymplecticSpace.standard(n)
    g = linalg.identity(2 * n)
    for _ in range(rng.randrange(2, 6)):
        s = linalg.zeros(n, n)
        for i in range(n):
            for j in range(i, n):
                s[i][j] = s[j][i] = Fraction(rng.randint(-2, 2))
        shear = linalg.identity(2 * n)
        upper = rng.random() < 0.5
        for i in range(n):
            for j in range(n):
                if upper:
                    shear[i][n + j] = s[i][j]
                else:
                    shear[n + i][j] = s[i][j]
        g = linalg.mat_mul(g, shear)
        if rng.random() < 0.4:
            g = linalg.mat_mul(g, space.form_matrix())
    assert space.is_symplectic_matrix(g)
    return g


def _random_transverse_triple(n: int, rng: random.Random):
    """(space, L1, L2, L3, U1, U2, A): a mutually transverse triple with
    its adapted frames, as psi-images of the model ({y=0}, {x=0}, {y=Ax})."""
    space = symplectic.SymplecticSpace.standard(n)
    while True:
        a = linalg.zeros(n, n)
        for i in range(n):
            for j in range(i, n):
                a[i][j] = a[j][i] = Fraction(rng.randint(-3, 3))
        if linalg.det(a) != 0:
            break
    psi = _random_symplectic(n, rng)
    u1 = linalg.mat_mul(psi, linalg.vstack(linalg.identity(n), linalg.zeros(n, n)))
    u2 = linalg.mat_mul(psi, linalg.vstack(linalg.zeros(n, n), linalg.identity(n)))
    l1 = symplectic.frame(space, u1)
    l2 = symplectic.frame(space, u2)
    l3 = symplectic.frame(space, linalg.mat_add(u1, linalg.mat_mul(u2, a)))
    return space, l1, l2, l3, u1, u2, a


def suite_ternary_lemma(count: int, seed: int) -> dict:
    """I(L1,L2,L3) = 2(mu_12 + mu_23 + mu_31) with chart-line paths, and
    the two definitions of I agree, in dimensions 2 and 4."""
    rng = random.Random(seed)
    failures = []
    for i in range(count):
        n = 1 if i % 2 == 0 else 2
        space, l1, l2, l3, u1, u2, a = _random_transverse_triple(n, rng)
        a_inv = linalg.inverse(a)
        seg13 = _line_segment(u1, linalg.mat_mul(u2, a))
        seg23 = _line_segment(u2, linalg.mat_mul(u1, a_inv))
        g13 = symplectic.LagrangianPath(space, (seg13,))
        g23 = symplectic.LagrangianPath(space, (seg23,))
        g12 = g13.concat(g23.reversed())
        g31 = g13.reversed()
        i_direct = symplectic.ternary_index(l1, l2, l3)
        i_kernel = symplectic.ternary_index_kernel(l1, l2, l3)
        total = 2 * (
            symplectic.maslov_index(g12, l1)
            + symplectic.maslov_index(g23, l2)
            + symplectic.maslov_index(g31, l3)
        )
        if not (i_direct == i_kernel == total):
            failures.append({"n": n, "I": i_direct, "I_kernel": i_kernel, "mu_sum": str(total)})
    return _result("ternary-lemma", count, seed, failures)


def _line_segment(base: linalg.Matrix, direction: linalg.Matrix):
    """Polynomial frame base + t * direction."""
    from veerlab import poly as P

    return [
        [P.poly([xb, xd]) for xb, xd in zip(rb, rd)]
        for rb, rd in zip(base, direction)
    ]


SUITES = {
    "theorem-lk": suite_theorem_lk,
    "rademacher": suite_rademacher,
    "kernel-twins": suite_kernel_twins,
    "quasimorphism": suite_quasimorphism,
    "dehn-deltas": suite_dehn_deltas,
    "cochain": suite_cochain,
    "signatures": suite_signatures,
    "sign-maslov": suite_sign_maslov,
    "eq-signature": suite_eq_signature,
    "meyer-cocycle": suite_meyer_cocycle,
    "gg-remark": suite_gg_remark,
    "ternary-lemma": suite_ternary_lemma,
}


def run_suite(name: str, count: int, seed: int) -> dict:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](count, seed)
