"""SL(2,Z) and PSL(2,Z): projection from B_3, normal forms, the Rademacher
function, trace classification, and conjugacy.

PSL(2,Z) is the free product Z/2 * Z/3 on the classes of

    A = [[0, 1], [-1, 0]],   B = [[1, -1], [1, 0]],

so every element has a unique word B^r1 A B^r2 A ... A B^rk with interior
exponents in {-1, 1} (the two ends may be 0).  The Rademacher function is
the exponent sum of that word; the sign convention is the one where it
counts right turns minus left turns on the Farey tessellation (see
``veerlab.farey`` for the second, independent road).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from veerlab import _core
from veerlab.braid import BraidWord

__all__ = [
    "SL2Matrix",
    "PSL2Element",
    "NormalForm",
    "Classification",
    "SL2_A",
    "SL2_B",
    "SIGMA1_BAR",
    "SIGMA2_BAR",
    "project_b3",
    "classify",
    "normal_form",
    "rademacher",
    "rademacher_class",
    "psl_conjugate",
    "parse_matrix",
]


@dataclass(frozen=True)
class SL2Matrix:
    """An integer matrix [[a, b], [c, d]] with determinant one."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self} is not 1")

    def __mul__(self, other: "SL2Matrix") -> "SL2Matrix":
        return SL2Matrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "SL2Matrix":
        return SL2Matrix(self.d, -self.b, -self.c, self.a)

    def neg(self) -> "SL2Matrix":
        return SL2Matrix(-self.a, -self.b, -self.c, -self.d)

    @property
    def trace(self) -> int:
        return self.a + self.d

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __pow__(self, n: int) -> "SL2Matrix":
        m = self if n >= 0 else self.inverse()
        result = SL2_ID
        for _ in range(abs(n)):
            result = result * m
        return result

    def __str__(self) -> str:
        return f"{self.a} {self.b}; {self.c} {self.d}"

    @classmethod
    def identity(cls) -> "SL2Matrix":
        return SL2_ID


SL2_ID = SL2Matrix(1, 0, 0, 1)
SL2_A = SL2Matrix(0, 1, -1, 0)
SL2_B = SL2Matrix(1, -1, 1, 0)
SIGMA1_BAR = SL2Matrix(1, 0, -1, 1)
SIGMA2_BAR = SL2Matrix(1, 1, 0, 1)


def parse_matrix(text: str) -> SL2Matrix:
    """Parse the 'a b; c d' text format."""
    rows = text.split(";")
    if len(rows) != 2:
        raise ValueError(f"expected 'a b; c d', got {text!r}")
    try:
        (a, b), (c, d) = (tuple(int(t) for t in row.split()) for row in rows)
    except ValueError:
        raise ValueError(f"matrix entries in {text!r} are not integers") from None
    return SL2Matrix(a, b, c, d)


@dataclass(frozen=True)
class PSL2Element:
    """An SL(2,Z) matrix up to sign, canonicalized so the first nonzero
    entry of (a, b, c, d) is positive."""

    rep: SL2Matrix

    def __post_init__(self):
        entries = self.rep.entries()
        for x in entries:
            if x != 0:
                if x < 0:
                    object.__setattr__(self, "rep", self.rep.neg())
                break

    def __mul__(self, other: "PSL2Element") -> "PSL2Element":
        return PSL2Element(self.rep * other.rep)

    def inverse(self) -> "PSL2Element":
        return PSL2Element(self.rep.inverse())

    def is_identity(self) -> bool:
        return self.rep.entries() == (1, 0, 0, 1)


PSL_A = PSL2Element(SL2_A)
PSL_B = PSL2Element(SL2_B)


@dataclass(frozen=True)
class NormalForm:
    """Exponent list r1..rk encoding B^r1 A B^r2 A ... A B^rk."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        r = self.exponents
        for i, e in enumerate(r):
            ok = (1, 0, -1) if i in (0, len(r) - 1) else (1, -1)
            if e not in ok:
                raise ValueError(f"invalid exponent list {r}")

    def to_psl(self) -> PSL2Element:
        """Multiply the encoded word back out."""
        m = SL2_ID
        for i, e in enumerate(self.exponents):
            if i > 0:
                m = m * SL2_A
            if e == 1:
                m = m * SL2_B
            elif e == -1:
                m = m * SL2_B.inverse()
        return PSL2Element(m)


class Classification(enum.Enum):
    PERIODIC = "periodic"
    REDUCIBLE = "reducible"
    ANOSOV = "anosov"


def project_b3(b: BraidWord) -> SL2Matrix:
    """Image of a B_3 word under sigma_i -> sigma_i-bar, in word order."""
    if b.strands != 3:
        raise ValueError("project_b3 needs a word in B_3")
    return SL2Matrix(*_core.word_matrix(b.letters))


def classify(m: SL2Matrix) -> Classification:
    """Trace trichotomy: periodic, reducible, or Anosov."""
    t = abs(m.trace)
    if t < 2 or m.entries() in ((1, 0, 0, 1), (-1, 0, 0, -1)):
        return Classification.PERIODIC
    if t == 2:
        return Classification.REDUCIBLE
    return Classification.ANOSOV


def normal_form(g: PSL2Element) -> NormalForm:
    """The unique Z/2 * Z/3 word of g (Euclidean-algorithm road)."""
    return NormalForm(tuple(_core.nf_exponents(*g.rep.entries())))


def rademacher(g: PSL2Element) -> int:
    """Rademacher function: exponent sum of the normal form.

    Base-edge dependent (a path quantity from the edge 0-inf), hence not a
    class function; see ``rademacher_class`` for the conjugation-invariant
    variant.
    """
    return sum(_core.nf_exponents(*g.rep.entries()))


def rademacher_class(g: PSL2Element) -> int:
    """Conjugation-invariant Rademacher function.

    Exponent sum of the cyclically reduced word; conjugation rotates the
    cyclic word, so the B-exponent multiset and hence the sum is a class
    invariant.  Agrees with ``rademacher`` whenever the normal form is
    already cyclically alternating, but can differ by a multiple of 3
    otherwise.
    """
    sylls = _cyclic_reduce(_syllables(normal_form(g)))
    return sum(e for kind, e in sylls if kind == 1)


def _syllables(nf: NormalForm) -> list[tuple[int, int]]:
    """Alternating (kind, exp) syllables: kind 0 is A, kind 1 is B^exp."""
    sylls: list[tuple[int, int]] = []
    for i, e in enumerate(nf.exponents):
        if i > 0:
            sylls.append((0, 0))
        if e != 0:
            sylls.append((1, e))
    return sylls


def psl_conjugate(g: PSL2Element, h: PSL2Element) -> bool:
    """Conjugacy in PSL(2,Z) via cyclic reduction of the free-product word.

    Cyclically reduced words of syllable length >= 2 are conjugate exactly
    when they are cyclic rotations of each other; the torsion classes
    (syllable length <= 1) reduce to comparing the single syllable, which
    enumerates the classes of A, B, B^-1.
    """
    wg = _cyclic_reduce(_syllables(normal_form(g)))
    wh = _cyclic_reduce(_syllables(normal_form(h)))
    if len(wg) != len(wh):
        return False
    if len(wg) <= 1:
        return wg == wh
    for shift in range(len(wg)):
        if wg[shift:] + wg[:shift] == wh:
            return True
    return False


def _cyclic_reduce(sylls: list[tuple[int, int]]) -> list[tuple[int, int]]:
    sylls = list(sylls)
    while len(sylls) >= 2 and sylls[0][0] == sylls[-1][0]:
        kind, e_last = sylls.pop()
        e_first = sylls[0][1]
        if kind == 0:
            sylls.pop(0)
        else:
            e = (e_last + e_first + 1) % 3 - 1
            if e == 0:
                sylls.pop(0)
            else:
                sylls[0] = (1, e)
    return sylls


def parabolic_fixed_slope(m: SL2Matrix) -> tuple[int, int]:
    """Primitive eigenvector column (q, p) of a reducible matrix."""
    if classify(m) is not Classification.REDUCIBLE:
        raise ValueError("matrix is not reducible")
    sign = 1 if m.trace > 0 else -1
    a, b, c, d = (sign * x for x in m.entries())
    # Solve (M - I)v = 0 for v = (q, p).
    if b != 0 or a != 1:
        q, p = b, 1 - a
    else:
        q, p = 1 - d, c
    if q == 0 and p == 0:  # pragma: no cover - excluded by REDUCIBLE
        raise ValueError("matrix is central")
    g = gcd(abs(q), abs(p))
    q, p = q // g, p // g
    if q < 0 or (q == 0 and p < 0):
        q, p = -q, -p
    return q, p
