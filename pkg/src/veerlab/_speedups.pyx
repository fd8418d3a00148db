# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled twins of the kernels in ``veerlab._pure``.

Same algorithms, machine integers.  Every arithmetic step is guarded; on any
risk of int64 overflow (or an oversized normal form) the function raises
OverflowError and the selector in ``veerlab._core`` reruns the pure version.
"""

from libc.stdint cimport int64_t

cdef int64_t _LIMIT = <int64_t>1 << 62


cdef inline int64_t _checked_mul(int64_t x, int64_t y) except? -9999:
    if x != 0 and (y > _LIMIT // (x if x > 0 else -x) or
                   y < -(_LIMIT // (x if x > 0 else -x))):
        raise OverflowError
    return x * y


cdef inline int64_t _checked_add(int64_t x, int64_t y) except? -9999:
    if (y > 0 and x > _LIMIT - y) or (y < 0 and x < -_LIMIT - y):
        raise OverflowError
    return x + y


cdef inline int _sign(int64_t x) noexcept:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def word_matrix(letters):
    """Product of the SL(2,Z) images of a B_3 word, in word order."""
    cdef int64_t a = 1, b = 0, c = 0, d = 1
    cdef int64_t na, nb, nc, nd
    cdef int letter
    for letter in letters:
        if letter == 1:      # (1, 0, -1, 1)
            na = _checked_add(a, -b)
            nc = _checked_add(c, -d)
            a, b, c, d = na, b, nc, d
        elif letter == -1:   # (1, 0, 1, 1)
            na = _checked_add(a, b)
            nc = _checked_add(c, d)
            a, b, c, d = na, b, nc, d
        elif letter == 2:    # (1, 1, 0, 1)
            nb = _checked_add(b, a)
            nd = _checked_add(d, c)
            a, b, c, d = a, nb, c, nd
        elif letter == -2:   # (1, -1, 0, 1)
            nb = _checked_add(b, -a)
            nd = _checked_add(d, -c)
            a, b, c, d = a, nb, c, nd
        else:
            raise ValueError(f"letter {letter!r} is not in {{1, -1, 2, -2}}")
    return (int(a), int(b), int(c), int(d))


def nf_exponents(long long a, long long b, long long c, long long d):
    """Normal-form exponents; see ``veerlab._pure.nf_exponents``."""
    cdef int64_t det = _checked_add(_checked_mul(a, d), -_checked_mul(b, c))
    if det != 1:
        raise ValueError("matrix is not in SL(2,Z)")
    cdef int64_t q, na, nb
    cdef list qs = []
    cdef int64_t total = 0
    while c != 0:
        q = a // c
        if q > 100000 or q < -100000:
            raise OverflowError  # normal form too long for the fast path
        na = a - _checked_mul(q, c)
        nb = _checked_add(b, -_checked_mul(q, d))
        a, b = na, nb
        a, b, c, d = -c, -d, a, b
        qs.append(q)
        total += q if q > 0 else -q
        if total > 100000:
            raise OverflowError
    cdef int64_t t_last = _checked_mul(a, b)
    if t_last > 100000 or t_last < -100000:
        raise OverflowError
    # Letter stream (0 = A, +-1 = B^{+-1}): T^q -> (B A)^q or (A B^-1)^|q|,
    # S -> A, followed by the trailing T power.
    cdef list stream = []
    cdef int64_t e
    for q in qs:
        e = q
        while e > 0:
            stream.append(1)
            stream.append(0)
            e -= 1
        while e < 0:
            stream.append(0)
            stream.append(-1)
            e += 1
        stream.append(0)
    e = t_last
    while e > 0:
        stream.append(1)
        stream.append(0)
        e -= 1
    while e < 0:
        stream.append(0)
        stream.append(-1)
        e += 1

    # Reduce in Z/2 * Z/3 with a syllable stack (kind 0 = A, 1 = B^exp).
    cdef Py_ssize_t cap = len(stream) + 1
    cdef list kinds = [0] * cap
    cdef list exps = [0] * cap
    cdef Py_ssize_t top = 0
    cdef int kind
    cdef int64_t letter, s
    for letter in stream:
        kind = 0 if letter == 0 else 1
        if top > 0 and kinds[top - 1] == kind:
            if kind == 0:
                top -= 1
            else:
                s = exps[top - 1] + letter
                s = (s + 1) % 3 - 1
                if s == 0:
                    top -= 1
                else:
                    exps[top - 1] = s
        else:
            kinds[top] = kind
            exps[top] = letter
            top += 1

    # Convert the alternating syllables to the B-exponent encoding.
    cdef list out = []
    cdef Py_ssize_t i = 0
    if top == 0:
        return out
    if kinds[0] == 1:
        out.append(int(exps[0]))
        i = 1
    else:
        out.append(0)
    while i < top:
        if i + 1 < top:
            out.append(int(exps[i + 1]))
            i += 2
        else:
            out.append(0)
            i += 1
    return out


cdef inline int64_t _det4(int64_t xq, int64_t xp, int64_t yq, int64_t yp) except? -9999:
    return _checked_add(_checked_mul(xq, yp), -_checked_mul(xp, yq))


def turn_letters(long long a, long long b, long long c, long long d):
    """Dual-tree geodesic turns; see ``veerlab._pure.turn_letters``."""
    if _checked_add(_checked_mul(a, d), -_checked_mul(b, c)) != 1:
        raise ValueError("matrix is not in SL(2,Z)")
    cdef int64_t sq = 1, sp = 0, tq = 0, tp = 1
    cdef int64_t uq = a, up = c, vq = b, vp = d
    cdef int64_t su, sv, tu, tv, sw, tw, mq, mp
    cdef int64_t w1q, w1p, du_s, du_m, dv_s, dv_m, du_t, dv_t
    cdef int o_w1, o_t
    cdef bint take_right
    cdef list letters = []
    while True:
        su = _det4(sq, sp, uq, up)
        sv = _det4(sq, sp, vq, vp)
        tu = _det4(tq, tp, uq, up)
        tv = _det4(tq, tp, vq, vp)
        if (su == 0 and tv == 0) or (sv == 0 and tu == 0):
            break
        if su != 0 and tu != 0:
            sw, tw = su, tu
        else:
            sw, tw = sv, tv
        if _sign(sw) * _sign(tw) == 1:
            sq, sp, tq, tp = -tq, -tp, sq, sp
            continue
        mq = _checked_add(sq, tq)
        mp = _checked_add(sp, tp)
        du_s = _det4(uq, up, sq, sp)
        du_m = _det4(uq, up, mq, mp)
        dv_s = _det4(vq, vp, sq, sp)
        dv_m = _det4(vq, vp, mq, mp)
        if (du_s == 0 and dv_m == 0) or (dv_s == 0 and du_m == 0):
            take_right = True
        else:
            du_t = _det4(uq, up, tq, tp)
            dv_t = _det4(vq, vp, tq, tp)
            if (du_t == 0 and dv_m == 0) or (dv_t == 0 and du_m == 0):
                take_right = False
            else:
                if du_s != 0 and du_m != 0:
                    w1q, w1p = uq, up
                else:
                    w1q, w1p = vq, vp
                o_w1 = (_sign(_det4(sq, sp, w1q, w1p))
                        * _sign(_det4(w1q, w1p, mq, mp)))
                o_t = (_sign(_det4(sq, sp, tq, tp))
                       * _sign(_det4(tq, tp, mq, mp)))
                take_right = o_w1 != o_t
        if take_right:
            letters.append("R")
            sq, sp, tq, tp = mq, mp, -sq, -sp
        else:
            letters.append("L")
            sq, sp, tq, tp = -tq, -tp, mq, mp
    return "".join(letters)
