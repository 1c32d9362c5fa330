"""Stabilized product families: solving a*x = b inside the cyclically
reduced monoid in infinitely many ways.

find_stabilizing_conjugator produces a short word s (at most two letters)
such that u s^n w s^-n stays cyclically reduced for every n >= 1.  The
correctness conditions are purely local: the first letter of s must avoid
first(u) and last(u)^-1, the last letter must avoid first(w)^-1 and last(w),
and s itself must be cyclically reduced.  The case analysis below picks the
least admissible letter (or two-letter word) meeting them.

latin_pairs turns that into the family v_n = u^-1 s^n w s^-n: each v_n is
cyclically reduced, its rotation v'_n = s^n w s^-n u^-1 satisfies
cyc_product(u, v_n) = cyc_product(v'_n, u) = the cyclically reduced form of
w, and lengths grow strictly with n, so the pairs are pairwise distinct.
"""

from typing import List, NamedTuple

from .words import (Letter, Word, concat, inverse, is_cyclically_reduced,
                    is_reduced, power, rotate)


class LatinPair(NamedTuple):
    v: Word
    v_prime: Word
    n: int


def _letters_in_order(alphabet):
    for g in range(len(alphabet.generators)):
        yield Letter(g, 1)
        yield Letter(g, -1)


def _least_letter_avoiding(alphabet, excluded):
    for let in _letters_in_order(alphabet):
        if let not in excluded:
            return let
    raise ValueError("no admissible letter exists")


def _check_inputs(u, w):
    if u.alphabet != w.alphabet:
        raise ValueError("alphabet mismatch")
    if len(u.alphabet.generators) < 2:
        raise ValueError("at least two generators are required")
    if not u.letters or not w.letters:
        raise ValueError("u and w must be non-empty")
    if not is_reduced(u) or not is_reduced(w):
        raise ValueError("u and w must be reduced")


def find_stabilizing_conjugator(u: Word, w: Word) -> Word:
    """A cyclically reduced s with |s| <= 2 such that u s^n w s^-n is
    cyclically reduced for all n >= 1."""
    _check_inputs(u, w)
    ab = u.alphabet
    a, b = u.letters[0], u.letters[-1]
    c, d = w.letters[0], w.letters[-1]
    if is_cyclically_reduced(u):
        if a == b:
            x = _least_letter_avoiding(ab, {a, a.inverse()})
            if x != c.inverse() and x != d:
                return Word(ab, (x,))
            if x == c.inverse():
                if x != d.inverse():
                    return Word(ab, (x.inverse(),))
                return Word(ab, (x, a.inverse()))
            if x != c:
                return Word(ab, (x.inverse(),))
            return Word(ab, (x.inverse(), a.inverse()))
        if b != c.inverse() and b != d:
            return Word(ab, (b,))
        if b == c.inverse():
            if a != d.inverse():
                return Word(ab, (a.inverse(),))
            return Word(ab, (b, a))
        if a != c:
            return Word(ab, (a.inverse(),))
        return Word(ab, (b, a))
    if is_cyclically_reduced(w):
        return inverse(find_stabilizing_conjugator(w, u))
    # neither is cyclically reduced, so b = a^-1 and d = c^-1; any letter
    # clear of a and c^-1 meets all the border conditions at once
    g = _least_letter_avoiding(ab, {a, c.inverse()})
    return Word(ab, (g,))


def latin_pairs(u: Word, w: Word, count: int) -> List[LatinPair]:
    """The first `count` members of the family v_n = u^-1 s^n w s^-n."""
    _check_inputs(u, w)
    if not isinstance(count, int) or count < 0:
        raise ValueError("count must be a natural number")
    s = find_stabilizing_conjugator(inverse(u), w)
    ui = inverse(u)
    out = []
    for n in range(1, count + 1):
        sn = power(s, n)
        v = concat(concat(ui, sn), concat(w, inverse(sn)))
        out.append(LatinPair(v, rotate(v, len(u)), n))
    return out
