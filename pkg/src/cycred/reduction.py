"""Reduced and cyclically reduced forms, their products, and position traces.

rho(w) removes adjacent mutually inverse letter pairs until none remain; the
result does not depend on removal order.  rho_hat(w) additionally strips
mutually inverse first/last letters, so rho(w) = t rho_hat(w) t^-1 holds as
an exact concatenation for a unique prefix t.  Both products normalize a
plain concatenation: reduced_product(u, v) = rho(uv) and
cyc_product(u, v) = rho_hat(uv).

Every normalization is witnessed by a CancellationTrace: an ordered list of
events pairing positions of the original word.  An event is internal when
the two positions were adjacent among surviving positions at the moment of
removal, external when they were the outermost surviving positions.  Traces
replay against the original word with full validity checking, and they
rotate: positions are shifted modulo the length and the events re-sequenced
by a fixed scheduler, because a pair that is internal for uv may be external
for vu and vice versa.

cancel_any_order removes one eligible pair at a time in an order picked by a
named policy or a seeded RNG; the residual is always a cyclic rotation of
rho_hat(w), which the arbitrary-order tests exercise heavily.
"""

import random
from typing import NamedTuple, Tuple, Union

from .words import Word, concat, is_reduced


class CancellationEvent(NamedTuple):
    left_pos: int
    right_pos: int
    kind: str  # "internal" or "external"


class CancellationTrace(NamedTuple):
    original_length: int
    events: Tuple[CancellationEvent, ...]


class CycRedDecomposition(NamedTuple):
    conjugator: Word
    core: Word


class MaxCancellation(NamedTuple):
    u1: Word
    a: Word
    v1: Word


def _reduce_stack(w):
    stack = []  # (letter, original position)
    events = []
    for pos, letter in enumerate(w.letters):
        if stack and stack[-1][0] == letter.inverse():
            events.append(CancellationEvent(stack.pop()[1], pos, "internal"))
        else:
            stack.append((letter, pos))
    return stack, events


def reduce(w: Word):
    """rho(w) together with the (internal-only) trace that produced it."""
    stack, events = _reduce_stack(w)
    out = Word(w.alphabet, tuple(l for l, _ in stack))
    return out, CancellationTrace(len(w.letters), tuple(events))


def cyc_reduce(w: Word):
    """The decomposition rho(w) = t core t^-1 with core cyclically reduced,
    plus the trace extending reduce's by one external event per letter of t."""
    stack, events = _reduce_stack(w)
    lo, hi = 0, len(stack)
    while hi - lo >= 2 and stack[lo][0] == stack[hi - 1][0].inverse():
        events.append(CancellationEvent(stack[lo][1], stack[hi - 1][1], "external"))
        lo += 1
        hi -= 1
    conjugator = Word(w.alphabet, tuple(l for l, _ in stack[:lo]))
    core = Word(w.alphabet, tuple(l for l, _ in stack[lo:hi]))
    return (CycRedDecomposition(conjugator, core),
            CancellationTrace(len(w.letters), tuple(events)))


def reduced_product(u: Word, v: Word) -> Word:
    return reduce(concat(u, v))[0]


def cyc_product(u: Word, v: Word) -> Word:
    return cyc_reduce(concat(u, v))[0].core


def max_cancellation(u: Word, v: Word) -> MaxCancellation:
    """u = u1 a, v = a^-1 v1 with a the longest cancelling block, so that
    rho(uv) = u1 v1 exactly."""
    if not is_reduced(u) or not is_reduced(v):
        raise ValueError("max_cancellation needs reduced inputs")
    # both inputs reduced, so cancellation is confined to the junction
    k = 0
    while k < min(len(u), len(v)) and u.letters[len(u) - 1 - k] == v.letters[k].inverse():
        k += 1
    return MaxCancellation(u[:len(u) - k], u[len(u) - k:], v[k:])


def replay_trace(w: Word, trace: CancellationTrace) -> Word:
    """Apply the events in order, checking each one, and return the residual."""
    n = len(w.letters)
    if trace.original_length != n:
        raise ValueError("trace expects length %d, word has length %d"
                         % (trace.original_length, n))
    nxt = list(range(1, n + 1))
    prv = list(range(-1, n - 1))
    alive = [True] * n
    head, tail = 0, n - 1
    for idx, e in enumerate(trace.events):
        l, r = e.left_pos, e.right_pos
        ok = 0 <= l < r < n and alive[l] and alive[r] \
            and w.letters[l] == w.letters[r].inverse()
        if ok and e.kind == "internal":
            ok = nxt[l] == r
        elif ok and e.kind == "external":
            while head < n and not alive[head]:
                head += 1
            while tail >= 0 and not alive[tail]:
                tail -= 1
            ok = head == l and tail == r
        elif ok:
            ok = False
        if not ok:
            raise ValueError("invalid event %d: (%d, %d, %s)"
                             % (idx, e.left_pos, e.right_pos, e.kind))
        for p in (r, l):
            alive[p] = False
            if prv[p] >= 0:
                nxt[prv[p]] = nxt[p]
            if nxt[p] < n:
                prv[nxt[p]] = prv[p]
    return Word(w.alphabet, tuple(w.letters[i] for i in range(n) if alive[i]))


def _schedule(n, pairs):
    # Re-sequence removal pairs so that each fires as a valid event:
    # innermost (adjacent-among-survivors) first with leftmost tie-break,
    # else the outermost pair as an external event.  Pairs that never become
    # fireable are appended as given; replay will reject them.
    remaining = list(pairs)
    alive = [True] * n
    nxt = list(range(1, n + 1))
    prv = list(range(-1, n - 1))
    head, tail = 0, n - 1
    events = []
    progress = True
    while remaining and progress:
        progress = False
        best = None
        kind = "internal"
        for (l, r) in remaining:
            if nxt[l] == r and (best is None or l < best[0]):
                best = (l, r)
        if best is None:
            while head < n and not alive[head]:
                head += 1
            while tail >= 0 and not alive[tail]:
                tail -= 1
            if (head, tail) in remaining:
                best = (head, tail)
                kind = "external"
        if best is not None:
            remaining.remove(best)
            l, r = best
            for p in (r, l):
                alive[p] = False
                if prv[p] >= 0:
                    nxt[prv[p]] = nxt[p]
                if nxt[p] < n:
                    prv[nxt[p]] = prv[p]
            events.append(CancellationEvent(l, r, kind))
            progress = True
    for (l, r) in remaining:
        events.append(CancellationEvent(l, r, "internal"))
    return tuple(events)


def rotate_trace(trace: CancellationTrace, shift: int) -> CancellationTrace:
    """Shift every position by shift modulo the original length and
    re-sequence; each event's internal/external kind is recomputed."""
    n = trace.original_length
    if n == 0:
        return trace
    pairs = []
    for e in trace.events:
        a = (e.left_pos + shift) % n
        b = (e.right_pos + shift) % n
        pairs.append((min(a, b), max(a, b)))
    return CancellationTrace(n, _schedule(n, pairs))


POLICIES = ("internal-first", "external-first-when-valid",
            "rightmost-internal-first", "alternating")


def cancel_any_order(w: Word, chooser: Union[str, int]):
    """Cancel one eligible pair at a time until none remain.

    chooser is either a policy name from POLICIES or an integer seed for a
    reproducible random order.  Eligible pairs are every adjacent mutually
    inverse pair among the survivors (internal) and the first/last survivor
    pair when mutually inverse and more than two letters survive (external;
    with exactly two survivors the same pair is already internal).
    """
    if isinstance(chooser, bool) or not isinstance(chooser, (str, int)):
        raise ValueError("chooser must be a policy name or an integer seed")
    rng = None
    if isinstance(chooser, int):
        rng = random.Random(chooser)
    elif chooser not in POLICIES:
        raise ValueError("unknown policy %r" % (chooser,))
    alive = list(range(len(w.letters)))
    letters = w.letters
    events = []
    step = 0
    while True:
        cands = []
        for i in range(len(alive) - 1):
            l, r = alive[i], alive[i + 1]
            if letters[l] == letters[r].inverse():
                cands.append(CancellationEvent(l, r, "internal"))
        ext = None
        if len(alive) > 2 and letters[alive[0]] == letters[alive[-1]].inverse():
            ext = CancellationEvent(alive[0], alive[-1], "external")
            cands.append(ext)
        if not cands:
            break
        if rng is not None:
            pick = rng.choice(cands)
        elif chooser == "internal-first":
            pick = cands[0]
        elif chooser == "external-first-when-valid":
            pick = ext if ext is not None else cands[0]
        elif chooser == "rightmost-internal-first":
            internal = [c for c in cands if c.kind == "internal"]
            pick = internal[-1] if internal else ext
        else:  # alternating: even steps prefer internal, odd steps external
            internal = [c for c in cands if c.kind == "internal"]
            if step % 2 == 0:
                pick = internal[0] if internal else ext
            else:
                pick = ext if ext is not None else internal[0]
        events.append(pick)
        alive.remove(pick.left_pos)
        alive.remove(pick.right_pos)
        step += 1
    out = Word(w.alphabet, tuple(letters[i] for i in alive))
    return out, CancellationTrace(len(letters), tuple(events))
