"""Length-capped enumeration of the smallest set of cyclically reduced words
containing a seed set and closed under the cyclically reduced product and
under rotation.

The closure is infinite in general, so enumeration is truncated: words
longer than max_len are discarded at birth, and `saturated` means no further
word within the cap can be derived, never that the untruncated closure is
exhausted.  Two dedup conventions are supported: canonical_dedup stores one
canonical rotation per class, otherwise every rotation is materialized.  The
empty word is never stored.

Rounds use semi-naive evaluation: a step multiplies ordered pairs with at
least one factor in the frontier (the words added by the previous round).
Under canonical dedup a class stands for all its rotations, and the product
depends on the actual rotations multiplied, not just their classes, so a
step expands each pair to all rotation pairs.  Pair lists are sorted and
per-pair results merged in list order, which keeps the outcome identical
for any worker count.

With track_provenance, every member carries a sequence of conjugated seed
relators whose product reduces to exactly that member, built alongside the
enumeration; it is dropped by save/load.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import FrozenSet, NamedTuple, Optional

from .words import (Alphabet, Word, canonical_rotation, concat, inverse,
                    is_cyclically_reduced, letter_key, rotate)
from .reduction import cyc_reduce
from .identities import HElement, conjugate
from .syntax import format_compact, parse_compact


class ClosureConfig(NamedTuple):
    max_len: int
    max_rounds: int
    include_inverses: bool = True
    canonical_dedup: bool = True


class ClosureSet(NamedTuple):
    alphabet: Alphabet
    config: ClosureConfig
    members: FrozenSet[Word]
    frontier: FrozenSet[Word]
    rounds_done: int
    saturated: bool
    provenance: Optional[dict] = None


class ContainsResult(NamedTuple):
    found: bool
    over_cap: bool


def _word_key(w):
    return (len(w.letters), tuple(letter_key(l) for l in w.letters))


def _rotation_provenance(base, shift, h):
    if h is None or shift == 0:
        return h
    return conjugate(inverse(base[:shift]), h)


def _reps(core, canonical, h):
    """Stored representatives of core's rotation class, with provenance."""
    if canonical:
        rep, shift = canonical_rotation(core)
        return [(rep, _rotation_provenance(core, shift, h))]
    out = []
    seen = set()
    for k in range(len(core.letters)):
        r = rotate(core, k)
        if r not in seen:
            seen.add(r)
            out.append((r, _rotation_provenance(core, k, h)))
    return out


def _rotations_in_order(w):
    out = []
    seen = set()
    for k in range(len(w.letters)):
        r = rotate(w, k)
        if r not in seen:
            seen.add(r)
            out.append((k, r))
    return out


def seed(relators, config: ClosureConfig, *, track_provenance=False) -> ClosureSet:
    relators = sorted(set(relators), key=_word_key)
    if not relators:
        raise ValueError("relator set is empty")
    if not isinstance(config.max_len, int) or config.max_len < 1:
        raise ValueError("max_len must be at least 1")
    if not isinstance(config.max_rounds, int) or config.max_rounds < 1:
        raise ValueError("max_rounds must be at least 1")
    alphabet = relators[0].alphabet
    for r in relators:
        if r.alphabet != alphabet:
            raise ValueError("relators use differing alphabets")
    sources = []
    for r in relators:
        sources.append(r)
        if config.include_inverses:
            sources.append(inverse(r))
    members = set()
    prov = {} if track_provenance else None
    for src in sources:
        dec, _ = cyc_reduce(src)
        core = dec.core
        if not core.letters or len(core.letters) > config.max_len:
            continue
        h = None
        if track_provenance:
            h = HElement([(inverse(dec.conjugator), src)])
        for rep, hrep in _reps(core, config.canonical_dedup, h):
            if rep not in members:
                members.add(rep)
                if track_provenance:
                    prov[rep] = hrep
    members = frozenset(members)
    return ClosureSet(alphabet, config, members, members, 0, False, prov)


def _pair_products(x, y, hx, hy, cfg, alphabet):
    """All capped cores arising from rotations of x times rotations of y,
    with provenance, in a deterministic order."""
    if cfg.canonical_dedup:
        left = _rotations_in_order(x)
        right = _rotations_in_order(y)
    else:
        left, right = [(0, x)], [(0, y)]
    out = []
    for i, xr in left:
        hxr = _rotation_provenance(x, i, hx)
        for j, yr in right:
            dec, _ = cyc_reduce(concat(xr, yr))
            core = dec.core
            if not core.letters or len(core.letters) > cfg.max_len:
                continue
            h = None
            if hx is not None:
                hyr = _rotation_provenance(y, j, hy)
                h = conjugate(inverse(dec.conjugator),
                              HElement(hxr.terms + hyr.terms, alphabet=alphabet))
            out.extend(_reps(core, cfg.canonical_dedup, h))
    return out


def step(s: ClosureSet, workers: int = 1) -> ClosureSet:
    """One full round of products against the frontier."""
    if s.saturated:
        raise ValueError("closure set is already saturated")
    if not isinstance(workers, int) or workers < 1:
        raise ValueError("workers must be at least 1")
    cfg = s.config
    ordered = sorted(s.members, key=_word_key)
    pairs = [(x, y) for x in ordered for y in ordered
             if x in s.frontier or y in s.frontier]
    prov = s.provenance

    def handle(chunk):
        got = []
        for x, y in chunk:
            hx = prov[x] if prov is not None else None
            hy = prov[y] if prov is not None else None
            got.extend(_pair_products(x, y, hx, hy, cfg, s.alphabet))
        return got

    if workers == 1 or len(pairs) <= 1:
        produced = handle(pairs)
    else:
        size = (len(pairs) + workers - 1) // workers
        chunks = [pairs[i:i + size] for i in range(0, len(pairs), size)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            produced = []
            for got in pool.map(handle, chunks):
                produced.extend(got)

    members = set(s.members)
    new_prov = dict(prov) if prov is not None else None
    fresh = set()
    for rep, h in produced:
        if rep not in members:
            members.add(rep)
            fresh.add(rep)
            if new_prov is not None:
                new_prov[rep] = h
    return ClosureSet(s.alphabet, cfg, frozenset(members), frozenset(fresh),
                      s.rounds_done + 1, not fresh, new_prov)


def run(s: ClosureSet, workers: int = 1) -> ClosureSet:
    """Iterate step until saturation or the round cap."""
    while not s.saturated and s.rounds_done < s.config.max_rounds:
        s = step(s, workers=workers)
    return s


def contains(s: ClosureSet, w: Word) -> ContainsResult:
    """Membership of the cyclically reduced form of w, with a flag telling
    whether the query exceeds the enumeration cap (and so a False may be a
    truncation artifact)."""
    core = cyc_reduce(w)[0].core
    over = len(core.letters) > s.config.max_len
    if not core.letters:
        return ContainsResult(False, over)
    probe = canonical_rotation(core)[0] if s.config.canonical_dedup else core
    return ContainsResult(probe in s.members, over)


_HEADER = "#cycred-closure v1"


def _render(s: ClosureSet) -> str:
    names = s.alphabet.generators
    lines = ["%s alphabet=%s maxlen=%d rounds=%d maxrounds=%d saturated=%d"
             " inverses=%d canonical=%d"
             % (_HEADER, ",".join(names), s.config.max_len, s.rounds_done,
                s.config.max_rounds, int(s.saturated),
                int(s.config.include_inverses), int(s.config.canonical_dedup))]
    for w in sorted(s.members, key=_word_key):
        lines.append(format_compact(w))
    lines.append("#frontier")
    for w in sorted(s.frontier, key=_word_key):
        lines.append(format_compact(w))
    return "\n".join(lines) + "\n"


def save(s: ClosureSet, sink) -> None:
    """Write the set to a path or text file object; provenance is dropped."""
    text = _render(s)
    if hasattr(sink, "write"):
        sink.write(text)
    else:
        with open(sink, "w", encoding="ascii") as f:
            f.write(text)


def _parse_flag(fields, key):
    val = fields.get(key)
    if val not in ("0", "1"):
        raise ValueError("closure file: bad or missing %s field" % key)
    return val == "1"


def load(source) -> ClosureSet:
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, "r", encoding="ascii") as f:
            text = f.read()
    lines = text.splitlines()
    if not lines or not lines[0].startswith(_HEADER + " "):
        raise ValueError("closure file: missing or unsupported version header")
    fields = {}
    for token in lines[0][len(_HEADER) + 1:].split():
        key, _, val = token.partition("=")
        fields[key] = val
    try:
        alphabet = Alphabet(*fields["alphabet"].split(","))
        max_len = int(fields["maxlen"])
        rounds_done = int(fields["rounds"])
        max_rounds = int(fields.get("maxrounds", str(max(rounds_done, 1))))
    except (KeyError, ValueError) as exc:
        raise ValueError("closure file: bad header (%s)" % exc) from None
    saturated = _parse_flag(fields, "saturated")
    config = ClosureConfig(max_len, max_rounds, _parse_flag(fields, "inverses"),
                           _parse_flag(fields, "canonical"))
    if config.max_len < 1 or config.max_rounds < 1 or rounds_done < 0:
        raise ValueError("closure file: header values out of range")
    members, frontier = set(), set()
    into = members
    for ln in lines[1:]:
        if ln == "#frontier":
            if into is frontier:
                raise ValueError("closure file: duplicate #frontier marker")
            into = frontier
            continue
        w = parse_compact(ln, alphabet)
        if not w.letters:
            raise ValueError("closure file: the empty word cannot be a member")
        if not is_cyclically_reduced(w):
            raise ValueError("closure file: member %r is not cyclically reduced" % ln)
        if len(w.letters) > max_len:
            raise ValueError("closure file: member %r violates the length cap" % ln)
        into.add(w)
    if into is members:
        raise ValueError("closure file: missing #frontier marker")
    if not frontier <= members:
        raise ValueError("closure file: frontier is not a subset of members")
    for w in members:
        if config.canonical_dedup:
            if canonical_rotation(w)[0] != w:
                raise ValueError("closure file: non-canonical member under canonical dedup")
        elif any(rotate(w, k) not in members for k in range(len(w.letters))):
            raise ValueError("closure file: members are not rotation-closed")
    return ClosureSet(alphabet, config, frozenset(members), frozenset(frontier),
                      rounds_done, saturated, None)
