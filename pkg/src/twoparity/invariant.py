"""Letter assignment, the words w and w_after, and the compact-knot invariant."""

from dataclasses import dataclass
from typing import NamedTuple

from .coxeter import IDENTITY, Letter, evaluate_word, orbit
from .gauss import Role
from .indexing import ChordIndex

BEFORE = "before"
AFTER = "after"

_BASE = {
    (ChordIndex.A, Role.UNDER): "a",
    (ChordIndex.A, Role.OVER): "A",
    (ChordIndex.B, Role.UNDER): "b",
    (ChordIndex.B, Role.OVER): "B",
}


class InvariantUndefined(ValueError):
    """The requested invariant is not established for this diagram."""


class LetterWord(NamedTuple):
    letters: tuple
    positions: tuple

    def __str__(self):
        return " ".join(map(str, self.letters))

    def __len__(self):
        return len(self.letters)

    def value(self):
        return evaluate_word(self.letters)


@dataclass(frozen=True)
class ParityProfile:
    count_a: int
    count_b: int
    count_c: int

    @property
    def a_even(self):
        return self.count_a % 2 == 0

    @property
    def b_even(self):
        return self.count_b % 2 == 0

    @property
    def c_even(self):
        return self.count_c % 2 == 0

    def as_dict(self):
        return {"count_a": self.count_a, "count_b": self.count_b, "count_c": self.count_c,
                "a_even": self.a_even, "b_even": self.b_even, "c_even": self.c_even}


def _check(d):
    problems = d.validate()
    if problems:
        raise ValueError(f"invalid diagram: {problems[0]}")


def assign_letters(d, mode=BEFORE):
    """Letters at the ends of a- and b-chords, in diagram order.

    An Under end gets a small letter, an Over end a capital.  The letter is
    primed when an odd number of c-chord ends of the same role lie before
    (``mode="before"``) or after (``mode="after"``) the opposite end of its
    own chord.
    """
    if mode not in (BEFORE, AFTER):
        raise ValueError(f"mode must be {BEFORE!r} or {AFTER!r}")
    _check(d)
    n = len(d.endpoints)
    # prefix[role][p] = number of c-ends with that role strictly before p
    prefix = {Role.UNDER: [0] * (n + 1), Role.OVER: [0] * (n + 1)}
    for p, e in enumerate(d.endpoints):
        is_c = d.indices[e.chord] is ChordIndex.C
        for role, arr in prefix.items():
            arr[p + 1] = arr[p] + (is_c and e.role is role)

    opposite = {}
    for p, e in enumerate(d.endpoints):
        opposite.setdefault(e.chord, []).append(p)

    letters, positions = [], []
    for p, e in enumerate(d.endpoints):
        base = _BASE.get((d.indices[e.chord], e.role))
        if base is None:
            continue
        q = opposite[e.chord][0] if opposite[e.chord][1] == p else opposite[e.chord][1]
        arr = prefix[e.role]
        count = arr[q] if mode == BEFORE else arr[n] - arr[q + 1]
        letters.append(Letter(base, count % 2 == 1))
        positions.append(p)
    return LetterWord(tuple(letters), tuple(positions))


def w(d):
    """The group-valued invariant of long knots."""
    return evaluate_word(assign_letters(d, BEFORE).letters)


def w_after(d):
    return evaluate_word(assign_letters(d, AFTER).letters)


def parity_profile(d):
    counts = {ChordIndex.A: 0, ChordIndex.B: 0, ChordIndex.C: 0, ChordIndex.TRIVIAL: 0}
    for chord in d.chords:
        counts[d.indices[chord]] += 1
    return ParityProfile(counts[ChordIndex.A], counts[ChordIndex.B], counts[ChordIndex.C])


def compact_invariant(d):
    """Orbit class of w for a closed c-even diagram; independent of the basepoint."""
    if d.kind != "closed":
        raise InvariantUndefined("compact_invariant needs a closed diagram; use w for long knots")
    _check(d)
    prof = parity_profile(d)
    if not prof.c_even:
        raise InvariantUndefined(
            f"diagram is c-odd ({prof.count_c} chords of index c); "
            "the compact invariant is only defined for c-even knots")
    return orbit(w(d))


def is_nontrivial(d):
    """True when the invariant certifies ``d`` is not the trivial knot."""
    if d.kind == "long":
        return w(d) != IDENTITY
    return compact_invariant(d) != orbit(IDENTITY)
