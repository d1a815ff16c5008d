"""Z2 + Z2 chord indices, R3 admissibility, and index derivation from torus windings.

A chord index is stored as a 2-bit integer: bit 0 is the first parity, bit 1
the second.  Addition in Z2 + Z2 is then plain XOR.
"""

import enum
import re
from dataclasses import dataclass
from functools import reduce


class ChordIndex(enum.IntEnum):
    TRIVIAL = 0  # (0, 0)
    A = 1        # (1, 0)
    B = 2        # (0, 1)
    C = 3        # (1, 1)

    def __add__(self, other):
        if not isinstance(other, ChordIndex):
            return NotImplemented
        return ChordIndex(int(self) ^ int(other))

    __radd__ = __add__

    @property
    def pair(self):
        return (int(self) & 1, int(self) >> 1)

    @classmethod
    def from_pair(cls, p, q):
        return cls((p % 2) | ((q % 2) << 1))

    @property
    def token(self):
        return _TOKENS[self]

    @classmethod
    def from_token(cls, tok):
        try:
            return _FROM_TOKEN[tok]
        except KeyError:
            raise ValueError(f"unknown chord index {tok!r}") from None

    def __str__(self):
        return self.token


_TOKENS = {ChordIndex.TRIVIAL: "0", ChordIndex.A: "a", ChordIndex.B: "b", ChordIndex.C: "c"}
_FROM_TOKEN = {v: k for k, v in _TOKENS.items()}

TRIVIAL, IDX_A, IDX_B, IDX_C = ChordIndex.TRIVIAL, ChordIndex.A, ChordIndex.B, ChordIndex.C


def index_sum(xs):
    """Sum of chord indices in Z2 + Z2; the empty sum is TRIVIAL."""
    return reduce(lambda u, v: u + v, xs, ChordIndex.TRIVIAL)


def r3_index_admissible(x, y, z):
    """True iff three chords may take part in a third Reidemeister move.

    That is: all trivial, two equal non-trivial plus one trivial, or all of
    A, B, C.  All three cases are exactly ``x + y + z == 0``.
    """
    return index_sum((x, y, z)) is ChordIndex.TRIVIAL


# --- winding-decorated diagrams -------------------------------------------

@dataclass(frozen=True)
class WindingDecoratedDiagram:
    """A Gauss diagram whose arcs carry homology classes in H1(T^2) = Z^2.

    ``arc_windings[i]`` is the arc leaving endpoint ``i - 1`` for long
    diagrams (index 0 is the leading arc) and the arc leaving endpoint ``i``
    for closed diagrams.
    """

    base: "object"  # gauss.GaussDiagram; indices may be placeholders
    arc_windings: tuple

    def expected_windings(self):
        n = len(self.base.endpoints)
        return n + 1 if self.base.kind == "long" else n


class WindingCountError(ValueError):
    pass


_WINDING_RE = re.compile(r"^\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]$")
_BARE_TOKEN_RE = re.compile(r"^([OU])([1-9][0-9]*)([+-]?)$")


def parse_windings(text):
    """Parse ``closed U1 [1,0] O1 [0,1]`` style input.

    For long diagrams a ``[p,q]`` directly after the kind keyword is the
    leading arc.  Whitespace inside the brackets is allowed.
    """
    from .gauss import Endpoint, GaussDiagram, GaussCodeError, Role

    # glue bracket groups into single tokens first
    text = re.sub(r"\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]", r"[\1,\2]", text)
    tokens = text.split()
    if not tokens or tokens[0] not in ("long", "closed"):
        raise GaussCodeError("expected 'long' or 'closed'", 0)
    kind = tokens[0]
    endpoints, windings, signs = [], [], {}
    for pos, tok in enumerate(tokens[1:], start=1):
        m = _WINDING_RE.match(tok)
        if m:
            windings.append((int(m.group(1)), int(m.group(2))))
            continue
        m = _BARE_TOKEN_RE.match(tok)
        if not m:
            raise GaussCodeError(f"bad token {tok!r}", pos)
        role, cid, sign = Role(m.group(1)), int(m.group(2)), m.group(3)
        if sign:
            if signs.get(cid, sign) != sign:
                raise GaussCodeError(f"sign mismatch on chord {cid}", pos)
            signs[cid] = sign
        endpoints.append(Endpoint(cid, role))
    ids = {e.chord for e in endpoints}
    if signs and set(signs) != ids:
        raise GaussCodeError("signs must be given for every chord or none", len(tokens))
    base = GaussDiagram(kind, tuple(endpoints), {c: ChordIndex.TRIVIAL for c in ids},
                        signs or None)
    w = WindingDecoratedDiagram(base, tuple(windings))
    if len(windings) != w.expected_windings():
        raise WindingCountError(
            f"{kind} diagram with {len(endpoints)} endpoints needs "
            f"{w.expected_windings()} arc windings, got {len(windings)}")
    return w


def derive_indices(w):
    """Assign each chord the mod-2 winding of the half running Under -> Over.

    The half starts with the arc leaving the Under endpoint and stops on
    arriving at the Over endpoint.  Long diagrams are closed up through the
    point at infinity, i.e. the trailing and leading arcs are traversed when
    the Over endpoint comes first.
    """
    d = w.base
    n = len(d.endpoints)
    if len(w.arc_windings) != w.expected_windings():
        raise WindingCountError(
            f"expected {w.expected_windings()} arc windings, got {len(w.arc_windings)}")
    problems = d.validate(check_indices=False)
    if problems:
        raise ValueError(f"invalid base diagram: {problems[0]}")

    if d.kind == "long":
        # arc after endpoint i is arc i + 1; the leading and trailing arcs join
        cycle = list(w.arc_windings[1:])
        if cycle:
            lead = w.arc_windings[0]
            cycle[-1] = (cycle[-1][0] + lead[0], cycle[-1][1] + lead[1])
    else:
        cycle = list(w.arc_windings)

    indices = {}
    for chord, (under, over) in d.chord_positions(by_role=True).items():
        p = q = 0
        i = under
        while i != over:
            p += cycle[i][0]
            q += cycle[i][1]
            i = (i + 1) % n
        indices[chord] = ChordIndex.from_pair(p, q)
    return d.with_indices(indices)
