"""Gauss diagrams of long and closed knots with Z2 + Z2 chord indices.

Text form, one diagram per string::

    long U1:a U2:c O1:a O2:c
    closed O1+:b U2-:0 U1+:b O2-:0

Each token is ``<role><id><sign?>:<index>`` with role ``O``/``U``, sign
``+``/``-`` (optional, all-or-nothing) and index one of ``0 a b c``.
"""

import enum
import re
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .indexing import ChordIndex


class Role(str, enum.Enum):
    OVER = "O"
    UNDER = "U"

    @property
    def opposite(self):
        return Role.UNDER if self is Role.OVER else Role.OVER

    def __str__(self):
        return self.value


class Endpoint(NamedTuple):
    chord: int
    role: Role

    def __str__(self):
        return f"{self.role.value}{self.chord}"


class Violation(NamedTuple):
    kind: str  # duplicate-role | odd-occurrence | missing-index | missing-sign | ...
    chord: Optional[int]
    detail: str

    def __str__(self):
        return f"{self.kind}: {self.detail}"


class GaussCodeError(ValueError):
    """Raised by :func:`parse`; ``position`` is the 0-based token number."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (token {position})"
        super().__init__(message)


KINDS = ("long", "closed")


@dataclass(frozen=True, eq=True)
class GaussDiagram:
    kind: str
    endpoints: tuple
    indices: dict
    signs: Optional[dict] = None

    def __hash__(self):
        return hash(serialize(self))

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return f"GaussDiagram({serialize(self)!r})"

    def __len__(self):
        return len(self.endpoints)

    @property
    def chords(self):
        seen = []
        for e in self.endpoints:
            if e.chord not in seen:
                seen.append(e.chord)
        return seen

    @property
    def n_chords(self):
        return len(self.endpoints) // 2

    def index(self, chord):
        return self.indices[chord]

    def chord_positions(self, by_role=False):
        """Map chord -> (first, second) positions, or (under, over) if ``by_role``."""
        out = {}
        for pos, e in enumerate(self.endpoints):
            out.setdefault(e.chord, [None, None])
            if by_role:
                out[e.chord][0 if e.role is Role.UNDER else 1] = pos
            elif out[e.chord][0] is None:
                out[e.chord][0] = pos
            else:
                out[e.chord][1] = pos
        return {c: tuple(p) for c, p in out.items()}

    def validate(self, check_indices=True):
        return validate(self, check_indices=check_indices)

    def normalize(self):
        """Renumber chords 1..n by first occurrence."""
        remap = {}
        for e in self.endpoints:
            if e.chord not in remap:
                remap[e.chord] = len(remap) + 1
        endpoints = tuple(Endpoint(remap[e.chord], e.role) for e in self.endpoints)
        indices = {remap[c]: i for c, i in self.indices.items() if c in remap}
        signs = None
        if self.signs is not None:
            # an empty sign table carries no information
            signs = {remap[c]: s for c, s in self.signs.items() if c in remap} or None
        return GaussDiagram(self.kind, endpoints, indices, signs)

    def with_indices(self, indices):
        return GaussDiagram(self.kind, self.endpoints, dict(indices), self.signs)

    def with_endpoints(self, endpoints, indices=None, signs=None):
        return GaussDiagram(self.kind, tuple(endpoints),
                            self.indices if indices is None else indices,
                            self.signs if signs is None else signs)


def empty(kind="long"):
    return GaussDiagram(kind, (), {}, None)


def validate(d, check_indices=True):
    """List the structural problems of ``d``; an empty list means valid."""
    problems = []
    if d.kind not in KINDS:
        problems.append(Violation("bad-kind", None, f"unknown kind {d.kind!r}"))
    roles = {}
    for e in d.endpoints:
        if not isinstance(e.role, Role):
            problems.append(Violation("bad-role", e.chord, f"chord {e.chord} has role {e.role!r}"))
            continue
        roles.setdefault(e.chord, []).append(e.role)
    for chord, rs in roles.items():
        if len(rs) != 2:
            problems.append(Violation(
                "odd-occurrence", chord, f"chord {chord} occurs {len(rs)} times"))
        elif rs[0] is rs[1]:
            problems.append(Violation(
                "duplicate-role", chord, f"chord {chord} appears twice as {rs[0].value}"))
        if check_indices and not isinstance(d.indices.get(chord), ChordIndex):
            problems.append(Violation("missing-index", chord, f"chord {chord} has no index"))
        if d.signs is not None and d.signs.get(chord) not in ("+", "-"):
            problems.append(Violation("missing-sign", chord, f"chord {chord} has no sign"))
    return problems


_TOKEN_RE = re.compile(r"^([OU])([1-9][0-9]*)([+-]?):([0abc])$")


def parse(text):
    """Parse Gauss-code text into a validated, normalized diagram."""
    tokens = text.split()
    if not tokens:
        raise GaussCodeError("empty input, expected 'long' or 'closed'", 0)
    kind = tokens[0]
    if kind not in KINDS:
        raise GaussCodeError(f"expected 'long' or 'closed', got {kind!r}", 0)

    endpoints, indices, signs, seen = [], {}, {}, {}
    for pos, tok in enumerate(tokens[1:], start=1):
        m = _TOKEN_RE.match(tok)
        if not m:
            raise GaussCodeError(f"malformed token {tok!r}", pos)
        role, cid, sign, idx = Role(m.group(1)), int(m.group(2)), m.group(3), m.group(4)
        idx = ChordIndex.from_token(idx)
        prev = seen.setdefault(cid, [])
        if len(prev) == 2:
            raise GaussCodeError(f"chord {cid} occurs more than twice", pos)
        if prev and prev[0] is role:
            raise GaussCodeError(f"chord {cid} appears twice as {role.value}", pos)
        if prev and indices[cid] is not idx:
            raise GaussCodeError(
                f"index mismatch on chord {cid}: {indices[cid].token} vs {idx.token}", pos)
        if prev and signs.get(cid, "") != sign:
            raise GaussCodeError(f"sign mismatch on chord {cid}", pos)
        prev.append(role)
        indices[cid] = idx
        if sign:
            signs[cid] = sign
        endpoints.append(Endpoint(cid, role))

    for cid, rs in seen.items():
        if len(rs) != 2:
            raise GaussCodeError(f"chord {cid} occurs once, needs an O and a U end", len(tokens))
    if signs and len(signs) != len(seen):
        raise GaussCodeError("signs must be given for every chord or none", len(tokens))
    return GaussDiagram(kind, tuple(endpoints), indices, signs or None).normalize()


def serialize(d):
    parts = [d.kind]
    for e in d.endpoints:
        sign = d.signs.get(e.chord, "") if d.signs else ""
        idx = d.indices.get(e.chord)
        parts.append(f"{e.role.value}{e.chord}{sign}:{idx.token if idx is not None else '?'}")
    return " ".join(parts)


GaussDiagram.parse = staticmethod(parse)
