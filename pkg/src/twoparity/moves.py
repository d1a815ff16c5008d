"""Reidemeister moves, the Delta move and basepoint rotation on Gauss diagrams.

Positions are 0-based.  Insertion positions are gaps ``0..len(d)``; endpoint
positions are ``0..len(d)-1``.  Adjacency is linear, also for closed
diagrams: a move straddling the basepoint is the same as rotate, move,
rotate back.

Text form of moves (stable, used in fuzz logs)::

    R1Add @3 UO          R1Add @3 OU +
    R1Remove 2
    R2Add @(1,4) UO a    R2Add @(1,4) OU c +-
    R2Remove 1,3
    R3 @(0,1)(3,4)(6,7)
    Delta @(0,1)(2,3)(4,5)
    Rotate
"""

import random
import re
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .coxeter import letter_value, phi, psi
from .gauss import Endpoint, GaussDiagram, Role
from .indexing import ChordIndex, index_sum, r3_index_admissible
from .invariant import assign_letters

OVER_PAIR = (Role.OVER, Role.OVER)
UNDER_PAIR = (Role.UNDER, Role.UNDER)

_INDICES = tuple(ChordIndex)


# --- move values -----------------------------------------------------------

def _roles(text):
    if text not in ("UO", "OU"):
        raise ValueError(f"role order must be 'UO' or 'OU', got {text!r}")
    return tuple(Role(ch) for ch in text)


@dataclass(frozen=True)
class R1Add:
    pos: int
    role_order: str = "UO"
    index: ChordIndex = ChordIndex.TRIVIAL
    sign: Optional[str] = None

    def __str__(self):
        s = f"R1Add @{self.pos} {self.role_order}"
        if self.index is not ChordIndex.TRIVIAL:
            s += f" {self.index.token}"
        return s + (f" {self.sign}" if self.sign else "")


@dataclass(frozen=True)
class R1Remove:
    chord: int

    def __str__(self):
        return f"R1Remove {self.chord}"


@dataclass(frozen=True)
class R2Add:
    """Insert two chords: a same-role pair at gap ``p`` and the reversed,
    opposite-role pair at gap ``q >= p``.  ``pattern[0]`` is the role at ``p``.

    ``index`` is one index or a pair (one per new chord); a pair with
    differing entries is rejected by :func:`check_move`.
    """

    p: int
    q: int
    pattern: str = "UO"
    index: object = ChordIndex.TRIVIAL
    signs: Optional[tuple] = None

    @property
    def index_pair(self):
        if isinstance(self.index, ChordIndex):
            return (self.index, self.index)
        return tuple(self.index)

    def __str__(self):
        i1, i2 = self.index_pair
        idx = i1.token if i1 is i2 else f"{i1.token}{i2.token}"
        s = f"R2Add @({self.p},{self.q}) {self.pattern} {idx}"
        return s + (f" {''.join(self.signs)}" if self.signs else "")


@dataclass(frozen=True)
class R2Remove:
    chords: tuple

    def __str__(self):
        return f"R2Remove {self.chords[0]},{self.chords[1]}"


def _fmt_pairs(pairs):
    return "".join(f"({p},{q})" for p, q in pairs)


@dataclass(frozen=True)
class R3:
    pairs: tuple  # three (p, p + 1) endpoint-position pairs

    def __str__(self):
        return f"R3 @{_fmt_pairs(self.pairs)}"


@dataclass(frozen=True)
class Delta:
    pairs: tuple

    def __str__(self):
        return f"Delta @{_fmt_pairs(self.pairs)}"


@dataclass(frozen=True)
class RotateBasepoint:
    def __str__(self):
        return "Rotate"


ISOTOPY_MOVES = (R1Add, R1Remove, R2Add, R2Remove, R3)


class InvalidMove(ValueError):
    pass


def parse_move(text):
    text = text.strip()
    m = re.fullmatch(r"R1Add\s+@(\d+)\s+(UO|OU)(?:\s+([0abc]))?(?:\s+([+-]))?", text)
    if m:
        idx = ChordIndex.from_token(m.group(3)) if m.group(3) else ChordIndex.TRIVIAL
        return R1Add(int(m.group(1)), m.group(2), idx, m.group(4))
    m = re.fullmatch(r"R1Remove\s+(\d+)", text)
    if m:
        return R1Remove(int(m.group(1)))
    m = re.fullmatch(r"R2Add\s+@\((\d+),(\d+)\)\s+(UO|OU)\s+([0abc]{1,2})(?:\s+([+-]{2}))?", text)
    if m:
        toks = m.group(4)
        idx = ChordIndex.from_token(toks) if len(toks) == 1 else tuple(
            ChordIndex.from_token(t) for t in toks)
        signs = tuple(m.group(5)) if m.group(5) else None
        return R2Add(int(m.group(1)), int(m.group(2)), m.group(3), idx, signs)
    m = re.fullmatch(r"R2Remove\s+(\d+)\s*,\s*(\d+)", text)
    if m:
        return R2Remove((int(m.group(1)), int(m.group(2))))
    m = re.fullmatch(r"(R3|Delta)\s+@((?:\(\d+,\d+\)){3})", text)
    if m:
        pairs = tuple((int(p), int(q)) for p, q in re.findall(r"\((\d+),(\d+)\)", m.group(2)))
        return (R3 if m.group(1) == "R3" else Delta)(pairs)
    if text in ("Rotate", "RotateBasepoint"):
        return RotateBasepoint()
    raise ValueError(f"cannot parse move {text!r}")


# --- validity --------------------------------------------------------------

def _next_ids(d, k):
    top = max(d.indices, default=0)
    top = max([top] + [e.chord for e in d.endpoints])
    return [top + i + 1 for i in range(k)]


def _triple_problem(d, pairs):
    """Shared R3/Delta geometry.  Returns (problem, pieces-roles, chords)."""
    n = len(d.endpoints)
    if len(pairs) != 3:
        return "needs exactly three endpoint pairs", None, None
    used = set()
    for p, q in pairs:
        if q != p + 1 or p < 0 or q >= n:
            return f"pair ({p},{q}) is not two adjacent endpoints", None, None
        if p in used or q in used:
            return "pairs overlap", None, None
        used.update((p, q))
    pieces = [(d.endpoints[p], d.endpoints[q]) for p, q in pairs]
    count = {}
    for e, f in pieces:
        if e.chord == f.chord:
            return f"pair holds both ends of chord {e.chord}", None, None
        count[e.chord] = count.get(e.chord, 0) + 1
        count[f.chord] = count.get(f.chord, 0) + 1
    if len(count) != 3 or any(v != 2 for v in count.values()):
        return "the three pairs must be the pieces (xy), (xz), (yz) of three chords", None, None
    return None, [(e.role, f.role) for e, f in pieces], list(count)


def _role_kind(roles):
    if roles == OVER_PAIR:
        return "OO"
    if roles == UNDER_PAIR:
        return "UU"
    return "mixed"


def _triple_move_problem(d, m):
    problem, roles, chords = _triple_problem(d, m.pairs)
    if problem:
        return problem
    kinds = sorted(_role_kind(r) for r in roles)
    idx = [d.indices.get(c) for c in chords]
    if None in idx:
        return None  # reported by validate()
    if isinstance(m, R3):
        if kinds != ["OO", "UU", "mixed"]:
            return ("role pattern: R3 needs one over-over, one under-under and one mixed "
                    f"pair, got {'/'.join(kinds)}")
        if not r3_index_admissible(*idx):
            return f"indices {','.join(i.token for i in idx)} do not sum to 0"
    else:
        if kinds != ["mixed"] * 3:
            return f"role pattern: Delta needs three mixed pairs, got {'/'.join(kinds)}"
        if index_sum(idx) is not ChordIndex.TRIVIAL:
            return f"indices {','.join(i.token for i in idx)} do not sum to 0"
    return None


def check_move(d, m, strict=False):
    """``None`` if ``m`` is valid on ``d``, otherwise a description of the violation.

    ``strict`` additionally requires the diagram to carry crossing signs.
    Triple moves check their local conditions before global validity, so a
    role-pattern problem is reported as such even when the pattern could
    only occur in a malformed diagram.
    """
    if isinstance(m, (R3, Delta)):
        problem = _triple_move_problem(d, m)
        if problem:
            return problem
    problems = d.validate()
    if problems:
        return f"invalid diagram: {problems[0]}"
    if strict and d.signs is None and not isinstance(m, RotateBasepoint):
        return "strict mode needs a signed diagram"
    n = len(d.endpoints)

    if isinstance(m, R1Add):
        if not 0 <= m.pos <= n:
            return f"insertion position {m.pos} outside 0..{n}"
        if m.role_order not in ("UO", "OU"):
            return f"role order must be UO or OU, got {m.role_order!r}"
        if m.index is not ChordIndex.TRIVIAL:
            return f"R1 chord must have trivial index, got {m.index.token}"
        if m.sign is not None and m.sign not in "+-":
            return f"bad sign {m.sign!r}"
        return None

    if isinstance(m, R1Remove):
        pos = d.chord_positions().get(m.chord)
        if pos is None:
            return f"no chord {m.chord}"
        if pos[1] != pos[0] + 1:
            return f"chord {m.chord} ends are not adjacent"
        if d.indices[m.chord] is not ChordIndex.TRIVIAL:
            return f"R1 chord must have trivial index, got {d.indices[m.chord].token}"
        return None

    if isinstance(m, R2Add):
        if not 0 <= m.p <= m.q <= n:
            return f"insertion gaps ({m.p},{m.q}) must satisfy 0 <= p <= q <= {n}"
        if m.pattern not in ("UO", "OU"):
            return f"role pattern must be UO or OU, got {m.pattern!r}"
        i1, i2 = m.index_pair
        if i1 is not i2:
            return f"index mismatch: R2 chords must share an index, got {i1.token},{i2.token}"
        if m.signs is not None and (len(m.signs) != 2 or set(m.signs) != {"+", "-"}):
            return "R2 chords must have opposite signs"
        return None

    if isinstance(m, R2Remove):
        c1, c2 = m.chords
        pos = d.chord_positions()
        if c1 == c2 or c1 not in pos or c2 not in pos:
            return f"R2Remove needs two distinct existing chords, got {c1},{c2}"
        i, j, k, l = sorted(pos[c1] + pos[c2])
        if j != i + 1 or l != k + 1:
            return "chord ends do not form two adjacent pairs"
        ep = d.endpoints
        if ep[i].chord == ep[j].chord:
            return "a pair holds both ends of one chord"
        if ep[i].chord != ep[l].chord:
            return "the two pairs are not in mutually reversed order"
        if ep[i].role is not ep[j].role:
            return "role pattern: one pair must be both over and the other both under"
        if d.indices[c1] is not d.indices[c2]:
            return (f"index mismatch: chords {c1},{c2} have indices "
                    f"{d.indices[c1].token},{d.indices[c2].token}")
        if d.signs is not None and d.signs[c1] == d.signs[c2]:
            return "R2 chords must have opposite signs"
        return None

    if isinstance(m, (R3, Delta)):
        return None

    if isinstance(m, RotateBasepoint):
        if d.kind != "closed":
            return "basepoint rotation applies to closed diagrams only"
        if not d.endpoints:
            return "cannot rotate an empty diagram"
        return None

    return f"unknown move {m!r}"


# --- application -----------------------------------------------------------

def apply_move(d, m, strict=False):
    problem = check_move(d, m, strict=strict)
    if problem:
        raise InvalidMove(f"{m}: {problem}")
    ep = list(d.endpoints)
    indices = dict(d.indices)
    signs = None if d.signs is None else dict(d.signs)

    if isinstance(m, R1Add):
        (x,) = _next_ids(d, 1)
        r1, r2 = _roles(m.role_order)
        ep[m.pos:m.pos] = [Endpoint(x, r1), Endpoint(x, r2)]
        indices[x] = ChordIndex.TRIVIAL
        if signs is not None:
            signs[x] = m.sign or "+"
    elif isinstance(m, R1Remove):
        ep = [e for e in ep if e.chord != m.chord]
        del indices[m.chord]
        if signs is not None:
            del signs[m.chord]
    elif isinstance(m, R2Add):
        x, y = _next_ids(d, 2)
        r1, r2 = _roles(m.pattern)
        ep = (ep[:m.p] + [Endpoint(x, r1), Endpoint(y, r1)] + ep[m.p:m.q]
              + [Endpoint(y, r2), Endpoint(x, r2)] + ep[m.q:])
        indices[x] = indices[y] = m.index_pair[0]
        if signs is not None:
            signs[x], signs[y] = m.signs or ("+", "-")
    elif isinstance(m, R2Remove):
        ep = [e for e in ep if e.chord not in m.chords]
        for c in m.chords:
            del indices[c]
            if signs is not None:
                del signs[c]
    elif isinstance(m, (R3, Delta)):
        for p, q in m.pairs:
            ep[p], ep[q] = ep[q], ep[p]
    elif isinstance(m, RotateBasepoint):
        ep = ep[1:] + ep[:1]
    return GaussDiagram(d.kind, tuple(ep), indices, signs).normalize()


class RotationEffect(NamedTuple):
    """How w changes when the first endpoint of a closed diagram moves to the end.

    ``kind`` is ``unchanged``, ``phi``, ``psi`` or ``conjugate``; for
    ``conjugate`` the new w is ``letter * w * letter``.
    """

    kind: str
    letter: object = None

    def apply(self, x):
        if self.kind == "unchanged":
            return x
        if self.kind == "phi":
            return phi(x)
        if self.kind == "psi":
            return psi(x)
        g = letter_value(self.letter)
        return g * x * g.inverse()

    def __str__(self):
        return f"conjugate by {self.letter}" if self.kind == "conjugate" else self.kind


def rotate_basepoint(d):
    """Move the first endpoint of a closed diagram to the end.

    The returned effect describes the new w in terms of the old one.  The
    conjugation law for a- and b-ends needs a c-even diagram: otherwise the
    partner letter of the moved end also flips its prime.
    """
    problem = check_move(d, RotateBasepoint())
    if problem:
        raise InvalidMove(problem)
    first = d.endpoints[0]
    idx = d.indices[first.chord]
    if idx is ChordIndex.TRIVIAL:
        effect = RotationEffect("unchanged")
    elif idx is ChordIndex.C:
        # a c-end leaving the front flips the prime of every letter of its case
        effect = RotationEffect("phi" if first.role is Role.UNDER else "psi")
    else:
        word = assign_letters(d)
        effect = RotationEffect("conjugate", word.letters[0])
    return apply_move(d, RotateBasepoint()), effect


# --- enumeration -----------------------------------------------------------

def _pieces(d):
    ep = d.endpoints
    return [(p, p + 1) for p in range(len(ep) - 1) if ep[p].chord != ep[p + 1].chord]


def triples(d):
    """All position-disjoint triples of pieces (xy), (xz), (yz), sorted."""
    ep = d.endpoints
    by_chord = {}
    by_set = {}
    for pc in _pieces(d):
        x, y = ep[pc[0]].chord, ep[pc[1]].chord
        by_chord.setdefault(x, []).append(pc)
        by_chord.setdefault(y, []).append(pc)
        by_set.setdefault(frozenset((x, y)), []).append(pc)
    found = set()
    for pcs in by_set.values():
        for p1 in pcs:
            x, y = ep[p1[0]].chord, ep[p1[1]].chord
            for p2 in by_chord[x]:
                z = ({ep[p2[0]].chord, ep[p2[1]].chord} - {x}).pop()
                if z == y:
                    continue
                for p3 in by_set.get(frozenset((y, z)), ()):
                    trip = tuple(sorted((p1, p2, p3)))
                    if len({q for pc in trip for q in pc}) == 6:
                        found.add(trip)
    return sorted(found)


def removal_candidates(d):
    """R1Remove and R2Remove moves whose endpoints have the right adjacency shape.

    Candidates still need :func:`check_move` (index and sign conditions).
    """
    ep = d.endpoints
    pos = d.chord_positions()
    r1 = [R1Remove(c) for c, (p, q) in pos.items() if q == p + 1]
    r2 = []
    for p in range(len(ep) - 1):
        x, y = ep[p], ep[p + 1]
        if x.chord == y.chord or x.role is not y.role:
            continue
        # the partner ends must sit as the reversed adjacent pair, after this one
        px = pos[x.chord][1] if pos[x.chord][0] == p else pos[x.chord][0]
        py = pos[y.chord][1] if pos[y.chord][0] == p + 1 else pos[y.chord][0]
        if px > p + 1 and py + 1 == px:
            r2.append(R2Remove(tuple(sorted((x.chord, y.chord)))))
    return r1 + r2


def _insertion_gaps(n, cap):
    if n + 1 <= cap:
        return list(range(n + 1))
    return sorted({round(i * n / (cap - 1)) for i in range(cap)})


def applicable_moves(d, insertion_cap=5, strict=False):
    """Every valid removal, R3, Delta and rotation, plus a bounded sample of insertions.

    R2 insertions are sampled only on distinct gaps ``p < q``.
    """
    out = []
    gaps = _insertion_gaps(len(d.endpoints), insertion_cap)
    for p in gaps:
        for order in ("UO", "OU"):
            out.append(R1Add(p, order))
    for i, p in enumerate(gaps):
        for q in gaps[i + 1:]:
            for pattern in ("UO", "OU"):
                for idx in _INDICES:
                    out.append(R2Add(p, q, pattern, idx))
    out += removal_candidates(d)
    for trip in triples(d):
        out += [R3(trip), Delta(trip)]
    if d.kind == "closed" and d.endpoints:
        out.append(RotateBasepoint())
    return [m for m in out if check_move(d, m, strict=strict) is None]


# --- random generation -----------------------------------------------------

def _gadget(rng, kind, ids):
    """Blocks of endpoints realising a removable or movable configuration."""
    if kind == "free":
        (x,) = ids
        return [[Endpoint(x, Role.UNDER)], [Endpoint(x, Role.OVER)]], {x: rng.choice(_INDICES)}
    if kind == "r1":
        (x,) = ids
        roles = [Role.UNDER, Role.OVER]
        rng.shuffle(roles)
        return [[Endpoint(x, roles[0]), Endpoint(x, roles[1])]], {x: ChordIndex.TRIVIAL}
    if kind == "r2":
        x, y = ids
        r1 = rng.choice([Role.UNDER, Role.OVER])
        idx = rng.choice(_INDICES)
        return ([[Endpoint(x, r1), Endpoint(y, r1)],
                 [Endpoint(y, r1.opposite), Endpoint(x, r1.opposite)]], {x: idx, y: idx})
    # triangle: pieces (xy), (xz), (yz)
    x, y, z = ids
    if kind == "delta":
        r = rng.choice([Role.UNDER, Role.OVER])
        roles = {"xy": (r, r.opposite), "xz": (r.opposite, r), "yz": (r, r.opposite)}
    else:
        labels = ["xy", "xz", "yz"]
        rng.shuffle(labels)
        oo, uu, mixed = labels
        roles = {oo: (Role.OVER, Role.OVER), uu: (Role.UNDER, Role.UNDER)}
        # the mixed piece's roles are forced: each chord has one O end and one U end
        role_of = {}
        for lab in (oo, uu):
            for ch, rl in zip(lab, roles[lab]):
                role_of.setdefault(ch, []).append(rl)
        roles[mixed] = tuple(role_of[ch][0].opposite for ch in mixed)
    names = {"x": x, "y": y, "z": z}
    blocks = []
    for lab, rl in roles.items():
        block = [Endpoint(names[lab[0]], rl[0]), Endpoint(names[lab[1]], rl[1])]
        rng.shuffle(block)
        blocks.append(block)
    options = [(ChordIndex.TRIVIAL,) * 3]
    options += [(i, i, ChordIndex.TRIVIAL) for i in _INDICES[1:]]
    options.append((ChordIndex.A, ChordIndex.B, ChordIndex.C))
    idx = list(rng.choice(options))
    rng.shuffle(idx)
    return blocks, dict(zip((x, y, z), idx))


def random_diagram(seed, max_chords, kind="long", c_even_only=False, signed=False):
    """A random valid diagram with at most ``max_chords`` chords.

    Chords come in gadgets (R1 loops, R2 bigons, R3 and Delta triangles,
    free chords) whose blocks are shuffled together, so removals and
    triple moves are usually available.
    """
    if max_chords < 0:
        raise ValueError("max_chords must be >= 0")
    rng = random.Random(seed)
    n = rng.randint(0, max_chords)
    blocks, indices, planted = [], {}, set()
    next_id = 1
    while next_id <= n:
        left = n - next_id + 1
        choices = ["free", "free", "r1"]
        if left >= 2:
            choices.append("r2")
        if left >= 3:
            choices += ["r3", "r3", "delta"]
        g = rng.choice(choices)
        size = {"free": 1, "r1": 1, "r2": 2}.get(g, 3)
        ids = list(range(next_id, next_id + size))
        next_id += size
        bl, idx = _gadget(rng, g, ids)
        blocks += bl
        indices.update(idx)
        if g != "free":
            planted.update(ids)
    rng.shuffle(blocks)
    endpoints = tuple(e for b in blocks for e in b)

    if c_even_only and sum(i is ChordIndex.C for i in indices.values()) % 2:
        # toggle a free chord if possible; otherwise sacrifice one gadget
        c = rng.choice([c for c in indices if c not in planted] or sorted(indices))
        if indices[c] is ChordIndex.C:
            indices[c] = rng.choice(_INDICES[:3])
        else:
            indices[c] = ChordIndex.C
    signs = {c: rng.choice("+-") for c in indices} if signed else None
    return GaussDiagram(kind, endpoints, indices, signs).normalize()


def random_move(d, rng, strict=False):
    """One random isotopy move valid on ``d``: pick a move family, then an instance."""
    n = len(d.endpoints)
    removals = removal_candidates(d)
    families = {
        "R1Add": None,
        "R2Add": None,
        "R1Remove": [m for m in removals if isinstance(m, R1Remove)],
        "R2Remove": [m for m in removals if isinstance(m, R2Remove)],
        "R3": [R3(t) for t in triples(d)],
    }
    for name in ("R1Remove", "R2Remove", "R3"):
        families[name] = [m for m in families[name] if check_move(d, m, strict) is None]
        if not families[name]:
            del families[name]
    name = rng.choice(sorted(families))
    if name == "R1Add":
        sign = rng.choice("+-") if d.signs is not None else None
        return R1Add(rng.randint(0, n), rng.choice(["UO", "OU"]), sign=sign)
    if name == "R2Add":
        p, q = sorted((rng.randint(0, n), rng.randint(0, n)))
        signs = tuple(rng.sample("+-", 2)) if d.signs is not None else None
        return R2Add(p, q, rng.choice(["UO", "OU"]), rng.choice(_INDICES), signs)
    return rng.choice(families[name])


def random_move_sequence(d, seed, length, strict=False):
    """``length`` random isotopy moves (no Delta, no rotation), each with its result."""
    rng = random.Random(seed)
    out = []
    for _ in range(length):
        m = random_move(d, rng, strict=strict)
        d = apply_move(d, m, strict=strict)
        out.append((m, d))
    return out
