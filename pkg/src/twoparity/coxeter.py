"""Arithmetic in D = <a,b | a^2=b^2=(ab)^4=1> x <A,B | A^2=B^2=(AB)^4=1>.

Each factor is the dihedral group of order 8, stored as ``r^rot s^ref``.
The generators are embedded as ``a = s`` and ``b = r^3 s`` so that
``ab = r``; capitals live in the second factor the same way.
"""

from collections import deque
from functools import lru_cache
from typing import NamedTuple


class Dih4Element(NamedTuple):
    rot: int  # 0..3
    ref: int  # 0 or 1

    def __mul__(self, other):
        k = other.rot if not self.ref else -other.rot
        return Dih4Element((self.rot + k) % 4, self.ref ^ other.ref)

    def inverse(self):
        if self.ref:
            return self
        return Dih4Element(-self.rot % 4, 0)

    def __pow__(self, n):
        out = Dih4Element(0, 0)
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            out = out * base
        return out


E4 = Dih4Element(0, 0)


class GroupElement(NamedTuple):
    lower: Dih4Element  # small letters a, b
    upper: Dih4Element  # capitals A, B

    def __mul__(self, other):
        return GroupElement(self.lower * other.lower, self.upper * other.upper)

    def inverse(self):
        return GroupElement(self.lower.inverse(), self.upper.inverse())

    def __pow__(self, n):
        return GroupElement(self.lower ** n, self.upper ** n)

    def conjugate(self, h):
        """``h x h^-1``."""
        return h * self * h.inverse()

    def is_identity(self):
        return self == IDENTITY

    def __str__(self):
        (k, f), (K, F) = self
        return f"(r^{k} s^{f} | R^{K} S^{F})"

    @classmethod
    def parse(cls, text):
        import re
        m = re.fullmatch(
            r"\s*\(\s*r\^([0-3])\s+s\^([01])\s*\|\s*R\^([0-3])\s+S\^([01])\s*\)\s*", text)
        if not m:
            raise ValueError(f"not a group element: {text!r}")
        k, f, K, F = map(int, m.groups())
        return cls(Dih4Element(k, f), Dih4Element(K, F))


IDENTITY = GroupElement(E4, E4)


def mul(x, y):
    return x * y


class Letter(NamedTuple):
    base: str  # one of 'a', 'b', 'A', 'B'
    prime: bool = False

    def __str__(self):
        return self.base + ("'" if self.prime else "")

    @property
    def is_capital(self):
        return self.base.isupper()

    def toggled(self):
        return Letter(self.base, not self.prime)

    @classmethod
    def parse(cls, text):
        if text not in _LETTER_NAMES:
            raise ValueError(f"not a letter: {text!r}")
        return cls(text[0], text.endswith("'"))


_LETTER_NAMES = ("a", "a'", "b", "b'", "A", "A'", "B", "B'")
LETTERS = tuple(Letter.parse(s) for s in _LETTER_NAMES)

_S = Dih4Element(0, 1)
_R3S = Dih4Element(3, 1)
GEN = {
    "a": GroupElement(_S, E4),
    "b": GroupElement(_R3S, E4),
    "A": GroupElement(E4, _S),
    "B": GroupElement(E4, _R3S),
}
_PARTNER = {"a": "b", "b": "a", "A": "B", "B": "A"}


def letter_value(letter):
    """Primed letters are conjugates: a' = bab, b' = aba, A' = BAB, B' = ABA."""
    x = GEN[letter.base]
    if letter.prime:
        y = GEN[_PARTNER[letter.base]]
        return y * x * y
    return x


def parse_word(text):
    """``"a' B A b"`` or ``"a'BAb"`` -> list of letters."""
    import re
    return [Letter.parse(t) for t in re.findall(r"[abAB]'?", text)]


def evaluate_word(word):
    if isinstance(word, str):
        word = parse_word(word)
    out = IDENTITY
    for letter in word:
        out = out * letter_value(letter)
    return out


# --- automorphisms ---------------------------------------------------------

def _dih4_hom(img_s, img_b):
    """Extend generator images s -> img_s, (r^3 s) -> img_b to a map on Dih4.

    ``r = s * (r^3 s)``, so r^k s^f maps to (img_s img_b)^k img_s^f.
    """
    img_r = img_s * img_b
    return {Dih4Element(k, f): (img_r ** k) * (img_s ** f) for k in range(4) for f in range(2)}


# phi(a) = bab, phi(b) = aba, computed inside the lower factor
_LOW_PHI = _dih4_hom(_R3S * _S * _R3S, _S * _R3S * _S)


def phi(x):
    """The automorphism a -> bab, b -> aba fixing A and B."""
    return GroupElement(_LOW_PHI[x.lower], x.upper)


def psi(x):
    """The automorphism A -> BAB, B -> ABA fixing a and b."""
    return GroupElement(x.lower, _LOW_PHI[x.upper])


def chi(x):
    return phi(psi(x))


# --- enumeration and orbits ------------------------------------------------

def closure(generators, start=(IDENTITY,)):
    seen = set(start)
    todo = deque(start)
    while todo:
        g = todo.popleft()
        for h in generators:
            gh = g * h
            if gh not in seen:
                seen.add(gh)
                todo.append(gh)
    return frozenset(seen)


@lru_cache(maxsize=None)
def enumerate_group():
    return closure(tuple(GEN.values()))


class OrbitClass(NamedTuple):
    canonical: GroupElement
    members: frozenset

    def __str__(self):
        return str(self.canonical)

    def __contains__(self, x):
        return x in self.members


@lru_cache(maxsize=None)
def orbit(x):
    """Closure of ``{x}`` under conjugation by a, b, A, B and under phi, psi.

    The canonical member is the lexicographic minimum of the normal form.
    """
    maps = [lambda g, h=h: g.conjugate(h) for h in GEN.values()] + [phi, psi]
    seen = {x}
    todo = deque([x])
    while todo:
        g = todo.popleft()
        for f in maps:
            y = f(g)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return OrbitClass(min(seen), frozenset(seen))


def conjugacy_class(x):
    return frozenset(x.conjugate(h) for h in enumerate_group())


def orbit_classes():
    """The partition of D into orbit classes, ordered by canonical member."""
    return sorted({orbit(x) for x in enumerate_group()}, key=lambda o: o.canonical)
