"""
Arithmetic in Dih4 x Dih4
=========================

Letters, words, the two twisting automorphisms and orbit classes.
"""

# %%
# Every element prints as a pair of dihedral elements, rotation first.
from twoparity.coxeter import (
    GEN, IDENTITY, closure, enumerate_group, evaluate_word, orbit, orbit_classes,
    parse_word, phi, psi,
)

a, b, A, B = (GEN[k] for k in "abAB")
print("a  =", a)
print("ab =", a * b)
print("order of ab:", next(k for k in range(1, 9) if (a * b) ** k == IDENTITY))

# %%
# Words are parsed letter by letter, primes included.
word = parse_word("a'b A B'")
print([str(l) for l in word], "->", evaluate_word(word))
print("a'b == b'a' ?", evaluate_word(parse_word("a'b")) == evaluate_word(parse_word("b'a'")))

# %%
# phi twists the small letters, psi the capitals.
print("phi(a) =", phi(a), " bab =", b * a * b)
print("psi(A) =", psi(A), " BAB =", B * A * B)

# %%
# Sizes and orbit classes.
print(len(closure((a, b))), "elements in <a,b>;", len(enumerate_group()), "in total")
classes = orbit_classes()
print(len(classes), "orbit classes, sizes", sorted(len(o.members) for o in classes))
print("orbit of abAB has canonical member", orbit(a * b * A * B).canonical)
