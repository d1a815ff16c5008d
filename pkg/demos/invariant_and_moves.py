"""
Computing w and moving diagrams around
======================================

Parse a Gauss code, read off its letters, then check that R-moves
leave ``w`` alone while a Delta move does not.
"""

# %%
from twoparity import (
    Delta, R3, apply_move, applicable_moves, assign_letters, check_move, parse,
    parity_profile, random_diagram, random_move_sequence, serialize, w, w_after,
)

d = parse("long U1:a U2:b O1:a O2:b")
print(serialize(d))
print("letters:", assign_letters(d))
print("w      :", w(d))
print(parity_profile(d).as_dict())

# %%
# A c-odd diagram where the two letter rules disagree.
d = parse("long U1:a U2:c O1:a O2:c")
print("before:", assign_letters(d), w(d))
print("after :", assign_letters(d, "after"), w_after(d))

# %%
# An R3 move rearranges a triangle; w is unchanged.
d = parse("long O1:a O2:b U1:a U3:c U2:b O3:c")
m = R3(((0, 1), (2, 3), (4, 5)))
d2 = apply_move(d, m)
print(serialize(d), "->", serialize(d2))
print(w(d) == w(d2))

# %%
# Three mixed pieces are a Delta configuration, not an R3 one.
d = parse("long U1:a O2:b U3:c O1:a U2:b O3:c")
pairs = ((0, 1), (2, 3), (4, 5))
print("R3   :", check_move(d, R3(pairs)))
print("Delta:", w(d), "->", w(apply_move(d, Delta(pairs))))

# %%
# Random diagrams with planted gadgets and random move sequences.
d = random_diagram(seed=3, max_chords=10)
print(serialize(d))
print(len(applicable_moves(d)), "applicable moves")
for move, nxt in random_move_sequence(d, seed=1, length=5):
    print(f"{str(move):28s} w={w(nxt)}")
