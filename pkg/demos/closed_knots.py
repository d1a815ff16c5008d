"""
Closed diagrams, basepoints and index derivation
================================================
"""

# %%
# Moving the basepoint past one endpoint changes w in a controlled way.
# The conjugation rule needs an even number of c-chords.
from twoparity import compact_invariant, derive_indices, parse, parse_windings, rotate_basepoint, w
from twoparity.fuzz import run_fuzz
from twoparity.gauss import serialize

d = parse("closed U1:c U2:c O1:c O2:c U3:a O3:a")
for _ in range(len(d.endpoints)):
    nxt, eff = rotate_basepoint(d)
    print(f"{serialize(d):32s} {str(w(d)):22s} {eff.kind} {eff.letter or ''}")
    assert w(nxt) == eff.apply(w(d))
    d = nxt

# %%
# The orbit class does not depend on the basepoint (c-even only).
k = compact_invariant(d)
print("canonical:", k.canonical, "class size", len(k.members))

# %%
# Indices can be read off from arc windings on the torus.
wd = parse_windings("closed U1 [1,0] O1 [0,1] U2 [1,1] O2 [0,0]")
print(serialize(derive_indices(wd)))

# %%
# A short randomised check; the CLI ``twoparity fuzz`` runs the same thing.
summary = run_fuzz(200, max_chords=10, seed=5, kind="closed", c_even=True)
print(summary.as_dict())
