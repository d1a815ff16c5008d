"""Group-valued invariant of virtual knots carrying two parities.

Chords of a Gauss diagram carry an index in Z2 + Z2.  Ends of a- and
b-chords become letters in ``D = Dih4 x Dih4``; the product ``w`` is an
invariant of long knots, and its orbit under conjugation and two outer
twists is an invariant of closed c-even knots.
"""

from .coxeter import (
    IDENTITY, LETTERS, Dih4Element, GroupElement, Letter, OrbitClass, chi, enumerate_group,
    evaluate_word, letter_value, mul, orbit, phi, psi,
)
from .gauss import Endpoint, GaussCodeError, GaussDiagram, Role, parse, serialize, validate
from .indexing import (
    ChordIndex, WindingDecoratedDiagram, derive_indices, index_sum, parse_windings,
    r3_index_admissible,
)
from .invariant import (
    InvariantUndefined, LetterWord, ParityProfile, assign_letters, compact_invariant,
    is_nontrivial, parity_profile, w, w_after,
)
from .moves import (
    Delta, InvalidMove, R1Add, R1Remove, R2Add, R2Remove, R3, RotateBasepoint,
    RotationEffect, applicable_moves, apply_move, check_move, parse_move, random_diagram,
    random_move_sequence, rotate_basepoint,
)

__version__ = "0.1.0"
