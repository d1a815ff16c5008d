"""Randomised invariance checks: random diagrams, random move sequences.

Each trial is reproducible from its integer seed alone, see :func:`trial_seed`.
"""

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .invariant import compact_invariant, parity_profile, w, w_after
from .moves import apply_move, random_diagram, random_move, rotate_basepoint


@dataclass
class TrialResult:
    seed: int
    ok: bool
    moves: Counter = field(default_factory=Counter)
    diagram: Optional[str] = None  # diagram the failing move was applied to
    move: Optional[str] = None
    step: Optional[int] = None
    detail: str = ""


@dataclass
class FuzzSummary:
    trials: int
    failures: int
    seed: int
    kind: str
    c_even: bool
    max_chords: int
    max_length: int
    moves: Counter
    counterexample: Optional[TrialResult] = None

    def as_dict(self):
        out = {
            "trials": self.trials, "failures": self.failures, "seed": self.seed,
            "kind": self.kind, "c_even": self.c_even, "max_chords": self.max_chords,
            "max_length": self.max_length, "moves": dict(sorted(self.moves.items())),
            "counterexample": None,
        }
        cx = self.counterexample
        if cx is not None:
            out["counterexample"] = {"trial_seed": cx.seed, "diagram": cx.diagram,
                                     "move": cx.move, "step": cx.step, "detail": cx.detail}
        return out


def trial_seed(seed, i):
    return seed * 1_000_003 + i


def run_trial(seed, max_chords=12, kind="long", c_even=False, max_length=20, rotate_prob=1 / 3):
    """Random diagram plus up to ``max_length`` moves; check every invariance claim.

    Long: w and w_after survive every isotopy move.  Closed: the raw w survives
    isotopy moves and follows the rotation law at each basepoint rotation;
    when c-even, the compact invariant never changes.
    """
    rng = random.Random(seed)
    d = random_diagram(rng.getrandbits(32), max_chords, kind, c_even)
    length = rng.randint(1, max_length) if max_length > 0 else 0
    res = TrialResult(seed, True)
    c_ok = kind == "closed" and parity_profile(d).c_even
    w0, wa0 = w(d), w_after(d)
    k0 = compact_invariant(d) if c_ok else None

    def fail(step, m, before, detail):
        res.ok = False
        res.step, res.move, res.diagram, res.detail = step, str(m), str(before), detail
        return res

    for step in range(length):
        before = d
        if kind == "closed" and d.endpoints and rng.random() < rotate_prob:
            d, effect = rotate_basepoint(d)
            res.moves["Rotate"] += 1
            expected = effect.apply(w0)
            w0, wa0 = w(d), w_after(d)
            if w0 != expected:
                return fail(step, "Rotate", before, f"rotation law {effect}: got {w0}, expected {expected}")
            if c_ok and compact_invariant(d) != k0:
                return fail(step, "Rotate", before, "compact invariant changed under rotation")
            continue
        m = random_move(d, rng)
        res.moves[type(m).__name__] += 1
        d = apply_move(d, m)
        w1, wa1 = w(d), w_after(d)
        if w1 != w0:
            return fail(step, m, before, f"w changed: {w0} -> {w1}")
        if wa1 != wa0:
            return fail(step, m, before, f"w_after changed: {wa0} -> {wa1}")
        if c_ok and compact_invariant(d) != k0:
            return fail(step, m, before, "compact invariant changed")
    return res


def _run_chunk(args):
    seeds, kw = args
    return [run_trial(s, **kw) for s in seeds]


def run_fuzz(trials, max_chords=12, seed=0, kind="long", c_even=False, max_length=20, jobs=1):
    if trials < 0 or max_chords < 0:
        raise ValueError("trials and max_chords must be >= 0")
    seeds = [trial_seed(seed, i) for i in range(trials)]
    kw = dict(max_chords=max_chords, kind=kind, c_even=c_even, max_length=max_length)
    if jobs > 1 and trials > 1:
        chunks = [seeds[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(jobs) as ex:
            parts = list(ex.map(_run_chunk, [(c, kw) for c in chunks]))
        results = sorted((r for part in parts for r in part), key=lambda r: r.seed)
    else:
        results = _run_chunk((seeds, kw))

    moves = Counter()
    for r in results:
        moves.update(r.moves)
    failed = [r for r in results if not r.ok]
    return FuzzSummary(trials, len(failed), seed, kind, c_even, max_chords, max_length,
                       moves, failed[0] if failed else None)
