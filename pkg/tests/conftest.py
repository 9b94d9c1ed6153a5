import random
from fractions import Fraction

import pytest

from cherednik_kit.combinatorics import MultiPartition, ShapeAssignment
from cherednik_kit.scalars import ParameterPoint


def small_point(r: int, rng: random.Random, span: int = 30) -> ParameterPoint:
    """Random rational point with small numerators (fast exact arithmetic);
    genericity failures are detected and retried by the callers that care."""
    return ParameterPoint(
        r,
        Fraction(rng.randint(1, span), rng.randint(1, span)),
        [Fraction(rng.randint(-span, span), rng.randint(1, span)) for _ in range(r)],
    )


def compositions(n: int, max_total: int):
    """All length-n compositions with total <= max_total."""
    def rec(slots, remaining):
        if slots == 0:
            yield ()
            return
        for first in range(remaining + 1):
            for rest in rec(slots - 1, remaining - first):
                yield (first,) + rest

    out = []
    for total in range(max_total + 1):
        out.extend(c for c in rec(n, total) if sum(c) == total)
    return out


def enumerate_assignments(shape: MultiPartition, max_entry: int,
                          column_strict: bool = True, residues: bool = True):
    """All fillings of the shape with entries <= max_entry, filtered to
    weakly-increasing (constructor), optionally column-strict and
    residue-compatible."""
    r = shape.r
    boxes = shape.boxes()
    out = []

    def rec(k, acc):
        if k == len(boxes):
            vals = [[[0] * rl for rl in comp] for comp in shape.components]
            for b, v in zip(boxes, acc):
                vals[b.component][b.row - 1][b.column - 1] = v
            try:
                S = ShapeAssignment(shape, tuple(
                    tuple(tuple(row) for row in comp) for comp in vals))
            except ValueError:
                return
            if column_strict and not S.is_column_strict():
                return
            if residues and not S.satisfies_residues():
                return
            out.append(S)
            return
        b = boxes[k]
        start = b.component % r if residues else 0
        step = r if residues else 1
        for v in range(start, max_entry + 1, step):
            rec(k + 1, acc + (v,))

    rec(0, ())
    return out


@pytest.fixture
def rng():
    return random.Random(20110831)
