"""
Homotopy invariants of the contact plane field on the boundary of an ALF.

P.D. c1 is the rotation-weighted sum of the 2-handle meridians in H_1 of the
boundary.  When it vanishes,

    d3 = (c^2 - 3 sigma - 2 chi) / 4 + q

with q the number of negative vanishing cycles.
"""

from dataclasses import dataclass, replace
from fractions import Fraction

from .alf import grow_fiber, induced_kirby_data, stabilize_alf
from .errors import (ChernClassNonzero, InputError, IntegrityError,
                     NonIntegralGap, NotInImage, RotationAdjustmentError)
from .homology import (c_squared, euler_characteristic, h1_boundary,
                       meridian_combination, signature, solve_integer)
from .surface import add_page_handle


@dataclass(frozen=True)
class ChernClass:
    """Element of H_1(boundary) in the Smith-reduced coordinates of `group`."""

    group: object
    vector: tuple

    @property
    def two_torsion(self):
        """True when H_1 has even torsion, outside the regime the formulas assume."""
        return self.group.has_two_torsion

    def is_zero(self):
        return not any(self.vector)

    def __str__(self):
        return f"{self.vector} in {self.group}"


@dataclass(frozen=True)
class HomotopyClass:
    c1: ChernClass
    d3: Fraction = None
    q: int = 0

    def __post_init__(self):
        if self.d3 is not None and not self.c1.is_zero():
            raise InputError("d3 is only defined when c1 = 0")


@dataclass(frozen=True)
class StabilizationPlan:
    """Rotation moves (cycle index, a_i, sign of each move) and extra negative stabilizations."""

    moves: tuple = ()
    extra_negative_stabs: int = 0

    def rotation_shift(self, index):
        return sum(-2 * a for i, a, _ in self.moves if i == index)


def chern_class(a):
    k = induced_kirby_data(a)
    h1 = h1_boundary(k)
    return ChernClass(h1.group, meridian_combination(k, a.rotations, h1))


def d3(a):
    """d3 of the boundary plane field; requires c1 = 0."""
    k = induced_kirby_data(a)
    if any(meridian_combination(k, a.rotations)):
        raise ChernClassNonzero("c1 is nonzero; run adjust_rotations first")
    c2 = c_squared(k, a.rotations)
    return (c2 - 3 * signature(k) - 2 * euler_characteristic(k)) / 4 + a.q


def homotopy_class(a):
    c1 = chern_class(a)
    return HomotopyClass(c1, d3(a) if c1.is_zero() else None, a.q)


def wu_rotations(a):
    """Rotation numbers congruent to the 2-handle framings mod 2.

    These make the class dual to sum r_i C_i characteristic on H_2 of the
    total space, which is the parity Legendrian realizations must satisfy.
    """
    k = induced_kirby_data(a)
    return tuple(k.linking[i][i] % 2 for i in range(k.n2))


def rotation_move(a, index, sign):
    """Push cycle `index` over a fresh positive and negative stabilization.

    The two stabilizing cycles are put at the front of the cycle list, the
    pushed cycle gains e_1 + sign * e_2 and its rotation changes by 2 * sign.
    Returns the new ALF and the new position of the pushed cycle.
    """
    if sign not in (1, -1):
        raise InputError("sign must be +1 or -1")
    if not 0 <= index < len(a.cycles):
        raise InputError(f"cycle index {index} out of range")
    fiber = add_page_handle(add_page_handle(a.fiber))
    b = grow_fiber(a, fiber)
    n = fiber.h1_rank
    e1, e2 = fiber.basis_vector(n - 2), fiber.basis_vector(n - 1)
    cycles = list(b.cycles)
    old = cycles[index]
    cycles[index] = replace(old, curve=old.curve + e1 + sign * e2,
                            rotation=old.rotation + 2 * sign)
    front = (type(old)(e1, 1, 0), type(old)(e2, -1, 0))
    return replace(b, cycles=front + tuple(cycles)), index + 2


def shift_rotation(a, index, amount):
    """Apply |amount| rotation moves so that cycle `index` rotation changes by -2 * amount."""
    sign = -1 if amount > 0 else 1
    for _ in range(abs(amount)):
        a, index = rotation_move(a, index, sign)
    return a, index


def _rotation_solution(a, h1, target):
    # Prefer moving only the cycles that carry rotation; fall back to all.
    group = h1.group
    ncycles = len(a.cycles)
    carrying = [i for i in range(ncycles) if a.cycles[i].rotation]
    for support in (carrying, list(range(ncycles))):
        cols = [[2 * x for x in h1.images[i].vector] for i in support]
        for j, d in enumerate(group.torsion):
            cols.append([d * int(i == j) for i in range(group.ngens)])
        M = [[col[r] for col in cols] for r in range(group.ngens)]
        try:
            y = solve_integer(M, list(target), ncols=len(cols))
        except NotInImage:
            continue
        coeffs = [0] * ncycles
        for i, ai in zip(support, y):
            coeffs[i] = ai
        return coeffs
    raise RotationAdjustmentError(
        "P.D. c1 is not in the subgroup generated by 2 c_1, ..., 2 c_l")


def adjust_rotations(a):
    """Shift rotations by even amounts until c1 = 0.

    Solves sum_i a_i (2 c_i) = P.D. c1 in H_1 of the boundary and applies
    the resulting rotation moves.
    """
    k = induced_kirby_data(a)
    h1 = h1_boundary(k)
    target = meridian_combination(k, a.rotations, h1)
    if not any(target):
        return a, StabilizationPlan()
    coeffs = _rotation_solution(a, h1, target)
    ncycles = len(a.cycles)
    positions = list(range(ncycles))
    moves = []
    for i, ai in enumerate(coeffs):
        if not ai:
            continue
        a, new_pos = shift_rotation(a, positions[i], ai)
        shift = new_pos - positions[i]
        positions = [p + shift for p in positions]
        moves.append((i, ai, -1 if ai > 0 else 1))
    if not chern_class(a).is_zero():
        raise IntegrityError("rotation adjustment did not kill c1")
    return a, StabilizationPlan(tuple(moves))


def negative_stabilize(a, count):
    for _ in range(count):
        a = stabilize_alf(a, -1)
    return a


def match_d3(a1, a2):
    """Negatively stabilize both sides (at least once each) until d3 agrees.

    The side with the smaller d3 absorbs the extra stabilizations.
    """
    d1, d2 = d3(a1), d3(a2)
    gap = d2 - d1
    if gap.denominator != 1:
        raise NonIntegralGap(f"d3 values {d1} and {d2} differ by a non-integer")
    gap = int(gap)
    n1 = 1 + max(gap, 0)
    n2 = 1 + max(-gap, 0)
    b1, b2 = negative_stabilize(a1, n1), negative_stabilize(a2, n2)
    if d3(b1) != d3(b2):
        raise IntegrityError("negative stabilization failed to match d3")
    return b1, b2, StabilizationPlan((), n1), StabilizationPlan((), n2)
