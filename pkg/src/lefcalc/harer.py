"""
Harer's construction: a 2-handlebody given as a framed link projected onto a
disk with holes becomes an achiral Lefschetz fibration over D^2.

The input fiber is a disk with n1 holes sitting flat in S^3 (zero Seifert
form), one hole per 1-handle.  Each link component runs around the holes
according to its band word and may cross itself or other components at
double points.  The construction

1. takes a connected sum with a torus at every double point and cancels the
   two new bands with vanishing cycles of a chosen sign;
2. moves the over-strand across the first torus band (and, when the earlier
   component is on top, the under-strand too) so that each component
   becomes a class on the enlarged fiber;
3. corrects framings with extra bands and cancelling cycles until each
   component sits at page framing -1 or +1, and finally
4. turns every component into a vanishing cycle of the matching sign.

All bookkeeping is on homology classes.  Sliding the components off the
cancelling cycles and cancelling them reproduces the input handle data
exactly, which the tests check against the homology engine.
"""

from dataclasses import dataclass, field

from .alf import ALF, VanishingCycle
from .errors import InputError, IntegrityError
from .homology import KirbyData
from .surface import CurveClass, Surface, add_page_handle, torus_sum


@dataclass(frozen=True)
class DoublePoint:
    """Crossing of the projection: strand `over_strand` of component `over`
    passes above strand `under_strand` of component `under`."""

    over: int
    under: int
    over_strand: int = 0
    under_strand: int = 0
    sign: int = 1


@dataclass(frozen=True)
class LinkComponent:
    """`band_word` lists signed 1-based hole indices in traversal order;
    `target_framing` is measured against the blackboard framing."""

    band_word: tuple = ()
    target_framing: int = 0

    def __post_init__(self):
        object.__setattr__(self, "band_word", tuple(int(b) for b in self.band_word))


@dataclass(frozen=True)
class ProjectedLink:
    n1: int = 0
    components: tuple = ()
    double_points: tuple = ()
    declared_bridge_number: int = None

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "double_points", tuple(self.double_points))
        self.validate()

    def validate(self):
        if self.n1 < 0:
            raise InputError("n1 must be nonnegative")
        for i, comp in enumerate(self.components):
            for b in comp.band_word:
                if b == 0 or abs(b) > self.n1:
                    raise InputError(f"component {i} traverses nonexistent 1-handle {b}")
        k = len(self.components)
        for x, dp in enumerate(self.double_points):
            for comp, strand in ((dp.over, dp.over_strand), (dp.under, dp.under_strand)):
                if not 0 <= comp < k:
                    raise InputError(f"double point {x} references missing component {comp}")
                nstrands = max(len(self.components[comp].band_word), 1)
                if not 0 <= strand < nstrands:
                    raise InputError(f"double point {x} references missing strand {strand}")
            if dp.sign not in (1, -1):
                raise InputError(f"double point {x} has sign {dp.sign}")
        for i in range(k):
            for j in range(i + 1, k):
                if self._over_sum(i, j) != self._over_sum(j, i):
                    raise InputError(
                        f"crossings of components {i} and {j} give inconsistent linking numbers")

    def _over_sum(self, i, j):
        return sum(dp.sign for dp in self.double_points if dp.over == i and dp.under == j)

    def linking_number(self, i, j):
        lo, hi = min(i, j), max(i, j)
        return self._over_sum(lo, hi)

    def writhe(self, i):
        return sum(dp.sign for dp in self.double_points if dp.over == dp.under == i)

    def homology_class(self, i):
        coeffs = [0] * self.n1
        for b in self.components[i].band_word:
            coeffs[abs(b) - 1] += 1 if b > 0 else -1
        return tuple(coeffs)

    def kirby_data(self, n3=0, n4=0):
        """Handle data of the 2-handlebody the projected link describes."""
        k = len(self.components)
        Q = [[0] * k for _ in range(k)]
        for i in range(k):
            Q[i][i] = self.components[i].target_framing + self.writhe(i)
            for j in range(i + 1, k):
                Q[i][j] = Q[j][i] = self.linking_number(i, j)
        return KirbyData(self.n1, tuple(self.homology_class(i) for i in range(k)), Q, n3, n4)


@dataclass(frozen=True)
class TorusSum:
    double_point: int


@dataclass(frozen=True)
class CancellingPair:
    sign: int
    band: int


@dataclass(frozen=True)
class FramingMove:
    component: int
    sign: int


@dataclass(frozen=True)
class HarerTranscript:
    moves: tuple
    fiber: Surface = None
    cycles: tuple = field(default=(), repr=False)


def _build(p, moves, rotations=None):
    fiber = Surface(0, p.n1 + 1)
    coeffs = [list(p.homology_class(i)) for i in range(len(p.components))]
    helpers = []            # (basis index, sign)
    crossing_band = {}      # double point -> first torus band
    for move in moves:
        if isinstance(move, TorusSum):
            fiber = torus_sum(fiber)
            crossing_band[move.double_point] = fiber.h1_rank - 2
            for c in coeffs:
                c.extend((0, 0))
        elif isinstance(move, CancellingPair):
            if move.sign not in (1, -1) or not 0 <= move.band < fiber.h1_rank:
                raise IntegrityError(f"bad cancelling pair {move}")
            helpers.append((move.band, move.sign))
        elif isinstance(move, FramingMove):
            if move.sign not in (1, -1) or not 0 <= move.component < len(coeffs):
                raise IntegrityError(f"bad framing move {move}")
            fiber = add_page_handle(fiber)
            for c in coeffs:
                c.append(0)
            coeffs[move.component][-1] = 1
            helpers.append((fiber.h1_rank - 1, move.sign))
        else:
            raise IntegrityError(f"unknown move {move!r}")
    helper_sign = dict(helpers)
    for x, band in crossing_band.items():
        dp = p.double_points[x]
        coeffs[dp.over][band] += 1
        if dp.under != dp.over and dp.over < dp.under:
            coeffs[dp.under][band] -= helper_sign[band] * dp.sign

    kirby = p.kirby_data()
    cycles = [VanishingCycle(fiber.basis_vector(t), s, 0) for t, s in helpers]
    rotations = rotations or (0,) * len(coeffs)
    if len(rotations) != len(coeffs):
        raise InputError("need one rotation number per link component")
    for i, c in enumerate(coeffs):
        relative = kirby.linking[i][i] + sum(helper_sign[t] * c[t] ** 2 for t in helper_sign)
        if relative not in (1, -1):
            raise IntegrityError(f"component {i} ends at relative framing {relative}")
        cycles.append(VanishingCycle(CurveClass(fiber, c), -relative, int(rotations[i])))
    return ALF(fiber, cycles)


def _plan(p, cancel_sign):
    moves = []
    used = [0] * len(p.components)   # number of cancelled bands each component crosses
    rank = p.n1
    for x, dp in enumerate(p.double_points):
        moves.append(TorusSum(x))
        moves += [CancellingPair(cancel_sign, rank), CancellingPair(cancel_sign, rank + 1)]
        rank += 2
        used[dp.over] += 1
        if dp.under != dp.over and dp.over < dp.under:
            used[dp.under] += 1
    kirby = p.kirby_data()
    for i in range(len(p.components)):
        relative = kirby.linking[i][i] + cancel_sign * used[i]
        while relative not in (1, -1):
            step = -1 if relative > 1 else 1
            moves.append(FramingMove(i, step))
            relative += step
    return tuple(moves)


def harer_alf(p, cancel_sign=1, rotations=None):
    """ALF over D^2 on the 2-handlebody described by `p`, with its transcript.

    `cancel_sign` is the sign of the cycles cancelling torus bands;
    `rotations` gives one rotation number per link component (default 0).
    Cancelling cycles come first in the cycle list, link components last.
    """
    if cancel_sign not in (1, -1):
        raise InputError("cancel_sign must be +1 or -1")
    moves = _plan(p, cancel_sign)
    a = _build(p, moves, rotations)
    return a, HarerTranscript(moves, a.fiber, a.cycles)


def replay(p, transcript, rotations=None):
    """Rebuild the ALF recorded by a transcript."""
    return _build(p, transcript.moves, rotations)


def genus_bound(p):
    """Fiber genus achievable with the bridge-position variant of the construction."""
    if p.declared_bridge_number is None:
        if not p.components:
            return 0
        raise InputError("no bridge number declared for this link")
    return p.declared_bridge_number
