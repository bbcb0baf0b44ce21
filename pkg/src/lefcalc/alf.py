"""
Achiral Lefschetz fibrations over D^2 with bounded fibers.

An ALF is recorded as its regular fiber, a Seifert form on the fiber, and
the ordered vanishing cycles.  The total space is the fiber times D^2 with a
2-handle attached along each cycle, on successive pages, with framing one
less (positive cycle) or one more (negative cycle) than the page framing.
"""

from dataclasses import dataclass, replace

from .errors import InputError, SurfaceMismatch
from .homology import KirbyData
from .openbook import OpenBook
from .surface import (CurveClass, SeifertForm, SignedTwist, Surface,
                      add_page_handle, embed, extend_seifert)


@dataclass(frozen=True)
class VanishingCycle:
    curve: CurveClass
    sign: int = 1
    rotation: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InputError("vanishing cycle sign must be +1 or -1")


@dataclass(frozen=True)
class ALF:
    fiber: Surface
    cycles: tuple = ()
    seifert: SeifertForm = None

    def __post_init__(self):
        if self.fiber.boundary_count < 1:
            raise InputError("ALF fibers must have boundary")
        object.__setattr__(self, "cycles", tuple(self.cycles))
        if self.seifert is None:
            object.__setattr__(self, "seifert", SeifertForm.default(self.fiber))
        elif self.seifert.surface != self.fiber:
            raise SurfaceMismatch("Seifert form is not on the fiber")
        for c in self.cycles:
            if c.curve.surface != self.fiber:
                raise SurfaceMismatch("vanishing cycle not on the fiber")

    @property
    def q(self):
        """Number of negative vanishing cycles."""
        return sum(1 for c in self.cycles if c.sign < 0)

    @property
    def rotations(self):
        return tuple(c.rotation for c in self.cycles)

    def with_rotations(self, rotations):
        rotations = list(rotations)
        if len(rotations) != len(self.cycles):
            raise InputError("need one rotation number per cycle")
        return replace(self, cycles=tuple(replace(c, rotation=int(r))
                                          for c, r in zip(self.cycles, rotations)))


@dataclass(frozen=True)
class ClosedALF:
    """Closed fibration over S^2; cycle classes live on the once-punctured fiber."""

    fiber: Surface
    cycles: tuple = ()
    section_self_intersections: tuple = (0,)

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(self.cycles))
        object.__setattr__(self, "section_self_intersections",
                           tuple(int(e) for e in self.section_self_intersections))
        if self.fiber.boundary_count != 1:
            raise InputError("closed ALF cycles must live on a once-punctured fiber")
        if not self.section_self_intersections:
            raise InputError("at least one section is required")

    @property
    def fiber_genus(self):
        return self.fiber.genus

    @property
    def q(self):
        return sum(1 for c in self.cycles if c.sign < 0)

    @property
    def euler_characteristic(self):
        return 2 * (2 - 2 * self.fiber_genus) + len(self.cycles)


def boundary_open_book(a):
    """Open book on the boundary: the fiber as page, cycle twists as monodromy."""
    return OpenBook(a.fiber, tuple(SignedTwist(c.curve, c.sign) for c in a.cycles))


def induced_kirby_data(a):
    """Handle description of the total space.

    Page i + 1 is pushed off page i, so for i < j the linking of the i-th
    and j-th attaching circles is L(c_j, c_i).
    """
    L = a.seifert
    cs = [c.curve for c in a.cycles]
    k = len(cs)
    Q = [[0] * k for _ in range(k)]
    for i in range(k):
        Q[i][i] = L(cs[i], cs[i]) - a.cycles[i].sign
        for j in range(i + 1, k):
            Q[i][j] = Q[j][i] = L(cs[j], cs[i])
    return KirbyData(a.fiber.h1_rank, tuple(c.coeffs for c in cs), Q)


def grow_fiber(a, fiber):
    """Re-express an ALF on a fiber obtained from its own by adding bands."""
    cycles = tuple(replace(c, curve=embed(c.curve, fiber)) for c in a.cycles)
    return ALF(fiber, cycles, extend_seifert(a.seifert, fiber))


def stabilize_alf(a, sign, join=None, rotation=0):
    """Add a fiber band and a vanishing cycle of the given sign across it.

    The total space is unchanged; the boundary open book is stabilized.
    `join` selects a boundary-joining band (see `add_page_handle`).
    """
    if sign not in (1, -1):
        raise InputError("stabilization sign must be +1 or -1")
    fiber = add_page_handle(a.fiber, join=join)
    b = grow_fiber(a, fiber)
    new = VanishingCycle(fiber.basis_vector(fiber.h1_rank - 1), sign, rotation)
    return replace(b, cycles=b.cycles + (new,))


def connect_boundary(a, sign=1):
    """Join boundary components with stabilizations until the fiber boundary is connected."""
    while a.fiber.boundary_count > 1:
        a = stabilize_alf(a, sign, join=a.fiber.boundary_basis()[-1])
    return a


def cap_to_closed(a, section_framings=(0,)):
    """Cap every fiber with a disk; the capping disks form the first section."""
    if a.fiber.boundary_count != 1:
        raise InputError(
            f"fiber has {a.fiber.boundary_count} boundary components; stabilize to connect them first")
    return ClosedALF(a.fiber, a.cycles, tuple(section_framings))


def mirror_cycles(cycles):
    """Cycles of the same fibration seen from the oppositely oriented side."""
    return tuple(replace(c, sign=-c.sign) for c in reversed(cycles))
