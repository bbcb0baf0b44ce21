"""
Closed 4-manifold pipeline.

A closed handle decomposition splits into Y1 (0-, 1- and 2-handles) and Y2
(3- and 4-handles, read upside down as a 1-handlebody).  Both halves get
ALFs over D^2: Y1 through Harer's construction, Y2 as the trivial fibration
of a genus k surface with one boundary circle times D^2.  After killing c1
on the Y1 side and negatively stabilizing both sides until d3 agrees, the
two boundary contact structures are overtwisted with the same homotopy
class, so they are isotopic.  Gluing along the pages gives a fibration over
S^2 on the complement W of a circle in X, and X is W with S^1 x D^3 glued
back in.

We cannot produce the common positive stabilization of the two open books,
so the closed cycle list is only formed when the two open books already
agree word for word (after free cancellation).  The certificate records
the invariant match either way.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction

from . import homology
from .alf import (ALF, ClosedALF, boundary_open_book, connect_boundary,
                  induced_kirby_data, mirror_cycles)
from .errors import (InputError, IntegrityError, NonIntegralGap,
                     RotationAdjustmentError)
from .harer import HarerTranscript, LinkComponent, ProjectedLink, harer_alf
from .invariants import (StabilizationPlan, adjust_rotations, chern_class, d3,
                         match_d3, wu_rotations)
from .openbook import free_reduce
from .surface import Surface


@dataclass(frozen=True)
class ClosedManifoldInput:
    link: ProjectedLink
    n3: int = 0
    n4: int = 1

    @property
    def kirby(self):
        return self.link.kirby_data(self.n3, self.n4)

    @property
    def euler_characteristic(self):
        return homology.euler_characteristic(self.kirby)


@dataclass(frozen=True)
class FiberSpec:
    """Fiber of the trivial fibration on the upside-down 3-/4-handle half."""

    genus: int
    boundary_count: int = 1

    @property
    def surface(self):
        return Surface(self.genus, self.boundary_count)

    def trivial_alf(self):
        return ALF(self.surface)


def split(inp):
    """Y1 link data and the Y2 fiber, adding a cancelling 2-/3-handle pair if n3 is odd."""
    if inp.n4 != 1:
        raise InputError(f"a closed connected manifold has exactly one 4-handle, got n4={inp.n4}")
    if inp.n3 < 0:
        raise InputError("n3 must be nonnegative")
    link, n3 = inp.link, inp.n3
    if n3 % 2:
        link = replace(link, components=link.components + (LinkComponent((), 0),))
        n3 += 1
    bdy = homology.h1_boundary(link.kirby_data()).group
    if bdy.torsion or bdy.free_rank != n3:
        raise InputError(
            f"boundary of the 2-handlebody has H_1 = {bdy}, which a union of "
            f"{n3} 3-handles and a 4-handle cannot cap off")
    return link, FiberSpec(n3 // 2)


@dataclass(frozen=True)
class MatchCertificate:
    """Evidence that the two boundary contact structures are isotopic.

    Both are overtwisted (at least one negative stabilization each) and have
    c1 = 0 and equal d3, so they are homotopic and hence isotopic as
    overtwisted structures.  This is a certificate, not a diffeomorphism.
    """

    c1_side1_zero: bool
    c1_side2_zero: bool
    d3_common: Fraction
    negative_stabs: tuple
    syntactic_match: bool

    def __post_init__(self):
        if min(self.negative_stabs) < 1:
            raise IntegrityError("each side needs a negative stabilization to be overtwisted")


@dataclass(frozen=True)
class FramingVariant:
    """One of the two ways of gluing S^1 x D^3 back in.

    `bit` is the Z/2 framing class, `binding_framing` the framing the page
    induces on the surgery curve, `page_rank` the rank of H_1 of the page
    carrying the curve, and `section_self_intersection` the integer lift of
    the bit recorded on the capping section.
    """

    bit: int
    binding_framing: int
    page_rank: int
    section_self_intersection: int
    label: str = None


@dataclass(frozen=True)
class SurgeryOutput:
    closed_alf: ClosedALF
    surgery_description: str
    framing_bit: int
    framing_variants: tuple
    euler_characteristic: int
    signature: int
    input_euler_characteristic: int


@dataclass(frozen=True)
class PipelineTranscript:
    added_cancelling_pair: bool
    fiber_genus_side2: int
    harer: HarerTranscript = field(repr=False)
    initial_rotations: tuple = ()
    rotation_plan: StabilizationPlan = StabilizationPlan()
    d3_before: tuple = ()
    stabilization_plans: tuple = ()
    side1: ALF = field(default=None, repr=False)
    side2: ALF = field(default=None, repr=False)


def _label(bit, simply_connected):
    if not simply_connected:
        return None
    return "X # S2~xS2" if bit else "X # S2xS2"


def figure5_move(v, simply_connected=False):
    """Push the surgery curve over two more positive stabilizations.

    The page framing drops by one while the framing from the fiber is
    unchanged, so the Z/2 bit flips.
    """
    bit = 1 - v.bit
    return FramingVariant(bit, v.binding_framing - 1, v.page_rank + 2,
                          -1 if bit else 0, _label(bit, simply_connected))


def corollary_framings(out, simply_connected=None):
    """The original framing record and its Figure-5 variant."""
    first = out.framing_variants[0]
    if simply_connected is None:
        simply_connected = first.label is not None
    return first, figure5_move(first, simply_connected)


def _total_invariants(a):
    k = induced_kirby_data(a)
    return homology.euler_characteristic(k), homology.signature(k)


def run_pipeline(inp, cancel_sign=1):
    """Run split, Harer, c1 killing, d3 matching and gluing on a closed manifold.

    Returns (MatchCertificate, SurgeryOutput, PipelineTranscript).
    """
    link, spec = split(inp)
    added = len(link.components) != len(inp.link.components)

    alf1, harer_tr = harer_alf(link, cancel_sign)
    alf1 = alf1.with_rotations(wu_rotations(alf1))
    initial_rotations = alf1.rotations
    try:
        alf1, rot_plan = adjust_rotations(alf1)
    except RotationAdjustmentError as exc:
        raise IntegrityError(f"could not kill c1 on the 2-handle side: {exc}") from exc
    alf2 = spec.trivial_alf()
    if not chern_class(alf2).is_zero():
        raise IntegrityError("trivial fibration has nonzero c1")

    d3_before = (d3(alf1), d3(alf2))
    try:
        b1, b2, p1, p2 = match_d3(alf1, alf2)
    except NonIntegralGap as exc:
        raise IntegrityError(str(exc)) from exc
    b1, b2 = connect_boundary(b1), connect_boundary(b2)

    z1, z2 = chern_class(b1).is_zero(), chern_class(b2).is_zero()
    e1, e2 = d3(b1), d3(b2)
    if not (z1 and z2) or e1 != e2:
        raise IntegrityError("boundary invariants do not match after stabilization")

    ob1, ob2 = boundary_open_book(b1), boundary_open_book(b2)
    syntactic = ob1.page == ob2.page and \
        free_reduce(ob1.monodromy, False) == free_reduce(ob2.monodromy, False)
    cert = MatchCertificate(z1, z2, e1, (p1.extra_negative_stabs, p2.extra_negative_stabs),
                            syntactic)

    (chi1, sig1), (chi2, sig2) = _total_invariants(b1), _total_invariants(b2)
    chi_out = chi1 + chi2 + 2
    if chi_out != inp.euler_characteristic + 2:
        raise IntegrityError(f"Euler characteristic bookkeeping failed: {chi_out}")

    closed = None
    if syntactic:
        closed = ClosedALF(b1.fiber, b1.cycles + mirror_cycles(b2.cycles), (0,))
        if closed.euler_characteristic != chi_out:
            raise IntegrityError("closed fibration has the wrong Euler characteristic")

    simply_connected = inp.link.n1 == 0
    original = FramingVariant(0, 0, b1.fiber.h1_rank, 0, _label(0, simply_connected))
    variants = (original, figure5_move(original, simply_connected))
    out = SurgeryOutput(
        closed_alf=closed,
        surgery_description="X = W u S1xD3; the circle is the core of the glued-in S1xD3",
        framing_bit=0,
        framing_variants=variants,
        euler_characteristic=chi_out,
        signature=sig1 - sig2,
        input_euler_characteristic=inp.euler_characteristic,
    )
    tr = PipelineTranscript(added, spec.genus, harer_tr, initial_rotations, rot_plan,
                            d3_before, (p1, p2), b1, b2)
    return cert, out, tr
