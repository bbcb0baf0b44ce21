"""Combinatorial calculus for achiral Lefschetz fibrations, open books and
the c1 / d3 invariants of their boundary plane fields.

All arithmetic is exact (Python ints and fractions.Fraction).
"""

from .alf import (ALF, ClosedALF, VanishingCycle, boundary_open_book,
                  cap_to_closed, connect_boundary, induced_kirby_data,
                  stabilize_alf)
from .assembler import (ClosedManifoldInput, corollary_framings, run_pipeline,
                        split)
from .errors import (ChernClassNonzero, DocumentError, InputError,
                     IntegrityError, LefcalcError, NonIntegralGap, NotInImage,
                     RotationAdjustmentError, SurfaceMismatch)
from .harer import (DoublePoint, LinkComponent, ProjectedLink, genus_bound,
                    harer_alf, replay)
from .homology import (AbelianGroup, KirbyData, c_squared, h1_boundary,
                       h1_total, signature, smith_normal_form)
from .invariants import (adjust_rotations, chern_class, d3, homotopy_class,
                         match_d3, rotation_move, wu_rotations)
from .openbook import MarkedKnot, OpenBook, abelianized_monodromy, stabilize
from .surface import (CurveClass, SeifertForm, SignedTwist, Surface,
                      add_page_handle, intersection_number, torus_sum,
                      twist_action)

__version__ = "0.1.0"
