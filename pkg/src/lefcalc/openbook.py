"""
Open book decompositions given by monodromy factorizations.

An open book is a page surface together with an ordered word of signed Dehn
twists; the word (t_1, ..., t_k) stands for the composition t_1 o ... o t_k.
"""

from dataclasses import dataclass

from .errors import InputError, SurfaceMismatch
from .surface import (CurveClass, SignedTwist, add_page_handle, embed,
                      twist_matrix)
from . import intmat


@dataclass(frozen=True)
class OpenBook:
    page: object
    monodromy: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "monodromy", tuple(self.monodromy))
        if self.page.boundary_count < 1:
            raise InputError("an open book page needs nonempty binding")
        for t in self.monodromy:
            if t.curve.surface != self.page:
                raise SurfaceMismatch("monodromy twist not on the page")

    @property
    def binding_components(self):
        return self.page.boundary_count


@dataclass(frozen=True)
class MarkedKnot:
    """A Legendrian knot sitting on page `page_index` of an open book."""

    curve: CurveClass
    rotation: int = 0
    page_index: int = 0


def abelianized_monodromy(ob):
    """Product of the twist matrices in word order."""
    M = intmat.identity(ob.page.h1_rank)
    for t in ob.monodromy:
        M = intmat.matmul(M, twist_matrix(t), inner=ob.page.h1_rank)
    return M


def free_reduce(word, cancel_null=True):
    """Cancel adjacent twist pairs about the same class with opposite signs.

    With `cancel_null=False` twists about null-homologous classes never
    cancel: different curves share the zero class, so the class does not
    identify the curve.
    """
    out = []
    for t in word:
        if out and out[-1].curve == t.curve and out[-1].sign == -t.sign \
                and (cancel_null or any(t.curve.coeffs)):
            out.pop()
        else:
            out.append(t)
    return tuple(out)


def _grow(ob, page):
    word = tuple(SignedTwist(embed(t.curve, page), t.sign) for t in ob.monodromy)
    return word


def stabilize(ob, sign, join=None):
    """Add a page band and a twist of the given sign about the new basis class.

    `join` is forwarded to `add_page_handle` and selects a band that merges
    two binding components.
    """
    if sign not in (1, -1):
        raise InputError("stabilization sign must be +1 or -1")
    page = add_page_handle(ob.page, join=join)
    word = _grow(ob, page) + (SignedTwist(page.basis_vector(page.h1_rank - 1), sign),)
    return OpenBook(page, word)


def stabilize_knot_double(ob, k, sign):
    """Push a knot over one positive and one negative stabilization band.

    Returns the stabilized open book and the knot K' whose class is
    K + e_1 + sign * e_2 (e_1, e_2 the new bands, in that order).  Its page
    framing equals that of K and its rotation number is r(K) + 2 * sign.
    """
    if sign not in (1, -1):
        raise InputError("sign must be +1 or -1")
    if k.curve.surface != ob.page:
        raise SurfaceMismatch("knot does not lie on the page")
    if not 0 <= k.page_index <= len(ob.monodromy):
        raise InputError("knot page index out of range")
    ob2 = stabilize(stabilize(ob, 1), -1)
    n = ob2.page.h1_rank
    curve = embed(k.curve, ob2.page) + ob2.page.basis_vector(n - 2) \
        + sign * ob2.page.basis_vector(n - 1)
    return ob2, MarkedKnot(curve, k.rotation + 2 * sign, k.page_index)


def page_surgery(ob, c, contact_coeff):
    """Contact (+1) or (-1) surgery on a Legendrian curve on the page.

    Appends the twist about `c` with sign -contact_coeff.
    """
    if contact_coeff not in (1, -1):
        raise InputError("contact surgery coefficient must be +1 or -1")
    if c.surface != ob.page:
        raise SurfaceMismatch("surgery curve not on the page")
    return OpenBook(ob.page, ob.monodromy + (SignedTwist(c, -contact_coeff),))
