"""Evaluator-based simplicial sets and the normalized differential.

A simplicial set is given by black-box face/degeneracy evaluators on
some encoding of its simplices; nothing is ever enumerated or stored.
The only concrete instance shipped is the integer-sequence circle model
(:data:`KZ1`), but all the reduction machinery is written against the
interface.
"""

from . import kz1
from .chains import Chain


class SimplicialSet:
    """Interface: face/degeneracy evaluators plus a degeneracy test."""

    name = "?"

    def dim(self, simplex):
        raise NotImplementedError

    def face(self, i, simplex):
        raise NotImplementedError

    def degeneracy(self, i, simplex):
        raise NotImplementedError

    def is_degenerate(self, simplex):
        raise NotImplementedError


class BarCircle(SimplicialSet):
    """The bar-notation model: simplices are tuples of nonzero integers."""

    name = "kz1"

    def dim(self, simplex):
        return kz1.dim(simplex)

    def face(self, i, simplex):
        return kz1.face(i, simplex)

    def degeneracy(self, i, simplex):
        return kz1.degeneracy(i, simplex)

    def is_degenerate(self, simplex):
        return kz1.is_degenerate(simplex)


KZ1 = BarCircle()


def differential_basis(X, simplex):
    """d(1*simplex): alternating sum of faces, degenerate faces dropped."""
    k = X.dim(simplex)
    if k == 0:
        return Chain.zero(-1)
    out = {}
    sign = 1
    for i in range(k + 1):
        f = X.face(i, simplex)
        if not X.is_degenerate(f):
            v = out.get(f, 0) + sign
            if v == 0:
                del out[f]
            else:
                out[f] = v
        sign = -sign
    return Chain._raw(k - 1, out)


def differential(X, c):
    """The normalized differential, extended linearly.

    Dimension-0 chains map to the empty chain one level down (the chain
    groups vanish in negative dimensions).
    """
    if c.dim == 0:
        return Chain.zero(-1)
    out = Chain.zero(c.dim - 1)
    for simplex, coeff in c.terms.items():
        out = out + coeff * differential_basis(X, simplex)
    return out
