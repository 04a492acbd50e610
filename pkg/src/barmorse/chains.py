"""Sparse integer chains, reductions, and reduction verification.

A chain is a finite formal sum of nondegenerate simplices of one fixed
dimension, with exact (arbitrary-precision) integer coefficients.  Keys
are the canonical bar-notation tuples and iteration is lexicographic,
so all outputs are reproducible byte for byte.

A reduction is a triple of maps (f, g, h) between a "big" and a "small"
chain complex satisfying

    f.g = 1,   d.h + h.d = 1 - g.f,   f.h = 0,   h.g = 0,   h.h = 0,

with f and g chain maps.  Because the big complex here has infinite
rank, maps are represented as evaluators, never as matrices, and the
identities are checked pointwise on sample chains.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional

from . import kz1


class Chain:
    """Dimension-homogeneous sparse formal sum with integer coefficients.

    Zero coefficients are never stored.  ``dim == -1`` is the zero group
    below dimension 0 and admits only the empty chain.
    """

    __slots__ = ("dim", "terms")

    def __init__(self, dim, terms=None):
        items = {}
        if terms:
            pairs = terms.items() if isinstance(terms, dict) else terms
            for simplex, coeff in pairs:
                if coeff == 0:
                    continue
                simplex = tuple(simplex)
                if len(simplex) != dim:
                    raise ValueError(
                        f"simplex {kz1.format_simplex(simplex)} has dimension "
                        f"{len(simplex)}, chain has dimension {dim}"
                    )
                kz1.check_nondegenerate(simplex)
                items[simplex] = items.get(simplex, 0) + coeff
                if items[simplex] == 0:
                    del items[simplex]
        self.dim = dim
        self.terms = items

    @classmethod
    def _raw(cls, dim, terms):
        # internal fast path: terms already a clean dict
        c = cls.__new__(cls)
        c.dim = dim
        c.terms = terms
        return c

    @classmethod
    def unit(cls, simplex):
        """The chain 1*simplex."""
        simplex = tuple(simplex)
        kz1.check_nondegenerate(simplex)
        return cls._raw(len(simplex), {simplex: 1})

    @classmethod
    def zero(cls, dim):
        return cls._raw(dim, {})

    def is_zero(self):
        return not self.terms

    def items(self):
        """Terms in lexicographic simplex order."""
        return sorted(self.terms.items())

    def coeff(self, simplex):
        return self.terms.get(tuple(simplex), 0)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Chain)
            and self.dim == other.dim
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def __add__(self, other):
        return chain_add(self, other)

    def __sub__(self, other):
        return chain_add(self, chain_scale(-1, other))

    def __neg__(self):
        return chain_scale(-1, self)

    def __rmul__(self, n):
        return chain_scale(n, self)

    def __repr__(self):
        if not self.terms:
            return f"Chain({self.dim}, 0)"
        body = " + ".join(
            f"{c}*{kz1.format_simplex(s)}" for s, c in self.items()
        )
        return f"Chain({self.dim}, {body})"


def chain_add(a, b):
    """Termwise sum; the dimensions must agree."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} != {b.dim}")
    if not a.terms:
        return b
    if not b.terms:
        return a
    out = dict(a.terms)
    for s, c in b.terms.items():
        v = out.get(s, 0) + c
        if v == 0:
            out.pop(s, None)
        else:
            out[s] = v
    return Chain._raw(a.dim, out)


def chain_scale(n, c):
    """Multiply every coefficient by the integer n."""
    if n == 0 or not c.terms:
        return Chain.zero(c.dim)
    if n == 1:
        return c
    return Chain._raw(c.dim, {s: n * v for s, v in c.terms.items()})


# ---------------------------------------------------------------------------
# JSON form: coefficients as decimal strings so precision survives the wire


def chain_to_json(c):
    return {
        "dim": c.dim,
        "terms": [
            {"simplex": list(s), "coeff": str(v)} for s, v in c.items()
        ],
    }


def chain_from_json(data):
    terms = [
        (tuple(t["simplex"]), int(t["coeff"])) for t in data.get("terms", [])
    ]
    return Chain(data["dim"], terms)


# ---------------------------------------------------------------------------
# reductions


@dataclass
class Reduction:
    """Evaluator triple (f, g, h); degree 0, 0, +1 respectively.

    ``source``/``target`` are optional tags naming the two complexes;
    composition checks them when both ends carry one.
    """

    f: Callable[[Chain], Chain]
    g: Callable[[Chain], Chain]
    h: Callable[[Chain], Chain]
    source: Optional[str] = None
    target: Optional[str] = None


def identity_reduction(tag=None):
    return Reduction(
        f=lambda c: c,
        g=lambda c: c,
        h=lambda c: Chain.zero(c.dim + 1),
        source=tag,
        target=tag,
    )


def compose_reductions(rho1, rho2):
    """Composite of a reduction C -> C' with a reduction C' -> C''.

    The maps are (f2.f1, g1.g2, h1 + g1.h2.f1).
    """
    if (
        rho1.target is not None
        and rho2.source is not None
        and rho1.target != rho2.source
    ):
        raise ValueError(
            f"complex mismatch: {rho1.target!r} != {rho2.source!r}"
        )
    f1, g1, h1 = rho1.f, rho1.g, rho1.h
    f2, g2, h2 = rho2.f, rho2.g, rho2.h
    return Reduction(
        f=lambda c: f2(f1(c)),
        g=lambda c: g1(g2(c)),
        h=lambda c: chain_add(h1(c), g1(h2(f1(c)))),
        source=rho1.source,
        target=rho2.target,
    )


# ---------------------------------------------------------------------------
# verification

REDUCTION_IDENTITIES = (
    "f_g_identity",   # f.g = 1 on the small complex
    "homotopy",       # d.h + h.d = 1 - g.f on the big complex
    "f_h_zero",
    "h_g_zero",
    "h_h_zero",
    "f_chain_map",    # d_small.f = f.d_big
    "g_chain_map",    # d_big.g = g.d_small
)


def verify_reduction(rho, d_big, d_small, samples, small_samples=None):
    """Check all reduction identities pointwise on the given chains.

    ``samples`` are chains of the big complex; ``small_samples`` of the
    small one (when omitted they are derived as ``f(c)`` for every big
    sample, which covers the image of f).  Failures are recorded in the
    report, not raised.  Returns a dict with one entry per identity:
    ``{"pass": bool, "checked": n, "counterexample": chain-json|None}``
    plus an overall ``"ok"``.
    """
    if small_samples is None:
        small_samples = [rho.f(c) for c in samples]

    report = {
        name: {"pass": True, "checked": 0, "counterexample": None}
        for name in REDUCTION_IDENTITIES
    }

    def record(name, ok, witness):
        entry = report[name]
        entry["checked"] += 1
        if not ok and entry["pass"]:
            entry["pass"] = False
            entry["counterexample"] = chain_to_json(witness)

    for c in samples:
        hc = rho.h(c)
        lhs = chain_add(d_big(hc), rho.h(d_big(c)))
        rhs = c - rho.g(rho.f(c))
        record("homotopy", lhs == rhs, c)
        record("f_h_zero", rho.f(hc).is_zero(), c)
        record("h_h_zero", rho.h(hc).is_zero(), c)
        record("f_chain_map", rho.f(d_big(c)) == d_small(rho.f(c)), c)

    for c in small_samples:
        record("f_g_identity", rho.f(rho.g(c)) == c, c)
        record("h_g_zero", rho.h(rho.g(c)).is_zero(), c)
        record("g_chain_map", rho.g(d_small(c)) == d_big(rho.g(c)), c)

    report["ok"] = all(report[name]["pass"] for name in REDUCTION_IDENTITIES)
    return report
