"""The standard simplicial circle model on integer sequences.

A k-simplex is a tuple of k integers written ``[a1|a2|...|ak]`` (bar
notation); it is nondegenerate exactly when no entry is zero.  The face
operator ``d_0`` drops the first entry, ``d_k`` drops the last, and the
interior ``d_i`` merges neighbours ``a_i + a_{i+1}``.  The degeneracy
``s_i`` inserts a zero after the i-th entry.

The same simplex can be viewed as an equivalence class of prefix-sum
tuples ``(b_0, ..., b_k)`` modulo constant shifts ("b-tuples"); we fix
the representative with ``b_0 = 0``.  In that picture every face
operator simply deletes one component, which is the form the bubblesort
field works in.

Everything here is a pure function on plain tuples of (unbounded)
Python ints.
"""

from .errors import DegenerateSimplexError

# ---------------------------------------------------------------------------
# bar notation


def dim(simplex):
    """Dimension of a bar simplex (number of entries)."""
    return len(simplex)


def is_degenerate(simplex):
    """True when some bar entry is zero."""
    return any(a == 0 for a in simplex)


def check_nondegenerate(simplex):
    if is_degenerate(simplex):
        raise DegenerateSimplexError(f"degenerate simplex {format_simplex(simplex)}")
    return simplex


def face(i, simplex):
    """i-th face of a bar simplex, 0 <= i <= dim.

    Faces of the 0-simplex are a hard error.
    """
    k = len(simplex)
    if k == 0:
        raise ValueError("the 0-simplex [] has no faces")
    if not 0 <= i <= k:
        raise IndexError(f"face index {i} out of range for dimension {k}")
    if i == 0:
        return simplex[1:]
    if i == k:
        return simplex[:-1]
    return simplex[: i - 1] + (simplex[i - 1] + simplex[i],) + simplex[i + 1 :]


def degeneracy(i, simplex):
    """i-th degeneracy: insert a zero after the i-th entry (s_0 inserts first)."""
    k = len(simplex)
    if not 0 <= i <= k:
        raise IndexError(f"degeneracy index {i} out of range for dimension {k}")
    return simplex[:i] + (0,) + simplex[i:]


def size(simplex):
    """Bit-size of a simplex: sum over entries of 1 + floor(log2(|a|+1)).

    For nonzero a this is ``(|a|+1).bit_length()``; the empty simplex has
    size 0.
    """
    return sum((abs(a) + 1).bit_length() for a in simplex)


# ---------------------------------------------------------------------------
# b-tuple representation


def to_btuple(simplex):
    """Prefix sums with b_0 = 0; inverse of :func:`from_btuple`."""
    out = [0]
    acc = 0
    for a in simplex:
        acc += a
        out.append(acc)
    return tuple(out)


def from_btuple(btuple):
    """Consecutive differences; accepts any representative of the shift class."""
    return tuple(btuple[i] - btuple[i - 1] for i in range(1, len(btuple)))


def normalize_btuple(btuple):
    """Shift so that b_0 = 0 (the canonical representative)."""
    b0 = btuple[0]
    if b0 == 0:
        return tuple(btuple)
    return tuple(b - b0 for b in btuple)


def btuple_is_degenerate(btuple):
    return any(btuple[i] == btuple[i + 1] for i in range(len(btuple) - 1))


def btuple_face(i, btuple):
    """Delete the i-th component and renormalize to b_0 = 0."""
    k = len(btuple) - 1
    if k == 0:
        raise ValueError("the 0-simplex has no faces")
    if not 0 <= i <= k:
        raise IndexError(f"face index {i} out of range for dimension {k}")
    return normalize_btuple(btuple[:i] + btuple[i + 1 :])


# ---------------------------------------------------------------------------
# text form: "[3|-2|5]" for bar notation, "[0,3,1,6]" for b-tuples


def format_simplex(simplex):
    return "[" + "|".join(str(a) for a in simplex) + "]"


def format_btuple(btuple):
    return "[" + ",".join(str(b) for b in btuple) + "]"


def parse_simplex(text):
    """Parse either notation, telling them apart by the separator.

    ``[]`` is the 0-simplex.  A b-tuple need not be normalized.  A
    single number without separators is read as bar notation (a b-tuple
    of dimension 0 cannot be written this way; use ``[]``).
    """
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"simplex must be bracketed: {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    try:
        if "," in body:
            bt = tuple(int(p) for p in body.split(","))
            return from_btuple(bt)
        return tuple(int(p) for p in body.split("|"))
    except ValueError as exc:
        raise ValueError(f"cannot parse simplex {text!r}") from exc
