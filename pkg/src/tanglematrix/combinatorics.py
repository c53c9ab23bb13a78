"""Dictionary orders on index tuples and the xi / eta products.

All ranks are 1-based. Matrices are plain nested lists of Python ints
so that products never overflow.
"""

from __future__ import annotations

from math import prod

from .errors import ArityError, GuardExceeded

__all__ = ["unrank", "rank", "tuples", "t_sequence", "xi", "eta", "ETA_LIMIT"]

# n + sum(k_j) above this would build matrices wider than 2^12 columns.
ETA_LIMIT = 12


def unrank(i: int, bounds) -> tuple:
    """Return the i-th tuple (1-based) of the dictionary order on ``bounds``.

    >>> unrank(3, (2, 4))
    (1, 3)
    """
    bounds = tuple(bounds)
    total = prod(bounds)
    if not 1 <= i <= total:
        raise IndexError(f"rank {i} outside 1..{total}")
    rest = i - 1
    out = []
    for b in reversed(bounds):
        rest, r = divmod(rest, b)
        out.append(r + 1)
    return tuple(reversed(out))


def rank(entries, bounds) -> int:
    """Inverse of :func:`unrank`."""
    entries, bounds = tuple(entries), tuple(bounds)
    if len(entries) != len(bounds):
        raise ArityError("tuple and bounds differ in length")
    r = 0
    for e, b in zip(entries, bounds):
        if not 1 <= e <= b:
            raise IndexError(f"entry {e} outside 1..{b}")
        r = r * b + (e - 1)
    return r + 1


def tuples(bounds):
    """All tuples in dictionary order."""
    bounds = tuple(bounds)
    return [unrank(i, bounds) for i in range(1, prod(bounds) + 1)]


def t_sequence(n: int) -> tuple:
    """t_k = number of 2s in the k-th tuple of J(n), built by doubling."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    seq = [0]
    for _ in range(n):
        seq = seq + [t + 1 for t in seq]
    return tuple(seq)


def xi(vectors) -> list:
    """Dictionary-order product of column vectors.

    Component m is the product of vector j at coordinate j of the
    m-th tuple.
    """
    vectors = [list(v) for v in vectors]
    dims = tuple(len(v) for v in vectors)
    if any(d == 0 for d in dims):
        raise ArityError("empty vector")
    return [
        prod(v[a - 1] for v, a in zip(vectors, alpha))
        for alpha in tuples(dims)
    ]


def eta(matrices) -> list:
    """Dictionary-order product of 2-row matrices.

    Matrix j has shape 2 x 2^{k_j}; the result is 2^n x 2^{k_1+...+k_n}
    with entry (i, m) = prod_j B_j[alpha_ij, beta_mj].
    """
    mats = [[list(r) for r in m] for m in matrices]
    widths = []
    for m in mats:
        if len(m) != 2 or len(m[0]) != len(m[1]):
            raise ArityError("each factor must be a 2-row matrix")
        w = len(m[0])
        if w & (w - 1):
            raise ArityError(f"factor width {w} is not a power of 2")
        widths.append(w)
    n = len(mats)
    log_width = sum(w.bit_length() - 1 for w in widths)
    if n + log_width > ETA_LIMIT:
        raise GuardExceeded(f"eta size 2^{n} x 2^{log_width} exceeds the limit")
    rows = tuples((2,) * n)
    cols = tuples(widths)
    return [
        [prod(m[a - 1][b - 1] for m, a, b in zip(mats, alpha, beta)) for beta in cols]
        for alpha in rows
    ]
