"""Brute-force 2D Hilbert curve built by quadrant recursion.

This module exists to verify the bit-twiddling implementation in
:mod:`hilbertseq.curve` and shares no code with it.  It builds the whole
order-p curve as an explicit list of points using the textbook
rotate-and-reflect construction: an order-p curve is four order-(p-1)
copies, the first transposed, the middle two translated, the last
anti-transposed.  Intended for tests and sanity checks only; memory is
O(4^p), so keep p small (p <= 10 or so).
"""

from functools import lru_cache


@lru_cache(maxsize=None)
def curve_points(p: int) -> tuple:
    """Return the full order-p curve as a tuple of (x, y) points.

    The curve starts at (0, 0) and ends at (2^p - 1, 0), visiting every
    cell of the 2^p x 2^p grid exactly once.
    """
    if p < 0:
        raise ValueError(f"curve order must be >= 0, got {p}")
    if p == 0:
        return ((0, 0),)
    prev = curve_points(p - 1)
    half = 1 << (p - 1)
    quad1 = [(y, x) for x, y in prev]
    quad2 = [(x, y + half) for x, y in prev]
    quad3 = [(x + half, y + half) for x, y in prev]
    quad4 = [(2 * half - 1 - y, half - 1 - x) for x, y in prev]
    return tuple(quad1 + quad2 + quad3 + quad4)


def reference_point_from_distance(d: int, p: int) -> tuple:
    """Return the d-th point of the order-p 2D Hilbert curve.

    Pure lookup into the recursively constructed curve; d must lie in
    [0, 4^p).
    """
    if p < 1:
        raise ValueError(f"curve order must be >= 1, got {p}")
    total = 1 << (2 * p)
    if not 0 <= d < total:
        raise ValueError(f"distance {d} outside [0, {total}) for order {p}")
    return curve_points(p)[d]
