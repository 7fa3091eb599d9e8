"""Exact integer Hilbert-curve index math.

Maps an integer distance along the order-p Hilbert curve to grid
coordinates and back.  The forward direction works in three stages:
the distance's bits are de-interleaved into one component per spatial
dimension, a single global Gray-code fold is applied across the
components, and a backward pass of bit exchanges and inversions
("refining") undoes the excess of the global fold to produce true
coordinates.  All arithmetic is plain integer bit twiddling, so every
operation here is exact, pure, and thread-safe.

Only dims=2 is verified exhaustively against the independent
construction in hilbertseq.reference; higher dimensions are supported
but experimental.
"""

from dataclasses import dataclass

from .errors import DomainError, SizingError

# Keep order*dims inside 64-bit unsigned range with headroom, so curve
# distances stay portable to fixed-width integer consumers.
MAX_INDEX_BITS = 62


def _checked_bits(order: int, dims: int) -> int:
    if order < 1:
        raise DomainError(f"curve order must be >= 1, got {order}")
    if dims < 1:
        raise DomainError(f"dimension count must be >= 1, got {dims}")
    bits = order * dims
    if bits > MAX_INDEX_BITS:
        raise SizingError(
            f"order*dims = {bits} exceeds the {MAX_INDEX_BITS}-bit limit "
            f"for curve distances"
        )
    return bits


@dataclass(frozen=True)
class CurveParams:
    """Order (iteration count) and dimensionality of one Hilbert curve.

    Derived quantities: ``theta`` is the total number of curve points
    2^(order*dims) and ``side`` the grid side length 2^order.
    """

    order: int
    dims: int = 2

    def __post_init__(self):
        _checked_bits(self.order, self.dims)

    @property
    def bits(self) -> int:
        return self.order * self.dims

    @property
    def theta(self) -> int:
        return 1 << self.bits

    @property
    def side(self) -> int:
        return 1 << self.order


def compute_theta(params: CurveParams) -> int:
    """Total number of points on the curve, 2^(order*dims)."""
    return 1 << _checked_bits(params.order, params.dims)


def scalar_gray(x: int) -> int:
    """Classic reflected Gray code of a single integer, x ^ (x >> 1)."""
    return x ^ (x >> 1)


def _split_components(d: int, params: CurveParams) -> list:
    # Big-endian bit string of width order*dims; string position 0 is the
    # most significant bit.  Component k collects positions k, k+N, ...
    n, dims = params.bits, params.dims
    comps = [0] * dims
    for pos in range(n):
        bit = (d >> (n - 1 - pos)) & 1
        comps[pos % dims] = (comps[pos % dims] << 1) | bit
    return comps


def _merge_components(comps: list, params: CurveParams) -> int:
    n, dims, order = params.bits, params.dims, params.order
    d = 0
    for pos in range(n):
        bit = (comps[pos % dims] >> (order - 1 - pos // dims)) & 1
        d = (d << 1) | bit
    return d


def gray_transform(components, params: CurveParams) -> list:
    """Global Gray-code fold across the coordinate components.

    r = C[N-1] >> 1; C[i] ^= C[i-1] for i from N-1 down to 1; C[0] ^= r.
    For a single component this degenerates to scalar_gray.
    """
    if len(components) != params.dims:
        raise DomainError(
            f"expected {params.dims} components, got {len(components)}"
        )
    c = list(components)
    r = c[-1] >> 1
    for i in range(params.dims - 1, 0, -1):
        c[i] ^= c[i - 1]
    c[0] ^= r
    return c


def refine(gray_components, params: CurveParams) -> tuple:
    """Undo the excess of the global Gray fold, yielding coordinates.

    Backward pass over the components for each bit plane q = 2, 4, ...,
    2^(order-1): where bit q is set in a component the low bits of the
    first component are inverted, otherwise the low bits of the first
    component and that component are exchanged.
    """
    if len(gray_components) != params.dims:
        raise DomainError(
            f"expected {params.dims} components, got {len(gray_components)}"
        )
    g = list(gray_components)
    q = 2
    z = 2 << (params.order - 1)
    while q != z:
        w = q - 1
        for i in range(params.dims - 1, -1, -1):
            if g[i] & q:
                g[0] ^= w
            else:
                t = (g[0] ^ g[i]) & w
                g[0] ^= t
                g[i] ^= t
        q <<= 1
    return tuple(g)


def point_from_distance(d: int, params: CurveParams) -> tuple:
    """Coordinates of the d-th point along the curve.

    d must lie in [0, theta).  For dims=2 the result matches
    hilbertseq.reference.reference_point_from_distance exactly.
    """
    if not 0 <= d < params.theta:
        raise DomainError(
            f"distance {d} outside [0, {params.theta}) for order "
            f"{params.order}, dims {params.dims}"
        )
    return refine(gray_transform(_split_components(d, params), params), params)


def distance_from_point(point, params: CurveParams) -> int:
    """Inverse of point_from_distance.

    Runs the refining pass backward (high bit plane first), re-applies
    the Gray fold, strips the global rotation, and re-interleaves the
    component bits into a distance.
    """
    if len(point) != params.dims:
        raise DomainError(f"expected {params.dims} coordinates, got {len(point)}")
    for c in point:
        if not 0 <= c < params.side:
            raise DomainError(
                f"coordinate {c} outside [0, {params.side}) for order {params.order}"
            )
    x = list(point)
    dims = params.dims
    m = 1 << (params.order - 1)

    q = m
    while q > 1:
        w = q - 1
        for i in range(dims):
            if x[i] & q:
                x[0] ^= w
            else:
                t = (x[0] ^ x[i]) & w
                x[0] ^= t
                x[i] ^= t
        q >>= 1

    for i in range(1, dims):
        x[i] ^= x[i - 1]
    t = 0
    q = m
    while q > 1:
        if x[-1] & q:
            t ^= q - 1
        q >>= 1
    for i in range(dims):
        x[i] ^= t

    return _merge_components(x, params)
