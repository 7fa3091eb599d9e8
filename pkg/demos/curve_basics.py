"""Walk the Hilbert curve: distances, coordinates, and locality.

Run:  python3 demos/curve_basics.py
"""

from hilbertseq import CurveParams, distance_from_point, point_from_distance

# The order-1 curve visits a 2x2 grid in four steps.
p1 = CurveParams(order=1)
print("order-1 walk:", [point_from_distance(d, p1) for d in range(p1.theta)])

# Each extra order quadruples the number of cells.
for order in (1, 2, 3, 6):
    params = CurveParams(order=order)
    print(f"order {order}: {params.side}x{params.side} grid, {params.theta} points")

# Consecutive distances always land on neighboring cells; that locality
# is the whole reason to prefer this curve over a plain row-major scan.
params = CurveParams(order=4)
jumps = []
for d in range(1, params.theta):
    x0, y0 = point_from_distance(d - 1, params)
    x1, y1 = point_from_distance(d, params)
    jumps.append(abs(x1 - x0) + abs(y1 - y0))
print("order-4 step lengths: min", min(jumps), "max", max(jumps))

# Compare with a row-major scan, where wrapping a row teleports.
side = params.side
row_major_jumps = []
for d in range(1, params.theta):
    x0, y0 = (d - 1) % side, (d - 1) // side
    x1, y1 = d % side, d // side
    row_major_jumps.append(abs(x1 - x0) + abs(y1 - y0))
print("row-major step lengths: min", min(row_major_jumps),
      "max", max(row_major_jumps))

# The mapping inverts exactly.
d = 2026
point = point_from_distance(d, CurveParams(order=6))
print(f"distance {d} -> point {point} -> distance",
      distance_from_point(point, CurveParams(order=6)))

# Render the order-3 visiting sequence as a small ASCII grid.
params = CurveParams(order=3)
grid = [["  ."] * params.side for _ in range(params.side)]
for d in range(params.theta):
    x, y = point_from_distance(d, params)
    grid[y][x] = f"{d:3d}"
print("\norder-3 visit order (row 0 at the top):")
for row in grid:
    print(" ".join(row))
