"""
Planar convex hulls of complex point sets (monotone chain) and point-to-hull distance.
"""

import numpy as np


def _cross(o: complex, a: complex, b: complex) -> float:
    return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real)


def convex_hull(points, tol: float = 0.0) -> list[complex]:
    """Vertices of the convex hull in counter-clockwise order.

    Collinear points (cross product within ``tol``) are dropped. Degenerate
    inputs return one point or the two endpoints of a segment.
    """
    pts = sorted({(complex(p).real, complex(p).imag) for p in points})
    pts = [complex(x, y) for x, y in pts]
    if len(pts) <= 2:
        return pts

    lower = []
    for p in pts:
        while len(lower) > 1 and _cross(lower[-2], lower[-1], p) <= tol:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) > 1 and _cross(upper[-2], upper[-1], p) <= tol:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return hull if hull else pts[:1]


def _segment_distance(z: complex, a: complex, b: complex) -> float:
    d = b - a
    length2 = abs(d) ** 2
    if length2 == 0.0:
        return abs(z - a)
    t = ((z - a) * d.conjugate()).real / length2
    t = min(1.0, max(0.0, t))
    return abs(z - (a + t * d))


def distance_to_hull(z: complex, hull: list[complex], tol: float = 0.0) -> float:
    """Euclidean distance from z to a hull from ``convex_hull`` (0 inside)."""
    z = complex(z)
    if not hull:
        raise ValueError("Empty hull")
    if len(hull) == 1:
        return abs(z - hull[0])
    if len(hull) == 2:
        return _segment_distance(z, hull[0], hull[1])

    edges = list(zip(hull, hull[1:] + hull[:1]))
    if all(_cross(a, b, z) >= -tol for a, b in edges):
        return 0.0
    return float(min(_segment_distance(z, a, b) for a, b in edges))


def max_distance(points_a, points_b) -> float:
    """max |a - b| over the two point sets."""
    a = np.asarray(list(points_a), dtype=np.complex128)
    b = np.asarray(list(points_b), dtype=np.complex128)
    return float(np.max(np.abs(a[:, None] - b[None, :])))
