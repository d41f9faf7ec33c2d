"""Exact rational plane geometry for the planar oracle.

Points are pairs of Fractions (ints work too).  All predicates are exact;
nothing here depends on floating tolerances.  The plane is oriented
counter-clockwise: ``cross(u, v) > 0`` means v lies to the left of u.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegenerateSegment, NonGenericInput


def sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def scale(u, k):
    return (u[0] * k, u[1] * k)


def cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def rot90(u):
    """Counter-clockwise quarter turn."""
    return (-u[1], u[0])


def circle_point(t, radius=1, center=(0, 0)):
    """Rational point on a circle via the tangent half-angle map.

    As t sweeps the rationals the point sweeps the circle counter-clockwise
    (minus the point (-radius, 0) reached only in the limit).
    """
    t = Fraction(t)
    den = 1 + t * t
    return (center[0] + radius * (1 - t * t) / den, center[1] + radius * 2 * t / den)


def rational_dir(t):
    """Non-normalized rational direction vector sweeping CCW with t."""
    t = Fraction(t)
    return (1 - t * t, 2 * t)


def seg_intersection(p, q, r, s):
    """Intersection of segments [p,q] and [r,s].

    Returns None if disjoint, or (t, u, point) for a proper transversal
    crossing with both parameters strictly inside (0, 1).  Any touching,
    collinear overlap, or endpoint incidence raises NonGenericInput, since
    the layouts this package produces never need them.
    """
    d1 = sub(q, p)
    d2 = sub(s, r)
    denom = cross(d1, d2)
    rp = sub(r, p)
    if denom == 0:
        if cross(d1, rp) == 0:
            # Collinear: overlap test on the shared line.
            w = d1 if d1 != (0, 0) else d2
            a0, a1 = sorted((dot(w, p), dot(w, q)))
            b0, b1 = sorted((dot(w, r), dot(w, s)))
            if a1 < b0 or b1 < a0:
                return None
            raise NonGenericInput("collinear overlapping segments")
        return None
    t = Fraction(cross(rp, d2), denom)
    u = Fraction(cross(rp, d1), denom)
    if t < 0 or t > 1 or u < 0 or u > 1:
        return None
    if t in (0, 1) or u in (0, 1):
        raise NonGenericInput("segment endpoint lies on another segment")
    point = add(p, scale(d1, t))
    return t, u, point


def polyline_segments(vertices):
    """Closed polyline edges as (start, end) pairs; rejects zero edges."""
    n = len(vertices)
    segs = []
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        if a == b:
            raise DegenerateSegment(f"edge {i} has zero length")
        segs.append((a, b))
    return segs


def enumerate_crossings(vertices):
    """All transversal self-crossings of the closed polyline.

    Returns a list of (i, j, t_i, t_j, point) with i < j segment indices.
    Raises NonGenericInput for tangential contact, endpoint incidences,
    collinear overlaps, or triple points.
    """
    segs = polyline_segments(vertices)
    n = len(segs)
    out = []
    seen_points = {}
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue  # adjacent edges share a vertex by construction
            hit = seg_intersection(*segs[i], *segs[j])
            if hit is None:
                continue
            t, u, point = hit
            if point in seen_points:
                raise NonGenericInput(f"triple point at {point}")
            seen_points[point] = (i, j)
            out.append((i, j, t, u, point))
    return out


def turning_number(vertices):
    """Whitney index of the closed polyline: the winding number of its
    direction polygon around the origin.

    Exact.  Raises if two consecutive edge directions are antipodal (the
    direction polygon would pass through the origin, a turn of exactly
    half a turn whose side is undefined).
    """
    segs = polyline_segments(vertices)
    dirs = [sub(b, a) for a, b in segs]
    m = len(dirs)
    wind = 0
    for k in range(m):
        p, q = dirs[k], dirs[(k + 1) % m]
        c = cross(p, q)
        if c == 0 and dot(p, q) < 0:
            raise NonGenericInput("consecutive edges reverse direction exactly")
        # Standard winding-number crossing rule against the eastward ray;
        # for edges between direction points, origin-is-left reduces to
        # the sign of cross(p, q).
        if p[1] <= 0 < q[1]:
            if c > 0:
                wind += 1
        elif q[1] <= 0 < p[1]:
            if c < 0:
                wind -= 1
    return wind
