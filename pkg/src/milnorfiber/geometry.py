"""Exact rational line arrangements: projective lines in CP^2, affine
decones, intersection lattices, and the coordinate normalizations needed
by the sweep.

Lines are stored as primitive integer coefficient triples whose first
nonzero entry is positive, so equality of lines is equality of triples.
All intersection decisions are exact (no floating point anywhere).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd


class InputError(ValueError):
    """Malformed or inconsistent user input (file text, indices, presets)."""


def canonical_triple(coeffs):
    """Scale a rational triple to primitive integers, first nonzero > 0.

    >>> canonical_triple((Fraction(1, 2), Fraction(-3, 2), 0))
    (1, -3, 0)
    >>> canonical_triple((-2, 4, -6))
    (1, -2, 3)
    """
    fracs = [Fraction(c) for c in coeffs]
    if all(f == 0 for f in fracs):
        raise InputError("zero coefficient triple does not define a line")
    mult = 1
    for f in fracs:
        mult = mult * f.denominator // gcd(mult, f.denominator)
    ints = [int(f * mult) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-w for w in ints]
            break
    return tuple(ints)


@dataclass(frozen=True)
class ProjLine:
    """The projective line a*x + b*y + c*z = 0, canonically scaled."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", canonical_triple(self.coeffs))

    def contains(self, point):
        a, b, c = self.coeffs
        x, y, z = point
        return a * x + b * y + c * z == 0

    def __str__(self):
        a, b, c = self.coeffs
        return f"[{a} {b} {c}]"


@dataclass(frozen=True)
class AffineLine:
    """The affine line a*x + b*y + c = 0 with (a, b) != (0, 0)."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", canonical_triple(self.coeffs))
        a, b, _ = self.coeffs
        if a == 0 and b == 0:
            raise InputError("affine line needs a nonzero linear part")

    @property
    def is_vertical(self):
        return self.coeffs[1] == 0

    def slope(self):
        a, b, _ = self.coeffs
        if b == 0:
            return None
        return Fraction(-a, b)

    def contains(self, xy):
        a, b, c = self.coeffs
        x, y = xy
        return a * x + b * y + c == 0

    def __str__(self):
        a, b, c = self.coeffs
        return f"[{a} {b} {c}]"


@dataclass(frozen=True)
class Arrangement:
    """An ordered arrangement of at least two distinct projective lines."""

    lines: tuple

    def __post_init__(self):
        lines = tuple(self.lines)
        object.__setattr__(self, "lines", lines)
        if len(lines) < 2:
            raise InputError("an arrangement needs at least 2 lines")
        if len(set(lines)) != len(lines):
            raise InputError("duplicate line in arrangement")

    @property
    def n_lines(self):
        return len(self.lines)

    @property
    def cover_degree(self):
        """Degree of the Milnor-fiber cover: the number of lines."""
        return len(self.lines)


@dataclass(frozen=True)
class AffineArrangement:
    """An ordered affine arrangement, with bookkeeping from decone/shear.

    ``cover_degree`` is one more than the number of affine lines: the
    Milnor fiber of the coned arrangement is that many-fold a cover of
    this complement.
    """

    lines: tuple
    transform: tuple = None  # 3x3 rational matrix used by decone, if any
    shear: Fraction = None  # shear parameter applied, if any
    sweep_ready: bool = False

    def __post_init__(self):
        lines = tuple(self.lines)
        object.__setattr__(self, "lines", lines)
        if not lines:
            raise InputError("an affine arrangement needs at least 1 line")
        if len(set(lines)) != len(lines):
            raise InputError("duplicate line in arrangement")

    @property
    def n_lines(self):
        return len(self.lines)

    @property
    def cover_degree(self):
        return len(self.lines) + 1


@dataclass(frozen=True)
class IncidencePoint:
    """An intersection point together with the lines through it.

    The point is stored as a primitive integer projective triple
    (x : y : z); affine points have z != 0.
    """

    point: tuple
    incident: tuple

    def __post_init__(self):
        object.__setattr__(self, "point", canonical_triple(self.point))
        object.__setattr__(self, "incident", tuple(sorted(self.incident)))
        if len(self.incident) < 2:
            raise ValueError("an intersection point needs at least 2 lines")

    @property
    def multiplicity(self):
        return len(self.incident)

    def xy(self):
        """Affine coordinates (exact rationals); requires z != 0."""
        x, y, z = self.point
        if z == 0:
            raise ValueError(f"point {self.point} lies at infinity")
        return Fraction(x, z), Fraction(y, z)

    def label(self):
        x, y, z = self.point
        return f"({x}:{y}:{z})"


@dataclass(frozen=True)
class IncidenceData:
    """All intersection points of an arrangement, plus a per-line index."""

    points: tuple
    n_lines: int
    per_line: tuple = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        per_line = [[] for _ in range(self.n_lines)]
        for k, pt in enumerate(self.points):
            for i in pt.incident:
                per_line[i].append(k)
        object.__setattr__(self, "per_line", tuple(tuple(ix) for ix in per_line))

    def points_on_line(self, i):
        return [self.points[k] for k in self.per_line[i]]

    def multiplicity_census(self):
        census = {}
        for pt in self.points:
            census[pt.multiplicity] = census.get(pt.multiplicity, 0) + 1
        return census


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def intersection_points(arr):
    """Complete incidence data of an arrangement.

    For affine arrangements parallel pairs meet at infinity and are not
    reported as points.
    """
    lines = arr.lines
    affine = isinstance(arr, AffineArrangement)
    by_point = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            pt = _cross(lines[i].coeffs, lines[j].coeffs)
            if affine and pt[2] == 0:
                continue  # parallel affine pair
            key = canonical_triple(pt)
            by_point.setdefault(key, set()).update((i, j))
    points = []
    for key in sorted(by_point):
        inc = by_point[key]
        pt = IncidencePoint(key, tuple(inc))
        for i in pt.incident:
            a, b, c = lines[i].coeffs
            x, y, z = pt.point
            if affine:
                if a * x + b * y + c * z != 0:
                    raise AssertionError("incidence check failed")
            elif not lines[i].contains(pt.point):
                raise AssertionError("incidence check failed")
        points.append(pt)
    return IncidenceData(tuple(points), len(lines))


def _invert3(rows):
    """Inverse of a 3x3 rational matrix given as row tuples."""
    a, b, c = rows[0]
    d, e, f = rows[1]
    g, h, i = rows[2]
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    if det == 0:
        raise ValueError("matrix not invertible")
    adj = [
        [e * i - f * h, c * h - b * i, b * f - c * e],
        [f * g - d * i, a * i - c * g, c * d - a * f],
        [d * h - e * g, b * g - a * h, a * e - b * d],
    ]
    return tuple(tuple(Fraction(v, 1) / det for v in row) for row in adj)


def decone(arr, infinity_index):
    """Send one line of a projective arrangement to infinity.

    A rational projective change of coordinates maps the chosen line to
    {z = 0}; the remaining lines, in their original order, come back as
    affine lines.  The change-of-coordinates matrix is recorded on the
    result.  Points on the chosen line become parallel classes.
    """
    if not isinstance(arr, Arrangement):
        raise TypeError("decone expects a projective arrangement")
    if not 0 <= infinity_index < arr.n_lines:
        raise InputError(f"infinity index {infinity_index} out of range")
    inf_line = arr.lines[infinity_index].coeffs
    # complete the chosen coefficient row to an invertible matrix with two
    # standard basis rows, avoiding the position of its first nonzero entry
    pivot = next(k for k, v in enumerate(inf_line) if v)
    units = [k for k in range(3) if k != pivot]
    T = [None, None, None]
    T[2] = tuple(Fraction(v) for v in inf_line)
    T[0] = tuple(Fraction(1) if k == units[0] else Fraction(0) for k in range(3))
    T[1] = tuple(Fraction(1) if k == units[1] else Fraction(0) for k in range(3))
    Tinv = _invert3(T)
    new_lines = []
    for idx, line in enumerate(arr.lines):
        if idx == infinity_index:
            continue
        L = line.coeffs
        newc = tuple(sum(L[k] * Tinv[k][j] for k in range(3)) for j in range(3))
        new_lines.append(AffineLine(canonical_triple(newc)))
    return AffineArrangement(tuple(new_lines), transform=tuple(T))


def cone(aff):
    """Re-homogenize an affine arrangement and append the infinity line.

    The infinity line {z = 0} is appended last, so deconing along the
    default (last) line of the result recovers the input lines.
    """
    lines = [ProjLine(l.coeffs) for l in aff.lines]
    inf = ProjLine((0, 0, 1))
    if inf in lines:
        raise InputError("arrangement already contains the infinity line")
    return Arrangement(tuple(lines) + (inf,))


def is_sweep_generic(aff):
    """No vertical line, and no two intersection points share an x value."""
    if any(l.is_vertical for l in aff.lines):
        return False
    xs = [pt.xy()[0] for pt in intersection_points(aff).points]
    return len(xs) == len(set(xs))


def shear_to_generic(aff):
    """Shear (x, y) -> (x + t*y, y) into sweep position.

    The substitution keeps the arrangement's topology (it is an ambient
    linear isotopy) while removing vertical lines and making all
    intersection-point x coordinates distinct.  t is the smallest
    non-negative integer that works, so runs are reproducible.
    """
    bad = set()
    for line in aff.lines:
        a, b, _ = line.coeffs
        if a != 0:
            # new y-coefficient is a*t + b; forbid the t that kills it
            bad.add(Fraction(-b, a))
    pts = []
    for i in range(len(aff.lines)):
        for j in range(i + 1, len(aff.lines)):
            p = _cross(aff.lines[i].coeffs, aff.lines[j].coeffs)
            if p[2] != 0:
                pts.append((Fraction(p[0], p[2]), Fraction(p[1], p[2])))
    pts = sorted(set(pts))
    for k in range(len(pts)):
        for l in range(k + 1, len(pts)):
            x1, y1 = pts[k]
            x2, y2 = pts[l]
            if y1 != y2:
                # sheared x coordinates collide at t = (x1 - x2) / (y1 - y2)
                bad.add(Fraction(x1 - x2, y1 - y2))
    t = 0
    while Fraction(t) in bad:
        t += 1
    new_lines = []
    for line in aff.lines:
        a, b, c = line.coeffs
        new_lines.append(AffineLine((a, a * t + b, c)))
    out = AffineArrangement(
        tuple(new_lines), transform=aff.transform, shear=Fraction(t), sweep_ready=True
    )
    if not is_sweep_generic(out):
        raise AssertionError("shear failed to reach sweep position")
    return out


def parse_arrangement(text):
    """Parse the arrangement file format.

    First non-comment line: ``projective`` or ``affine``.  Each further
    non-comment line: three whitespace-separated rationals (``p`` or
    ``p/q``).  ``#`` starts a comment.

    >>> parse_arrangement("projective\\n1 0 0\\n0 1 0\\n0 0 1").n_lines
    3
    >>> parse_arrangement("affine\\n1 0 0\\n0 1 0").cover_degree
    3
    """
    mode = None
    triples = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if mode is None:
            if line not in ("projective", "affine"):
                raise InputError(f"line {lineno}: header must be 'projective' or 'affine'")
            mode = line
            continue
        parts = line.split()
        if len(parts) != 3:
            raise InputError(f"line {lineno}: expected three rationals, got {line!r}")
        try:
            coeffs = tuple(Fraction(p) for p in parts)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"line {lineno}: malformed rational ({exc})") from None
        triples.append((lineno, coeffs))
    if mode is None:
        raise InputError("empty input: missing 'projective'/'affine' header")
    if len(triples) < 2:
        raise InputError("an arrangement needs at least 2 lines")
    seen = {}
    built = []
    for lineno, coeffs in triples:
        try:
            obj = ProjLine(coeffs) if mode == "projective" else AffineLine(coeffs)
        except InputError as exc:
            raise InputError(f"line {lineno}: {exc}") from None
        if obj in seen:
            raise InputError(
                f"line {lineno}: duplicate of input line {seen[obj]} (proportional coefficients)"
            )
        seen[obj] = lineno
        built.append(obj)
    if mode == "projective":
        return Arrangement(tuple(built))
    return AffineArrangement(tuple(built))


def arrangement_text(arr):
    """Canonical file text for an arrangement (inverse of parse)."""
    header = "affine" if isinstance(arr, AffineArrangement) else "projective"
    out = [header]
    for line in arr.lines:
        out.append(" ".join(str(c) for c in line.coeffs))
    return "\n".join(out) + "\n"
