"""Combinatorial bounds and exactness criteria for the first homology of
the Milnor fiber, evaluated from incidence data alone.

Every bound here depends only on which lines meet at which multiplicity
(plus, for the transverse-split criterion, parallelism in a chosen affine
picture).  The exact pipeline computes H1 independently; reports
cross-validate the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import geometry
from .geometry import InputError
from .snf import AbelianGroup


@dataclass(frozen=True)
class SyntheticIncidence:
    """Incidence data given combinatorially, with no coordinates.

    ``points`` holds one tuple of line indices per intersection point.
    Accepted directly by the bound evaluators, enabling synthetic inputs
    that were never realized geometrically.
    """

    n_lines: int
    points: tuple

    def __post_init__(self):
        points = tuple(tuple(sorted(set(p))) for p in self.points)
        object.__setattr__(self, "points", points)
        if self.n_lines < 2:
            raise InputError("need at least 2 lines")
        seen_pairs = {}
        for k, pt in enumerate(points):
            if len(pt) < 2:
                raise InputError(f"point {k} has fewer than 2 lines")
            for i in pt:
                if not 0 <= i < self.n_lines:
                    raise InputError(f"point {k}: line index {i} out of range")
            for a in range(len(pt)):
                for b in range(a + 1, len(pt)):
                    pair = (pt[a], pt[b])
                    if pair in seen_pairs:
                        raise InputError(
                            f"lines {pair} meet in two points ({seen_pairs[pair]} and {k})"
                        )
                    seen_pairs[pair] = k


def parse_incidence(text):
    """Parse raw incidence text: ``incidence N=<int>`` then one point per
    line as ``m=<int> lines=<comma-separated indices>``.

    >>> parse_incidence("incidence N=3\\nm=2 lines=0,1\\n").n_lines
    3
    """
    n = None
    points = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "incidence" or not parts[1].startswith("N="):
                raise InputError(f"line {lineno}: header must be 'incidence N=<int>'")
            try:
                n = int(parts[1][2:])
            except ValueError:
                raise InputError(f"line {lineno}: N must be an integer") from None
            continue
        parts = line.split()
        if len(parts) != 2 or not parts[0].startswith("m=") or not parts[1].startswith("lines="):
            raise InputError(f"line {lineno}: expected 'm=<int> lines=<indices>'")
        try:
            m = int(parts[0][2:])
            idx = tuple(int(tok) for tok in parts[1][6:].split(","))
        except ValueError:
            raise InputError(f"line {lineno}: multiplicity and line indices must be integers") from None
        if m != len(set(idx)):
            raise InputError(f"line {lineno}: m={m} does not match {len(set(idx))} lines")
        points.append(idx)
    if n is None:
        raise InputError("missing 'incidence N=<int>' header")
    return SyntheticIncidence(n, tuple(points))


def _points_view(inc):
    """Uniform view: list of (multiplicity, line indices, label)."""
    if isinstance(inc, geometry.IncidenceData):
        return [(p.multiplicity, p.incident, p.label()) for p in inc.points]
    if isinstance(inc, SyntheticIncidence):
        return [(len(p), p, f"pt{k}") for k, p in enumerate(inc.points)]
    raise TypeError(f"cannot read incidence from {type(inc).__name__}")


def onehyp_bound(inc, n, line):
    """Per-line upper bound for b1 of the Milnor fiber (valid over any
    coefficient field): (n-1) + sum over the line's points of
    (m-2) * (gcd(m, n) - 1)."""
    pts = _points_view(inc)
    if not 0 <= line < n:
        raise InputError(f"line index {line} out of range")
    total = n - 1
    for m, incident, _ in pts:
        if line in incident:
            total += (m - 2) * (gcd(m, n) - 1)
    return total


def onehyp_bounds(inc, n):
    """All per-line bounds and their minimum."""
    per_line = {h: onehyp_bound(inc, n, h) for h in range(n)}
    return per_line, min(per_line.values())


def corollary_check(inc, n):
    """A line whose points all have multiplicity 2 or multiplicity coprime
    to the number of lines; such a line forces H1 to be free of rank n-1.
    Returns the lowest such line index, or None."""
    pts = _points_view(inc)
    for h in range(n):
        if all(
            m == 2 or gcd(m, n) == 1
            for m, incident, _ in pts
            if h in incident
        ):
            return h
    return None


@dataclass(frozen=True)
class OnePointCheck:
    """Outcome of the single-heavy-point criterion.

    A point is *heavy* for the criterion when its multiplicity m exceeds 2
    and shares a factor with the number of lines.  The literal criterion
    asks for a line carrying exactly one heavy point; the guard further
    requires that heavy point to miss at least one line (m < n), because
    the underlying deconing argument needs a line away from it.  On a
    pencil the literal condition holds but the guard correctly refuses.
    """

    fires: bool
    witness: tuple = None  # (line, point label, multiplicity)
    literal_fires: bool = False
    guard_blocked: tuple = None  # witness blocked by the m < n guard


def one_point_check(inc, n):
    pts = _points_view(inc)
    blocked = None
    for h in range(n):
        heavy = [
            (m, incident, label)
            for m, incident, label in pts
            if h in incident and m > 2 and gcd(m, n) != 1
        ]
        if len(heavy) != 1:
            continue
        m, _, label = heavy[0]
        if m < n:
            return OnePointCheck(True, (h, label, m), literal_fires=True)
        if blocked is None:
            blocked = (h, label, m)
    if blocked is not None:
        return OnePointCheck(False, None, literal_fires=True, guard_blocked=blocked)
    return OnePointCheck(False)


def oka_sakamoto_check(aff):
    """Split the affine lines into two nonempty families meeting each other
    only in ordinary double points.

    Computed on the conflict graph (edge = parallel pair, or pair sharing
    a point of multiplicity >= 3): any union of connected components gives
    a valid split, so the check fires exactly when the graph is
    disconnected.  Returns (family_a, family_b) or None.
    """
    if not isinstance(aff, geometry.AffineArrangement):
        raise TypeError("oka_sakamoto_check expects an affine arrangement")
    k = aff.n_lines
    parent = list(range(k))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj

    for i in range(k):
        for j in range(i + 1, k):
            a1, b1, _ = aff.lines[i].coeffs
            a2, b2, _ = aff.lines[j].coeffs
            if a1 * b2 - a2 * b1 == 0:
                union(i, j)
    inc = geometry.intersection_points(aff)
    for pt in inc.points:
        if pt.multiplicity >= 3:
            first = pt.incident[0]
            for other in pt.incident[1:]:
                union(first, other)
    root0 = find(0)
    side_a = tuple(i for i in range(k) if find(i) == root0)
    side_b = tuple(i for i in range(k) if find(i) != root0)
    if not side_b:
        return None
    # re-verify the witness: every cross pair meets transversally in a
    # double point
    point_of = {}
    for pt in inc.points:
        for x in range(len(pt.incident)):
            for y in range(x + 1, len(pt.incident)):
                point_of[(pt.incident[x], pt.incident[y])] = pt
    for i in side_a:
        for j in side_b:
            pair = (min(i, j), max(i, j))
            if pair not in point_of or point_of[pair].multiplicity != 2:
                raise AssertionError("transverse-split witness failed re-verification")
    return side_a, side_b


def cdo_bound(inc, n):
    """Local-system style bound: for each k in 1..n-1, the minimum over
    lines of the total excess (m-2) of the line's points whose multiplicity
    m satisfies n | k*m (points with m = 2 never count); the aggregate
    bound is (n-1) plus the sum over k.

    Returns (per_k dict, total).
    """
    pts = _points_view(inc)
    per_k = {}
    for k in range(1, n):
        best = None
        for h in range(n):
            s = 0
            for m, incident, _ in pts:
                if h in incident and m > 2 and (k * m) % n == 0:
                    s += m - 2
            if best is None or s < best:
                best = s
            if best == 0:
                break
        per_k[k] = best
    total = (n - 1) + sum(per_k.values())
    return per_k, total


@dataclass(frozen=True)
class BoundReport:
    """Every combinatorial bound and criterion outcome for one arrangement."""

    n: int
    lower_bound: int
    onehyp_per_line: dict
    onehyp_best: int
    cdo_per_k: dict
    cdo_total: int
    corollary_witness: object
    one_point: OnePointCheck
    oka_sakamoto: object
    applicable: tuple  # (criterion name, witness) pairs
    notes: tuple

    def __post_init__(self):
        if self.lower_bound > self.onehyp_best:
            raise AssertionError("lower bound exceeds a per-line upper bound")

    @property
    def upper_bound(self):
        return min(self.onehyp_best, self.cdo_total)


@dataclass(frozen=True)
class Prediction:
    """What the combinatorics alone promise about H1."""

    exact: object  # AbelianGroup or None
    lower: int
    upper: int

    def __post_init__(self):
        if self.exact is not None:
            if not (self.lower <= self.exact.free_rank <= self.upper):
                raise AssertionError("exact prediction outside bound sandwich")
            if self.exact.torsion:
                raise AssertionError("exactness criteria predict torsion-free groups")


def bound_report(inc, n, aff=None):
    """Assemble a BoundReport from incidence data (and, when an affine
    picture is available, the transverse-split check)."""
    per_line, best = onehyp_bounds(inc, n)
    per_k, total = cdo_bound(inc, n)
    cw = corollary_check(inc, n)
    opc = one_point_check(inc, n)
    osw = oka_sakamoto_check(aff) if aff is not None else None
    applicable = []
    if cw is not None:
        applicable.append(("coprime_or_double_line", cw))
    if opc.fires:
        applicable.append(("single_heavy_point_line", opc.witness))
    if osw is not None:
        applicable.append(("transverse_split", osw))
    notes = []
    if opc.guard_blocked is not None and not opc.fires:
        h, label, m = opc.guard_blocked
        notes.append(
            "single-heavy-point criterion matched line "
            f"{h} literally (point {label}, multiplicity {m}), but the point lies on "
            "every line, so the deconing argument behind the criterion does not "
            "apply; no exactness is claimed from it"
        )
    return BoundReport(
        n=n,
        lower_bound=n - 1,
        onehyp_per_line=per_line,
        onehyp_best=best,
        cdo_per_k=per_k,
        cdo_total=total,
        corollary_witness=cw,
        one_point=opc,
        oka_sakamoto=osw,
        applicable=tuple(applicable),
        notes=tuple(notes),
    )


def predict(arr, infinity_index=None):
    """Aggregate prediction for an arrangement: the N-1 lower bound, the
    best combinatorial upper bound, and an exact answer whenever one of
    the exactness criteria fires.

    Returns (Prediction, BoundReport).
    """
    if isinstance(arr, geometry.AffineArrangement):
        aff = arr
        proj = geometry.cone(arr)
    elif isinstance(arr, geometry.Arrangement):
        idx = arr.n_lines - 1 if infinity_index is None else infinity_index
        aff = geometry.decone(arr, idx)
        proj = arr
    else:
        raise TypeError(f"cannot predict from {type(arr).__name__}")
    n = proj.n_lines
    inc = geometry.intersection_points(proj)
    report = bound_report(inc, n, aff=aff)
    exact = AbelianGroup(n - 1) if report.applicable else None
    pred = Prediction(exact=exact, lower=n - 1, upper=report.upper_bound)
    return pred, report
