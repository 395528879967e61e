"""Built-in arrangements.

Each preset emits canonical arrangement file text.  Names take optional
colon-separated parameters: ``pencil:5``, ``nearpencil:6``,
``generic:5:7`` (size and seed).
"""

from __future__ import annotations

import random

from . import geometry
from .geometry import InputError

PRESET_NAMES = ("triangle", "pencil", "nearpencil", "generic", "braid-a3", "parallel-family")


def triangle_text():
    """Three lines in general position (the coordinate triangle)."""
    return "projective\n1 0 0\n0 1 0\n0 0 1\n"


def pencil_text(n):
    """n lines through the single point (0:0:1)."""
    if n < 3:
        raise InputError("pencil needs at least 3 lines")
    rows = ["projective", "0 1 0"]
    rows += [f"1 {k} 0" for k in range(n - 1)]
    return "\n".join(rows) + "\n"


def nearpencil_text(n):
    """n-1 lines through (0:0:1) plus the line z = 0 (listed last, so the
    default decone leaves the concurrent lines affine)."""
    if n < 4:
        raise InputError("near-pencil needs at least 4 lines")
    rows = ["projective", "0 1 0"]
    rows += [f"1 {k} 0" for k in range(n - 2)]
    rows.append("0 0 1")
    return "\n".join(rows) + "\n"


def generic_text(n, seed):
    """n lines in general position (every intersection point is double),
    found by seeded random search and verified before emitting."""
    if n < 3:
        raise InputError("generic arrangement needs at least 3 lines")
    rng = random.Random(seed)
    for _ in range(500):
        lines = []
        while len(lines) < n:
            cand = (rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(-9, 9))
            if cand == (0, 0, 0):
                continue
            line = geometry.ProjLine(cand)
            if line not in lines:
                lines.append(line)
        arr = geometry.Arrangement(tuple(lines))
        inc = geometry.intersection_points(arr)
        if all(pt.multiplicity == 2 for pt in inc.points):
            return geometry.arrangement_text(arr)
    raise InputError(f"no generic arrangement of {n} lines found for seed {seed}")


def braid_a3_text():
    """The six planes u=0, v=0, w=0, u+v=0, v+w=0, u+v+w=0 as lines:
    four triple points and three double points."""
    return "projective\n1 0 0\n0 1 0\n0 0 1\n1 1 0\n0 1 1\n1 1 1\n"


def parallel_family_text():
    """Eight lines: a pencil of four through the origin, two horizontal
    parallels, one generic line, and the line at infinity.  The first line
    carries exactly one point of multiplicity above two sharing a factor
    with the line count, so the single-heavy-point criterion fires on a
    non-pencil arrangement."""
    return (
        "projective\n"
        "0 1 0\n"  # y = 0: the distinguished line through the heavy point
        "1 0 0\n"  # x = 0
        "1 -1 0\n"  # y = x
        "1 1 0\n"  # y = -x
        "0 1 -1\n"  # y = 1
        "1 -1 3\n"  # y = x + 3
        "1 1 -7\n"  # y = -x + 7
        "0 0 1\n"  # line at infinity
    )


def preset_text(name, seed=None):
    """Arrangement text for a preset name with optional ':' parameters.

    >>> preset_text("triangle")
    'projective\\n1 0 0\\n0 1 0\\n0 0 1\\n'
    """
    parts = name.split(":")
    base, params = parts[0], parts[1:]

    def want(k):
        if len(params) != k:
            raise InputError(f"preset {base!r} takes {k} parameter(s), got {len(params)}")

    def int_param(i, what):
        try:
            return int(params[i])
        except ValueError:
            raise InputError(f"preset {base!r}: {what} must be an integer") from None

    if base == "triangle":
        want(0)
        return triangle_text()
    if base == "pencil":
        want(1)
        return pencil_text(int_param(0, "size"))
    if base == "nearpencil":
        want(1)
        return nearpencil_text(int_param(0, "size"))
    if base == "generic":
        if len(params) == 1 and seed is not None:
            return generic_text(int_param(0, "size"), seed)
        want(2)
        return generic_text(int_param(0, "size"), int_param(1, "seed"))
    if base == "braid-a3":
        want(0)
        return braid_a3_text()
    if base == "parallel-family":
        want(0)
        return parallel_family_text()
    raise InputError(f"unknown preset {base!r} (choose from {', '.join(PRESET_NAMES)})")


def preset_arrangement(name, seed=None):
    return geometry.parse_arrangement(preset_text(name, seed=seed))
