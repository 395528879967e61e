"""Presentations of the fundamental group of an affine line-arrangement
complement, computed by a right-to-left sweep over the real picture, and
the projective variant with one extra generator and a product relator.

Generators are numbered 1..G and correspond to the arrangement's lines in
input order; each generator is the meridian loop picked up on the line's
rightmost unbroken ray.  Words are sequences of nonzero signed integers:
-k is the inverse of generator k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import geometry
from .geometry import InputError


class Word:
    """A freely reduced word in numbered generators.

    >>> Word([1, 2, -2, 3])
    Word([1, 3])
    >>> Word([1, 2]) * Word([-2, -1])
    Word([])
    >>> (Word([1, 2]).inverse()).letters
    (-2, -1)
    """

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        reduced = []
        for raw in letters:
            l = int(raw)
            if l == 0:
                raise ValueError("generator indices are nonzero")
            if reduced and reduced[-1] == -l:
                reduced.pop()
            else:
                reduced.append(l)
        self.letters = tuple(reduced)

    def __mul__(self, other):
        return Word(self.letters + other.letters)

    def inverse(self):
        w = Word.__new__(Word)
        w.letters = tuple(-l for l in reversed(self.letters))
        return w

    def conjugated_by(self, c):
        """c^-1 * self * c."""
        return c.inverse() * self * c

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"Word({list(self.letters)!r})"

    @property
    def is_identity(self):
        return not self.letters

    def exponent_sum(self):
        return sum(1 if l > 0 else -1 for l in self.letters)

    def exponent_vector(self, n_generators):
        vec = [0] * n_generators
        for l in self.letters:
            vec[abs(l) - 1] += 1 if l > 0 else -1
        return tuple(vec)

    def format(self):
        """Stable text form, e.g. 'g1 g2 g1^-1 g2^-1' ('1' for the identity)."""
        if not self.letters:
            return "1"
        return " ".join(f"g{l}" if l > 0 else f"g{-l}^-1" for l in self.letters)


def commutator(a, b):
    return a * b * a.inverse() * b.inverse()


def product(words):
    out = Word()
    for w in words:
        out = out * w
    return out


@dataclass(frozen=True)
class Relator:
    """A relator with its provenance: the vertex that produced it and its
    index k among that vertex's relators.  The single product relator of a
    projective presentation is flagged."""

    word: Word
    vertex: str = ""
    index: int = 0
    projective: bool = False

    def __post_init__(self):
        if not self.projective and self.word.exponent_sum() != 0:
            raise ValueError("vertex relators must have exponent sum 0")


@dataclass(frozen=True)
class Presentation:
    """A finite presentation plus the degree of its Milnor cover.

    kind 'affine-decone': one generator per affine line, cover degree
    = generators + 1.  kind 'projective': one generator per projective
    line including the one at infinity, exactly one product relator,
    cover degree = generators.
    """

    generator_count: int
    relators: tuple
    kind: str
    phi_modulus: int

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(self.relators))
        if self.kind not in ("affine-decone", "projective"):
            raise ValueError(f"unknown presentation kind {self.kind!r}")
        n_proj = sum(1 for r in self.relators if r.projective)
        if self.kind == "projective" and n_proj != 1:
            raise ValueError("projective presentation needs exactly one product relator")
        if self.kind == "affine-decone" and n_proj:
            raise ValueError("affine presentation cannot contain a product relator")
        for r in self.relators:
            for l in r.word:
                if not 1 <= abs(l) <= self.generator_count:
                    raise ValueError(f"letter {l} outside generator range")

    def text(self):
        out = [f"gens: {self.generator_count}"]
        out.extend(r.word.format() for r in self.relators)
        return "\n".join(out) + "\n"

    def total_relator_length(self):
        return sum(len(r.word) for r in self.relators)

    def abelianized_rows(self):
        """Exponent-sum vectors of the relators (one row per relator)."""
        return [list(r.word.exponent_vector(self.generator_count)) for r in self.relators]


def _slope_ordered(aff, line_indices):
    """Vertex-local ordering: ascending slope = bottom-to-top just right
    of the vertex."""
    return sorted(line_indices, key=lambda i: aff.lines[i].slope())


def _descending_product(words):
    """W_k W_{k-1} ... W_1 for words listed bottom-up [W_1, ..., W_k]."""
    return product(list(reversed(words)))


def arvola_randell(aff, *, top_down=False):
    """Sweep presentation of the affine complement's fundamental group.

    The sweep moves right to left through the intersection points (strictly
    decreasing x; the arrangement must be in sweep position, see
    geometry.shear_to_generic).  At a vertex of multiplicity m whose
    incident lines currently carry meridian words W_1 <= ... <= W_m in
    ascending slope order, it emits the m-1 relators

        [W_m ... W_{m-k+1},  W_{m-k} ... W_1]      for k = 1 .. m-1,

    then lets the outermost lines (positions 1 and m) continue unchanged
    while each middle line i picks up a conjugation by W_{i-1} ... W_1.

    With top_down=True the vertex-local ordering is reversed (descending
    slope).  The two conventions give different words but isomorphic
    groups; cross-checked at the cover-homology level in the test suite.

    >>> aff = geometry.shear_to_generic(geometry.parse_arrangement("affine\\n1 0 0\\n0 1 0"))
    >>> [r.word.format() for r in arvola_randell(aff).relators]
    ['g2 g1 g2^-1 g1^-1']
    """
    if not aff.sweep_ready:
        raise ValueError("arrangement is not in sweep position; apply shear_to_generic first")
    inc = geometry.intersection_points(aff)
    verts = sorted(inc.points, key=lambda pt: pt.xy()[0], reverse=True)
    for a, b in zip(verts, verts[1:]):
        if a.xy()[0] == b.xy()[0]:
            raise ValueError("two vertices share an x coordinate; shear first")
    words = [Word([i + 1]) for i in range(aff.n_lines)]
    relators = []
    for pt in verts:
        order = _slope_ordered(aff, pt.incident)
        if top_down:
            order.reverse()
        W = [words[i] for i in order]
        m = len(W)
        for k in range(1, m):
            upper = _descending_product(W[m - k :])
            lower = _descending_product(W[: m - k])
            relators.append(Relator(commutator(upper, lower), vertex=pt.label(), index=k))
        for pos in range(1, m - 1):
            words[order[pos]] = W[pos].conjugated_by(_descending_product(W[:pos]))
    return Presentation(aff.n_lines, tuple(relators), "affine-decone", aff.cover_degree)


def _auxiliary_line(arr, inc):
    """A deterministic rational line through no arrangement line or
    intersection point: the first member of the family x + s*y + s^2*z
    (s = 0, 1, 2, ...) that misses everything."""
    s = 0
    while True:
        cand = geometry.ProjLine((1, s, s * s))
        if cand not in arr.lines and not any(cand.contains(pt.point) for pt in inc.points):
            return cand
        s += 1


def projective_presentation(arr, base_line=None):
    """Presentation of the projective complement's fundamental group with
    one generator per line and a single product relator.

    The arrangement is deconed along an auxiliary line that avoids every
    arrangement line and intersection point, so all original lines stay
    affine and every intersection point stays visible to the sweep.  The
    sweep relators are then completed by the product relator

        g_{s(N)} g_{s(N-1)} ... g_{s(1)},

    the meridians multiplied top-to-bottom as they appear far to the right
    of the swept picture (descending slope).  The result does not depend
    on base_line; the parameter is accepted for interface symmetry with
    decone and ignored.

    >>> arr = geometry.parse_arrangement("projective\\n1 0 0\\n0 1 0\\n0 0 1")
    >>> pres = projective_presentation(arr)
    >>> pres.generator_count, len(pres.relators)
    (3, 4)
    """
    if not isinstance(arr, geometry.Arrangement):
        raise TypeError("projective_presentation expects a projective arrangement")
    inc = geometry.intersection_points(arr)
    aux = _auxiliary_line(arr, inc)
    extended = geometry.Arrangement(arr.lines + (aux,))
    aff = geometry.decone(extended, extended.n_lines - 1)
    aff = geometry.shear_to_generic(aff)
    sweep = arvola_randell(aff)
    # all original projective intersection points remain visible, so the
    # sweep saw all of them
    assert len(sweep.relators) == sum(pt.multiplicity - 1 for pt in inc.points)
    by_slope = sorted(range(aff.n_lines), key=lambda i: aff.lines[i].slope(), reverse=True)
    delta = product([Word([i + 1]) for i in by_slope])
    relators = sweep.relators + (Relator(delta, vertex="infinity", index=0, projective=True),)
    return Presentation(arr.n_lines, relators, "projective", arr.n_lines)


def free_reduce_and_strip(pres):
    """Freely reduce every relator, strip conjugating wrappers w r w^-1,
    and drop empty relators.

    Sound for everything downstream: the cover boundary of w r w^-1 is a
    cyclic shift of the boundary of r, and the cover complex includes all
    shifts of every relator anyway.

    >>> p = Presentation(3, (Relator(Word([1, 2, 3, -2, -3, -1])),), "affine-decone", 4)
    >>> [r.word.format() for r in free_reduce_and_strip(p).relators]
    ['g2 g3 g2^-1 g3^-1']
    """
    kept = []
    for r in pres.relators:
        letters = list(r.word.letters)  # already freely reduced
        while len(letters) >= 2 and letters[0] == -letters[-1]:
            letters = letters[1:-1]
        if not letters:
            continue
        kept.append(Relator(Word(letters), vertex=r.vertex, index=r.index, projective=r.projective))
    return Presentation(pres.generator_count, tuple(kept), pres.kind, pres.phi_modulus)
