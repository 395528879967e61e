"""Cyclic-cover chain complexes built by Fox calculus.

Group-ring elements of Z[Z/n] are length-n integer tuples; entry i is the
coefficient of x^i.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from milnorfiber import geometry
from milnorfiber.cover import (
    build_cover_complex,
    cyc_add,
    cyc_mul,
    cyc_shift,
    cyc_unit,
    fox_derivative,
    h1_of_cover,
    phi_degree,
)
from milnorfiber.presentation import (
    Presentation,
    Relator,
    Word,
    arvola_randell,
    projective_presentation,
)
from milnorfiber.snf import AbelianGroup, IntMatrix


def affine_complex(text, modulus=None):
    aff = geometry.shear_to_generic(geometry.parse_arrangement(text))
    return build_cover_complex(arvola_randell(aff), modulus=modulus)


# --- group-ring arithmetic -----------------------------------------------


def test_cyclic_shift():
    assert cyc_shift((1, 2, 3, 0), 2) == (3, 0, 1, 2)
    assert cyc_shift((1, 2, 3), 0) == (1, 2, 3)
    assert cyc_shift((1, 2, 3), 5) == cyc_shift((1, 2, 3), 2)
    assert cyc_shift((1, 2, 3), -1) == (2, 3, 1)


def test_cyc_mul_is_convolution():
    # (1 + x)(1 - x) = 1 - x^2 in Z[x]/(x^4 - 1)
    assert cyc_mul((1, 1, 0, 0), (1, -1, 0, 0)) == (1, 0, -1, 0)
    # x^2 * x^3 = x mod x^4
    assert cyc_mul(cyc_unit(4, 2), cyc_unit(4, 3)) == cyc_unit(4, 1)


def test_cyc_mul_commutes_with_shift():
    a, b = (1, -2, 0, 3), (0, 1, 1, -1)
    assert cyc_mul(cyc_shift(a, 1), b) == cyc_shift(cyc_mul(a, b), 1)


def test_phi_degree():
    assert phi_degree(Word([1, 2, -1, -2]), 5) == 0
    assert phi_degree(Word([1, 2]), 3) == 2
    assert phi_degree(Word([-1]), 3) == 2


# --- Fox derivatives ------------------------------------------------------


def test_fox_golden_values():
    comm = Word([1, 2, -1, -2])
    assert fox_derivative(comm, 1, 3) == (1, -1, 0)
    assert fox_derivative(comm, 2, 3) == (-1, 1, 0)
    assert fox_derivative(Word([1]), 2, 3) == (0, 0, 0)
    assert fox_derivative(Word([1]), 1, 3) == (1, 0, 0)
    assert fox_derivative(Word([-1]), 1, 3) == (0, 0, -1)  # -x^{-1}
    assert fox_derivative(Word([1, 1, 1]), 1, 3) == (1, 1, 1)


words = st.lists(
    st.integers(1, 4).flatmap(lambda g: st.sampled_from([g, -g])), max_size=24
).map(Word)


@given(words, words, st.integers(1, 6))
@settings(max_examples=300, deadline=None)
def test_fox_product_rule(u, v, n):
    # d(uv) = du + x^{phi(u)} dv
    for gen in range(1, 5):
        lhs = fox_derivative(u * v, gen, n)
        rhs = cyc_add(
            fox_derivative(u, gen, n),
            cyc_shift(fox_derivative(v, gen, n), phi_degree(u, n)),
        )
        assert lhs == rhs


@given(words, st.integers(1, 6))
@settings(max_examples=300, deadline=None)
def test_fox_fundamental_identity(w, n):
    # sum_g (dw/dg)(x - 1) = x^{phi(w)} - 1
    x_minus_1 = cyc_add(cyc_unit(n, 1), tuple(-c for c in cyc_unit(n, 0)))
    total = cyc_unit(n, 0)
    total = tuple(0 for _ in total)
    for gen in range(1, 5):
        total = cyc_add(total, cyc_mul(fox_derivative(w, gen, n), x_minus_1))
    expected = cyc_add(cyc_unit(n, phi_degree(w, n)), tuple(-c for c in cyc_unit(n, 0)))
    assert total == expected


def test_fox_inverse_rule():
    # d(w^-1) = -x^{-phi(w)} dw
    w = Word([1, -2, 1, 2])
    n = 5
    for gen in (1, 2):
        lhs = fox_derivative(w.inverse(), gen, n)
        rhs = tuple(-c for c in cyc_shift(fox_derivative(w, gen, n), -phi_degree(w, n)))
        assert lhs == rhs


# --- complex assembly -------------------------------------------------------


def test_two_line_complex_shapes():
    c = affine_complex("affine\n1 0 0\n0 1 0\n")
    assert c.n == 3
    assert (c.generator_count, c.relator_count) == (2, 1)
    assert c.d2.shape == (3, 6)
    assert c.d1.shape == (6, 3)
    assert c.chain_ok()
    assert c.euler_characteristic() == 3 * (1 - 2 + 1)


def test_d2_rows_are_shifts():
    c = affine_complex("affine\n1 0 0\n0 1 0\n")
    # rows 1 and 2 are the shifted copies of row 0, blockwise per generator
    r0, r1 = c.d2.rows[0], c.d2.rows[1]
    for g in range(2):
        block0 = tuple(r0[3 * g : 3 * g + 3])
        block1 = tuple(r1[3 * g : 3 * g + 3])
        assert block1 == cyc_shift(block0, 1)


def test_d1_structure():
    c = affine_complex("affine\n1 0 0\n0 1 0\n")
    # edge x^i g_j runs from vertex x^i to vertex x^{i+1}
    for j in range(2):
        for i in range(3):
            row = c.d1.rows[3 * j + i]
            expected = [0, 0, 0]
            expected[(i + 1) % 3] += 1
            expected[i] -= 1
            assert row == expected


@pytest.mark.parametrize(
    "text",
    [
        "affine\n1 0 0\n0 1 0\n",
        "affine\n1 0 0\n1 1 0\n1 2 0\n",
        "affine\n1 0 0\n0 1 0\n1 1 0\n1 -1 -2\n0 1 -5\n",
    ],
)
def test_chain_condition(text):
    assert affine_complex(text).chain_ok()


def test_modulus_override_validation():
    pres = Presentation(2, (Relator(Word([1, 1, -2, -2]), projective=True),), "projective", 2)
    build_cover_complex(pres, modulus=2)  # exponent sum 0 works for any n
    bad = Presentation(2, (Relator(Word([1, 1]), projective=True),), "projective", 2)
    build_cover_complex(bad, modulus=2)
    with pytest.raises(ValueError, match="not divisible"):
        build_cover_complex(bad, modulus=3)
    with pytest.raises(ValueError, match="degree"):
        build_cover_complex(bad, modulus=0)


# --- homology ----------------------------------------------------------------


def test_h1_two_crossing_lines():
    # coning two crossing lines adds the infinity line and gives the
    # triangle, whose Milnor fiber has H1 = Z^2
    h = h1_of_cover(affine_complex("affine\n1 0 0\n0 1 0\n"), primes=(2, 3))
    assert h.group == AbelianGroup(2)
    assert h.b0 == 1
    assert h.b2 == 1
    assert h.euler == 0
    assert h.euler_ok()
    assert h.betti_mod == {2: 2, 3: 2}


def test_h1_two_parallel_lines():
    # two parallel lines cone to the pencil of 3 concurrent lines:
    # no vertices, free group on 2 meridians, H1 of the cover = Z^4
    h = h1_of_cover(affine_complex("affine\n0 1 0\n0 1 -1\n"), primes=(2, 3))
    assert h.group == AbelianGroup(4)
    assert h.b0 == 1
    assert h.b2 == 0
    assert h.euler == -3
    assert h.betti_mod == {2: 4, 3: 4}


def test_h1_betti_mod_detects_torsion():
    # one generator, relator g^4, double cover: the Fox row folds to
    # 2 + 2x, so H1 = Z/2 and only the mod-2 Betti number sees it
    pres = Presentation(1, (Relator(Word([1, 1, 1, 1]), projective=True),), "projective", 4)
    c = build_cover_complex(pres, modulus=2)
    assert c.fox_rows == (((2, 2),),)
    h = h1_of_cover(c, primes=(2, 3))
    assert h.group == AbelianGroup(0, (2,))
    assert h.b1 == 0
    assert h.betti_mod == {2: 1, 3: 0}


def test_h1_of_projective_triangle():
    # the projective presentation carries an extra product relator, so its
    # complex is not the fiber (different euler number), but H1 agrees
    arr = geometry.parse_arrangement("projective\n1 0 0\n0 1 0\n0 0 1\n")
    c = build_cover_complex(projective_presentation(arr))
    h = h1_of_cover(c, primes=(2, 3, 5))
    assert h.group == AbelianGroup(2)
    assert h.b0 == 1
    assert h.euler_ok()


def test_connected_cover_everywhere():
    for text in ("affine\n1 0 0\n0 1 0\n", "affine\n1 0 0\n1 1 0\n1 2 0\n"):
        h = h1_of_cover(affine_complex(text))
        assert h.b0 == 1


def test_shift_invariance_of_homology():
    """Conjugating a relator only shifts its Fox row, so homology of the
    cover must not change."""
    base = Presentation(2, (Relator(Word([1, 2, -1, -2])),), "affine-decone", 5)
    conj = Presentation(
        2, (Relator(Word([2, 1, 2, -1, -2, -2])),), "affine-decone", 5
    )
    h_base = h1_of_cover(build_cover_complex(base), primes=(2, 5))
    h_conj = h1_of_cover(build_cover_complex(conj), primes=(2, 5))
    assert h_base.group == h_conj.group
    assert h_base.betti_mod == h_conj.betti_mod
