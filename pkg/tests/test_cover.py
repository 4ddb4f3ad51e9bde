"""
Tests for cover invariants, lifts, the homology representation, and the
Burau cross-oracle.  Rank computations and characteristic polynomials use
sympy as an independent exact oracle.
"""

import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

from braidforge.cover import (
    CoverData,
    LaurentMatrix,
    TwistLetter,
    TwistWord,
    base_change,
    burau_at_companion,
    burau_reduced,
    check_identity,
    cover_data,
    deck_matrix,
    format_twist_word,
    homology_rep,
    intersection_form,
    lift_word,
    matrix_from_json,
    matrix_to_json,
    parse_twist_word,
    symmetry_check,
    transvection,
    twist_class,
    _int_inverse,
)
from braidforge.words import concat, invert_word, parse_word, power, word


def random_word(rng, n, length):
    return word(n, (rng.choice([-1, 1]) * rng.randint(1, n - 1) for _ in range(length)))


def to_sympy(mat):
    return sympy.Matrix([[int(v) for v in row] for row in mat])


# --- cover data ---


def test_cover_data_examples():
    assert cover_data(3, 2) == CoverData(3, 2, -1, 1, 1, 2)
    assert cover_data(2, 2) == CoverData(2, 2, 0, 2, 0, 1)
    assert cover_data(5, 4) == CoverData(5, 4, -11, 1, 6, 12)
    with pytest.raises(ValueError):
        cover_data(1, 2)


def test_cover_data_consistency():
    for n in range(2, 8):
        for k in range(2, 8):
            data = cover_data(n, k)
            assert data.euler_char == n + k - n * k
            assert data.h1_rank == (n - 1) * (k - 1) == 1 - data.euler_char
            assert data.euler_char == 2 - 2 * data.genus - data.boundary_components


# --- twist words and lifts ---


def test_lift_word_examples():
    lift = lift_word(word(3, [1]), 3)
    assert lift.letters == (TwistLetter(1, 1, 1), TwistLetter(1, 2, 1))
    lift_inv = lift_word(word(3, [-1]), 3)
    assert lift_inv.letters == (TwistLetter(1, 2, -1), TwistLetter(1, 1, -1))
    assert lift_word(word(3, []), 4).letters == ()


def test_lift_word_homomorphic():
    rng = random.Random(3)
    for _ in range(50):
        n, k = rng.randint(2, 5), rng.randint(2, 4)
        a = random_word(rng, n, rng.randint(0, 8))
        b = random_word(rng, n, rng.randint(0, 8))
        assert lift_word(concat(a, b), k) == lift_word(a, k) * lift_word(b, k)
        assert lift_word(invert_word(a), k) == lift_word(a, k).inverse()


def test_twist_word_grammar():
    w = parse_twist_word("t[1,2] t[2,1]^-1", 3, 3)
    assert w.letters == (TwistLetter(1, 2, 1), TwistLetter(2, 1, -1))
    assert format_twist_word(w) == "t[1,2] t[2,1]^-1"
    with pytest.raises(ValueError):
        parse_twist_word("t[3,1]", 3, 3)
    with pytest.raises(ValueError):
        parse_twist_word("x[1,1]", 3, 3)


# --- intersection form, deck, transvections ---


def test_intersection_form_examples():
    assert intersection_form(2, 2).shape == (1, 1)
    assert int(intersection_form(2, 2)[0, 0]) == 0
    for n, k in [(2, 3), (3, 2), (3, 3), (4, 3), (5, 4)]:
        J = intersection_form(n, k)
        assert np.array_equal(J.T, -J)
        # adjacency support: same-row and cross-row neighbours pair to ±1,
        # distant pairs to zero
        for i in range(1, n):
            for l in range(1, k):
                e = (i - 1) * (k - 1) + (l - 1)
                if l + 1 <= k - 1:
                    assert abs(int(J[e, e + (1)])) == 1
                if i + 1 <= n - 1:
                    assert abs(int(J[e, e + (k - 1)])) == 1
        data = cover_data(n, k)
        assert to_sympy(J).rank() == 2 * data.genus
        assert data.h1_rank - 2 * data.genus == data.boundary_components - 1


def test_deck_matrix_examples():
    assert np.array_equal(deck_matrix(2, 2), np.array([[-1]], dtype=object))
    assert np.array_equal(
        deck_matrix(2, 3), np.array([[0, -1], [1, -1]], dtype=object)
    )
    for n in range(2, 7):
        for k in range(2, 7):
            D = deck_matrix(n, k)
            P = np.array([[int(v) for v in row] for row in D])
            M = np.eye((n - 1) * (k - 1), dtype=int)
            for j in range(1, k + 1):
                M = M @ P
                if j < k:
                    assert not np.array_equal(M, np.eye((n - 1) * (k - 1), dtype=int))
            assert np.array_equal(M, np.eye((n - 1) * (k - 1), dtype=int))
            J = intersection_form(n, k)
            assert np.array_equal(D.T @ J @ D, J)


def test_twist_class():
    v = twist_class(1, 1, 3, 3)
    assert list(v) == [1, 0, 0, 0]
    v = twist_class(1, 3, 3, 3)
    assert list(v) == [-1, -1, 0, 0]
    # the full row orbit sums to zero through the deck action
    D = deck_matrix(3, 3)
    total = twist_class(1, 1, 3, 3) * 0
    vec = twist_class(1, 1, 3, 3)
    for _ in range(3):
        total = total + vec
        vec = D @ vec
    assert all(int(x) == 0 for x in total)
    with pytest.raises(ValueError):
        twist_class(2, 1, 2, 2)


def test_transvection_properties():
    rng = random.Random(7)
    for n, k in [(3, 2), (3, 3), (4, 3)]:
        J = intersection_form(n, k)
        d = (n - 1) * (k - 1)
        for _ in range(20):
            c = np.array([rng.randint(-2, 2) for _ in range(d)], dtype=object)
            M = transvection(c, J)
            diff = M - np.eye(d, dtype=object)
            assert np.array_equal(diff @ diff, np.zeros((d, d), dtype=object))
            assert np.array_equal(M.T @ J @ M, J)
            assert to_sympy(diff).rank() <= 1
            M_inv = transvection(c, -J)
            assert np.array_equal(M @ M_inv, np.eye(d, dtype=object))
    # radical classes act trivially: boundary-type vector at (2,2)
    J22 = intersection_form(2, 2)
    M = transvection(np.array([1], dtype=object), J22)
    assert int(M[0, 0]) == 1


def test_homology_rep_basics():
    assert np.array_equal(
        homology_rep(TwistWord(3, 2)), np.eye(2, dtype=object)
    )
    # lift of σ1 at (2,2): rank-one form is zero, so the twist acts trivially
    assert np.array_equal(
        homology_rep(lift_word(word(2, [1]), 2)), np.eye(1, dtype=object)
    )


def test_homology_rep_chain_relations():
    H = homology_rep(lift_word(parse_word("(1 2)^6", 3), 2))
    assert np.array_equal(H, np.eye(2, dtype=object))
    H = homology_rep(lift_word(parse_word("(1 2 3)^4", 4), 2))
    assert np.array_equal(H, np.eye(3, dtype=object))


def test_homology_rep_braid_relations():
    for n in range(2, 6):
        for k in range(2, 5):
            for i in range(1, n - 1):
                a = lift_word(word(n, [i, i + 1, i]), k)
                b = lift_word(word(n, [i + 1, i, i + 1]), k)
                assert check_identity(a, b)
            for i in range(1, n - 1):
                for j in range(i + 2, n):
                    a = lift_word(word(n, [i, j]), k)
                    b = lift_word(word(n, [j, i]), k)
                    assert check_identity(a, b)


def test_homology_rep_is_invertible_homomorphism():
    rng = random.Random(11)
    for _ in range(30):
        n, k = rng.randint(2, 4), rng.randint(2, 4)
        a = random_word(rng, n, rng.randint(0, 8))
        b = random_word(rng, n, rng.randint(0, 8))
        Ha = homology_rep(lift_word(a, k))
        Hb = homology_rep(lift_word(b, k))
        assert np.array_equal(
            homology_rep(lift_word(concat(a, b), k)), Ha @ Hb
        )
        Hinv = homology_rep(lift_word(invert_word(a), k))
        assert np.array_equal(Ha @ Hinv, np.eye((n - 1) * (k - 1), dtype=object))
        assert abs(to_sympy(Ha).det()) == 1


def test_symmetry_check():
    rng = random.Random(13)
    for _ in range(100):
        n, k = rng.randint(2, 5), rng.randint(2, 4)
        b = random_word(rng, n, rng.randint(0, 15))
        assert symmetry_check(lift_word(b, k))
    # a single twist is not symmetric once the deck action is nontrivial
    assert not symmetry_check(TwistWord(3, 3, (TwistLetter(1, 1, 1),)))
    assert symmetry_check(TwistWord(3, 3))


def test_check_identity_distinguishes():
    assert not check_identity(
        lift_word(word(3, [1]), 2), lift_word(word(3, [2]), 2)
    )


# --- Burau ---


def test_burau_b2():
    m = burau_reduced(word(2, [1]))
    assert m.entry(0, 0) == {1: -1}
    assert burau_reduced(word(2, [])).entry(0, 0) == {0: 1}


def test_burau_satisfies_relations():
    for n in range(2, 6):
        for i in range(1, n - 1):
            assert burau_reduced(word(n, [i, i + 1, i])) == burau_reduced(
                word(n, [i + 1, i, i + 1])
            )
        for i in range(1, n):
            assert burau_reduced(word(n, [i, -i])) == LaurentMatrix.identity(n - 1)
        for i in range(1, n - 1):
            for j in range(i + 2, n):
                assert burau_reduced(word(n, [i, j])) == burau_reduced(word(n, [j, i]))


def test_burau_determinant_is_unit():
    rng = random.Random(17)
    for _ in range(25):
        n = rng.randint(2, 5)
        w = random_word(rng, n, rng.randint(0, 10))
        det = burau_reduced(w).determinant()
        assert len(det) == 1
        [(exponent, coeff)] = det.items()
        assert coeff in (1, -1)


def test_burau_at_one_is_permutation_action():
    # at t = 1 the reduced Burau is the permutation action minus the trivial
    # summand: characteristic polynomials must match after multiplying by x-1
    rng = random.Random(19)
    x = sympy.Symbol("x")
    for _ in range(25):
        n = rng.randint(2, 5)
        w = random_word(rng, n, rng.randint(0, 10))
        m = burau_reduced(w).evaluate_int(1)
        m = sympy.Matrix([[sympy.Rational(v) for v in row] for row in m])
        char_reduced = m.charpoly(x).as_expr() * (x - 1)
        from braidforge.words import underlying_permutation

        p = underlying_permutation(w)
        P = sympy.zeros(n, n)
        for i in range(1, n + 1):
            P[p(i) - 1, i - 1] = 1
        assert sympy.expand(char_reduced - P.charpoly(x).as_expr()) == 0


def test_burau_at_companion_k2_is_t_minus_one():
    rng = random.Random(23)
    for _ in range(20):
        n = rng.randint(2, 5)
        w = random_word(rng, n, rng.randint(0, 8))
        B = burau_at_companion(w, 2)
        m = burau_reduced(w).evaluate_int(-1)
        assert all(
            int(B[r, c]) == m[r][c]
            for r in range(n - 1)
            for c in range(n - 1)
        )


def test_cross_oracle_base_change():
    rng = random.Random(29)
    for n, k in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]:
        V = base_change(n, k)
        assert abs(to_sympy(V).det()) == 1
        V_inv = _int_inverse(V)
        for _ in range(15):
            b = random_word(rng, n, rng.randint(0, 15))
            H = homology_rep(lift_word(b, k))
            assert np.array_equal(V_inv @ H @ V, burau_at_companion(b, k))


def test_matrix_json_round_trip():
    H = homology_rep(lift_word(word(3, [1, 2]), 2))
    data = matrix_to_json(H, 3, 2)
    assert data["dim"] == 2 and data["n"] == 3 and data["k"] == 2
    assert np.array_equal(matrix_from_json(data), H)
