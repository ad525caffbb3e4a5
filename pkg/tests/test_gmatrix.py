"""Graded matrices: products, brackets, transpose, supertrace."""

import random

import pytest

from gradedosp.gmatrix import (
    GradedMatrix,
    anticommutator,
    commutator,
    elem,
    graded_bracket,
)
from gradedosp.grading import deg_add, dot, signature_gl
from gradedosp.scalars import ONE, SQRT2, ZERO, Scalar

S4 = signature_gl(1, 0, 1, 1)        # degrees (0,0), (1,0), (0,1)
S6 = signature_gl(2, 1, 2, 1)        # 6x6 test signature, all four degrees


def test_elem_degrees():
    s = signature_gl(1, 0, 1, 0)
    assert elem(s, 1, 2).degree_of() == (1, 0)
    assert elem(signature_gl(1, 1, 0, 0), 2, 2).degree_of() == (0, 0)
    assert elem(S4, 2, 3).degree_of() == (1, 1)


def test_elem_out_of_range():
    with pytest.raises(IndexError):
        elem(S4, 0, 1)
    with pytest.raises(IndexError):
        elem(S4, 1, 4)


def test_degree_of():
    s = signature_gl(1, 0, 1, 0)
    assert GradedMatrix.zero(s).degree_of() == (0, 0)
    assert elem(s, 2, 1).degree_of() == (1, 0)
    assert (elem(s, 1, 2) + elem(s, 2, 1)).degree_of() == (1, 0)
    assert (elem(s, 1, 1) + elem(s, 1, 2)).degree_of() is None


def test_homogeneous_parts():
    x = elem(S4, 1, 2)
    parts = x.homogeneous_parts()
    assert parts[(1, 0)] == x
    assert all(parts[d].is_zero() for d in parts if d != (1, 0))

    eye = GradedMatrix.identity(signature_gl(1, 1, 1, 1))
    parts = eye.homogeneous_parts()
    assert parts[(0, 0)] == eye

    y = elem(S4, 1, 2) + elem(S4, 1, 3)
    parts = y.homogeneous_parts()
    assert parts[(1, 0)] == elem(S4, 1, 2)
    assert parts[(0, 1)] == elem(S4, 1, 3)
    total = GradedMatrix.zero(S4)
    for part in parts.values():
        total = total + part
    assert total == y


def test_matmul():
    assert elem(S4, 2, 1) @ elem(S4, 1, 3) == elem(S4, 2, 3)
    assert (elem(S4, 1, 2) @ elem(S4, 1, 3)).is_zero()


def test_matmul_degree_additive():
    m = len(S6)
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            a = elem(S6, i, j)
            for k in range(1, m + 1):
                b = elem(S6, j, k)
                prod = a @ b
                assert prod.degree_of() == deg_add(a.degree_of(), b.degree_of())


def test_signature_mismatch():
    other = signature_gl(2, 0, 1, 1)
    with pytest.raises(ValueError):
        elem(S4, 1, 1) @ elem(other, 1, 1)
    with pytest.raises(ValueError):
        elem(S4, 1, 1) + elem(other, 1, 1)
    with pytest.raises(ValueError):
        graded_bracket(elem(S4, 1, 1), elem(other, 1, 1))


def test_graded_bracket_examples():
    # degrees (1,0) and (0,1): dot 0, commutator
    assert graded_bracket(elem(S4, 2, 1), elem(S4, 1, 3)) == elem(S4, 2, 3)
    # degrees (1,0) and (1,0): dot 1, anticommutator
    assert graded_bracket(elem(S4, 1, 2), elem(S4, 2, 1)) == elem(S4, 1, 1) + elem(S4, 2, 2)
    # square-zero element brackets to zero with itself
    assert graded_bracket(elem(S4, 1, 2), elem(S4, 1, 2)).is_zero()


def test_graded_bracket_extends_bilinearly():
    # on inhomogeneous input the bracket equals the part-by-part expansion
    rng = random.Random(417)
    for _ in range(12):
        a = _random_matrix(S6, rng)
        b = _random_matrix(S6, rng)
        expanded = GradedMatrix.zero(S6)
        for pa in a.homogeneous_parts().values():
            for pb in b.homogeneous_parts().values():
                expanded = expanded + graded_bracket(pa, pb)
        assert graded_bracket(a, b) == expanded


def test_plain_commutators():
    eye = GradedMatrix.identity(S4)
    a = elem(S4, 1, 2) + elem(S4, 3, 1).scale(SQRT2)
    assert commutator(eye, a).is_zero()
    assert anticommutator(elem(S4, 1, 2), elem(S4, 2, 1)) == elem(S4, 1, 1) + elem(S4, 2, 2)
    b = elem(S4, 2, 3) - elem(S4, 1, 1)
    assert commutator(a, b) + anticommutator(a, b) == (a @ b).scale(2)


def test_graded_transpose_examples():
    s = signature_gl(1, 0, 1, 0)
    assert elem(s, 1, 2).graded_transpose() == elem(s, 2, 1)
    assert elem(s, 2, 1).graded_transpose() == -elem(s, 1, 2)
    for i in (1, 2):
        assert elem(s, i, i).graded_transpose() == elem(s, i, i)


def test_bracket_grading_closure():
    # bracket of homogeneous elements lands in the sum degree
    m = len(S6)
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            a = elem(S6, i, j)
            for k in range(1, m + 1):
                for l in range(1, m + 1):
                    b = elem(S6, k, l)
                    br = graded_bracket(a, b)
                    if not br.is_zero():
                        assert br.degree_of() == deg_add(a.degree_of(), b.degree_of())


def test_bracket_symmetry():
    m = len(S6)
    units = [elem(S6, i, j) for i in range(1, m + 1) for j in range(1, m + 1)]
    for a in units:
        for b in units:
            lhs = graded_bracket(a, b)
            rhs = graded_bracket(b, a)
            if dot(a.degree_of(), b.degree_of()):
                assert lhs == rhs
            else:
                assert lhs == -rhs


def test_bracket_jacobi_on_matrix_units():
    s = signature_gl(1, 1, 1, 1)
    units = [elem(s, i, j) for i in range(1, 5) for j in range(1, 5)]
    for a in units:
        da = a.degree_of()
        for b in units:
            sign = dot(da, b.degree_of())
            ab = graded_bracket(a, b)
            for c in units:
                lhs = graded_bracket(a, graded_bracket(b, c))
                third = graded_bracket(b, graded_bracket(a, c))
                rhs = graded_bracket(ab, c)
                rhs = rhs - third if sign else rhs + third
                assert lhs == rhs


def test_transpose_antihomomorphism():
    m = len(S6)
    units = [elem(S6, i, j) for i in range(1, m + 1) for j in range(1, m + 1)]
    for a in units:
        da = a.degree_of()
        at = a.graded_transpose()
        for b in units:
            lhs = (a @ b).graded_transpose()
            rhs = b.graded_transpose() @ at
            if dot(da, b.degree_of()):
                rhs = -rhs
            assert lhs == rhs


def test_transpose_involution_character():
    m = len(S6)
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            a = elem(S6, i, j)
            g = a.degree_of()
            twice = a.graded_transpose().graded_transpose()
            assert twice == (-a if dot(g, g) else a)


# The 4x4 block sign table of the graded supertranspose on the gl layout:
# entry [p][q] is the sign carried by source block (p, q).
BLOCK_SIGNS = [
    [1, 1, 1, 1],
    [1, 1, -1, -1],
    [-1, 1, 1, -1],
    [-1, 1, -1, 1],
]


def test_transpose_block_sign_table():
    s = signature_gl(1, 1, 1, 1)  # one index per block
    for p in range(4):
        for q in range(4):
            a = elem(s, p + 1, q + 1)
            want = elem(s, q + 1, p + 1).scale(BLOCK_SIGNS[p][q])
            assert a.graded_transpose() == want


def test_transpose_z2_reduction():
    # only degrees (0,0) and (1,0): the ordinary supertranspose block signs
    s = signature_gl(2, 0, 2, 0)
    blocks = {(0, 0): 1, (0, 1): 1, (1, 0): -1, (1, 1): 1}  # (row half, col half)
    for i in range(1, 5):
        for j in range(1, 5):
            half = (0 if i <= 2 else 1, 0 if j <= 2 else 1)
            assert elem(s, i, j).graded_transpose() == elem(s, j, i).scale(blocks[half])


def test_supertrace_examples():
    s4 = signature_gl(1, 1, 1, 1)
    assert GradedMatrix.identity(s4).supertrace() == ZERO
    s2 = signature_gl(1, 0, 1, 0)
    assert elem(s2, 2, 2).supertrace() == Scalar(-1)
    assert elem(s2, 1, 2).supertrace() == ZERO


def _random_matrix(sig, rng):
    pool = [Scalar(-1), ZERO, ONE, SQRT2]
    m = len(sig)
    entries = {}
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            v = rng.choice(pool)
            if v:
                entries[(i, j)] = v
    return GradedMatrix(sig, entries)


def test_supertrace_vanishes_on_brackets():
    sig = signature_gl(1, 1, 1, 1)
    rng = random.Random(8143)
    for _ in range(50):
        a = _random_matrix(sig, rng)
        b = _random_matrix(sig, rng)
        assert graded_bracket(a, b).supertrace() == ZERO


def test_scale_and_neg():
    a = elem(S4, 1, 2) + elem(S4, 2, 3).scale(SQRT2)
    assert a.scale(0).is_zero()
    assert a.scale(2) == a + a
    assert -a + a == GradedMatrix.zero(S4)
    assert 3 * elem(S4, 1, 2) == elem(S4, 1, 2).scale(3)


def test_json_round_trip():
    a = elem(S4, 3, 1).scale(SQRT2) - elem(S4, 1, 2).scale(Scalar(1, -2))
    doc = a.to_json()
    assert doc["size"] == 3
    positions = [(e[0], e[1]) for e in doc["entries"]]
    assert positions == sorted(positions)
    assert GradedMatrix.from_json(doc) == a


def test_json_skips_zeros():
    a = elem(S4, 1, 2) - elem(S4, 1, 2)
    assert a.to_json()["entries"] == []
