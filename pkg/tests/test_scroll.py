import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from scrollcodes.gf import FieldSpec
from scrollcodes.linalg import Matrix
from scrollcodes.scroll import (EvaluationSet, ScrollError, ScrollSpec, Section, canonical_direction,
                                count_rational_points, dual_scroll, evaluate, evaluation_matrix,
                                point_count_formula, rational_points, section_basis,
                                standard_fiber_bases)


def test_scroll_spec_validation(gf5):
    assert ScrollSpec(gf5, (2, 1)).k == 5
    assert not ScrollSpec(gf5, (1, 0)).very_ample
    for bad in ((), (1, 2), (1, -1)):
        with pytest.raises(ScrollError):
            ScrollSpec(gf5, bad)


def test_section_basis_examples(gf5):
    basis = section_basis(ScrollSpec(gf5, (2,)))
    assert [s.components for s in basis] == [((1,),), ((0, 1),), ((0, 0, 1),)]
    basis = section_basis(ScrollSpec(gf5, (1, 1)))
    assert [s.components for s in basis] == [((1,), ()), ((0, 1), ()), ((), (1,)), ((), (0, 1))]
    assert len(section_basis(ScrollSpec(gf5, (2, 1)))) == 5


def test_evaluate_examples(gf5):
    spec = ScrollSpec(gf5, (1, 1))
    es = standard_fiber_bases(spec, range(5))
    z0 = Section(gf5, ((0, 1), ()))
    assert evaluate(z0, es).tolist() == [0, 0, 1, 0, 2, 0, 3, 0, 4, 0]
    assert not evaluate(Section(gf5, ((), ())), es).any()
    es1 = standard_fiber_bases(ScrollSpec(gf5, (2,)), range(5))
    assert evaluate(Section(gf5, ((0, 0, 1),)), es1).tolist() == [0, 1, 4, 4, 1]


def test_evaluation_matrix_rows_are_sections(gf9):
    spec = ScrollSpec(gf9, (2, 1))
    es = standard_fiber_bases(spec, range(7), "random", 5)
    G = evaluation_matrix(spec, es)
    for row, sec in zip(G.data, section_basis(spec)):
        assert np.array_equal(row, evaluate(sec, es))


def test_evaluate_is_linear(gf5, rng):
    spec = ScrollSpec(gf5, (2, 1))
    es = standard_fiber_bases(spec, range(5), "random", 11)
    t = gf5.tables
    for _ in range(20):
        a = Section(gf5, tuple(tuple(rng.integers(0, 5, size=e + 1).tolist()) for e in spec.exponents))
        b = Section(gf5, tuple(tuple(rng.integers(0, 5, size=e + 1).tolist()) for e in spec.exponents))
        c = int(rng.integers(0, 5))
        combo = Section(gf5, tuple(tuple(int(t.add[x, t.mul[c, y]]) for x, y in zip(pa, pb))
                                   for pa, pb in zip(a.components, b.components)))
        assert np.array_equal(evaluate(combo, es), t.add[evaluate(a, es), t.mul[c, evaluate(b, es)]])


def test_dual_scroll_examples(gf5):
    d = dual_scroll(ScrollSpec(gf5, (1, 1)), 5)
    assert d.exponents == (2, 2) and d.k == 6
    assert dual_scroll(ScrollSpec(gf5, (2,)), 5).k == 2
    assert dual_scroll(ScrollSpec(gf5, (3, 1)), 6).exponents == (3, 1)
    with pytest.raises(ScrollError):
        dual_scroll(ScrollSpec(gf5, (3, 1)), 4)


@pytest.mark.parametrize("q_desc, r, expected", [("2", 2, 9), ("5", 1, 6), ("3", 3, 52)])
def test_point_count_examples(q_desc, r, expected):
    assert count_rational_points(ScrollSpec(FieldSpec.parse(q_desc), (1,) * r)) == expected


@pytest.mark.parametrize("q_desc", ["2", "3", "2^2"])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_point_count_against_vector_classes(q_desc, r):
    # oracle: classes of nonzero vectors under scaling, one fiber per point of P^1
    F = FieldSpec.parse(q_desc)
    classes = {canonical_direction(F, v) for v in itertools.product(range(F.q), repeat=r) if any(v)}
    assert len(classes) * (F.q + 1) == count_rational_points(ScrollSpec(F, (1,) * r))
    assert len(classes) * (F.q + 1) == point_count_formula(F.q, r)
    pts = list(rational_points(ScrollSpec(F, (1,) * r)))
    assert len(set(pts)) == len(pts)


def test_enumeration_guard(gf9):
    with pytest.raises(ScrollError):
        count_rational_points(ScrollSpec(gf9, (1, 1, 1)), guard=100)


def test_identity_bases(gf5):
    es = standard_fiber_bases(ScrollSpec(gf5, (1, 1)), range(5))
    assert all(B == Matrix.identity(gf5, 2) for B in es.bases)


def test_random_bases_are_deterministic(gf5):
    spec = ScrollSpec(gf5, (2, 1))
    a = standard_fiber_bases(spec, range(5), "random", 7)
    b = standard_fiber_bases(spec, range(5), "random", 7)
    c = standard_fiber_bases(spec, range(5), "random", 8)
    assert a == b and a != c
    assert all(B.is_invertible() for B in a.bases)
    with pytest.raises(ScrollError):
        standard_fiber_bases(spec, range(5), "random")


def test_random_bases_cover_gl2_f2():
    F = FieldSpec.prime(2)
    spec = ScrollSpec(F, (1, 1))
    seen = set()
    for seed in range(40):
        for B in standard_fiber_bases(spec, range(2), "random", seed).bases:
            seen.add(tuple(B.data.ravel().tolist()))
    assert len(seen) == 6


def test_evaluation_set_validation(gf5):
    I = Matrix.identity(gf5, 2)
    with pytest.raises(ScrollError, match="distinct"):
        EvaluationSet(gf5, (1, 1), (I, I))
    with pytest.raises(ScrollError, match="singular"):
        EvaluationSet(gf5, (1,), (Matrix(gf5, [[1, 2], [2, 4]]),))
    with pytest.raises(ScrollError):
        EvaluationSet(gf5, (7,), (I,))


def test_dual_bases_are_biorthogonal(gf9):
    es = standard_fiber_bases(ScrollSpec(gf9, (1, 1, 1)), range(4), "random", 2)
    for B, D in zip(es.bases, es.dual_bases()):
        assert B @ D.T == Matrix.identity(gf9, 3)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["2^2", "5", "7", "3^2"]), st.integers(0, 10**6))
def test_scroll_points_lie_in_their_fibers(desc, seed):
    F = FieldSpec.parse(desc)
    es = standard_fiber_bases(ScrollSpec(F, (1, 1)), range(F.q), "random", seed)
    pts = es.scroll_points()
    assert len(pts) == 2 * F.q
    for i, x in enumerate(es.points):
        a, b = pts[2 * i], pts[2 * i + 1]
        assert a.fiber == b.fiber == x and a.direction != b.direction
