import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from monoclass.catalog import (
    coordinate_projection,
    example_3x3,
    identity,
    operator_catalog,
    random_matrix,
    random_monotone_2x2,
    random_monotone_matrix,
    rotation,
    rotation_chain,
    symmetric_pm_family,
    tilde_r,
    zero,
)
from monoclass.errors import ArgumentError, DimensionError, PreconditionError
from monoclass.numerics import Tolerance, sym_eigen
from monoclass.operators import (
    UNBOUNDED,
    ClassCode,
    ClassificationReport,
    MatrixOperator,
    brezis_haraux_alpha,
    classify,
    cyclic_gram,
    is_3star,
    is_maximal,
    is_monotone,
    is_n_cyclic,
    is_paramonotone,
    is_strictly_monotone,
    is_symmetric,
    monotone_2x2_closed_form,
    necessary_3cm_2x2,
    paramonotone_2x2_closed_form,
    reduced_alpha_form,
    star3_from_alpha,
)

LOOSE = Tolerance(bisect_rel=1e-4)

entries = st.floats(-10, 10, allow_nan=False, allow_infinity=False, allow_subnormal=False)
matrices = st.integers(1, 4).flatmap(lambda n: arrays(np.float64, (n, n), elements=entries))


def test_matrix_operator_rejects_non_square():
    with pytest.raises(DimensionError):
        MatrixOperator.from_rows([[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]])
    with pytest.raises(DimensionError):
        MatrixOperator.from_rows([[1.0, float("inf")], [0.0, 1.0]])


def test_matrix_is_read_only():
    op = identity(2)
    with pytest.raises(ValueError):
        op.matrix[0, 0] = 5.0


@pytest.mark.parametrize(
    "op, monotone",
    [
        (identity(3), True),
        (zero(2), True),
        (rotation(math.pi / 2), True),
        (rotation(2.0), False),
        (tilde_r(), True),
        (MatrixOperator.from_rows([[1.0, 0.0], [0.0, -1.0]]), False),
    ],
)
def test_is_monotone(op, monotone):
    assert is_monotone(op) is monotone
    assert is_maximal(op) is monotone


def test_strict_and_paramonotone():
    assert is_strictly_monotone(identity(2))
    assert not is_strictly_monotone(zero(2))
    assert is_paramonotone(zero(2))
    assert not is_paramonotone(rotation(math.pi / 2))
    assert is_paramonotone(symmetric_pm_family(2.0, 0.01))
    assert not is_strictly_monotone(symmetric_pm_family(2.0, 0.01))
    assert not is_paramonotone(rotation(2.0))


def test_brezis_haraux_alpha_closed_forms():
    assert brezis_haraux_alpha(identity(2)) == pytest.approx(1.0, rel=1e-9)
    assert brezis_haraux_alpha(rotation(1.0)) == pytest.approx(math.cos(1.0), rel=1e-9)
    assert brezis_haraux_alpha(zero(3)) == UNBOUNDED
    assert brezis_haraux_alpha(rotation(math.pi / 2)) < 1e-9
    assert brezis_haraux_alpha(MatrixOperator.from_rows([[2.0, 0.0], [0.0, 0.5]])) == pytest.approx(0.5, rel=1e-9)


def test_brezis_haraux_alpha_requires_monotone():
    with pytest.raises(PreconditionError):
        brezis_haraux_alpha(rotation(2.0))


def test_star3_agrees_with_alpha_on_examples():
    for op in (identity(2), zero(2), rotation(math.pi / 2), tilde_r(), example_3x3(), symmetric_pm_family(1.0, 1.0)):
        assert star3_from_alpha(brezis_haraux_alpha(op, LOOSE)) == is_3star(op)


def test_is_3star_on_non_monotone_is_false():
    assert not is_3star(rotation(2.0))


def test_nearly_skew_rotation_is_3star():
    op = rotation(math.pi / 2 - 1e-7)
    assert is_paramonotone(op)
    assert is_3star(op)
    assert brezis_haraux_alpha(op) == pytest.approx(math.sin(1e-7), rel=1e-6)
    assert classify(op).code.render() == "11011"


def test_long_rotation_chain_is_3star():
    op = rotation_chain(40)
    assert is_paramonotone(op)
    assert is_3star(op)
    assert brezis_haraux_alpha(op, LOOSE) == pytest.approx(math.sin(1.0 / 40**4), rel=1e-3)


def test_reduced_alpha_form():
    form = reduced_alpha_form(coordinate_projection(2, 1))
    np.testing.assert_allclose(form.eigenvalues, [1.0], atol=1e-12)
    np.testing.assert_allclose(form.gram, [[1.0]], atol=1e-12)
    assert form.lower_bound() == pytest.approx(1.0)
    assert reduced_alpha_form(rotation(math.pi / 2)) is None
    assert reduced_alpha_form(zero(2)).is_empty


@settings(max_examples=60, deadline=None)
@given(matrices, matrices, st.integers(0, 4))
def test_3star_equals_paramonotone_on_rank_deficient_inputs(g, h, rank):
    n = min(g.shape[0], h.shape[0])
    g, h = g[:n, : min(rank, n)], h[:n, :n]
    op = MatrixOperator(g @ g.T + h - h.T)
    assert is_3star(op) == is_paramonotone(op)
    code = classify(op, LOOSE).code
    assert code.star3 == code.pm


def test_classify_identity_through_cycle_form():
    values, vectors = sym_eigen(cyclic_gram(identity(2), 3))
    np.testing.assert_allclose(vectors @ np.diag(values) @ vectors.T, cyclic_gram(identity(2), 3), atol=1e-12)
    assert classify(identity(2)).code.render() == "11111"


@pytest.mark.parametrize("entry", operator_catalog(), ids=lambda e: e.name)
@pytest.mark.parametrize("factor", [0.25, 3.0, 40.0])
def test_code_is_invariant_under_positive_scaling(entry, factor):
    op = entry.build()
    assert classify(op.scaled(factor), LOOSE).code == classify(op, LOOSE).code


@pytest.mark.parametrize("n", range(3, 7))
def test_n_cyclic_implies_shorter_cycles(n):
    ops = [entry.build() for entry in operator_catalog()]
    ops += [rotation(theta) for theta in np.linspace(0.0, math.pi / 2, 25)]
    rng = np.random.default_rng(n)
    ops += [random_monotone_matrix(rng, int(rng.integers(2, 5))) for _ in range(20)]
    for op in ops:
        if is_n_cyclic(op, n).cyclic:
            assert is_n_cyclic(op, n - 1).cyclic, op.to_lists()


def test_cyclic_gram_for_n_2_is_symmetric_part_form():
    op = tilde_r()
    gram = cyclic_gram(op, 2)
    np.testing.assert_allclose(gram, gram.T)
    x = np.array([0.3, -1.2])
    stacked = np.concatenate([x, -x])
    # A 2-cycle (x, -x) sums to 4⟨x, Ax⟩.
    assert float(stacked @ gram @ stacked) == pytest.approx(4 * float(x @ op.matrix @ x))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8])
def test_rotation_cyclic_boundary(n):
    edge = math.pi / n
    assert is_n_cyclic(rotation(edge - 1e-4), n).cyclic
    verdict = is_n_cyclic(rotation(edge + 1e-4), n)
    assert not verdict.cyclic
    assert verdict.witness.recompute() < 0


def test_is_n_cyclic_rejects_short_cycles():
    with pytest.raises(ArgumentError):
        is_n_cyclic(identity(2), 1)


@settings(max_examples=80, deadline=None)
@given(matrices, st.integers(2, 5))
def test_failed_cyclic_verdict_carries_negative_cycle(m, n):
    verdict = is_n_cyclic(MatrixOperator(m), n)
    if verdict.cyclic:
        assert verdict.witness is None
        return
    points = np.asarray(verdict.witness.points)
    images = np.asarray(verdict.witness.images)
    np.testing.assert_allclose(images, points @ m.T, atol=1e-9 * max(1.0, float(np.max(np.abs(m)))))
    assert verdict.witness.recompute() < 0


@settings(max_examples=60, deadline=None)
@given(matrices, matrices)
def test_gram_plus_skew_is_monotone(g, h):
    n = min(g.shape[0], h.shape[0])
    g, h = g[:n, :n], h[:n, :n]
    assert is_monotone(MatrixOperator(g @ g.T + h - h.T))


def test_two_by_two_closed_forms_on_random_matrices():
    rng = np.random.default_rng(7)
    for _ in range(500):
        op = random_matrix(rng, 2)
        assert is_monotone(op) == monotone_2x2_closed_form(op)
        if is_n_cyclic(op, 3).cyclic:
            assert necessary_3cm_2x2(op)
        monotone = random_monotone_2x2(rng)
        assert is_paramonotone(monotone) == paramonotone_2x2_closed_form(monotone)
        assert is_paramonotone(monotone) == (is_strictly_monotone(monotone) or is_symmetric(monotone))


def test_two_by_two_helpers_reject_other_sizes():
    with pytest.raises(ArgumentError):
        necessary_3cm_2x2(identity(3))


def test_tilde_r_fails_necessary_condition():
    assert not necessary_3cm_2x2(tilde_r())
    assert not is_n_cyclic(tilde_r(), 3).cyclic


def test_3star_matches_paramonotone_on_random_matrices():
    rng = np.random.default_rng(11)
    for _ in range(200):
        op = random_monotone_matrix(rng, int(rng.integers(2, 7)))
        assert is_3star(op) == is_paramonotone(op)


def test_classify_report_fields():
    report = classify(example_3x3(), LOOSE)
    assert report.code.render() == "10011"
    assert report.kind == "operator"
    assert report.dim == 3
    assert report.monotone
    assert len(report.ker_sym) == 1
    assert len(report.ker_full) == 1
    assert report.cycle_witness is not None
    assert report.cycle_witness.recompute() < 0
    assert isinstance(report.alpha_star, float) and report.alpha_star > 0


def test_classify_non_monotone_reports_all_false():
    report = classify(MatrixOperator.from_rows([[1.0, 0.0], [0.0, -1.0]]))
    assert report.code.render() == "00000"
    assert not report.monotone
    assert report.alpha_star is None
    assert any(note.startswith("not monotone") for note in report.notes)


def test_classify_notes_symmetric_and_zero():
    assert any("symmetric" in note for note in classify(identity(2)).notes)
    zero_report = classify(zero(2))
    assert zero_report.alpha_star == UNBOUNDED
    assert any("zero operator" in note for note in zero_report.notes)


def test_report_json_round_trip():
    report = classify(tilde_r(), LOOSE)
    assert ClassificationReport.model_validate_json(report.model_dump_json()) == report
    assert '"code":"11011"' in report.model_dump_json()


@settings(max_examples=50)
@given(st.text(alphabet="01", min_size=5, max_size=5), st.text(alphabet="01", min_size=5, max_size=5))
def test_class_code_and_is_bitwise(a, b):
    combined = ClassCode.parse(a) & ClassCode.parse(b)
    assert combined.render() == "".join("1" if x == y == "1" else "0" for x, y in zip(a, b))
    assert ClassCode.parse(a).render() == a


@pytest.mark.parametrize("text", ["1011", "101111", "10a11", ""])
def test_class_code_parse_rejects(text):
    with pytest.raises(ValueError):
        ClassCode.parse(text)


def test_closure_violations():
    assert ClassCode.parse("01000").closure_violations()
    assert ClassCode.parse("00100").closure_violations()
    assert not ClassCode.parse("00101").closure_violations()
    assert ClassCode.parse("00101").closure_violations(full_domain=True)
    assert not ClassCode.parse("10111").closure_violations(full_domain=True)
    assert not ClassCode.parse("00010").closure_violations(full_domain=True)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
