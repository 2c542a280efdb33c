"""End-to-end checks of the published class facts at full sample sizes."""

import itertools
import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monoclass.catalog import (
    alpha_decay_series,
    coordinate_projection,
    example_3x3,
    identity,
    operator_catalog,
    random_matrix,
    random_monotone_2x2,
    random_monotone_matrix,
    random_monotone_relation,
    rotation,
    rotation_chain,
    star_not_pm,
    zero,
    zero_times_chain,
)
from monoclass.numerics import Tolerance, equals, is_subset, kernel_basis, orth_complement, symmetrize
from monoclass.operators import (
    ClassCode,
    brezis_haraux_alpha,
    classify,
    is_n_cyclic,
    is_paramonotone,
    is_strictly_monotone,
    is_symmetric,
    necessary_3cm_2x2,
    star3_from_alpha,
)
from monoclass.oracle import probe_3star_growth, probe_extension
from monoclass.products import class_and, product_op
from monoclass.relations import (
    classify_relation,
    extend_by_domain_perp,
    is_3star_relation,
    is_maximal_relation,
    is_monotone_relation,
    is_paramonotone_relation,
    selection,
)

LOOSE = Tolerance(bisect_rel=1e-4)


def test_r2_table_codes():
    codes = {
        "00010": rotation(math.pi / 2),
        "10111": coordinate_projection(2, 1),
        "11011": rotation(1.3),
        "11111": identity(2),
    }
    for code, op in codes.items():
        assert classify(op).code.render() == code


def test_hilbert_table_codes_and_decay():
    assert classify(example_3x3()).code.render() == "10011"
    assert classify(zero(2)).code.render() == "10111"
    series = alpha_decay_series(5, rotation_chain)
    for point in series:
        assert math.isclose(point.alpha_star, math.sin(1.0 / point.n_blocks**4), rel_tol=1e-6)
    assert all(a.alpha_star > b.alpha_star for a, b in zip(series, series[1:]))
    chain = classify(rotation_chain(3)).code
    assert classify(zero_times_chain(3)).code == class_and(ClassCode.parse("10111"), chain)


@pytest.mark.parametrize("n", range(2, 9))
def test_rotation_law(n):
    edge = math.pi / n
    for theta in (edge - 1e-4, edge + 1e-4, *np.linspace(0.0, math.pi / 2, 50)):
        # The boundary itself is cyclic; grid points may sit within an ulp of it.
        assert is_n_cyclic(rotation(theta), n).cyclic == (theta <= edge + 1e-9), theta


def test_r2_paramonotone_law():
    rng = np.random.default_rng(2024)
    for _ in range(10_000):
        op = random_monotone_2x2(rng)
        assert is_paramonotone(op) == (is_strictly_monotone(op) or is_symmetric(op)), op.to_lists()


def test_finite_dimensional_3star_equivalence():
    rng = np.random.default_rng(2025)
    for _ in range(1_000):
        op = random_monotone_matrix(rng, int(rng.integers(2, 7)))
        star = star3_from_alpha(brezis_haraux_alpha(op, LOOSE))
        inclusion = is_subset(kernel_basis(symmetrize(op.matrix)), kernel_basis(op.matrix))
        assert star == inclusion, op.to_lists()


def test_3cm_necessary_condition():
    rng = np.random.default_rng(2026)
    for _ in range(10_000):
        op = random_matrix(rng, 2)
        if is_n_cyclic(op, 3).cyclic:
            assert necessary_3cm_2x2(op), op.to_lists()


def test_product_and_law_over_catalog():
    ops = [entry.build() for entry in operator_catalog()]
    codes = [classify(op, LOOSE).code for op in ops]
    for (a, code_a), (b, code_b) in itertools.product(zip(ops, codes), repeat=2):
        assert classify(product_op(a, b), LOOSE).code == class_and(code_a, code_b)
    assert class_and(ClassCode.parse("10111"), ClassCode.parse("11010")).render() == "10010"


def test_relation_structure_suite():
    rng = np.random.default_rng(2027)
    for _ in range(1_000):
        rel = random_monotone_relation(rng, int(rng.integers(1, 6)))
        assert is_monotone_relation(rel)
        assert is_subset(rel.dom, orth_complement(rel.a0))
        assert is_subset(rel.a0, orth_complement(rel.dom))
        picked = selection(rel)
        assert picked.is_single_valued()
        assert is_subset(picked.graph, rel.graph)
        if is_maximal_relation(rel):
            assert equals(orth_complement(rel.dom), rel.a0)
        if is_3star_relation(rel):
            assert is_paramonotone_relation(extend_by_domain_perp(rel))


def test_finite_3star_not_paramonotone_relation():
    rel = star_not_pm()
    report = classify_relation(rel)
    assert report.code.star3 and not report.code.pm and not report.code.mm
    assert probe_extension(rel) is not None
    assert classify_relation(extend_by_domain_perp(rel)).code.pm


@settings(max_examples=100, deadline=None)
@given(st.floats(0.0, math.pi, allow_nan=False), st.integers(2, 8))
def test_rotation_witnesses_are_negative_cycles(theta, n):
    verdict = is_n_cyclic(rotation(theta), n)
    if not verdict.cyclic:
        assert verdict.witness.recompute() < 0


def test_growth_probe():
    assert probe_3star_growth(rotation(math.pi / 2), trials=10_000) is not None
    assert probe_3star_growth(identity(2), trials=10_000) is None


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
