import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np
import pytest

from monoclass.catalog import (
    identity_graph,
    max_r2,
    non_max,
    operator_catalog,
    random_monotone_relation,
    relation_catalog,
    rotation_graph,
    star_not_pm,
    star_not_pm_extended,
    tilde_r,
)
from monoclass.errors import DimensionError, DomainError, PreconditionError
from monoclass.numerics import Subspace, Tolerance, equals, is_subset, orth_complement
from monoclass.operators import classify
from monoclass.relations import (
    classify_relation,
    extend_by_domain_perp,
    image_of,
    is_3star_relation,
    is_maximal_relation,
    is_monotone_relation,
    is_n_cyclic_relation,
    is_paramonotone_relation,
    is_strict_relation,
    monotonically_related,
    related_form,
    related_infimum,
    relation_from_graph,
    relation_from_operator,
    selection,
    trivial_relation,
)


def test_relation_from_graph_structure():
    rel = max_r2()
    assert rel.graph_dim == 2
    assert equals(rel.dom, Subspace.coordinates(2, [0]))
    assert equals(rel.a0, Subspace.coordinates(2, [1]))
    assert equals(rel.ran, Subspace.full(2))
    assert equals(rel.ker, Subspace.zero(2))


def test_relation_of_operator_is_single_valued():
    rel = relation_from_operator(tilde_r())
    assert rel.is_single_valued()
    assert equals(rel.dom, Subspace.full(2))
    assert rel.contains_pair([1.0, 0.0], [1.0, 3.0])
    assert not rel.contains_pair([1.0, 0.0], [1.0, 0.0])


def test_empty_graph():
    rel = trivial_relation(2)
    assert rel.graph_dim == 0
    assert rel.dom.is_trivial and rel.ran.is_trivial and rel.a0.is_trivial
    assert is_monotone_relation(rel)
    assert not is_maximal_relation(rel)


def test_relation_dimension_errors():
    with pytest.raises(DimensionError):
        relation_from_graph([[1.0, 0.0, 1.0]])
    with pytest.raises(DimensionError):
        relation_from_graph([[1.0, 0.0, 1.0, 0.0], [1.0, 0.0]])
    with pytest.raises(DimensionError):
        relation_from_graph([])
    with pytest.raises(DimensionError):
        max_r2().contains_pair([1.0], [1.0, 0.0])


def test_dependent_graph_vectors_are_dropped():
    rel = relation_from_graph([[1, 0, 1, 0], [2, 0, 2, 0], [0, 0, 0, 1]])
    assert rel.graph_dim == 2


def test_monotone_form_matches_inner_product():
    rng = np.random.default_rng(3)
    rel = random_monotone_relation(rng, 4)
    form = rel.monotone_form()
    for _ in range(20):
        c = rng.standard_normal(rel.graph_dim)
        y, ystar = rel.point(c)
        assert float(c @ form.B @ c) == pytest.approx(float(y @ ystar), abs=1e-10)


def test_image_of():
    rel = max_r2()
    image = image_of(rel, [2.0, 0.0])
    np.testing.assert_allclose(image.representative, [2.0, 0.0], atol=1e-12)
    assert image.a0.dim == 1
    with pytest.raises(DomainError):
        image_of(rel, [0.0, 1.0])
    with pytest.raises(DimensionError):
        image_of(rel, [1.0, 0.0, 0.0])


def test_selection_is_single_valued_subgraph():
    rel = max_r2()
    picked = selection(rel)
    assert picked.is_single_valued()
    assert is_subset(picked.graph, rel.graph)
    with pytest.raises(PreconditionError):
        selection(rel, Subspace.coordinates(2, [1]))


def test_extend_by_domain_perp():
    rel = star_not_pm()
    extended = extend_by_domain_perp(rel)
    assert equals(extended.a0, orth_complement(rel.dom))
    assert extended.graph_dim == 3
    assert is_maximal_relation(extended)


def test_star_not_pm_tests():
    rel = star_not_pm()
    assert is_monotone_relation(rel)
    assert is_3star_relation(rel)
    assert not is_paramonotone_relation(rel)
    assert not is_strict_relation(rel)
    assert not is_maximal_relation(rel)
    assert is_paramonotone_relation(star_not_pm_extended())


def test_relation_tests_require_monotone():
    rel = rotation_graph(2.0)
    assert not is_monotone_relation(rel)
    assert not is_maximal_relation(rel)
    with pytest.raises(PreconditionError):
        is_paramonotone_relation(rel)
    with pytest.raises(PreconditionError):
        monotonically_related(rel, [1.0, 0.0], [1.0, 0.0])


def test_cyclic_relation_matches_operator_boundary():
    assert is_n_cyclic_relation(rotation_graph(math.pi / 3 - 1e-4), 3).cyclic
    verdict = is_n_cyclic_relation(rotation_graph(math.pi / 3 + 1e-4), 3)
    assert not verdict.cyclic
    assert verdict.witness.recompute() < 0
    assert is_n_cyclic_relation(trivial_relation(2), 3).cyclic


def test_related_infimum_identity():
    rel = identity_graph()
    assert related_infimum(rel, [1.0, 0.0], [1.0, 0.0]) == pytest.approx(0.0, abs=1e-12)
    assert related_infimum(rel, [1.0, 0.0], [2.0, 0.0]) == pytest.approx(-0.25, abs=1e-12)
    assert related_infimum(rel, [1.0, 0.0], [-1.0, 0.0]) == pytest.approx(-1.0, abs=1e-12)
    assert monotonically_related(rel, [1.0, 2.0], [1.0, 2.0])
    assert not monotonically_related(rel, [1.0, 0.0], [2.0, 0.0])


def test_related_infimum_unbounded_along_null_direction():
    rel = star_not_pm()
    assert related_infimum(rel, [0.0, 1.0, 0.0], [0.0, 0.0, 0.0]) == -math.inf
    assert related_infimum(rel, [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]) == 0.0


def test_non_max_has_related_points_outside_graph():
    rel = non_max()
    assert monotonically_related(rel, [0.0, 1.0], [0.0, 1.0])
    assert not rel.contains_pair([0.0, 1.0], [0.0, 1.0])
    with pytest.raises(DimensionError):
        related_infimum(rel, [1.0], [1.0, 0.0])


@pytest.mark.parametrize("entry", relation_catalog(), ids=lambda e: e.name)
def test_relation_catalog_codes(entry):
    report = classify_relation(entry.build())
    assert report.code == entry.expected_code
    assert report.kind == "relation"
    assert report.relation is not None


def test_classify_relation_summary():
    report = classify_relation(star_not_pm())
    summary = report.relation
    assert (summary.graph_dim, summary.dom_dim, summary.ran_dim, summary.a0_dim) == (2, 1, 2, 1)
    assert not summary.maximal
    assert summary.extension_witness is not None
    assert any("multivalued" in note for note in report.notes)
    assert not any("closure violation" in note for note in report.notes)


def test_classify_relation_non_monotone():
    report = classify_relation(rotation_graph(2.0))
    assert report.code.render() == "00000"
    assert not report.monotone
    assert report.relation.extension_witness is None


def test_random_relations_structure():
    rng = np.random.default_rng(5)
    for _ in range(100):
        rel = random_monotone_relation(rng, int(rng.integers(1, 6)))
        assert is_monotone_relation(rel)
        assert is_subset(rel.dom, orth_complement(rel.a0))
        assert is_subset(rel.a0, orth_complement(rel.dom))
        picked = selection(rel)
        assert picked.is_single_valued()
        assert is_subset(picked.graph, rel.graph)
        if is_3star_relation(rel):
            assert is_paramonotone_relation(extend_by_domain_perp(rel))


def test_random_maximal_relations():
    rng = np.random.default_rng(9)
    for _ in range(50):
        rel = random_monotone_relation(rng, int(rng.integers(1, 6)), maximal=True, paramonotone=True)
        assert is_maximal_relation(rel)
        assert equals(orth_complement(rel.dom), rel.a0)
        assert is_paramonotone_relation(rel)
        assert is_3star_relation(rel)


@pytest.mark.parametrize("entry", operator_catalog(), ids=lambda e: e.name)
def test_graph_of_operator_classifies_like_operator(entry):
    op = entry.build()
    assert classify_relation(relation_from_operator(op)).code == classify(op).code


def test_image_pairing_ignores_representative():
    rng = np.random.default_rng(31)
    rels = [star_not_pm(), max_r2(), non_max()]
    rels += [random_monotone_relation(rng, int(rng.integers(2, 6)), maximal=False) for _ in range(20)]
    for rel in rels:
        for _ in range(10):
            x = rel.dom.basis @ rng.standard_normal(rel.dom.dim)
            y = rel.dom.basis @ rng.standard_normal(rel.dom.dim)
            image = image_of(rel, x)
            shifted = image.representative
            if rel.a0.dim:
                shifted = shifted + rel.a0.basis @ rng.standard_normal(rel.a0.dim)
            assert rel.contains_pair(x, shifted)
            assert float(y @ shifted) == pytest.approx(float(y @ image.representative), abs=1e-9)


@pytest.mark.parametrize(
    "rel",
    [max_r2(), identity_graph(), rotation_graph(math.pi / 2), rotation_graph(1.3), star_not_pm_extended()],
    ids=["max_r2", "identity", "rotation_half_pi", "rotation_1_3", "star_not_pm_extended"],
)
def test_maximal_relation_admits_no_outside_related_pair(rel):
    assert is_maximal_relation(rel)
    rng = np.random.default_rng(rel.ambient_dim)
    u = rng.standard_normal((1000, rel.ambient_dim))
    ustar = rng.standard_normal((1000, rel.ambient_dim))
    assert not any(rel.contains_pair(a, b) for a, b in zip(u, ustar))
    assert not np.any(related_form(rel).related(u, ustar, Tolerance()))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
