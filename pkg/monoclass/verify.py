from __future__ import annotations

import itertools
import logging
import math
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from monoclass.catalog import (
    alpha_decay_series,
    impossible_rules,
    operator_catalog,
    pattern_matches,
    random_matrix,
    random_monotone_2x2,
    random_monotone_matrix,
    random_monotone_relation,
    relation_catalog,
    rotation,
    rotation_chain,
    table_rows,
    zero_times_chain,
)
from monoclass.errors import ArgumentError
from monoclass.numerics import Tolerance, equals, is_subset, orth_complement, resolve_tolerance, sym_eigen
from monoclass.observability import observe_span
from monoclass.operators import (
    CLASS_ORDER,
    ClassCode,
    MatrixOperator,
    classify,
    is_3star,
    is_monotone,
    is_n_cyclic,
    is_paramonotone,
    is_strictly_monotone,
    is_symmetric,
    monotone_2x2_closed_form,
    necessary_3cm_2x2,
    paramonotone_2x2_closed_form,
)
from monoclass.oracle import probe_3star_growth, probe_extension, sample_cycle
from monoclass.products import class_and, product_op, product_relation
from monoclass.relations import (
    LinearRelation,
    classify_relation,
    extend_by_domain_perp,
    image_of,
    is_3star_relation,
    is_maximal_relation,
    is_monotone_relation,
    is_paramonotone_relation,
    related_form,
    relation_from_operator,
    selection,
)

logger = logging.getLogger(__name__)

SUITES = ("operators", "relations", "products", "catalog", "oracle", "rotation")
ROTATION_PROBE = 1e-4
BOUNDARY_SLACK = 1e-9
# Class codes only need to know whether α* is positive, not its digits.
CODE_BISECT_REL = 1e-4
SCALE_BAND = (0.1, 10.0)
RECONSTRUCTION_REL = 1e-6
# Random pairs tried per maximal relation for the no-related-pair check.
OUTSIDE_PAIRS = 1_000


class Failure(BaseModel):
    check: str
    case: Dict[str, Any] = Field(default_factory=dict)


class SuiteResult(BaseModel):
    suite: str
    passed: int = 0
    failed: int = 0
    failures: List[Failure] = Field(default_factory=list)

    def record(self, ok: bool, check: str, **case: Any) -> None:
        if ok:
            self.passed += 1
            return
        self.failed += 1
        self.failures.append(Failure(check=check, case=case))
        logger.warning("%s: %s failed for %s", self.suite, check, case)


class VerifyReport(BaseModel):
    seed: int
    budget: int
    suites: List[SuiteResult]

    @property
    def ok(self) -> bool:
        return all(result.failed == 0 for result in self.suites)

    def counts(self) -> Dict[str, Dict[str, int]]:
        return {r.suite: {"passed": r.passed, "failed": r.failed} for r in self.suites}


def _faulty_and(c1: ClassCode, c2: ClassCode) -> ClassCode:
    return ClassCode(**{name: a or b for name, a, b in zip(CLASS_ORDER, c1.flags(), c2.flags())})


def _code_tolerance(tol: Tolerance) -> Tolerance:
    return tol.model_copy(update={"bisect_rel": max(tol.bisect_rel, CODE_BISECT_REL)})


def _matrix_case(op: MatrixOperator) -> Dict[str, Any]:
    return {"matrix": op.to_lists()}


def operators_suite(seed: int, budget: int, tol: Tolerance, inject_fault: bool = False) -> SuiteResult:
    result = SuiteResult(suite="operators")
    rng = np.random.default_rng(seed)
    alpha_tol = _code_tolerance(tol)

    for _ in range(budget):
        op = random_monotone_matrix(rng, int(rng.integers(2, 7)))
        pm = is_paramonotone(op, tol)
        result.record(
            is_3star(op, alpha_tol) == pm,
            "3* ⟺ ker A₊ ⊆ ker A",
            **_matrix_case(op),
        )
        report = classify(op, alpha_tol)
        result.record(
            not report.code.closure_violations(full_domain=True),
            "no closure violation",
            code=report.code.render(),
            **_matrix_case(op),
        )
        factor = float(rng.uniform(*SCALE_BAND))
        scaled = classify(op.scaled(factor), alpha_tol).code
        result.record(
            scaled == report.code,
            "code invariant under λA, λ > 0",
            factor=factor,
            got=scaled.render(),
            **_matrix_case(op),
        )
        if is_n_cyclic(op, 4, tol).cyclic:
            result.record(report.code.cm3, "4-cyclic ⟹ 3-cyclic", **_matrix_case(op))

        sym = (op.matrix + op.matrix.T) / 2.0
        values, vectors = sym_eigen(sym, tol)
        residual = float(np.max(np.abs(vectors @ np.diag(values) @ vectors.T - sym)))
        result.record(
            residual <= RECONSTRUCTION_REL * max(1.0, float(np.max(np.abs(sym)))),
            "‖VΛVᵀ − A₊‖max small",
            residual=residual,
            **_matrix_case(op),
        )

        op2 = random_monotone_2x2(rng)
        result.record(
            is_paramonotone(op2, tol) == (is_strictly_monotone(op2, tol) or is_symmetric(op2, tol)),
            "R² paramonotone ⟺ strictly monotone or symmetric",
            **_matrix_case(op2),
        )
        result.record(
            is_paramonotone(op2, tol) == paramonotone_2x2_closed_form(op2, tol),
            "R² paramonotone closed form",
            **_matrix_case(op2),
        )

        generic = random_matrix(rng, 2)
        result.record(
            is_monotone(generic, tol) == monotone_2x2_closed_form(generic, tol),
            "R² monotone closed form",
            **_matrix_case(generic),
        )
        result.record(
            not is_n_cyclic(generic, 3, tol).cyclic or necessary_3cm_2x2(generic, tol),
            "3-cyclic monotone ⟹ max{|b|, |c|} ≤ a + d",
            **_matrix_case(generic),
        )
    return result


def _relation_case(rel: LinearRelation) -> Dict[str, Any]:
    return {"graph": rel.graph.to_lists(), "d": rel.ambient_dim}


def relations_suite(seed: int, budget: int, tol: Tolerance, inject_fault: bool = False) -> SuiteResult:
    result = SuiteResult(suite="relations")
    rng = np.random.default_rng(seed + 1)
    for _ in range(budget):
        rel = random_monotone_relation(rng, int(rng.integers(1, 6)), tol)
        case = _relation_case(rel)
        result.record(is_subset(rel.dom, orth_complement(rel.a0), tol), "dom A ⊂ A0⊥", **case)
        result.record(is_subset(rel.a0, orth_complement(rel.dom), tol), "A0 ⊂ (dom A)⊥", **case)

        picked = selection(rel, tol=tol)
        result.record(picked.is_single_valued(), "A0⊥ selection is single valued", **case)
        result.record(is_subset(picked.graph, rel.graph, tol), "selection graph ⊂ gra A", **case)

        if is_maximal_relation(rel, tol):
            result.record(equals(orth_complement(rel.dom), rel.a0, tol), "maximal ⟹ (dom A)⊥ = A0", **case)
            u = rng.standard_normal((OUTSIDE_PAIRS, rel.ambient_dim))
            ustar = rng.standard_normal((OUTSIDE_PAIRS, rel.ambient_dim))
            related = related_form(rel, tol).related(u, ustar, tol)
            outside = [
                i for i in np.flatnonzero(related) if not rel.contains_pair(u[i], ustar[i], tol)
            ]
            result.record(not outside, "maximal ⟹ no related pair outside gra A", count=len(outside), **case)

        x = rel.dom.basis @ rng.standard_normal(rel.dom.dim)
        y = rel.dom.basis @ rng.standard_normal(rel.dom.dim)
        representative = image_of(rel, x, tol).representative
        other = representative + rel.a0.basis @ rng.standard_normal(rel.a0.dim)
        drift = abs(float(y @ other) - float(y @ representative))
        bound = tol.abs * max(1.0, float(np.linalg.norm(y) * np.linalg.norm(other)))
        result.record(
            rel.contains_pair(x, other, tol) and drift <= bound,
            "⟨y, x*⟩ independent of x* ∈ Ax",
            **case,
        )
        if is_3star_relation(rel, tol):
            extended = extend_by_domain_perp(rel, tol)
            result.record(is_paramonotone_relation(extended, tol), "3* ⟹ A + (dom A)⊥ is PM", **case)
    return result


def products_suite(seed: int, budget: int, tol: Tolerance, inject_fault: bool = False) -> SuiteResult:
    result = SuiteResult(suite="products")
    combine: Callable[[ClassCode, ClassCode], ClassCode] = _faulty_and if inject_fault else class_and
    tol = _code_tolerance(tol)

    operators = [(entry.name, entry.build()) for entry in operator_catalog()]
    codes = {name: classify(op, tol).code for name, op in operators}
    for (name_a, a), (name_b, b) in itertools.product(operators, repeat=2):
        got = classify(product_op(a, b), tol).code
        expected = combine(codes[name_a], codes[name_b])
        result.record(got == expected, "AND law (operators)", a=name_a, b=name_b, got=got.render(), expected=expected.render())

    relations = [(entry.name, entry.build()) for entry in relation_catalog()]
    rel_codes = {name: classify_relation(rel, tol).code for name, rel in relations}
    for (name_a, a), (name_b, b) in itertools.product(relations, repeat=2):
        got = classify_relation(product_relation(a, b, tol), tol).code
        expected = combine(rel_codes[name_a], rel_codes[name_b])
        result.record(got == expected, "AND law (relations)", a=name_a, b=name_b, got=got.render(), expected=expected.render())

    worked = combine(ClassCode.parse("10111"), ClassCode.parse("11010"))
    result.record(worked.render() == "10010", "10111 AND 11010 = 10010", got=worked.render())
    return result


def catalog_suite(seed: int, budget: int, tol: Tolerance, inject_fault: bool = False) -> SuiteResult:
    result = SuiteResult(suite="catalog")
    for entry in operator_catalog():
        op = entry.build()
        code = classify(op, tol).code
        result.record(code == entry.expected_code, "catalog code", name=entry.name, got=code.render())
        as_graph = classify_relation(relation_from_operator(op, tol), tol).code
        result.record(as_graph == code, "graph of A classifies like A", name=entry.name, got=as_graph.render())
    for entry in relation_catalog():
        code = classify_relation(entry.build(), tol).code
        result.record(code == entry.expected_code, "catalog code", name=entry.name, got=code.render())

    for which in ("r2", "hilbert"):
        rules = impossible_rules(which)
        for row in table_rows(which, alpha_decay=1, tol=tol):
            if row.status != "exists":
                continue
            expected = next(e for e in operator_catalog() if e.name == row.example).expected_code
            result.record(row.code == expected.render(), "table row reproduced", table=which, example=row.example)
            clash = [rule.pattern for rule in rules if pattern_matches(rule.pattern, row.code)]
            result.record(not clash, "realised code avoids impossible rows", table=which, code=row.code, rules=clash)

    for construct in (rotation_chain, zero_times_chain):
        series = alpha_decay_series(5, construct, tol)
        for point in series:
            result.record(
                math.isclose(point.alpha_star, point.expected, rel_tol=1e-6),
                "α*(chain) = sin(1/N⁴)",
                n=point.n_blocks,
                got=point.alpha_star,
                expected=point.expected,
            )
        values = [p.alpha_star for p in series]
        result.record(all(a > b for a, b in zip(values, values[1:])), "α* strictly decreasing", values=values)

    chain = classify(rotation_chain(3), tol).code
    padded = classify(zero_times_chain(3), tol).code
    result.record(
        padded == class_and(ClassCode.parse("10111"), chain),
        "0 × chain = 10111 AND chain",
        got=padded.render(),
    )
    return result


def oracle_suite(seed: int, budget: int, tol: Tolerance, inject_fault: bool = False) -> SuiteResult:
    result = SuiteResult(suite="oracle")
    trials = max(budget, 1) * 50
    for entry in operator_catalog():
        op = entry.build()
        verdict = is_n_cyclic(op, 3, tol)
        if verdict.witness is not None:
            result.record(verdict.witness.recompute() < 0, "eigenvector witness sum < 0", name=entry.name)
        sampled = sample_cycle(op, 3, trials=trials, seed=seed, tol=tol)
        if sampled is not None:
            result.record(sampled.recompute() < 0, "sampled witness sum < 0", name=entry.name)
        result.record(
            (sampled is not None) == (not verdict.cyclic),
            "sample_cycle agrees with is_n_cyclic",
            name=entry.name,
            sampled=sampled is not None,
        )

    growth = probe_3star_growth(rotation(math.pi / 2), trials=trials, seed=seed, tol=tol)
    result.record(growth is not None, "growth witness for rotation by π/2")
    if growth is not None:
        values = growth.recompute()
        result.record(values[-1] > values[0], "growth witness grows on re-evaluation")
    result.record(
        probe_3star_growth(rotation(0.0), trials=trials, seed=seed, tol=tol) is None,
        "no growth for the identity",
    )

    for entry in relation_catalog():
        rel = entry.build()
        found = probe_extension(rel, trials=trials, seed=seed, tol=tol)
        maximal = is_maximal_relation(rel, tol)
        if maximal:
            result.record(found is None, "no extension of a maximal relation", name=entry.name)
        elif is_monotone_relation(rel, tol):
            result.record(found is not None, "extension of a non-maximal relation", name=entry.name)
    return result


def rotation_suite(seed: int, budget: int, tol: Tolerance, inject_fault: bool = False) -> SuiteResult:
    result = SuiteResult(suite="rotation")
    grid = np.linspace(0.0, math.pi / 2, 50)
    for n in range(2, 9):
        edge = math.pi / n
        for theta in (edge - ROTATION_PROBE, edge + ROTATION_PROBE, *grid):
            got = is_n_cyclic(rotation(theta), n, tol).cyclic
            # Grid points can land within an ulp of π/n; the boundary itself is cyclic.
            expected = theta <= edge + BOUNDARY_SLACK
            result.record(got == expected, "R_θ n-cyclic ⟺ θ ≤ π/n", n=n, theta=float(theta), got=got)
    return result


SUITE_RUNNERS: Dict[str, Callable[[int, int, Tolerance, bool], SuiteResult]] = {
    "operators": operators_suite,
    "relations": relations_suite,
    "products": products_suite,
    "catalog": catalog_suite,
    "oracle": oracle_suite,
    "rotation": rotation_suite,
}


@observe_span(name="verify")
def run_suites(
    seed: int = 0,
    budget: int = 200,
    suites: Optional[Sequence[str]] = None,
    inject_fault: bool = False,
    tol: Tolerance | None = None,
) -> VerifyReport:
    """
    Run the named verification suites (all by default). `inject_fault` swaps
    the AND law for OR in the products suite, which must then fail.
    """
    tol = resolve_tolerance(tol)
    names = list(suites) if suites else list(SUITES)
    unknown = [name for name in names if name not in SUITE_RUNNERS]
    if unknown:
        raise ArgumentError(f"Unknown suite(s): {', '.join(unknown)}; expected from {', '.join(SUITES)}")
    if budget < 0:
        raise ArgumentError(f"budget must be non-negative, got {budget}")

    results = []
    for name in names:
        suite = SUITE_RUNNERS[name](seed, budget, tol, inject_fault)
        logger.info("suite %s: %d passed, %d failed", name, suite.passed, suite.failed)
        results.append(suite)
    return VerifyReport(seed=seed, budget=budget, suites=results)
