from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, List

import numpy as np

from monoclass.errors import DimensionError, InvariantError, PreconditionError
from monoclass.numerics import (
    Tolerance,
    contains,
    equals,
    is_psd,
    kernel_basis,
    max_abs,
    min_eig_sym,
    orth_complement,
    resolve_tolerance,
    sym_eigen,
)
from monoclass.observability import observe_span
from monoclass.operators.classify import record_closure
from monoclass.operators.cyclic import (
    CyclicVerdict,
    cyclic_block_form,
    require_cycle_length,
    unstack_cycle,
)
from monoclass.operators.models import (
    ClassCode,
    ClassificationReport,
    CycleWitness,
    RelationSummary,
    cycle_sum,
)
from monoclass.relations.graph import LinearRelation

logger = logging.getLogger(__name__)

# Trials spent looking for an extension point when a relation is not maximal.
EXTENSION_PROBE_TRIALS = 2_000


def is_monotone_relation(rel: LinearRelation, tol: Tolerance | None = None) -> bool:
    """Differences of graph points are graph points, so monotone ⟺ B is PSD."""
    if rel.graph_dim == 0:
        return True
    return is_psd(rel.monotone_form().B, tol).psd


def _require_monotone(rel: LinearRelation, tol: Tolerance, operation: str) -> None:
    if not is_monotone_relation(rel, tol):
        raise PreconditionError(f"{operation} requires a monotone relation")


def _null_points(rel: LinearRelation, tol: Tolerance) -> List[tuple[np.ndarray, np.ndarray]]:
    """Graph points (y, y*) spanning the zero set of ⟨y, y*⟩ = cᵀBc."""
    if rel.graph_dim == 0:
        return []
    return [rel.point(c) for c in kernel_basis(rel.monotone_form().B, tol).vectors()]


def is_strict_relation(rel: LinearRelation, tol: Tolerance | None = None) -> bool:
    tol = resolve_tolerance(tol)
    _require_monotone(rel, tol, "is_strict_relation")
    return all(float(np.linalg.norm(y)) <= tol.abs for y, _ in _null_points(rel, tol))


def is_paramonotone_relation(rel: LinearRelation, tol: Tolerance | None = None) -> bool:
    """⟨y, y*⟩ = 0 must force Ay = A0, i.e. (y, 0) ∈ gra A."""
    tol = resolve_tolerance(tol)
    _require_monotone(rel, tol, "is_paramonotone_relation")
    zero = np.zeros(rel.ambient_dim)
    return all(rel.contains_pair(y, zero, tol) for y, _ in _null_points(rel, tol))


def is_3star_relation(rel: LinearRelation, tol: Tolerance | None = None) -> bool:
    """
    The supremum of ⟨z − y, y* − x*⟩ over the graph is a concave quadratic in the
    graph coefficient; it is bounded above exactly when its linear part vanishes
    on ker B, i.e. every null point (y, y*) has y* ⊥ dom A and y ⊥ ran A.
    """
    tol = resolve_tolerance(tol)
    _require_monotone(rel, tol, "is_3star_relation")
    dom_perp = orth_complement(rel.dom)
    ran_perp = orth_complement(rel.ran)
    return all(
        contains(dom_perp, ystar, tol) and contains(ran_perp, y, tol)
        for y, ystar in _null_points(rel, tol)
    )


def is_n_cyclic_relation(rel: LinearRelation, n: int, tol: Tolerance | None = None) -> CyclicVerdict:
    tol = resolve_tolerance(tol)
    if rel.graph_dim == 0:
        require_cycle_length(n)
        return CyclicVerdict(cyclic=True, min_eigenvalue=0.0)
    verdict = is_psd(cyclic_block_form(rel.monotone_form().cross, n), tol)
    if verdict.psd:
        return CyclicVerdict(cyclic=True, min_eigenvalue=verdict.min_eigenvalue)
    coefficients = unstack_cycle(verdict.witness, n)
    points = coefficients @ rel.X.T
    images = coefficients @ rel.Y.T
    return CyclicVerdict(
        cyclic=False,
        min_eigenvalue=verdict.min_eigenvalue,
        witness=CycleWitness(
            points=points.tolist(),
            images=images.tolist(),
            cycle_sum=cycle_sum(points, images),
        ),
    )


@dataclass(frozen=True)
class RelatedForm:
    """
    Pieces of inf_c ⟨u − Xc, u* − Yc⟩ that depend only on the relation: the
    graph halves, a basis of ker B and the pseudo-inverse B⁺. Candidates are
    evaluated row-wise, so one form serves a whole batch.
    """

    X: np.ndarray
    Y: np.ndarray
    null: np.ndarray
    pinv: np.ndarray

    def infimum(self, u: np.ndarray, ustar: np.ndarray, tol: Tolerance) -> np.ndarray:
        u = np.atleast_2d(np.asarray(u, dtype=float))
        ustar = np.atleast_2d(np.asarray(ustar, dtype=float))
        base = np.sum(u * ustar, axis=1)
        if self.X.shape[1] == 0:
            return base
        b = ustar @ self.X + u @ self.Y
        value = base - 0.25 * np.sum((b @ self.pinv) * b, axis=1)
        if self.null.shape[1] == 0:
            return value
        slack = tol.abs * np.maximum(1.0, np.linalg.norm(b, axis=1))
        unbounded = np.any(np.abs(b @ self.null) > slack[:, None], axis=1)
        return np.where(unbounded, -np.inf, value)

    def related(self, u: np.ndarray, ustar: np.ndarray, tol: Tolerance) -> np.ndarray:
        u = np.atleast_2d(np.asarray(u, dtype=float))
        ustar = np.atleast_2d(np.asarray(ustar, dtype=float))
        scale = np.maximum(1.0, np.linalg.norm(u, axis=1) * np.linalg.norm(ustar, axis=1))
        return self.infimum(u, ustar, tol) >= -tol.eig_rel * scale


def related_form(rel: LinearRelation, tol: Tolerance | None = None) -> RelatedForm:
    tol = resolve_tolerance(tol)
    _require_monotone(rel, tol, "monotonically_related")
    if rel.graph_dim == 0:
        empty = np.zeros((0, 0))
        return RelatedForm(X=rel.X, Y=rel.Y, null=empty, pinv=empty)
    B = rel.monotone_form().B
    cutoff = tol.scaled(max_abs(B))
    largest = float(np.max(np.abs(sym_eigen(B, tol).values)))
    return RelatedForm(
        X=rel.X,
        Y=rel.Y,
        null=kernel_basis(B, tol).basis,
        pinv=np.linalg.pinv(B, rcond=cutoff / max(largest, cutoff), hermitian=True),
    )


def _require_pair(rel: LinearRelation, u: Iterable[float], ustar: Iterable[float]) -> tuple[np.ndarray, np.ndarray]:
    u = np.asarray(u, dtype=float)
    ustar = np.asarray(ustar, dtype=float)
    if u.shape != (rel.ambient_dim,) or ustar.shape != (rel.ambient_dim,):
        raise DimensionError(
            f"Pair of shapes {u.shape}, {ustar.shape} does not fit R^{rel.ambient_dim}"
        )
    return u, ustar


def related_infimum(
    rel: LinearRelation,
    u: Iterable[float],
    ustar: Iterable[float],
    tol: Tolerance | None = None,
) -> float:
    """
    inf over graph coefficients c of ⟨u − Xc, u* − Yc⟩
      = ⟨u, u*⟩ − bᵀc + cᵀBc,  b = Xᵀu* + Yᵀu.

    −inf when b has a component along ker B, else ⟨u, u*⟩ − ¼bᵀB⁺b.
    """
    tol = resolve_tolerance(tol)
    u, ustar = _require_pair(rel, u, ustar)
    return float(related_form(rel, tol).infimum(u, ustar, tol)[0])


def monotonically_related(
    rel: LinearRelation,
    u: Iterable[float],
    ustar: Iterable[float],
    tol: Tolerance | None = None,
) -> bool:
    """(u, u*) can be added to the graph without breaking monotonicity."""
    tol = resolve_tolerance(tol)
    u, ustar = _require_pair(rel, u, ustar)
    return bool(related_form(rel, tol).related(u, ustar, tol)[0])


def is_maximal_relation(rel: LinearRelation, tol: Tolerance | None = None) -> bool:
    """
    Monotone with dim gra A = d. A positive verdict is checked against
    (dom A)⊥ = A0 and A0⊥ = dom A.
    """
    tol = resolve_tolerance(tol)
    if not is_monotone_relation(rel, tol):
        return False
    if rel.graph_dim != rel.ambient_dim:
        return False
    if not (equals(orth_complement(rel.dom), rel.a0, tol) and equals(orth_complement(rel.a0), rel.dom, tol)):
        raise InvariantError(
            "maximal verdict without (dom A)⊥ = A0; "
            f"dim dom={rel.dom.dim}, dim A0={rel.a0.dim}, d={rel.ambient_dim}"
        )
    return True


@observe_span(name="classify_relation")
def classify_relation(
    rel: LinearRelation,
    tol: Tolerance | None = None,
    *,
    probe_seed: int = 0,
) -> ClassificationReport:
    tol = resolve_tolerance(tol)
    notes: List[str] = []
    monotone = is_monotone_relation(rel, tol)
    form = rel.monotone_form()
    lam = min_eig_sym(form.B, tol) if rel.graph_dim else 0.0
    cyclic = is_n_cyclic_relation(rel, 3, tol)
    maximal = is_maximal_relation(rel, tol)
    null_points = _null_points(rel, tol)

    if monotone:
        code = ClassCode(
            pm=is_paramonotone_relation(rel, tol),
            sm=is_strict_relation(rel, tol),
            cm3=cyclic.cyclic,
            mm=maximal,
            star3=is_3star_relation(rel, tol),
        )
    else:
        notes.append(f"not monotone: monotone form has eigenvalue {lam:.12g} < 0")
        code = ClassCode.none()

    extension = None
    if monotone and not maximal:
        from monoclass.oracle import probe_extension

        found = probe_extension(rel, trials=EXTENSION_PROBE_TRIALS, seed=probe_seed, tol=tol)
        if found is not None:
            extension = found.pair
        else:
            notes.append("not maximal (dim gra A < d); no extension point sampled within budget")
    if not rel.is_single_valued():
        notes.append(f"multivalued: A0 has dimension {rel.a0.dim}")

    record_closure(code, notes, monotone=monotone)
    logger.info("classified relation on R^%d (graph dim %d) as %s", rel.ambient_dim, rel.graph_dim, code)

    return ClassificationReport(
        kind="relation",
        dim=rel.ambient_dim,
        code=code,
        monotone=monotone,
        lambda_min_sym=lam,
        ker_sym=[np.concatenate([y, ystar]).tolist() for y, ystar in null_points],
        ker_full=rel.ker.to_lists(),
        alpha_star=None,
        cycle_witness=cyclic.witness,
        relation=RelationSummary(
            ambient_dim=rel.ambient_dim,
            graph_dim=rel.graph_dim,
            dom_dim=rel.dom.dim,
            ran_dim=rel.ran.dim,
            a0_dim=rel.a0.dim,
            ker_dim=rel.ker.dim,
            maximal=maximal,
            extension_witness=extension,
        ),
        notes=notes,
    )
