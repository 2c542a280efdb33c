from __future__ import annotations

import logging

from monoclass.numerics import Tolerance, is_psd, kernel_basis, resolve_tolerance
from monoclass.observability import observe_span
from monoclass.operators.cyclic import is_n_cyclic
from monoclass.operators.matrix import (
    MatrixOperator,
    brezis_haraux_alpha,
    is_paramonotone,
    is_strictly_monotone,
    is_symmetric,
    star3_from_alpha,
    symmetric_part,
)
from monoclass.operators.models import ClassCode, ClassificationReport

logger = logging.getLogger(__name__)


def record_closure(code: ClassCode, notes: list[str], **context: bool) -> None:
    for issue in code.closure_violations(**context):
        logger.warning("Class code %s breaks closure: %s", code, issue)
        notes.append(f"closure violation: {issue}")


@observe_span(name="classify")
def classify(op: MatrixOperator, tol: Tolerance | None = None) -> ClassificationReport:
    """
    Run the five class tests on a matrix operator and collect certificates.

    Non-monotone input is reported, not rejected: every flag is false and the
    notes carry the negative direction of the symmetric part.
    """
    tol = resolve_tolerance(tol)
    sym = symmetric_part(op)
    monotone = is_psd(sym, tol)
    ker_sym = kernel_basis(sym, tol)
    ker_full = kernel_basis(op.matrix, tol)
    cyclic = is_n_cyclic(op, 3, tol)
    notes: list[str] = []

    if not monotone:
        direction = [round(float(x), 12) for x in monotone.witness]
        notes.append(
            f"not monotone: ⟨w, Aw⟩ = {monotone.min_eigenvalue:.12g} < 0 at w = {direction}"
        )
        code = ClassCode.none()
        alpha = None
    else:
        alpha = brezis_haraux_alpha(op, tol)
        code = ClassCode(
            pm=is_paramonotone(op, tol),
            sm=is_strictly_monotone(op, tol),
            cm3=cyclic.cyclic,
            mm=True,
            star3=star3_from_alpha(alpha),
        )
        if is_symmetric(op, tol):
            notes.append(
                "symmetric: gradient of the convex form ½⟨x, Ax⟩, hence n-cyclic monotone for every n"
            )
        if op.is_zero(tol):
            notes.append("zero operator: bounded range, every α satisfies ⟨x, Ax⟩ ≥ α‖Ax‖²")

    record_closure(code, notes, full_domain=True, monotone=monotone.psd)
    logger.info("classified %d×%d operator as %s", op.dim, op.dim, code)

    return ClassificationReport(
        kind="operator",
        dim=op.dim,
        code=code,
        monotone=monotone.psd,
        lambda_min_sym=monotone.min_eigenvalue,
        ker_sym=ker_sym.to_lists(),
        ker_full=ker_full.to_lists(),
        alpha_star=alpha,
        cycle_witness=cyclic.witness,
        notes=notes,
    )
