from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class Tolerance(BaseModel):
    """Numeric thresholds shared by every PSD, rank and membership decision."""

    model_config = ConfigDict(frozen=True)

    abs: float = Field(
        default=1e-9,
        gt=0,
        description="Absolute threshold for orthonormality and membership residuals",
    )
    eig_rel: float = Field(
        default=1e-9,
        gt=0,
        description="Eigenvalue cutoff, multiplied by max(1, max |entry|) of the matrix",
    )
    bisect_rel: float = Field(
        default=1e-10,
        gt=0,
        description="Relative bracket width at which α* bisection stops",
    )
    max_iter: int = Field(
        default=200,
        ge=1,
        description="Sweep budget for Jacobi and step budget for doubling/bisection",
    )
    sample_budget: int = Field(
        default=100_000,
        ge=1,
        description="Default trial count for the sampling oracle",
    )

    def scaled(self, magnitude: float) -> float:
        """Eigenvalue threshold for a matrix whose largest absolute entry is `magnitude`."""
        return self.eig_rel * max(1.0, magnitude)


def resolve_tolerance(tol: Tolerance | None) -> Tolerance:
    if tol is not None:
        return tol
    from monoclass.config import default_tolerance

    return default_tolerance()
