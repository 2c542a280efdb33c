from __future__ import annotations

import math
from dataclasses import dataclass
from functools import partial
from typing import Callable, List, Union

import numpy as np
from scipy.linalg import block_diag

from monoclass.errors import ArgumentError
from monoclass.operators.matrix import MatrixOperator
from monoclass.operators.models import ClassCode
from monoclass.relations.graph import LinearRelation

Catalogued = Union[MatrixOperator, LinearRelation]


@dataclass(frozen=True)
class CatalogEntry:
    """A named example together with the class code it is known to have."""

    name: str
    construct: Callable[[], Catalogued]
    expected_code: ClassCode
    provenance: str

    def build(self) -> Catalogued:
        return self.construct()

    @property
    def kind(self) -> str:
        return "relation" if isinstance(self.build(), LinearRelation) else "operator"


def rotation(theta: float) -> MatrixOperator:
    """R_θ = [[cos θ, −sin θ], [sin θ, cos θ]]."""
    c, s = math.cos(theta), math.sin(theta)
    return MatrixOperator.from_rows([[c, -s], [s, c]])


def tilde_r() -> MatrixOperator:
    return MatrixOperator.from_rows([[1.0, -2.0], [3.0, 1.0]])


def coordinate_projection(d: int, k: int) -> MatrixOperator:
    """Keeps the first k coordinates of R^d and zeroes the rest."""
    if d < 1 or not 0 <= k <= d:
        raise ArgumentError(f"coordinate_projection needs d >= 1 and 0 <= k <= d, got d={d}, k={k}")
    return MatrixOperator(np.diag([1.0] * k + [0.0] * (d - k)))


def example_3x3() -> MatrixOperator:
    return MatrixOperator.from_rows([[1.0, -2.0, 1.0], [3.0, 1.0, 3.0], [1.0, -2.0, 1.0]])


def symmetric_pm_family(a: float, b: float) -> MatrixOperator:
    """[[a, b], [b, b²/a]]: symmetric, PSD and singular for every a > 0."""
    if a <= 0:
        raise ArgumentError(f"symmetric_pm_family needs a > 0, got {a}")
    return MatrixOperator.from_rows([[a, b], [b, b * b / a]])


def chain_angle(k: int) -> float:
    return math.pi / 2 - 1.0 / k**4


def rotation_chain(n_blocks: int) -> MatrixOperator:
    """Block diagonal of R_{θ_k}, θ_k = π/2 − 1/k⁴, k = 1..N."""
    if n_blocks < 1:
        raise ArgumentError(f"rotation_chain needs N >= 1, got {n_blocks}")
    blocks = [rotation(chain_angle(k)).matrix for k in range(1, n_blocks + 1)]
    return MatrixOperator(block_diag(*blocks))


def chain_alpha(n_blocks: int) -> float:
    """Closed form α*(rotation_chain(N)) = min_k cos θ_k = sin(1/N⁴)."""
    if n_blocks < 1:
        raise ArgumentError(f"rotation_chain needs N >= 1, got {n_blocks}")
    return math.sin(1.0 / n_blocks**4)


def zero(d: int = 2) -> MatrixOperator:
    return MatrixOperator(np.zeros((d, d)))


def identity(d: int = 2) -> MatrixOperator:
    return MatrixOperator(np.eye(d))


def zero_times_chain(n_blocks: int) -> MatrixOperator:
    """0₁ₓ₁ × rotation_chain(N): paramonotone but never strictly monotone."""
    return MatrixOperator(block_diag(np.zeros((1, 1)), rotation_chain(n_blocks).matrix))


def make_entry(name: str, construct: Callable[[], Catalogued], code: str, provenance: str) -> CatalogEntry:
    return CatalogEntry(name=name, construct=construct, expected_code=ClassCode.parse(code), provenance=provenance)


def operator_catalog() -> List[CatalogEntry]:
    return [
        make_entry("identity", identity, "11111", "identity: gradient of ½‖x‖², every class holds"),
        make_entry("zero", zero, "10111", "zero operator: PM and 3* trivially, nothing is strict"),
        make_entry(
            "rotation_half_pi",
            partial(rotation, math.pi / 2),
            "00010",
            "rotation by π/2: skew, monotone and maximal but in no other class",
        ),
        make_entry(
            "rotation_1_3",
            partial(rotation, 1.3),
            "11011",
            "rotation with π/3 < θ < π/2: strictly monotone, not 3-cyclic monotone",
        ),
        make_entry(
            "rotation_quarter_pi",
            partial(rotation, math.pi / 4),
            "11111",
            "rotation with θ ≤ π/3: n-cyclic monotone exactly for θ ≤ π/n",
        ),
        make_entry(
            "tilde_r",
            tilde_r,
            "11011",
            "[[1,-2],[3,1]]: strictly monotone, fails max{|b|,|c|} ≤ a + d",
        ),
        make_entry(
            "projection_2_1",
            partial(coordinate_projection, 2, 1),
            "10111",
            "A(x₁, x₂) = (x₁, 0): symmetric PSD, not strictly monotone",
        ),
        make_entry(
            "example_3x3",
            example_3x3,
            "10011",
            "rows (1,-2,1),(3,1,3),(1,-2,1): PM and 3* without SM or 3-cyclic monotonicity",
        ),
        make_entry(
            "symmetric_pm_1_1",
            partial(symmetric_pm_family, 1.0, 1.0),
            "10111",
            "[[1,1],[1,1]]: rank-one symmetric PSD",
        ),
        make_entry(
            "symmetric_pm_2_0.01",
            partial(symmetric_pm_family, 2.0, 0.01),
            "10111",
            "[[a,b],[b,b²/a]] with a=2, b=0.01: singular symmetric part by construction",
        ),
        make_entry(
            "rotation_chain_1",
            partial(rotation_chain, 1),
            "11111",
            "single block θ₁ = π/2 − 1 < π/3, so 3-cyclic monotone",
        ),
        make_entry(
            "rotation_chain_3",
            partial(rotation_chain, 3),
            "11011",
            "blocks θ_k = π/2 − 1/k⁴, k ≤ 3: strictly monotone, α* = sin(1/81)",
        ),
        make_entry(
            "zero_times_chain_3",
            partial(zero_times_chain, 3),
            "10011",
            "0 × rotation_chain(3): keeps PM and 3*, loses strict monotonicity",
        ),
    ]
