from __future__ import annotations

from typing import List, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator

from monoclass.utils.formatting import round_floats

UNBOUNDED = "unbounded"

AlphaStar = Union[float, Literal["unbounded"]]

CLASS_ORDER = ("pm", "sm", "cm3", "mm", "star3")
CLASS_LABELS = {
    "pm": "PM",
    "sm": "SM",
    "cm3": "3CM",
    "mm": "MM",
    "star3": "3*",
}


class ClassCode(BaseModel):
    """Membership in the five monotone classes, rendered in the fixed order PM-SM-3CM-MM-3*."""

    model_config = ConfigDict(frozen=True)

    pm: bool = Field(description="Paramonotone")
    sm: bool = Field(description="Strictly monotone")
    cm3: bool = Field(description="3-cyclic monotone")
    mm: bool = Field(description="Maximal monotone")
    star3: bool = Field(description="3*-monotone (rectangular)")

    @classmethod
    def parse(cls, text: str) -> "ClassCode":
        bits = text.strip()
        if len(bits) != 5 or any(ch not in "01" for ch in bits):
            raise ValueError(f"Class code must be five 0/1 characters, got {text!r}")
        return cls(**{name: ch == "1" for name, ch in zip(CLASS_ORDER, bits)})

    @classmethod
    def none(cls) -> "ClassCode":
        return cls(pm=False, sm=False, cm3=False, mm=False, star3=False)

    def flags(self) -> List[bool]:
        return [getattr(self, name) for name in CLASS_ORDER]

    def render(self) -> str:
        return "".join("1" if flag else "0" for flag in self.flags())

    def __str__(self) -> str:
        return self.render()

    def __and__(self, other: "ClassCode") -> "ClassCode":
        return ClassCode(**{name: getattr(self, name) and getattr(other, name) for name in CLASS_ORDER})

    def closure_violations(self, *, full_domain: bool = False, monotone: bool = True) -> List[str]:
        """
        Implications every finite-dimensional monotone linear object satisfies.

        Returns one message per broken implication; an empty list means the code
        sits in a realisable region.
        """
        issues: List[str] = []
        if self.sm and not self.pm:
            issues.append("SM without PM (strictly monotone implies paramonotone)")
        if self.cm3 and not self.star3:
            issues.append("3CM without 3* (3-cyclic monotone implies 3*-monotone)")
        if self.cm3 and self.mm and not self.pm:
            issues.append("3CM and MM without PM (maximal 3-cyclic monotone implies paramonotone)")
        if full_domain and monotone and self.star3 != self.pm:
            issues.append("3* differs from PM (equivalent for monotone matrices)")
        if full_domain and monotone and not self.mm:
            issues.append("monotone with full domain but not MM (full-domain linear operators are maximal)")
        return issues


class CycleWitness(BaseModel):
    """An n-cycle of graph points whose cycle sum Σ⟨x_i − x_{i+1}, x_i*⟩ is negative."""

    points: List[List[float]] = Field(description="Cycle points x_1..x_n")
    images: List[List[float]] = Field(description="Chosen images x_1*..x_n*")
    cycle_sum: float = Field(description="Cycle sum evaluated at construction time")

    def recompute(self) -> float:
        return cycle_sum(np.asarray(self.points), np.asarray(self.images))


class RelationSummary(BaseModel):
    ambient_dim: int
    graph_dim: int
    dom_dim: int
    ran_dim: int
    a0_dim: int
    ker_dim: int
    maximal: bool
    extension_witness: Optional[List[float]] = Field(
        default=None,
        description="A point (u, u*) outside the graph monotonically related to it",
    )


class ClassificationReport(BaseModel):
    kind: Literal["operator", "relation"] = "operator"
    dim: int = Field(description="Ambient dimension d of the underlying space")
    code: ClassCode
    monotone: bool
    lambda_min_sym: float = Field(
        description="Smallest eigenvalue of the symmetric part (operators) or of the monotone form (relations)",
    )
    ker_sym: List[List[float]] = Field(
        default_factory=list,
        description="Basis of ker A₊ (operators) or graph points spanning the null set of the monotone form (relations)",
    )
    ker_full: List[List[float]] = Field(
        default_factory=list,
        description="Basis of ker A",
    )
    alpha_star: Optional[AlphaStar] = Field(
        default=None,
        description="Brézis–Haraux constant; 'unbounded' for the zero operator",
    )
    cycle_witness: Optional[CycleWitness] = None
    relation: Optional[RelationSummary] = None
    notes: List[str] = Field(default_factory=list)

    @field_validator("code", mode="before")
    @classmethod
    def _parse_code(cls, value):
        if isinstance(value, str):
            return ClassCode.parse(value)
        return value

    @field_serializer("code")
    def _render_code(self, code: ClassCode) -> str:
        return code.render()

    def rounded(self, digits: int = 12) -> "ClassificationReport":
        return ClassificationReport.model_validate(round_floats(self.model_dump(), digits))


def cycle_sum(points: np.ndarray, images: np.ndarray) -> float:
    """
    Σ_i ⟨x_i − x_{i+1}, x_i*⟩ with indices taken cyclically.

    `points` and `images` are (n, d) arrays; this is the direct evaluation, with
    no quadratic-form shortcut.
    """
    points = np.asarray(points, dtype=float)
    images = np.asarray(images, dtype=float)
    following = np.roll(points, -1, axis=0)
    return float(np.sum((points - following) * images))
