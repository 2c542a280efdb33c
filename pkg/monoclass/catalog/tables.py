from __future__ import annotations

import csv
import io
import logging
from typing import Callable, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from monoclass.catalog.operators import (
    CatalogEntry,
    chain_alpha,
    operator_catalog,
    rotation_chain,
    zero_times_chain,
)
from monoclass.errors import ArgumentError
from monoclass.numerics import Tolerance, resolve_tolerance
from monoclass.operators.classify import classify
from monoclass.operators.matrix import MatrixOperator, brezis_haraux_alpha
from monoclass.operators.models import CLASS_LABELS, CLASS_ORDER, UNBOUNDED, ClassCode

logger = logging.getLogger(__name__)

TABLE_IDS = ("r2", "hilbert")
FIGURE_SETTINGS = ("hilbert", "rn", "r2")

Status = Literal["exists", "impossible", "infinite-dimensional only"]


class ImpossibleRule(BaseModel):
    """A wildcard pattern over PM-SM-3CM-MM-3* that no monotone matrix can match."""

    pattern: str = Field(description="Five characters from {0, 1, *}")
    reason: str
    settings: List[str] = Field(description="Settings (r2, rn, hilbert) in which the rule applies")


IMPOSSIBLE_RULES: List[ImpossibleRule] = [
    ImpossibleRule(
        pattern="0**11",
        reason="3* linear operators are paramonotone",
        settings=["hilbert", "rn", "r2"],
    ),
    ImpossibleRule(
        pattern="**110",
        reason="3-cyclic monotone implies 3*-monotone",
        settings=["hilbert", "rn", "r2"],
    ),
    ImpossibleRule(
        pattern="0*11*",
        reason="maximal 3-cyclic monotone implies paramonotone",
        settings=["hilbert", "rn", "r2"],
    ),
    ImpossibleRule(
        pattern="01*1*",
        reason="strictly monotone implies paramonotone",
        settings=["hilbert", "rn", "r2"],
    ),
    ImpossibleRule(
        pattern="1**10",
        reason="paramonotone matrices are 3*-monotone",
        settings=["rn", "r2"],
    ),
    ImpossibleRule(
        pattern="1001*",
        reason="in R², paramonotone without strict monotonicity forces 3-cyclic monotonicity",
        settings=["r2"],
    ),
]


class AlphaDecayPoint(BaseModel):
    n_blocks: int
    alpha_star: float
    expected: float = Field(description="sin(1/N⁴)")


class TableRow(BaseModel):
    pattern: str
    status: Status
    example: Optional[str] = None
    code: Optional[str] = Field(default=None, description="Code computed live for the example")
    citation: str
    alpha_decay: List[AlphaDecayPoint] = Field(default_factory=list)

    def cells(self) -> List[str]:
        return list(self.pattern)


class Region(BaseModel):
    setting: str
    code: str
    status: Status
    witness: Optional[str] = None
    reason: Optional[str] = None


def pattern_matches(pattern: str, code: ClassCode | str) -> bool:
    rendered = code.render() if isinstance(code, ClassCode) else code
    return all(p == "*" or p == c for p, c in zip(pattern, rendered, strict=True))


def impossible_rules(setting: str) -> List[ImpossibleRule]:
    _require_setting(setting)
    return [rule for rule in IMPOSSIBLE_RULES if setting in rule.settings]


def _require_setting(setting: str) -> None:
    if setting not in FIGURE_SETTINGS:
        raise ArgumentError(f"Unknown setting {setting!r}; expected one of {', '.join(FIGURE_SETTINGS)}")


def alpha_decay_series(
    n_max: int,
    construct: Callable[[int], MatrixOperator] = rotation_chain,
    tol: Tolerance | None = None,
) -> List[AlphaDecayPoint]:
    """α* of construct(N) for N = 1..n_max next to the closed form sin(1/N⁴)."""
    if n_max < 1:
        raise ArgumentError(f"alpha decay needs at least one term, got {n_max}")
    tol = resolve_tolerance(tol)
    points = []
    for n in range(1, n_max + 1):
        alpha = brezis_haraux_alpha(construct(n), tol)
        value = float("inf") if alpha == UNBOUNDED else float(alpha)
        logger.debug("α*(N=%d) = %.12g", n, value)
        points.append(AlphaDecayPoint(n_blocks=n, alpha_star=value, expected=chain_alpha(n)))
    return points


def _entries_by_name() -> Dict[str, CatalogEntry]:
    return {entry.name: entry for entry in operator_catalog()}


def _existence_row(entry: CatalogEntry, citation: str, tol: Tolerance) -> TableRow:
    code = classify(entry.build(), tol).code.render()
    if code != entry.expected_code.render():
        logger.warning("%s classified as %s, catalog expects %s", entry.name, code, entry.expected_code)
    return TableRow(pattern=code, status="exists", example=entry.name, code=code, citation=citation)


def _impossible_rows(setting: str) -> List[TableRow]:
    return [
        TableRow(pattern=rule.pattern, status="impossible", citation=rule.reason)
        for rule in impossible_rules(setting)
    ]


def table_rows(which: str, *, alpha_decay: int = 5, tol: Tolerance | None = None) -> List[TableRow]:
    """
    Rows of the R² table ("r2") or the general table ("hilbert"), with existence
    rows classified live from the catalog. The two general-only rows are marked
    infinite-dimensional and carry the α* decay of their finite truncations.
    """
    if which not in TABLE_IDS:
        raise ArgumentError(f"Unknown table {which!r}; expected one of {', '.join(TABLE_IDS)}")
    tol = resolve_tolerance(tol)
    entries = _entries_by_name()

    rows = [_existence_row(entries["rotation_half_pi"], "rotation by π/2", tol)]
    if which == "r2":
        rows += _impossible_rows("r2")
        rows += [
            _existence_row(entries["projection_2_1"], "A(x₁, x₂) = (x₁, 0)", tol),
            _existence_row(entries["rotation_1_3"], "R_θ with π/3 < |θ| < π/2", tol),
            _existence_row(entries["identity"], "identity", tol),
        ]
        return rows

    rows += _impossible_rows("hilbert")
    rows += [
        TableRow(
            pattern="10010",
            status="infinite-dimensional only",
            example="zero_times_chain",
            citation="0 × (rotation chain): α* of the truncations decays to 0",
            alpha_decay=alpha_decay_series(alpha_decay, zero_times_chain, tol),
        ),
        _existence_row(entries["example_3x3"], "rows (1,-2,1),(3,1,3),(1,-2,1)", tol),
        _existence_row(entries["zero"], "zero operator", tol),
        TableRow(
            pattern="11010",
            status="infinite-dimensional only",
            example="rotation_chain",
            citation="rotation chain θ_k = π/2 − 1/k⁴: α* of the truncations decays to 0",
            alpha_decay=alpha_decay_series(alpha_decay, rotation_chain, tol),
        ),
        _existence_row(entries["rotation_1_3"], "R_θ with π/3 < |θ| < π/2", tol),
        _existence_row(entries["identity"], "identity", tol),
    ]
    return rows


def _witnesses(setting: str) -> Dict[str, str]:
    names = ["rotation_half_pi", "projection_2_1", "rotation_1_3", "identity"]
    if setting != "r2":
        names += ["example_3x3", "zero_times_chain_3", "rotation_chain_3"]
    witnesses: Dict[str, str] = {}
    for entry in operator_catalog():
        if entry.name in names:
            witnesses.setdefault(entry.expected_code.render(), entry.name)
    return witnesses


def membership_regions(setting: str) -> List[Region]:
    """
    Every code with MM = 1 (monotone linear operators with full domain are
    maximal), labelled as realised by a catalog example, ruled out by an
    implication, or realised only in infinite dimension.
    """
    _require_setting(setting)
    witnesses = _witnesses(setting)
    rules = impossible_rules(setting)
    regions = []
    for bits in range(16):
        pm, sm, cm3, star3 = ((bits >> shift) & 1 for shift in (3, 2, 1, 0))
        code = f"{pm}{sm}{cm3}1{star3}"
        if code in witnesses:
            regions.append(Region(setting=setting, code=code, status="exists", witness=witnesses[code]))
            continue
        if setting == "hilbert" and code in ("10010", "11010"):
            regions.append(
                Region(
                    setting=setting,
                    code=code,
                    status="infinite-dimensional only",
                    witness="zero_times_chain" if code == "10010" else "rotation_chain",
                )
            )
            continue
        rule = next((r for r in rules if pattern_matches(r.pattern, code)), None)
        if rule is None:
            logger.warning("region %s in %s is neither realised nor ruled out", code, setting)
            continue
        regions.append(Region(setting=setting, code=code, status="impossible", reason=rule.reason))
    return regions


def _header() -> List[str]:
    return [CLASS_LABELS[name] for name in CLASS_ORDER]


def rows_to_csv(rows: List[TableRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["example", *_header(), "status", "citation", "alpha_decay"])
    for row in rows:
        decay = ";".join(f"{p.n_blocks}:{p.alpha_star:.12g}" for p in row.alpha_decay)
        writer.writerow([row.example or "", *row.cells(), row.status, row.citation, decay])
    return buffer.getvalue()


def rows_to_markdown(rows: List[TableRow]) -> str:
    header = ["example", *_header(), "status", "citation"]
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    for row in rows:
        lines.append("| " + " | ".join([row.example or "", *row.cells(), row.status, row.citation]) + " |")
        for point in row.alpha_decay:
            lines.append(
                f"|  N={point.n_blocks} | α* = {point.alpha_star:.12g} | sin(1/N⁴) = {point.expected:.12g} |"
                + " |" * (len(header) - 3)
            )
    return "\n".join(lines) + "\n"


def rows_to_text(rows: List[TableRow]) -> str:
    lines = []
    for row in rows:
        mark = {"exists": "∃", "impossible": "∅", "infinite-dimensional only": "∞"}[row.status]
        lines.append(f"{' '.join(row.cells())}  {mark}  {row.example or '':<20} {row.citation}")
        for point in row.alpha_decay:
            lines.append(f"    N={point.n_blocks}: α* = {point.alpha_star:.12g}  (sin(1/N⁴) = {point.expected:.12g})")
    return "\n".join(lines) + "\n"


def regions_to_csv(regions: List[Region]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["setting", "code", *_header(), "status", "witness", "reason"])
    for region in regions:
        writer.writerow(
            [region.setting, region.code, *region.code, region.status, region.witness or "", region.reason or ""]
        )
    return buffer.getvalue()


def regions_to_dot(regions: List[Region]) -> str:
    """Graphviz text with one cluster per status and one node per region."""
    styles = {
        "exists": "filled,bold",
        "impossible": "dashed",
        "infinite-dimensional only": "dotted",
    }
    setting = regions[0].setting if regions else "empty"
    lines = [f'digraph "membership_{setting}" {{', "  node [shape=box];"]
    for index, status in enumerate(styles):
        members = [r for r in regions if r.status == status]
        if not members:
            continue
        lines.append(f"  subgraph cluster_{index} {{")
        lines.append(f'    label="{status}";')
        for region in members:
            detail = region.witness or region.reason or ""
            lines.append(
                f'    "{region.setting}_{region.code}" [label="{region.code}\\n{detail}", style="{styles[status]}"];'
            )
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
