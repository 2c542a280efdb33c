"""
Brute-force falsifiers for the class verdicts.

Each probe draws trials in fixed-size chunks. Chunk k is seeded from
SeedSequence(seed, spawn_key=(k,)), chunks run in waves of `workers` threads,
and the witness with the smallest global trial index wins, so the result does
not depend on the worker count or on scheduling.
"""

from __future__ import annotations

import asyncio
import logging
import math
from typing import Callable, List, Optional, Sequence, TypeVar, Union

import numpy as np
from pydantic import BaseModel, Field

from monoclass.config import worker_count
from monoclass.errors import ArgumentError, PreconditionError
from monoclass.numerics import Tolerance, resolve_tolerance
from monoclass.operators.cyclic import require_cycle_length
from monoclass.operators.matrix import MatrixOperator, is_monotone
from monoclass.operators.models import CycleWitness, cycle_sum
from monoclass.relations.classify import is_monotone_relation, related_form
from monoclass.relations.graph import LinearRelation

logger = logging.getLogger(__name__)

CHUNK_SIZE = 2_048
# Points are scaled by 2^k, k uniform in 0..MAX_SCALE_EXPONENT.
MAX_SCALE_EXPONENT = 10
GROWTH_FACTOR = 1e6
DEFAULT_SCALE_MAX = 2.0**40
EXTENSION_TRIALS = 10_000

Target = Union[MatrixOperator, LinearRelation]
W = TypeVar("W")


class SampledCycle(CycleWitness):
    trial: int = Field(description="Global trial index that produced the cycle")
    n: int


class GrowthWitness(BaseModel):
    """z ∈ dom, x* ∈ ran and a graph direction (y, y*) along which ⟨z − ty, ty* − x*⟩ grows."""

    trial: int
    z: List[float]
    xstar: List[float]
    y: List[float]
    ystar: List[float]
    scales: List[float]
    values: List[float]

    def recompute(self) -> List[float]:
        z, xstar = np.asarray(self.z), np.asarray(self.xstar)
        y, ystar = np.asarray(self.y), np.asarray(self.ystar)
        return [float((z - t * y) @ (t * ystar - xstar)) for t in self.scales]


class ExtensionWitness(BaseModel):
    """A pair (u, u*) outside the graph that is monotonically related to every graph point."""

    trial: int
    u: List[float]
    ustar: List[float]
    infimum: float = Field(description="inf over the graph of ⟨u − x, u* − x*⟩")

    @property
    def pair(self) -> List[float]:
        return self.u + self.ustar


def graph_halves(target: Target) -> tuple[np.ndarray, np.ndarray]:
    """(X, Y) with gra T = {(Xc, Yc)}; for a matrix, X = I and Y = A."""
    if isinstance(target, MatrixOperator):
        return np.eye(target.dim), np.asarray(target.matrix)
    return target.X, target.Y


def _require_monotone(target: Target, tol: Tolerance, operation: str) -> None:
    monotone = is_monotone(target, tol) if isinstance(target, MatrixOperator) else is_monotone_relation(target, tol)
    if not monotone:
        raise PreconditionError(f"{operation} requires a monotone input")


def chunk_rng(seed: int, chunk: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(chunk,)))


def _chunk_bounds(trials: int) -> List[tuple[int, int, int]]:
    return [
        (index, start, min(CHUNK_SIZE, trials - start))
        for index, start in enumerate(range(0, trials, CHUNK_SIZE))
    ]


async def _scan_waves(
    bounds: Sequence[tuple[int, int, int]],
    evaluate: Callable[[int, int, int], Optional[W]],
    workers: int,
) -> Optional[W]:
    for offset in range(0, len(bounds), workers):
        wave = bounds[offset:offset + workers]
        found = await asyncio.gather(*(asyncio.to_thread(evaluate, *chunk) for chunk in wave))
        for (index, start, _), witness in zip(wave, found):
            if witness is not None:
                logger.debug("witness in chunk %d (trials from %d)", index, start)
                return witness
    return None


def scan(
    trials: int,
    evaluate: Callable[[int, int, int], Optional[W]],
    workers: Optional[int] = None,
) -> Optional[W]:
    """
    Run evaluate(chunk_index, first_trial, size) over all chunks and return the
    witness of the lowest chunk that has one. `evaluate` must itself return the
    lowest-index witness within its chunk.
    """
    if trials < 0:
        raise ArgumentError(f"trial count must be non-negative, got {trials}")
    if trials == 0:
        return None
    workers = workers or worker_count()
    return asyncio.run(_scan_waves(_chunk_bounds(trials), evaluate, max(1, workers)))


def _scaled_normal(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    scale = 2.0 ** rng.integers(0, MAX_SCALE_EXPONENT + 1, size=shape[:-1] + (1,))
    return rng.standard_normal(shape) * scale


def sample_cycle(
    target: Target,
    n: int,
    trials: Optional[int] = None,
    seed: int = 0,
    tol: Tolerance | None = None,
    *,
    workers: Optional[int] = None,
) -> Optional[SampledCycle]:
    """
    Search for an n-cycle with Σ⟨x_i − x_{i+1}, x_i*⟩ < −tol.abs·max(1, Σ‖x_i‖‖x_i*‖).
    """
    require_cycle_length(n)
    tol = resolve_tolerance(tol)
    trials = tol.sample_budget if trials is None else trials
    X, Y = graph_halves(target)
    if X.shape[1] == 0:
        return None

    def evaluate(chunk: int, start: int, size: int) -> Optional[SampledCycle]:
        rng = chunk_rng(seed, chunk)
        coefficients = _scaled_normal(rng, (size, n, X.shape[1]))
        points = coefficients @ X.T
        images = coefficients @ Y.T
        following = np.roll(points, -1, axis=1)
        sums = np.sum((points - following) * images, axis=(1, 2))
        scale = np.sum(np.linalg.norm(points, axis=2) * np.linalg.norm(images, axis=2), axis=1)
        hits = np.flatnonzero(sums < -tol.abs * np.maximum(1.0, scale))
        if hits.size == 0:
            return None
        first = int(hits[0])
        return SampledCycle(
            trial=start + first,
            n=n,
            points=points[first].tolist(),
            images=images[first].tolist(),
            cycle_sum=cycle_sum(points[first], images[first]),
        )

    witness = scan(trials, evaluate, workers)
    logger.info("sample_cycle n=%d over %d trials: %s", n, trials, "witness" if witness else "none")
    return witness


def growth_scales(scale_max: float) -> np.ndarray:
    if scale_max < 1:
        raise ArgumentError(f"scale_max must be at least 1, got {scale_max}")
    return 2.0 ** np.arange(0, int(math.floor(math.log2(scale_max))) + 1)


def probe_3star_growth(
    target: Target,
    trials: Optional[int] = None,
    seed: int = 0,
    scale_max: float = DEFAULT_SCALE_MAX,
    tol: Tolerance | None = None,
    *,
    workers: Optional[int] = None,
) -> Optional[GrowthWitness]:
    """
    Look for z ∈ dom, x* ∈ ran and a graph direction (y, y*) with
    f(t) = ⟨z − ty, ty* − x*⟩ unbounded: reported when f(scale_max) exceeds
    GROWTH_FACTOR·(1 + |f(1)|) along t = 1, 2, 4, ….
    """
    tol = resolve_tolerance(tol)
    _require_monotone(target, tol, "probe_3star_growth")
    trials = tol.sample_budget if trials is None else trials
    scales = growth_scales(scale_max)
    X, Y = graph_halves(target)
    if X.shape[1] == 0:
        return None

    def evaluate(chunk: int, start: int, size: int) -> Optional[GrowthWitness]:
        rng = chunk_rng(seed, chunk)
        g = X.shape[1]
        z = rng.standard_normal((size, g)) @ X.T
        xstar = rng.standard_normal((size, g)) @ Y.T
        direction = rng.standard_normal((size, g))
        y, ystar = direction @ X.T, direction @ Y.T
        t = scales[None, :, None]
        values = np.sum(
            (z[:, None, :] - t * y[:, None, :]) * (t * ystar[:, None, :] - xstar[:, None, :]),
            axis=2,
        )
        grows = values[:, -1] > GROWTH_FACTOR * (1.0 + np.abs(values[:, 0]))
        hits = np.flatnonzero(grows)
        if hits.size == 0:
            return None
        first = int(hits[0])
        return GrowthWitness(
            trial=start + first,
            z=z[first].tolist(),
            xstar=xstar[first].tolist(),
            y=y[first].tolist(),
            ystar=ystar[first].tolist(),
            scales=scales.tolist(),
            values=values[first].tolist(),
        )

    return scan(trials, evaluate, workers)


def _extension_candidates(rng: np.random.Generator, start: int, size: int, width: int) -> np.ndarray:
    """Gaussian candidates at even trial indices, sparse {−1, 0, 1} ones at odd indices."""
    gaussian = rng.standard_normal((size, width))
    ternary = rng.choice([-1.0, 0.0, 0.0, 1.0], size=(size, width))
    odd = ((start + np.arange(size)) % 2 == 1)[:, None]
    return np.where(odd, ternary, gaussian)


def probe_extension(
    rel: LinearRelation,
    trials: int = EXTENSION_TRIALS,
    seed: int = 0,
    tol: Tolerance | None = None,
    *,
    workers: Optional[int] = None,
) -> Optional[ExtensionWitness]:
    """First sampled (u, u*) ∉ gra A that is monotonically related to gra A."""
    tol = resolve_tolerance(tol)
    form = related_form(rel, tol)
    d = rel.ambient_dim
    basis = rel.graph.basis

    def evaluate(chunk: int, start: int, size: int) -> Optional[ExtensionWitness]:
        rng = chunk_rng(seed, chunk)
        candidates = _extension_candidates(rng, start, size, 2 * d)
        residual = candidates - (candidates @ basis) @ basis.T
        outside = np.linalg.norm(residual, axis=1) > tol.abs * np.maximum(
            1.0, np.linalg.norm(candidates, axis=1)
        )
        u, ustar = candidates[:, :d], candidates[:, d:]
        hits = np.flatnonzero(outside & form.related(u, ustar, tol))
        if hits.size == 0:
            return None
        first = int(hits[0])
        return ExtensionWitness(
            trial=start + first,
            u=u[first].tolist(),
            ustar=ustar[first].tolist(),
            infimum=float(form.infimum(u[first], ustar[first], tol)[0]),
        )

    return scan(trials, evaluate, workers)
