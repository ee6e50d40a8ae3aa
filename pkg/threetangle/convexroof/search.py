import sys
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from typing import Callable, NamedTuple, Optional

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator

from threetangle.config import get_settings
from threetangle.qstate.linalg import RANK_TOL, hermitian_eigensystem
from threetangle.qstate.states import DensityMatrix, Ensemble, PureState
from threetangle.tangle.invariants import unnormalized_three_tangle
from threetangle.utils.exceptions import (
    DimensionMismatchError,
    InfeasibleEnsembleError,
)
from threetangle.utils.logger_m import logger

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

__all__ = [
    "MAX_ENSEMBLE_SIZE",
    "RoofConfig",
    "RoofEstimate",
    "RoofObjective",
    "SearchTrace",
    "estimate_roof",
    "search_roof",
]

MAX_ENSEMBLE_SIZE = 24
SUPPORT_TOL = 1e-13
MIN_MEMBER_WEIGHT = 1e-15
DRAW_BLOCK = 512

ComplexRows = NDArray[np.complex128]


class RoofObjective(Enum):
    """Pure-state measure averaged over the decomposition."""

    THREE_TANGLE = "three_tangle"
    ONE_TANGLE = "one_tangle"


class RoofConfig(BaseModel):
    """
    Settings of the randomized convex-roof search.

    ``ensemble_size`` defaults to twice the rank of the state and
    ``workers`` to the configured process pool size.
    """

    model_config = ConfigDict(frozen=True)

    ensemble_size: Optional[int] = Field(default=None, ge=1)
    restarts: int = Field(default=32, ge=1)
    max_iters: int = Field(default=20_000, ge=1)
    step_init: float = Field(default=0.5, gt=0.0)
    step_min: float = Field(default=1e-4, gt=0.0)
    patience: int = Field(default=200, ge=1)
    decay: float = Field(default=0.5, gt=0.0, lt=1.0)
    seed: int = Field(default=0, ge=0, lt=2**64)
    workers: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def check_steps_and_size(self) -> Self:
        if self.step_min >= self.step_init:
            raise ValueError(
                f"step_min ({self.step_min}) must be below step_init "
                f"({self.step_init})"
            )
        if (
            self.ensemble_size is not None
            and self.ensemble_size > MAX_ENSEMBLE_SIZE
        ):
            raise InfeasibleEnsembleError(
                f"Ensemble size {self.ensemble_size} exceeds the supported "
                f"maximum of {MAX_ENSEMBLE_SIZE}"
            )
        return self

    def resolved_workers(self) -> int:
        if self.workers is not None:
            return self.workers
        return get_settings().workers


class SearchTrace(BaseModel):
    """Record of one restart; ``history`` holds every accepted objective."""

    model_config = ConfigDict(frozen=True)

    restart: int
    initial: float
    final: float
    accepted: int
    iterations: int
    step_halvings: int
    history: tuple[float, ...]


class RoofEstimate(BaseModel):
    """
    Best decomposition found by :func:`estimate_roof`.

    Attributes:
        value: Smallest ensemble average found (an upper bound on the roof).
        witness: Ensemble reaching ``value``.
        best_restart: Index of the restart that produced the witness.
        traces: One trace per restart, ordered by restart index.
    """

    model_config = ConfigDict(frozen=True)

    objective: RoofObjective
    value: float
    witness: Ensemble
    ensemble_size: int
    best_restart: int
    traces: tuple[SearchTrace, ...]


def _three_tangle_costs(rows: ComplexRows) -> NDArray[np.float64]:
    norms = np.einsum("ij,ij->i", rows, rows.conj()).real
    tangles = unnormalized_three_tangle(rows)
    return np.divide(
        tangles,
        norms,
        out=np.zeros_like(norms),
        where=norms > MIN_MEMBER_WEIGHT,
    )


def _one_tangle_costs(rows: ComplexRows) -> NDArray[np.float64]:
    norms = np.einsum("ij,ij->i", rows, rows.conj()).real
    blocks = rows.reshape(-1, 2, 4)
    gram = blocks @ blocks.conj().transpose(0, 2, 1)
    det = (gram[:, 0, 0] * gram[:, 1, 1]).real - np.abs(gram[:, 0, 1]) ** 2
    costs = np.divide(
        4.0 * det,
        norms,
        out=np.zeros_like(norms),
        where=norms > MIN_MEMBER_WEIGHT,
    )
    return np.clip(costs, 0.0, None)


_COSTS: dict[RoofObjective, Callable[[ComplexRows], NDArray[np.float64]]] = {
    RoofObjective.THREE_TANGLE: _three_tangle_costs,
    RoofObjective.ONE_TANGLE: _one_tangle_costs,
}


def _haar_isometry(
    rng: np.random.Generator, rows: int, columns: int
) -> ComplexRows:
    gaussian = rng.standard_normal((rows, columns)) + 1j * rng.standard_normal(
        (rows, columns)
    )
    q, r = np.linalg.qr(gaussian)
    diagonal = np.diag(r)
    return np.asarray(q * (diagonal / np.abs(diagonal)), dtype=np.complex128)


def _scaled_eigenvectors(
    rho: DensityMatrix, ensemble_size: Optional[int]
) -> tuple[ComplexRows, int]:
    """Rows ``sqrt(lambda_k) e_k`` spanning the support of ``rho``."""
    values, vectors = hermitian_eigensystem(rho.entries)
    rank = int(np.count_nonzero(values > RANK_TOL))
    size = 2 * rank if ensemble_size is None else ensemble_size
    if size > MAX_ENSEMBLE_SIZE:
        raise InfeasibleEnsembleError(
            f"Ensemble size {size} exceeds the supported maximum of "
            f"{MAX_ENSEMBLE_SIZE}"
        )
    if size < rank:
        raise InfeasibleEnsembleError(
            f"Ensemble size {size} is below the rank {rank} of the state"
        )
    support = int(np.count_nonzero(values > SUPPORT_TOL))
    if support > size:
        dropped = float(np.sum(values[size:support]))
        logger.warning(
            f"Ensemble size {size} cannot span all {support} eigenvectors "
            f"above {SUPPORT_TOL:g}; dropping trace weight {dropped:.3g}"
        )
        support = size
    scaled = np.sqrt(values[:support])[:, np.newaxis] * vectors[:, :support].T
    return np.asarray(scaled, dtype=np.complex128), size


class _Draws(NamedTuple):
    """One block of random moves, shaped ``(block, restarts)``."""

    firsts: NDArray[np.int64]
    offsets: NDArray[np.int64]
    angles: NDArray[np.float64]
    phases: NDArray[np.float64]


def _draw_block(
    rngs: Sequence[np.random.Generator],
    active: NDArray[np.bool_],
    size: int,
    block: int,
) -> _Draws:
    shape = (block, len(rngs))
    draws = _Draws(
        np.zeros(shape, dtype=np.int64),
        np.ones(shape, dtype=np.int64),
        np.zeros(shape),
        np.zeros(shape),
    )
    # finished restarts stop consuming their streams
    for n in np.flatnonzero(active):
        rng = rngs[n]
        draws.firsts[:, n] = rng.integers(0, size, block)
        draws.offsets[:, n] = rng.integers(1, size, block)
        draws.angles[:, n] = rng.uniform(-1.0, 1.0, block)
        draws.phases[:, n] = rng.uniform(0.0, 2.0 * np.pi, block)
    return draws


def _run_restarts(
    scaled: ComplexRows,
    size: int,
    objective: RoofObjective,
    cfg: RoofConfig,
    restarts: Sequence[int],
) -> list[tuple[SearchTrace, ComplexRows]]:
    """
    Runs a batch of restarts in lockstep.

    Restart ``r`` only reads ``default_rng([seed, r])`` and every array
    operation is row-wise, so a restart ends in the same place whatever
    batch it runs in.
    """
    count = len(restarts)
    rngs = [np.random.default_rng([cfg.seed, r]) for r in restarts]
    costs_of = _COSTS[objective]
    members = np.stack(
        [_haar_isometry(rng, size, scaled.shape[0]) @ scaled for rng in rngs]
    )
    costs = costs_of(members.reshape(-1, scaled.shape[1])).reshape(count, size)
    current = np.sum(costs, axis=1)
    histories = [[float(value)] for value in current]
    steps = np.full(count, cfg.step_init)
    rejections = np.zeros(count, dtype=np.int64)
    halvings = np.zeros(count, dtype=np.int64)
    accepted = np.zeros(count, dtype=np.int64)
    iterations = np.zeros(count, dtype=np.int64)
    active = np.full(count, size > 1)
    rows = np.arange(count)
    iteration = 0
    while iteration < cfg.max_iters and np.any(active):
        block = min(DRAW_BLOCK, cfg.max_iters - iteration)
        draws = _draw_block(rngs, active, size, block)
        for k in range(block):
            if not np.any(active):
                break
            iteration += 1
            iterations += active
            i = draws.firsts[k]
            j = (i + draws.offsets[k]) % size
            theta = steps * draws.angles[k]
            c = np.cos(theta)[:, np.newaxis]
            s = np.sin(theta)[:, np.newaxis]
            mixer = np.exp(1j * draws.phases[k])[:, np.newaxis]
            first, second = members[rows, i], members[rows, j]
            new_first = c * first - mixer * s * second
            new_second = np.conj(mixer) * s * first + c * second
            pair_costs = costs_of(np.concatenate([new_first, new_second]))
            trial = costs.copy()
            trial[rows, i] = pair_costs[:count]
            trial[rows, j] = pair_costs[count:]
            candidates = np.sum(trial, axis=1)
            accept = active & (candidates < current)
            if np.any(accept):
                members[rows[accept], i[accept]] = new_first[accept]
                members[rows[accept], j[accept]] = new_second[accept]
                costs[accept] = trial[accept]
                current[accept] = candidates[accept]
                for n in np.flatnonzero(accept):
                    histories[n].append(float(current[n]))
                accepted += accept
                rejections[accept] = 0
            rejected = active & ~accept
            rejections += rejected
            decayed = rejections >= cfg.patience
            if np.any(decayed):
                steps[decayed] *= cfg.decay
                halvings += decayed
                rejections[decayed] = 0
                active &= steps >= cfg.step_min
    results: list[tuple[SearchTrace, ComplexRows]] = []
    for n, restart in enumerate(restarts):
        final = float(current[n])
        logger.debug(
            f"Restart {restart}: {histories[n][0]:.6g} -> {final:.6g} after "
            f"{iterations[n]} iterations ({accepted[n]} accepted, "
            f"{halvings[n]} halvings)"
        )
        trace = SearchTrace(
            restart=restart,
            initial=histories[n][0],
            final=final,
            accepted=int(accepted[n]),
            iterations=int(iterations[n]),
            step_halvings=int(halvings[n]),
            history=tuple(histories[n]),
        )
        results.append((trace, members[n]))
    return results


def _witness(members: ComplexRows) -> Ensemble:
    weights = np.einsum("ij,ij->i", members, members.conj()).real
    keep = weights > MIN_MEMBER_WEIGHT
    total = float(np.sum(weights[keep]))
    return Ensemble.from_pairs(
        (
            float(weight / total),
            PureState.normalized(member),
        )
        for weight, member in zip(weights[keep], members[keep])
    )


def search_roof(
    rho: DensityMatrix,
    cfg: RoofConfig,
    objective: RoofObjective,
) -> RoofEstimate:
    """
    Minimizes an ensemble average of ``objective`` over decompositions of
    ``rho``.

    Every size-``m`` decomposition is ``U A`` with ``A`` the rows
    ``sqrt(lambda_k) e_k`` and ``U`` an ``m x n`` isometry; members stay
    unnormalized and the degree-4 homogeneous cost divided by the squared
    norm gives ``p_i f(psi_i)``. Restart ``r`` draws from
    ``default_rng([seed, r])`` and the result is the lexicographic minimum
    of ``(value, r)``, independent of the number of workers.

    Raises:
        DimensionMismatchError: If ``rho`` is not a three-qubit state.
        InfeasibleEnsembleError: If the ensemble size is below the rank of
            ``rho`` or above the supported maximum.
    """
    if rho.dim != 8:
        raise DimensionMismatchError(
            f"Convex-roof search needs a three-qubit state, got dimension "
            f"{rho.dim}"
        )
    scaled, size = _scaled_eigenvectors(rho, cfg.ensemble_size)
    workers = cfg.resolved_workers()
    logger.debug(
        f"Searching {objective.value} roof: m={size}, rank "
        f"{scaled.shape[0]}, {cfg.restarts} restarts, {workers} workers"
    )
    restarts = list(range(cfg.restarts))
    results: list[tuple[SearchTrace, ComplexRows]] = []
    if workers > 1 and cfg.restarts > 1:
        batches = [
            [int(r) for r in batch]
            for batch in np.array_split(restarts, min(workers, cfg.restarts))
        ]
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for batch_results in executor.map(
                _run_restarts,
                [scaled] * len(batches),
                [size] * len(batches),
                [objective] * len(batches),
                [cfg] * len(batches),
                batches,
            ):
                results.extend(batch_results)
    else:
        results = _run_restarts(scaled, size, objective, cfg, restarts)
    best = min(range(len(results)), key=lambda r: (results[r][0].final, r))
    best_trace, best_members = results[best]
    return RoofEstimate(
        objective=objective,
        value=best_trace.final,
        witness=_witness(best_members),
        ensemble_size=size,
        best_restart=best,
        traces=tuple(trace for trace, _ in results),
    )


def estimate_roof(rho: DensityMatrix, cfg: RoofConfig) -> RoofEstimate:
    """Upper bound on the three-tangle convex roof of ``rho``."""
    return search_roof(rho, cfg, RoofObjective.THREE_TANGLE)
