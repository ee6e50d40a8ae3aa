"""Implementations of the ``tangle`` subcommands."""

import sys
from argparse import Namespace
from collections.abc import Iterator
from pathlib import Path
from typing import Any, Optional

import numpy as np

from threetangle.ckw import ckw_report
from threetangle.convexroof import (
    CurveSet,
    RoofConfig,
    RoofEstimate,
    default_phase_step,
    estimate_family_roof,
    estimate_roof,
    iter_characteristic_curves,
    lower_convex_envelope,
)
from threetangle.families import (
    PUBLISHED_CONSTANTS,
    family_by_id,
    family_state,
    g_one,
    optimal_decomposition,
    p1_closed_form,
    rank4_vanishing_point,
    tangle_curve,
    tau3_family,
)
from threetangle.models import (
    DecompositionResult,
    MemberRecord,
    OptimizeResult,
    RunManifest,
    TraceSummary,
    complex_to_pairs,
)
from threetangle.qstate import (
    DensityMatrix,
    Ensemble,
    density_from_ensemble,
)
from threetangle.storage import STDOUT_TARGET, Cell, StorageManager
from threetangle.tangle import d_coefficients, three_tangle_pure
from threetangle.utils.exceptions import DimensionMismatchError, TangleError
from threetangle.utils.loaders import DensityMatrixLoader, PureStateLoader
from threetangle.utils.logger_m import logger

__all__ = [
    "MissingArgumentError",
    "MissingSeedError",
    "cmd_ckw",
    "cmd_constants",
    "cmd_curves",
    "cmd_decompose",
    "cmd_family_sweep",
    "cmd_optimize",
    "cmd_tangle_pure",
]

ENVELOPE_FILE = "envelope.csv"


class MissingArgumentError(TangleError):
    """A command was run without the arguments it needs."""


class MissingSeedError(MissingArgumentError):
    """A randomized command was run without ``--seed``."""


def _format_complex(value: complex) -> str:
    return f"{value.real:.12g}{value.imag:+.12g}j"


def _manifest(args: Namespace, seed: Optional[int] = None) -> RunManifest:
    parameters = {
        key: str(value) if isinstance(value, Path) else value
        for key, value in sorted(vars(args).items())
        if key not in ("command", "handler", "seed")
    }
    return RunManifest(command=args.command, parameters=parameters, seed=seed)


def _roof_config(args: Namespace) -> RoofConfig:
    if args.seed is None:
        raise MissingSeedError(f"tangle {args.command} needs --seed")
    options: dict[str, Any] = {
        "ensemble_size": args.ensemble_size,
        "restarts": args.restarts,
        "max_iters": args.iters,
        "seed": args.seed,
        "workers": args.workers,
    }
    return RoofConfig(
        **{key: value for key, value in options.items() if value is not None}
    )


def _member_records(ensemble: Ensemble) -> list[MemberRecord]:
    return [
        MemberRecord(
            weight=member.weight,
            amplitudes=complex_to_pairs(member.state.amplitudes),
            tau3=three_tangle_pure(member.state),
        )
        for member in ensemble.members
    ]


def _residual(ensemble: Ensemble, rho: DensityMatrix) -> float:
    reconstructed = density_from_ensemble(ensemble).entries
    return float(np.max(np.abs(reconstructed - rho.entries)))


def cmd_tangle_pure(args: Namespace, storage: StorageManager) -> int:
    psi = PureStateLoader().load(args.input)
    if psi.dim != 8:
        raise DimensionMismatchError(
            f"Expected a three-qubit state, got dimension {psi.dim}"
        )
    d1, d2, d3 = d_coefficients(psi)
    print(f"{three_tangle_pure(psi):.12f}")
    print(f"d1={_format_complex(d1)}")
    print(f"d2={_format_complex(d2)}")
    print(f"d3={_format_complex(d3)}")
    return 0


def cmd_family_sweep(args: Namespace, storage: StorageManager) -> int:
    family = family_by_id(args.family)
    curve = tangle_curve(family)
    grid = np.linspace(0.0, 1.0, args.grid)
    rows: list[list[Cell]] = [
        [
            float(x),
            float(curve(x)),
            curve.region(float(x)).value,
            float(g_one(family, float(x))),
            float(curve.g_two(x)),
        ]
        for x in grid
    ]
    storage.save_table(
        args.out, ("x", "tau3", "region", "gI", "gII"), rows, _manifest(args)
    )
    stream = sys.stderr if args.out == STDOUT_TARGET else sys.stdout
    print(f"x0={curve.x0:.12g}", file=stream)
    print(f"x1={curve.x1:.12g}", file=stream)
    xstar = "" if curve.xstar is None else f"{curve.xstar:.12g}"
    print(f"xstar={xstar}", file=stream)
    return 0


def _curve_rows(
    blocks: Iterator[CurveSet], minimum: list[np.ndarray]
) -> Iterator[list[Cell]]:
    """Long-format rows; keeps the running pointwise minimum in place."""
    for block in blocks:
        lowest = np.min(block.values, axis=0)
        if minimum:
            minimum[0] = np.minimum(minimum[0], lowest)
        else:
            minimum.append(lowest)
        for curve_id, phases, values in zip(
            block.curve_ids, block.phases, block.values
        ):
            head: list[Cell] = [int(curve_id), *(float(p) for p in phases)]
            for x, value in zip(block.x_grid, values):
                yield [*head, float(x), float(value)]


def cmd_curves(args: Namespace, storage: StorageManager) -> int:
    family = family_by_id(args.family)
    step = args.phase_step
    if step is None:
        step = default_phase_step(family)
    blocks = iter_characteristic_curves(family, step, args.grid, cap=args.cap)
    header = (
        "curve_id",
        *(f"phi{k + 1}" for k in range(family.phase_count)),
        "x",
        "tau3",
    )
    manifest = _manifest(args)
    minimum: list[np.ndarray] = []
    storage.save_table(args.out, header, _curve_rows(blocks, minimum), manifest)

    grid = np.linspace(0.0, 1.0, args.grid)
    envelope = lower_convex_envelope(zip(grid, minimum[0]))
    fitted = envelope(grid)
    analytic = np.array([tau3_family(family, float(x)) for x in grid])
    differences = np.abs(fitted - analytic)
    companion = storage.companion_path(args.out, ENVELOPE_FILE)
    storage.save_table(
        str(companion),
        ("x", "envelope", "analytic", "abs_diff"),
        (
            [float(x), float(e), float(a), float(d)]
            for x, e, a, d in zip(grid, fitted, analytic, differences)
        ),
        manifest,
    )
    logger.info(
        f"{family.name}: envelope of {len(envelope.vertices)} vertices, "
        f"max |envelope - analytic| = {float(np.max(differences)):.3e}"
    )
    return 0


def _optimize_target(
    args: Namespace, cfg: RoofConfig
) -> tuple[DensityMatrix, RoofEstimate, Optional[float]]:
    if args.family is None:
        if args.input is None:
            raise MissingArgumentError(
                "tangle optimize needs an input file or --family and --x"
            )
        rho = DensityMatrixLoader().load(args.input)
        return rho, estimate_roof(rho, cfg), None
    if args.input is not None or args.x is None:
        raise MissingArgumentError(
            "tangle optimize --family needs --x and no input file"
        )
    family = family_by_id(args.family)
    estimate, analytic = estimate_family_roof(family, args.x, cfg)
    return family_state(family, args.x), estimate, analytic


def cmd_optimize(args: Namespace, storage: StorageManager) -> int:
    cfg = _roof_config(args)
    rho, estimate, analytic = _optimize_target(args, cfg)
    best = estimate.traces[estimate.best_restart]
    result = OptimizeResult(
        value=estimate.value,
        objective=estimate.objective.value,
        ensemble_size=estimate.ensemble_size,
        reconstruction_residual=_residual(estimate.witness, rho),
        witness=_member_records(estimate.witness),
        trace=TraceSummary(
            restarts=len(estimate.traces),
            best_restart=estimate.best_restart,
            initial=best.initial,
            final=best.final,
            accepted=best.accepted,
            iterations=best.iterations,
            step_halvings=best.step_halvings,
            restart_finals=[trace.final for trace in estimate.traces],
        ),
        manifest=_manifest(args, seed=cfg.seed),
        family=args.family,
        x=args.x,
        tau3_family=analytic,
    )
    storage.save_document(args.out, result)
    return 0


def cmd_ckw(args: Namespace, storage: StorageManager) -> int:
    family = family_by_id(args.family)
    cfg: Optional[RoofConfig] = None
    if family.rank != 5 or args.cross_check:
        cfg = _roof_config(args)
    rows = ckw_report(family, args.grid, cfg=cfg, cross_check=args.cross_check)
    header: tuple[str, ...] = (
        "x",
        "one_tangle",
        "c2_sum",
        "tau3",
        "inequality_ok",
        "strong_ok",
    )
    if args.detailed:
        header += ("one_tangle_direct", "c2_ab", "c2_ac", "estimated")
    table: list[list[Cell]] = []
    for row in rows:
        cells: list[Cell] = [
            row.x,
            row.one_tangle_closed,
            row.c2_sum,
            row.tau3,
            row.inequality_ok,
            row.strong_ok,
        ]
        if args.detailed:
            cells += [
                row.one_tangle_direct,
                row.c2_ab,
                row.c2_ac,
                row.estimated,
            ]
        table.append(cells)
    seed = None if cfg is None else cfg.seed
    storage.save_table(args.out, header, table, _manifest(args, seed=seed))
    return 0


def cmd_decompose(args: Namespace, storage: StorageManager) -> int:
    family = family_by_id(args.family)
    ensemble = optimal_decomposition(family, args.x)
    records = _member_records(ensemble)
    average = float(sum(record.weight * record.tau3 for record in records))
    result = DecompositionResult(
        family=family.name,
        x=args.x,
        tau3=tau3_family(family, args.x),
        average_tangle=average,
        reconstruction_residual=_residual(
            ensemble, family_state(family, args.x)
        ),
        members=records,
        manifest=_manifest(args),
    )
    storage.save_document(args.out, result)
    return 0


def _constant_rows() -> Iterator[list[Cell]]:
    def row(
        family: str, name: str, computed: float, published: Optional[float]
    ) -> list[Cell]:
        difference = None if published is None else abs(computed - published)
        return [family, name, published, computed, difference]

    published = PUBLISHED_CONSTANTS
    yield row("rank4", "x0", rank4_vanishing_point(), published["rank4"]["x0"])
    for name in ("rank5", "rank6", "rank7", "rank8"):
        curve = tangle_curve(family_by_id(name))
        yield row(name, "x0", curve.x0, published[name]["x0"])
        yield row(name, "x1", curve.x1, published[name]["x1"])
        if curve.xstar is not None:
            yield row(name, "xstar", curve.xstar, published[name].get("xstar"))
    yield row("rank5", "p1", p1_closed_form(), published["rank5"]["x1"])


def cmd_constants(args: Namespace, storage: StorageManager) -> int:
    storage.save_table(
        args.out,
        ("family", "constant", "published", "computed", "abs_diff"),
        _constant_rows(),
        _manifest(args),
    )
    return 0
