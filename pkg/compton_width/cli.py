#!/usr/bin/env python3
"""CLI for compton-width."""
from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from compton_width.boost import grid_profile
from compton_width.boost import MeasurementGrid
from compton_width.boost import run_contraction
from compton_width.boost import scalar_norms
from compton_width.checks import CheckLog
from compton_width.config import ExperimentConfig
from compton_width.config import load_config
from compton_width.constants import CheckCode
from compton_width.constants import ExitCodes
from compton_width.exception import ConvergenceError
from compton_width.exception import DomainError
from compton_width.exception import InvariantViolationError
from compton_width.exception import NormalizationError
from compton_width.exception import NumericalCheckError
from compton_width.exception import ValidityError
from compton_width.observables import nw_identity_check
from compton_width.observables import position_norm
from compton_width.observables import scalar_radial_width
from compton_width.quadrature import axisym_fourier3d
from compton_width.quadrature import radial_fourier3d
from compton_width.specfun import localized_scalar_shape
from compton_width.spreading import causality_scan
from compton_width.spreading import spreading_times
from compton_width.spreading import write_spreading_outputs
from compton_width.states import boost_amplitude
from compton_width.states import BoostParams
from compton_width.states import load_tabulated
from compton_width.states import make_gaussian
from compton_width.states import make_scalar_choice
from compton_width.states import Particle
from compton_width.states import phase_shifted
from compton_width.states import scalar_from_probability
from compton_width.transforms import nw_delta_closed_form
from compton_width.transforms import nw_delta_smeared
from compton_width.transforms import nw_localized_scalar
from compton_width.transforms import nw_tail_invariant
from compton_width.transforms import scalar_radial_profile
from compton_width.transforms import write_cylindrical_profile_csv
from compton_width.transforms import write_radial_profile_csv
from compton_width.utils import write_csv
from compton_width.utils import write_json

# pylint: disable=too-many-locals

RATIO_WINDOW = (0.5, 4.0)
TAIL_RADII = (6.0, 8.0, 10.0)
DELTA_CUTOFFS = (5.0, 10.0, 20.0, 40.0)


def _tolerance(config: ExperimentConfig, base: float) -> float:
    # looser quadrature targets loosen the checks accordingly
    return max(base, 10.0 * config.tol_rel)


def _finish(checks: CheckLog, out_dir: Path) -> int:
    write_json(out_dir / f"{checks.name}_checks.json", checks.to_dict())
    checks.check_status()
    return ExitCodes.SUCCESS


def _cmd_localize(config: ExperimentConfig, out_dir: Path) -> int:
    """Scalar profile of the localized state and the nascent-delta pairing."""
    checks = CheckLog("localize")
    particle, spec = config.particle, config.quadrature_spec()
    lambda_c = particle.lambda_c

    print(f"Evaluating the localized scalar profile up to r = {config.rmax} lambda_C")
    radii = np.linspace(config.rmax / config.grid_points, config.rmax, config.grid_points) * lambda_c
    rows, ratios = [], []
    for r in radii:
        value = nw_localized_scalar(particle, float(r), spec=spec).value.real
        shape = localized_scalar_shape(particle.mass, float(r))
        rows.append((r, value, value / shape))
        if RATIO_WINDOW[0] * lambda_c <= r <= RATIO_WINDOW[1] * lambda_c:
            ratios.append(value / shape)
    write_csv(out_dir / "nw_scalar_profile.csv", ["r", "value", "k_ratio"], rows)

    if not ratios:
        ratios = [row[2] for row in rows]
    mean_ratio = float(np.mean(ratios))
    checks.check(
        CheckCode.KERNEL_RATIO_CONSTANT,
        (max(ratios) - min(ratios)) / abs(mean_ratio),
        _tolerance(config, 1e-3),
        details=f"K-ratio spread over {len(ratios)} radii (mean {mean_ratio:.8g})",
    )

    tail = [
        nw_tail_invariant(
            particle, r * lambda_c, nw_localized_scalar(particle, r * lambda_c, spec=spec).value.real
        )
        for r in TAIL_RADII
    ]
    checks.check(
        CheckCode.KERNEL_EXPONENTIAL_TAIL,
        (max(tail) - min(tail)) / abs(float(np.mean(tail))),
        _tolerance(config, 1e-2),
        details="corrected value e^{mr} r^{7/4} over r = 6, 8, 10 lambda_C",
    )

    heavy = Particle(2.0 * particle.mass)
    scaling = (
        nw_localized_scalar(heavy, 0.5 * lambda_c, spec=spec).value.real
        / nw_localized_scalar(particle, lambda_c, spec=spec).value.real
    )
    checks.check(
        CheckCode.KERNEL_MASS_SCALING,
        scaling / 2.0**2.5 - 1.0,
        _tolerance(config, 1e-3),
        details=f"value(2m, r/2) / value(m, r) = {scaling:.8g}",
    )

    print("Evaluating the nascent-delta pairing")
    delta_rows = []
    for cutoff in DELTA_CUTOFFS:
        p_cut = cutoff / lambda_c
        smeared = nw_delta_smeared(lambda_c, p_cut, spec)
        delta_rows.append((p_cut, smeared, nw_delta_closed_form(lambda_c, p_cut), 1.0))
    write_csv(out_dir / "nw_delta_smeared.csv", ["P", "smeared", "closed_form", "g0"], delta_rows)
    checks.check(
        CheckCode.KERNEL_DELTA_PAIRING,
        delta_rows[-1][1] - 1.0,
        _tolerance(config, 1e-3),
        details=f"smeared value at P = {DELTA_CUTOFFS[-1]:g}/w",
    )
    return _finish(checks, out_dir)


def _cmd_boost(config: ExperimentConfig, out_dir: Path) -> int:
    """Lorentz contraction of the boosted Gaussian."""
    checks = CheckLog("boost")
    particle, spec = config.particle, config.quadrature_spec()
    print(f"Boosting sigma_p = {config.sigma_p:g} by beta0 = {config.beta0:g}")
    run = run_contraction(
        particle,
        config.sigma_p,
        config.beta0,
        spec,
        grid_points=config.grid_points,
        span_widths=config.span_widths,
        checks=checks,
    )
    report = run.report
    write_json(out_dir / "contraction_report.json", report.to_dict())
    write_cylindrical_profile_csv(
        out_dir / "boosted_exact_profile.csv", run.grid.x_perp, run.grid.x_par, run.exact
    )
    write_cylindrical_profile_csv(
        out_dir / "boosted_approx_profile.csv", run.grid.x_perp, run.grid.x_par, run.approx
    )

    checks.check(
        CheckCode.SHAPE_CONTRACTION,
        report.parallel_deviation,
        1e-2,
        details=f"measured {report.measured_parallel:.8g}, predicted {report.predicted_parallel:.8g}",
    )
    checks.check(
        CheckCode.SHAPE_PERPENDICULAR,
        report.perp_deviation,
        5e-3,
        details=f"measured {report.measured_perp:.8g}, sigma_x {report.sigma_x_unboosted:.8g}",
        fatal=False,
    )

    psi = make_gaussian(particle, config.sigma_p)
    boost = BoostParams.along(config.beta0)
    norm_grid = MeasurementGrid.gauss(report.sigma_x_unboosted, report.predicted_parallel)
    exact = grid_profile(psi, boost, norm_grid.x_perp, norm_grid.x_par, spec)
    checks.check(
        CheckCode.NORM_BOOST_UNITARY,
        norm_grid.integrate(np.abs(exact) ** 2) - 1.0,
        _tolerance(config, 1e-5),
        details="position-space norm of the boosted packet",
        fatal=False,
    )

    before, after = scalar_norms(psi, boost, spec)
    checks.add_message(
        CheckCode.NORM_SCALAR_NOT_CONSERVED,
        passed=run.gamma0 < 2.0 or abs(after / before - 1.0) > 0.1,
        fatal=False,
        details=f"scalar L2 norm ratio boosted/unboosted = {after / before:.8g} (gamma0 = {run.gamma0:.8g})",
    )
    write_json(
        out_dir / "boost_summary.json",
        {
            "gamma0": run.gamma0,
            "scalar_norm_unboosted": before,
            "scalar_norm_boosted": after,
        },
    )
    return _finish(checks, out_dir)


def _cmd_spread(config: ExperimentConfig, out_dir: Path) -> int:
    """Spreading velocities of Gaussians of several widths."""
    checks = CheckLog("spread")
    particle, spec = config.particle, config.quadrature_spec()
    sigma_p_list = [s * particle.mass for s in config.sigma_p_list]
    widest = 0.5 / min(sigma_p_list)
    times = spreading_times(widest, config.t_max_widths, config.grid_points)

    print(f"Scanning spreading of sigma_p = {config.sigma_p_list} (units of m)")
    reports = causality_scan(particle, sigma_p_list, times, spec)
    write_spreading_outputs(reports, out_dir)
    write_json(out_dir / "spreading_summary.json", {"reports": [r.to_dict() for r in reports]})

    for report in reports:
        checks.check(
            CheckCode.SPREAD_CAUSAL,
            max(report.max_v_sp - 1.0, 0.0),
            0.0,
            details=f"sigma_p = {report.sigma_p:g}: max v_sp = {report.max_v_sp:.12g}",
        )
        terminal = report.trajectory[-1].v_x
        expected = math.sqrt(report.moments.mean_beta_sq / 3.0)
        checks.check(
            CheckCode.SPREAD_ASYMPTOTIC_RATE,
            terminal - expected,
            1e-3,
            details=f"sigma_p = {report.sigma_p:g}: v_x = {terminal:.8g}, expected {expected:.8g}",
        )
    return _finish(checks, out_dir)


def _cmd_subminimal(config: ExperimentConfig, out_dir: Path) -> int:
    """Scalar amplitude narrower than the Compton wavelength."""
    checks = CheckLog("subminimal")
    particle, spec = config.particle, config.quadrature_spec()
    sigma_p = config.sigma_p
    predicted = 0.5 / sigma_p

    print(f"Building the scalar amplitude of sigma_p = {sigma_p:g}")
    phi = make_scalar_choice(particle, sigma_p, spec)
    measured, _ = scalar_radial_width(phi, predicted, spec)
    kg_norm = phi.kg_norm(spec)

    r = np.linspace(0.0, config.span_widths * predicted, config.grid_points)
    values, _ = scalar_radial_profile(phi, 0.0, r, spec)
    write_radial_profile_csv(out_dir / "scalar_profile.csv", r, values)

    subminimal = measured < particle.lambda_c
    write_json(
        out_dir / "subminimal.json",
        {
            "N": phi.norm_factor,
            "sigma_x_measured": measured,
            "lambda_c": particle.lambda_c,
            "sigma_x_over_lambda_c": measured / particle.lambda_c,
            "kg_norm": kg_norm,
            "subminimal": subminimal,
        },
    )

    checks.check(
        CheckCode.SHAPE_SUBMINIMAL_WIDTH,
        measured / predicted - 1.0,
        _tolerance(config, 1e-6),
        details=f"measured {measured:.12g}, 1/(2 sigma_p) = {predicted:.12g}",
    )
    checks.check(CheckCode.NORM_SCALAR_KG, kg_norm - 1.0, _tolerance(config, 1e-6))
    details = f"sigma_x / lambda_C = {measured / particle.lambda_c:.8g}"
    if sigma_p > 0.5 * particle.mass:
        checks.add_message(CheckCode.SHAPE_NOT_SUBMINIMAL, passed=subminimal, details=details)
    elif not subminimal:
        checks.warn(CheckCode.SHAPE_NOT_SUBMINIMAL, details=details)
    return _finish(checks, out_dir)


def _verify_tabulated(path: str, checks: CheckLog, config: ExperimentConfig) -> None:
    try:
        tabulated = load_tabulated(path, config.particle)
    except NormalizationError as exc:
        checks.add_message(
            CheckCode.NORM_MOMENTUM,
            passed=False,
            details=f"tabulated amplitude {path}: {exc}",
            value=exc.norm - 1.0,
        )
        return
    checks.check(
        CheckCode.NORM_MOMENTUM,
        tabulated.norm() - 1.0,
        _tolerance(config, 1e-6),
        details=f"tabulated amplitude {path}",
    )


def _cmd_verify(config: ExperimentConfig, out_dir: Path, tabulated: str | None = None) -> int:
    """Invariant suite: norms, unitarity, NW identity and the Fourier reductions."""
    checks = CheckLog("verify")
    particle, spec = config.particle, config.quadrature_spec()
    psi = make_gaussian(particle, config.sigma_p)
    tol_norm = _tolerance(config, 1e-6)

    print("Checking norms")
    checks.check(CheckCode.NORM_MOMENTUM, psi.norm(spec) - 1.0, tol_norm, details="Gaussian")
    for t in (0.0, 5.0 * particle.lambda_c):
        checks.check(
            CheckCode.NORM_POSITION,
            position_norm(psi, t, spec) - 1.0,
            tol_norm,
            details=f"t = {t:g}",
        )
    boosted = boost_amplitude(psi, BoostParams.along(config.beta0))
    checks.check(
        CheckCode.NORM_BOOST_UNITARY,
        boosted.norm(spec) - 1.0,
        _tolerance(config, 1e-5),
        details=f"momentum norm at beta0 = {config.beta0:g}",
    )
    checks.check(
        CheckCode.NORM_SCALAR_KG,
        make_scalar_choice(particle, config.sigma_p, spec).kg_norm(spec) - 1.0,
        tol_norm,
    )

    print("Checking the Newton-Wigner identity")
    shift = np.array([0.0, 0.0, 2.0 * psi.sigma_x])
    pairs = {
        "Gaussian": (psi, psi),
        "shifted Gaussian": (phase_shifted(psi, shift), phase_shifted(psi, shift)),
        "Gaussian / boosted": (psi, boosted),
    }
    for label, (psi1, psi2) in pairs.items():
        result = nw_identity_check(scalar_from_probability(psi1), scalar_from_probability(psi2), spec)
        checks.check(
            CheckCode.NORM_NW_IDENTITY,
            result.max_abs_diff / max(result.scale, 1e-300),
            _tolerance(config, 1e-8),
            details=label,
        )

    print("Checking the Fourier reductions")
    peak = float(np.abs(radial_fourier3d(lambda p: complex(psi.evaluate(np.array([0.0, 0.0, p]))), 0.0, spec).value))
    for x_perp, x_par in ((0.5, 0.5), (1.0, -0.3), (0.0, 1.5)):
        x_perp, x_par = x_perp * psi.sigma_x, x_par * psi.sigma_x
        radial = radial_fourier3d(
            lambda p: complex(psi.evaluate(np.array([0.0, 0.0, p]))),
            math.hypot(x_perp, x_par),
            spec,
            p_max=psi.window.radius,
        )
        axisym = axisym_fourier3d(psi.cylindrical, x_perp, x_par, spec, window=psi.window)
        checks.check(
            CheckCode.QUAD_AXISYM_RADIAL,
            abs(radial.value - axisym.value) / peak,
            _tolerance(config, 1e-8),
            details=f"(x_perp, x_par) = ({x_perp:g}, {x_par:g})",
        )

    if tabulated:
        _verify_tabulated(tabulated, checks, config)
    return _finish(checks, out_dir)


COMMANDS = {
    "localize": _cmd_localize,
    "boost": _cmd_boost,
    "spread": _cmd_spread,
    "subminimal": _cmd_subminimal,
}


def _load(args: argparse.Namespace) -> ExperimentConfig:
    config = load_config(args.config) if args.config else ExperimentConfig()
    return config.updated(
        mass=args.mass,
        sigma_p_over_m=args.sigma_p,
        beta0=args.beta0,
        output_dir=args.out,
        tol_rel=args.tol_rel,
        grid_points=args.grid_points,
        span_widths=args.span_widths,
        rmax=getattr(args, "rmax", None),
        t_max_widths=getattr(args, "t_max_widths", None),
    )


def _run(args: argparse.Namespace) -> int:
    """Run an experiment and map failures to exit codes."""
    try:
        config = _load(args)
        if args.command == "boost":
            # the validity ratio is undefined without a boost
            if config.beta0 == 0.0:
                raise ValidityError("boost needs beta0 > 0", validity_ratio=math.inf)
        out_dir = Path(config.output_dir)
        config.save(out_dir / "config.json")
        if args.command == "verify":
            return _cmd_verify(config, out_dir, args.tabulated)
        return COMMANDS[args.command](config, out_dir)
    except NumericalCheckError as exc:
        print(f"Numerical checks failed: {exc}", file=sys.stderr)
        return ExitCodes.CHECK_FAILED
    except (NormalizationError, InvariantViolationError) as exc:
        print(f"Invariant violated: {exc}", file=sys.stderr)
        return ExitCodes.CHECK_FAILED
    except ConvergenceError as exc:
        print(f"Quadrature did not converge: {exc}", file=sys.stderr)
        return ExitCodes.CONVERGENCE
    except (DomainError, ValidityError, FileNotFoundError) as exc:
        print(f"Usage error: {exc}", file=sys.stderr)
        return ExitCodes.USAGE


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON experiment configuration")
    parser.add_argument("--mass", type=float, help="Particle mass (default 1)")
    parser.add_argument(
        "--sigma-p", dest="sigma_p", type=float, help="Momentum width in units of the mass"
    )
    parser.add_argument("--beta0", type=float, help="Boost velocity in [0, 1)")
    parser.add_argument("--out", help="Output directory")
    parser.add_argument("--tol-rel", dest="tol_rel", type=float, help="Relative quadrature tolerance")
    parser.add_argument("--grid-points", dest="grid_points", type=int, help="Grid points per axis")
    parser.add_argument(
        "--span-widths", dest="span_widths", type=float, help="Grid span in predicted widths"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compton-width",
        description="Numerical experiments on the localization of relativistic "
        + "wavepackets (natural units hbar = c = 1)",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="<command>", required=True)

    # localize
    p_lo = subparsers.add_parser(
        "localize",
        help="Scalar profile of the localized state and the nascent-delta pairing",
        description="Scalar profile of the localized state and the nascent-delta pairing.",
    )
    _add_common_arguments(p_lo)
    p_lo.add_argument("--rmax", type=float, help="Largest radius in Compton wavelengths")

    # boost
    p_bo = subparsers.add_parser(
        "boost",
        help="Lorentz contraction of a boosted Gaussian",
        description="Exact and closed-form boosted profiles and their widths.",
    )
    _add_common_arguments(p_bo)

    # spread
    p_sp = subparsers.add_parser(
        "spread",
        help="Spreading velocities of Gaussian packets",
        description="Variance trajectories and the causality scan.",
    )
    _add_common_arguments(p_sp)
    p_sp.add_argument(
        "--t-max-widths", dest="t_max_widths", type=float, help="Time horizon in initial widths"
    )

    # subminimal
    p_su = subparsers.add_parser(
        "subminimal",
        help="Scalar amplitude narrower than the Compton wavelength",
        description="Scalar amplitude of arbitrary width and its measured width.",
    )
    _add_common_arguments(p_su)

    # verify
    p_ve = subparsers.add_parser(
        "verify",
        help="Run the invariant suite",
        description="Norms, boost unitarity, the Newton-Wigner identity and the Fourier reductions.",
    )
    _add_common_arguments(p_ve)
    p_ve.add_argument("--tabulated", help="Tabulated amplitude (p,re,im CSV) to check")

    parser.set_defaults(func=_run)
    return parser


def main(argv: list[str] | None = None) -> int:
    """Main entry point for the CLI."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    raise SystemExit(main())
