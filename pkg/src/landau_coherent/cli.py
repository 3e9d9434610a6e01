"""Command line front end.

Every subcommand prints CSV to stdout (RFC-style quoting, one header row)
or, with --json, one JSON object per line.  Exit codes: 0 on success, 2 on
bad usage, 3 when a series fails to converge under the requested settings.
Output for fixed inputs is byte-identical across runs.
"""
from __future__ import annotations

import csv
import functools
import json
import math
import sys

import click
import numpy as np

from . import circle as circle_mod
from . import comparison, fock, magnetic
from .errors import NumericalError
from .series import SeriesConfig

_ALGEBRA_THRESHOLD = 1e-10


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def _emit(headers: list[str], rows: list[list], json_mode: bool) -> None:
    if json_mode:
        for row in rows:
            click.echo(json.dumps(dict(zip(headers, row))))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(headers)
        for row in rows:
            writer.writerow([_cell(v) for v in row])


def _output_option(fn):
    return click.option("--json", "json_mode", is_flag=True,
                        help="Emit JSON Lines instead of CSV.")(fn)


def _series_options(fn):
    fn = click.option(
        "--max-terms", type=click.IntRange(min=1), default=10_000,
        show_default=True, help="Series term cap before giving up.")(fn)
    fn = click.option(
        "--tol", type=click.FloatRange(min=0.0, max=1.0, min_open=True, max_open=True),
        default=1e-14, show_default=True, envvar="LC_TOL",
        help="Relative series truncation tolerance (env: LC_TOL).")(fn)
    return fn


def _params_options(fn):
    fn = click.option(
        "--omega", type=click.FloatRange(min=0.0, min_open=True), default=1.0,
        show_default=True, help="Cyclotron frequency.")(fn)
    fn = click.option(
        "--mu-omega", type=click.FloatRange(min=0.0, min_open=True), default=1.0,
        show_default=True, help="Mass times cyclotron frequency.")(fn)
    return fn


def _trap_numerical(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except NumericalError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)
    return wrapper


def _check_grid(l_min: float, l_max: float) -> None:
    if not l_min < l_max:
        raise click.UsageError(f"--l-min must be below --l-max, got [{l_min}, {l_max}]")


@click.group()
def main():
    """Coherent states of a charged particle in a uniform magnetic field."""


@main.command()
@click.option("--l", type=float, default=None,
              help="Evaluate a single radial label instead of sweeping.")
@click.option("--l-min", type=float, default=-5.0, show_default=True,
              help="Lower end of the label grid.")
@click.option("--l-max", type=float, default=5.0, show_default=True,
              help="Upper end of the label grid.")
@click.option("--steps", type=click.IntRange(min=2), default=101, show_default=True,
              help="Number of grid points, endpoints included.")
@click.option("--phi", type=float, default=0.0, show_default=True,
              help="Angular label.")
@_series_options
@_output_option
@_trap_numerical
def circle(l, l_min, l_max, steps, phi, tol, max_terms, json_mode):
    """Expectations of the integer-lattice (circle) coherent states.

    Sweeps the radial label and prints the mean lattice index alongside the
    mean of the unit-shift operator, absolute and vacuum-normalized.  With
    --l, prints the single requested label and ignores the sweep flags.
    """
    if l is None:
        _check_grid(l_min, l_max)
        grid = np.linspace(l_min, l_max, steps)
    else:
        grid = [l]
    cfg = SeriesConfig(rel_tol=tol, max_terms=max_terms)
    rows = []
    for l in grid:
        p = circle_mod.CirclePoint(float(l), phi)
        j = circle_mod.j_expectation(p, cfg)
        u = circle_mod.u_expectation(p, cfg)
        ur = circle_mod.u_relative_expectation(p, cfg)
        rows.append([float(l), p.phi, j, u.real, u.imag, ur.real, ur.imag])
    _emit(["l", "phi", "j_exp", "u_exp_re", "u_exp_im", "u_rel_re", "u_rel_im"],
          rows, json_mode)


@main.command()
@click.option("--l", type=click.FloatRange(max=0.0), required=True,
              help="Angular momentum label (non-positive).")
@click.option("--phi", type=float, default=0.0, show_default=True,
              help="Angular label.")
@click.option("--x0", type=float, default=0.0, show_default=True,
              help="Center label, x component.")
@click.option("--y0", type=float, default=0.0, show_default=True,
              help="Center label, y component.")
@_params_options
@_series_options
@_output_option
@_trap_numerical
def expect(l, phi, x0, y0, mu_omega, omega, tol, max_terms, json_mode):
    """Expectation values of one magnetic coherent state.

    Prints the angular momentum mean, the ladder means (absolute and
    vacuum-normalized), the center mean, the radius target r(l) e^{i phi},
    and the relative deviations from the labels.
    """
    cfg = SeriesConfig(rel_tol=tol, max_terms=max_terms)
    params = fock.PhysicalParams(mu_omega=mu_omega, omega=omega)
    point = magnetic.MagneticPoint(l, phi, x0, y0)
    l_mean = magnetic.l_expectation(l, params, cfg)
    rp = magnetic.r_plus_expectation(l, phi, params, cfg)
    rr = magnetic.r_plus_relative(l, phi, params, cfg)
    r0 = magnetic.r0_expectation(point)
    target = params.orbit_radius(l) * complex(math.cos(phi), math.sin(phi))
    if l == 0.0:
        l_err = float("nan")
        rr_err = float("nan")
    else:
        l_err = abs((l_mean - l) / l)
        rr_err = abs(rr - target) / abs(target)
    _emit(["l", "phi", "x0", "y0", "mu_omega", "L", "rp_re", "rp_im",
           "rr_re", "rr_im", "r0_re", "r0_im", "r_target_re", "r_target_im",
           "L_rel_err", "rr_rel_err"],
          [[l, phi, x0, y0, mu_omega, l_mean, rp.real, rp.imag,
            rr.real, rr.imag, r0.real, r0.imag, target.real, target.imag,
            l_err, rr_err]],
          json_mode)


@main.command()
@click.option("--l", type=click.FloatRange(max=0.0), required=True,
              help="Angular momentum label (non-positive).")
@click.option("--x0", type=float, default=0.0, show_default=True,
              help="Center label, x component (p_n does not depend on it).")
@click.option("--y0", type=float, default=0.0, show_default=True,
              help="Center label, y component (p_n does not depend on it).")
@click.option("--n-upper", type=click.IntRange(min=1), default=40, show_default=True,
              help="Largest Landau index to print.")
@click.option("--mu-omega", type=click.FloatRange(min=0.0, min_open=True), default=1.0,
              show_default=True, help="Mass times cyclotron frequency.")
@_series_options
@_output_option
@_trap_numerical
def dist(l, x0, y0, n_upper, mu_omega, tol, max_terms, json_mode):
    """Landau-index occupation distribution p_n for one state.

    After the rows, reports the most probable index, the closed-form
    prediction round(-(l+1)/2), and whether the maximum was a tie.  The
    center labels and field scale fix the full state but cancel from p_n;
    they are accepted so a state specification can be passed through as is.
    """
    del x0, y0, mu_omega
    cfg = SeriesConfig(rel_tol=tol, max_terms=max_terms)
    probs = magnetic.occupation_probabilities(l, n_upper, cfg=cfg)
    info = magnetic.peak_info(l, cfg=cfg)
    if json_mode:
        for n, prob in enumerate(probs):
            click.echo(json.dumps({"n": n, "p_n": prob}))
        click.echo(json.dumps(
            {"argmax": info.n, "predicted": info.predicted, "tie": info.tie}))
    else:
        _emit(["n", "p_n"], [[n, prob] for n, prob in enumerate(probs)], False)
        click.echo(f"# argmax={info.n} predicted={info.predicted} "
                   f"tie={'true' if info.tie else 'false'}")


@main.command()
@click.option("--l-min", type=click.FloatRange(max=0.0, max_open=True), default=-40.0,
              show_default=True, help="Lower end of the label grid (negative).")
@click.option("--l-max", type=click.FloatRange(max=0.0, max_open=True), default=-1.0,
              show_default=True, help="Upper end of the label grid (negative).")
@click.option("--steps", type=click.IntRange(min=2), default=79, show_default=True,
              help="Number of grid points, endpoints included.")
@_params_options
@_series_options
@_output_option
@_trap_numerical
def compare(l_min, l_max, steps, mu_omega, omega, tol, max_terms, json_mode):
    """Closeness-to-label figures of both coherent-state families.

    For each grid label prints d (gaussian-damped family) and d_mm
    (undamped double-Poisson family, exactly 1/|l|).
    """
    _check_grid(l_min, l_max)
    cfg = SeriesConfig(rel_tol=tol, max_terms=max_terms)
    params = fock.PhysicalParams(mu_omega=mu_omega, omega=omega)
    rows = [[row.l, row.d, row.d_mm]
            for row in comparison.sweep(l_min, l_max, steps, params, cfg)]
    _emit(["l", "d", "d_mm"], rows, json_mode)


@main.command()
@click.option("--n-max", type=click.IntRange(min=2), default=64, show_default=True,
              help="Largest Landau index kept in the truncation.")
@click.option("--m-max", type=click.IntRange(min=2), default=64, show_default=True,
              help="Largest center index kept in the truncation.")
@_params_options
@_output_option
def algebra(n_max, m_max, mu_omega, omega, json_mode):
    """Check the ladder-operator algebra on a truncated basis.

    Evaluates every commutation relation, the quadratic invariant, and the
    number-operator identities, reporting the largest residual entry away
    from the truncation edge.  A check passes below 1e-10.
    """
    params = fock.PhysicalParams(mu_omega=mu_omega, omega=omega)
    trunc = fock.FockTruncation(n_max=n_max, m_max=m_max)
    g = {name: fock.build_generator(name, params, trunc)
         for name in fock.GENERATOR_NAMES}
    ident = fock.identity_op(trunc)
    zero = fock.zero_op(trunc)
    two_over = 2.0 / params.mu_omega
    checks = [
        ("[L,r+]-2r+", g["L"], g["r_plus"], 2.0 * g["r_plus"]),
        ("[L,r-]+2r-", g["L"], g["r_minus"], -2.0 * g["r_minus"]),
        ("[L,r0+]", g["L"], g["r0_plus"], zero),
        ("[L,r0-]", g["L"], g["r0_minus"], zero),
        ("[r+,r-]-2/mu_omega", g["r_plus"], g["r_minus"], two_over * ident),
        ("[r0+,r0-]+2/mu_omega", g["r0_plus"], g["r0_minus"], -two_over * ident),
        ("[r+,r0+]", g["r_plus"], g["r0_plus"], zero),
        ("[r+,r0-]", g["r_plus"], g["r0_minus"], zero),
        ("[r-,r0+]", g["r_minus"], g["r0_plus"], zero),
        ("[r-,r0-]", g["r_minus"], g["r0_minus"], zero),
    ]
    rows = []
    for label, a_op, b_op, expected in checks:
        residual = fock.commutator_residual(a_op, b_op, expected, interior_margin=1)
        rows.append([label, residual, residual <= _ALGEBRA_THRESHOLD])
    casimir = fock.casimir_residual(params, trunc)
    rows.append(["casimir", casimir, casimir <= _ALGEBRA_THRESHOLD])
    number_identity = (g["L"] + 2.0 * (g["a_dag"] @ g["a"]) + ident).max_abs()
    rows.append(["L+2Na+1", number_identity, number_identity <= _ALGEBRA_THRESHOLD])
    energy_identity = (g["H_perp"] + (params.omega / 2.0) * g["L"]).max_abs()
    rows.append(["H+omega*L/2", energy_identity, energy_identity <= _ALGEBRA_THRESHOLD])
    _emit(["identity", "residual", "pass"], rows, json_mode)


@main.command()
@click.option("--l", type=click.FloatRange(max=0.0), required=True,
              help="Angular momentum label (non-positive).")
@click.option("--phi", type=float, default=0.0, show_default=True,
              help="Angular label at t = 0.")
@click.option("--x0", type=float, default=0.0, show_default=True,
              help="Center label, x component.")
@click.option("--y0", type=float, default=0.0, show_default=True,
              help="Center label, y component.")
@click.option("--t-max", type=float, required=True,
              help="End of the time window.")
@click.option("--steps", type=click.IntRange(min=1), default=8, show_default=True,
              help="Number of time steps (steps+1 rows).")
@_params_options
@_output_option
def evolve(l, phi, x0, y0, t_max, steps, mu_omega, omega, json_mode):
    """Label trajectory of a state under its own time evolution.

    Coherent states stay in the family: only the angular label rotates,
    phi -> (phi - omega t) mod 2 pi, the rest of the label is frozen.
    """
    params = fock.PhysicalParams(mu_omega=mu_omega, omega=omega)
    start = magnetic.MagneticPoint(l, phi, x0, y0)
    rows = []
    for i in range(steps + 1):
        t = i * t_max / steps
        p = magnetic.evolve(start, t, params)
        rows.append([t, p.l, p.phi, p.x0_bar, p.y0_bar])
    _emit(["t", "l", "phi", "x0", "y0"], rows, json_mode)


if __name__ == "__main__":
    main()
