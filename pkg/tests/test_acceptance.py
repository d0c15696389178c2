"""Acceptance suite: one test per shipped guarantee, one report line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the measured
numbers next to each criterion.
"""

import time

import numpy as np
import pytest

from jcdiscord import cli
from jcdiscord.correlations import (
    geometric_discord,
    geometric_discord_oracle,
    negativity,
    pure_state_discord,
    schmidt_spectrum,
    state_diagnostics,
)
from jcdiscord.dephasing import (
    CoherentState,
    InitialState,
    NumberState,
    evolve_general,
    evolve_number,
    master_equation_residual,
    steady_state_general,
    steady_state_number,
)
from jcdiscord.experiments import (
    ExperimentConfig,
    _steady_discord,
    find_optimal_detuning,
    grid_values,
    sweep_detuning_steady,
)
from jcdiscord.jcm import ModelParams

from conftest import random_density_matrix, random_pure_state, random_unitary


def report(num: int, status: str, detail: str) -> None:
    print(f"\ncriterion {num:02d} {status} - {detail}")


def test_criterion_01_closed_form_vs_oracle_discord():
    """50 random 2x3 states: closed form and measurement-grid oracle agree
    to 1e-4, within a 60 s budget."""
    start = time.time()
    worst = 0.0
    for i in range(50):
        rho = random_density_matrix(np.random.default_rng(42 + i), 6)
        gap = abs(geometric_discord(rho) - geometric_discord_oracle(rho))
        worst = max(worst, gap)
    elapsed = time.time() - start
    report(1, "PASS" if worst <= 1e-4 and elapsed <= 60 else "FAIL",
           f"max |closed - oracle| = {worst:.3e} (tol 1e-4), runtime {elapsed:.1f}s (budget 60s)")
    assert worst <= 1e-4
    assert elapsed <= 60.0


def test_criterion_02_pure_state_schmidt_relation():
    """100 random pure 2xN states (N <= 10): D_G = 1 - sum s_i^2 to 1e-10."""
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(100):
        n = int(rng.integers(2, 11))
        psi = random_pure_state(rng, 2 * n)
        rho = np.outer(psi, psi.conj())
        gap = abs(geometric_discord(rho) - pure_state_discord(schmidt_spectrum(psi)))
        worst = max(worst, gap)
    report(2, "PASS" if worst <= 1e-10 else "FAIL",
           f"max |D_G - (1 - sum s^2)| = {worst:.3e} (tol 1e-10)")
    assert worst <= 1e-10


def test_criterion_03_resonant_vacuum_dynamics():
    """number:0, p=1, delta=0, gamma=0: D_G(t) = sin^2(2gt)/2 and
    D_G = 2 negativity^2, both to 1e-9 over t in [0, 10 pi / g]."""
    g = 0.1
    params = ModelParams(g=g, delta=0.0, gamma=0.0)
    init = InitialState(1.0, NumberState(0))
    times = np.linspace(0.0, 10.0 * np.pi / g, 201)
    worst_formula = worst_neg = 0.0
    peak = 0.0
    for t in times:
        rho = evolve_general(init, params, float(t)).to_matrix()
        dg = geometric_discord(rho)
        peak = max(peak, dg)
        worst_formula = max(worst_formula, abs(dg - 0.5 * np.sin(2.0 * g * t) ** 2))
        worst_neg = max(worst_neg, abs(dg - 2.0 * negativity(rho) ** 2))
    # the grid contains t = pi/(4g) where the state is maximally entangled
    ok = worst_formula <= 1e-9 and worst_neg <= 1e-9 and peak == pytest.approx(0.5, abs=1e-9)
    report(3, "PASS" if ok else "FAIL",
           f"max |D_G - sin^2(2gt)/2| = {worst_formula:.3e}, "
           f"max |D_G - 2 neg^2| = {worst_neg:.3e} (tol 1e-9), peak {peak:.10f}")
    assert worst_formula <= 1e-9
    assert worst_neg <= 1e-9
    assert peak == pytest.approx(0.5, abs=1e-9)


def test_criterion_04_master_equation_residual():
    """Central-difference defect of the master equation stays below 1e-6
    over the full (k, p, delta, gamma, t) battery, within 10 s."""
    start = time.time()
    worst = 0.0
    for k in (0, 1, 2):
        for p in (0.0, 0.5, 1.0):
            for delta in (0.0, 0.2, 0.6):
                for gamma in (0.0, 0.5):
                    params = ModelParams(g=0.1, delta=delta, gamma=gamma)
                    init = InitialState(p, NumberState(k))
                    for t in (0.5, 1.0, 5.0):
                        worst = max(worst, master_equation_residual(init, params, t, 1e-4))
    elapsed = time.time() - start
    report(4, "PASS" if worst <= 1e-6 and elapsed <= 10 else "FAIL",
           f"max residual = {worst:.3e} (tol 1e-6), runtime {elapsed:.1f}s (budget 10s)")
    assert worst <= 1e-6
    assert elapsed <= 10.0


def test_criterion_05_trace_and_positivity():
    """Number inputs hold trace to 1e-12, coherent (sqrt5, dim 30) to 1e-8;
    no eigenvalue below -1e-10 anywhere on the sampled trajectories."""
    worst_number = worst_coherent = 0.0
    min_eig = 0.0
    times = np.linspace(0.0, 30.0, 31)
    for gamma in (0.0, 0.5):
        params = ModelParams(g=0.1, delta=0.2, gamma=gamma)
        for t in times:
            diag = state_diagnostics(
                evolve_general(InitialState(0.5, NumberState(1)), params, float(t)).to_matrix()
            )
            worst_number = max(worst_number, diag.trace_error)
            min_eig = min(min_eig, diag.min_eigenvalue)
            diag = state_diagnostics(
                evolve_general(
                    InitialState(0.5, CoherentState(np.sqrt(5.0), 0.0, 30)), params, float(t)
                ).to_matrix()
            )
            worst_coherent = max(worst_coherent, diag.trace_error)
            min_eig = min(min_eig, diag.min_eigenvalue)
    ok = worst_number <= 1e-12 and worst_coherent <= 1e-8 and min_eig >= -1e-10
    report(5, "PASS" if ok else "FAIL",
           f"trace error: number {worst_number:.3e} (tol 1e-12), "
           f"coherent {worst_coherent:.3e} (tol 1e-8); min eigenvalue {min_eig:.3e}")
    assert worst_number <= 1e-12
    assert worst_coherent <= 1e-8
    assert min_eig >= -1e-10


def test_criterion_06_steady_state_consistency():
    """evolve_number at t = 500 (gamma=0.5, g=0.1) meets its steady state to
    1e-8, and the dressed projection reproduces the closed form to 1e-12.

    The long-time check runs at delta = 0.6: the time to reach 1e-8 scales
    as 1/(gamma Omega_min^2), and at t = 500 only detunings with
    2 gamma t Omega_0^2 >= ln(1e8) have converged (delta = 0.2 would still
    sit at ~6e-6).
    """
    params = ModelParams(g=0.1, delta=0.6, gamma=0.5)
    gap_long = float(
        np.abs(evolve_number(1, 0.5, params, 500.0) - steady_state_number(1, 0.5, params)).max()
    )
    worst_general = 0.0
    pr = ModelParams(g=0.1, delta=0.2, gamma=0.5)
    for k in (0, 1, 2):
        for p in (0.0, 0.5, 1.0):
            nf = k + 3
            general = steady_state_general(InitialState(p, NumberState(k, dim=nf)), pr).to_matrix()
            number = steady_state_number(k, p, pr)
            if k == 0:
                rows, idx = [1, 2, 4, 5], [0, 1, nf, nf + 1]
            else:
                rows = list(range(6))
                idx = [k - 1, k, k + 1] + [nf + k - 1, nf + k, nf + k + 1]
            worst_general = max(
                worst_general, float(np.abs(number[np.ix_(rows, rows)] - general[np.ix_(idx, idx)]).max())
            )
    ok = gap_long <= 1e-8 and worst_general <= 1e-12
    report(6, "PASS" if ok else "FAIL",
           f"evolve(500) vs steady = {gap_long:.3e} (tol 1e-8); "
           f"projection vs closed form = {worst_general:.3e} (tol 1e-12)")
    assert gap_long <= 1e-8
    assert worst_general <= 1e-12


def test_criterion_07_zero_discord_at_resonance():
    """Steady discord vanishes (<= 1e-10) at delta = 0 for number and
    coherent inputs at every atomic mixedness."""
    worst = 0.0
    params = ModelParams(g=0.1, delta=0.0, gamma=0.5)
    for p in (0.0, 0.25, 0.5, 0.75, 1.0):
        for field in (NumberState(0), NumberState(1), CoherentState(np.sqrt(5.0))):
            worst = max(worst, _steady_discord(field, p, params))
    report(7, "PASS" if worst <= 1e-10 else "FAIL",
           f"max steady D_G at resonance = {worst:.3e} (tol 1e-10)")
    assert worst <= 1e-10


def test_criterion_08_interior_detuning_optimum():
    """number:1 sweeps peak strictly inside (0, 1) for p in {0, 0.5, 1}, and
    the refined optimum never falls below a 1e-4-step brute-force grid.

    At p in {0, 1} the peak is smooth and the grid pins it to 1e-8.  At
    p = 0.5 the maximum sits exactly on the eigenvalue-ordering crossover of
    the discord formula (a kink), where a 1e-4 grid is only O(1e-5) accurate;
    the optimizer must still dominate the grid.
    """
    details = []
    for p in (0.0, 0.5, 1.0):
        config = ExperimentConfig(field=NumberState(1), p=p, delta_range=(0.0, 1.0, 0.01))
        values = np.array([row[1] for row in sweep_detuning_steady(config).rows])
        interior = float(values[1:-1].max())
        edges = float(max(values[0], values[-1]))
        assert interior > edges, f"p={p}: no interior maximum"
        result = find_optimal_detuning(config)
        assert result.delta_opt is not None and 0.0 < result.delta_opt < 1.0
        brute = max(
            _steady_discord(NumberState(1), p, ModelParams(g=0.1, delta=float(d), gamma=0.5))
            for d in grid_values(0.0, 1.0, 1e-4)
        )
        assert result.value >= brute - 1e-8, f"p={p}: optimizer missed the brute-force max"
        if p in (0.0, 1.0):
            assert result.value == pytest.approx(brute, abs=1e-8), f"p={p}"
        else:
            assert result.value == pytest.approx(brute, abs=1e-5), f"p={p} (kinked maximum)"
        details.append(f"p={p}: opt {result.value:.6f} at {result.delta_opt:.4f} (grid {brute:.6f})")
    report(8, "PASS", "; ".join(details))


def test_criterion_09_number_vs_coherent_steady_curves():
    """Claimed coincidence of the number:1 and coherent(sqrt5) steady-state
    discord curves at p = 0.5, pointwise to 1e-3 over delta in [0, 1].

    The measured gap is reported unconditionally: the exact dephasing
    projection gives the coherent field correlation weights proportional to
    C_n (q_n - q_{n+1})/2 with q_n its Poisson photon distribution, which
    near the distribution mode are two orders of magnitude below the
    number-state weights, so the curves cannot coincide.
    """
    coherent = CoherentState(np.sqrt(5.0))
    worst = 0.0
    worst_delta = 0.0
    for delta in grid_values(0.0, 1.0, 0.01):
        params = ModelParams(g=0.1, delta=float(delta), gamma=0.5)
        gap = abs(
            _steady_discord(NumberState(1), 0.5, params)
            - _steady_discord(coherent, 0.5, params)
        )
        if gap > worst:
            worst, worst_delta = gap, float(delta)
    status = "PASS" if worst <= 1e-3 else "FAIL"
    report(9, status,
           f"max pointwise |D_G_inf(number:1) - D_G_inf(coherent:sqrt5)| = {worst:.6e} "
           f"at delta = {worst_delta:.2f} (tol 1e-3)")
    assert worst <= 1e-3, (
        f"steady-state curves differ by {worst:.6e} at delta = {worst_delta:.2f}: "
        "the dressed-diagonal steady state of a coherent field carries far less "
        "atom-field coherence than the number-state one at equal mixedness"
    )


def test_criterion_10_invariance_suite():
    """Local-unitary, field-embedding (N -> N+2) and coherent-phase
    invariance of both measures, 20 random instances each, to 1e-10."""
    rng = np.random.default_rng(2718)
    worst_lu = worst_embed = worst_phase = 0.0
    for _ in range(20):
        n = int(rng.integers(2, 6))
        rho = random_density_matrix(rng, 2 * n)
        u = np.kron(random_unitary(rng, 2), random_unitary(rng, n))
        rotated = u @ rho @ u.conj().T
        worst_lu = max(
            worst_lu,
            abs(geometric_discord(rho) - geometric_discord(rotated)),
            abs(negativity(rho) - negativity(rotated)),
        )
        padded = np.zeros((2 * (n + 2), 2 * (n + 2)), dtype=complex)
        idx = list(range(n)) + [n + 2 + i for i in range(n)]
        padded[np.ix_(idx, idx)] = rho
        worst_embed = max(
            worst_embed,
            abs(geometric_discord(rho) - geometric_discord(padded)),
            abs(negativity(rho) - negativity(padded)),
        )
    params = ModelParams(g=0.1, delta=0.2, gamma=0.5)
    for i in range(20):
        t = 0.5 + 0.7 * i
        phase = float(rng.uniform(0.0, 2.0 * np.pi))
        rho0 = evolve_general(
            InitialState(0.5, CoherentState(np.sqrt(5.0), 0.0)), params, t
        ).to_matrix()
        rho1 = evolve_general(
            InitialState(0.5, CoherentState(np.sqrt(5.0), phase)), params, t
        ).to_matrix()
        worst_phase = max(
            worst_phase,
            abs(geometric_discord(rho0) - geometric_discord(rho1)),
            abs(negativity(rho0) - negativity(rho1)),
        )
    ok = max(worst_lu, worst_embed, worst_phase) <= 1e-10
    report(10, "PASS" if ok else "FAIL",
           f"local-unitary {worst_lu:.3e}, embedding {worst_embed:.3e}, "
           f"coherent-phase {worst_phase:.3e} (tol 1e-10)")
    assert worst_lu <= 1e-10
    assert worst_embed <= 1e-10
    assert worst_phase <= 1e-10


def test_criterion_11_deterministic_csv(tmp_path):
    """Two `steady` runs with identical flags produce byte-identical files."""
    args = ["steady", "--field", "number:1", "--p", "0.5", "--g", "0.1",
            "--gamma", "0.5", "--delta-range", "0:1:0.02"]
    first = tmp_path / "first.csv"
    second = tmp_path / "second.csv"
    assert cli.main(args + ["--out", str(first)]) == 0
    assert cli.main(args + ["--out", str(second)]) == 0
    identical = first.read_bytes() == second.read_bytes()
    report(11, "PASS" if identical else "FAIL",
           f"byte-identical steady CSVs: {identical} ({first.stat().st_size} bytes)")
    assert identical
