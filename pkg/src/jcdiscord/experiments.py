"""Experiment runners: time series, steady-state sweeps, optimum search.

Every runner maps a configuration to a :class:`SweepTable` whose CSV
rendering is deterministic (fixed 12-significant-digit formatting, fixed row
order, provenance comment block with no timestamps), so identical configs
produce byte-identical files.  Sweep points are evaluated through pure
functions of the grid coordinates; evaluation order cannot affect results.
"""

from __future__ import annotations

import dataclasses
import io
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import correlations, dephasing
from ._golden import golden_max
from .dephasing import CoherentState, FieldInitSpec, InitialState, NumberState
from .jcm import ModelParams

__all__ = [
    "ExperimentConfig",
    "OptimumResult",
    "SweepTable",
    "emit_plot_script",
    "find_optimal_detuning",
    "grid_values",
    "run_timeseries",
    "run_validation",
    "surface_grid",
    "sweep_detuning_steady",
]

_ARTIFACT = "jcdiscord 0.1.0"

#: Coarse-grid values at or below this level count as identically zero when
#: deciding that an optimum is undefined.
_FLAT_ZERO = 1e-12


def grid_values(lo: float, hi: float, step: float) -> np.ndarray:
    """Inclusive uniform grid lo, lo+step, ..., hi (hi kept when it lands on
    the grid within float tolerance)."""
    if step <= 0.0:
        raise ValueError(f"grid step must be positive, got {step!r}")
    if hi < lo:
        raise ValueError(f"empty grid range [{lo}, {hi}]")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return lo + step * np.arange(count)


@dataclass
class ExperimentConfig:
    """Flags of one experiment run; defaults mirror the canonical weak-
    coupling operating point (g = 0.1, gamma = 0.5 in units of omega_a)."""

    field: FieldInitSpec = field(default_factory=lambda: NumberState(1))
    p: float = 0.5
    g: float = 0.1
    delta: float = 0.0
    gamma: float = 0.5
    omega_a: float = 1.0
    t_max: float = 25.0
    steps: int = 201
    delta_range: tuple[float, float, float] = (0.0, 1.0, 0.01)
    p_range: tuple[float, float, float] = (0.0, 1.0, 0.1)
    out: str | None = None
    plot_script: bool = False

    def validate(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p!r}")
        if self.steps < 2:
            raise ValueError(f"need at least 2 time samples, got steps={self.steps!r}")
        if self.t_max <= 0.0:
            raise ValueError(f"t_max must be positive, got {self.t_max!r}")
        for name, rng in (("delta-range", self.delta_range), ("p-range", self.p_range)):
            lo, hi, step = rng
            if step <= 0.0 or hi < lo:
                raise ValueError(f"{name} {lo}:{hi}:{step} is empty or has non-positive step")
        self.model_params()  # validates g/gamma/omega_a

    def model_params(self, delta: float | None = None) -> ModelParams:
        return ModelParams(
            g=self.g,
            delta=self.delta if delta is None else delta,
            gamma=self.gamma,
            omega_a=self.omega_a,
        )

    def initial_state(self, p: float | None = None) -> InitialState:
        return InitialState(self.p if p is None else p, self.field)

    def provenance(self, command: str) -> tuple[str, ...]:
        rng_d = "{}:{}:{}".format(*self.delta_range)
        rng_p = "{}:{}:{}".format(*self.p_range)
        return (
            _ARTIFACT,
            f"command: {command}",
            f"field={self.field.label()} dim={self.field.n_field} p={self.p!r}",
            f"g={self.g!r} delta={self.delta!r} gamma={self.gamma!r} omega_a={self.omega_a!r}",
            f"tmax={self.t_max!r} steps={self.steps} delta_range={rng_d} p_range={rng_p}",
            "units: omega_a = 1, time in 1/omega_a",
            "negativity: atom-side partial transpose, sum of |negative eigenvalues|",
        )


@dataclass
class SweepTable:
    """Rectangular table of real samples with a provenance comment block."""

    columns: tuple[str, ...]
    rows: list[tuple[float, ...]]
    provenance: tuple[str, ...] = ()

    def to_csv(self) -> str:
        width = len(self.columns)
        buf = io.StringIO()
        for line in self.provenance:
            buf.write(f"# {line}\n")
        buf.write(",".join(self.columns) + "\n")
        for i, row in enumerate(self.rows):
            if len(row) != width:
                raise ValueError(f"row {i} has {len(row)} fields, expected {width}")
            if not all(math.isfinite(v) for v in row):
                raise ValueError(f"row {i} contains non-finite values: {row!r}")
            buf.write(",".join("%.11e" % v for v in row) + "\n")
        return buf.getvalue()

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.to_csv())


def run_timeseries(config: ExperimentConfig) -> SweepTable:
    """Correlation measures on a uniform time grid [0, t_max]."""
    config.validate()
    params = config.model_params()
    init = config.initial_state()
    rows = []
    for t in np.linspace(0.0, config.t_max, config.steps):
        rho = dephasing.evolve_general(init, params, float(t)).to_matrix()
        rep = correlations.correlation_report(rho)
        rows.append((float(t), rep.geometric_discord, rep.negativity, rep.purity, rep.trace_error))
    return SweepTable(
        columns=("t", "D_G", "negativity", "purity", "trace_error"),
        rows=rows,
        provenance=config.provenance("evolve"),
    )


def _steady_discord(field: FieldInitSpec, p: float, params: ModelParams) -> float:
    """Steady-state geometric discord: number inputs use the 6x6 closed form,
    anything else the dressed dephasing projection."""
    if isinstance(field, NumberState):
        return correlations.geometric_discord(dephasing.steady_state_number(field.k, p, params))
    state = dephasing.steady_state_general(InitialState(p, field), params)
    return correlations.geometric_discord(state.to_matrix())


def sweep_detuning_steady(config: ExperimentConfig) -> SweepTable:
    """Steady-state geometric discord across the detuning grid."""
    config.validate()
    if config.gamma <= 0.0:
        raise ValueError("steady-state sweeps need gamma > 0")
    rows = []
    for delta in grid_values(*config.delta_range):
        value = _steady_discord(config.field, config.p, config.model_params(float(delta)))
        rows.append((float(delta), value))
    return SweepTable(
        columns=("delta", "D_G_infinity"),
        rows=rows,
        provenance=config.provenance("steady"),
    )


def surface_grid(config: ExperimentConfig) -> SweepTable:
    """Steady-state discord over the (delta, p) product grid, delta-major."""
    config.validate()
    if config.gamma <= 0.0:
        raise ValueError("steady-state surfaces need gamma > 0")
    rows = []
    for delta in grid_values(*config.delta_range):
        params = config.model_params(float(delta))
        for p in grid_values(*config.p_range):
            rows.append((float(delta), float(p), _steady_discord(config.field, float(p), params)))
    return SweepTable(
        columns=("delta", "p", "D_G_infinity"),
        rows=rows,
        provenance=config.provenance("surface"),
    )


@dataclass(frozen=True)
class OptimumResult:
    """Maximiser of the steady-state discord over detuning.

    ``delta_opt`` is None when the curve is identically zero on the coarse
    grid (no correlation is ever produced, e.g. the dark initial state)."""

    delta_opt: float | None
    value: float


def find_optimal_detuning(config: ExperimentConfig) -> OptimumResult:
    """Coarse scan of the detuning grid plus golden-section refinement."""
    config.validate()
    if config.gamma <= 0.0:
        raise ValueError("optimal-detuning search needs gamma > 0")
    lo, hi, step = config.delta_range

    def objective(delta: float) -> float:
        return _steady_discord(config.field, config.p, config.model_params(float(delta)))

    grid = grid_values(lo, hi, step)
    coarse = np.array([objective(d) for d in grid])
    best = int(np.argmax(coarse))  # first occurrence = smallest delta
    if coarse[best] <= _FLAT_ZERO:
        return OptimumResult(delta_opt=None, value=0.0)
    left = grid[max(best - 1, 0)]
    right = grid[min(best + 1, grid.size - 1)]
    x, fx = golden_max(objective, float(left), float(right), tol=1e-6)
    if coarse[best] > fx or (coarse[best] == fx and grid[best] < x):
        x, fx = float(grid[best]), float(coarse[best])
    return OptimumResult(delta_opt=float(x), value=float(fx))


_PLOT_TEMPLATE = '''#!/usr/bin/env python3
"""Plot {csv_name} (generated alongside the data; needs matplotlib)."""
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

data = np.genfromtxt("{csv_name}", delimiter=",", names=True, comments="#")
{body}
plt.tight_layout()
plt.savefig("{png_name}", dpi=150)
print("wrote {png_name}")
'''

_PLOT_BODIES = {
    "timeseries": """fig, ax = plt.subplots(figsize=(7, 4))
for col in ("D_G", "negativity"):
    ax.plot(data["t"], data[col], label=col)
ax.set_xlabel("t  [1/omega_a]")
ax.set_ylabel("correlation")
ax.legend()""",
    "sweep": """fig, ax = plt.subplots(figsize=(7, 4))
ax.plot(data["delta"], data["D_G_infinity"])
ax.set_xlabel("delta  [omega_a]")
ax.set_ylabel("steady-state D_G")""",
    "surface": """deltas = np.unique(data["delta"])
ps = np.unique(data["p"])
z = data["D_G_infinity"].reshape(deltas.size, ps.size)
fig, ax = plt.subplots(figsize=(6, 5))
mesh = ax.pcolormesh(ps, deltas, z, shading="nearest")
fig.colorbar(mesh, ax=ax, label="steady-state D_G")
ax.set_xlabel("p")
ax.set_ylabel("delta  [omega_a]")""",
}


def emit_plot_script(csv_path: str | Path, kind: str) -> Path:
    """Write a standalone matplotlib script next to a CSV; returns its path."""
    if kind not in _PLOT_BODIES:
        raise ValueError(f"unknown plot kind {kind!r}; expected one of {sorted(_PLOT_BODIES)}")
    csv_path = Path(csv_path)
    script_path = csv_path.with_suffix(".plot.py")
    script_path.write_text(
        _PLOT_TEMPLATE.format(
            csv_name=csv_path.name,
            png_name=csv_path.with_suffix(".png").name,
            body=_PLOT_BODIES[kind],
        )
    )
    return script_path


# ---------------------------------------------------------------------------
# validation suite


def _random_density_matrix(rng: np.random.Generator, dim: int) -> np.ndarray:
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    m = g @ g.conj().T
    return m / np.trace(m)


def _random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def _bell_state(n_field: int) -> np.ndarray:
    psi = np.zeros(2 * n_field, dtype=complex)
    psi[0] = psi[n_field + 1] = 1.0 / np.sqrt(2.0)
    return np.outer(psi, psi.conj())


def _check_generator_basis(config):
    from .su_bloch import su_generators

    worst = 0.0
    for dim in sorted({2, 3, config.field.n_field}):
        basis = su_generators(dim)
        flat = basis.generators.reshape(len(basis), -1)
        gram = (flat @ flat.conj().T).real
        worst = max(
            worst,
            float(np.abs(gram - 2.0 * np.eye(len(basis))).max()),
            float(np.abs(np.einsum("ijj->i", basis.generators)).max()),
        )
    return worst <= 1e-12, f"max orthogonality/trace defect {worst:.2e} (tol 1e-12)"


def _check_bloch_round_trip(config):
    from .su_bloch import bloch_decompose, bloch_reconstruct, su_generators

    rng = np.random.default_rng(2024)
    worst = 0.0
    for dim in (2, 3, 5):
        basis = su_generators(dim)
        for _ in range(5):
            rho = _random_density_matrix(rng, 2 * dim)
            back = bloch_reconstruct(bloch_decompose(rho, basis), basis)
            worst = max(worst, float(np.abs(back - rho).max()))
    return worst <= 1e-12, f"max round-trip defect {worst:.2e} (tol 1e-12)"


def _check_discord_oracle(config):
    rng = np.random.default_rng(515)
    worst = abs(
        correlations.geometric_discord(_bell_state(3))
        - correlations.geometric_discord_oracle(_bell_state(3))
    )
    for _ in range(5):
        rho = _random_density_matrix(rng, 6)
        worst = max(
            worst,
            abs(
                correlations.geometric_discord(rho)
                - correlations.geometric_discord_oracle(rho)
            ),
        )
    return worst <= 1e-4, f"max |closed - oracle| {worst:.2e} over 6 states (tol 1e-4)"


def _check_pure_state_relation(config):
    rng = np.random.default_rng(81)
    worst = 0.0
    for _ in range(20):
        n = int(rng.integers(2, 11))
        v = rng.normal(size=2 * n) + 1j * rng.normal(size=2 * n)
        v /= np.linalg.norm(v)
        rho = np.outer(v, v.conj())
        dg = correlations.geometric_discord(rho)
        ps = correlations.pure_state_discord(correlations.schmidt_spectrum(v))
        worst = max(worst, abs(dg - ps))
    return worst <= 1e-10, f"max |D_G - (1 - sum s^2)| {worst:.2e} (tol 1e-10)"


def _check_resonant_vacuum(config):
    params = ModelParams(g=config.g, delta=0.0, gamma=0.0, omega_a=config.omega_a)
    init = InitialState(1.0, NumberState(0))
    worst_formula = 0.0
    worst_neg = 0.0
    for t in np.linspace(0.0, 10.0 * np.pi / config.g, 121):
        rho = dephasing.evolve_general(init, params, float(t)).to_matrix()
        dg = correlations.geometric_discord(rho)
        worst_formula = max(worst_formula, abs(dg - 0.5 * np.sin(2.0 * config.g * t) ** 2))
        worst_neg = max(worst_neg, abs(dg - 2.0 * correlations.negativity(rho) ** 2))
    ok = worst_formula <= 1e-9 and worst_neg <= 1e-9
    return ok, (
        f"max |D_G - sin^2(2gt)/2| {worst_formula:.2e}, "
        f"max |D_G - 2 neg^2| {worst_neg:.2e} (tol 1e-9)"
    )


def _check_master_equation(config):
    worst = 0.0
    for k in (0, 1, 2):
        for p in (0.0, 0.5, 1.0):
            for delta in (0.0, 0.2, 0.6):
                for gamma in (0.0, 0.5):
                    params = ModelParams(g=config.g, delta=delta, gamma=gamma)
                    init = InitialState(p, NumberState(k))
                    for t in (0.5, 1.0, 5.0):
                        worst = max(
                            worst,
                            dephasing.master_equation_residual(init, params, t, 1e-4),
                        )
    return worst <= 1e-6, f"max residual {worst:.2e} over 162 cases (tol 1e-6)"


def _check_trace_positivity(config):
    init = config.initial_state()
    params = config.model_params()
    is_number = isinstance(config.field, NumberState)
    trace_tol = 1e-12 if is_number else 1e-8
    worst_tr, worst_eig = 0.0, 0.0
    for t in np.linspace(0.0, config.t_max, 21):
        diag = correlations.state_diagnostics(
            dephasing.evolve_general(init, params, float(t)).to_matrix()
        )
        worst_tr = max(worst_tr, diag.trace_error)
        worst_eig = min(worst_eig, diag.min_eigenvalue)
    ok = worst_tr <= trace_tol and worst_eig >= -1e-10
    return ok, f"max trace error {worst_tr:.2e} (tol {trace_tol}), min eigenvalue {worst_eig:.2e}"


def _check_steady_consistency(config):
    params = ModelParams(g=0.1, delta=0.6, gamma=0.5)
    long_time = np.abs(
        dephasing.evolve_number(1, 0.5, params, 500.0)
        - dephasing.steady_state_number(1, 0.5, params)
    ).max()
    worst_gen = 0.0
    for k in (0, 1, 2):
        for p in (0.0, 0.5, 1.0):
            pr = ModelParams(g=0.1, delta=0.2, gamma=0.5)
            general = dephasing.steady_state_general(
                InitialState(p, NumberState(k, dim=k + 3)), pr
            ).to_matrix()
            nf = k + 3
            span = [k - 1, k, k + 1] if k >= 1 else [k, k + 1]
            idx = [n for n in span] + [nf + n for n in span]
            rows = ([0, 1, 2, 3, 4, 5] if k >= 1 else [1, 2, 4, 5])
            number = dephasing.steady_state_number(k, p, pr)[np.ix_(rows, rows)]
            worst_gen = max(worst_gen, float(np.abs(general[np.ix_(idx, idx)] - number).max()))
    ok = long_time <= 1e-8 and worst_gen <= 1e-12
    return ok, (
        f"evolve(500) vs steady {long_time:.2e} (tol 1e-8), "
        f"general vs number {worst_gen:.2e} (tol 1e-12)"
    )


def _check_resonance_zero_discord(config):
    worst = 0.0
    for p in (0.0, 0.5, 1.0):
        params = ModelParams(g=config.g, delta=0.0, gamma=0.5)
        worst = max(worst, _steady_discord(NumberState(1), p, params))
        worst = max(worst, _steady_discord(CoherentState(np.sqrt(5.0)), p, params))
    return worst <= 1e-10, f"max D_G at resonance {worst:.2e} (tol 1e-10)"


def _check_interior_optimum(config):
    details = []
    ok = True
    for p in (0.0, 0.5, 1.0):
        sub = dataclasses.replace(config, field=NumberState(1), p=p, gamma=0.5, g=0.1,
                                  delta_range=(0.0, 1.0, 0.01))
        table = sweep_detuning_steady(sub)
        values = np.array([row[1] for row in table.rows])
        interior = values[1:-1].max()
        edge = max(values[0], values[-1])
        ok = ok and interior > edge
        details.append(f"p={p}: interior max {interior:.4f} > edges {edge:.4f}")
    sub = dataclasses.replace(config, field=NumberState(1), p=1.0, gamma=0.5, g=0.1)
    result = find_optimal_detuning(sub)
    brute = max(
        _steady_discord(NumberState(1), 1.0, ModelParams(g=0.1, delta=float(d), gamma=0.5))
        for d in grid_values(0.0, 1.0, 1e-4)
    )
    refine_ok = result.value >= brute - 1e-8
    ok = ok and refine_ok
    details.append(f"optimum {result.value:.6f} vs 1e-4 grid {brute:.6f}")
    return ok, "; ".join(details)


def _steady_curve_deviation(p: float = 0.5, step: float = 0.01) -> float:
    """Max pointwise gap between the number:1 and coherent(sqrt 5) steady
    discord curves over delta in [0, 1]."""
    coherent = CoherentState(np.sqrt(5.0))
    worst = 0.0
    for delta in grid_values(0.0, 1.0, step):
        params = ModelParams(g=0.1, delta=float(delta), gamma=0.5)
        worst = max(
            worst,
            abs(
                _steady_discord(NumberState(1), p, params)
                - _steady_discord(coherent, p, params)
            ),
        )
    return worst


def _check_invariances(config):
    rng = np.random.default_rng(4096)
    worst = 0.0
    for _ in range(10):
        rho = _random_density_matrix(rng, 6)
        u = np.kron(_random_unitary(rng, 2), _random_unitary(rng, 3))
        rotated = u @ rho @ u.conj().T
        worst = max(
            worst,
            abs(correlations.geometric_discord(rho) - correlations.geometric_discord(rotated)),
            abs(correlations.negativity(rho) - correlations.negativity(rotated)),
        )
        pad = np.zeros((10, 10), dtype=complex)
        idx = [0, 1, 2, 5, 6, 7]
        pad[np.ix_(idx, idx)] = rho
        worst = max(
            worst,
            abs(correlations.geometric_discord(rho) - correlations.geometric_discord(pad)),
            abs(correlations.negativity(rho) - correlations.negativity(pad)),
        )
    params = ModelParams(g=0.1, delta=0.2, gamma=0.5)
    base = dephasing.evolve_general(
        InitialState(0.5, CoherentState(np.sqrt(5.0))), params, 3.0
    ).to_matrix()
    dg0, neg0 = correlations.geometric_discord(base), correlations.negativity(base)
    for phase in (0.9, 2.2):
        rho = dephasing.evolve_general(
            InitialState(0.5, CoherentState(np.sqrt(5.0), phase)), params, 3.0
        ).to_matrix()
        worst = max(
            worst,
            abs(correlations.geometric_discord(rho) - dg0),
            abs(correlations.negativity(rho) - neg0),
        )
    return worst <= 1e-10, f"max invariance defect {worst:.2e} (tol 1e-10)"


def _check_csv_determinism(config):
    sub = dataclasses.replace(config, field=NumberState(1), gamma=0.5,
                              delta_range=(0.0, 0.5, 0.05))
    first = sweep_detuning_steady(sub).to_csv()
    second = sweep_detuning_steady(sub).to_csv()
    values = [row for row in sweep_detuning_steady(sub).rows]
    in_range = all(0.0 <= v[1] <= 0.5 for v in values)
    ok = first == second and in_range
    return ok, f"byte-identical renders: {first == second}; D_G range valid: {in_range}"


_CHECKS = (
    ("su-generator-orthogonality", _check_generator_basis),
    ("bloch-round-trip", _check_bloch_round_trip),
    ("discord-closed-vs-oracle", _check_discord_oracle),
    ("pure-state-schmidt-relation", _check_pure_state_relation),
    ("resonant-vacuum-dynamics", _check_resonant_vacuum),
    ("master-equation-residual", _check_master_equation),
    ("trace-and-positivity", _check_trace_positivity),
    ("steady-state-consistency", _check_steady_consistency),
    ("resonance-zero-discord", _check_resonance_zero_discord),
    ("interior-optimum", _check_interior_optimum),
    ("measure-invariances", _check_invariances),
    ("csv-determinism", _check_csv_determinism),
)


def run_validation(config: ExperimentConfig) -> tuple[int, list[str]]:
    """Run the invariant battery; returns (exit status, report lines).

    The number-vs-coherent steady-curve gap is always reported as an
    informational metric: the two curves share zeros at resonance but are
    not expected to agree pointwise away from it, so the measured deviation
    is published as evidence rather than gated.
    """
    config.validate()
    lines = []
    failures = 0
    for name, check in _CHECKS:
        try:
            ok, detail = check(config)
        except Exception as exc:  # a crashed check is a failed check
            ok, detail = False, f"raised {exc!r}"
        lines.append(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
        failures += 0 if ok else 1
    deviation = _steady_curve_deviation(p=0.5, step=0.02)
    lines.append(
        "INFO steady-curve-gap: max |D_G_inf(number:1) - D_G_inf(coherent:sqrt5)| "
        f"= {deviation:.6e} at p=0.5 over delta in [0, 1]"
    )
    lines.append(f"{'OK' if failures == 0 else 'FAILED'}: {len(_CHECKS) - failures}/{len(_CHECKS)} checks passed")
    return (0 if failures == 0 else 1), lines
