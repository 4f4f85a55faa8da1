"""Probe-grid sweeps over the gap functions, CSV emission, and the seeded
inequality fuzz suite.

Rows are ordered lexicographically by grid index (first axis slowest) no
matter how the evaluation is parallelized, and all floats are written in full
double precision, so a fixed configuration always produces a byte-identical
CSV.
"""

from __future__ import annotations

import csv
import io
import json
import math
import multiprocessing
import os
from dataclasses import dataclass, field

import numpy as np

from . import bounds as bounds_mod
from .clifford import build_rep
from .errors import ConfigError, InputError
from .gaps import gap_record
from .kernels import eigenvalues, schur_spectral_data, sigma_min
from .localizer import MatrixTuple, ProbeSite, commutator_sum_norm, f_term_norm
from .models import (
    DEFAULT_KAPPA,
    DEFAULT_RADII,
    DEFAULT_REGIONS,
    HaldaneParams,
    RegionParams,
    TwoLevelParams,
    build_haldane_heterostructure,
    build_tls,
    load_interchange,
    scaled_tuple,
)

__all__ = [
    "Axis",
    "SweepConfig",
    "SweepResult",
    "build_model_tuple",
    "check_suite",
    "diff_maps",
    "format_check_report",
    "load_config",
    "parse_config",
    "read_sweep_csv",
    "run_sweep",
    "write_sweep_csv",
]

COORD_ORDER = ("x", "y", "reE", "imE")
GAP_ORDER = ("linear", "radial", "rq", "lq", "q")
BOUND_COLUMNS = ("rhs_linear_radial", "rhs_radial_quadratic", "rhs_linear_quadratic")

PARALLELISM_ENV = "NHGAPS_PARALLELISM"

_FLOAT_FMT = "{:.17e}"


@dataclass(frozen=True)
class Axis:
    name: str
    lo: float
    hi: float
    steps: int

    def values(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.steps)


@dataclass(frozen=True)
class SweepConfig:
    model: dict
    kappa: float
    axes: tuple[Axis, ...]
    fixed: dict
    gaps: tuple[str, ...]
    bound_columns: bool
    parallelism: int
    output: str | None
    raw: dict = field(repr=False, default_factory=dict)


def _expect(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise ConfigError(path, message)


def _get_number(obj: dict, key: str, path: str, default=None) -> float:
    if key not in obj:
        _expect(default is not None, f"{path}.{key}", "missing required field")
        return float(default)
    value = obj[key]
    _expect(isinstance(value, (int, float)) and not isinstance(value, bool),
            f"{path}.{key}", f"expected a number, got {value!r}")
    _expect(math.isfinite(float(value)), f"{path}.{key}", "must be finite")
    return float(value)


def _parse_region(obj, path: str, default: RegionParams) -> RegionParams:
    if obj is None:
        return default
    _expect(isinstance(obj, dict), path, "expected an object")
    known = {"m", "mu", "t", "t_c", "phi"}
    for key in obj:
        _expect(key in known, f"{path}.{key}", "unknown field")
    return RegionParams(
        m=_get_number(obj, "m", path, default.m),
        mu=_get_number(obj, "mu", path, default.mu),
        t=_get_number(obj, "t", path, default.t),
        t_c=_get_number(obj, "t_c", path, default.t_c),
        phi=_get_number(obj, "phi", path, default.phi),
    )


def _parse_model(obj, path: str) -> dict:
    _expect(isinstance(obj, dict), path, "expected an object")
    kind = obj.get("kind")
    _expect(kind in ("tls", "haldane", "file"),
            f"{path}.kind", f"expected 'tls', 'haldane' or 'file', got {kind!r}")
    model: dict = {"kind": kind}
    if kind == "tls":
        for key in obj:
            _expect(key in {"kind", "delta_e", "delta_gamma", "coupling"},
                    f"{path}.{key}", "unknown field")
        model["delta_e"] = _get_number(obj, "delta_e", path, 0.0)
        model["delta_gamma"] = _get_number(obj, "delta_gamma", path, 2.0)
        model["coupling"] = _get_number(obj, "coupling", path, 1.0)
    elif kind == "haldane":
        for key in obj:
            _expect(key in {"kind", "r_topo", "r_trivial", "r_lossy", "regions"},
                    f"{path}.{key}", "unknown field")
        for key, default in zip(("r_topo", "r_trivial", "r_lossy"), DEFAULT_RADII):
            value = obj.get(key, default)
            _expect(isinstance(value, int) and not isinstance(value, bool),
                    f"{path}.{key}", f"expected an integer, got {value!r}")
            model[key] = value
        regions = obj.get("regions") or {}
        _expect(isinstance(regions, dict), f"{path}.regions", "expected an object")
        for key in regions:
            _expect(key in DEFAULT_REGIONS, f"{path}.regions.{key}", "unknown region")
        model["regions"] = {
            name: _parse_region(regions.get(name), f"{path}.regions.{name}", default)
            for name, default in DEFAULT_REGIONS.items()
        }
    else:
        for key in obj:
            _expect(key in {"kind", "hamiltonian", "positions"},
                    f"{path}.{key}", "unknown field")
        ham = obj.get("hamiltonian")
        _expect(isinstance(ham, str), f"{path}.hamiltonian", "expected a file path")
        positions = obj.get("positions")
        _expect(isinstance(positions, list) and positions
                and all(isinstance(p, str) for p in positions),
                f"{path}.positions", "expected a non-empty list of file paths")
        _expect(len(positions) <= 2, f"{path}.positions", "at most two position operators")
        model["hamiltonian"] = ham
        model["positions"] = list(positions)
    return model


def _coords_for_model(model: dict) -> tuple[str, ...]:
    if model["kind"] == "tls":
        return ("x", "reE", "imE")
    if model["kind"] == "haldane":
        return COORD_ORDER
    return ("x", "reE", "imE") if len(model["positions"]) == 1 else COORD_ORDER


def parse_config(raw: dict) -> SweepConfig:
    """Validate a raw configuration mapping; errors carry the field path."""
    _expect(isinstance(raw, dict), "$", "expected a JSON object")
    known = {"model", "kappa", "grid", "gaps", "bound_columns", "parallelism", "output"}
    for key in raw:
        _expect(key in known, f"$.{key}", "unknown field")
    model = _parse_model(raw.get("model"), "$.model")
    default_kappa = DEFAULT_KAPPA if model["kind"] == "haldane" else 1.0
    kappa = _get_number(raw, "kappa", "$", default_kappa)
    _expect(kappa > 0, "$.kappa", "must be positive")

    coords = _coords_for_model(model)
    grid = raw.get("grid")
    _expect(isinstance(grid, dict), "$.grid", "expected an object")
    for key in grid:
        _expect(key in {"axes", "fixed"}, f"$.grid.{key}", "unknown field")
    axes_raw = grid.get("axes")
    _expect(isinstance(axes_raw, list) and 1 <= len(axes_raw) <= 2,
            "$.grid.axes", "expected a list of 1 or 2 axes")
    axes = []
    for i, axis_obj in enumerate(axes_raw):
        path = f"$.grid.axes[{i}]"
        _expect(isinstance(axis_obj, dict), path, "expected an object")
        for key in axis_obj:
            _expect(key in {"name", "min", "max", "steps"}, f"{path}.{key}", "unknown field")
        name = axis_obj.get("name")
        _expect(name in coords,
                f"{path}.name", f"expected one of {list(coords)}, got {name!r}")
        lo = _get_number(axis_obj, "min", path)
        hi = _get_number(axis_obj, "max", path)
        _expect(lo < hi, f"{path}.min", "min must be strictly below max")
        steps = axis_obj.get("steps")
        _expect(isinstance(steps, int) and not isinstance(steps, bool) and steps >= 2,
                f"{path}.steps", "expected an integer >= 2")
        axes.append(Axis(name=name, lo=lo, hi=hi, steps=steps))
    names = [a.name for a in axes]
    _expect(len(set(names)) == len(names), "$.grid.axes", "axis names must be distinct")

    fixed_raw = grid.get("fixed") or {}
    _expect(isinstance(fixed_raw, dict), "$.grid.fixed", "expected an object")
    fixed = {}
    for key, value in fixed_raw.items():
        _expect(key in coords, f"$.grid.fixed.{key}",
                f"unknown coordinate (model has {list(coords)})")
        _expect(key not in names, f"$.grid.fixed.{key}", "coordinate is already swept")
        fixed[key] = _get_number({key: value}, key, "$.grid.fixed")
    for name in coords:
        if name not in names and name not in fixed:
            fixed[name] = 0.0

    gaps_raw = raw.get("gaps", list(GAP_ORDER))
    _expect(isinstance(gaps_raw, list) and gaps_raw, "$.gaps", "expected a non-empty list")
    for i, g in enumerate(gaps_raw):
        _expect(g in GAP_ORDER, f"$.gaps[{i}]", f"expected one of {list(GAP_ORDER)}, got {g!r}")
    _expect(len(set(gaps_raw)) == len(gaps_raw), "$.gaps", "duplicate gap names")
    gaps = tuple(g for g in GAP_ORDER if g in gaps_raw)

    bound_columns = raw.get("bound_columns", False)
    _expect(isinstance(bound_columns, bool), "$.bound_columns", "expected a boolean")
    parallelism = raw.get("parallelism", 1)
    _expect(isinstance(parallelism, int) and not isinstance(parallelism, bool)
            and parallelism >= 1, "$.parallelism", "expected an integer >= 1")
    output = raw.get("output")
    _expect(output is None or isinstance(output, str), "$.output", "expected a string path")

    return SweepConfig(
        model=model,
        kappa=kappa,
        axes=tuple(axes),
        fixed=fixed,
        gaps=gaps,
        bound_columns=bound_columns,
        parallelism=parallelism,
        output=output,
        raw=raw,
    )


def load_config(path) -> SweepConfig:
    with open(path) as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError("$", f"invalid JSON: {exc}") from exc
    return parse_config(raw)


def build_model_tuple(cfg: SweepConfig) -> MatrixTuple:
    """Materialize the (kappa-scaled positions; H) tuple for a configuration."""
    model = cfg.model
    if model["kind"] == "tls":
        base = build_tls(TwoLevelParams(model["delta_e"], model["delta_gamma"],
                                        model["coupling"]))
    elif model["kind"] == "haldane":
        params = HaldaneParams(
            topological=model["regions"]["topological"],
            trivial=model["regions"]["trivial"],
            lossy=model["regions"]["lossy"],
            r_topo=model["r_topo"],
            r_trivial=model["r_trivial"],
            r_lossy=model["r_lossy"],
            kappa=cfg.kappa,
        )
        return scaled_tuple(build_haldane_heterostructure(params), cfg.kappa)
    else:
        positions = model["positions"]
        base = load_interchange(model["hamiltonian"], *positions)
    return MatrixTuple(
        herm=tuple(cfg.kappa * a for a in base.herm),
        nonherm=base.nonherm,
    )


class _Engine:
    """Per-sweep cache of everything that does not depend on the probe site."""

    def __init__(self, tup: MatrixTuple, coords: tuple[str, ...], kappa: float,
                 gaps: tuple[str, ...], bound_columns: bool):
        self.tup = tup
        self.coords = coords
        self.kappa = kappa
        self.gaps = gaps
        self.bound_columns = bound_columns
        self.need_localizer = bound_columns or "linear" in gaps or "radial" in gaps
        n = tup.n
        eye = np.eye(n, dtype=np.complex128)
        if self.need_localizer:
            if tup.d2 != 1:
                raise InputError("linear/radial gaps require exactly one non-Hermitian matrix")
            self.rep = build_rep(tup.d1)
            self.loc_dim = self.rep.block_dim * n
            base = np.zeros((self.loc_dim, self.loc_dim), dtype=np.complex128)
            self.lam_shifts = []
            for gamma, a in zip(self.rep.gammas, tup.herm):
                base += np.kron(gamma, a)
                self.lam_shifts.append(np.kron(gamma, eye))
            (b,) = tup.nonherm
            base += np.kron(self.rep.diag_plus, b)
            base += np.kron(self.rep.diag_minus, b.conj().T)
            self.loc_base = base
            self.nu_plus = np.kron(self.rep.diag_plus, eye)
            self.nu_minus = np.kron(self.rep.diag_minus, eye)
        if bound_columns:
            (b,) = tup.nonherm
            self.comm_norm = commutator_sum_norm(tup)
            # (B - nu) - (B - nu)^dag = i (S - 2 Im(nu) I) with S Hermitian
            self.skew_eigs = np.linalg.eigvalsh(-1j * (b - b.conj().T))

    def site_for(self, values: dict) -> ProbeSite:
        lam = [self.kappa * values["x"]]
        if "y" in self.coords:
            lam.append(self.kappa * values["y"])
        nu = complex(values["reE"], values["imE"])
        return ProbeSite(tuple(lam), (nu,))

    def localizer_at(self, site: ProbeSite) -> np.ndarray:
        loc = self.loc_base.copy()
        for shift, lam in zip(self.lam_shifts, site.lam):
            loc -= lam * shift
        (nu,) = site.nu
        loc -= nu * self.nu_plus
        loc -= np.conj(nu) * self.nu_minus
        return loc

    def value_columns(self) -> list[str]:
        cols = [f"gap_{g}" for g in self.gaps]
        if self.bound_columns:
            cols += list(BOUND_COLUMNS)
        return cols

    def evaluate(self, values: dict) -> list[float]:
        site = self.site_for(values)
        out: dict[str, float] = {}
        loc = self.localizer_at(site) if self.need_localizer else None
        if self.bound_columns:
            spec, departure = schur_spectral_data(loc)
            if "linear" in self.gaps:
                out["gap_linear"] = float(np.min(np.abs(spec.real)))
        elif "linear" in self.gaps:
            out["gap_linear"] = float(np.min(np.abs(eigenvalues(loc).real)))
        if "radial" in self.gaps:
            out["gap_radial"] = sigma_min(loc)
        if any(g in self.gaps for g in ("rq", "lq", "q")):
            from .quadratic import quadratic_gaps

            gap_rq, gap_lq, gap_q = quadratic_gaps(self.tup, site)
            out["gap_rq"], out["gap_lq"], out["gap_q"] = gap_rq, gap_lq, gap_q
        if self.bound_columns:
            (nu,) = site.nu
            defect = float(np.max(np.abs(self.skew_eigs - 2.0 * nu.imag)))
            f_norm = f_term_norm(self.tup, site, self.rep)
            rhs_lr = math.sqrt(self.loc_dim) * defect + departure.schur
            rhs_rq = math.sqrt(self.comm_norm + f_norm)
            out["rhs_linear_radial"] = rhs_lr
            out["rhs_radial_quadratic"] = rhs_rq
            out["rhs_linear_quadratic"] = rhs_lr + rhs_rq
        return [out[c] for c in self.value_columns()]


@dataclass
class SweepResult:
    columns: list[str]
    rows: list[list[float]]

    def column(self, name: str) -> np.ndarray:
        if name not in self.columns:
            raise InputError(f"no column named {name!r}; have {self.columns}")
        idx = self.columns.index(name)
        return np.array([row[idx] for row in self.rows])


def _engine_for_config(cfg: SweepConfig) -> _Engine:
    tup = build_model_tuple(cfg)
    coords = _coords_for_model(cfg.model)
    return _Engine(tup, coords, cfg.kappa, cfg.gaps, cfg.bound_columns)


def _grid_values(cfg: SweepConfig) -> list[dict]:
    coords = _coords_for_model(cfg.model)
    axes_values = [axis.values() for axis in cfg.axes]
    rows = []
    if len(cfg.axes) == 1:
        index_sets = [(i,) for i in range(cfg.axes[0].steps)]
    else:
        index_sets = [
            (i, j) for i in range(cfg.axes[0].steps) for j in range(cfg.axes[1].steps)
        ]
    for indices in index_sets:
        values = dict(cfg.fixed)
        for axis, axis_vals, idx in zip(cfg.axes, axes_values, indices):
            values[axis.name] = float(axis_vals[idx])
        rows.append({name: values[name] for name in coords})
    return rows


_WORKER_ENGINE: _Engine | None = None


def _pool_init(raw_cfg: dict) -> None:
    global _WORKER_ENGINE
    _WORKER_ENGINE = _engine_for_config(parse_config(raw_cfg))


def _pool_eval(values: dict) -> list[float]:
    assert _WORKER_ENGINE is not None
    return _WORKER_ENGINE.evaluate(values)


def _effective_parallelism(cfg: SweepConfig) -> int:
    override = os.environ.get(PARALLELISM_ENV)
    if override:
        try:
            return max(1, int(override))
        except ValueError as exc:
            raise ConfigError(f"${PARALLELISM_ENV}", f"not an integer: {override!r}") from exc
    return cfg.parallelism


_REVERIFY_ROWS = 10
_REVERIFY_RTOL = 1e-9


def _reverify_sample(cfg: SweepConfig, engine: _Engine, grid: list[dict],
                     result: SweepResult) -> None:
    """Recompute a deterministic sample of rows through the plain per-site
    operations and fail loudly if the engine's fast path disagrees."""
    nrows = len(grid)
    rng = np.random.default_rng(0)
    sample = sorted(rng.choice(nrows, size=min(_REVERIFY_ROWS, nrows), replace=False))
    rep = engine.rep if engine.need_localizer else None
    for idx in sample:
        site = engine.site_for(grid[idx])
        record = gap_record(engine.tup, site, rep)
        direct = {
            "gap_linear": record.gap_linear,
            "gap_radial": record.gap_radial,
            "gap_rq": record.gap_rq,
            "gap_lq": record.gap_lq,
            "gap_q": record.gap_q,
        }
        if cfg.bound_columns:
            r51 = bounds_mod.check_linear_vs_radial(engine.tup, site, rep)
            r52 = bounds_mod.check_radial_vs_quadratic(engine.tup, site, rep)
            direct["rhs_linear_radial"] = r51.rhs
            direct["rhs_radial_quadratic"] = r52.rhs
            direct["rhs_linear_quadratic"] = r51.rhs + r52.rhs
        row = dict(zip(result.columns, result.rows[idx]))
        for name, expected in direct.items():
            if name not in row:
                continue
            if abs(row[name] - expected) > _REVERIFY_RTOL * (1.0 + abs(expected)):
                raise RuntimeError(
                    f"sweep self-check failed at row {idx}, column {name}: "
                    f"sweep value {row[name]!r} vs direct value {expected!r}"
                )


def run_sweep(cfg: SweepConfig) -> SweepResult:
    """Evaluate every requested gap (and optional bound column) on the grid.

    Output is deterministic and independent of the parallelism setting; ten
    randomly sampled rows are re-verified against the plain per-site API.
    """
    engine = _engine_for_config(cfg)
    grid = _grid_values(cfg)
    coords = _coords_for_model(cfg.model)
    par = _effective_parallelism(cfg)
    if par <= 1 or len(grid) < 2:
        values = [engine.evaluate(g) for g in grid]
    else:
        ctx = multiprocessing.get_context("spawn")
        chunk = max(1, len(grid) // (par * 8))
        with ctx.Pool(par, initializer=_pool_init, initargs=(cfg.raw,)) as pool:
            values = pool.map(_pool_eval, grid, chunksize=chunk)
    columns = list(coords) + engine.value_columns()
    rows = [
        [g[name] for name in coords] + vals for g, vals in zip(grid, values)
    ]
    result = SweepResult(columns=columns, rows=rows)
    _reverify_sample(cfg, engine, grid, result)
    return result


# ---------------------------------------------------------------------------
# CSV round trip and difference maps
# ---------------------------------------------------------------------------


def write_sweep_csv(result: SweepResult, target) -> None:
    """Write a sweep result with a mandatory header and full-precision floats."""

    def _dump(fh) -> None:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(result.columns)
        for row in result.rows:
            writer.writerow([_FLOAT_FMT.format(v) for v in row])

    if hasattr(target, "write"):
        _dump(target)
    else:
        with open(target, "w", newline="") as fh:
            _dump(fh)


def sweep_csv_bytes(result: SweepResult) -> bytes:
    buf = io.StringIO()
    write_sweep_csv(result, buf)
    return buf.getvalue().encode()


def read_sweep_csv(path) -> SweepResult:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            columns = next(reader)
        except StopIteration:
            raise InputError(f"{path}: empty CSV") from None
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if len(row) != len(columns):
                raise InputError(f"{path}:{lineno}: expected {len(columns)} fields")
            try:
                rows.append([float(v) for v in row])
            except ValueError as exc:
                raise InputError(f"{path}:{lineno}: {exc}") from exc
    return SweepResult(columns=columns, rows=rows)


def diff_maps(a: SweepResult, b: SweepResult, col_a: str, col_b: str) -> SweepResult:
    """Append the absolute difference |col_a - col_b| over two sweeps that
    share an identical probe grid."""
    coords = [c for c in COORD_ORDER if c in a.columns]
    coords_b = [c for c in COORD_ORDER if c in b.columns]
    if coords != coords_b or len(a.rows) != len(b.rows):
        raise InputError("sweep grids do not match")
    for name in coords:
        if not np.array_equal(a.column(name), b.column(name)):
            raise InputError(f"sweep grids differ in coordinate {name!r}")
    va = a.column(col_a)
    vb = b.column(col_b)
    columns = coords + [f"{col_a}_a", f"{col_b}_b", "abs_diff"]
    rows = []
    for i in range(len(a.rows)):
        coord_vals = [a.rows[i][a.columns.index(name)] for name in coords]
        rows.append(coord_vals + [float(va[i]), float(vb[i]), float(abs(va[i] - vb[i]))])
    return SweepResult(columns=columns, rows=rows)


# ---------------------------------------------------------------------------
# seeded inequality fuzz suite
# ---------------------------------------------------------------------------


def _random_instance(rng: np.random.Generator):
    n = int(rng.integers(2, 7))
    d1 = int(rng.integers(1, 4))

    def cnormal(shape):
        return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)

    herm = []
    for _ in range(d1):
        g = cnormal((n, n))
        herm.append((g + g.conj().T) / 2)
    tup = MatrixTuple(tuple(herm), (cnormal((n, n)),))
    site = ProbeSite(
        tuple(rng.standard_normal(d1)),
        (complex(rng.standard_normal(), rng.standard_normal()),),
    )
    return tup, site


def _random_locality_instance(rng: np.random.Generator):
    n = int(rng.integers(3, 8))
    d1 = int(rng.integers(1, 3))
    d2 = int(rng.integers(1, 3))

    def cnormal(shape):
        return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)

    herm = []
    for _ in range(d1):
        mags = rng.uniform(0.5, 2.5, size=n)
        signs = rng.choice([-1.0, 1.0], size=n)
        herm.append(np.diag(mags * signs).astype(np.complex128))
    tup = MatrixTuple(tuple(herm), tuple(cnormal((n, n)) for _ in range(d2)))
    site = ProbeSite((0.0,) * d1, tuple(
        complex(rng.standard_normal(), rng.standard_normal()) for _ in range(d2)
    ))
    perturbation = [0.05 * cnormal((n, n)) for _ in range(d2)]
    for _ in range(60):
        k_value, _ = bounds_mod._locality_k(tup, site, perturbation)
        if k_value < 0.9:
            break
        perturbation = [0.5 * c for c in perturbation]
    return tup, site, perturbation


def check_suite(seed: int, instances: int) -> list[bounds_mod.BoundReport]:
    """Run every gap-comparison and locality check on seeded random instances.

    The inequalities are theorems: any unsatisfied report indicates a bug.
    Identical seed and instance count give an identical report list.
    """
    if instances < 1:
        raise InputError("instances must be >= 1")
    reports: list[bounds_mod.BoundReport] = []
    for idx in range(instances):
        rng = np.random.default_rng(np.random.SeedSequence([int(seed), idx]))
        tup, site = _random_instance(rng)
        rep = build_rep(tup.d1)
        for check in (
            bounds_mod.check_linear_vs_radial,
            bounds_mod.check_radial_vs_quadratic,
            bounds_mod.check_linear_vs_quadratic,
        ):
            report = check(tup, site, rep)
            report.extras["instance"] = idx
            reports.append(report)
        loc_tup, loc_site, perturbation = _random_locality_instance(rng)
        report = bounds_mod.check_locality(loc_tup, loc_site, perturbation)
        report.extras["instance"] = idx
        reports.append(report)
    return reports


def format_check_report(reports) -> str:
    """Stable text rendering of a report list (byte-identical across runs)."""
    lines = []
    violations = 0
    for report in reports:
        status = "PASS" if report.satisfied else "FAIL"
        if not report.satisfied:
            violations += 1
        instance = report.extras.get("instance", -1)
        line = (
            f"check={report.name} instance={instance:04d} status={status} "
            f"lhs={_FLOAT_FMT.format(report.lhs)} rhs={_FLOAT_FMT.format(report.rhs)} "
            f"slack={_FLOAT_FMT.format(report.slack)}"
        )
        if report.name == "locality":
            line += (
                f" K={_FLOAT_FMT.format(report.extras['K'])}"
                f" hypothesis_met={report.extras['hypothesis_met']}"
            )
        lines.append(line)
    lines.append(f"checks={len(reports)} violations={violations}")
    return "\n".join(lines) + "\n"
