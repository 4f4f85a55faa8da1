"""The two demonstration systems: a lossy two-level system with an exceptional
point, and a Haldane heterostructure flake (topological core, trivial ring,
lossy trivial outer ring) on a honeycomb lattice.

Lattice conventions: Bravais vectors a1 = (1, 0), a2 = (1/2, sqrt(3)/2), so
adjacent same-sublattice sites are unit distance apart and nearest-neighbor
bonds have length 1/sqrt(3).  The flake is the set of full unit cells within a
given hexagonal graph distance of the central cell, which yields concentric
hexagonal regions and equal sublattice counts; positions are shifted so the
flake centroid sits at the origin.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.io import mmread, mmwrite
from scipy.sparse import coo_matrix

from .errors import InputError
from .localizer import MatrixTuple

__all__ = [
    "HaldaneParams",
    "LatticeModel",
    "RegionParams",
    "Site",
    "TwoLevelParams",
    "build_haldane_heterostructure",
    "build_tls",
    "exceptional_point_locus",
    "export_model",
    "load_interchange",
    "scaled_tuple",
]

A1 = np.array([1.0, 0.0])
A2 = np.array([0.5, math.sqrt(3.0) / 2.0])
B_OFFSET = (A1 + A2) / 3.0  # length 1/sqrt(3)

# directed same-sublattice neighbor offsets (in cell coordinates) that carry
# the +phi phase on the A sublattice; the reversed hops are the conjugates
_NNN_PLUS = ((1, 0), (-1, 1), (0, -1))

REGION_NAMES = ("topological", "trivial", "lossy")


# ---------------------------------------------------------------------------
# two-level system
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwoLevelParams:
    """Energy detuning, loss asymmetry and coupling of the two-level system."""

    delta_e: float = 0.0
    delta_gamma: float = 2.0
    coupling: float = 1.0

    def __post_init__(self):
        for name in ("delta_e", "delta_gamma", "coupling"):
            if not np.isfinite(getattr(self, name)):
                raise InputError(f"{name} must be finite")


def build_tls(p: TwoLevelParams) -> MatrixTuple:
    """Position operator diag(-1, 1) and Hamiltonian
    [[dE + i dGamma, c], [c, 0]] as a (d1=1, d2=1) tuple."""
    x = np.diag([-1.0, 1.0]).astype(np.complex128)
    h = np.array(
        [[p.delta_e + 1j * p.delta_gamma, p.coupling], [p.coupling, 0.0]],
        dtype=np.complex128,
    )
    return MatrixTuple(herm=(x,), nonherm=(h,))


def exceptional_point_locus(p: TwoLevelParams) -> list[float]:
    """Coupling values where the two eigenvectors coalesce, for zero detuning:
    c = +-dGamma/2 (a single coalesced value 0 when dGamma = 0)."""
    if p.delta_e != 0.0:
        raise InputError("the exceptional-point locus is only available for delta_e = 0")
    if p.delta_gamma == 0.0:
        return [0.0]
    half = p.delta_gamma / 2.0
    return [half, -half]


# ---------------------------------------------------------------------------
# Haldane heterostructure
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RegionParams:
    """On-site mass M, loss rate mu, hoppings t and t_c, and the phase phi of
    the next-nearest-neighbor hopping for one region."""

    m: float
    mu: float
    t: float
    t_c: float
    phi: float = 0.0


# reference parameters: lossless topological core, trivial middle ring,
# lossy trivial outer ring
DEFAULT_REGIONS = {
    "topological": RegionParams(m=0.0, mu=0.0, t=1.0, t_c=0.5, phi=math.pi / 2.0),
    "trivial": RegionParams(m=0.5 * math.sqrt(3.0), mu=0.0, t=1.0, t_c=0.0),
    "lossy": RegionParams(m=0.5 * math.sqrt(3.0), mu=0.2, t=1.0, t_c=0.0),
}

# flake sized so a full position/energy sweep stays a desk-scale dense job
# (roughly a hundred sites)
DEFAULT_RADII = (1, 2, 3)
DEFAULT_KAPPA = 0.5


@dataclass(frozen=True)
class HaldaneParams:
    """Per-region parameters plus the concentric hexagon radii (in units of
    the same-sublattice spacing) and the position scaling kappa."""

    topological: RegionParams = DEFAULT_REGIONS["topological"]
    trivial: RegionParams = DEFAULT_REGIONS["trivial"]
    lossy: RegionParams = DEFAULT_REGIONS["lossy"]
    r_topo: int = DEFAULT_RADII[0]
    r_trivial: int = DEFAULT_RADII[1]
    r_lossy: int = DEFAULT_RADII[2]
    kappa: float = DEFAULT_KAPPA

    def __post_init__(self):
        if not (0 < self.r_topo < self.r_trivial < self.r_lossy):
            raise InputError("radii must satisfy 0 < r_topo < r_trivial < r_lossy")
        if self.r_topo < 1:
            raise InputError("r_topo must cover at least one full plaquette (>= 1)")
        if not self.kappa > 0:
            raise InputError("kappa must be positive")

    def region(self, name: str) -> RegionParams:
        return getattr(self, "topological" if name == "topological" else name)


@dataclass(frozen=True)
class Site:
    x: float
    y: float
    sublattice: str  # "A" | "B"
    region: str


@dataclass(frozen=True)
class LatticeModel:
    """Sites with diagonal position operators X, Y and the flake Hamiltonian H.

    H is Hermitian exactly when every region has zero loss rate.
    """

    sites: tuple[Site, ...]
    X: np.ndarray
    Y: np.ndarray
    H: np.ndarray

    @property
    def n(self) -> int:
        return len(self.sites)


def _hex_distance(n1: int, n2: int) -> int:
    return (abs(n1) + abs(n2) + abs(n1 + n2)) // 2


def build_haldane_heterostructure(p: HaldaneParams) -> LatticeModel:
    """Honeycomb flake of full unit cells within hexagonal graph distance
    r_lossy of the central cell, partitioned into three concentric regions.

    On-site terms are (M - i mu) on sublattice A and -(M + i mu) on B, with
    the region parameters of the owning cell.  Nearest-neighbor bonds carry
    the Hermitian kinetic term -t(|A><B| + |B><A|); next-nearest bonds carry
    -t_c e^{+-i phi} with the phase sign set by the hop direction and flipped
    between sublattices.  Bonds that straddle a region boundary use the inner
    region's parameters.  Open boundary conditions.
    """
    cells = sorted(
        (n1, n2)
        for n1 in range(-p.r_lossy, p.r_lossy + 1)
        for n2 in range(-p.r_lossy, p.r_lossy + 1)
        if _hex_distance(n1, n2) <= p.r_lossy
    )
    index = {cell: 2 * i for i, cell in enumerate(cells)}  # A at 2i, B at 2i+1
    n = 2 * len(cells)

    def ring(cell) -> int:
        return _hex_distance(*cell)

    def region_name(cell) -> str:
        r = ring(cell)
        if r <= p.r_topo:
            return "topological"
        if r <= p.r_trivial:
            return "trivial"
        return "lossy"

    positions = np.empty((n, 2))
    for cell in cells:
        base = cell[0] * A1 + cell[1] * A2
        positions[index[cell]] = base
        positions[index[cell] + 1] = base + B_OFFSET
    positions -= positions.mean(axis=0)

    h = np.zeros((n, n), dtype=np.complex128)
    for cell in cells:
        rp = p.region(region_name(cell))
        a_idx, b_idx = index[cell], index[cell] + 1
        h[a_idx, a_idx] = rp.m - 1j * rp.mu
        h[b_idx, b_idx] = -(rp.m + 1j * rp.mu)

    def bond_params(cell_a, cell_b) -> RegionParams:
        inner = cell_a if ring(cell_a) <= ring(cell_b) else cell_b
        return p.region(region_name(inner))

    # nearest neighbors: B of a cell bonds to A of that cell and of the cells
    # displaced by +a1 and +a2
    for cell in cells:
        b_idx = index[cell] + 1
        for off in ((0, 0), (1, 0), (0, 1)):
            other = (cell[0] + off[0], cell[1] + off[1])
            if other not in index:
                continue
            rp = bond_params(cell, other)
            a_idx = index[other]
            h[a_idx, b_idx] += -rp.t
            h[b_idx, a_idx] += -rp.t

    # next-nearest neighbors within each sublattice
    for cell in cells:
        for off in _NNN_PLUS:
            other = (cell[0] + off[0], cell[1] + off[1])
            if other not in index:
                continue
            rp = bond_params(cell, other)
            if rp.t_c == 0.0:
                continue
            amp_a = -rp.t_c * np.exp(1j * rp.phi)
            h[index[cell], index[other]] += amp_a
            h[index[other], index[cell]] += np.conj(amp_a)
            amp_b = -rp.t_c * np.exp(-1j * rp.phi)
            h[index[cell] + 1, index[other] + 1] += amp_b
            h[index[other] + 1, index[cell] + 1] += np.conj(amp_b)

    sites = tuple(
        Site(
            x=float(positions[index[cell] + k, 0]),
            y=float(positions[index[cell] + k, 1]),
            sublattice="AB"[k],
            region=region_name(cell),
        )
        for cell in cells
        for k in (0, 1)
    )
    return LatticeModel(
        sites=sites,
        X=np.diag(positions[:, 0]),
        Y=np.diag(positions[:, 1]),
        H=h,
    )


def scaled_tuple(model: LatticeModel, kappa: float) -> MatrixTuple:
    """(kappa X, kappa Y; H) as a matrix tuple; probe sites for sweeps are then
    (kappa x, kappa y, E)."""
    if not kappa > 0:
        raise InputError("kappa must be positive")
    return MatrixTuple(
        herm=(kappa * model.X.astype(np.complex128), kappa * model.Y.astype(np.complex128)),
        nonherm=(model.H,),
    )


# ---------------------------------------------------------------------------
# plain-text interchange
# ---------------------------------------------------------------------------

_MM_PRECISION = 17


def export_model(model: LatticeModel, outdir) -> dict[str, Path]:
    """Write H, X, Y in complex MatrixMarket coordinate format plus a site
    table CSV (index, x, y, sublattice, region); returns the written paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = {}
    for name, matrix in (("H", model.H), ("X", model.X), ("Y", model.Y)):
        path = outdir / f"{name}.mtx"
        mmwrite(path, coo_matrix(matrix.astype(np.complex128)), precision=_MM_PRECISION)
        paths[name] = path
    sites_path = outdir / "sites.csv"
    with open(sites_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["index", "x", "y", "sublattice", "region"])
        for i, site in enumerate(model.sites):
            writer.writerow([i, f"{site.x:.17e}", f"{site.y:.17e}", site.sublattice, site.region])
    paths["sites"] = sites_path
    return paths


def load_interchange(h_path, x_path, y_path=None) -> MatrixTuple:
    """Rebuild an unscaled (positions; H) tuple from MatrixMarket files."""

    def _dense(path):
        m = mmread(path)
        return np.asarray(m.todense() if hasattr(m, "todense") else m, dtype=np.complex128)

    herm = [_dense(x_path)]
    if y_path is not None:
        herm.append(_dense(y_path))
    return MatrixTuple(herm=tuple(herm), nonherm=(_dense(h_path),))
