"""Adjacency spectral radius by two independent routes.

``rho_quotient`` works on the small equitable-partition matrix of a
clique-join family; ``rho_power`` runs power iteration on any realized
graph. ``rho_oracle_dense`` (cyclic Jacobi, full spectrum) exists to
check both.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .families import CliqueJoinFamily, FamilyError
from .graph import Graph, is_connected

DEFAULT_TOL = 1e-10
MAX_ITER = 10**6
ORACLE_MAX_N = 64


class SpectralError(ArithmeticError):
    pass


@dataclass(frozen=True)
class SpectrumResult:
    rho: float
    residual: float
    iterations: int


@dataclass(frozen=True)
class PerronVector:
    entries: np.ndarray  # positive, max entry 1


def quotient_matrix(f: CliqueJoinFamily) -> np.ndarray:
    """Equitable-partition matrix; row/column 0 is the core, then one per part.

    Entry ``(i, j)`` is the number of neighbours a vertex of class ``i`` has
    in class ``j``. For ``s = 0`` (single part only) the core class is
    dropped.
    """
    if f.s == 0:
        if f.t != 1:
            raise FamilyError("quotient matrix with an empty core needs exactly one part")
        return np.array([[f.parts[0] - 1.0]])
    t = f.t
    q = np.zeros((t + 1, t + 1))
    q[0, 0] = f.s - 1
    for i, p in enumerate(f.parts, start=1):
        q[0, i] = p
        q[i, 0] = f.s
        q[i, i] = p - 1
    return q


def _symmetrized(f: CliqueJoinFamily) -> np.ndarray:
    q = quotient_matrix(f)
    sizes = np.array([f.s] + list(f.parts), dtype=float) if f.s else np.array([float(f.parts[0])])
    root = np.sqrt(sizes)
    return q * root[:, None] / root[None, :]


def rho_quotient(f: CliqueJoinFamily, rel_tol: float = 1e-12) -> float:
    """Largest eigenvalue of ``quotient_matrix(f)``, i.e. ``rho(realize(f))``."""
    if f.n == 0:
        return 0.0
    # D^(1/2) Q D^(-1/2) is symmetric, so the residual bounds the eigenvalue error
    b = _symmetrized(f)
    scale = max(1.0, float(np.max(np.sum(b, axis=1))))
    rho, res, it, _ = _kernels.backend.power_iteration(b, rel_tol * scale, MAX_ITER)
    if it < 0:
        raise SpectralError(f"quotient power iteration stalled for {f} (residual {res:.3g})")
    return rho


def rho_power(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER) -> SpectrumResult:
    if g.n < 1:
        raise ValueError("spectral radius needs at least one vertex")
    if tol <= 0:
        raise ValueError("tol must be positive")
    rho, res, it, _ = _kernels.backend.power_iteration(g.adjacency_matrix(), tol, max_iter)
    if it < 0:
        raise SpectralError(f"power iteration hit {max_iter} iterations, best residual {res:.3g}")
    return SpectrumResult(rho, res, it)


def rho(g: Graph, tol: float = DEFAULT_TOL) -> float:
    return rho_power(g, tol).rho


def perron_vector(g: Graph, tol: float = 1e-12) -> PerronVector:
    if not is_connected(g):
        raise ValueError("Perron vector requires a connected graph")
    rho, res, it, x = _kernels.backend.power_iteration(g.adjacency_matrix(), tol, MAX_ITER)
    if it < 0:
        raise SpectralError(f"power iteration hit the cap, best residual {res:.3g}")
    x = np.asarray(x, dtype=float)
    return PerronVector(x / np.max(x))


def spectrum_dense(g: Graph) -> np.ndarray:
    """Full adjacency spectrum (ascending) by cyclic Jacobi rotations."""
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"dense oracle limited to n <= {ORACLE_MAX_N}, got {g.n}")
    if g.n == 0:
        return np.zeros(0)
    return _kernels.backend.jacobi_eigenvalues(g.adjacency_matrix(), 1e-15, 100)


def rho_oracle_dense(g: Graph) -> float:
    return float(spectrum_dense(g)[-1])
