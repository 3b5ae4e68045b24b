"""Relativistic bound states of the ring-shaped pseudo-harmonic oscillator."""

from ._core import *  # noqa: F401,F403
from ._core import (
    BranchSign,
    Convention,
    PotentialParams,
    QuantumNumbers,
    SolveRequest,
    Symmetry,
    solve_energy,
)

__version__ = "0.1.0"


def solve(K, A, B, C, M, n, m, *, symmetry="spin", branch="plus", convention="table", n_theta=None):
    """Solve one bound state from plain numbers, returning a SolveResult."""
    sym = {"spin": Symmetry.Spin, "pseudospin": Symmetry.PseudoSpin}[symmetry]
    br = {"plus": BranchSign.Plus, "minus": BranchSign.Minus}[branch]
    conv = {"table": Convention.TableConsistent, "equation": Convention.EquationConsistent}[convention]
    qn = QuantumNumbers(n, n if n_theta is None else n_theta, m)
    return solve_energy(SolveRequest(PotentialParams(K, A, B, C), M, qn, sym, br, conv))
