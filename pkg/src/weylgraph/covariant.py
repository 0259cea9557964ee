"""The commutant units x_pq, the group average (conditional expectation) in its
two forms, the diagonal-block projections Q_s, and the covariant resolution of
identity built from them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_TOL, as_operator, frob
from .results import CheckResult
from .weylrep import EntangledBasis, element_unitaries, entangled_basis, rep_generators


@dataclass(frozen=True)
class FixedPointUnits:
    """Grid x[p][q] = sum_k |h_k^p><h_k^q|, matrix units over the block index.

    These span the commutant of the induced action; the summed index is the
    subscript of the grid.
    """
    n: int
    units: np.ndarray  # shape (n, n, n*n, n*n)


def fixed_units(n: int, basis: EntangledBasis | None = None) -> FixedPointUnits:
    basis = basis if basis is not None else entangled_basis(n)
    blocks = [basis.isometry(p) for p in range(n)]
    d = n * n
    units = np.empty((n, n, d, d), dtype=complex)
    for p in range(n):
        for q in range(n):
            units[p, q] = blocks[p] @ blocks[q].conj().T
    return FixedPointUnits(n, units)


def _default_unitaries(n: int) -> np.ndarray:
    return element_unitaries(n, *rep_generators(n))


def expectation_avg(n: int, x, unitaries=None) -> np.ndarray:
    """Uniform average of u x u* over the n^2 group unitaries.

    Summation runs in lexicographic (p, q) order so repeated runs are
    bit-identical.
    """
    x = as_operator(x)
    if x.shape[0] != n * n:
        raise ValueError("operator dimension must be n^2")
    if unitaries is None:
        unitaries = _default_unitaries(n)
    acc = np.zeros_like(x)
    for p in range(n):
        for q in range(n):
            u = unitaries[p, q]
            acc += u @ x @ u.conj().T
    return acc / (n * n)


def expectation_trace(n: int, x, units: FixedPointUnits | None = None) -> np.ndarray:
    """Trace form of the same average: (1/n) sum_pq Tr(x_qp x) x_pq."""
    x = as_operator(x)
    if x.shape[0] != n * n:
        raise ValueError("operator dimension must be n^2")
    grid = (units if units is not None else fixed_units(n)).units
    acc = np.zeros_like(x)
    for p in range(n):
        for q in range(n):
            acc += np.einsum('ij,ji->', grid[q, p], x) * grid[p, q]
    return acc / n


def q_projection(n: int, s: int) -> np.ndarray:
    """Projection onto span{|s, s+k mod n> : k}, i.e. |s><s| on the first factor."""
    if not 0 <= s < n:
        raise ValueError("s out of range")
    q = np.zeros((n * n, n * n), dtype=complex)
    idx = s * n + (s + np.arange(n)) % n
    q[idx, idx] = 1.0
    return q


@dataclass(frozen=True)
class CovariantResolution:
    """Resolution of identity covariant under the group action.

    atoms maps (p, q) to the measure of the singleton at S^p M^q; every atom
    is (1/n^2) u (n Q_s) u*.  base_operator is n Q_s, the unique positive
    multiple of Q_s whose orbit sums to the identity.
    """
    n: int
    s: int
    atoms: dict
    base_operator: np.ndarray


def covariant_resolution(n: int, s: int, unitaries=None) -> CovariantResolution:
    base = n * q_projection(n, s)
    if unitaries is None:
        unitaries = _default_unitaries(n)
    atoms = {}
    for p in range(n):
        for q in range(n):
            u = unitaries[p, q]
            atoms[(p, q)] = (u @ base @ u.conj().T) / (n * n)
    return CovariantResolution(n, s, atoms, base)


def verify_theorem1(n: int, tol: float = DEFAULT_TOL,
                    unitaries=None, units: FixedPointUnits | None = None) -> CheckResult:
    """Check that the group average of every Q_s is I/n, in both forms."""
    target = np.eye(n * n, dtype=complex) / n
    if unitaries is None:
        unitaries = _default_unitaries(n)
    if units is None:
        units = fixed_units(n)
    worst = 0.0
    for s in range(n):
        q = q_projection(n, s)
        worst = max(worst,
                    frob(expectation_avg(n, q, unitaries) - target),
                    frob(expectation_trace(n, q, units) - target))
    return CheckResult('theorem1', worst <= tol, worst,
                       details='both average forms, every base index s')


def resolution_mass_check(n: int, tol: float,
                          resolution: CovariantResolution) -> CheckResult:
    """Atoms must sum to the identity and each atom must be positive."""
    d = n * n
    total = np.zeros((d, d), dtype=complex)
    psd_violation = 0.0
    for p in range(n):
        for q in range(n):
            atom = resolution.atoms[(p, q)]
            total += atom
            w = np.linalg.eigvalsh(atom)
            psd_violation = max(psd_violation, max(0.0, -float(w[0])))
    worst = max(frob(total - np.eye(d)), psd_violation)
    return CheckResult('resolution_mass', worst <= tol, worst,
                       details='atom sum against identity, atom positivity')


_COVARIANCE_SAMPLE = ((0, 0), (1, 0), (0, 1), (1, 1), (2, 2))


def resolution_covariance_check(n: int, tol: float,
                                resolution: CovariantResolution,
                                unitaries, exhaustive: bool) -> CheckResult:
    """Conjugating the atom at g by the unitary of h must land on the atom at hg.

    Central phases cancel inside the conjugation, so only the (p, q) labels
    matter.  The exhaustive mode walks all n^4 pairs; the sampled mode walks
    every h against a small fixed list of g.
    """
    if exhaustive:
        g_list = [(p, q) for p in range(n) for q in range(n)]
        details = 'all group pairs'
    else:
        g_list = [(p % n, q % n) for p, q in _COVARIANCE_SAMPLE]
        details = 'all h against a fixed g sample'
    worst = 0.0
    for hp in range(n):
        for hq in range(n):
            u = unitaries[hp, hq]
            for gp, gq in g_list:
                moved = u @ resolution.atoms[(gp, gq)] @ u.conj().T
                target = resolution.atoms[((hp + gp) % n, (hq + gq) % n)]
                worst = max(worst, frob(moved - target))
    return CheckResult('resolution_covariance', worst <= tol, worst, details=details)
