"""Assemble the full verification report for one modulus."""

from __future__ import annotations

import time

import numpy as np

from .covariant import (covariant_resolution, expectation_avg, expectation_trace,
                        fixed_units, resolution_covariance_check,
                        resolution_mass_check, verify_theorem1)
from .graphs import (graph_orbit, kl_corollary_check, proposition1_scan,
                     spectral_match_check, verify_theorem2, y_units)
from .linalg import DEFAULT_TOL, frob, random_hermitian
from .results import CheckResult, VerificationReport
from .weylrep import (element_unitaries, entangled_basis, rep_generators,
                      verify_representation)

# enough samples to make a silent disagreement implausible, small enough to
# keep a full scan interactive; the larger moduli keep a reduced count
def _sample_count(n: int) -> int:
    return 100 if n <= 8 else 20


def run_verification(n: int, tol: float = DEFAULT_TOL) -> VerificationReport:
    """Run every check at modulus n and collect the canonical report."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if tol <= 0:
        raise ValueError("tol must be positive")
    start = time.perf_counter()
    d = n * n
    basis = entangled_basis(n)
    w = basis.flat()
    pi_s, pi_m = rep_generators(n, basis=basis)
    unitaries = element_unitaries(n, pi_s, pi_m)
    units = fixed_units(n, basis=basis)
    y = y_units(n, basis)

    checks = list(verify_representation(n, tol, pi_s=pi_s, pi_m=pi_m, basis=basis))

    rng = np.random.default_rng(1000 + n)  # fixed seed per n: reports must be stable
    samples = _sample_count(n)
    worst = 0.0
    for _ in range(samples):
        x = random_hermitian(d, rng)
        worst = max(worst, frob(expectation_avg(n, x, unitaries)
                                - expectation_trace(n, x, units)))
    checks.append(CheckResult('expectation_forms_agree', worst <= tol, worst,
                              details=f'{samples} random Hermitian samples'))

    eye = np.eye(d, dtype=complex)
    worst = frob(expectation_trace(n, eye, units) - eye)
    for _ in range(samples):
        x = random_hermitian(d, rng)
        once = expectation_trace(n, x, units)
        worst = max(worst,
                    frob(expectation_trace(n, once, units) - once),
                    abs(complex(np.trace(once) - np.trace(x))))
    checks.append(CheckResult('expectation_idempotent', worst <= tol, worst,
                              details=f'idempotence, unitality and trace preservation; '
                                      f'{samples} samples'))

    checks.append(verify_theorem1(n, tol, unitaries=unitaries, units=units))

    resolution = covariant_resolution(n, 0, unitaries=unitaries)
    checks.append(resolution_mass_check(n, tol, resolution))
    checks.append(resolution_covariance_check(n, tol, resolution, unitaries,
                                              exhaustive=n <= 6))

    orbit_graphs = [graph_orbit(n, s, tol, unitaries) for s in range(n)]
    checks.append(kl_corollary_check(
        n, tol, w, [[m for _, m in g.provenance] for g in orbit_graphs]))

    scan = proposition1_scan(n, 0, tol, unitaries=unitaries, orbit=orbit_graphs[0])
    checks.append(spectral_match_check(n, tol, pi_m, basis,
                                       extra_details=scan.summary()))

    t2_checks, audit, discrepancies = verify_theorem2(
        n, tol, basis=basis, unitaries=unitaries, orbit_graphs=orbit_graphs, y=y)
    checks.extend(t2_checks)

    elapsed = int(round((time.perf_counter() - start) * 1000))
    return VerificationReport(n, tol, checks, audit, discrepancies,
                              timing_ms=elapsed)
