"""Shift and clock operators on C^n, the entangled basis grid on C^(n*n), and
the reducible unitary action they induce there.

The grid vector h[k][0] is the Fourier-weighted diagonal ket
(1/sqrt(n)) sum_j w^(kj) |jj> with w = exp(2*pi*i/n), and h[k][j] applies the
shift to the second factor j times.  The induced action permutes the k index
and leaves each fixed-j block invariant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_TOL, as_operator, frob, tensor_product, unit_roots
from .results import CheckResult


def shift_clock(n: int):
    """The cyclic shift S|j> = |j+1 mod n> and the clock M|j> = w^j |j>."""
    if n < 2:
        raise ValueError("n must be >= 2")
    s = np.zeros((n, n), dtype=complex)
    s[(np.arange(n) + 1) % n, np.arange(n)] = 1.0
    m = np.diag(unit_roots(n))
    return s, m


@dataclass(frozen=True)
class EntangledBasis:
    """Orthonormal grid h[k][j] of maximally entangled vectors on C^(n*n)."""
    n: int
    vectors: np.ndarray  # shape (n, n, n*n); vectors[k, j] is h_k^j

    def vector(self, k: int, j: int) -> np.ndarray:
        return self.vectors[k, j]

    def isometry(self, j: int) -> np.ndarray:
        """Columns h_0^j .. h_{n-1}^j; embeds C^n onto the j-th invariant block."""
        return self.vectors[:, j, :].T.copy()

    def code_isometry(self, k: int) -> np.ndarray:
        """Columns h_k^0 .. h_k^{n-1}; embeds C^n onto the k-th code subspace."""
        return self.vectors[k].T.copy()

    def flat(self) -> np.ndarray:
        """The unitary whose column k*n+j is h_k^j."""
        return self.vectors.reshape(self.n * self.n, -1).T.copy()


def entangled_basis(n: int) -> EntangledBasis:
    """Build the full grid from the defining sums."""
    if n < 2:
        raise ValueError("n must be >= 2")
    roots = unit_roots(n)
    amp = roots[np.outer(np.arange(n), np.arange(n)) % n] / np.sqrt(n)
    vectors = np.zeros((n, n, n * n), dtype=complex)
    for k in range(n):
        grid = np.zeros((n, n), dtype=complex)
        grid[np.arange(n), np.arange(n)] = amp[k]
        for j in range(n):
            # shifting the second tensor factor j times rolls the column index
            vectors[k, j] = np.roll(grid, j, axis=1).reshape(-1)
    return EntangledBasis(n, vectors)


def change_of_basis(n: int, basis: EntangledBasis | None = None) -> np.ndarray:
    """Unitary W with column k*n+j equal to h_k^j (standard basis -> grid)."""
    basis = basis if basis is not None else entangled_basis(n)
    return basis.flat()


def rep_generators(n: int, basis: EntangledBasis | None = None):
    """Images of S and M acting on the grid: k -> k+1 and k -> w^k, block-wise.

    Built by conjugating S (x) I and M (x) I through the change of basis, so
    that column k*n+j of the grid plays the role of |k> (x) |j>.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    w = change_of_basis(n, basis)
    s, m = shift_clock(n)
    eye = np.eye(n, dtype=complex)
    wt = w.conj().T
    pi_s = w @ tensor_product(s, eye) @ wt
    pi_m = w @ tensor_product(m, eye) @ wt
    return pi_s, pi_m


@dataclass(frozen=True)
class GroupElement:
    """Label (p, q, r) for the unitary w^r S^p M^q; exponents live mod n."""
    p: int
    q: int
    r: int = 0

    def normalized(self, n: int) -> 'GroupElement':
        return GroupElement(self.p % n, self.q % n, self.r % n)


def compose(n: int, g: GroupElement, h: GroupElement) -> GroupElement:
    """Group product; moving M^q past S^p' costs the central phase w^(q p')."""
    return GroupElement((g.p + h.p) % n, (g.q + h.q) % n,
                        (g.r + h.r + g.q * h.p) % n)


def rep_element(n: int, g: GroupElement, generators=None) -> np.ndarray:
    """The unitary w^r piS^p piM^q for a group label."""
    pi_s, pi_m = generators if generators is not None else rep_generators(n)
    g = g.normalized(n)
    u = np.linalg.matrix_power(pi_s, g.p) @ np.linalg.matrix_power(pi_m, g.q)
    if g.r:
        u = unit_roots(n)[g.r] * u
    return u


def element_unitaries(n: int, pi_s: np.ndarray, pi_m: np.ndarray) -> np.ndarray:
    """All n^2 products piS^p piM^q, indexed [p, q], via cumulative powers."""
    d = pi_s.shape[0]
    s_pow = [np.eye(d, dtype=complex)]
    m_pow = [np.eye(d, dtype=complex)]
    for _ in range(n - 1):
        s_pow.append(s_pow[-1] @ pi_s)
        m_pow.append(m_pow[-1] @ pi_m)
    out = np.empty((n, n, d, d), dtype=complex)
    for p in range(n):
        for q in range(n):
            out[p, q] = s_pow[p] @ m_pow[q]
    return out


def verify_representation(n: int, tol: float = DEFAULT_TOL,
                          pi_s=None, pi_m=None,
                          basis: EntangledBasis | None = None) -> list:
    """The five structural checks on the induced action, in fixed order.

    Explicit pi_s / pi_m overrides exist so mutation tests can feed in
    tampered generators; failures come back as results, not exceptions.
    """
    basis = basis if basis is not None else entangled_basis(n)
    if pi_s is None or pi_m is None:
        built = rep_generators(n, basis=basis)
        pi_s = built[0] if pi_s is None else as_operator(pi_s)
        pi_m = built[1] if pi_m is None else as_operator(pi_m)
    d = n * n
    eye = np.eye(d, dtype=complex)
    s, m = shift_clock(n)
    omega = unit_roots(n)[1]
    checks = []

    r = max(frob(pi_s.conj().T @ pi_s - eye), frob(pi_m.conj().T @ pi_m - eye))
    checks.append(CheckResult('rep_unitary', r <= tol, r))

    r = max(frob(np.linalg.matrix_power(pi_s, n) - eye),
            frob(np.linalg.matrix_power(pi_m, n) - eye))
    checks.append(CheckResult('rep_order', r <= tol, r))

    r = frob(pi_m @ pi_s - omega * (pi_s @ pi_m))
    checks.append(CheckResult('weyl_relation', r <= tol, r))

    r_inv = 0.0
    r_int = 0.0
    for j in range(n):
        v = basis.isometry(j)
        for op in (pi_s, pi_m):
            x = op @ v
            r_inv = max(r_inv, frob(x - v @ (v.conj().T @ x)))
        r_int = max(r_int, frob(pi_s @ v - v @ s), frob(pi_m @ v - v @ m))
    checks.append(CheckResult('subspace_invariance', r_inv <= tol, r_inv,
                              details='worst block over j'))
    checks.append(CheckResult('intertwiner', r_int <= tol, r_int,
                              details='grid columns against shift/clock, worst block'))
    return checks
