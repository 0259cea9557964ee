"""Dense complex linear algebra: Kronecker products, Hilbert-Schmidt geometry,
spectral projections of unitaries, and operator-subspace (Gram-rank) arithmetic.

All operators are square numpy arrays of complex128.  Identities are exact in
exact arithmetic, so every check here is residual-based with an absolute
tolerance (default 1e-10).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np
import scipy.linalg

DEFAULT_TOL = 1e-10


class DegenerateClusteringError(ValueError):
    """Eigenvalue clusters could not be separated unambiguously."""

    def __init__(self, gap: float):
        super().__init__(
            f"degenerate clustering: a linked cluster has diameter {gap:.6e}, "
            "wider than the linking gap")
        self.gap = gap


def as_operator(a) -> np.ndarray:
    """Validate and return a finite square complex matrix."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError("matrix entries must be finite")
    return m


def frob(a) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(a))


def unit_roots(n: int) -> np.ndarray:
    """Table of the n-th roots of unity, entry t equal to exp(2*pi*i*t/n).

    Index phase exponents mod n into this table instead of exponentiating
    arbitrary integers; it keeps repeated runs bit-identical.
    """
    return np.exp(2j * np.pi * np.arange(n) / n)


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product; composite index of |k> (x) |j> is k*dim_b + j."""
    return np.kron(as_operator(a), as_operator(b))


def hs_inner(a, b) -> complex:
    """Hilbert-Schmidt pairing Tr(A* B), conjugate-linear in the first slot."""
    a, b = as_operator(a), as_operator(b)
    if a.shape != b.shape:
        raise ValueError("dimension mismatch")
    return complex(np.vdot(a, b))


def conjugate(u, x) -> np.ndarray:
    """The action u x u* of a unitary on an operator."""
    u = np.asarray(u)
    return u @ x @ u.conj().T


def dft_unitary(n: int) -> np.ndarray:
    """Discrete Fourier matrix F[k, j] = exp(2*pi*i*k*j/n)/sqrt(n)."""
    if n < 1:
        raise ValueError("n must be positive")
    t = np.arange(n)
    return unit_roots(n)[np.outer(t, t) % n] / np.sqrt(n)


def random_hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Gaussian Hermitian sample, used by the randomized residual checks."""
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (a + a.conj().T) / 2


@dataclass(frozen=True)
class SpectralDecomposition:
    """Clustered eigendecomposition of a unitary.

    eigenvalues[c] is the unimodular representative of cluster c, projectors[c]
    the orthogonal projection onto its eigenspace, ranks[c] its multiplicity.
    Clusters are ordered by phase angle in [0, 2*pi).
    """
    eigenvalues: np.ndarray
    projectors: np.ndarray
    ranks: tuple


def spectral_projections(u, tol: float = DEFAULT_TOL) -> SpectralDecomposition:
    """Cluster the spectrum of a unitary and return the spectral projections.

    Eigenvalues are single-linkage clustered on the unit circle with linking
    gap 10*tol; a cluster whose diameter exceeds the gap is ambiguous and
    raises DegenerateClusteringError.
    """
    u = as_operator(u)
    d = u.shape[0]
    if frob(u.conj().T @ u - np.eye(d)) > tol * d:
        raise ValueError("input is not unitary within tolerance")
    t, z = scipy.linalg.schur(u, output='complex')
    eigs = np.diag(t)
    order = np.argsort(np.mod(np.angle(eigs), 2.0 * np.pi), kind='stable')
    gap = 10.0 * tol
    groups = [[order[0]]]
    for idx in order[1:]:
        if abs(eigs[idx] - eigs[groups[-1][-1]]) <= gap:
            groups[-1].append(idx)
        else:
            groups.append([idx])
    # the circle wraps: the first and last angular clusters may be one cluster
    if len(groups) > 1 and abs(eigs[groups[0][0]] - eigs[groups[-1][-1]]) <= gap:
        groups[0] = groups.pop() + groups[0]
    for grp in groups:
        vals = eigs[grp]
        diam = max(abs(x - y) for x in vals for y in vals)
        if diam > gap:
            raise DegenerateClusteringError(diam)
    reps = []
    for grp in groups:
        lam = complex(eigs[grp].mean())
        reps.append(lam / abs(lam))

    # order clusters by representative angle; a representative within the
    # linking gap of +1 counts as angle 0 even when roundoff lands it just
    # below the 2*pi wrap
    def _key(lam: complex) -> float:
        if abs(lam - 1.0) <= gap:
            return 0.0
        return float(np.mod(np.angle(lam), 2.0 * np.pi))

    cluster_order = sorted(range(len(groups)), key=lambda i: _key(reps[i]))
    eigenvalues, projectors, ranks = [], [], []
    for i in cluster_order:
        cols = z[:, np.array(groups[i])]
        eigenvalues.append(reps[i])
        projectors.append(cols @ cols.conj().T)
        ranks.append(len(groups[i]))
    eigenvalues = np.array(eigenvalues)
    projectors = np.array(projectors)
    # defensive: the decomposition must reassemble the input
    recon = np.einsum('c,cij->ij', eigenvalues, projectors)
    if frob(recon - u) > 100.0 * tol * d:
        raise ValueError("spectral decomposition failed to reconstruct the input")
    return SpectralDecomposition(eigenvalues, projectors, tuple(ranks))


@dataclass(frozen=True)
class OperatorSubspace:
    """A subspace of operator space, carried by an HS-orthonormal basis.

    basis has shape (dim, d, d); build_tol is the relative Gram cutoff used
    to build it.
    """
    ambient_dim: int
    basis: np.ndarray
    build_tol: float

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    def flat(self) -> np.ndarray:
        return self.basis.reshape(self.dim, -1)

    def residual(self, x) -> float:
        """Frobenius distance from x to the subspace."""
        v = np.asarray(x, dtype=complex).reshape(-1)
        f = self.flat()
        return float(np.linalg.norm(v - f.T @ (f.conj() @ v)))


def span_operators(generators: Sequence, tol: float = DEFAULT_TOL) -> OperatorSubspace:
    """Orthonormalize a generator list into an OperatorSubspace.

    Dimension counting and the basis both come from the eigendecomposition of
    the Gram matrix (order-independent, unlike sequential Gram-Schmidt); the
    rank cutoff is tol times the largest Gram eigenvalue.
    """
    mats = [as_operator(g) for g in generators]
    if not mats:
        raise ValueError("empty generator list")
    d = mats[0].shape[0]
    if any(m.shape[0] != d for m in mats):
        raise ValueError("generators must share one dimension")
    flat = np.array([m.reshape(-1) for m in mats])
    gram = flat.conj() @ flat.T
    w, v = scipy.linalg.eigh(gram)
    lam_max = float(w[-1])
    if lam_max <= 0.0:
        warnings.warn("all generators are numerically zero; returning the zero subspace")
        return OperatorSubspace(d, np.zeros((0, d, d), dtype=complex), tol)
    keep = np.nonzero(w > tol * lam_max)[0][::-1]
    coeff = v[:, keep] / np.sqrt(w[keep])
    basis = (coeff.T @ flat).reshape(len(keep), d, d)
    return OperatorSubspace(d, basis, tol)


class SubspaceComparison(NamedTuple):
    equal: bool
    max_residual: float


def subspace_equal(v: OperatorSubspace, w: OperatorSubspace,
                   tol: float = DEFAULT_TOL) -> SubspaceComparison:
    """Whether two operator subspaces coincide, with the worst residual seen.

    Equal means the dimensions agree and every basis element of each side
    projects onto the other with residual at most tol.
    """
    if v.ambient_dim != w.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    worst = 0.0
    for a, b in ((v, w), (w, v)):
        if a.dim == 0:
            continue
        fa = a.flat()
        if b.dim == 0:
            worst = max(worst, float(np.linalg.norm(fa, axis=1).max()))
            continue
        fb = b.flat()
        proj = (fb.conj() @ fa.T).T @ fb
        worst = max(worst, float(np.linalg.norm(fa - proj, axis=1).max()))
    return SubspaceComparison(v.dim == w.dim and worst <= tol, worst)
