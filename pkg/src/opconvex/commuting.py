"""Commuting positive pairs and their superoperator realizations.

A perspective g(L, R) = f(L/R) R only makes sense when L and R commute, so
the pair is stored in diagonalized form: one unitary basis plus two strictly
positive spectra. Commutation is then exact by construction and the quotient
L/R is unambiguous.

The pairs that matter in practice are superoperators: left multiplication
by sigma and right multiplication by rho on the Hilbert-Schmidt space of
n x n matrices always commute. ``realize_multiplication_pair`` builds that
pair explicitly in its joint eigenbasis of vectorized rank-one matrices.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import DomainViolation
from .linalg import (HermitianMatrix, UNITARY_TOL, as_hermitian, as_matrix,
                     op_norm, spectral_decompose)

# Default strict-positivity floor for spectra.
DEFAULT_FLOOR = 1e-8

# Commutator rejection threshold for the raw-matrix diagnostic constructor,
# relative to 1 + ||L|| ||R||.
COMMUTATOR_TOL = 1e-8


class CommutingPair:
    """A commuting pair of strictly positive matrices in joint eigenform.

    ``left`` is ``U diag(lam) U*`` and ``right`` is ``U diag(mu) U*`` for the
    stored unitary ``U = basis``; entry i of ``lam``/``mu`` is the eigenvalue
    pair on the i-th joint eigenvector.
    """

    __slots__ = ("_basis", "_lam", "_mu")

    def __init__(self, basis, lam, mu, floor: float = DEFAULT_FLOOR):
        U = np.asarray(basis, dtype=np.complex128)
        lam = np.asarray(lam, dtype=float)
        mu = np.asarray(mu, dtype=float)
        if U.ndim != 2 or U.shape[0] != U.shape[1]:
            raise ValueError(f"basis must be square, got shape {U.shape}")
        n = U.shape[0]
        if lam.shape != (n,) or mu.shape != (n,):
            raise ValueError("spectra must match the basis dimension")
        gram_defect = np.max(np.abs(U.conj().T @ U - np.eye(n)))
        if gram_defect > UNITARY_TOL:
            raise ValueError(
                f"basis is not unitary: defect {gram_defect:.3e} exceeds "
                f"{UNITARY_TOL:g}")
        for name, v in (("lam", lam), ("mu", mu)):
            if not np.all(np.isfinite(v)):
                raise ValueError(f"{name} must be finite")
            if np.min(v) < floor:
                raise DomainViolation(
                    f"{name} entry {float(np.min(v)):.3e} below the "
                    f"positivity floor {floor:g}")
        U = U.copy()
        U.flags.writeable = False
        lam = lam.copy()
        lam.flags.writeable = False
        mu = mu.copy()
        mu.flags.writeable = False
        object.__setattr__(self, "_basis", U)
        object.__setattr__(self, "_lam", lam)
        object.__setattr__(self, "_mu", mu)

    def __setattr__(self, name, value):
        raise AttributeError("CommutingPair is immutable")

    @property
    def basis(self) -> np.ndarray:
        return self._basis

    @property
    def lam(self) -> np.ndarray:
        return self._lam

    @property
    def mu(self) -> np.ndarray:
        return self._mu

    @property
    def dim(self) -> int:
        return self._basis.shape[0]

    @property
    def left(self) -> HermitianMatrix:
        return self._materialize(self._lam)

    @property
    def right(self) -> HermitianMatrix:
        return self._materialize(self._mu)

    def _materialize(self, spectrum) -> HermitianMatrix:
        U = self._basis
        return HermitianMatrix((U * spectrum) @ U.conj().T)

    def swapped(self) -> "CommutingPair":
        """The same pair with the roles of left and right exchanged."""
        return CommutingPair(self._basis, self._mu, self._lam,
                             floor=float(min(self._lam.min(), self._mu.min())))

    def __repr__(self):
        return f"CommutingPair(dim={self.dim})"


def make_commuting_pair(basis, lam, mu, floor: float = DEFAULT_FLOOR) -> CommutingPair:
    """Validate and build a commuting pair from a unitary and two spectra."""
    return CommutingPair(basis, lam, mu, floor=floor)


def quotient(pair: CommutingPair) -> HermitianMatrix:
    """The quotient L/R = U diag(lam/mu) U*, exact on the joint eigenbasis."""
    return pair._materialize(pair.lam / pair.mu)


def log_quotient_identity_check(pair: CommutingPair) -> float:
    """Operator-norm defect of log(L/R) = log L - log R.

    All three logarithms are computed by functional calculus on the
    materialized matrices, so this exercises the whole spectral pipeline
    rather than the stored spectra.
    """
    def matlog(H):
        dec = spectral_decompose(H)
        if dec.eigenvalues[0] <= 0:
            raise DomainViolation(
                f"logarithm needs a positive matrix, found eigenvalue "
                f"{dec.eigenvalues[0]:.3e}")
        U = dec.eigenvectors
        return (U * np.log(dec.eigenvalues)) @ U.conj().T

    lhs = matlog(quotient(pair))
    rhs = matlog(pair.left) - matlog(pair.right)
    return op_norm(HermitianMatrix(lhs - rhs))


def pair_from_matrices(L, R, floor: float = DEFAULT_FLOOR,
                       tol: float = COMMUTATOR_TOL) -> CommutingPair:
    """Diagnostic constructor from two raw matrices that should commute.

    Rejects the input when the commutator norm exceeds
    ``tol * (1 + ||L|| ||R||)``; otherwise runs a simultaneous
    diagonalization (eigenspaces of L, then R within each eigenspace) and
    validates the reconstruction.
    """
    Lh, Rh = as_hermitian(L), as_hermitian(R)
    if Lh.dim != Rh.dim:
        raise ValueError(f"dimension mismatch: {Lh.dim} vs {Rh.dim}")
    scale = 1.0 + op_norm(Lh) * op_norm(Rh)
    comm = op_norm(HermitianMatrix(1j * (Lh.mat @ Rh.mat - Rh.mat @ Lh.mat)))
    if comm > tol * scale:
        raise ValueError(
            f"matrices do not commute: ||[L, R]|| = {comm:.3e} exceeds "
            f"{tol:g} * (1 + ||L|| ||R||) = {tol * scale:.3e}")

    decL = spectral_decompose(Lh)
    w, UL = decL.eigenvalues, decL.eigenvectors
    M = UL.conj().T @ Rh.mat @ UL
    n = Lh.dim
    cluster_tol = 1e-7 * (1.0 + float(np.max(np.abs(w))))
    basis = np.zeros((n, n), dtype=np.complex128)
    mu = np.zeros(n)
    start = 0
    while start < n:
        stop = start + 1
        while stop < n and w[stop] - w[stop - 1] <= cluster_tol:
            stop += 1
        block = (M[start:stop, start:stop] +
                 M[start:stop, start:stop].conj().T) / 2.0
        bw, bU = np.linalg.eigh(block)
        basis[:, start:stop] = UL[:, start:stop] @ bU
        mu[start:stop] = bw
        start = stop

    pair = make_commuting_pair(basis, w, mu, floor=floor)
    recon_tol = tol * (1.0 + op_norm(Rh))
    defect = op_norm(HermitianMatrix(pair.right.mat - Rh.mat))
    if defect > recon_tol:
        raise ValueError(
            f"simultaneous diagonalization failed to reproduce R: defect "
            f"{defect:.3e} exceeds {recon_tol:.3e}")
    return pair


class MultiplicationPair:
    """Strictly positive sigma and rho defining L(X) = sigma X, R(X) = X rho."""

    __slots__ = ("_sigma", "_rho")

    def __init__(self, sigma, rho, floor: float = DEFAULT_FLOOR):
        s, r = as_hermitian(sigma), as_hermitian(rho)
        if s.dim != r.dim:
            raise ValueError(f"dimension mismatch: {s.dim} vs {r.dim}")
        for name, H in (("sigma", s), ("rho", r)):
            low = float(np.linalg.eigvalsh(H.mat)[0])
            if low < floor:
                raise DomainViolation(
                    f"{name} has eigenvalue {low:.3e} below the positivity "
                    f"floor {floor:g}")
        object.__setattr__(self, "_sigma", s)
        object.__setattr__(self, "_rho", r)

    def __setattr__(self, name, value):
        raise AttributeError("MultiplicationPair is immutable")

    @property
    def sigma(self) -> HermitianMatrix:
        return self._sigma

    @property
    def rho(self) -> HermitianMatrix:
        return self._rho

    @property
    def dim(self) -> int:
        return self._sigma.dim


def realize_multiplication_pair(mp: MultiplicationPair) -> CommutingPair:
    """Joint eigenform of left multiplication by sigma and right by rho.

    Under column-stacking vectorization the two superoperators have
    matrices kron(I, sigma) and kron(rho^T, I); the rank-one matrices
    u_i v_j* built from eigenvectors sigma u_i = s_i u_i and
    rho v_j = r_j v_j are a joint eigenbasis. Basis column i*n + j is
    vec(u_i v_j*) with eigenvalue pair (s_i, r_j), i.e. the left spectrum
    is indexed by sigma's eigenvalues and the right one by rho's.
    """
    n = mp.dim
    decs = spectral_decompose(mp.sigma)
    decr = spectral_decompose(mp.rho)
    # kron(conj(Ur), Us) holds vec(u_i v_j*) at column j*n + i; permute to
    # the (i outer, j inner) order the spectra below are laid out in.
    raw = np.kron(decr.eigenvectors.conj(), decs.eigenvectors)
    k = np.arange(n * n)
    basis = raw[:, (k % n) * n + k // n]
    lam = np.repeat(decs.eigenvalues, n)
    mu = np.tile(decr.eigenvalues, n)
    floor = float(min(lam.min(), mu.min()))
    return make_commuting_pair(basis, lam, mu, floor=floor)


def apply_superop(pair: CommutingPair, which: str, X) -> np.ndarray:
    """Apply the realized left or right multiplication operator to X.

    ``pair`` must come from ``realize_multiplication_pair`` (its dimension
    is n^2); the result is the n x n matrix sigma X (``which="left"``) or
    X rho (``which="right"``) up to roundoff.
    """
    if which not in ("left", "right"):
        raise ValueError(f"which must be 'left' or 'right', got {which!r}")
    N = pair.dim
    n = math.isqrt(N)
    if n * n != N:
        raise ValueError(f"pair dimension {N} is not a perfect square")
    Xm = as_matrix(X)
    if Xm.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} matrix, got shape {Xm.shape}")
    vec = Xm.flatten(order="F")
    evals = pair.lam if which == "left" else pair.mu
    U = pair.basis
    out = U @ (evals * (U.conj().T @ vec))
    return out.reshape((n, n), order="F")
