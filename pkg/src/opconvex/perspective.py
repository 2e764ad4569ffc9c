"""Matrix perspectives g(L, R) = f(L/R) R and their extended variant.

Every construction comes in two computational forms. The eigen path works
on a ``CommutingPair`` and is exact up to scalar roundoff. The symmetrized
path

    R^{1/2} f(R^{-1/2} L R^{-1/2}) R^{1/2}

accepts arbitrary Hermitian L with strictly positive R, which is what
convex-combination arguments produce; on commuting inputs the two paths
must agree to ``PATH_AGREEMENT_RTOL`` relative to the output size.

The extended variant substitutes h(R) for R: f(L / h(R)) h(R) for a
strictly positive concave h. With h = identity it degenerates to the plain
perspective, and the code short-circuits that case so the reduction is
exact.

The quadratic-form entry points evaluate ``<g(L,R)(K*), K*>`` for the
superoperator pair L(X) = sigma X, R(X) = X rho; they are the bridge
between perspectives and the trace functionals.
"""
from __future__ import annotations

import numpy as np

from .atoms import ScalarAtom
from .commuting import (CommutingPair, DEFAULT_FLOOR, MultiplicationPair,
                        realize_multiplication_pair)
from .errors import DomainViolation, HypothesisViolation
from .linalg import (HermitianMatrix, apply_scalar_function, as_hermitian,
                     as_matrix, hs_inner, op_norm, spectral_decompose)

# Required agreement between the eigen and symmetrized paths on commuting
# inputs, relative to 1 + ||output||.
PATH_AGREEMENT_RTOL = 1e-9

# Quadratic forms of Hermitian superoperators are real; any imaginary
# residue beyond this (relative) bound indicates a broken realization.
IMAG_RESIDUE_TOL = 1e-12


def _require_convexity_flag(f: ScalarAtom) -> None:
    if not (f.operator_convex or f.operator_concave):
        raise HypothesisViolation(
            f"atom {f.label} is neither matrix convex nor matrix concave; "
            f"its perspective carries no convexity structure")


def _require_extended_hypotheses(f: ScalarAtom, h: ScalarAtom) -> None:
    if not f.operator_convex:
        raise HypothesisViolation(f"atom {f.label} is not matrix convex")
    if not f.f0_nonpositive:
        raise HypothesisViolation(
            f"atom {f.label} lacks f(0) <= 0, required for the extended "
            f"perspective")
    if not h.operator_concave:
        raise HypothesisViolation(f"atom {h.label} is not matrix concave")


def perspective_eigen(f: ScalarAtom, pair: CommutingPair) -> HermitianMatrix:
    """Perspective of f on a commuting pair, via the joint eigenbasis."""
    _require_convexity_flag(f)
    ratios = f.domain.clamp(pair.lam / pair.mu)
    vals = f(ratios) * pair.mu
    U = pair.basis
    return HermitianMatrix((U * vals) @ U.conj().T)


def perspective_symmetrized(f: ScalarAtom, L, R,
                            floor: float = DEFAULT_FLOOR) -> HermitianMatrix:
    """Perspective of f on possibly non-commuting L and strictly positive R.

    R with minimum eigenvalue below ``floor`` is rejected rather than
    regularized: shifting the spectrum would mask genuine inequality
    violations downstream.
    """
    _require_convexity_flag(f)
    Lh, Rh = as_hermitian(L), as_hermitian(R)
    if Lh.dim != Rh.dim:
        raise ValueError(f"dimension mismatch: {Lh.dim} vs {Rh.dim}")
    dec = spectral_decompose(Rh)
    if dec.eigenvalues[0] < floor:
        raise DomainViolation(
            f"perspective base has eigenvalue {dec.eigenvalues[0]:.3e} below "
            f"the invertibility floor {floor:g}")
    U = dec.eigenvectors
    sq = np.sqrt(dec.eigenvalues)
    half = (U * sq) @ U.conj().T
    inv_half = (U * (1.0 / sq)) @ U.conj().T
    inner = HermitianMatrix(inv_half @ Lh.mat @ inv_half)
    f_inner = apply_scalar_function(f, inner)
    return HermitianMatrix(half @ f_inner.mat @ half)


def perspective_agreement_defect(f: ScalarAtom, pair: CommutingPair) -> float:
    """Operator-norm gap between the two perspective paths on one pair."""
    eigen = perspective_eigen(f, pair)
    # half the pair's own least eigenvalue: tight enough to keep R honestly
    # invertible, loose enough that re-decomposition roundoff cannot trip it
    sym = perspective_symmetrized(f, pair.left, pair.right,
                                  floor=0.5 * float(pair.mu.min()))
    return op_norm(HermitianMatrix(eigen.mat - sym.mat))


def check_path_agreement(f: ScalarAtom, pair: CommutingPair,
                         rtol: float = PATH_AGREEMENT_RTOL) -> float:
    """Enforce the path-agreement contract; returns the measured defect."""
    defect = perspective_agreement_defect(f, pair)
    scale = 1.0 + op_norm(perspective_eigen(f, pair))
    if defect > rtol * scale:
        raise ValueError(
            f"perspective paths disagree: defect {defect:.3e} exceeds "
            f"{rtol:g} * (1 + ||g||) = {rtol * scale:.3e}")
    return defect


def extended_perspective_eigen(f: ScalarAtom, h: ScalarAtom,
                               pair: CommutingPair) -> HermitianMatrix:
    """Extended perspective f(L / h(R)) h(R) on a commuting pair."""
    _require_extended_hypotheses(f, h)
    if h.name == "identity":
        return perspective_eigen(f, pair)
    hmu = h(h.domain.clamp(pair.mu))
    if np.min(hmu) <= 0.0:
        raise DomainViolation(
            f"h must be strictly positive on the right spectrum, found "
            f"h value {float(np.min(hmu)):.3e}")
    ratios = f.domain.clamp(pair.lam / hmu)
    vals = f(ratios) * hmu
    U = pair.basis
    return HermitianMatrix((U * vals) @ U.conj().T)


def extended_perspective_symmetrized(f: ScalarAtom, h: ScalarAtom, L, R,
                                     floor: float = DEFAULT_FLOOR
                                     ) -> HermitianMatrix:
    """Extended perspective on possibly non-commuting arguments.

    Computes h(R) by functional calculus and hands it to the symmetrized
    plain perspective, which is exactly the composition the definition
    prescribes; the invertibility floor applies to h(R), the matrix whose
    inverse square root is taken.
    """
    _require_extended_hypotheses(f, h)
    Rh = as_hermitian(R)
    hR = Rh if h.name == "identity" else apply_scalar_function(h, Rh)
    return perspective_symmetrized(f, L, hR, floor=floor)


def _vec(M: np.ndarray) -> np.ndarray:
    return M.flatten(order="F")


def _unvec(v: np.ndarray, n: int) -> np.ndarray:
    return v.reshape((n, n), order="F")


def _quadratic_form(pair: CommutingPair, evals: np.ndarray,
                    K: np.ndarray) -> float:
    """<g(K*), K*> for the superoperator with the given joint eigenvalues."""
    n = K.shape[0]
    Kst = K.conj().T
    v = _vec(Kst)
    U = pair.basis
    gv = U @ (evals * (U.conj().T @ v))
    val = hs_inner(_unvec(gv, n), Kst)
    if abs(val.imag) > IMAG_RESIDUE_TOL * (1.0 + abs(val.real)):
        raise ArithmeticError(
            f"quadratic form has imaginary residue {val.imag:.3e}, "
            f"realization is inconsistent")
    return float(val.real)


def perspective_quadratic_form(f: ScalarAtom, mp: MultiplicationPair,
                               K) -> float:
    """<g(L,R)(K*), K*> for L(X) = sigma X, R(X) = X rho and g = f(L/R)R."""
    _require_convexity_flag(f)
    Km = as_matrix(K)
    n = mp.dim
    if Km.shape != (n, n):
        raise ValueError(f"K must be {n}x{n}, got shape {Km.shape}")
    pair = realize_multiplication_pair(mp)
    evals = f(f.domain.clamp(pair.lam / pair.mu)) * pair.mu
    return _quadratic_form(pair, evals, Km)


def extended_perspective_quadratic_form(f: ScalarAtom, h: ScalarAtom,
                                        mp: MultiplicationPair, K) -> float:
    """<(f(L/h(R))h(R))(K*), K*> on the realized superoperator pair."""
    _require_extended_hypotheses(f, h)
    Km = as_matrix(K)
    n = mp.dim
    if Km.shape != (n, n):
        raise ValueError(f"K must be {n}x{n}, got shape {Km.shape}")
    pair = realize_multiplication_pair(mp)
    if h.name == "identity":
        hmu = pair.mu
    else:
        hmu = h(h.domain.clamp(pair.mu))
        if np.min(hmu) <= 0.0:
            raise DomainViolation(
                f"h must be strictly positive on the right spectrum, found "
                f"h value {float(np.min(hmu)):.3e}")
    evals = f(f.domain.clamp(pair.lam / hmu)) * hmu
    return _quadratic_form(pair, evals, Km)
