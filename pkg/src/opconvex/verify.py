"""Seeded randomized verification of the inequality zoo.

Each theorem tag pairs an instance generator with a checker. Generators
draw from a per-trial ``numpy`` Generator seeded by a stable hash of
(campaign seed, theorem tag, trial index, redraw counter), so campaigns
are reproducible trial-by-trial, parallel execution matches serial
execution exactly, and any reported witness can be replayed from its
recorded coordinates alone.

Checkers validate the theorem's hypotheses before evaluating the
inequality: a hypothesis defect is a generator bug and raises
``HypothesisViolation``, never counts as an inequality failure. Domain
violations (an instance wandering out of an atom's domain) are rejected
trials and trigger a redraw with the next sub-seed.
"""
from __future__ import annotations

import hashlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .atoms import ScalarAtom, atom_names, lookup_atom
from .commuting import CommutingPair, DEFAULT_FLOOR, make_commuting_pair
from .errors import DomainViolation, HypothesisViolation
from .functionals import (DensityMatrix, ProbabilityVector,
                          classical_perspective, lieb_functional,
                          lieb_pq_functional,
                          quantum_relative_entropy_direct)
from .linalg import (HermitianMatrix, LoewnerVerdict, apply_scalar_function,
                     as_hermitian, as_matrix, loewner_leq, matrix_to_json)
from .perspective import (extended_perspective_eigen,
                          extended_perspective_symmetrized,
                          perspective_eigen, perspective_symmetrized)

# Theorem tags in canonical order; "all" in the CLI expands to this.
THEOREM_TAGS = ("hp", "hp-contractive", "perspective", "marechal",
                "rel-entropy-convexity", "lieb-s", "lieb-pq", "classical")

# Hypothesis fidelity bound: generated instances must satisfy their
# theorem's hypotheses (isometry defect, contraction slack, unit trace)
# this tightly before the inequality is evaluated.
HYPOTHESIS_TOL = 1e-10

# Redraw budget per trial before we call the generator broken.
MAX_REDRAWS = 100

# Random spectra are log-uniform on [SPECTRUM_LO, SPECTRUM_HI]: four
# orders of magnitude of quotient conditioning without leaving any
# positive-domain atom's comfort zone.
SPECTRUM_LO = 0.1
SPECTRUM_HI = 10.0

# Real-line atoms get spectra uniform on [-REAL_BOUND, REAL_BOUND].
REAL_BOUND = 5.0

SEED_RULE = ("sha256('{seed}:{theorem}:{index}:{redraw}') -> "
             "first 8 bytes, little-endian")


# ---------------------------------------------------------------------------
# configuration and reports

@dataclass(frozen=True)
class TrialConfig:
    """Campaign knobs. ``atom``/``atom_parameter`` select f for the Jensen,
    perspective, and classical tags; ``s`` is the exponent of the trace
    functional tag, ``t`` the base exponent of the extended perspective,
    ``p``/``q`` the exponent pair of its corollary."""

    dim_n: int = 3
    dim_m: int = 3
    trials: int = 200
    seed: int = 0
    tol: float = 1e-8
    floor: float = DEFAULT_FLOOR
    atom: str = "xlogx"
    atom_parameter: float | None = None
    s: float = 0.5
    t: float = 0.5
    p: float = 0.3
    q: float = 0.4
    shrink: float = 1.0
    force_endpoints: bool = True

    def validate(self) -> None:
        if self.dim_n < 1 or self.dim_m < 1:
            raise ValueError(
                f"dimensions must be >= 1, got ({self.dim_m}, {self.dim_n})")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError(f"seed must fit in 64 unsigned bits, got {self.seed}")
        if not self.tol > 0.0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if not self.floor > 0.0:
            raise ValueError(f"floor must be positive, got {self.floor}")
        if not 0.0 < self.shrink <= 1.0:
            raise ValueError(f"shrink must be in (0, 1], got {self.shrink}")
        if self.atom not in atom_names():
            raise ValueError(f"unknown atom {self.atom!r}")
        self.resolve_atom()
        lookup_atom("neg_power", self.s)
        lookup_atom("power", self.t)

    def resolve_atom(self) -> ScalarAtom:
        return lookup_atom(self.atom, self.atom_parameter)

    def fingerprint(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class CheckReport:
    """Aggregate of one theorem's campaign."""

    theorem: str
    trials: int
    failures: int
    worst_slack: float
    tolerance: float
    witness: dict
    config: dict

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "trials": self.trials,
                "failures": self.failures, "worst_slack": self.worst_slack,
                "tolerance": self.tolerance, "witness": self.witness,
                "config": self.config}


def scalar_geq(lhs: float, rhs: float, tol: float) -> LoewnerVerdict:
    """Scalar analogue of the Loewner check: lhs >= rhs up to tol*scale."""
    lhs, rhs = float(lhs), float(rhs)
    slack = lhs - rhs
    used = tol * (1.0 + max(abs(lhs), abs(rhs)))
    return LoewnerVerdict(holds=bool(slack >= -used), slack=slack,
                          tolerance_used=used)


# ---------------------------------------------------------------------------
# instance generators

def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def _complex_gaussian(rng, rows: int, cols: int) -> np.ndarray:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal(
        (rows, cols))


def random_unitary(n: int, seed) -> np.ndarray:
    """Haar-distributed n x n unitary (QR with phase-fixed diagonal)."""
    rng = _rng(seed)
    Q, R = np.linalg.qr(_complex_gaussian(rng, n, n))
    d = np.diagonal(R)
    phases = np.where(np.abs(d) > 0.0, d / np.abs(np.where(d == 0, 1, d)), 1.0)
    return Q * phases


def random_density(n: int, seed, floor: float = DEFAULT_FLOOR) -> DensityMatrix:
    """Wishart density G G* + floor I, trace-normalized."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    rng = _rng(seed)
    G = _complex_gaussian(rng, n, n)
    M = G @ G.conj().T + floor * np.eye(n)
    tr = float(np.real(np.trace(M)))
    return DensityMatrix(M, floor=floor / tr)


def random_positive_matrix(n: int, seed,
                           floor: float = DEFAULT_FLOOR) -> HermitianMatrix:
    """Wishart positive matrix G G* + floor I (no normalization)."""
    rng = _rng(seed)
    G = _complex_gaussian(rng, n, n)
    return HermitianMatrix(G @ G.conj().T + floor * np.eye(n))


def random_isometry_pair(m: int, n: int, seed):
    """(A, B), both m x n, with A*A + B*B = I_n.

    Stacks them as the orthonormalization of a 2m x n complex Gaussian,
    so the pair exists exactly when 2m >= n.
    """
    if 2 * m < n:
        raise ValueError(
            f"no isometry pair exists for m={m}, n={n}: need 2m >= n")
    rng = _rng(seed)
    Q, _ = np.linalg.qr(_complex_gaussian(rng, 2 * m, n))
    return Q[:m, :], Q[m:, :]


def random_contraction_pair(m: int, n: int, seed, shrink: float = 1.0):
    """Isometry pair scaled by a uniform factor in (0, shrink]."""
    if not 0.0 < shrink <= 1.0:
        raise ValueError(f"shrink must be in (0, 1], got {shrink}")
    rng = _rng(seed)
    A, B = random_isometry_pair(m, n, rng)
    gamma = shrink * (1.0 - rng.random())
    return A * gamma, B * gamma


def random_commuting_pair(n: int, seed, floor: float = DEFAULT_FLOOR,
                          lo: float = SPECTRUM_LO,
                          hi: float = SPECTRUM_HI) -> CommutingPair:
    """Random basis with two independent log-uniform spectra on [lo, hi]."""
    rng = _rng(seed)
    lo = max(lo, floor)
    U = random_unitary(n, rng)
    lam = np.exp(rng.uniform(np.log(lo), np.log(hi), size=n))
    mu = np.exp(rng.uniform(np.log(lo), np.log(hi), size=n))
    return make_commuting_pair(U, lam, mu, floor=floor)


def random_hermitian_in_domain(f: ScalarAtom, n: int, seed) -> HermitianMatrix:
    """Hermitian matrix whose spectrum lies inside f's domain.

    Positive-domain atoms get log-uniform spectra on [SPECTRUM_LO,
    SPECTRUM_HI]; real-line atoms get uniform spectra on
    [-REAL_BOUND, REAL_BOUND].
    """
    rng = _rng(seed)
    U = random_unitary(n, rng)
    if f.domain.lo >= 0.0:
        w = np.exp(rng.uniform(np.log(SPECTRUM_LO), np.log(SPECTRUM_HI),
                               size=n))
    else:
        w = rng.uniform(-REAL_BOUND, REAL_BOUND, size=n)
    return HermitianMatrix((U * w) @ U.conj().T)


def random_probability_vector(n: int, seed) -> ProbabilityVector:
    rng = _rng(seed)
    v = rng.random(n) + 0.05
    return ProbabilityVector(v / v.sum())


# ---------------------------------------------------------------------------
# checkers, one per inequality

def _jensen_verdict(f: ScalarAtom, Am, Bm, Th: HermitianMatrix,
                    tol: float) -> LoewnerVerdict:
    fT = apply_scalar_function(f, Th).mat
    compressed = HermitianMatrix(
        Am.conj().T @ Th.mat @ Am + Bm.conj().T @ Th.mat @ Bm)
    lhs = apply_scalar_function(f, compressed)
    rhs = HermitianMatrix(Am.conj().T @ fT @ Am + Bm.conj().T @ fT @ Bm)
    return loewner_leq(lhs, rhs, tol)


def _jensen_operands(A, B, T):
    Am, Bm = as_matrix(A), as_matrix(B)
    if Am.shape != Bm.shape or Am.ndim != 2:
        raise ValueError(
            f"A and B must share an m x n shape, got {Am.shape} and {Bm.shape}")
    Th = as_hermitian(T)
    if Th.dim != Am.shape[0]:
        raise ValueError(
            f"T must be {Am.shape[0]} square to match the pair, got {Th.dim}")
    return Am, Bm, Th


def check_jensen_isometry(f: ScalarAtom, A, B, T,
                          tol: float = 1e-8) -> LoewnerVerdict:
    """f(A*TA + B*TB) <= A*f(T)A + B*f(T)B for an isometry column pair."""
    Am, Bm, Th = _jensen_operands(A, B, T)
    n = Am.shape[1]
    gram = Am.conj().T @ Am + Bm.conj().T @ Bm
    defect = float(np.max(np.abs(gram - np.eye(n))))
    if defect > HYPOTHESIS_TOL:
        raise HypothesisViolation(
            f"A*A + B*B deviates from the identity by {defect:.3e}")
    return _jensen_verdict(f, Am, Bm, Th, tol)


def check_jensen_contractive(f: ScalarAtom, A, B, T,
                             tol: float = 1e-8) -> LoewnerVerdict:
    """The same inequality under A*A + B*B <= I, for atoms with f(0) <= 0.

    The contraction dilates to an isometry only by padding with zero
    blocks, which inject f(0) into the right-hand side; without f(0) <= 0
    the inequality is simply false (constant atoms break it).
    """
    if not f.f0_nonpositive:
        raise HypothesisViolation(
            f"atom {f.label} lacks f(0) <= 0; the contractive inequality "
            f"needs it because dilating A, B to an isometry pads with zero "
            f"blocks whose contribution is f(0)")
    Am, Bm, Th = _jensen_operands(A, B, T)
    n = Am.shape[1]
    gram = Am.conj().T @ Am + Bm.conj().T @ Bm
    slack = float(np.linalg.eigvalsh(np.eye(n) - gram)[0])
    if slack < -HYPOTHESIS_TOL:
        raise HypothesisViolation(
            f"A*A + B*B exceeds the identity by {-slack:.3e}")
    return _jensen_verdict(f, Am, Bm, Th, tol)


def _check_c(c: float) -> float:
    c = float(c)
    if not 0.0 <= c <= 1.0:
        raise HypothesisViolation(f"mixing weight must be in [0, 1], got {c}")
    return c


def check_perspective_joint_convexity(f: ScalarAtom, pair1: CommutingPair,
                                      pair2: CommutingPair, c: float,
                                      tol: float = 1e-8,
                                      floor: float = DEFAULT_FLOOR
                                      ) -> LoewnerVerdict:
    """g(cL1+(1-c)L2, cR1+(1-c)R2) <= c g(L1,R1) + (1-c) g(L2,R2).

    Endpoints go through the eigen path; the combination generally fails
    to commute and goes through the symmetrized path.
    """
    c = _check_c(c)
    if pair1.dim != pair2.dim:
        raise ValueError(f"dimension mismatch: {pair1.dim} vs {pair2.dim}")
    if not f.operator_convex:
        raise HypothesisViolation(f"atom {f.label} is not matrix convex")
    g1 = perspective_eigen(f, pair1)
    g2 = perspective_eigen(f, pair2)
    L = c * pair1.left.mat + (1.0 - c) * pair2.left.mat
    R = c * pair1.right.mat + (1.0 - c) * pair2.right.mat
    combo = perspective_symmetrized(f, L, R, floor=floor)
    mix = HermitianMatrix(c * g1.mat + (1.0 - c) * g2.mat)
    return loewner_leq(combo, mix, tol)


def check_extended_perspective_joint_convexity(f: ScalarAtom, h: ScalarAtom,
                                   pair1: CommutingPair, pair2: CommutingPair,
                                   c: float, tol: float = 1e-8,
                                   floor: float = DEFAULT_FLOOR
                                   ) -> LoewnerVerdict:
    """Joint convexity of the extended perspective f(L/h(R))h(R)."""
    c = _check_c(c)
    if pair1.dim != pair2.dim:
        raise ValueError(f"dimension mismatch: {pair1.dim} vs {pair2.dim}")
    g1 = extended_perspective_eigen(f, h, pair1)
    g2 = extended_perspective_eigen(f, h, pair2)
    L = c * pair1.left.mat + (1.0 - c) * pair2.left.mat
    R = c * pair1.right.mat + (1.0 - c) * pair2.right.mat
    combo = extended_perspective_symmetrized(f, h, L, R, floor=floor)
    mix = HermitianMatrix(c * g1.mat + (1.0 - c) * g2.mat)
    return loewner_leq(combo, mix, tol)


def _density_operand(name: str, x) -> HermitianMatrix:
    H = x.matrix if isinstance(x, DensityMatrix) else as_hermitian(x)
    tr = float(np.real(np.trace(H.mat)))
    if abs(tr - 1.0) > HYPOTHESIS_TOL:
        raise HypothesisViolation(f"{name} must have unit trace, got {tr!r}")
    return H


def check_relative_entropy_joint_convexity(rho1, sigma1, rho2, sigma2,
                                           c: float, tol: float = 1e-8
                                           ) -> LoewnerVerdict:
    """c S(r1||s1) + (1-c) S(r2||s2) >= S(c r1+(1-c)r2 || c s1+(1-c)s2)."""
    c = _check_c(c)
    r1 = _density_operand("rho1", rho1)
    s1 = _density_operand("sigma1", sigma1)
    r2 = _density_operand("rho2", rho2)
    s2 = _density_operand("sigma2", sigma2)
    mixture = (c * quantum_relative_entropy_direct(r1, s1)
               + (1.0 - c) * quantum_relative_entropy_direct(r2, s2))
    combo = quantum_relative_entropy_direct(
        HermitianMatrix(c * r1.mat + (1.0 - c) * r2.mat),
        HermitianMatrix(c * s1.mat + (1.0 - c) * s2.mat))
    return scalar_geq(mixture, combo, tol)


def check_lieb_concavity(A1, B1, A2, B2, K, s: float, c: float,
                         tol: float = 1e-8) -> LoewnerVerdict:
    """Joint concavity of Tr(A^s K* B^(1-s) K) in (A, B)."""
    c = _check_c(c)
    v1 = lieb_functional(A1, B1, K, s)
    v2 = lieb_functional(A2, B2, K, s)
    Am = c * as_hermitian(A1).mat + (1.0 - c) * as_hermitian(A2).mat
    Bm = c * as_hermitian(B1).mat + (1.0 - c) * as_hermitian(B2).mat
    combo = lieb_functional(HermitianMatrix(Am), HermitianMatrix(Bm), K, s)
    return scalar_geq(combo, c * v1 + (1.0 - c) * v2, tol)


def check_lieb_pq_concavity(A1, B1, A2, B2, X, p: float, q: float, c: float,
                            tol: float = 1e-8) -> LoewnerVerdict:
    """Joint concavity of Tr(A^q X* B^p X) for p, q > 0, p + q <= 1."""
    c = _check_c(c)
    v1 = lieb_pq_functional(A1, B1, X, p, q)
    v2 = lieb_pq_functional(A2, B2, X, p, q)
    Am = c * as_hermitian(A1).mat + (1.0 - c) * as_hermitian(A2).mat
    Bm = c * as_hermitian(B1).mat + (1.0 - c) * as_hermitian(B2).mat
    combo = lieb_pq_functional(HermitianMatrix(Am), HermitianMatrix(Bm),
                               X, p, q)
    return scalar_geq(combo, c * v1 + (1.0 - c) * v2, tol)


def check_classical_perspective_convexity(f: ScalarAtom, x1: float, t1: float,
                                          x2: float, t2: float, c: float,
                                          tol: float = 1e-8) -> LoewnerVerdict:
    """Scalar joint convexity of g(x, t) = f(x/t) t."""
    c = _check_c(c)
    if t1 <= 0.0 or t2 <= 0.0:
        raise HypothesisViolation(
            f"perspective bases must be positive, got {t1} and {t2}")
    g1 = float(classical_perspective(f, x1, t1)[0])
    g2 = float(classical_perspective(f, x2, t2)[0])
    combo = float(classical_perspective(
        f, c * x1 + (1.0 - c) * x2, c * t1 + (1.0 - c) * t2)[0])
    return scalar_geq(c * g1 + (1.0 - c) * g2, combo, tol)


# ---------------------------------------------------------------------------
# per-theorem trials

def _scalar_in_domain(f: ScalarAtom, rng) -> float:
    if f.domain.lo >= 0.0:
        return float(np.exp(rng.uniform(np.log(SPECTRUM_LO),
                                        np.log(SPECTRUM_HI))))
    return float(rng.uniform(-REAL_BOUND, REAL_BOUND))


def _pair_witness(tag: str, pair: CommutingPair) -> dict:
    return {f"L{tag}": matrix_to_json(pair.left.mat),
            f"R{tag}": matrix_to_json(pair.right.mat)}


def _trial_hp(cfg: TrialConfig, rng, c):
    f = cfg.resolve_atom()
    A, B = random_isometry_pair(cfg.dim_m, cfg.dim_n, rng)
    T = random_hermitian_in_domain(f, cfg.dim_m, rng)
    verdict = check_jensen_isometry(f, A, B, T, cfg.tol)
    witness = {"atom": f.label, "A": matrix_to_json(A),
               "B": matrix_to_json(B), "T": matrix_to_json(T.mat)}
    return verdict, witness


def _trial_hp_contractive(cfg: TrialConfig, rng, c):
    f = cfg.resolve_atom()
    A, B = random_contraction_pair(cfg.dim_m, cfg.dim_n, rng, cfg.shrink)
    T = random_hermitian_in_domain(f, cfg.dim_m, rng)
    verdict = check_jensen_contractive(f, A, B, T, cfg.tol)
    witness = {"atom": f.label, "A": matrix_to_json(A),
               "B": matrix_to_json(B), "T": matrix_to_json(T.mat)}
    return verdict, witness


def _trial_perspective(cfg: TrialConfig, rng, c):
    f = cfg.resolve_atom()
    pair1 = random_commuting_pair(cfg.dim_n, rng, cfg.floor)
    pair2 = random_commuting_pair(cfg.dim_n, rng, cfg.floor)
    verdict = check_perspective_joint_convexity(f, pair1, pair2, c, cfg.tol,
                                                floor=cfg.floor)
    witness = {"atom": f.label}
    witness.update(_pair_witness("1", pair1))
    witness.update(_pair_witness("2", pair2))
    return verdict, witness


def _trial_marechal(cfg: TrialConfig, rng, c):
    f = cfg.resolve_atom()
    h = lookup_atom("power", cfg.t)
    pair1 = random_commuting_pair(cfg.dim_n, rng, cfg.floor)
    pair2 = random_commuting_pair(cfg.dim_n, rng, cfg.floor)
    verdict = check_extended_perspective_joint_convexity(f, h, pair1, pair2, c, cfg.tol,
                                             floor=cfg.floor)
    witness = {"atom": f.label, "h": h.label}
    witness.update(_pair_witness("1", pair1))
    witness.update(_pair_witness("2", pair2))
    return verdict, witness


def _trial_rel_entropy(cfg: TrialConfig, rng, c):
    rho1 = random_density(cfg.dim_n, rng, cfg.floor)
    sigma1 = random_density(cfg.dim_n, rng, cfg.floor)
    rho2 = random_density(cfg.dim_n, rng, cfg.floor)
    sigma2 = random_density(cfg.dim_n, rng, cfg.floor)
    verdict = check_relative_entropy_joint_convexity(
        rho1, sigma1, rho2, sigma2, c, cfg.tol)
    witness = {"rho1": matrix_to_json(rho1.mat),
               "sigma1": matrix_to_json(sigma1.mat),
               "rho2": matrix_to_json(rho2.mat),
               "sigma2": matrix_to_json(sigma2.mat)}
    return verdict, witness


def _trial_lieb_s(cfg: TrialConfig, rng, c):
    n = cfg.dim_n
    A1 = random_positive_matrix(n, rng, cfg.floor)
    B1 = random_positive_matrix(n, rng, cfg.floor)
    A2 = random_positive_matrix(n, rng, cfg.floor)
    B2 = random_positive_matrix(n, rng, cfg.floor)
    K = _complex_gaussian(rng, n, n)
    verdict = check_lieb_concavity(A1, B1, A2, B2, K, cfg.s, c, cfg.tol)
    witness = {"s": cfg.s,
               "A1": matrix_to_json(A1.mat), "B1": matrix_to_json(B1.mat),
               "A2": matrix_to_json(A2.mat), "B2": matrix_to_json(B2.mat),
               "K": matrix_to_json(K)}
    return verdict, witness


def _trial_lieb_pq(cfg: TrialConfig, rng, c):
    n = cfg.dim_n
    A1 = random_positive_matrix(n, rng, cfg.floor)
    B1 = random_positive_matrix(n, rng, cfg.floor)
    A2 = random_positive_matrix(n, rng, cfg.floor)
    B2 = random_positive_matrix(n, rng, cfg.floor)
    X = _complex_gaussian(rng, n, n)
    verdict = check_lieb_pq_concavity(A1, B1, A2, B2, X, cfg.p, cfg.q, c,
                                      cfg.tol)
    witness = {"p": cfg.p, "q": cfg.q,
               "A1": matrix_to_json(A1.mat), "B1": matrix_to_json(B1.mat),
               "A2": matrix_to_json(A2.mat), "B2": matrix_to_json(B2.mat),
               "X": matrix_to_json(X)}
    return verdict, witness


def _trial_classical(cfg: TrialConfig, rng, c):
    f = cfg.resolve_atom()
    x1 = _scalar_in_domain(f, rng)
    t1 = float(np.exp(rng.uniform(np.log(SPECTRUM_LO), np.log(SPECTRUM_HI))))
    x2 = _scalar_in_domain(f, rng)
    t2 = float(np.exp(rng.uniform(np.log(SPECTRUM_LO), np.log(SPECTRUM_HI))))
    verdict = check_classical_perspective_convexity(f, x1, t1, x2, t2, c,
                                                    cfg.tol)
    witness = {"atom": f.label, "x1": x1, "t1": t1, "x2": x2, "t2": t2}
    return verdict, witness


_TRIALS = {
    "hp": _trial_hp,
    "hp-contractive": _trial_hp_contractive,
    "perspective": _trial_perspective,
    "marechal": _trial_marechal,
    "rel-entropy-convexity": _trial_rel_entropy,
    "lieb-s": _trial_lieb_s,
    "lieb-pq": _trial_lieb_pq,
    "classical": _trial_classical,
}

# Tags whose inequality involves a mixing weight c.
_USES_C = frozenset(("perspective", "marechal", "rel-entropy-convexity",
                     "lieb-s", "lieb-pq", "classical"))


def trial_seed(seed: int, theorem: str, index: int, redraw: int = 0) -> int:
    """Stable per-trial sub-seed; see SEED_RULE."""
    msg = f"{seed}:{theorem}:{index}:{redraw}".encode()
    return int.from_bytes(hashlib.sha256(msg).digest()[:8], "little")


def run_single(theorem: str, cfg: TrialConfig, index: int, redraw: int = 0):
    """One trial at explicit (index, redraw) coordinates.

    Domain violations propagate to the caller; this is the replay entry
    point, so a witness's recorded coordinates reproduce its slack exactly.
    """
    if theorem not in _TRIALS:
        raise ValueError(f"unknown theorem tag {theorem!r}")
    ts = trial_seed(cfg.seed, theorem, index, redraw)
    rng = np.random.default_rng(ts)
    c = None
    if theorem in _USES_C:
        if cfg.force_endpoints and index < 3:
            c = (0.0, 0.5, 1.0)[index]
        else:
            c = float(rng.random())
    verdict, witness = _TRIALS[theorem](cfg, rng, c)
    if c is not None:
        witness["c"] = c
    witness.update({"trial_index": index, "redraw": redraw, "trial_seed": ts,
                    "seed_rule": SEED_RULE})
    return verdict, witness


def run_trial(theorem: str, cfg: TrialConfig, index: int):
    """One trial with redraws: rejected (out-of-domain) draws advance the
    redraw counter instead of counting as failures."""
    for redraw in range(MAX_REDRAWS + 1):
        try:
            return run_single(theorem, cfg, index, redraw)
        except DomainViolation:
            continue
    raise HypothesisViolation(
        f"trial {index} of {theorem!r} exceeded {MAX_REDRAWS} redraws; "
        f"the generator cannot satisfy the theorem's domain")


def _validate_for_tag(cfg: TrialConfig, tag: str) -> None:
    if tag not in _TRIALS:
        raise ValueError(f"unknown theorem tag {tag!r}")
    if tag in ("hp", "hp-contractive") and 2 * cfg.dim_m < cfg.dim_n:
        raise ValueError(
            f"no isometry pair exists for dim_m={cfg.dim_m}, "
            f"dim_n={cfg.dim_n}: need 2m >= n")
    atom = cfg.resolve_atom()
    if tag == "hp-contractive" and not atom.f0_nonpositive:
        raise HypothesisViolation(
            f"atom {atom.label} lacks f(0) <= 0 and cannot satisfy the "
            f"contractive inequality's hypothesis")
    if tag in ("perspective", "marechal") and not atom.operator_convex:
        raise HypothesisViolation(
            f"atom {atom.label} is not matrix convex; its perspective is "
            f"not jointly convex")
    if tag == "marechal" and not atom.f0_nonpositive:
        raise HypothesisViolation(
            f"atom {atom.label} lacks f(0) <= 0, required for the extended "
            f"perspective")
    if tag == "classical" and atom.operator_concave and not atom.operator_convex:
        raise HypothesisViolation(
            f"atom {atom.label} is concave; its scalar perspective is "
            f"jointly concave, not convex")
    if tag == "lieb-pq":
        # Exercise the exponent validation before any trial runs.
        if not (0.0 < cfg.q <= 1.0):
            raise HypothesisViolation(
                f"q must satisfy 0 < q <= 1, got {cfg.q}")
        if cfg.q == 1.0:
            if cfg.p != 0.0:
                raise HypothesisViolation(
                    f"p + q <= 1 with q = 1 forces p = 0, got p = {cfg.p}")
        elif cfg.p <= 0.0 or cfg.p + cfg.q > 1.0 + 1e-12:
            raise HypothesisViolation(
                f"exponents must satisfy p, q > 0 and p + q <= 1, "
                f"got ({cfg.p}, {cfg.q})")


def run_campaign(cfg: TrialConfig, theorems, workers: int = 1) -> list:
    """Run the selected theorem campaigns and aggregate reports.

    The worst witness is the trial with the most negative slack, ties
    broken by the lower trial index, so parallel and serial execution
    produce identical reports.
    """
    if isinstance(theorems, str):
        theorems = (theorems,)
    tags = tuple(theorems)
    if len(set(tags)) != len(tags):
        raise ValueError("duplicate theorem tags in selection")
    cfg.validate()
    for tag in tags:
        _validate_for_tag(cfg, tag)
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")

    reports = []
    for tag in tags:
        if workers == 1:
            outcomes = [run_trial(tag, cfg, i) for i in range(cfg.trials)]
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                outcomes = list(pool.map(
                    lambda i: run_trial(tag, cfg, i), range(cfg.trials)))
        failures = sum(1 for verdict, _ in outcomes if not verdict.holds)
        worst_index = min(range(len(outcomes)),
                          key=lambda i: (outcomes[i][0].slack, i))
        worst_verdict, worst_witness = outcomes[worst_index]
        reports.append(CheckReport(
            theorem=tag, trials=cfg.trials, failures=failures,
            worst_slack=float(worst_verdict.slack), tolerance=cfg.tol,
            witness=worst_witness, config=cfg.fingerprint()))
    return reports
