"""Registry of scalar functions with operator-convexity metadata.

Every matrix inequality in this package is driven by a small catalogue of
scalar functions ("atoms"): the operator convex functions whose perspectives
are jointly convex, the operator concave re-weightings used by the extended
perspective, and one deliberately non-matrix-convex control. Each atom
carries its domain and the flags the checkers gate on, so a caller can never
accidentally run a convexity theorem with a function that does not satisfy
its hypotheses.

All atoms use the natural logarithm.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainViolation

# Width of the clamp window at closed interval endpoints. Floating-point
# eigenvalues of a PSD matrix can land at -1e-16; values within this
# tolerance of a closed endpoint are clamped onto it instead of rejected.
ENDPOINT_TOL = 1e-10


@dataclass(frozen=True)
class Interval:
    """A real interval with independently open or closed endpoints."""

    lo: float
    hi: float
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def clamp(self, values, tol: float = ENDPOINT_TOL) -> np.ndarray:
        """Validate ``values`` against the interval and clamp endpoint noise.

        Values within ``tol`` of a closed endpoint are moved onto it; values
        beyond that, or at/past an open endpoint, raise ``DomainViolation``
        naming the offending value.
        """
        x = np.atleast_1d(np.asarray(values, dtype=float)).copy()
        if self.lo_closed:
            bad = x < self.lo - tol
        else:
            bad = x <= self.lo
        if self.hi_closed:
            bad |= x > self.hi + tol
        else:
            bad |= x >= self.hi
        if np.any(bad):
            offender = float(x[bad][0])
            raise DomainViolation(
                f"value {offender!r} outside domain {self.describe()}")
        if self.lo_closed and np.isfinite(self.lo):
            x[x < self.lo] = self.lo
        if self.hi_closed and np.isfinite(self.hi):
            x[x > self.hi] = self.hi
        return x

    def describe(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        lo = "-inf" if self.lo == -np.inf else f"{self.lo:g}"
        hi = "inf" if self.hi == np.inf else f"{self.hi:g}"
        return f"{left}{lo}, {hi}{right}"


@dataclass(frozen=True)
class ScalarAtom:
    """A scalar function together with the metadata the theorems consume.

    Attributes
    ----------
    name : str
        Family name as registered (``"xlogx"``, ``"neg_power"``, ...).
    parameter : float or None
        Family parameter, ``None`` for parameterless atoms.
    domain : Interval
        Where the function is defined; functional calculus validates every
        eigenvalue against it.
    operator_convex, operator_concave : bool
        Matrix convexity flags. Both are set only for affine atoms.
    f0_nonpositive : bool
        Whether f(0) <= 0, by continuous extension where 0 is not interior.
        Required by the contractive Jensen inequality and the extended
        perspective.
    strictly_positive_required : bool
        True when the domain excludes 0 from the left (open at 0).
    """

    name: str
    parameter: float | None
    domain: Interval
    operator_convex: bool
    operator_concave: bool
    f0_nonpositive: bool
    strictly_positive_required: bool
    fn: Callable[[np.ndarray], np.ndarray] = field(repr=False, compare=False)

    def __call__(self, x):
        """Evaluate without domain checks (callers clamp first)."""
        return self.fn(np.asarray(x, dtype=float))

    @property
    def label(self) -> str:
        if self.parameter is None:
            return self.name
        return f"{self.name}({self.parameter:g})"


def eval_atom(f: ScalarAtom, x: float) -> float:
    """Evaluate ``f`` at a scalar point with domain validation."""
    clamped = f.domain.clamp(x)
    return float(f(clamped)[0])


def _xlogx(x):
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = x[pos] * np.log(x[pos])
    return out


_REAL_LINE = Interval(-np.inf, np.inf, lo_closed=False, hi_closed=False)
_HALF_OPEN = Interval(0.0, np.inf, lo_closed=True, hi_closed=False)
_POSITIVE = Interval(0.0, np.inf, lo_closed=False, hi_closed=False)


def _make_xlogx(parameter):
    _reject_parameter("xlogx", parameter)
    return ScalarAtom("xlogx", None, _HALF_OPEN,
                      operator_convex=True, operator_concave=False,
                      f0_nonpositive=True, strictly_positive_required=False,
                      fn=_xlogx)


def _make_neg_power(parameter):
    s = _require_parameter("neg_power", parameter)
    if not 0.0 < s < 1.0:
        raise ValueError(f"neg_power parameter must satisfy 0 < s < 1, got {s}")
    return ScalarAtom("neg_power", s, _HALF_OPEN,
                      operator_convex=True, operator_concave=False,
                      f0_nonpositive=True, strictly_positive_required=False,
                      fn=lambda x: -np.power(x, s))


def _make_power(parameter):
    t = _require_parameter("power", parameter)
    if not 0.0 < t <= 1.0:
        raise ValueError(f"power parameter must satisfy 0 < t <= 1, got {t}")
    # t = 1 is affine (the identity on the positive axis), hence also convex.
    return ScalarAtom("power", t, _POSITIVE,
                      operator_convex=(t == 1.0), operator_concave=True,
                      f0_nonpositive=True, strictly_positive_required=True,
                      fn=lambda x: np.power(x, t))


def _make_neg_log(parameter):
    _reject_parameter("neg_log", parameter)
    return ScalarAtom("neg_log", None, _POSITIVE,
                      operator_convex=True, operator_concave=False,
                      f0_nonpositive=False, strictly_positive_required=True,
                      fn=lambda x: -np.log(x))


def _make_square(parameter):
    _reject_parameter("square", parameter)
    return ScalarAtom("square", None, _REAL_LINE,
                      operator_convex=True, operator_concave=False,
                      f0_nonpositive=True, strictly_positive_required=False,
                      fn=lambda x: x * x)


def _make_identity(parameter):
    _reject_parameter("identity", parameter)
    return ScalarAtom("identity", None, _REAL_LINE,
                      operator_convex=True, operator_concave=True,
                      f0_nonpositive=True, strictly_positive_required=False,
                      fn=lambda x: x)


def _make_constant(parameter):
    c = _require_parameter("constant", parameter)
    return ScalarAtom("constant", c, _REAL_LINE,
                      operator_convex=True, operator_concave=True,
                      f0_nonpositive=(c <= 0.0), strictly_positive_required=False,
                      fn=lambda x: np.full_like(x, c))


def _make_quartic(parameter):
    # Classically convex but not matrix convex: the negative control that
    # proves the harness can actually fail.
    _reject_parameter("quartic", parameter)
    return ScalarAtom("quartic", None, _REAL_LINE,
                      operator_convex=False, operator_concave=False,
                      f0_nonpositive=True, strictly_positive_required=False,
                      fn=lambda x: x ** 4)


def _require_parameter(name, parameter):
    if parameter is None:
        raise ValueError(f"atom {name!r} requires a parameter")
    return float(parameter)


def _reject_parameter(name, parameter):
    if parameter is not None:
        raise ValueError(f"atom {name!r} takes no parameter, got {parameter}")


_REGISTRY: dict[str, Callable[[float | None], ScalarAtom]] = {
    "xlogx": _make_xlogx,
    "neg_power": _make_neg_power,
    "power": _make_power,
    "neg_log": _make_neg_log,
    "square": _make_square,
    "identity": _make_identity,
    "constant": _make_constant,
    "quartic": _make_quartic,
}

# Parameter range documentation for listings.
_PARAM_DOC = {
    "xlogx": None,
    "neg_power": "0 < s < 1",
    "power": "0 < t <= 1",
    "neg_log": None,
    "square": None,
    "identity": None,
    "constant": "any real c",
    "quartic": None,
}


def lookup_atom(name: str, parameter: float | None = None) -> ScalarAtom:
    """Build the registered atom ``name``, validating its parameter."""
    try:
        factory = _REGISTRY[name]
    except KeyError:
        known = ", ".join(sorted(_REGISTRY))
        raise ValueError(f"unknown atom {name!r}; known atoms: {known}") from None
    return factory(parameter)


def atom_names() -> tuple[str, ...]:
    return tuple(sorted(_REGISTRY))


def list_atoms() -> list[dict]:
    """Metadata rows for every registered family (sample parameters where needed)."""
    samples = {"neg_power": 0.5, "power": 0.5, "constant": 1.0}
    rows = []
    for name in atom_names():
        atom = lookup_atom(name, samples.get(name))
        rows.append({
            "name": name,
            "parameter": _PARAM_DOC[name],
            "domain": atom.domain.describe(),
            "operator_convex": atom.operator_convex,
            "operator_concave": atom.operator_concave,
            "f0_nonpositive": atom.f0_nonpositive,
            "strictly_positive_required": atom.strictly_positive_required,
        })
    return rows
