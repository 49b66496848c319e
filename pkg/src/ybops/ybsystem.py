"""WXZ Yang-Baxter systems built from an associative algebra.

A WXZ-system is a triple of two-site operators with vanishing Yang-Baxter
commutators [W,W,W], [Z,Z,Z], [W,X,X], [X,X,Z].  The construction takes
W with coefficients (lambda, 1, 1), Z with (1, mu, 1) and X the constant
operator (1, 1, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import Algebra, validate
from .colored import ansatz_op
from .errors import DimensionMismatchError, InvalidStructureError
from .tensorop import Op2, max_abs_entry, yb_commutator


@dataclass(frozen=True)
class WXZSystem:
    W: Op2
    X: Op2
    Z: Op2
    lam: Optional[object] = None  # provenance when built by thm3_system
    mu: Optional[object] = None

    def __post_init__(self):
        # the defining commutators only pair W with X and X with Z, but the
        # one-space construction used here keeps all three on one space
        if not (self.W.n == self.X.n == self.Z.n):
            raise DimensionMismatchError("W, X, Z must share a base dimension")


def thm3_system(A: Algebra, lam, mu) -> WXZSystem:
    """W(a(x)b) = lam 1(x)ab + ab(x)1 - b(x)a, Z = (1, mu, 1), X = (1, 1, 1)."""
    report = validate(A)
    if not report.ok:
        raise InvalidStructureError(
            f"not an associative unital algebra: {report.violations[0]}")
    return WXZSystem(W=ansatz_op(A, lam, 1, 1),
                     X=ansatz_op(A, 1, 1, 1),
                     Z=ansatz_op(A, 1, mu, 1),
                     lam=lam, mu=mu)


def wxz_residuals(S: WXZSystem) -> tuple:
    """Max-abs entries of [W,W,W], [Z,Z,Z], [W,X,X], [X,X,Z]; all zero for
    genuine systems."""
    return (max_abs_entry(yb_commutator(S.W, S.W, S.W).mat),
            max_abs_entry(yb_commutator(S.Z, S.Z, S.Z).mat),
            max_abs_entry(yb_commutator(S.W, S.X, S.X).mat),
            max_abs_entry(yb_commutator(S.X, S.X, S.Z).mat))
