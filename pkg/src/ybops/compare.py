"""Comparison of the twisted one-parameter R-matrix with the Okado/Perk-type
braid matrix (single-parameter specialisation, all extra parameters set to 1).

Both 4x4 families satisfy the braid equation under multiplicative parameter
composition; at q=1 their closeness is reported, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UnknownFamilyError
from .onepar import prop1_op
from .algebra import quadratic_algebra
from .scalars import format_scalar, rational
from .tensorop import Op2, freeze, mat_sub, max_abs_entry, twist_compose


def okado_rhat(q, x) -> Op2:
    """The 4x4 braid matrix of the U_{q,Q}(sl2-hat) specialisation."""
    q, x = rational(q), rational(x)
    mat = [
        [q * q * x - 1, 0, 0, 0],
        [0, q * q - 1, q * (x - 1), 0],
        [0, q * (x - 1), (q * q - 1) * x, 0],
        [0, 0, 0, q * q * x - 1],
    ]
    return Op2(n=2, mat=freeze([[Fraction(e) for e in row] for row in mat]))


def twisted_prop1_rhat(q, sigma, x) -> Op2:
    """Twist-composed one-parameter matrix: tau times the prop1 matrix."""
    A = quadratic_algebra(sigma)
    return twist_compose(prop1_op(A, rational(q), rational(x)))


@dataclass(frozen=True)
class BraidFamily:
    """Evaluator x -> 4x4 braid matrix; kinds: okado(q), twisted_prop1(q, sigma)."""

    kind: str
    q: object
    sigma: object = Fraction(0)

    def __post_init__(self):
        if self.kind not in ("okado", "twisted_prop1"):
            raise UnknownFamilyError(f"unknown braid family {self.kind!r}")

    def __call__(self, x) -> Op2:
        if self.kind == "okado":
            return okado_rhat(self.q, x)
        return twisted_prop1_rhat(self.q, self.sigma, x)


def compare_q1(xs=(1, 2, 3)) -> dict:
    """Evaluate both families at q=1, sigma=0 and report their difference.

    Verdict per sample: identical / proportional / differ, decided by the
    exact difference matrix; nothing is reconciled silently.
    """
    report = {"q": "1", "sigma": "0", "samples": []}
    for x in xs:
        x = rational(x)
        ok = okado_rhat(1, x)
        tw = twisted_prop1_rhat(1, 0, x)
        diff = mat_sub(ok.mat, tw.mat)
        if max_abs_entry(diff) == 0:
            verdict = "identical"
        elif _proportional(ok.mat, tw.mat):
            verdict = "proportional"
        else:
            verdict = "differ"
        report["samples"].append({
            "x": format_scalar(x),
            "okado": [[format_scalar(e) for e in row] for row in ok.mat],
            "twisted_prop1": [[format_scalar(e) for e in row] for row in tw.mat],
            "difference": [[format_scalar(e) for e in row] for row in diff],
            "verdict": verdict,
        })
    return report


def _proportional(A, B):
    ratio = None
    for ra, rb in zip(A, B):
        for a, b in zip(ra, rb):
            if a == 0 and b == 0:
                continue
            if a == 0 or b == 0:
                return False
            r = Fraction(a) / Fraction(b)
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
    return True
