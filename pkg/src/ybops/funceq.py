"""The functional-equation systems behind the ansatz operators.

The coloured system (five equations in alpha, beta, gamma as functions of two
colours) and its one-parameter counterpart (arguments x, z and phi(x,z)).
Every catalogue family's coefficient triple solves the matching system
identically; each equation is homogeneous of degree three in the triple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .colored import scalar_pow
from .errors import UnknownFamilyError


@dataclass(frozen=True)
class CoeffTriple:
    """The scalar coefficient functions of an ansatz operator.

    ``arity`` is 2 for coloured triples (functions of two colours) and 1 for
    one-parameter triples, which also carry their composition map ``phi``.
    """

    alpha: Callable
    beta: Callable
    gamma: Callable
    arity: int = 2
    phi: Optional[Callable] = None
    label: str = ""


def scale_triple(T: CoeffTriple, c) -> CoeffTriple:
    return CoeffTriple(alpha=lambda *a: c * T.alpha(*a),
                       beta=lambda *a: c * T.beta(*a),
                       gamma=lambda *a: c * T.gamma(*a),
                       arity=T.arity, phi=T.phi,
                       label=f"{c}*({T.label})")


def _system(a_uv, b_uv, g_uv, a_uw, b_uw, g_uw, a_vw, b_vw, g_vw):
    """The five cubic equations shared by both systems.

    The one-parameter system is the same polynomial system with the argument
    substitution (u,v) -> x, (u,w) -> phi(x,z), (v,w) -> z.
    """
    e1 = ((b_vw - g_vw) * (a_uv * b_uw - a_uw * b_uv)
          + (a_uv - g_uv) * (a_vw * b_uw - a_uw * b_vw))
    e2 = (b_vw * (b_uv - g_uv) * (a_uw - g_uw)
          + (a_vw - g_vw) * (b_uw * g_uv - b_uv * g_uw))
    e3 = (a_uv * b_vw * (a_uw - g_uw) + a_vw * g_uw * (g_uv - a_uv)
          + g_vw * (a_uv * g_uw - a_uw * g_uv))
    e4 = (a_uv * b_vw * (b_uw - g_uw) + b_vw * g_uw * (g_uv - b_uv)
          + g_vw * (b_uv * g_uw - b_uw * g_uv))
    e5 = (a_uv * (a_vw - g_vw) * (b_uw - g_uw)
          + (b_uv - g_uv) * (a_uw * g_vw - a_vw * g_uw))
    return (e1, e2, e3, e4, e5)


def eval_colored_system(T: CoeffTriple, u, v, w) -> tuple:
    """The five coloured-system residuals at colours (u, v, w)."""
    if T.arity != 2:
        raise ValueError("coloured system needs a two-colour triple")
    return _system(T.alpha(u, v), T.beta(u, v), T.gamma(u, v),
                   T.alpha(u, w), T.beta(u, w), T.gamma(u, w),
                   T.alpha(v, w), T.beta(v, w), T.gamma(v, w))


def eval_onepar_system(T: CoeffTriple, x, z, phi: Optional[Callable] = None) -> tuple:
    """The five one-parameter residuals at (x, z) with middle argument phi(x,z)."""
    if T.arity != 1:
        raise ValueError("one-parameter system needs a one-colour triple")
    phi = phi if phi is not None else T.phi
    if phi is None:
        raise ValueError("no composition map phi given")
    m = phi(x, z)
    return _system(T.alpha(x), T.beta(x), T.gamma(x),
                   T.alpha(m), T.beta(m), T.gamma(m),
                   T.alpha(z), T.beta(z), T.gamma(z))


# --- catalogue of known solutions ----------------------------------------------

def catalogue(kind: str, **params) -> CoeffTriple:
    """Coefficient triples of the known solution families.

    Coloured kinds: thm1(p,q), thm2(p,q,s), remark2(p,q,s).
    One-parameter kinds: prop1(q) with phi=x*z, prop2 with phi=z,
    remark_x with phi=x.
    """
    if kind == "thm1":
        p, q = params["p"], params["q"]
        return CoeffTriple(lambda u, v: p * (u - v),
                           lambda u, v: q * (u - v),
                           lambda u, v: p * u - q * v,
                           arity=2, label=f"thm1(p={p},q={q})")
    if kind == "thm2":
        p, q, s = params["p"], params["q"], params["s"]
        return CoeffTriple(lambda u, v: scalar_pow(p, u) * scalar_pow(q, v),
                           lambda u, v: scalar_pow(p, u) * scalar_pow(s, v),
                           lambda u, v: scalar_pow(p, u) * scalar_pow(s, v),
                           arity=2, label=f"thm2(p={p},q={q},s={s})")
    if kind == "remark2":
        p, q, s = params["p"], params["q"], params["s"]
        return CoeffTriple(lambda u, v: scalar_pow(p, u) * scalar_pow(q, v),
                           lambda u, v: scalar_pow(s, u) * scalar_pow(q, v),
                           lambda u, v: scalar_pow(p, u) * scalar_pow(q, v),
                           arity=2, label=f"remark2(p={p},q={q},s={s})")
    if kind == "prop1":
        q = params["q"]
        return CoeffTriple(lambda x: x - 1,
                           lambda x: q * (x - 1),
                           lambda x: x - q,
                           arity=1, phi=lambda x, z: x * z,
                           label=f"prop1(q={q})")
    if kind == "prop2":
        one = Fraction(1)
        return CoeffTriple(lambda x: x, lambda x: one, lambda x: one,
                           arity=1, phi=lambda x, z: z, label="prop2")
    if kind == "remark_x":
        one = Fraction(1)
        return CoeffTriple(lambda x: one, lambda x: x, lambda x: one,
                           arity=1, phi=lambda x, z: x, label="remark_x")
    raise UnknownFamilyError(f"unknown catalogue kind {kind!r}")


# --- parametric ansatz triples for the search -----------------------------------

def linear_colored_triple(params) -> CoeffTriple:
    """alpha = p*u - p'*v, beta = q*u - q'*v, gamma = r*u - r'*v."""
    p, pp, q, qp, r, rp = params
    return CoeffTriple(lambda u, v: p * u - pp * v,
                       lambda u, v: q * u - qp * v,
                       lambda u, v: r * u - rp * v,
                       arity=2, label="linear")


def exp_colored_triple(params) -> CoeffTriple:
    """alpha = p^u q^v, beta = a^u b^v, gamma = c^u d^v (positive bases)."""
    p, q, a, b, c, d = params
    return CoeffTriple(lambda u, v: scalar_pow(p, u) * scalar_pow(q, v),
                       lambda u, v: scalar_pow(a, u) * scalar_pow(b, v),
                       lambda u, v: scalar_pow(c, u) * scalar_pow(d, v),
                       arity=2, label="exponential")


_PHI_SHAPES = {
    "xz": lambda x, z: x * z,
    "z": lambda x, z: z,
    "x": lambda x, z: x,
}


def linear_onepar_triple(params, phi_shape: str = "xz") -> CoeffTriple:
    """alpha = p*x - p', beta = q*x - q', gamma = r*x - r'."""
    p, pp, q, qp, r, rp = params
    if phi_shape not in _PHI_SHAPES:
        raise UnknownFamilyError(f"unknown phi shape {phi_shape!r}")
    return CoeffTriple(lambda x: p * x - pp,
                       lambda x: q * x - qp,
                       lambda x: r * x - rp,
                       arity=1, phi=_PHI_SHAPES[phi_shape],
                       label=f"linear/phi={phi_shape}")
