"""Tensorial homotopy intersection forms and the kappa transcription.

``rho_theta`` is the symplectic-context form determined by a boundary-log
element Omega: ``(a - eps(a)) pf ((-Omega)^{-1} + omega s(Omega) omega) pf
(b - eps(b))``.  ``rho_std`` is its genus-0 specialization, whose middle
kernel equals the closed form of Y.  ``kappa_std`` transcribes

    kappa(u, v) = - sum (1 (x) v'') ((1 (x) antipode) coproduct(rho(u', v')) (1 (x) u'')

with Sweedler sums materialized by iterating coproduct terms.  On letters
this reproduces the K tensors with a definite sign that the cobracket
audit pins down (it is +K here).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .hopf import antipode, apply_series, coproduct, counit, s_series, z2_over_em1_series
from .pairing import (
    mt_inverse,
    mt_genus0,
    mt_symplectic,
    omega_series,
    theorem_y_rhs,
)
from .tensor import (
    GENUS0,
    SYMPLECTIC,
    AlgebraContext,
    MultiSeries,
    TensorSeries,
    concat_product,
    filtration_degree,
    outer,
)


@dataclass(frozen=True)
class OmegaElement:
    """A boundary-log element: omega plus terms of degree >= 3."""

    series: TensorSeries

    def __post_init__(self) -> None:
        s = self.series
        if s.ctx.mode != SYMPLECTIC:
            raise ValueError("malformed Omega: needs a symplectic context")
        if s.constant_term or s.degree_part(1):
            raise ValueError("malformed Omega: nonzero part below degree 2")
        if s.degree_part(2) != omega_series(s.ctx):
            raise ValueError("malformed Omega: degree-2 part must be omega")


def _as_omega(omega) -> TensorSeries:
    if isinstance(omega, OmegaElement):
        return omega.series
    return OmegaElement(omega).series


def rho_theta(omega, a: TensorSeries, b: TensorSeries) -> TensorSeries:
    """Intersection form attached to Omega, in Omega's symplectic context."""
    om = _as_omega(omega)
    ctx = om.ctx
    if a.ctx != ctx or b.ctx != ctx:
        raise ValueError("context mismatch")
    middle = rho_theta_kernel(om)
    a1 = a - TensorSeries.unit(ctx).scaled(counit(a))
    b1 = b - TensorSeries.unit(ctx).scaled(counit(b))
    if not a1 or not b1:
        return TensorSeries.zero(ctx)
    return mt_symplectic(mt_symplectic(a1, middle), b1)


def rho_theta_kernel(omega) -> TensorSeries:
    """(-Omega)^{-1} + omega s(Omega) omega."""
    om = _as_omega(omega)
    ctx = om.ctx
    w = omega_series(ctx)
    s_om = apply_series(s_series(ctx.degree), om)
    return mt_inverse(-om) + concat_product(concat_product(w, s_om), w)


@lru_cache(maxsize=None)
def rho_std_kernel(ctx: AlgebraContext) -> TensorSeries:
    """Genus-0 middle kernel; identical to the closed form of Y."""
    return theorem_y_rhs(ctx)


def rho_std(a: TensorSeries, b: TensorSeries) -> TensorSeries:
    """Genus-0 intersection form for the standard exponential expansion."""
    ctx = a.ctx
    if ctx.mode != GENUS0 or b.ctx != ctx:
        raise ValueError("rho_std needs both arguments in one genus-0 context")
    a1 = a - TensorSeries.unit(ctx).scaled(counit(a))
    b1 = b - TensorSeries.unit(ctx).scaled(counit(b))
    if not a1 or not b1:
        return TensorSeries.zero(ctx)
    return mt_genus0(mt_genus0(a1, rho_std_kernel(ctx)), b1)


@lru_cache(maxsize=None)
def k_tensor(ctx: AlgebraContext, k: int, l: int) -> MultiSeries:
    """K_{k,l} = (1 (x) antipode) coproduct(eps_{kl} x_k x_l - delta_{kl} x_k^2/(e^(-x_k)-1)).

    eps_{kl} is 1 for k > l and 0 otherwise, so K vanishes for k < l.
    """
    if ctx.mode != GENUS0:
        raise ValueError("k_tensor needs a genus-0 context")
    if not (1 <= k <= ctx.n and 1 <= l <= ctx.n):
        raise ValueError("index out of range")
    if k < l:
        return MultiSeries.zero(ctx, 2)
    if k > l:
        arg = TensorSeries.from_word(ctx, (k, l))
    else:
        arg = -apply_series(z2_over_em1_series(ctx.degree), TensorSeries.letter(ctx, k))
    return _one_tensor_antipode(coproduct(arg))


def _one_tensor_antipode(m: MultiSeries) -> MultiSeries:
    """(1 (x) antipode) on a 2-slot series."""
    data = {}
    for (w1, w2), c in m.terms.items():
        key = (w1, w2[::-1])
        v = -c if len(w2) % 2 else c
        s = data.get(key)
        s = v if s is None else s + v
        if s:
            data[key] = s
        elif key in data:
            del data[key]
    return MultiSeries._raw(m.ctx, 2, data)


def kappa_std(u: TensorSeries, v: TensorSeries) -> MultiSeries:
    """The Sweedler transcription of kappa over rho_std, in T (x) T."""
    ctx = u.ctx
    if ctx.mode != GENUS0 or v.ctx != ctx:
        raise ValueError("kappa_std needs both arguments in one genus-0 context")
    du = coproduct(u)
    dv = coproduct(v)
    out = MultiSeries.zero(ctx, 2)
    unit = TensorSeries.unit(ctx)
    for (u1, u2), cu in du.terms.items():
        if not u1:  # rho kills counit-trivial left parts
            continue
        u1_series = TensorSeries.from_word(ctx, u1)
        right = outer(unit, TensorSeries.from_word(ctx, u2))
        for (v1, v2), cv in dv.terms.items():
            if not v1:
                continue
            r = rho_std(u1_series, TensorSeries.from_word(ctx, v1))
            if not r:
                continue
            core = _one_tensor_antipode(coproduct(r))
            left = outer(unit, TensorSeries.from_word(ctx, v2))
            out = out + (left * core * right).scaled(-cu * cv)
    return out
