"""The contraction pairing (Massuyeau-Turaev style), its units and inverses.

Two forms of the bilinear operation written ``u pitchfork v`` here as
``mt_*``:

* symplectic: the last letter of the first word pairs with the first letter
  of the second via the intersection form; both letters are consumed
  (degree shift l+m-2).  Unit: minus the symplectic form.
* genus 0: ``-delta(last, first)`` with only the last letter of the first
  word consumed (degree shift l+m-1).  Unit: ``x_0 = -sum_k x_k``, always
  stored expanded since it is not an alphabet letter.

Also here: the algebra embedding ``x_k -> A_k B_k - B_k A_k`` into the
symplectic algebra at doubled truncation, the BCH fold ``xi``, the twisting
automorphism Q, and the two sides of the kernel identity for
``Y = mt_inverse(-xi) + x_0 s(xi) x_0``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import inf

from .hopf import apply_series, bch, s_series, z2_over_em1_series
from .tensor import (
    GENUS0,
    SYMPLECTIC,
    AlgebraContext,
    TensorSeries,
    Word,
    _same_context,
    concat_product,
    filtration_degree,
    symplectic_context,
)


def x0_series(ctx: AlgebraContext) -> TensorSeries:
    """x_0 = -(x_1 + ... + x_n), the dependent boundary class."""
    if ctx.mode != GENUS0:
        raise ValueError("x_0 lives in genus-0 contexts")
    return TensorSeries._raw(ctx, {(k,): Fraction(-1) for k in ctx.letters()})


def omega_series(ctx: AlgebraContext) -> TensorSeries:
    """The symplectic form omega = sum_i A_i B_i - B_i A_i."""
    if ctx.mode != SYMPLECTIC:
        raise ValueError("omega lives in symplectic contexts")
    data = {}
    for i in range(1, ctx.g + 1):
        a, b = 2 * i - 1, 2 * i
        data[(a, b)] = Fraction(1)
        data[(b, a)] = Fraction(-1)
    return TensorSeries._raw(ctx, data)


def mt_unit(ctx: AlgebraContext) -> TensorSeries:
    return x0_series(ctx) if ctx.mode == GENUS0 else -omega_series(ctx)


def _check_positive_filtration(a: TensorSeries, b: TensorSeries) -> None:
    if a.constant_term or b.constant_term:
        raise ValueError("pairing arguments must have no constant term")


def mt_symplectic(a: TensorSeries, b: TensorSeries) -> TensorSeries:
    ctx = _same_context(a, b)
    if ctx.mode != SYMPLECTIC:
        raise ValueError("mt_symplectic needs a symplectic context")
    _check_positive_filtration(a, b)
    D = ctx.degree
    pairing = ctx.pairing
    acc: dict[Word, Fraction] = {}
    for wa, ca in a.terms.items():
        la = len(wa)
        last = wa[-1]
        head = wa[:-1]
        for wb, cb in b.terms.items():
            if la + len(wb) - 2 > D:
                continue
            eps = pairing(last, wb[0])
            if not eps:
                continue
            w = head + wb[1:]
            v = ca * cb * eps
            s = acc.get(w)
            acc[w] = v if s is None else s + v
    return TensorSeries._raw(ctx, {w: c for w, c in acc.items() if c})


def mt_genus0(a: TensorSeries, b: TensorSeries) -> TensorSeries:
    ctx = _same_context(a, b)
    if ctx.mode != GENUS0:
        raise ValueError("mt_genus0 needs a genus-0 context")
    _check_positive_filtration(a, b)
    D = ctx.degree
    acc: dict[Word, Fraction] = {}
    for wa, ca in a.terms.items():
        la = len(wa)
        last = wa[-1]
        head = wa[:-1]
        for wb, cb in b.terms.items():
            if la + len(wb) - 1 > D:
                continue
            if wb[0] != last:
                continue
            w = head + wb
            v = -ca * cb
            s = acc.get(w)
            acc[w] = v if s is None else s + v
    return TensorSeries._raw(ctx, {w: c for w, c in acc.items() if c})


def mt_product(a: TensorSeries, b: TensorSeries) -> TensorSeries:
    """Mode-dispatching pairing product."""
    return mt_genus0(a, b) if a.ctx.mode == GENUS0 else mt_symplectic(a, b)


def mt_inverse(z: TensorSeries) -> TensorSeries:
    """Two-sided pairing inverse of ``z = unit + R``.

    Since the pairing strictly raises the filtration of R-powers, the
    alternating geometric series terminates within the truncation; no
    division is performed.  The leading term of ``z`` must match the unit
    (x_0 with R of degree >= 2 in genus 0, -omega with R of degree >= 3
    symplectically).
    """
    ctx = z.ctx
    unit = mt_unit(ctx)
    r = z - unit
    min_deg = 2 if ctx.mode == GENUS0 else 3
    if filtration_degree(r) < min_deg:
        raise ValueError("wrong leading term for a pairing inverse")
    out = unit
    power = unit  # R^0 padded with the unit
    sign = 1
    while True:
        power = mt_product(power, r)
        if not power:
            break
        sign = -sign
        out = out + (power if sign > 0 else -power)
    return out


@lru_cache(maxsize=None)
def xi(ctx: AlgebraContext) -> TensorSeries:
    """Left-to-right BCH fold of the genus-0 letters."""
    if ctx.mode != GENUS0:
        raise ValueError("xi needs a genus-0 context")
    out = TensorSeries.letter(ctx, 1)
    for k in range(2, ctx.n + 1):
        out = bch(out, TensorSeries.letter(ctx, k))
    return out


def embed(a: TensorSeries) -> TensorSeries:
    """Algebra embedding x_k -> A_k B_k - B_k A_k, truncation doubled."""
    src = a.ctx
    if src.mode != GENUS0:
        raise ValueError("embed starts from a genus-0 context")
    target = symplectic_context(src.n, 2 * src.degree)
    images = {}
    for k in range(1, src.n + 1):
        ak, bk = 2 * k - 1, 2 * k
        images[k] = TensorSeries._raw(
            target, {(ak, bk): Fraction(1), (bk, ak): Fraction(-1)}
        )
    out = TensorSeries.zero(target)
    for w, c in a.terms.items():
        img = TensorSeries.unit(target).scaled(c)
        for letter in w:
            img = concat_product(img, images[letter])
        out = out + img
    return out


def q_automorphism(a: TensorSeries) -> TensorSeries:
    """The letter-reversing twist Q: x_k -> -x_{n+1-k}, as an algebra map.

    Of the two index conventions compatible with the defining displays, this
    is the one that satisfies Q(xi) = -xi and Q(u pf v) = -(Qu) pf (Qv); see
    the pairing test suite, which checks both candidates.
    """
    ctx = a.ctx
    if ctx.mode != GENUS0:
        raise ValueError("q_automorphism needs a genus-0 context")
    n = ctx.n
    data = {}
    for w, c in a.terms.items():
        key = tuple(n + 1 - i for i in w)
        data[key] = -c if len(w) % 2 else c
    return TensorSeries._raw(ctx, data)


@lru_cache(maxsize=None)
def theorem_y_lhs(ctx: AlgebraContext) -> TensorSeries:
    """Y = mt_inverse(-xi) + x_0 s(xi) x_0 (concatenation around s)."""
    x0 = x0_series(ctx)
    s_of_xi = apply_series(s_series(ctx.degree), xi(ctx))
    return mt_inverse(-xi(ctx)) + concat_product(concat_product(x0, s_of_xi), x0)


@lru_cache(maxsize=None)
def theorem_y_rhs(ctx: AlgebraContext) -> TensorSeries:
    """Closed form: -sum_{k>l} x_k x_l + sum_k x_k^2/(e^(-x_k)-1)."""
    if ctx.mode != GENUS0:
        raise ValueError("genus-0 context required")
    out = TensorSeries.zero(ctx)
    if ctx.degree >= 2:
        data = {}
        for k in ctx.letters():
            for l in range(1, k):
                data[(k, l)] = Fraction(-1)
        out = out + TensorSeries._raw(ctx, data)
    f = z2_over_em1_series(ctx.degree)
    for k in ctx.letters():
        out = out + apply_series(f, TensorSeries.letter(ctx, k))
    return out
