"""Hopf structure, exp/log/BCH, univariate series, Bernoulli numbers.

The coproduct is the unique continuous algebra map with primitive letters,
the antipode the continuous anti-homomorphism negating letters, the counit
the constant-term projection.  One-variable power series (class
:class:`PowerSeries1D`) carry the engine's Bernoulli convention: everything
is read off the expansion of ``s(z) = 1/(e^(-z)-1) + 1/z`` obtained by exact
series division, never from a table.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .tensor import (
    GENUS0,
    AlgebraContext,
    MultiSeries,
    TensorSeries,
    Word,
    concat_product,
    filtration_degree,
    outer,
)


class PowerSeries1D:
    """Truncated univariate series: coefficients c_0..c_D of z^0..z^D."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("need at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, m: int) -> Fraction:
        return self.coeffs[m] if 0 <= m <= self.order else Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries1D):
            return NotImplemented
        n = max(self.order, other.order)
        return all(self[m] == other[m] for m in range(n + 1))

    __hash__ = None

    def __add__(self, other: "PowerSeries1D") -> "PowerSeries1D":
        n = max(self.order, other.order)
        return PowerSeries1D([self[m] + other[m] for m in range(n + 1)])

    def __neg__(self) -> "PowerSeries1D":
        return PowerSeries1D([-c for c in self.coeffs])

    def __sub__(self, other: "PowerSeries1D") -> "PowerSeries1D":
        return self + (-other)

    def __mul__(self, other: "PowerSeries1D") -> "PowerSeries1D":
        n = max(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(min(other.order, n - i) + 1):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return PowerSeries1D(out)

    def inverse(self) -> "PowerSeries1D":
        """Multiplicative inverse (constant term must be nonzero)."""
        c0 = self.coeffs[0]
        if not c0:
            raise ValueError("series with zero constant term has no inverse")
        n = self.order
        inv = [Fraction(0)] * (n + 1)
        inv[0] = 1 / c0
        for m in range(1, n + 1):
            acc = Fraction(0)
            for j in range(1, m + 1):
                acc += self[j] * inv[m - j]
            inv[m] = -acc / c0
        return PowerSeries1D(inv)

    def shift_up(self, k: int = 1) -> "PowerSeries1D":
        """Multiply by z^k (same truncation order)."""
        n = self.order
        return PowerSeries1D(
            [Fraction(0)] * min(k, n + 1) + list(self.coeffs[: n + 1 - k])
        )

    def shift_down(self, k: int = 1) -> "PowerSeries1D":
        """Divide by z^k; the low-order coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise ValueError("series is not divisible by z^k")
        return PowerSeries1D(self.coeffs[k:] + (Fraction(0),) * k)

    def __repr__(self) -> str:
        return "PowerSeries1D(" + ", ".join(str(c) for c in self.coeffs) + ")"


@lru_cache(maxsize=None)
def exp_series(order: int) -> PowerSeries1D:
    return PowerSeries1D([Fraction(1, factorial(m)) for m in range(order + 1)])


@lru_cache(maxsize=None)
def log1p_series(order: int) -> PowerSeries1D:
    # log(1+z) = z - z^2/2 + z^3/3 - ...
    return PowerSeries1D(
        [Fraction(0)] + [Fraction((-1) ** (m + 1), m) for m in range(1, order + 1)]
    )


@lru_cache(maxsize=None)
def em1z_series(order: int) -> PowerSeries1D:
    """(e^(-z) - 1)/z."""
    return PowerSeries1D(
        [Fraction((-1) ** (m + 1), factorial(m + 1)) for m in range(order + 1)]
    )


@lru_cache(maxsize=None)
def s_series(order: int) -> PowerSeries1D:
    """s(z) = 1/(e^(-z)-1) + 1/z, by exact division.

    z/(e^(-z)-1) is the inverse of (e^(-z)-1)/z; adding 1 leaves a series
    divisible by z, and dividing by z once more gives s.
    """
    g = em1z_series(order + 1).inverse()  # z/(e^(-z)-1)
    one = PowerSeries1D([Fraction(1)] + [Fraction(0)] * (order + 1))
    return PowerSeries1D((g + one).shift_down(1).coeffs[: order + 1])


@lru_cache(maxsize=None)
def z2_over_em1_series(order: int) -> PowerSeries1D:
    """z^2/(e^(-z)-1) = z^2 s(z) - z."""
    z = PowerSeries1D([Fraction(0), Fraction(1)] + [Fraction(0)] * max(0, order - 1))
    return s_series(order).shift_up(2) - z


def bernoulli(k: int) -> Fraction:
    """B_k for even k >= 2, read off the s(z) expansion: [z^(k-1)] s = -B_k/k!."""
    if k < 2 or k % 2:
        raise ValueError("only even indices >= 2 are supported")
    return -s_series(k - 1)[k - 1] * factorial(k)


@lru_cache(maxsize=None)
def _word_coproduct(ctx: AlgebraContext, word: Word) -> tuple:
    """All 2^m ordered subsequence splittings of a word, with multiplicities."""
    acc: dict[tuple, int] = {((), ()): 1}
    for letter in word:
        nxt: dict[tuple, int] = {}
        for (left, right), mult in acc.items():
            for key in ((left + (letter,), right), (left, right + (letter,))):
                nxt[key] = nxt.get(key, 0) + mult
        acc = nxt
    return tuple(acc.items())


def coproduct(a: TensorSeries) -> MultiSeries:
    """Deconcatenation-style coproduct with primitive letters."""
    data: dict[tuple, Fraction] = {}
    for w, c in a.terms.items():
        for key, mult in _word_coproduct(a.ctx, w):
            s = data.get(key)
            v = c * mult
            s = v if s is None else s + v
            if s:
                data[key] = s
            elif key in data:
                del data[key]
    return MultiSeries._raw(a.ctx, 2, data)


def coproduct_slot(m: MultiSeries, slot: int) -> MultiSeries:
    """Apply the coproduct inside one slot, raising the arity by one."""
    if not 0 <= slot < m.arity:
        raise ValueError("slot out of range")
    data: dict[tuple, Fraction] = {}
    for key, c in m.terms.items():
        for (w1, w2), mult in _word_coproduct(m.ctx, key[slot]):
            k2 = key[:slot] + (w1, w2) + key[slot + 1 :]
            s = data.get(k2)
            v = c * mult
            s = v if s is None else s + v
            if s:
                data[k2] = s
            elif k2 in data:
                del data[k2]
    return MultiSeries._raw(m.ctx, m.arity + 1, data)


def antipode(a: TensorSeries) -> TensorSeries:
    """x_{i_1}..x_{i_m} -> (-1)^m x_{i_m}..x_{i_1}, extended linearly."""
    data = {}
    for w, c in a.terms.items():
        key = w[::-1]
        data[key] = -c if len(w) % 2 else c
    return TensorSeries._raw(a.ctx, data)


def counit(a: TensorSeries) -> Fraction:
    return a.constant_term


def apply_series(f: PowerSeries1D, u: TensorSeries) -> TensorSeries:
    """sum_m c_m u^m, truncated; requires filtration degree >= 1."""
    if filtration_degree(u) < 1:
        raise ValueError("apply_series needs a series with no constant term")
    D = u.ctx.degree
    top = min(f.order, D)
    unit = TensorSeries.unit(u.ctx)
    acc = unit.scaled(f[top])
    for m in range(top - 1, -1, -1):
        acc = concat_product(acc, u) + unit.scaled(f[m])
    return acc


def exp(u: TensorSeries) -> TensorSeries:
    return apply_series(exp_series(u.ctx.degree), u)


def log(a: TensorSeries) -> TensorSeries:
    if counit(a) != 1:
        raise ValueError("log needs counit 1")
    return apply_series(log1p_series(a.ctx.degree), a - TensorSeries.unit(a.ctx))


def bch(u: TensorSeries, v: TensorSeries) -> TensorSeries:
    """Baker-Campbell-Hausdorff product log(exp(u) exp(v)), truncated."""
    if filtration_degree(u) < 1 or filtration_degree(v) < 1:
        raise ValueError("bch needs filtration degree >= 1 on both arguments")
    return log(concat_product(exp(u), exp(v)))


@dataclass(frozen=True)
class GroupWord:
    """Freely reduced word in the free group on generators 1..n.

    Syllables are (generator, exponent) pairs with nonzero exponents and
    distinct adjacent generators; :meth:`of` normalizes arbitrary input.
    """

    syllables: tuple

    @classmethod
    def of(cls, syllables) -> "GroupWord":
        stack: list[list[int]] = []
        for gen, e in syllables:
            if e == 0:
                continue
            if stack and stack[-1][0] == gen:
                stack[-1][1] += e
                if stack[-1][1] == 0:
                    stack.pop()
            else:
                stack.append([gen, e])
        # merging can create new adjacencies only at pop sites, handled above
        return cls(tuple((g, e) for g, e in stack))

    @classmethod
    def generator(cls, k: int, exponent: int = 1) -> "GroupWord":
        return cls.of([(k, exponent)])

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord.of(self.syllables + other.syllables)


def theta_std(ctx: AlgebraContext, w: GroupWord) -> TensorSeries:
    """Standard expansion: generator k -> exp(x_k), extended multiplicatively."""
    if ctx.mode != GENUS0:
        raise ValueError("theta_std needs a genus-0 context")
    out = TensorSeries.unit(ctx)
    for gen, e in w.syllables:
        if not 1 <= gen <= ctx.n:
            raise ValueError(f"invalid generator index {gen}")
        out = concat_product(out, exp(TensorSeries.letter(ctx, gen).scaled(e)))
    return out


def is_group_like(a: TensorSeries) -> bool:
    """True iff the counit is 1 and the coproduct equals a (x) a (truncated)."""
    if counit(a) != 1:
        return False
    return coproduct(a) == outer(a, a)
