"""Sparse exact-rational arithmetic for degree-truncated noncommutative series.

Everything lives over a fixed :class:`AlgebraContext`: an alphabet (either
the genus-0 letters ``x_1..x_n`` or symplectic letters ``A_1,B_1,..,A_g,B_g``)
together with a truncation degree ``D``.  A :class:`TensorSeries` is a finite
rational combination of words of length at most ``D``; a :class:`MultiSeries`
is the same for k-tuples of words with *total* length at most ``D``.

All values are immutable after construction and every operation is a pure
function; no floating point appears anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import inf

GENUS0 = "genus0"
SYMPLECTIC = "symplectic"

Word = tuple  # tuple[int, ...], letters encoded as small positive ints


@dataclass(frozen=True)
class AlgebraContext:
    """Alphabet description plus truncation degree.

    genus0 mode: ``size`` = n, letters ``x_k`` encoded as ``k`` (1-based).
    symplectic mode: ``size`` = g, letters encoded ``A_i = 2i-1``, ``B_i = 2i``
    so that ``A_1 < B_1 < A_2 < ...`` in the canonical letter order.  The
    intersection pairing is the standard symplectic one:
    ``A_i . B_j = delta_ij``, ``B_i . A_j = -delta_ij``, all else 0.
    """

    mode: str
    size: int
    degree: int

    def __post_init__(self) -> None:
        if self.mode not in (GENUS0, SYMPLECTIC):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.size < 1:
            raise ValueError("alphabet size must be >= 1")
        if self.degree < 1:
            raise ValueError("truncation degree must be >= 1")

    @property
    def n(self) -> int:
        if self.mode != GENUS0:
            raise ValueError("n is only defined for genus-0 contexts")
        return self.size

    @property
    def g(self) -> int:
        if self.mode != SYMPLECTIC:
            raise ValueError("g is only defined for symplectic contexts")
        return self.size

    @property
    def letter_count(self) -> int:
        return self.size if self.mode == GENUS0 else 2 * self.size

    def letters(self) -> range:
        return range(1, self.letter_count + 1)

    def letter_name(self, i: int) -> str:
        self._check_letter(i)
        if self.mode == GENUS0:
            return f"x{i}"
        pair, rem = divmod(i - 1, 2)
        return f"{'AB'[rem]}{pair + 1}"

    def parse_letter(self, token: str | int) -> int:
        """Accept ``"x3"``/``"3"``/``3`` (genus 0) or ``"A2"``/``"b1"`` (symplectic)."""
        if isinstance(token, int):
            self._check_letter(token)
            return token
        tok = token.strip()
        if self.mode == GENUS0:
            if tok.lower().startswith("x"):
                tok = tok[1:]
            i = int(tok)
        else:
            kind = tok[0].upper()
            if kind not in "AB":
                raise ValueError(f"bad symplectic letter {token!r}")
            i = 2 * (int(tok[1:]) - 1) + (1 if kind == "A" else 2)
        self._check_letter(i)
        return i

    def pairing(self, i: int, j: int) -> int:
        """Intersection pairing of two letters (symplectic mode only)."""
        if self.mode != SYMPLECTIC:
            raise ValueError("pairing is only defined in symplectic mode")
        if i % 2 == 1 and j == i + 1:
            return 1
        if i % 2 == 0 and j == i - 1:
            return -1
        return 0

    def check_word(self, word: Word) -> None:
        if len(word) > self.degree:
            raise ValueError(f"word {word} exceeds truncation degree {self.degree}")
        for i in word:
            self._check_letter(i)

    def _check_letter(self, i: int) -> None:
        if not isinstance(i, int) or not 1 <= i <= self.letter_count:
            raise ValueError(f"invalid letter {i!r} for {self.mode}({self.size})")

    def word_name(self, word: Word) -> str:
        return "*".join(self.letter_name(i) for i in word) if word else "1"


def genus0_context(n: int, degree: int) -> AlgebraContext:
    return AlgebraContext(GENUS0, n, degree)


def symplectic_context(g: int, degree: int) -> AlgebraContext:
    return AlgebraContext(SYMPLECTIC, g, degree)


def _same_context(a, b) -> AlgebraContext:
    if a.ctx != b.ctx:
        raise ValueError(f"context mismatch: {a.ctx} vs {b.ctx}")
    return a.ctx


def _coeff_str(c: Fraction) -> str:
    return str(c)


class TensorSeries:
    """Finite map word -> nonzero rational, words of length <= ctx.degree."""

    __slots__ = ("ctx", "_terms")

    def __init__(self, ctx: AlgebraContext, terms=None):
        data: dict[Word, Fraction] = {}
        if terms:
            for w, c in dict(terms).items():
                w = tuple(w)
                ctx.check_word(w)
                c = Fraction(c)
                if c:
                    data[w] = c
        self.ctx = ctx
        self._terms = data

    @classmethod
    def _raw(cls, ctx: AlgebraContext, data: dict) -> "TensorSeries":
        # internal fast path: data already validated/normalized
        s = object.__new__(cls)
        s.ctx = ctx
        s._terms = data
        return s

    @classmethod
    def zero(cls, ctx: AlgebraContext) -> "TensorSeries":
        return cls._raw(ctx, {})

    @classmethod
    def unit(cls, ctx: AlgebraContext) -> "TensorSeries":
        return cls._raw(ctx, {(): Fraction(1)})

    @classmethod
    def letter(cls, ctx: AlgebraContext, k: int) -> "TensorSeries":
        ctx.check_word((k,))
        return cls._raw(ctx, {(k,): Fraction(1)})

    @classmethod
    def from_word(cls, ctx: AlgebraContext, word, coeff=1) -> "TensorSeries":
        return cls(ctx, {tuple(word): coeff})

    @property
    def terms(self) -> dict:
        """The underlying word -> coefficient map (do not mutate)."""
        return self._terms

    def coeff(self, word) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorSeries)
            and self.ctx == other.ctx
            and self._terms == other._terms
        )

    __hash__ = None  # mutable payload; not hashable

    def __add__(self, other: "TensorSeries") -> "TensorSeries":
        _same_context(self, other)
        data = dict(self._terms)
        for w, c in other._terms.items():
            s = data.get(w)
            s = c if s is None else s + c
            if s:
                data[w] = s
            elif w in data:
                del data[w]
        return TensorSeries._raw(self.ctx, data)

    def __neg__(self) -> "TensorSeries":
        return TensorSeries._raw(self.ctx, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "TensorSeries") -> "TensorSeries":
        return self + (-other)

    def scaled(self, c) -> "TensorSeries":
        c = Fraction(c)
        if not c:
            return TensorSeries.zero(self.ctx)
        return TensorSeries._raw(self.ctx, {w: c * v for w, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorSeries):
            return concat_product(self, other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def __truediv__(self, other):
        return self.scaled(Fraction(1, 1) / Fraction(other))

    def __pow__(self, k: int) -> "TensorSeries":
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = TensorSeries.unit(self.ctx)
        for _ in range(k):
            out = concat_product(out, self)
        return out

    def degree_part(self, m: int) -> "TensorSeries":
        return TensorSeries._raw(
            self.ctx, {w: c for w, c in self._terms.items() if len(w) == m}
        )

    def truncated(self, d: int) -> "TensorSeries":
        """Drop all words of length > d (stays in the same context)."""
        return TensorSeries._raw(
            self.ctx, {w: c for w, c in self._terms.items() if len(w) <= d}
        )

    def in_context(self, ctx: AlgebraContext) -> "TensorSeries":
        """Reinterpret in another context with the same alphabet mode/size."""
        if (ctx.mode, ctx.size) != (self.ctx.mode, self.ctx.size):
            raise ValueError("alphabet mismatch")
        return TensorSeries(ctx, self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        items = sorted(self._terms.items(), key=lambda t: (len(t[0]), t[0]))
        parts = [f"{_coeff_str(c)}*{self.ctx.word_name(w)}" for w, c in items[:10]]
        if len(items) > 10:
            parts.append(f"...({len(items)} terms)")
        return " + ".join(parts)


def add(a: TensorSeries, b: TensorSeries) -> TensorSeries:
    """Coefficientwise sum; zero terms dropped."""
    return a + b


def concat_product(a: TensorSeries, b: TensorSeries) -> TensorSeries:
    """Bilinear extension of word concatenation, truncated at ctx.degree."""
    ctx = _same_context(a, b)
    D = ctx.degree
    buckets: dict[int, list] = {}
    for wb, cb in b._terms.items():
        buckets.setdefault(len(wb), []).append((wb, cb))
    acc: dict[Word, Fraction] = {}
    for wa, ca in a._terms.items():
        room = D - len(wa)
        for lb, items in buckets.items():
            if lb > room:
                continue
            for wb, cb in items:
                w = wa + wb
                s = acc.get(w)
                acc[w] = ca * cb if s is None else s + ca * cb
    return TensorSeries._raw(ctx, {w: c for w, c in acc.items() if c})


def filtration_degree(a: TensorSeries):
    """Smallest word length with nonzero coefficient; +inf for the zero series."""
    if not a._terms:
        return inf
    return min(len(w) for w in a._terms)


class MultiSeries:
    """Truncated combination of k-tuples of words (total degree <= ctx.degree)."""

    __slots__ = ("ctx", "arity", "_terms")

    def __init__(self, ctx: AlgebraContext, arity: int, terms=None):
        if arity < 1:
            raise ValueError("arity must be >= 1")
        data: dict[tuple, Fraction] = {}
        if terms:
            for key, c in dict(terms).items():
                key = tuple(tuple(w) for w in key)
                if len(key) != arity:
                    raise ValueError(f"key {key} has arity {len(key)}, expected {arity}")
                total = sum(len(w) for w in key)
                if total > ctx.degree:
                    raise ValueError(f"total degree {total} exceeds {ctx.degree}")
                for w in key:
                    ctx.check_word(w)
                c = Fraction(c)
                if c:
                    data[key] = c
        self.ctx = ctx
        self.arity = arity
        self._terms = data

    @classmethod
    def _raw(cls, ctx, arity, data) -> "MultiSeries":
        s = object.__new__(cls)
        s.ctx = ctx
        s.arity = arity
        s._terms = data
        return s

    @classmethod
    def zero(cls, ctx: AlgebraContext, arity: int) -> "MultiSeries":
        return cls._raw(ctx, arity, {})

    @classmethod
    def unit(cls, ctx: AlgebraContext, arity: int) -> "MultiSeries":
        return cls._raw(ctx, arity, {((),) * arity: Fraction(1)})

    @property
    def terms(self) -> dict:
        return self._terms

    def coeff(self, key) -> Fraction:
        return self._terms.get(tuple(tuple(w) for w in key), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiSeries)
            and self.ctx == other.ctx
            and self.arity == other.arity
            and self._terms == other._terms
        )

    __hash__ = None

    def __add__(self, other: "MultiSeries") -> "MultiSeries":
        _same_context(self, other)
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        data = dict(self._terms)
        for key, c in other._terms.items():
            s = data.get(key)
            s = c if s is None else s + c
            if s:
                data[key] = s
            elif key in data:
                del data[key]
        return MultiSeries._raw(self.ctx, self.arity, data)

    def __neg__(self) -> "MultiSeries":
        return MultiSeries._raw(
            self.ctx, self.arity, {k: -c for k, c in self._terms.items()}
        )

    def __sub__(self, other: "MultiSeries") -> "MultiSeries":
        return self + (-other)

    def scaled(self, c) -> "MultiSeries":
        c = Fraction(c)
        if not c:
            return MultiSeries.zero(self.ctx, self.arity)
        return MultiSeries._raw(
            self.ctx, self.arity, {k: c * v for k, v in self._terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, MultiSeries):
            return multi_product(self, other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        items = sorted(
            self._terms.items(), key=lambda t: (sum(len(w) for w in t[0]), t[0])
        )
        parts = [
            f"{_coeff_str(c)}*({' (x) '.join(self.ctx.word_name(w) for w in key)})"
            for key, c in items[:8]
        ]
        if len(items) > 8:
            parts.append(f"...({len(items)} terms)")
        return " + ".join(parts)


def outer(*factors: TensorSeries) -> MultiSeries:
    """Decomposable element a_1 (x) ... (x) a_k, total-degree truncated."""
    if not factors:
        raise ValueError("need at least one factor")
    ctx = factors[0].ctx
    for f in factors[1:]:
        if f.ctx != ctx:
            raise ValueError("context mismatch")
    D = ctx.degree
    acc: dict[tuple, Fraction] = {(): Fraction(1)}  # keys grow slot by slot
    for f in factors:
        nxt: dict[tuple, Fraction] = {}
        for key, c in acc.items():
            used = sum(len(w) for w in key)
            for w, cw in f._terms.items():
                if used + len(w) > D:
                    continue
                k2 = key + (w,)
                s = nxt.get(k2)
                nxt[k2] = c * cw if s is None else s + c * cw
        acc = nxt
    return MultiSeries._raw(ctx, len(factors), {k: c for k, c in acc.items() if c})


def multi_product(a: MultiSeries, b: MultiSeries) -> MultiSeries:
    """Componentwise concatenation in each slot, total-degree truncated."""
    _same_context(a, b)
    if a.arity != b.arity:
        raise ValueError("arity mismatch")
    D = a.ctx.degree
    acc: dict[tuple, Fraction] = {}
    for ka, ca in a._terms.items():
        da = sum(len(w) for w in ka)
        for kb, cb in b._terms.items():
            if da + sum(len(w) for w in kb) > D:
                continue
            key = tuple(wa + wb for wa, wb in zip(ka, kb))
            s = acc.get(key)
            acc[key] = ca * cb if s is None else s + ca * cb
    return MultiSeries._raw(a.ctx, a.arity, {k: c for k, c in acc.items() if c})
