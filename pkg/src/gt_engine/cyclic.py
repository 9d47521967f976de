"""Cyclic words (necklaces), the quotient projection, and the alternation map.

The cyclic quotient annihilates constants and identifies words up to
rotation.  Necklaces are stored via their canonical representative: the
lexicographically least rotation.  A naive rotation scan is fine at the
degrees this engine runs at.
"""
from __future__ import annotations

from fractions import Fraction

from .tensor import AlgebraContext, MultiSeries, TensorSeries, Word, _same_context


def canonical_rotation(word) -> Word:
    w = tuple(word)
    if len(w) <= 1:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


class _SparseLinear:
    """Shared plumbing for the necklace-valued series types."""

    __slots__ = ("ctx", "_terms")
    arity = 1

    def __init__(self, ctx: AlgebraContext, terms=None):
        data: dict[tuple, Fraction] = {}
        if terms:
            for key, c in dict(terms).items():
                key = self._canon_key(ctx, key)
                c = Fraction(c)
                if not c:
                    continue
                s = data.get(key)
                s = c if s is None else s + c
                if s:
                    data[key] = s
                elif key in data:
                    del data[key]
        self.ctx = ctx
        self._terms = data

    @classmethod
    def _canon_key(cls, ctx, key):
        raise NotImplementedError

    @classmethod
    def _raw(cls, ctx, data):
        s = object.__new__(cls)
        s.ctx = ctx
        s._terms = data
        return s

    @classmethod
    def zero(cls, ctx: AlgebraContext):
        return cls._raw(ctx, {})

    @property
    def terms(self) -> dict:
        return self._terms

    def coeff(self, key) -> Fraction:
        return self._terms.get(self._canon_key(self.ctx, key), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return (
            type(other) is type(self)
            and self.ctx == other.ctx
            and self._terms == other._terms
        )

    __hash__ = None

    def __add__(self, other):
        _same_context(self, other)
        if type(other) is not type(self):
            raise ValueError("cannot mix necklace series kinds")
        data = dict(self._terms)
        for k, c in other._terms.items():
            s = data.get(k)
            s = c if s is None else s + c
            if s:
                data[k] = s
            elif k in data:
                del data[k]
        return type(self)._raw(self.ctx, data)

    def __neg__(self):
        return type(self)._raw(self.ctx, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        c = Fraction(c)
        if not c:
            return type(self).zero(self.ctx)
        return type(self)._raw(self.ctx, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, c):
        return self.scaled(c)

    __rmul__ = __mul__

    def truncated(self, d: int):
        """Drop all terms of total degree > d (stays in the same context)."""
        cls = type(self)
        if self.arity == 1:
            keep = {k: c for k, c in self._terms.items() if len(k) <= d}
        else:
            keep = {
                k: c for k, c in self._terms.items() if sum(len(w) for w in k) <= d
            }
        return cls._raw(self.ctx, keep)

    def in_context(self, ctx: AlgebraContext):
        """Reinterpret in another context over the same alphabet."""
        if (ctx.mode, ctx.size) != (self.ctx.mode, self.ctx.size):
            raise ValueError("alphabet mismatch")
        return type(self)(ctx, self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = [f"{c}*{self._key_name(k)}" for k, c in sorted(self._terms.items())[:10]]
        if len(self._terms) > 10:
            parts.append(f"...({len(self._terms)} terms)")
        return " + ".join(parts)

    def _key_name(self, key) -> str:
        raise NotImplementedError


class CyclicSeries(_SparseLinear):
    """Combination of necklaces of degree 1..D (constants are annihilated)."""

    @classmethod
    def _canon_key(cls, ctx, key):
        w = canonical_rotation(key)
        if not w:
            raise ValueError("degree-0 necklaces do not exist in the cyclic quotient")
        ctx.check_word(w)
        return w

    @classmethod
    def necklace(cls, ctx, word, coeff=1) -> "CyclicSeries":
        return cls(ctx, {tuple(word): coeff})

    def _key_name(self, key) -> str:
        return f"|{self.ctx.word_name(key)}|"


class CyclicBiSeries(_SparseLinear):
    """Combination of pairs of necklaces, total degree <= D."""

    arity = 2

    @classmethod
    def _canon_key(cls, ctx, key):
        u, v = key
        u, v = canonical_rotation(u), canonical_rotation(v)
        if not u or not v:
            raise ValueError("degree-0 slot in a necklace pair")
        ctx.check_word(u)
        ctx.check_word(v)
        if len(u) + len(v) > ctx.degree:
            raise ValueError("total degree exceeds truncation")
        return (u, v)

    def _key_name(self, key) -> str:
        u, v = key
        return f"|{self.ctx.word_name(u)}| (x) |{self.ctx.word_name(v)}|"

    def swap(self) -> "CyclicBiSeries":
        return CyclicBiSeries._raw(
            self.ctx, {(v, u): c for (u, v), c in self._terms.items()}
        )


class CyclicTriSeries(_SparseLinear):
    """Combination of triples of necklaces, total degree <= D."""

    arity = 3

    @classmethod
    def _canon_key(cls, ctx, key):
        out = tuple(canonical_rotation(w) for w in key)
        if len(out) != 3 or any(not w for w in out):
            raise ValueError("bad necklace triple")
        for w in out:
            ctx.check_word(w)
        if sum(len(w) for w in out) > ctx.degree:
            raise ValueError("total degree exceeds truncation")
        return out

    def _key_name(self, key) -> str:
        return " (x) ".join(f"|{self.ctx.word_name(w)}|" for w in key)

    def rotate_slots(self) -> "CyclicTriSeries":
        """Cyclic slot permutation (u, v, w) -> (w, u, v)."""
        return CyclicTriSeries._raw(
            self.ctx, {(w, u, v): c for (u, v, w), c in self._terms.items()}
        )


class TensorNecklaceSeries(_SparseLinear):
    """Mixed series: first slot an ordinary word, second slot a necklace.

    This is where coaction values live; the first slot still carries the
    one-sided module structure (multiplication by ``word (x) 1``), the second
    slot is already cyclically projected.
    """

    arity = 2

    @classmethod
    def _canon_key(cls, ctx, key):
        w, v = key
        w = tuple(w)
        v = canonical_rotation(v)
        if not v:
            raise ValueError("degree-0 necklace slot")
        ctx.check_word(w)
        ctx.check_word(v)
        if len(w) + len(v) > ctx.degree:
            raise ValueError("total degree exceeds truncation")
        return (w, v)

    def _key_name(self, key) -> str:
        w, v = key
        return f"{self.ctx.word_name(w)} (x) |{self.ctx.word_name(v)}|"

    def word_mul_left(self, word) -> "TensorNecklaceSeries":
        """Multiply by ``word (x) 1`` on the left (first slot prepend)."""
        word = tuple(word)
        self.ctx.check_word(word)
        D = self.ctx.degree
        data: dict[tuple, Fraction] = {}
        for (w, v), c in self._terms.items():
            if len(word) + len(w) + len(v) > D:
                continue
            data[(word + w, v)] = c
        return TensorNecklaceSeries._raw(self.ctx, data)

    def word_mul_right(self, word) -> "TensorNecklaceSeries":
        """Multiply by ``word (x) 1`` on the right (first slot append)."""
        word = tuple(word)
        self.ctx.check_word(word)
        D = self.ctx.degree
        data: dict[tuple, Fraction] = {}
        for (w, v), c in self._terms.items():
            if len(w) + len(word) + len(v) > D:
                continue
            data[(w + word, v)] = c
        return TensorNecklaceSeries._raw(self.ctx, data)


def cyclic_project(a: TensorSeries) -> CyclicSeries:
    """Quotient map: drop the constant term, send words to necklaces."""
    out = CyclicSeries.zero(a.ctx)
    data: dict[tuple, Fraction] = {}
    for w, c in a.terms.items():
        if not w:
            continue
        k = canonical_rotation(w)
        s = data.get(k)
        s = c if s is None else s + c
        if s:
            data[k] = s
        elif k in data:
            del data[k]
    return CyclicSeries._raw(a.ctx, data) if data else out


def project_second(m: MultiSeries) -> TensorNecklaceSeries:
    """(id (x) | |') on a 2-slot series."""
    if m.arity != 2:
        raise ValueError("expected arity 2")
    data: dict[tuple, Fraction] = {}
    for (w, v), c in m.terms.items():
        if not v:
            continue
        k = (w, canonical_rotation(v))
        s = data.get(k)
        s = c if s is None else s + c
        if s:
            data[k] = s
        elif k in data:
            del data[k]
    return TensorNecklaceSeries._raw(m.ctx, data)


def project_first(t: TensorNecklaceSeries) -> CyclicBiSeries:
    """(| |' (x) id) on a mixed series; constants in the first slot die."""
    data: dict[tuple, Fraction] = {}
    for (w, v), c in t.terms.items():
        if not w:
            continue
        k = (canonical_rotation(w), v)
        s = data.get(k)
        s = c if s is None else s + c
        if s:
            data[k] = s
        elif k in data:
            del data[k]
    return CyclicBiSeries._raw(t.ctx, data)


def cyclic_project2(m: MultiSeries) -> CyclicBiSeries:
    """(| |' (x) | |') on a 2-slot series; any constant slot kills the term."""
    if m.arity != 2:
        raise ValueError("expected arity 2")
    data: dict[tuple, Fraction] = {}
    for (w, v), c in m.terms.items():
        if not w or not v:
            continue
        k = (canonical_rotation(w), canonical_rotation(v))
        s = data.get(k)
        s = c if s is None else s + c
        if s:
            data[k] = s
        elif k in data:
            del data[k]
    return CyclicBiSeries._raw(m.ctx, data)


def alt(m: CyclicBiSeries) -> CyclicBiSeries:
    """Antisymmetrization u (x) v  ->  u (x) v - v (x) u."""
    return m - m.swap()
