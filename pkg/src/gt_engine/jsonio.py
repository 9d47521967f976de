"""Canonical JSON forms for every series kind and for verification reports.

Term lists are sorted by (total degree, lexicographic word tuple); genus-0
words serialize as 1-based letter-index arrays and symplectic words as
letter-name arrays ("A1", "B1", ...).  Coefficients are exact strings in
lowest terms ("p/q", or just "p" for integers); the parser accepts both.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .cyclic import (
    CyclicBiSeries,
    CyclicSeries,
    CyclicTriSeries,
    TensorNecklaceSeries,
)
from .tensor import (
    GENUS0,
    AlgebraContext,
    MultiSeries,
    TensorSeries,
    genus0_context,
    symplectic_context,
)


def coeff_to_str(c: Fraction) -> str:
    return str(c)


def coeff_from_str(s: str) -> Fraction:
    return Fraction(s)


def _word_out(ctx: AlgebraContext, w) -> list:
    if ctx.mode == GENUS0:
        return list(w)
    return [ctx.letter_name(i) for i in w]


def _word_in(ctx: AlgebraContext, arr) -> tuple:
    return tuple(ctx.parse_letter(t) for t in arr)


def _ctx_header(ctx: AlgebraContext) -> dict:
    key = "n" if ctx.mode == GENUS0 else "g"
    return {"mode": ctx.mode, key: ctx.size, "degree": ctx.degree}


def _ctx_from_header(d: dict) -> AlgebraContext:
    if d["mode"] == GENUS0:
        return genus0_context(d["n"], d["degree"])
    return symplectic_context(d["g"], d["degree"])


def tensor_to_dict(a: TensorSeries) -> dict:
    out = _ctx_header(a.ctx)
    items = sorted(a.terms.items(), key=lambda t: (len(t[0]), t[0]))
    out["terms"] = [
        {"word": _word_out(a.ctx, w), "coeff": coeff_to_str(c)} for w, c in items
    ]
    return out


def tensor_from_dict(d: dict) -> TensorSeries:
    ctx = _ctx_from_header(d)
    terms = {}
    for t in d["terms"]:
        w = _word_in(ctx, t["word"])
        terms[w] = terms.get(w, Fraction(0)) + coeff_from_str(t["coeff"])
    return TensorSeries(ctx, terms)


def multi_to_dict(m: MultiSeries) -> dict:
    out = _ctx_header(m.ctx)
    out["arity"] = m.arity
    items = sorted(
        m.terms.items(), key=lambda t: (sum(len(w) for w in t[0]), t[0])
    )
    out["terms"] = [
        {"words": [_word_out(m.ctx, w) for w in key], "coeff": coeff_to_str(c)}
        for key, c in items
    ]
    return out


def multi_from_dict(d: dict) -> MultiSeries:
    ctx = _ctx_from_header(d)
    terms = {}
    for t in d["terms"]:
        key = tuple(_word_in(ctx, w) for w in t["words"])
        terms[key] = terms.get(key, Fraction(0)) + coeff_from_str(t["coeff"])
    return MultiSeries(ctx, d["arity"], terms)


def cyclic_to_dict(a: CyclicSeries) -> dict:
    out = _ctx_header(a.ctx)
    items = sorted(a.terms.items(), key=lambda t: (len(t[0]), t[0]))
    out["terms"] = [
        {"cyclic_word": _word_out(a.ctx, w), "coeff": coeff_to_str(c)}
        for w, c in items
    ]
    return out


def cyclic_from_dict(d: dict) -> CyclicSeries:
    ctx = _ctx_from_header(d)
    terms = {}
    for t in d["terms"]:
        w = _word_in(ctx, t["cyclic_word"])
        terms[w] = terms.get(w, Fraction(0)) + coeff_from_str(t["coeff"])
    return CyclicSeries(ctx, terms)


def _tuple_terms_to_dict(a, field: str) -> dict:
    out = _ctx_header(a.ctx)
    items = sorted(
        a.terms.items(), key=lambda t: (sum(len(w) for w in t[0]), t[0])
    )
    out["terms"] = [
        {field: [_word_out(a.ctx, w) for w in key], "coeff": coeff_to_str(c)}
        for key, c in items
    ]
    return out


def cyclic_bi_to_dict(a: CyclicBiSeries) -> dict:
    return _tuple_terms_to_dict(a, "cyclic_words")


def cyclic_tri_to_dict(a: CyclicTriSeries) -> dict:
    return _tuple_terms_to_dict(a, "cyclic_words")


def tensor_necklace_to_dict(a: TensorNecklaceSeries) -> dict:
    out = _ctx_header(a.ctx)
    items = sorted(
        a.terms.items(), key=lambda t: (len(t[0][0]) + len(t[0][1]), t[0])
    )
    out["terms"] = [
        {
            "word": _word_out(a.ctx, w),
            "cyclic_word": _word_out(a.ctx, v),
            "coeff": coeff_to_str(c),
        }
        for (w, v), c in items
    ]
    return out


def to_jsonable(obj):
    """Dispatch any engine value (or plain data) to JSON-ready structures."""
    if isinstance(obj, TensorSeries):
        return tensor_to_dict(obj)
    if isinstance(obj, MultiSeries):
        return multi_to_dict(obj)
    if isinstance(obj, CyclicSeries):
        return cyclic_to_dict(obj)
    if isinstance(obj, (CyclicBiSeries, CyclicTriSeries)):
        return _tuple_terms_to_dict(obj, "cyclic_words")
    if isinstance(obj, TensorNecklaceSeries):
        return tensor_necklace_to_dict(obj)
    if isinstance(obj, Fraction):
        return coeff_to_str(obj)
    if isinstance(obj, dict):
        return {k: to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def dumps(obj, indent=None) -> str:
    return json.dumps(to_jsonable(obj), indent=indent)
