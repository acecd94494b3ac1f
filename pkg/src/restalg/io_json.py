"""JSON schemas for semigroups and coefficient functions.

Semigroup files: {"order": n, "mul": [[int]], "star": [int]?,
"identity": int?, "zero": int?, "labels": [str]?}; mul[i][j] is the
product of element i by element j.  Zero-adjoined semigroups carry their
"zero" index.  Function files: {"semigroup": <path or inline object>,
"coeffs": [[re, im], ...]}.

Emission is canonical: sorted keys, plain integers for indices, complex
numbers as [re, im] pairs, two-space indentation and a trailing newline,
so generate -> parse -> emit round-trips byte-identically.
"""

from __future__ import annotations

import json
import os

import numpy as np

from .algebra import AlgebraElement
from .errors import ParseError
from .semigroups import MAX_ORDER, FiniteInvSemigroup, build_from_table


def canonical_dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise ParseError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc


def semigroup_to_dict(S):
    out = {
        "order": S.n,
        "mul": [[int(v) for v in row] for row in S.mul],
        "star": [int(v) for v in S.star],
    }
    if S.identity is not None:
        out["identity"] = S.identity
    if S.zero is not None:
        out["zero"] = S.zero
    if S.labels is not None:
        out["labels"] = list(S.labels)
    return out


def semigroup_from_dict(obj, *, max_order=MAX_ORDER, validate=True):
    """Build a semigroup from its JSON object.

    With validate=True the full axiom check runs (NotAssociative /
    NotInverse / StarMismatch propagate); schema problems raise
    ParseError either way.
    """
    if not isinstance(obj, dict):
        raise ParseError("semigroup object must be a JSON object")
    try:
        mul = obj["mul"]
    except KeyError:
        raise ParseError('semigroup object lacks the "mul" table') from None
    if not isinstance(mul, list) or not all(isinstance(r, list) for r in mul):
        raise ParseError('"mul" must be a list of rows')
    n = len(mul)
    if "order" in obj and obj["order"] != n:
        raise ParseError(f'"order" is {obj["order"]} but the table has {n} rows')
    star = obj.get("star")
    labels = obj.get("labels")
    if labels is not None and (
        not isinstance(labels, list) or len(labels) != n
    ):
        raise ParseError('"labels" must list one string per element')
    try:
        if validate:
            S = build_from_table(mul, star, labels=labels, max_order=max_order)
        else:
            t = np.asarray(mul, dtype=np.intp)
            s = np.asarray(star, dtype=np.intp) if star is not None else None
            if s is None:
                raise ParseError("unvalidated load requires an explicit star")
            S = FiniteInvSemigroup(t, s, labels=labels)
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc)) from exc
    for key in ("identity", "zero"):
        if key in obj and obj[key] != getattr(S, key):
            raise ParseError(
                f'"{key}" is declared as {obj[key]} but the table says '
                f"{getattr(S, key)}"
            )
    return S


def load_semigroup(path, *, max_order=MAX_ORDER, validate=True):
    return semigroup_from_dict(
        _load_json(path), max_order=max_order, validate=validate
    )


def coeffs_to_pairs(coeffs):
    return [[float(c.real), float(c.imag)] for c in coeffs]


def pairs_to_coeffs(pairs):
    try:
        return np.array(
            [complex(re, im) for re, im in pairs], dtype=np.complex128
        )
    except (TypeError, ValueError) as exc:
        raise ParseError('"coeffs" must be a list of [re, im] pairs') from exc


def function_to_dict(f, *, semigroup_path=None):
    sem = semigroup_path if semigroup_path else semigroup_to_dict(f.base)
    return {"semigroup": sem, "coeffs": coeffs_to_pairs(f.coeffs)}


def load_function(path, *, max_order=MAX_ORDER):
    """Load a coefficient function; the semigroup may be inline or a path
    relative to the function file."""
    obj = _load_json(path)
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise ParseError('function file must carry "semigroup" and "coeffs"')
    sem = obj.get("semigroup")
    if isinstance(sem, str):
        sem_path = sem
        if not os.path.isabs(sem_path):
            sem_path = os.path.join(os.path.dirname(os.path.abspath(path)), sem_path)
        S = load_semigroup(sem_path, max_order=max_order)
    elif isinstance(sem, dict):
        S = semigroup_from_dict(sem, max_order=max_order)
    else:
        raise ParseError('"semigroup" must be a path or an inline object')
    coeffs = pairs_to_coeffs(obj["coeffs"])
    if coeffs.shape[0] != S.n:
        raise ParseError(
            f"function has {coeffs.shape[0]} coefficients for a semigroup "
            f"of order {S.n}"
        )
    return AlgebraElement(S, coeffs, copy=False)
