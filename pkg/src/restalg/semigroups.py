"""Finite inverse semigroups as dense multiplication tables.

Elements are the indices 0..n-1.  A structure is accepted exactly when its
table is associative, every element has a generalized inverse, and the
idempotents commute; the involution is then derived (and checked against a
user-supplied one, if any).
"""

from __future__ import annotations

import numpy as np

from .errors import (
    NotAssociative,
    NotIdempotent,
    NotInverse,
    SizeLimit,
    StarMismatch,
)

MAX_ORDER = 256


class FiniteInvSemigroup:
    """An inverse semigroup on indices 0..n-1 with a dense product table.

    Immutable after construction; safe to share between threads.  Build
    instances through :func:`build_from_table` or the generators in
    :mod:`restalg.families`, which run the full axiom check.

    Attributes
    ----------
    mul : (n, n) int array, ``mul[x, y]`` is the product xy.
    star : (n,) int array, the involution x -> x*.
    dom : (n,) int array of domain idempotents x*x.
    ran : (n,) int array of range idempotents xx*.
    identity, zero : element index or None.
    """

    def __init__(self, mul, star, identity=None, zero=None, labels=None):
        self.mul = np.ascontiguousarray(mul, dtype=np.intp)
        self.star = np.ascontiguousarray(star, dtype=np.intp)
        self.n = int(self.mul.shape[0])
        self.identity = None if identity is None else int(identity)
        self.zero = None if zero is None else int(zero)
        self.labels = None if labels is None else [str(s) for s in labels]
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must have one entry per element")
        idx = np.arange(self.n)
        self.dom = self.mul[self.star, idx]
        self.ran = self.mul[idx, self.star]
        for arr in (self.mul, self.star, self.dom, self.ran):
            arr.setflags(write=False)
        self._composable = None
        self._leq = None
        self._idem = None

    # -- basic queries ------------------------------------------------

    def __len__(self):
        return self.n

    def __repr__(self):
        bits = [f"order={self.n}"]
        if self.identity is not None:
            bits.append(f"identity={self.identity}")
        if self.zero is not None:
            bits.append(f"zero={self.zero}")
        return f"FiniteInvSemigroup({', '.join(bits)})"

    def label(self, x):
        if self.labels is not None:
            return self.labels[x]
        return str(x)

    def product(self, x, y):
        return int(self.mul[x, y])

    def inv(self, x):
        return int(self.star[x])

    def elements(self):
        return range(self.n)

    @property
    def is_unital(self):
        return self.identity is not None

    @property
    def is_group(self):
        # one idempotent <=> a group
        return len(self.idempotents()) == 1

    def same_table(self, other):
        return (
            self.n == other.n
            and np.array_equal(self.mul, other.mul)
            and np.array_equal(self.star, other.star)
        )

    # -- idempotents and the natural order ----------------------------

    def idempotents(self):
        """Indices of all idempotents, ascending."""
        if self._idem is None:
            idx = np.arange(self.n)
            idem = idx[self.mul[idx, idx] == idx]
            idem.setflags(write=False)
            self._idem = idem
        return self._idem

    def is_idempotent(self, x):
        return self.mul[x, x] == x

    def natural_leq(self, e, f):
        """e <= f in the natural order on idempotents, i.e. ef = e."""
        for g in (e, f):
            if not self.is_idempotent(g):
                raise NotIdempotent(
                    f"element {self.label(g)} is not idempotent", witness=(int(g),)
                )
        return bool(self.mul[e, f] == e)

    def order_table(self):
        """Boolean table L with L[a, b] = (ab == a).

        Coincides with the natural order when both arguments are
        idempotents; rows/columns at non-idempotents are incidental.
        """
        if self._leq is None:
            leq = self.mul == np.arange(self.n)[:, None]
            leq.setflags(write=False)
            self._leq = leq
        return self._leq

    # -- composability -------------------------------------------------

    def composable(self, x, y):
        """True when the partial product xy is defined, i.e. x*x = yy*."""
        return bool(self.dom[x] == self.ran[y])

    def composable_matrix(self):
        """Boolean (n, n) matrix of the x*x = yy* predicate, cached."""
        if self._composable is None:
            comp = self.dom[:, None] == self.ran[None, :]
            comp.setflags(write=False)
            self._composable = comp
        return self._composable


# ---------------------------------------------------------------------
# validation


def _as_table(mul):
    t = np.asarray(mul, dtype=np.intp)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise ValueError("multiplication table must be square")
    n = int(t.shape[0])
    if n == 0:
        raise ValueError("multiplication table must be nonempty")
    if t.min() < 0 or t.max() >= n:
        raise ValueError("table entries must be element indices in 0..n-1")
    return t, n


def associativity_witness(t):
    """First (x, y, z) with (xy)z != x(yz), or None.  Row-by-row to keep
    memory at O(n^2)."""
    n = t.shape[0]
    for x in range(n):
        lhs = t[t[x], :]
        rhs = t[x, t]
        if not np.array_equal(lhs, rhs):
            y, z = np.argwhere(lhs != rhs)[0]
            return int(x), int(y), int(z)
    return None


def _detect_identity(t):
    n = t.shape[0]
    idx = np.arange(n)
    rows = np.all(t == idx[None, :], axis=1)
    cols = np.all(t == idx[:, None], axis=0)
    hits = np.flatnonzero(rows & cols)
    return int(hits[0]) if hits.size else None


def _detect_zero(t):
    n = t.shape[0]
    for z in range(n):
        if np.all(t[z] == z) and np.all(t[:, z] == z):
            return z
    return None


def build_from_table(mul, star=None, *, labels=None, max_order=MAX_ORDER):
    """Validate a multiplication table as a finite inverse semigroup.

    The involution is derived by locating, for each x, the unique y with
    xyx = x and yxy = y; a supplied ``star`` is additionally checked
    against its axioms and against the derived map.  Identity and zero
    elements are detected by scan.

    Raises NotAssociative, NotInverse or StarMismatch with a witness,
    and SizeLimit when the order exceeds ``max_order``.
    """
    t, n = _as_table(mul)
    if n > max_order:
        raise SizeLimit(f"order {n} exceeds the configured maximum {max_order}")
    idx = np.arange(n)

    bad = associativity_witness(t)
    if bad is not None:
        x, y, z = bad
        raise NotAssociative(
            f"(x y) z != x (y z) at x={x}, y={y}, z={z}: "
            f"{t[t[x, y], z]} != {t[x, t[y, z]]}",
            witness=bad,
        )

    idem = idx[t[idx, idx] == idx]
    sub = t[np.ix_(idem, idem)]
    noncomm = np.argwhere(sub != sub.T)
    if noncomm.size:
        i, j = noncomm[0]
        e, f = int(idem[i]), int(idem[j])
        raise NotInverse(
            f"idempotents {e} and {f} do not commute: "
            f"ef={t[e, f]}, fe={t[f, e]}",
            witness=(e, f),
        )

    derived = np.empty(n, dtype=np.intp)
    for x in range(n):
        xyx = t[t[x], x]
        yxy = t[t[:, x], idx]
        cand = np.flatnonzero((xyx == x) & (yxy == idx))
        if cand.size == 0:
            raise NotInverse(
                f"element {x} has no generalized inverse", witness=(x, ())
            )
        if cand.size > 1:
            raise NotInverse(
                f"element {x} has {cand.size} generalized inverses "
                f"{cand.tolist()}",
                witness=(x, tuple(int(c) for c in cand)),
            )
        derived[x] = cand[0]

    if star is not None:
        s = np.asarray(star, dtype=np.intp)
        if s.shape != (n,) or s.min() < 0 or s.max() >= n:
            raise StarMismatch("involution map must list one index per element")
        if not np.array_equal(s[s], idx):
            x = int(np.flatnonzero(s[s] != idx)[0])
            raise StarMismatch(f"star(star({x})) = {s[s[x]]} != {x}", witness=(x,))
        xx = t[t[idx, s], idx]
        if not np.array_equal(xx, idx):
            x = int(np.flatnonzero(xx != idx)[0])
            raise StarMismatch(f"x star(x) x != x at x={x}", witness=(x,))
        for x in range(n):
            lhs = s[t[x]]
            rhs = t[s, s[x]]
            if not np.array_equal(lhs, rhs):
                y = int(np.flatnonzero(lhs != rhs)[0])
                raise StarMismatch(
                    f"star(xy) != star(y) star(x) at x={x}, y={y}", witness=(x, y)
                )
        if not np.array_equal(s, derived):
            x = int(np.flatnonzero(s != derived)[0])
            raise StarMismatch(
                f"supplied star({x}) = {s[x]} but the unique generalized "
                f"inverse is {derived[x]}",
                witness=(x,),
            )
        derived = s

    return FiniteInvSemigroup(
        t,
        derived,
        identity=_detect_identity(t),
        zero=_detect_zero(t),
        labels=labels,
    )
