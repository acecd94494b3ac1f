"""Operator norms of lifted elements at finite scale.

The reduced norm is the operator norm of the lift through the restricted
left regular representation.  For finite S that lift is faithful onto a
finite-dimensional *-closed matrix algebra, so every contractive
restricted representation factors through it and the supremum norm over
all of them coincides with the reduced norm; a randomized family of
restricted representations cross-checks the implementation of that fact.
The quotient norm mod the line through the delta at the adjoined zero is
computed through the regular representation of the zero-adjoined
semigroup.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraElement, approx_identity, dot, restrict_to_base
from .errors import VerificationFailure
from .linalg import golden_min, haar_unitary, op_norm, svd_op_norm
from .reps import (
    KIND_RESTRICTED,
    Representation,
    left_regular,
    lift,
    restricted_left_regular,
)
from .restricted import build_restricted_semigroup


def reduced_cstar_norm(f, *, rel_tol=1e-12):
    """||f|| as an operator through the restricted left regular
    representation."""
    return op_norm(lift(restricted_left_regular(f.base), f), rel_tol=rel_tol)


def unrestricted_reduced_norm(f, *, rel_tol=1e-12):
    """||f|| through the classical (order-based) left regular
    representation.  For finite S this also serves as the unrestricted
    full norm; reports flag the two identically."""
    return op_norm(lift(left_regular(f.base), f), rel_tol=rel_tol)


# ---------------------------------------------------------------------
# randomized members of the contractive restricted representations


def idempotent_classes(S):
    """Partition of the idempotents generated by xx* ~ x*x over all x.

    A diagonal projection onto the coordinates whose range idempotent
    lies in a union of these classes commutes with every lambda_r(x).
    """
    idem = [int(e) for e in S.idempotents()]
    parent = {e: e for e in idem}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(S.n):
        a, b = find(int(S.ran[x])), find(int(S.dom[x]))
        if a != b:
            parent[a] = b
    classes = {}
    for e in idem:
        classes.setdefault(find(e), []).append(e)
    return [sorted(c) for c in sorted(classes.values())]


def central_unit_projection(S, classes_subset):
    """The lift of the finitely-supported unit over a union of idempotent
    classes: a diagonal projection central among the lambda_r matrices."""
    chosen = sorted(e for cls in classes_subset for e in cls)
    lam = restricted_left_regular(S)
    if not chosen:
        return np.zeros((S.n, S.n), dtype=np.complex128)
    e_f = approx_identity(S, chosen)
    return lift(lam, e_f)


def sigma_r_samples(S, trials, seed):
    """Random contractive restricted representations.

    Each sample is a direct sum of copies of lambda_r compressed by
    central projections built from saturated idempotent classes, then
    conjugated by a Haar unitary.
    """
    rng = np.random.default_rng(seed)
    lam = restricted_left_regular(S)
    classes = idempotent_classes(S)
    for _ in range(trials):
        k = int(rng.integers(1, 4))
        blocks = []
        for _ in range(k):
            pick = [c for c in classes if rng.random() < 0.7]
            P = central_unit_projection(S, pick)
            blocks.append(lam.mats @ P)
        dim = S.n * k
        mats = np.zeros((S.n, dim, dim), dtype=np.complex128)
        for i, blk in enumerate(blocks):
            mats[:, i * S.n : (i + 1) * S.n, i * S.n : (i + 1) * S.n] = blk
        U = haar_unitary(dim, rng)
        mats = U @ mats @ U.conj().T
        yield Representation(S, mats, KIND_RESTRICTED, "random-sigma-r")


def full_cstar_norm(f, *, trials=0, seed=0, slack=1e-9, rel_tol=1e-12):
    """The supremum norm over contractive restricted representations.

    Computed as the reduced norm (they agree for finite S); when trials
    is positive, randomized members of the family must not exceed it
    beyond ``slack`` or VerificationFailure is raised.
    """
    value = reduced_cstar_norm(f, rel_tol=rel_tol)
    if trials:
        excess = sigma_r_cross_check(f, trials=trials, seed=seed)
        if excess > slack:
            raise VerificationFailure(
                f"a sampled restricted representation exceeded the norm "
                f"by {excess:.3e}",
                witness=excess,
            )
    return value


def sigma_r_cross_check(f, *, trials=5, seed=0, rel_tol=1e-10):
    """Largest amount by which a sampled representation's lift exceeds the
    computed supremum norm (negative when none does)."""
    value = reduced_cstar_norm(f)
    worst = -np.inf
    for pi in sigma_r_samples(f.base, trials, seed):
        worst = max(worst, op_norm(lift(pi, f), rel_tol=rel_tol) - value)
    return worst


# ---------------------------------------------------------------------
# quotient norm modulo the line at the adjoined zero


def quotient_cstar_norm(f, zero_index, *, rel_tol=1e-12):
    """||f + C delta_0|| in the operator completion over the zero-adjoined
    semigroup.

    The lift of delta_0 through the regular representation is the
    rank-one projection P onto the zero coordinate, P is central in the
    lifted algebra, and the closed ideal it generates is the line C P;
    the quotient norm is therefore the norm of lift(f) (I - P).
    """
    Lam = left_regular(f.base)
    A = lift(Lam, f)
    Q = np.eye(f.base.n, dtype=np.complex128)
    Q[zero_index, zero_index] = 0.0
    return op_norm(A @ Q, rel_tol=rel_tol)


def minimized_quotient_norm(f, zero_index, *, phases=6, rounds=12, coarse_iters=18):
    """Independent route to the quotient norm: minimize the norm of
    lift(f + c delta_0) over complex c.

    The scalar is scanned on a refining modulus/phase grid (golden
    section along each ray; |c| <= 2 ||f||_1, beyond which the norm
    increases), with a high-precision golden pass along the best ray at
    the end.  Norms on this route come from LAPACK, so the check shares
    nothing with the power-iteration pipeline.
    """
    Lam = left_regular(f.base)
    base_mat = lift(Lam, f)
    P = Lam.mats[zero_index]
    rmax = 2.0 * f.norm(1) + 1e-9

    def g(c):
        return svd_op_norm(base_mat + c * P)

    best_v = g(0.0)
    best_theta = 0.0
    width = np.pi
    thetas = 2.0 * np.pi * np.arange(phases) / phases
    for _ in range(rounds):
        improved = False
        for theta in thetas:
            ray = np.exp(1j * theta)
            v, _r = golden_min(lambda r: g(r * ray), 0.0, rmax, iters=coarse_iters)
            if v < best_v - 1e-12:
                improved = True
            if v < best_v:
                best_v, best_theta = v, theta
        width /= 4.0
        thetas = best_theta + np.linspace(-width, width, phases)
        if not improved and width < np.pi / 8:
            break
    ray = np.exp(1j * best_theta)
    v, _r = golden_min(lambda r: g(r * ray), 0.0, rmax, iters=60)
    return min(best_v, v)


# ---------------------------------------------------------------------
# reports


@dataclass
class NormReport:
    """The norms of one element: the 1-norm, the reduced and supremum
    operator norms, and (for elements over a zero-adjoined semigroup) the
    quotient norm mod the zero line."""

    l1: float
    reduced: float
    full: float
    quotient: float | None = None

    def as_dict(self):
        out = {"l1": self.l1, "reduced": self.reduced, "full": self.full}
        if self.quotient is not None:
            out["quotient"] = self.quotient
        return out

    def ordering_ok(self, slack=1e-9):
        return self.reduced <= self.full + slack and self.full <= self.l1 + slack


def norm_report(f, *, zero_index=None, trials=0, seed=0):
    reduced = reduced_cstar_norm(f)
    full = full_cstar_norm(f, trials=trials, seed=seed)
    quotient = None
    if zero_index is not None:
        quotient = quotient_cstar_norm(f, zero_index)
    return NormReport(l1=f.norm(1), reduced=reduced, full=full, quotient=quotient)


def norms_close(a, b, tol=1e-8):
    """Absolute tolerance up to magnitude 10, relative beyond."""
    m = max(abs(a), abs(b))
    if m <= 10.0:
        return abs(a - b) <= tol
    return abs(a - b) <= tol * m


@dataclass
class QuotientMatchReport:
    label: str
    max_deviation: float
    tolerance: float
    minimized_deviation: float
    minimized_tolerance: float
    witness: str = ""

    @property
    def ok(self):
        return (
            self.max_deviation < self.tolerance
            and self.minimized_deviation < self.minimized_tolerance
        )


def quotient_match_report(
    S,
    *,
    trials=100,
    seed=7,
    tol=1e-8,
    minimized_tol=1e-6,
    minimized_random=2,
    minimized_deltas=4,
    rs=None,
    label="",
):
    """Compare the quotient norm over the zero-adjoined semigroup with the
    reduced norm of the restriction, on all deltas and random elements.

    The golden-section scalar minimization reruns a subsample (the delta
    at zero, a spread of other deltas, and a few random elements) as a
    third, LAPACK-backed route.
    """
    if rs is None:
        rs = build_restricted_semigroup(S)
    sr = rs.sr
    rng = np.random.default_rng(seed)
    elems = [AlgebraElement.delta(sr, x) for x in range(sr.n)]
    elems += [AlgebraElement.random(sr, rng) for _ in range(trials)]
    worst = 0.0
    witness = ""
    for i, f in enumerate(elems):
        q = quotient_cstar_norm(f, rs.zero_index)
        r = reduced_cstar_norm(restrict_to_base(f, rs))
        dev = abs(q - r)
        if dev > worst:
            worst = dev
            witness = f"element #{i} (delta)" if i < sr.n else f"element #{i} (random)"

    spread = np.linspace(0, sr.n - 1, num=min(minimized_deltas, sr.n), dtype=int)
    sample = [AlgebraElement.delta(sr, rs.zero_index)]
    sample += [AlgebraElement.delta(sr, int(x)) for x in spread]
    sample += [AlgebraElement.random(sr, rng) for _ in range(minimized_random)]
    worst_min = 0.0
    for f in sample:
        q = quotient_cstar_norm(f, rs.zero_index)
        m = minimized_quotient_norm(f, rs.zero_index)
        worst_min = max(worst_min, abs(q - m))
    return QuotientMatchReport(
        label=label,
        max_deviation=worst,
        tolerance=tol,
        minimized_deviation=worst_min,
        minimized_tolerance=minimized_tol,
        witness=witness,
    )


def cstar_identity_deviation(f, *, rel_tol=1e-12):
    """Relative deviation of ||f~ . f|| from ||f||^2 in the reduced norm."""
    a = reduced_cstar_norm(dot(f.tilde(), f), rel_tol=rel_tol)
    b = reduced_cstar_norm(f, rel_tol=rel_tol) ** 2
    scale = max(1.0, abs(a), abs(b))
    return abs(a - b) / scale


def l1_quotient_deviation(f, zero_index, rs):
    """Deviation of min_c ||f + c delta_0||_1 (attained at c = -f(0)) from
    the 1-norm of the restriction."""
    tau_f = restrict_to_base(f, rs)
    c = -f.coeffs[zero_index]
    shifted = f.coeffs.copy()
    shifted[zero_index] += c
    direct = float(np.abs(shifted).sum())
    return abs(direct - tau_f.norm(1))
