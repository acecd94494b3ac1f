"""Executable verification suites.

Every structural fact the library relies on is rechecked here as a
numerically-tested property at finite scale, one named check at a time.
Each check carries a one-line claim (the statement being tested) or the
tag "plumbing" for backend self-tests, so a failure points straight at
the violated statement.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

import numpy as np

from . import cstar
from .algebra import (
    AlgebraElement,
    approx_identity,
    conv,
    dot,
    dot_direct,
    max_abs_diff,
    order_dot,
    restrict_to_base,
    support_idempotents,
)
from .errors import RestalgError
from .linalg import op_norm, svd_op_norm
from .reps import (
    compression_deviation,
    extend_with_zero,
    lambda_inner_identity_report,
    left_regular,
    lift,
    lift_rank,
    representation_report,
    restricted_left_regular,
    restricted_multiplicativity_witness,
    restricted_right_regular,
    rho_inner_identity_report,
    rho_lift_identity_report,
    trace_form_rank,
)
from .restricted import build_restricted_semigroup, groupoid_law_violations
from .semigroups import build_from_table

PLUMBING = "plumbing"


@dataclass
class Tolerances:
    entrywise: float = 1e-12
    norm: float = 1e-9
    identity: float = 1e-10
    cstar: float = 1e-8
    minimized: float = 1e-6
    pivot: float = 1e-9
    contraction: float = 1e-9

    def override(self, pairs):
        for key, value in pairs.items():
            if not hasattr(self, key):
                raise ValueError(f"unknown tolerance {key!r}")
            setattr(self, key, float(value))
        return self


@dataclass
class Check:
    id: str
    claim: str
    passed: bool
    witness: str = ""
    deviation: float | None = None

    def as_dict(self):
        out = {"id": self.id, "claim": self.claim, "passed": self.passed}
        if self.witness:
            out["witness"] = self.witness
        if self.deviation is not None:
            out["deviation"] = self.deviation
        return out


@dataclass
class SuiteReport:
    semigroup: str
    suite: str
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def as_dict(self):
        return {
            "semigroup": self.semigroup,
            "suite": self.suite,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "checks": [c.as_dict() for c in sorted(self.checks, key=lambda c: c.id)],
        }

    def format_text(self):
        lines = [f"== {self.semigroup} :: {self.suite} ({self.seconds:.2f}s)"]
        for c in sorted(self.checks, key=lambda c: c.id):
            mark = "PASS" if c.passed else "FAIL"
            extra = ""
            if c.deviation is not None:
                extra = f" dev={c.deviation:.3e}"
            if c.witness and not c.passed:
                extra += f" [{c.witness}]"
            lines.append(f"  [{mark}] {c.id} -- {c.claim}{extra}")
        return "\n".join(lines)


def _random_elements(S, rng, count):
    return [AlgebraElement.random(S, rng) for _ in range(count)]


# ---------------------------------------------------------------------
# axioms


def suite_axioms(S, label, *, seed=0, trials=100, tol=None):
    tol = tol or Tolerances()
    checks = []
    idx = np.arange(S.n)

    try:
        build_from_table(S.mul, S.star, max_order=max(S.n, 256))
        checks.append(
            Check(
                "axioms.table",
                "associative table; unique generalized inverses; "
                "idempotents commute",
                True,
            )
        )
    except RestalgError as exc:
        checks.append(Check("axioms.table", "inverse-semigroup axioms", False, str(exc)))
        return checks

    checks.append(
        Check(
            "axioms.star-involution",
            "x** = x for all x",
            bool(np.array_equal(S.star[S.star], idx)),
        )
    )
    ok = True
    for x in range(S.n):
        if not np.array_equal(S.star[S.mul[x]], S.mul[S.star, S.star[x]]):
            ok = False
            break
    checks.append(Check("axioms.star-antihom", "(xy)* = y* x* for all pairs", ok))
    checks.append(
        Check(
            "axioms.regularity",
            "x x* x = x and x* x x* = x* for all x",
            bool(
                np.array_equal(S.mul[S.mul[idx, S.star], idx], idx)
                and np.array_equal(S.mul[S.mul[S.star, idx], S.star], S.star)
            ),
        )
    )

    E = S.idempotents()
    checks.append(
        Check(
            "axioms.idempotent-set",
            "the idempotents are exactly the elements s s*",
            set(E.tolist()) == set(S.ran.tolist()),
        )
    )
    sub = S.mul[np.ix_(E, E)]
    checks.append(
        Check(
            "axioms.idempotents-closed",
            "idempotents form a commutative subsemigroup",
            bool(np.array_equal(sub, sub.T) and np.all(np.isin(sub, E))),
        )
    )

    # natural order: reflexive, antisymmetric, transitive on E
    L = S.order_table()[np.ix_(E, E)]
    refl = bool(np.all(np.diagonal(L)))
    antisym = bool(np.all(~(L & L.T) | np.eye(len(E), dtype=bool)))
    trans = bool(np.all(~((L.astype(int) @ L.astype(int)) > 0) | L))
    checks.append(
        Check(
            "axioms.natural-order",
            "e <= f iff ef = e is a partial order on the idempotents",
            refl and antisym and trans,
        )
    )

    if S.identity is not None:
        e = S.identity
        ok = bool(np.array_equal(S.mul[e], idx) and np.array_equal(S.mul[:, e], idx))
        checks.append(Check("axioms.identity", "1 x = x 1 = x for all x", ok))

    try:
        rs = build_restricted_semigroup(S)
    except RestalgError as exc:
        checks.append(
            Check(
                "axioms.zero-adjoined",
                "S with a zero adjoined for non-composable products is an "
                "inverse semigroup",
                False,
                str(exc),
            )
        )
        return checks
    checks.append(
        Check(
            "axioms.zero-adjoined",
            "S with a zero adjoined for non-composable products is an "
            "inverse semigroup",
            True,
        )
    )
    sr, z = rs.sr, rs.zero_index
    rule = np.full((S.n + 1, S.n + 1), z, dtype=np.intp)
    rule[: S.n, : S.n] = np.where(S.composable_matrix(), S.mul, z)
    checks.append(
        Check(
            "axioms.zero-adjoined-rule",
            "x.y = xy when x*x = yy*, else the adjoined zero",
            bool(
                np.array_equal(sr.mul, rule)
                and sr.zero == z
                and sr.star[z] == z
            ),
        )
    )
    checks.append(
        Check(
            "axioms.embed-roundtrip",
            "embedding into the zero-adjoined semigroup is injective with "
            "a partial inverse",
            all(rs.project(rs.embed(x)) == x for x in range(S.n))
            and rs.project(z) is None,
        )
    )

    viol = groupoid_law_violations(S)
    checks.append(
        Check(
            "axioms.groupoid",
            "composable pairs satisfy the groupoid laws",
            not viol,
            "; ".join(viol[:3]),
        )
    )
    return checks


# ---------------------------------------------------------------------
# algebra


def delta_dot_deviation(S):
    """Exhaustive check of d_x . d_y against the composability rule;
    returns (max deviation, witness string)."""
    deltas = [AlgebraElement.delta(S, x) for x in range(S.n)]
    comp = S.composable_matrix()
    worst, witness = 0.0, ""
    for x in range(S.n):
        for y in range(S.n):
            got = dot(deltas[x], deltas[y])
            want = np.zeros(S.n, dtype=np.complex128)
            if comp[x, y]:
                want[S.mul[x, y]] = 1.0
            dev = float(np.abs(got.coeffs - want).max())
            if dev > worst:
                worst, witness = dev, f"x={S.label(x)}, y={S.label(y)}"
    return worst, witness


def delta_assoc_witness(S):
    """Vectorized scan of the partial product over all delta triples;
    None when associativity holds everywhere."""
    n = S.n
    ext = np.full((n + 1, n + 1), n, dtype=np.intp)
    ext[:n, :n] = np.where(S.composable_matrix(), S.mul, n)
    for x in range(n):
        lhs = ext[ext[x, :n], :n]
        rhs = ext[x, ext[:n, :n]]
        if not np.array_equal(lhs, rhs):
            y, z = np.argwhere(lhs != rhs)[0]
            return int(x), int(y), int(z)
    return None


def suite_algebra(S, label, *, seed=0, trials=100, tol=None, unit_subsets=None):
    tol = tol or Tolerances()
    rng = np.random.default_rng(seed)
    checks = []
    deltas = [AlgebraElement.delta(S, x) for x in range(S.n)]

    dev, wit = delta_dot_deviation(S)
    checks.append(
        Check(
            "algebra.delta-dot",
            "d_x . d_y = d_xy when x*x = yy*, else 0",
            dev == 0.0,
            wit,
            dev,
        )
    )

    bad = delta_assoc_witness(S)
    checks.append(
        Check(
            "algebra.dot-assoc-deltas",
            "(d_x . d_y) . d_z = d_x . (d_y . d_z) for all triples",
            bad is None,
            "" if bad is None else f"triple {bad}",
        )
    )

    worst = 0.0
    for _ in range(trials):
        f, g, h = _random_elements(S, rng, 3)
        worst = max(worst, max_abs_diff(dot(dot(f, g), h), dot(f, dot(g, h))))
    checks.append(
        Check(
            "algebra.dot-assoc-random",
            "(f.g).h = f.(g.h) on random dense triples",
            worst < tol.entrywise,
            deviation=worst,
        )
    )

    worst = 0.0
    pair_iter = (
        itertools.product(range(S.n), repeat=2)
        if S.n <= 12
        else ((int(rng.integers(S.n)), int(rng.integers(S.n))) for _ in range(100))
    )
    for x, y in pair_iter:
        worst = max(worst, max_abs_diff(dot(deltas[x], deltas[y]), dot_direct(deltas[x], deltas[y])))
    for _ in range(min(trials, 25)):
        f, g = _random_elements(S, rng, 2)
        worst = max(worst, max_abs_diff(dot(f, g), dot_direct(f, g)))
    checks.append(
        Check(
            "algebra.dot-forms-agree",
            "factorization sum and translation sum for the dot product agree",
            worst < tol.entrywise,
            deviation=worst,
        )
    )

    worst = 0.0
    for x, y in itertools.product(range(S.n), repeat=2):
        worst = max(
            worst,
            max_abs_diff(dot(deltas[x], deltas[y]).tilde(), dot(deltas[y].tilde(), deltas[x].tilde())),
        )
    rworst = 0.0
    for _ in range(trials):
        f, g = _random_elements(S, rng, 2)
        rworst = max(rworst, max_abs_diff(dot(f, g).tilde(), dot(g.tilde(), f.tilde())))
    checks.append(
        Check(
            "algebra.tilde-antimult",
            "(f.g)~ = g~ . f~ (exact on deltas, tolerance on random pairs)",
            worst == 0.0 and rworst < tol.entrywise,
            deviation=max(worst, rworst),
        )
    )

    f = AlgebraElement.random(S, rng)
    checks.append(
        Check(
            "algebra.tilde-involution",
            "f~~ = f and ||f~||_1 = ||f||_1",
            max_abs_diff(f.tilde().tilde(), f) == 0.0
            and abs(f.tilde().norm(1) - f.norm(1)) < tol.norm,
        )
    )

    worst_margin = -np.inf
    pos_margin = -np.inf
    for _ in range(trials):
        f, g = _random_elements(S, rng, 2)
        worst_margin = max(worst_margin, dot(f, g).norm(1) - f.norm(1) * g.norm(1))
        fp = AlgebraElement(S, np.abs(f.coeffs))
        gp = AlgebraElement(S, np.abs(g.coeffs))
        pos_margin = max(pos_margin, dot(fp, gp).norm(1) - conv(fp, gp).norm(1))
    checks.append(
        Check(
            "algebra.submultiplicative",
            "||f.g||_1 <= ||f||_1 ||g||_1",
            worst_margin <= tol.norm,
            deviation=max(worst_margin, 0.0),
        )
    )
    checks.append(
        Check(
            "algebra.positive-domination",
            "0 <= f, g implies ||f.g||_1 <= ||f*g||_1",
            pos_margin <= tol.norm,
            deviation=max(pos_margin, 0.0),
        )
    )

    worst = 0.0
    wit = ""
    for y in range(S.n):
        for e in S.idempotents():
            want_right = deltas[y].coeffs if S.dom[y] == e else 0.0
            want_left = deltas[y].coeffs if S.ran[y] == e else 0.0
            d1 = float(np.abs(dot(deltas[y], deltas[e]).coeffs - want_right).max())
            d2 = float(np.abs(dot(deltas[e], deltas[y]).coeffs - want_left).max())
            if max(d1, d2) > worst:
                worst, wit = max(d1, d2), f"y={S.label(y)}, e={S.label(int(e))}"
    checks.append(
        Check(
            "algebra.delta-absorption",
            "d_y . d_e = d_y iff y*y = e; d_e . d_y = d_y iff yy* = e",
            worst == 0.0,
            wit,
            worst,
        )
    )

    dev, wit = finite_unit_laws_deviation(S, rng, cap=unit_subsets)
    checks.append(
        Check(
            "algebra.unit-laws",
            "the finitely-supported units e_F absorb deltas over F, "
            "multiply to their common idempotents, and filter by domain/range",
            dev == 0.0,
            wit,
            dev,
        )
    )

    ok, wit = approx_identity_property(S, rng, count=50, epsilons=(1e-1, 1e-3))
    checks.append(
        Check(
            "algebra.approx-identity",
            "||f - f.e_F||_1 < eps and ||f - e_F.f||_1 < eps once F captures "
            "all but eps of ||f||_1",
            ok,
            wit,
        )
    )

    rs = build_restricted_semigroup(S)
    dev, wit = tau_homomorphism_deviation(rs, rng, trials=min(trials, 50))
    checks.append(
        Check(
            "algebra.restriction-homomorphism",
            "dropping the zero coordinate carries the convolution of the "
            "zero-adjoined semigroup to the dot product; kernel C d_0",
            dev == 0.0,
            wit,
            dev,
        )
    )
    dev = 0.0
    for _ in range(trials):
        fz = AlgebraElement.random(rs.sr, rng)
        dev = max(dev, cstar.l1_quotient_deviation(fz, rs.zero_index, rs))
    checks.append(
        Check(
            "algebra.restriction-isometry",
            "min over c of ||f + c d_0||_1 equals ||f restricted||_1, "
            "attained at c = -f(0)",
            dev < tol.entrywise,
            deviation=dev,
        )
    )

    if S.is_group:
        worst = 0.0
        for _ in range(min(trials, 25)):
            f, g = _random_elements(S, rng, 2)
            worst = max(worst, max_abs_diff(dot(f, g), conv(f, g)))
            worst = max(worst, max_abs_diff(order_dot(f, g), conv(f, g)))
        checks.append(
            Check(
                "algebra.group-coincidence",
                "in a group the dot product and the order-relaxed variant "
                "coincide with convolution",
                worst < tol.entrywise,
                deviation=worst,
            )
        )
    return checks


def finite_unit_laws_deviation(S, rng, cap=None, larger=20):
    """Laws of the finitely-supported units e_F.

    Enumerates every F with |F| <= 3 (capped at ``cap`` subsets when
    given) plus ``larger`` random bigger sets.  For each F: e_F absorbs
    the deltas over F from both sides; e_F . e_G is the sum of deltas over
    i(F) & i(G) (checked against F itself, a subset, the empty set, and a
    random partner); right/left multiplication filters a random f by its
    domain/range idempotents; and e_F is a two-sided unit on functions
    supported in F.
    """
    deltas = [AlgebraElement.delta(S, x) for x in range(S.n)]
    subsets = []
    for size in (1, 2, 3):
        subsets.extend(itertools.combinations(range(S.n), size))
    if cap is not None and len(subsets) > cap:
        keep = rng.choice(len(subsets), size=cap, replace=False)
        subsets = [subsets[int(i)] for i in sorted(keep)]
    for _ in range(larger):
        size = int(rng.integers(4, max(5, S.n + 1)))
        subsets.append(tuple(sorted(rng.choice(S.n, size=min(size, S.n), replace=False).tolist())))

    worst, wit = 0.0, ""

    def note(dev, msg):
        nonlocal worst, wit
        if dev > worst:
            worst, wit = dev, msg

    for F in subsets:
        iF = support_idempotents(S, F)
        eF = approx_identity(S, F)
        for s in F:
            note(max_abs_diff(dot(eF, deltas[s]), deltas[s]), f"left unit on F={F}, s={s}")
            note(max_abs_diff(dot(deltas[s], eF), deltas[s]), f"right unit on F={F}, s={s}")
        partners = [F, F[: len(F) // 2], ()]
        partners.append(tuple(sorted(rng.choice(S.n, size=min(3, S.n), replace=False).tolist())))
        for G in partners:
            iG = support_idempotents(S, G)
            eG = approx_identity(S, G)
            want = np.zeros(S.n, dtype=np.complex128)
            for e in sorted(set(iF) & set(iG)):
                want[e] = 1.0
            note(float(np.abs(dot(eF, eG).coeffs - want).max()), f"e_F.e_G on F={F}, G={G}")
            note(max_abs_diff(dot(eF, eG), dot(eG, eF)), f"e_F.e_G commutes on F={F}, G={G}")
            if set(G) <= set(F):
                note(max_abs_diff(dot(eF, eG), eG), f"nested unit on F={F}, G={G}")
        f = AlgebraElement.random(S, rng)
        keep_dom = np.isin(S.dom, iF)
        keep_ran = np.isin(S.ran, iF)
        note(
            float(np.abs(dot(f, eF).coeffs - np.where(keep_dom, f.coeffs, 0)).max()),
            f"domain filter on F={F}",
        )
        note(
            float(np.abs(dot(eF, f).coeffs - np.where(keep_ran, f.coeffs, 0)).max()),
            f"range filter on F={F}",
        )
        g = AlgebraElement(S, np.where(np.isin(np.arange(S.n), F), f.coeffs, 0))
        note(max_abs_diff(dot(g, eF), g), f"supported unit (right) on F={F}")
        note(max_abs_diff(dot(eF, g), g), f"supported unit (left) on F={F}")
    return worst, wit


def approx_identity_property(S, rng, count=50, epsilons=(1e-1, 1e-3)):
    """Decaying random functions are epsilon-reproduced by e_F once F
    captures all but epsilon of the mass."""
    for t in range(count):
        mags = 0.5 ** np.arange(S.n, dtype=float)
        rng.shuffle(mags)
        phase = np.exp(2j * np.pi * rng.uniform(size=S.n))
        f = AlgebraElement(S, mags * phase)
        order = np.argsort(-np.abs(f.coeffs))
        sorted_abs = np.abs(f.coeffs[order])
        tails = np.concatenate([np.cumsum(sorted_abs[::-1])[::-1][1:], [0.0]])
        for eps in epsilons:
            hits = np.flatnonzero(tails < eps)
            N = int(hits[0]) + 1 if hits.size else S.n
            F = order[:N].tolist()
            eF = approx_identity(S, F)
            d1 = (f - dot(f, eF)).norm(1)
            d2 = (f - dot(eF, f)).norm(1)
            if not (d1 < eps and d2 < eps):
                return False, f"trial {t}, eps={eps}, |F|={N}, dev={max(d1, d2):.3e}"
    return True, ""


def tau_homomorphism_deviation(rs, rng, trials=50):
    sr = rs.sr
    worst, wit = 0.0, ""
    deltas = [AlgebraElement.delta(sr, x) for x in range(sr.n)]
    for a in range(sr.n):
        for b in range(sr.n):
            lhs = restrict_to_base(conv(deltas[a], deltas[b]), rs)
            rhs = dot(restrict_to_base(deltas[a], rs), restrict_to_base(deltas[b], rs))
            dev = max_abs_diff(lhs, rhs)
            if dev > worst:
                worst, wit = dev, f"delta pair ({a}, {b})"
    for t in range(trials):
        f = AlgebraElement.random(sr, rng)
        g = AlgebraElement.random(sr, rng)
        lhs = restrict_to_base(conv(f, g), rs)
        rhs = dot(restrict_to_base(f, rs), restrict_to_base(g, rs))
        dev = max_abs_diff(lhs, rhs)
        if dev > 1e-12 and dev > worst:
            worst, wit = dev, f"random pair {t}"
    kernel = restrict_to_base(deltas[rs.zero_index], rs)
    if kernel.norm(1) != 0.0:
        worst, wit = max(worst, kernel.norm(1)), "restriction of d_0"
    return worst, wit


# ---------------------------------------------------------------------
# representations


def suite_reps(S, label, *, seed=0, trials=100, tol=None):
    tol = tol or Tolerances()
    rng = np.random.default_rng(seed)
    checks = []
    rs = build_restricted_semigroup(S)
    lam_r = restricted_left_regular(S)
    rho_r = restricted_right_regular(S)
    lam = left_regular(S)
    Lam = left_regular(rs.sr)

    for rep, cid, claim in (
        (
            lam_r,
            "reps.left-regular-restricted",
            "the restricted left regular representation is adjoint-closed, "
            "contractive, and multiplicative exactly on composable pairs",
        ),
        (
            rho_r,
            "reps.right-regular-restricted",
            "the restricted right regular representation satisfies the "
            "same three laws",
        ),
        (
            lam,
            "reps.left-regular-full",
            "the order-based left regular representation is a contractive "
            "*-homomorphism",
        ),
        (
            Lam,
            "reps.left-regular-adjoined",
            "the left regular representation of the zero-adjoined "
            "semigroup is a contractive *-homomorphism",
        ),
    ):
        rep_report = representation_report(rep, atol=0.0, contraction_slack=tol.contraction)
        witness = "; ".join(v.witness for v in rep_report.violations[:2])
        checks.append(
            Check(
                cid,
                claim,
                rep_report.ok,
                witness,
                max(rep_report.adjoint_deviation, rep_report.multiplicative_deviation),
            )
        )

    iso = np.abs(lam_r.mats @ lam_r.mats.conj().transpose(0, 2, 1) @ lam_r.mats - lam_r.mats).max()
    checks.append(
        Check(
            "reps.partial-isometry",
            "every lambda_r(x) satisfies M M* M = M",
            float(iso) == 0.0,
            deviation=float(iso),
        )
    )

    ext = extend_with_zero(lam_r, rs)
    ext_report = representation_report(ext, atol=0.0, contraction_slack=tol.contraction)
    round_ok = np.array_equal(ext.mats[: S.n], lam_r.mats) and np.abs(ext.mats[rs.zero_index]).max() == 0.0
    checks.append(
        Check(
            "reps.zero-extension",
            "extending by pi(0) = 0 yields a *-homomorphism of the "
            "zero-adjoined semigroup and restricts back to the original",
            ext_report.ok and bool(round_ok),
            "; ".join(v.witness for v in ext_report.violations[:2]),
        )
    )

    noncomposable = int((~S.composable_matrix()).sum())
    hit = restricted_multiplicativity_witness(lam)
    checks.append(
        Check(
            "reps.order-regular-not-restricted",
            "whenever non-composable pairs exist, the order-based left "
            "regular representation violates the composability rule",
            (noncomposable == 0) or (hit is not None),
            "all pairs composable" if noncomposable == 0 else (f"pair {hit[:2]}" if hit else "no witness found"),
        )
    )

    worst = 0.0
    for _ in range(min(trials, 25)):
        f, g = _random_elements(S, rng, 2)
        A = lift(lam_r, dot(f, g)) - lift(lam_r, f) @ lift(lam_r, g)
        B = lift(lam_r, f.tilde()) - lift(lam_r, f).conj().T
        worst = max(worst, float(np.abs(A).max()), float(np.abs(B).max()))
    checks.append(
        Check(
            "reps.lift-homomorphism",
            "the lift sends the dot product to operator products and the "
            "tilde involution to adjoints",
            worst < tol.identity,
            deviation=worst,
        )
    )

    worst = 0.0
    for _ in range(10):
        size = int(rng.integers(1, S.n + 1))
        F = rng.choice(S.n, size=size, replace=False).tolist()
        B = lift(lam_r, approx_identity(S, F))
        worst = max(
            worst,
            float(np.abs(B @ B - B).max()),
            float(np.abs(B - B.conj().T).max()),
        )
    checks.append(
        Check(
            "reps.unit-projection",
            "lifted finitely-supported units are orthogonal projections",
            worst == 0.0,
            deviation=worst,
        )
    )

    dev = compression_deviation(rs)
    checks.append(
        Check(
            "reps.compression",
            "the regular representation of the zero-adjoined semigroup, "
            "compressed off the zero coordinate, is lambda_r entrywise",
            dev == 0.0,
            deviation=dev,
        )
    )

    rep1 = lambda_inner_identity_report(S, trials=trials, seed=seed, tol=tol.identity)
    checks.append(
        Check(
            "reps.inner-identity-left",
            "<lambda_r(x*) xi, eta> = (xi . eta~)(x)",
            rep1.ok,
            rep1.witness,
            rep1.max_deviation,
        )
    )
    rep2 = rho_inner_identity_report(S, trials=trials, seed=seed + 1, tol=tol.identity)
    checks.append(
        Check(
            "reps.inner-identity-right",
            "<rho_r(x) xi, eta> = (eta~ . xi)(x)",
            rep2.ok,
            rep2.witness,
            rep2.max_deviation,
        )
    )
    if S.identity is not None:
        rep3 = rho_lift_identity_report(S, trials=trials, seed=seed + 2, tol=tol.identity)
        checks.append(
            Check(
                "reps.inner-identity-lifted",
                "<rho_r~(phi) xi, eta> = phi . (xi-check . eta-bar) summed "
                "over the idempotents (evaluation at 1 alone when 1 is the "
                "only idempotent)",
                rep3.ok,
                rep3.witness,
                max(rep3.summed, rep3.localized),
            )
        )

    checks.append(
        Check(
            "reps.faithful-restricted",
            "f -> lambda_r~(f) has full rank, so the lift is faithful",
            lift_rank(lam_r, tol.pivot) == S.n,
        )
    )
    checks.append(
        Check(
            "reps.faithful-full",
            "f -> lambda~(f) has full rank on the convolution algebra",
            lift_rank(lam, tol.pivot) == S.n,
        )
    )
    checks.append(
        Check(
            "reps.semisimple",
            "the trace form on the lifted algebra is nondegenerate "
            "(zero radical)",
            trace_form_rank(lam_r, tol.pivot) == S.n,
        )
    )
    return checks


# ---------------------------------------------------------------------
# C*-norms


def suite_cstar(S, label, *, seed=0, trials=100, tol=None, quotient_trials=None):
    tol = tol or Tolerances()
    rng = np.random.default_rng(seed)
    checks = []
    rs = build_restricted_semigroup(S)

    fs = [AlgebraElement.delta(S, x) for x in range(S.n)]
    fs += _random_elements(S, rng, min(trials, 25))

    margin = -np.inf
    for f in fs:
        margin = max(margin, cstar.reduced_cstar_norm(f) - f.norm(1))
    checks.append(
        Check(
            "cstar.lift-contractive",
            "||lambda_r~(f)|| <= ||f||_1",
            margin <= tol.norm,
            deviation=max(margin, 0.0),
        )
    )

    worst = 0.0
    for _ in range(min(trials, 25)):
        f = AlgebraElement.random(S, rng)
        worst = max(worst, cstar.cstar_identity_deviation(f))
    checks.append(
        Check(
            "cstar.identity",
            "||f~ . f|| = ||f||^2 in the reduced norm",
            worst < tol.cstar,
            deviation=worst,
        )
    )

    order_ok = True
    for f in fs[: S.n + 10]:
        report = cstar.norm_report(f)
        if not report.ordering_ok(tol.norm):
            order_ok = False
            break
    checks.append(
        Check(
            "cstar.norm-order",
            "reduced norm <= supremum norm <= 1-norm",
            order_ok,
        )
    )

    excess = -np.inf
    for i in range(5):
        f = AlgebraElement.random(S, rng)
        excess = max(excess, cstar.sigma_r_cross_check(f, trials=3, seed=seed + i))
    checks.append(
        Check(
            "cstar.sigma-cross-check",
            "randomized contractive restricted representations never "
            "exceed the supremum norm",
            excess <= tol.norm,
            deviation=max(excess, 0.0),
        )
    )

    q = cstar.quotient_match_report(
        S,
        trials=quotient_trials if quotient_trials is not None else min(trials, 40),
        seed=seed,
        tol=tol.cstar,
        minimized_tol=tol.minimized,
        rs=rs,
        label=label,
    )
    checks.append(
        Check(
            "cstar.quotient-match",
            "the quotient norm mod the zero line equals the reduced norm "
            "of the restriction",
            q.max_deviation < q.tolerance,
            q.witness,
            q.max_deviation,
        )
    )
    checks.append(
        Check(
            "cstar.quotient-minimized",
            "scalar minimization over c of ||f + c d_0|| agrees with the "
            "projected quotient norm",
            q.minimized_deviation < q.minimized_tolerance,
            deviation=q.minimized_deviation,
        )
    )

    dev = 0.0
    for _ in range(min(trials, 25)):
        fz = AlgebraElement.random(rs.sr, rng)
        dev = max(dev, cstar.l1_quotient_deviation(fz, rs.zero_index, rs))
    checks.append(
        Check(
            "cstar.l1-quotient",
            "min over c of ||f + c d_0||_1 equals the restricted 1-norm",
            dev < tol.entrywise,
            deviation=dev,
        )
    )

    worst = 0.0
    lam_r = restricted_left_regular(S)
    for i in range(5):
        M = rng.standard_normal((S.n, S.n)) + 1j * rng.standard_normal((S.n, S.n))
        worst = max(worst, abs(op_norm(M) - svd_op_norm(M)) / max(1.0, svd_op_norm(M)))
        f = AlgebraElement.random(S, rng)
        A = lift(lam_r, f)
        worst = max(worst, abs(op_norm(A) - svd_op_norm(A)) / max(1.0, svd_op_norm(A)))
    checks.append(
        Check(
            "cstar.opnorm-backend",
            PLUMBING,
            worst <= tol.norm,
            deviation=worst,
        )
    )
    return checks


SUITES = {
    "axioms": suite_axioms,
    "algebra": suite_algebra,
    "reps": suite_reps,
    "cstar": suite_cstar,
}


def run_suite(S, label, suite, **kwargs):
    start = time.perf_counter()
    checks = SUITES[suite](S, label, **kwargs)
    return SuiteReport(
        semigroup=label,
        suite=suite,
        checks=checks,
        seconds=time.perf_counter() - start,
    )


def run_suites(members, suites, *, seed=0, trials=100, tol=None):
    """Run the named suites over labelled semigroups; deterministic for a
    fixed seed.  Check lists are sorted by id, so assembly order does not
    matter."""
    tol = tol or Tolerances()
    reports = []
    for label, S in members:
        for suite in suites:
            reports.append(
                run_suite(S, label, suite, seed=seed, trials=trials, tol=tol)
            )
    return reports
