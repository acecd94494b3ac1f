import math

import numpy as np
import pytest

from restalg.errors import (
    InvalidGroupTable,
    NotAssociative,
    NotIdempotent,
    NotInverse,
    SizeLimit,
    StarMismatch,
)
from restalg.families import (
    PartialInjection,
    adjoin_identity,
    all_partial_injections,
    gen_brandt,
    gen_chain_semilattice,
    gen_group,
    gen_semilattice,
    gen_symmetric_inverse_monoid,
    symmetric_inverse_monoid_order,
)
from restalg.semigroups import build_from_table

RIGHT_ZERO = [[0, 1], [0, 1]]  # xy = y; idempotents do not commute


def test_trivial_table():
    S = build_from_table([[0]])
    assert S.n == 1
    assert S.star[0] == 0
    assert S.identity == 0
    assert S.zero == 0


def test_z2_star_is_identity_map():
    S = build_from_table([[0, 1], [1, 0]])
    assert S.star.tolist() == [0, 1]
    assert S.identity == 0
    assert S.zero is None


def test_right_zero_rejected_with_commuting_witness():
    with pytest.raises(NotInverse) as info:
        build_from_table(RIGHT_ZERO)
    assert info.value.witness == (0, 1)
    assert "commute" in str(info.value)


def test_not_associative_witness():
    # x*y = x except 1*1 = 0 breaks associativity on {0,1} with a third row
    table = [[0, 0, 0], [0, 0, 1], [0, 1, 2]]
    with pytest.raises((NotAssociative, NotInverse)) as info:
        build_from_table(table)
    if isinstance(info.value, NotAssociative):
        x, y, z = info.value.witness
        t = np.array(table)
        assert t[t[x, y], z] != t[x, t[y, z]]


def test_left_zero_rejected():
    with pytest.raises(NotInverse):
        build_from_table([[0, 0], [1, 1]])


def test_null_semigroup_not_regular():
    # xy = 0 always; the non-zero element has no generalized inverse
    with pytest.raises(NotInverse) as info:
        build_from_table([[0, 0], [0, 0]])
    assert info.value.witness[0] == 1


def test_supplied_star_checked():
    with pytest.raises(StarMismatch):
        build_from_table([[0, 1], [1, 0]], star=[1, 0])


def test_supplied_star_accepted():
    S = build_from_table([[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]],
                         star=[0, 3, 2, 1])
    assert S.star.tolist() == [0, 3, 2, 1]


def test_size_limit():
    with pytest.raises(SizeLimit):
        build_from_table([[0]], max_order=0)


def test_bad_entries_rejected():
    with pytest.raises(ValueError):
        build_from_table([[0, 2], [1, 0]])
    with pytest.raises(ValueError):
        build_from_table([[0, 1]])


# -- idempotents and the natural order ---------------------------------


def test_group_has_single_idempotent():
    S = gen_group("cyclic", 2)
    assert S.idempotents().tolist() == [0]
    assert S.is_group


def test_i2_has_four_idempotents():
    I2 = gen_symmetric_inverse_monoid(2)
    idem = I2.idempotents()
    assert len(idem) == 4
    # the idempotents are the partial identities: one per subset of {0, 1}
    elems = all_partial_injections(2)
    partial_identities = {
        i for i, e in enumerate(elems) if all(p == q for p, q in e.pairs)
    }
    assert set(idem.tolist()) == partial_identities


def test_semilattice_is_all_idempotent():
    for k in (2, 3, 4):
        S = gen_chain_semilattice(k)
        assert len(S.idempotents()) == k


def test_natural_order_reflexive():
    S = gen_chain_semilattice(3)
    for e in S.idempotents():
        assert S.natural_leq(e, e)


def test_natural_order_in_i2():
    I2 = gen_symmetric_inverse_monoid(2)
    elems = all_partial_injections(2)
    index = {e.pairs: i for i, e in enumerate(elems)}
    empty = index[()]
    ident = index[((0, 0), (1, 1))]
    r0 = index[((0, 0),)]
    r1 = index[((1, 1),)]
    assert I2.natural_leq(empty, ident)
    assert not I2.natural_leq(r0, r1)
    assert not I2.natural_leq(r1, r0)


def test_natural_order_rejects_non_idempotent():
    I2 = gen_symmetric_inverse_monoid(2)
    s = next(
        i for i, e in enumerate(all_partial_injections(2)) if e.pairs == ((0, 1),)
    )
    with pytest.raises(NotIdempotent):
        I2.natural_leq(s, I2.identity)


# -- partial injections -------------------------------------------------


def test_partial_injection_validation():
    with pytest.raises(ValueError):
        PartialInjection(2, ((0, 1), (1, 1)))  # repeated image
    with pytest.raises(ValueError):
        PartialInjection(2, ((0, 1), (0, 0)))  # repeated point
    with pytest.raises(ValueError):
        PartialInjection(2, ((0, 2),))  # out of range


def test_partial_injection_compose_inverse():
    s = PartialInjection(2, ((0, 1),))
    assert s.compose(s).pairs == ()  # 0 -> 1, then 1 is outside the domain
    assert s.inverse().pairs == ((1, 0),)
    assert s.inverse().compose(s).pairs == ((0, 0),)
    assert s.compose(s.inverse()).pairs == ((1, 1),)


def test_partial_injection_call():
    s = PartialInjection(3, ((0, 2), (2, 1)))
    assert s(0) == 2 and s(2) == 1 and s(1) is None
    assert s.domain() == (0, 2)
    assert s.image() == (1, 2)


# -- generators ----------------------------------------------------------


@pytest.mark.parametrize("n,order", [(1, 2), (2, 7), (3, 34), (4, 209)])
def test_symmetric_inverse_monoid_order(n, order):
    # independent oracle: the size formula sum C(n,k)^2 k!
    formula = sum(math.comb(n, k) ** 2 * math.factorial(k) for k in range(n + 1))
    assert formula == order
    assert symmetric_inverse_monoid_order(n) == order
    if n <= 3:
        S = gen_symmetric_inverse_monoid(n)
        assert S.n == order
        assert S.identity is not None
        assert S.zero is not None  # the empty map absorbs


def test_symmetric_inverse_monoid_size_guard():
    with pytest.raises(SizeLimit):
        gen_symmetric_inverse_monoid(5)
    with pytest.raises(SizeLimit):
        gen_symmetric_inverse_monoid(0)


def test_symmetric_group():
    S3 = gen_group("symmetric", 3)
    assert S3.n == 6
    assert S3.identity is not None
    assert not S3.is_group or len(S3.idempotents()) == 1


def test_gen_group_unknown_kind():
    with pytest.raises(ValueError):
        gen_group("dihedral", 3)


def test_chain_semilattice_order_structure():
    S = gen_chain_semilattice(2)
    assert S.identity == 0
    assert S.natural_leq(1, 0)
    assert not S.natural_leq(0, 1)
    assert S.labels == ["1", "e1"]


def test_gen_semilattice_from_meet_table():
    S = gen_semilattice([[0, 0, 0], [0, 1, 0], [0, 0, 2]])
    assert len(S.idempotents()) == 3
    with pytest.raises(ValueError):
        gen_semilattice([[1, 1], [1, 1]])  # not idempotent
    with pytest.raises(ValueError):
        gen_semilattice([[0, 0], [1, 1]])  # not commutative


def test_brandt_with_identity_is_b2_plus_one():
    B2 = gen_brandt([[0]], 2)
    assert B2.n == 5
    assert B2.zero == 4
    assert B2.identity is None
    S = adjoin_identity(B2)
    assert S.n == 6
    assert S.identity == 5
    assert S.zero == 4  # the old zero still absorbs


def test_brandt_rejects_non_group():
    with pytest.raises(InvalidGroupTable):
        gen_brandt([[0, 0], [0, 0]], 2)
    with pytest.raises(InvalidGroupTable):
        gen_brandt(RIGHT_ZERO, 2)


def test_adjoin_identity_on_monoid():
    Z2 = gen_group("cyclic", 2)
    S = adjoin_identity(Z2)
    assert S.n == 3
    assert S.identity == 2


# -- exhaustive structural properties over the corpus --------------------


def test_corpus_axioms_exhaustive(full_corpus):
    idx_of = {}
    for label, S in full_corpus:
        # revalidates associativity over all n^3 triples and regenerates star
        T = build_from_table(S.mul, S.star, max_order=max(256, S.n))
        assert np.array_equal(T.star, S.star), label
        idx = np.arange(S.n)
        assert np.array_equal(S.star[S.star], idx), label
        for x in range(S.n):
            assert np.array_equal(
                S.star[S.mul[x]], S.mul[S.star, S.star[x]]
            ), (label, x)
        idx_of[label] = S.n
    assert idx_of["I3"] == 34


def test_corpus_idempotents_closed_commutative(full_corpus):
    for label, S in full_corpus:
        E = S.idempotents()
        sub = S.mul[np.ix_(E, E)]
        assert np.array_equal(sub, sub.T), label
        assert np.all(np.isin(sub, E)), label
        assert set(E.tolist()) == set(S.ran.tolist()), label
