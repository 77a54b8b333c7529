import random

import pytest

from colortwist.bichar import Bicharacter, Cocycle2, antisymmetrize
from colortwist.errors import InfiniteGroup
from colortwist.fgabgroup import GroupPresentation
from colortwist.oracle import (
    all_bicharacters,
    bicharacter_census,
    check_cocycle_identity,
    coboundary_search,
    exhaustive_bimultiplicativity,
    exhaustive_parity,
    exhaustive_twist_check,
    is_coboundary,
)
from colortwist.scalar import MINUS_ONE, ONE, root_of_unity
from colortwist.scheunert import construct_sigma, reduce_to_alternating

from _instances import random_instance

Z1 = GroupPresentation(())
Z2 = GroupPresentation.cyclic_product([2])
Z4 = GroupPresentation.cyclic_product([4])
V4 = GroupPresentation.cyclic_product([2, 2])


def test_cocycle_identity_trivial():
    assert check_cocycle_identity(Cocycle2.trivial(V4)).ok


def test_cocycle_identity_adversarial():
    t = Z4.generator(0)
    # -1 only at (t, t): not bimultiplicative
    report = check_cocycle_identity(lambda a, b: MINUS_ONE if a == t and b == t else ONE, Z4)
    assert not report.ok
    a, b, c = (Z4.element(w) for w in report.violations[0])
    f = lambda x, y: MINUS_ONE if x == t and y == t else ONE  # noqa: E731
    assert f(a, b * c) * f(b, c) != f(a, b) * f(a * b, c)


def test_bimultiplicativity_rejects_unvalidated_matrix():
    assert exhaustive_bimultiplicativity(Bicharacter(V4, [[MINUS_ONE, ONE], [ONE, ONE]])).ok
    bad = Bicharacter(Z2, [[root_of_unity(1, 4)]], validate=False)
    report = exhaustive_bimultiplicativity(bad)
    assert not report.ok and report.violations


def test_infinite_groups_rejected():
    ZZ = GroupPresentation(("e",))
    with pytest.raises(InfiniteGroup):
        check_cocycle_identity(Cocycle2.trivial(ZZ))
    with pytest.raises(InfiniteGroup):
        is_coboundary(Bicharacter.trivial(ZZ))
    with pytest.raises(InfiniteGroup):
        bicharacter_census(ZZ, 2)


def test_is_coboundary_examples():
    ok, witness = is_coboundary(Bicharacter(Z2, [[MINUS_ONE]]))
    b = witness["potential"]
    assert ok and b[(1,)] == root_of_unity(1, 4)
    assert b[(1,)] ** 2 == MINUS_ONE
    beta = Bicharacter(V4, [[ONE, MINUS_ONE], [ONE, ONE]])
    ok, witness = is_coboundary(beta)
    assert not ok and witness == {"asymmetric_pair": ["g1", "g2"]}
    ok, witness = is_coboundary(Bicharacter.trivial(V4))
    assert ok and all(v == ONE for v in witness["potential"].values())


def test_coboundary_potential_is_exact():
    chi = Bicharacter(Z4, [[root_of_unity(1, 4)]])
    b = coboundary_search(chi)
    for g in range(4):
        for h in range(4):
            lhs = b[((g,))] * b[((h,))] * b[((g + h) % 4,)].inverse()
            assert lhs == chi.eval_words([g], [h])


@pytest.mark.parametrize("orders", [[2], [3], [4], [2, 2], [2, 4], [6], [8], [2, 2, 2]])
def test_criterion_agrees_with_search(orders):
    P = GroupPresentation.cyclic_product(orders)
    for chi in all_bicharacters(P, P.exponent):
        decision, _ = is_coboundary(chi, cross_check_limit=0)
        assert decision == (coboundary_search(chi) is not None)


def test_census_examples():
    t = bicharacter_census(Z2, 2)
    assert (t.num_bicharacters, t.class_sizes) == (2, [2])
    assert t.summary_line() == "2 bicharacters, 1 class"
    t = bicharacter_census(Z1)
    assert t.summary_line() == "1 bicharacter, 1 class"
    t = bicharacter_census(V4, 2)
    assert t.num_bicharacters == 16 and sorted(t.class_sizes) == [8, 8]
    for cls in t.classes:
        alt = {antisymmetrize(t.bicharacters[k]).values[0][1] for k in cls}
        assert len(alt) == 1


def test_census_enumeration_is_complete():
    # brute force: every matrix over mu_4 on Z/2 x Z/4 that passes validation
    import itertools
    from colortwist.errors import RelationIncompatible

    P = GroupPresentation.cyclic_product([2, 4])
    count = 0
    for ks in itertools.product(range(4), repeat=4):
        vals = [[root_of_unity(ks[0], 4), root_of_unity(ks[1], 4)], [root_of_unity(ks[2], 4), root_of_unity(ks[3], 4)]]
        try:
            Bicharacter(P, vals)
            count += 1
        except RelationIncompatible:
            pass
    found = list(all_bicharacters(P, 4))
    assert len(found) == count == len(set(found))


@pytest.mark.parametrize("seed", range(30))
def test_construct_sigma_outputs_pass_oracle(seed):
    chi = random_instance(random.Random(seed), max_order=64)
    sigma = construct_sigma(reduce_to_alternating(chi))
    assert check_cocycle_identity(sigma).ok
    assert exhaustive_bimultiplicativity(sigma).ok
    assert exhaustive_twist_check(chi, sigma).ok
    assert exhaustive_parity(chi).ok


def test_twist_check_detects_wrong_sigma():
    chi = Bicharacter(V4, [[ONE, MINUS_ONE], [MINUS_ONE, ONE]])
    assert not exhaustive_twist_check(chi, Cocycle2.trivial(V4)).ok
