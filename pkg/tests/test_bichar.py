import random

import pytest

from colortwist.bichar import (
    Bicharacter,
    Cocycle2,
    antisymmetrize,
    chi0,
    generator_parities,
    is_alternating,
    is_symmetric,
    parity,
    twist_character,
)
from colortwist.errors import NotASign, PresentationMismatch, RelationIncompatible
from colortwist.fgabgroup import GroupPresentation, enumerate_elements
from colortwist.scalar import MINUS_ONE, ONE, root_of_unity, symbol

from _instances import random_instance

q = symbol("q")
half = root_of_unity(1, 2)
z3 = root_of_unity(1, 3)
V4 = GroupPresentation.cyclic_product([2, 2])
Z2 = GroupPresentation.cyclic_product([2])
ZZ = GroupPresentation(("e1", "e2"))
Z3Z3 = GroupPresentation.cyclic_product([3, 3])


def test_eval_examples():
    t = Bicharacter.trivial(V4)
    assert t.eval(V4.element([1, 1]), V4.element([1, 0])) == ONE
    chi = Bicharacter(V4, [[half, half], [half, half]])
    g = V4.element([1, 1])
    assert chi(g, g) == ONE
    chi = Bicharacter(ZZ, [[ONE, q], [q.inverse(), ONE]])
    assert chi(ZZ.element([2, 0]), ZZ.element([0, 1])) == symbol("q", 2)


def test_eval_rejects_foreign_elements():
    chi = Bicharacter.trivial(V4)
    with pytest.raises(PresentationMismatch):
        chi(Z2.element([1]), V4.element([0, 1]))


def test_eval_independent_of_representative():
    chi = Bicharacter(Z3Z3, [[ONE, z3], [z3.inverse(), ONE]])
    a = Z3Z3.element([1, 2])
    assert chi.eval_words([1, 2], [2, 0]) == chi.eval_words([4, -1], [-1, 3])
    assert chi(a, a) == ONE


def test_is_symmetric_examples():
    assert is_symmetric(Bicharacter.trivial(ZZ))
    assert is_symmetric(Bicharacter(ZZ, [[ONE, q], [q.inverse(), ONE]]))
    assert not is_symmetric(Bicharacter(ZZ, [[ONE, q], [ONE, ONE]]))


def test_parity_examples():
    t = Bicharacter.trivial(V4)
    assert all(parity(t, g) == 1 for g in enumerate_elements(V4))
    odd = Bicharacter(Z2, [[MINUS_ONE]])
    assert parity(odd, Z2.generator(0)) == -1
    allm = Bicharacter(V4, [[MINUS_ONE] * 2] * 2)
    assert parity(allm, V4.element([1, 1])) == 1


def test_parity_not_a_sign():
    # symmetric-looking on the diagonal but chi(t,t) = zeta_3 on Z/3 x Z
    P = GroupPresentation.cyclic_product([3])
    chi = Bicharacter(P, [[z3]])
    with pytest.raises(NotASign):
        parity(chi, P.generator(0))


def test_chi0_examples():
    assert chi0(Bicharacter(V4, [[ONE, MINUS_ONE], [MINUS_ONE, ONE]])) == Bicharacter.trivial(V4)
    assert chi0(Bicharacter(Z2, [[MINUS_ONE]])).values[0][0] == MINUS_ONE
    c = chi0(Bicharacter(V4, [[MINUS_ONE, ONE], [ONE, ONE]]))
    assert c.values == ((MINUS_ONE, ONE), (ONE, ONE))


def test_antisymmetrize_examples():
    assert antisymmetrize(Cocycle2.trivial(ZZ)) == Bicharacter.trivial(ZZ)
    sym = Cocycle2(Z3Z3, [[z3, z3], [z3, ONE]])
    assert antisymmetrize(sym) == Bicharacter.trivial(Z3Z3)
    a = antisymmetrize(Cocycle2(ZZ, [[ONE, q], [ONE, ONE]]))
    assert a.values[0][1] == q and a.values[1][0] == q.inverse()


def test_twist_character_examples():
    chi = Bicharacter(ZZ, [[ONE, q], [q.inverse(), ONE]])
    assert twist_character(chi, Cocycle2.trivial(ZZ)) == chi
    tw = twist_character(Bicharacter.trivial(V4), Cocycle2(V4, [[ONE, MINUS_ONE], [ONE, ONE]]))
    assert tw.values[0][1] == MINUS_ONE and tw.values[1][0] == MINUS_ONE
    sym = Cocycle2(ZZ, [[q, q ** 2], [q ** 2, ONE]])
    assert twist_character(chi, sym) == chi
    with pytest.raises(PresentationMismatch):
        twist_character(chi, Cocycle2.trivial(V4))


def test_is_alternating_examples():
    assert is_alternating(Bicharacter.trivial(V4))
    assert not is_alternating(Bicharacter(Z2, [[MINUS_ONE]]))
    assert is_alternating(Bicharacter(Z3Z3, [[ONE, z3], [z3.inverse(), ONE]]))
    # trivial diagonal but not symmetric: (g1 g2, g1 g2) picks up q^2
    assert not is_alternating(Bicharacter(ZZ, [[ONE, q], [q, ONE]]))


def test_relation_compatibility_rejects_bad_values():
    with pytest.raises(RelationIncompatible) as info:
        Bicharacter(Z3Z3, [[ONE, half], [half, ONE]])
    assert info.value.relation_index in (0, 1)
    # second-argument failure only
    with pytest.raises(RelationIncompatible):
        Bicharacter(V4, [[ONE, ONE], [root_of_unity(1, 4), ONE]])
    # bypassing validation keeps the matrix and reports defects
    bad = Bicharacter(V4, [[ONE, ONE], [root_of_unity(1, 4), ONE]], validate=False)
    assert bad.relation_defects()


def test_free_symbols_incompatible_with_torsion():
    P = GroupPresentation.cyclic_product([2, 0])
    with pytest.raises(RelationIncompatible):
        Bicharacter(P, [[ONE, q], [q.inverse(), ONE]])


@pytest.mark.parametrize("seed", range(40))
def test_parity_multiplicative_and_chi0_laws(seed):
    rng = random.Random(seed)
    chi = random_instance(rng, max_order=64)
    P = chi.presentation
    elems = list(enumerate_elements(P))
    par = {g: parity(chi, g) for g in elems}
    for g in elems:
        for h in elems:
            assert par[g * h] == par[g] * par[h]
    even = sum(1 for g in elems if par[g] == 1)
    assert len(elems) // even in (1, 2) and len(elems) % even == 0
    c = chi0(chi)
    assert is_symmetric(c)
    for g in elems[:12]:
        for h in elems[:12]:
            v = c(g, h)
            assert v in (ONE, MINUS_ONE)
            assert (v == MINUS_ONE) == (par[g] == par[h] == -1)
    assert generator_parities(c) == generator_parities(chi)


@pytest.mark.parametrize("seed", range(25))
def test_antisymmetrization_is_alternating(seed):
    rng = random.Random(1000 + seed)
    chi = random_instance(rng)
    P = chi.presentation
    # any relation-compatible matrix is a bimultiplicative sigma; chi and chi^2 are handy ones
    base = chi * chi if rng.random() < 0.5 else chi
    sigma = Cocycle2(P, base.values)
    a = antisymmetrize(sigma)
    assert is_alternating(a)
    assert is_symmetric(a)
    assert a * a.transpose() == Bicharacter.trivial(P)
