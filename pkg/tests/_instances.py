"""Random groups and symmetric bicharacters for property and acceptance tests."""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from colortwist.bichar import Bicharacter
from colortwist.fgabgroup import GroupPresentation, change_generators
from colortwist.scalar import MINUS_ONE, ONE, RootScalar

ORDERS = (2, 3, 4, 5, 6, 8, 12)
SYMBOLS = ("q", "p")


def random_orders(rng: random.Random, max_cyclic=4, max_free=2, max_order=None):
    while True:
        k = rng.randint(0, max_cyclic)
        orders = [rng.choice(ORDERS) for _ in range(k)] + [0] * rng.randint(0, max_free)
        if not orders:
            continue
        rng.shuffle(orders)
        if max_order is not None:
            size = 1
            for d in orders:
                size *= d
            if 0 in orders or size > max_order:
                continue
        return orders


def random_symmetric_values(rng: random.Random, orders):
    """Symmetric value matrix compatible with Z/d_1 x ... (0 = Z) in its cyclic presentation."""
    s = len(orders)
    vals = [[ONE] * s for _ in range(s)]
    for i in range(s):
        d = orders[i]
        if d % 2 == 0:  # includes d == 0 (free generator)
            vals[i][i] = rng.choice([ONE, MINUS_ONE])
        for j in range(i + 1, s):
            g = gcd(orders[i], orders[j])
            if g == 0:
                den = rng.choice([1, 2, 3, 4, 5, 6, 8, 12])
                free = {}
                if rng.random() < 0.8:
                    for sym in rng.sample(SYMBOLS, rng.randint(1, 2)):
                        free[sym] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
                v = RootScalar(Fraction(rng.randrange(den), den), free)
            else:
                v = RootScalar(Fraction(rng.randrange(g), g))
            vals[i][j] = v
            vals[j][i] = v.inverse()
    return vals


def random_unimodular(rng: random.Random, s: int, steps: int = 6):
    W = [[int(i == j) for j in range(s)] for i in range(s)]
    Wi = [row[:] for row in W]
    if s < 2:
        return W, Wi
    for _ in range(steps):
        i, j = rng.sample(range(s), 2)
        c = rng.choice([-2, -1, 1, 2])
        # W <- (I + c e_ij) W ; W^-1 <- W^-1 (I - c e_ij)
        W[i] = [a + c * b for a, b in zip(W[i], W[j])]
        for row in Wi:
            row[j] -= c * row[i]
    return W, Wi


def scramble(chi: Bicharacter, rng: random.Random):
    """The same commutation factor on a random unimodular change of generators."""
    P = chi.presentation
    W, Wi = random_unimodular(rng, P.num_generators)
    Q = change_generators(P, W, Wi)
    vals = [[chi.eval_words(W[k], W[l]) for l in range(len(W))] for k in range(len(W))]
    return Bicharacter(Q, vals)


def add_redundant_generator(chi: Bicharacter, word, name="h"):
    """Prepend a generator h = word (relation h - word = 0), keeping the same group."""
    P = chi.presentation
    s = P.num_generators
    rels = [(0,) + tuple(r) for r in P.relations] + [(1,) + tuple(-x for x in word)]
    Q = GroupPresentation((name,) + P.generators, tuple(rels))
    words = [list(word)] + [[int(i == j) for j in range(s)] for i in range(s)]
    vals = [[chi.eval_words(a, b) for b in words] for a in words]
    return Bicharacter(Q, vals)


def random_instance(rng: random.Random, max_order=None, scrambled=None, **kw):
    orders = random_orders(rng, max_order=max_order, **kw)
    P = GroupPresentation.cyclic_product(orders)
    chi = Bicharacter(P, random_symmetric_values(rng, orders))
    if scrambled is None:
        scrambled = rng.random() < 0.5
    if scrambled:
        chi = scramble(chi, rng)
    return chi


def enumerate_root_solutions(r, A: RootScalar, n, B: RootScalar):
    """All x with x^r = A and x^n = B, by listing the r candidate r-th roots."""
    out = []
    for j in range(r):
        x = RootScalar((A.torsion + j) / r, {s: e / r for s, e in A.free})
        if x ** r == A and x ** n == B:
            out.append(x)
    return out
