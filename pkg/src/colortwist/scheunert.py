"""Cocycle twisting of a commutation factor to the super sign.

Given a symmetric bicharacter chi, produce a bimultiplicative sigma with
``chi * sigma / sigma^T == chi0``. The extension argument over a chain of
subgroups is carried out generator by generator, which terminates because the
input group is finitely generated.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .bichar import (
    Bicharacter,
    Cocycle2,
    antisymmetrize,
    chi0,
    is_alternating,
    require_symmetric,
    twist_character,
)
from .errors import DiagonalObstruction
from .fgabgroup import GroupElement, GroupPresentation, cyclic_intersection
from .scalar import ONE, RootScalar, canonical_root, solve_root_constraints

log = logging.getLogger(__name__)

STRATEGIES = ("canonical", "incremental")


def reduce_to_alternating(chi: Bicharacter) -> Bicharacter:
    """beta = chi0(chi) / chi, alternating whenever chi is symmetric.

    Any sigma whose antisymmetrization is beta twists chi exactly onto chi0.
    """
    require_symmetric(chi)
    return chi0(chi) * chi.inverse()


@dataclass
class ExtensionState:
    """sigma on the subgroup K generated by ``adjoined`` (user generator indices)."""

    beta: Bicharacter
    adjoined: list = field(default_factory=list)
    sigma: dict = field(default_factory=dict)  # (i, j) -> RootScalar, i, j in adjoined

    @property
    def presentation(self) -> GroupPresentation:
        return self.beta.presentation

    def element(self, word) -> GroupElement:
        return GroupElement(self.presentation, word)

    def word_over_adjoined(self, expression: Sequence[int]) -> list:
        """Word over all user generators from coefficients on ``adjoined``."""
        w = [0] * self.presentation.num_generators
        for idx, c in zip(self.adjoined, expression):
            w[idx] += c
        return w

    def sigma_words(self, u: Sequence[int], v: Sequence[int]) -> RootScalar:
        """sigma_K(u, v) for words supported on adjoined generators."""
        out = ONE
        for i in self.adjoined:
            if not u[i]:
                continue
            for j in self.adjoined:
                if v[j]:
                    out = out * self.sigma[(i, j)] ** (u[i] * v[j])
        return out

    def unit(self, i: int) -> list:
        w = [0] * self.presentation.num_generators
        w[i] = 1
        return w

    def cocycle(self) -> Cocycle2:
        """The value matrix; requires every generator adjoined."""
        s = self.presentation.num_generators
        return Cocycle2(self.presentation, [[self.sigma[(i, j)] for j in range(s)] for i in range(s)])


@dataclass
class RightMultiplier:
    """f(u) = sigma(u, t) on the adjoined generators."""

    values: dict  # adjoined index -> RootScalar
    n: int
    word: list  # the word v with t**n == v

    def __call__(self, u: Sequence[int]) -> RootScalar:
        out = ONE
        for i, f in self.values.items():
            if u[i]:
                out = out * f ** u[i]
        return out


def build_f(state: ExtensionState, t: int, n: int, expression: Sequence[int]) -> RightMultiplier:
    """Multiplicative f on K with f(u)**n == sigma(u, v) and f(v) == 1, where t**n == v."""
    v = state.word_over_adjoined(expression)
    diag = state.sigma_words(v, v)
    if diag != ONE:
        raise DiagonalObstruction(
            f"sigma(v, v) = {diag} != 1 for the word v = {v} expressing "
            f"{state.presentation.generators[t]}^{n}",
            generator=t, n=n, word=v, value=diag,
        )
    values = {}
    # M starts as <v> with f(v) = 1 and grows by one generator of K at a time
    m_words = [v]
    m_values = [ONE]
    for w in state.adjoined:
        ww = state.unit(w)
        target = state.sigma_words(ww, v)
        hit = cyclic_intersection(state.element(ww), [state.element(z) for z in m_words])
        if hit is None:
            fw = canonical_root(target, n)
        else:
            r, expr = hit
            A = ONE
            for fz, c in zip(m_values, expr):
                A = A * fz ** c
            fw = solve_root_constraints(r, A, n, target)
        values[w] = fw
        m_words.append(ww)
        m_values.append(fw)
    return RightMultiplier(values=values, n=n, word=v)


def adjoin_generator(state: ExtensionState, t: int) -> ExtensionState:
    """Extend sigma from K to <K, t>, keeping sigma / sigma^T == beta on it."""
    beta = state.beta
    tw = state.unit(t)
    hit = cyclic_intersection(state.element(tw), [state.element(state.unit(k)) for k in state.adjoined])
    sigma = dict(state.sigma)
    if hit is None or state.element(state.word_over_adjoined(hit[1])).is_identity and hit[0] > 1:
        # <t> meets K trivially, so <K, t> = <t> x K: sigma(k, t) = beta(k, t), sigma(t, k) = 1
        for k in state.adjoined:
            sigma[(k, t)] = beta.values[k][t]
            sigma[(t, k)] = ONE
        sigma[(t, t)] = ONE
    elif hit[0] == 1:
        # t already lies in K: its values are forced by substitution
        w = state.word_over_adjoined(hit[1])
        for k in state.adjoined:
            sigma[(t, k)] = state.sigma_words(w, state.unit(k))
            sigma[(k, t)] = state.sigma_words(state.unit(k), w)
        sigma[(t, t)] = state.sigma_words(w, w)
    else:
        n, expression = hit
        log.debug("adjoin %s: %s^%d lies in K", t, state.presentation.generators[t], n)
        f = build_f(state, t, n, expression)
        for k in state.adjoined:
            sigma[(k, t)] = f.values[k]
            sigma[(t, k)] = beta.values[t][k] * f.values[k]
        sigma[(t, t)] = ONE
    return ExtensionState(beta=beta, adjoined=state.adjoined + [t], sigma=sigma)


def _canonical_sigma(beta: Bicharacter) -> Cocycle2:
    P = beta.presentation
    basis = P.canonical_generators()
    p = len(basis)
    # strictly upper triangular in the canonical basis
    can = [[beta.eval(basis[i], basis[j]) if i < j else ONE for j in range(p)] for i in range(p)]
    s = P.num_generators
    coords = [P.canonical_coords([int(k == g) for k in range(s)]) for g in range(s)]
    vals = []
    for a in range(s):
        row = []
        for b in range(s):
            out = ONE
            for i in range(p):
                if not coords[a][i]:
                    continue
                for j in range(i + 1, p):
                    if coords[b][j]:
                        out = out * can[i][j] ** (coords[a][i] * coords[b][j])
            row.append(out)
        vals.append(row)
    return Cocycle2(P, vals)


def construct_sigma(beta: Bicharacter, strategy: str = "canonical") -> Cocycle2:
    """A bimultiplicative sigma with antisymmetrize(sigma) == beta.

    ``canonical`` works in Smith coordinates and cannot fail; ``incremental``
    adjoins the user's generators in order and may raise DiagonalObstruction
    or NoSolution.
    """
    if not is_alternating(beta):
        raise ValueError("construct_sigma needs an alternating bicharacter")
    if strategy == "canonical":
        sigma = _canonical_sigma(beta)
    elif strategy == "incremental":
        state = ExtensionState(beta=beta)
        for t in range(beta.presentation.num_generators):
            state = adjoin_generator(state, t)
        sigma = state.cocycle()
    else:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    assert antisymmetrize(sigma) == beta
    return sigma


@dataclass
class Certificate:
    chi: Bicharacter
    sigma: Cocycle2
    chi0: Bicharacter
    chi_sigma: Bicharacter
    strategy: str
    checks: list  # dicts: identity, arguments, lhs, rhs, ok
    exhaustive: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.checks) and (
            self.exhaustive is None or all(v["ok"] for v in self.exhaustive.values())
        )


def scheunert_certificate(chi: Bicharacter, strategy: str = "canonical", exhaustive_limit: int = 64):
    """Return (sigma, certificate) twisting chi to its super sign."""
    beta = reduce_to_alternating(chi)
    sigma = construct_sigma(beta, strategy)
    target = chi0(chi)
    twisted = twist_character(chi, sigma)
    P = chi.presentation
    gens = P.generators
    s = P.num_generators
    checks = []
    for i in range(s):
        for j in range(s):
            lhs, rhs = twisted.values[i][j], target.values[i][j]
            checks.append({
                "identity": "chi*sigma/sigma^T = chi0",
                "arguments": [gens[i], gens[j]],
                "lhs": lhs, "rhs": rhs, "ok": lhs == rhs,
            })
    for k, _ in enumerate(P.relations):
        for j in range(s):
            for side in ("first", "second"):
                val = ONE
                for i, e in enumerate(P.relations[k]):
                    if e:
                        val = val * (sigma.values[i][j] if side == "first" else sigma.values[j][i]) ** e
                checks.append({
                    "identity": f"sigma respects relation ({side} argument)",
                    "arguments": [k, gens[j]],
                    "lhs": val, "rhs": ONE, "ok": val == ONE,
                })
    exhaustive = None
    if P.is_finite and P.order <= exhaustive_limit:
        from . import oracle

        exhaustive = {
            "coboundary_relation": oracle.exhaustive_twist_check(chi, sigma).summary(),
            "bimultiplicativity": oracle.exhaustive_bimultiplicativity(sigma).summary(),
            "cocycle_identity": oracle.check_cocycle_identity(sigma).summary(),
        }
    cert = Certificate(chi=chi, sigma=sigma, chi0=target, chi_sigma=twisted, strategy=strategy,
                       checks=checks, exhaustive=exhaustive)
    return sigma, cert
