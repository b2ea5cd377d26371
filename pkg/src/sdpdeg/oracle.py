"""Brute-force evaluators used as independent ground truth in property tests.

Everything here favors transparency over speed: root tuples and subsets are
enumerated outright, products are formed without caps, and no code is shared
with the optimized degree algorithms these oracles validate.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations, product
from math import prod
from typing import Sequence

from .polynomial import Coeff, SparsePolynomial, xy_space


class RootedPolynomial:
    """A monic univariate polynomial given by its pairwise-distinct roots."""

    __slots__ = ("roots",)

    def __init__(self, roots: Sequence[Coeff]):
        roots = tuple(roots)
        if not roots:
            raise ValueError("need at least one root")
        if len(set(roots)) != len(roots):
            raise ValueError("roots must be pairwise distinct")
        self.roots = roots

    @property
    def degree(self) -> int:
        return len(self.roots)

    def derivative_at(self, root: Coeff) -> Coeff:
        """Q'(root) for Q(x) = prod(x - r): the product over the other roots."""
        return prod(root - other for other in self.roots if other != root)

    def __repr__(self) -> str:
        return f"RootedPolynomial(roots={list(self.roots)!r})"


def residue_sum(qs: Sequence[RootedPolynomial], f: SparsePolynomial) -> Fraction:
    """Sum of F(roots) / (Q_1'...Q_n') over all root tuples.

    Equals the coefficient of x_1^{d_1}...x_n^{d_n} in F, where d_i is one
    less than the degree of Q_i, provided deg(F) <= d_1 + ... + d_n.
    """
    if f.space.arity != len(qs):
        raise ValueError(f"F has arity {f.space.arity} but there are {len(qs)} polynomials")
    bound = sum(q.degree - 1 for q in qs)
    if f.total_degree() > bound:
        raise ValueError(f"deg(F) exceeds the hypothesis bound {bound}")
    total = Fraction(0)
    for roots in product(*(q.roots for q in qs)):
        denom = prod(q.derivative_at(a) for q, a in zip(qs, roots))
        total += Fraction(f.evaluate(roots)) / denom
    return total


def _block_permutation_maps(r: int, n: int) -> list[tuple[int, ...]]:
    maps = []
    for sigma in permutations(range(r)):
        for theta in permutations(range(r, n)):
            maps.append(sigma + theta)
    return maps


def is_doubly_symmetric(p: SparsePolynomial, r: int) -> bool:
    """Invariance under permutations within the x block and within the y block."""
    n = p.space.arity
    if not 1 <= r <= n - 1:
        raise ValueError(f"block split r={r} invalid for arity {n}")
    swaps = []
    for i in list(range(r - 1)) + list(range(r, n - 1)):
        mapping = list(range(n))
        mapping[i], mapping[i + 1] = mapping[i + 1], mapping[i]
        swaps.append(mapping)
    for mapping in swaps:
        permuted = {
            tuple(mono[mapping[i]] for i in range(n)): c for mono, c in p.terms.items()
        }
        if permuted != dict(p.terms):
            return False
    return True


def doubly_symmetric_sum(
    p: SparsePolynomial, lambdas: Sequence[Coeff], r: int
) -> Fraction:
    """Subset sum of P(lambda_I, lambda_{I^c}) over the difference products.

    For doubly symmetric P of degree at most r(n-r) this equals
    d(r,n) / (r!(n-r)!) with d(r,n) from d_coefficient, independent of the
    (pairwise-distinct) lambda values.
    """
    n = p.space.arity
    lams = tuple(lambdas)
    if len(lams) != n:
        raise ValueError(f"need {n} values, got {len(lams)}")
    if len(set(lams)) != n:
        raise ValueError("values must be pairwise distinct")
    if not is_doubly_symmetric(p, r):
        raise ValueError("polynomial is not doubly symmetric")
    if p.total_degree() > r * (n - r):
        raise ValueError(f"degree exceeds the hypothesis bound {r * (n - r)}")
    total = Fraction(0)
    for subset in combinations(range(n), r):
        chosen = set(subset)
        rest = tuple(j for j in range(n) if j not in chosen)
        point = [lams[i] for i in subset] + [lams[j] for j in rest]
        denom = prod(lams[i] - lams[j] for i in subset for j in rest)
        total += Fraction(p.evaluate(point)) / denom
    return total


def d_coefficient(p: SparsePolynomial, r: int, n: int) -> Coeff:
    """Coefficient of (x_1...y_{n-r})^(n-1) in P times the difference products.

    The multiplier is prod_{j!=i}(x_i-x_j) * prod_{j!=i}(y_i-y_j) *
    prod_{i,j}(y_i - x_j), formed here without caps or reordering.
    """
    space = p.space
    if space.arity != n:
        raise ValueError(f"polynomial has arity {space.arity}, expected {n}")
    s = n - r
    xs = [space.variable(i) for i in range(r)]
    ys = [space.variable(r + i) for i in range(s)]
    full = p
    for i in range(r):
        for j in range(r):
            if i != j:
                full = full * (xs[i] - xs[j])
    for i in range(s):
        for j in range(s):
            if i != j:
                full = full * (ys[i] - ys[j])
    for i in range(s):
        for j in range(r):
            full = full * (ys[i] - xs[j])
    return full.coefficient_of((n - 1,) * n)


def random_doubly_symmetric(
    r: int, n: int, max_deg: int, seed: int
) -> SparsePolynomial:
    """A random integer polynomial symmetrized over both variable blocks.

    Orbit-sum symmetrization over S_r x S_{n-r} guarantees the double
    symmetry outright; deterministic for a fixed seed.
    """
    if not 1 <= r <= n - 1:
        raise ValueError(f"block split r={r} invalid for n={n}")
    if max_deg < 0 or max_deg > r * (n - r):
        raise ValueError(f"max_deg must lie in [0, {r * (n - r)}]")
    rng = random.Random(seed)
    space = xy_space(r, n - r)
    base: dict[tuple[int, ...], int] = {}
    for _ in range(n + max_deg + 2):
        exponents = [0] * n
        for _ in range(rng.randint(0, max_deg)):
            exponents[rng.randrange(n)] += 1
        coeff = rng.randint(-5, 5)
        mono = tuple(exponents)
        base[mono] = base.get(mono, 0) + coeff
    symmetrized: dict[tuple[int, ...], int] = {}
    for mapping in _block_permutation_maps(r, n):
        for mono, c in base.items():
            image = tuple(mono[mapping[i]] for i in range(n))
            symmetrized[image] = symmetrized.get(image, 0) + c
    return SparsePolynomial(space, symmetrized)
