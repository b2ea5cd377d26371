"""The algebraic degree of semidefinite programming, by three exact algorithms.

For a triple (m, n, r) inside the Pataki window
C(n-r+1,2) <= m <= C(n+1,2) - C(r+1,2), the degree delta(m,n,r) of the
univariate polynomials behind a generic rank-r optimum is computed by:

  * coefficient extraction ("theorem1"): expand
    h_l(X) * h_k(Y) * prod(x_i - x_j) * prod(y_i - y_j) * prod(y_i - x_j)
    over x1..xr, y1..y_{n-r} with every exponent capped at n-1, read the
    coefficient c of (x1...y_{n-r})^(n-1), and return (-1)^k * c / (r!(n-r)!);

  * the residue subset sum ("residue"): for pairwise-distinct sample values
    lambda_1..lambda_n, sum over r-subsets I of [n] the products
    h_l(Lambda_I) * h_k(Lambda_{I^c}) / prod_{i in I, j not in I}(l_i - l_j)
    and multiply by (-1)^k, where Lambda_I is the multiset of pairwise sums
    of the chosen values and each h is evaluated as a determinant in
    elementary symmetric values (fraction-free Bareiss), deliberately NOT
    through the recurrence the coefficient path uses;

  * closed forms ("closed_form"/"duality_reduced") for r = n-1 and for
    m in {3, 4} at r = n-2, reached directly or through the duality
    delta(m,n,r) = delta(C(n+1,2)-m, n, n-r).

Here k = m - C(n-r+1,2) and l = C(n+1,2) - C(r+1,2) - m are the slacks of m
against the two Pataki bounds ("ell" in code); k + ell = r(n-r).  Every
result is asserted to be a positive integer; all arithmetic is exact.
"""

from __future__ import annotations

import enum
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial, prod
from typing import Sequence, Union

from .polynomial import (
    Coeff,
    complete_homogeneous,
    pairwise_sum_forms,
    product_coefficient,
    xy_space,
)
from .schur import bareiss_det


class InvalidTripleError(ValueError):
    """The triple (m, n, r) does not admit an algebraic degree."""


class UnsupportedRankError(InvalidTripleError):
    """Rank outside 1 <= r <= n-1; the Pataki window degenerates there."""


class PatakiBoundError(InvalidTripleError):
    """m falls outside the Pataki window; the message names the violated bound."""


class ConsistencyError(ArithmeticError):
    """An internal identity failed (non-integral or non-positive degree)."""


class CrossCheckError(RuntimeError):
    """Two independent algorithms disagreed; carries both results."""

    def __init__(self, first: "DegreeResult", second: "DegreeResult"):
        self.results = (first, second)
        t = first.triple
        super().__init__(
            f"method disagreement on (m={t.m}, n={t.n}, r={t.r}): "
            f"{first.method.value} gives {first.delta}, "
            f"{second.method.value} gives {second.delta}"
        )


class Method(enum.Enum):
    """How a degree value was obtained."""

    THEOREM1 = "theorem1"
    RESIDUE = "residue"
    CLOSED_FORM = "closed_form"
    DUALITY_REDUCED = "duality_reduced"


@dataclass(frozen=True)
class PatakiTriple:
    """A validated (m, n, r) with its slacks against the Pataki bounds.

    k is the slack over the lower bound, ell the slack under the upper one;
    k + ell = r(n-r) always.  Construct through validate_triple.
    """

    m: int
    n: int
    r: int
    k: int
    ell: int

    def __post_init__(self):
        if self.k != self.m - comb(self.n - self.r + 1, 2):
            raise ValueError("inconsistent lower slack")
        if self.k + self.ell != self.r * (self.n - self.r):
            raise ValueError("slacks must sum to r(n-r)")


@dataclass(frozen=True)
class DegreeResult:
    """A degree value with the method that produced it and the time it took."""

    triple: PatakiTriple
    delta: int
    method: Method
    elapsed: float  # seconds


SamplePoints = tuple[Coeff, ...]


def validate_triple(m: int, n: int, r: int) -> PatakiTriple:
    """Check the Pataki window and derive the slacks, or raise.

    Degenerate ranks r = 0 and r = n are rejected: the window collapses and
    the degree is about rank-r optima of a nontrivial problem.
    """
    for name, value in (("m", m), ("n", n), ("r", r)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise InvalidTripleError(f"{name} must be a positive integer, got {value!r}")
    if m < 1 or n < 1:
        raise InvalidTripleError(f"m and n must be positive, got m={m}, n={n}")
    if not 1 <= r <= n - 1:
        raise UnsupportedRankError(f"rank r={r} outside the supported range [1, {n - 1}]")
    lower = comb(n - r + 1, 2)
    upper = comb(n + 1, 2) - comb(r + 1, 2)
    if m < lower:
        raise PatakiBoundError(
            f"m={m} below the lower Pataki bound {lower} for (n={n}, r={r})"
        )
    if m > upper:
        raise PatakiBoundError(
            f"m={m} above the upper Pataki bound {upper} for (n={n}, r={r})"
        )
    return PatakiTriple(m, n, r, k=m - lower, ell=upper - m)


def valid_triples(n: int) -> list[PatakiTriple]:
    """Every Pataki-valid triple at this n, ordered by (r, m)."""
    if n < 2:
        raise InvalidTripleError(f"need n >= 2, got {n}")
    out = []
    for r in range(1, n):
        lower = comb(n - r + 1, 2)
        upper = comb(n + 1, 2) - comb(r + 1, 2)
        for m in range(lower, upper + 1):
            out.append(validate_triple(m, n, r))
    return out


def duality_partner(t: PatakiTriple) -> PatakiTriple:
    """The dual triple (C(n+1,2) - m, n, n - r); an involution."""
    return validate_triple(comb(t.n + 1, 2) - t.m, t.n, t.n - t.r)


def default_sample_points(n: int) -> SamplePoints:
    """lambda_i = i for i = 1..n: small, distinct, keeps intermediates small."""
    return tuple(range(1, n + 1))


def random_sample_points(n: int, seed: int, spread: int = 50) -> SamplePoints:
    """n distinct integers in [-spread, spread], deterministic per seed."""
    if n > 2 * spread + 1:
        raise ValueError("spread too small for that many distinct points")
    rng = random.Random(seed)
    return tuple(rng.sample(range(-spread, spread + 1), n))


def pairwise_sums(values: Sequence[Coeff]) -> list[Coeff]:
    """The multiset v_i + v_j over i <= j, diagonal included."""
    vals = list(values)
    return [vals[i] + vals[j] for i in range(len(vals)) for j in range(i, len(vals))]


def _elementary_values(values: Sequence[Coeff], kmax: int) -> list[Coeff]:
    """e_0..e_kmax of a multiset of numbers (one pass per value)."""
    e: list[Coeff] = [1] + [0] * kmax
    for v in values:
        for j in range(kmax, 0, -1):
            e[j] = e[j] + v * e[j - 1]
    return e


def h_determinant(values: Sequence[Coeff], k: int) -> Coeff:
    """h_k of a multiset of numbers as the k x k determinant in e_1..e_k.

    Entry (i, j) is e_{j-i+1} (1 on the subdiagonal, 0 below), evaluated by
    fraction-free Bareiss; h_0 is the empty determinant 1.
    """
    if k == 0:
        return 1
    e = _elementary_values(values, k)
    matrix = [
        [e[j - i + 1] if j - i + 1 >= 0 else 0 for j in range(k)]
        for i in range(k)
    ]
    return bareiss_det(matrix)


def _as_positive_integer(value: Coeff, context: str) -> int:
    as_fraction = Fraction(value)
    if as_fraction.denominator != 1:
        raise ConsistencyError(f"{context}: non-integral value {as_fraction}")
    result = int(as_fraction)
    if result < 1:
        raise ConsistencyError(f"{context}: non-positive value {result}")
    return result


def delta_theorem1(t: PatakiTriple) -> DegreeResult:
    """Degree by coefficient extraction from the capped symmetric product.

    Factors are multiplied in ascending sparsity order (linear differences
    first, h blocks last) with every exponent capped at n-1; the cap is
    sound because no factor has a negative exponent.  The final h block is
    folded in by single-coefficient convolution instead of a full product.
    """
    start = time.perf_counter()
    r, s, n = t.r, t.n - t.r, t.n
    space = xy_space(r, s)
    cap = (n - 1,) * n
    target = (n - 1,) * n

    acc = space.one()
    xs = [space.variable(i) for i in range(r)]
    ys = [space.variable(r + i) for i in range(s)]
    for i in range(r):
        for j in range(r):
            if i != j:
                acc = acc.mul(xs[i] - xs[j], cap)
    for i in range(s):
        for j in range(s):
            if i != j:
                acc = acc.mul(ys[i] - ys[j], cap)
    for i in range(s):
        for j in range(r):
            acc = acc.mul(ys[i] - xs[j], cap)

    h_x = complete_homogeneous(pairwise_sum_forms(space, range(r)), t.ell, cap)
    h_y = complete_homogeneous(pairwise_sum_forms(space, range(r, n)), t.k, cap)
    first, last = (h_x, h_y) if len(h_x) <= len(h_y) else (h_y, h_x)
    acc = acc.mul(first, cap)
    c = product_coefficient(acc, last, target)

    value = Fraction((-1) ** t.k * c, factorial(r) * factorial(s))
    delta_value = _as_positive_integer(value, f"coefficient extraction on {t}")
    return DegreeResult(t, delta_value, Method.THEOREM1, time.perf_counter() - start)


def delta_residue(t: PatakiTriple, points: Union[Sequence[Coeff], None] = None) -> DegreeResult:
    """Degree by the exact residue sum over r-subsets of the sample points.

    Any pairwise-distinct points give the same value; the h factors go
    through the e-determinant route, independent of the recurrence used by
    the coefficient-extraction path.
    """
    start = time.perf_counter()
    n, r = t.n, t.r
    pts = default_sample_points(n) if points is None else tuple(points)
    if len(pts) != n:
        raise ValueError(f"need {n} sample points, got {len(pts)}")
    if len(set(pts)) != n:
        raise ValueError("sample points must be pairwise distinct")

    total = Fraction(0)
    for subset in combinations(range(n), r):
        chosen = set(subset)
        rest = tuple(j for j in range(n) if j not in chosen)
        h_ell = h_determinant(pairwise_sums([pts[i] for i in subset]), t.ell)
        h_k = h_determinant(pairwise_sums([pts[j] for j in rest]), t.k)
        denom = prod(pts[i] - pts[j] for i in subset for j in rest)
        total += Fraction(h_ell * h_k) / denom

    value = (-1) ** t.k * total
    delta_value = _as_positive_integer(value, f"residue sum on {t}")
    return DegreeResult(t, delta_value, Method.RESIDUE, time.perf_counter() - start)


def _closed_pattern(m: int, n: int, r: int) -> Union[int, None]:
    if r == n - 1:
        return 2 ** (m - 1) * comb(n, m)
    if r == n - 2 and m == 3:
        return comb(n + 1, 3)
    if r == n - 2 and m == 4:
        return 6 * comb(n + 1, 4)
    return None


def delta_closed(t: PatakiTriple) -> Union[DegreeResult, None]:
    """Closed-form degree, or None when no pattern applies.

    Patterns: full-rank-minus-one r = n-1 gives 2^(m-1) C(n,m); at r = n-2,
    m = 3 gives C(n+1,3) and m = 4 gives 6 C(n+1,4).  If the triple itself
    does not match, its duality partner is tried and the result tagged as
    reduced through duality.
    """
    start = time.perf_counter()
    value = _closed_pattern(t.m, t.n, t.r)
    if value is not None:
        return DegreeResult(
            t,
            _as_positive_integer(value, f"closed form on {t}"),
            Method.CLOSED_FORM,
            time.perf_counter() - start,
        )
    partner = duality_partner(t)
    value = _closed_pattern(partner.m, partner.n, partner.r)
    if value is not None:
        return DegreeResult(
            t,
            _as_positive_integer(value, f"closed form on dual of {t}"),
            Method.DUALITY_REDUCED,
            time.perf_counter() - start,
        )
    return None


_DISPATCH_METHODS = ("auto", "theorem1", "residue", "closed")


def delta(
    t: PatakiTriple,
    method: str = "auto",
    cross_check: bool = False,
    points: Union[Sequence[Coeff], None] = None,
) -> DegreeResult:
    """Compute the degree, optionally verifying it with a second algorithm.

    "auto" prefers a closed form, otherwise runs the residue sum on
    whichever of the triple and its duality partner has the smaller rank
    (the values agree by duality; the report keeps the requested triple).
    With cross_check a second, independent method must agree exactly, else
    CrossCheckError carrying both results is raised.
    """
    if method not in _DISPATCH_METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {_DISPATCH_METHODS}")
    if method == "auto":
        result = delta_closed(t)
        if result is None:
            if t.n - t.r < t.r:
                partner_result = delta_residue(duality_partner(t), points)
                result = DegreeResult(
                    t, partner_result.delta, Method.RESIDUE, partner_result.elapsed
                )
            else:
                result = delta_residue(t, points)
    elif method == "theorem1":
        result = delta_theorem1(t)
    elif method == "residue":
        result = delta_residue(t, points)
    else:
        result = delta_closed(t)
        if result is None:
            raise ValueError(
                f"no closed form applies to (m={t.m}, n={t.n}, r={t.r}); "
                "use auto, residue, or theorem1"
            )
    if cross_check:
        second = _second_opinion(t, result.method, points)
        if second.delta != result.delta:
            raise CrossCheckError(result, second)
    return result


def _second_opinion(
    t: PatakiTriple, first: Method, points: Union[Sequence[Coeff], None]
) -> DegreeResult:
    if first in (Method.CLOSED_FORM, Method.DUALITY_REDUCED):
        return delta_residue(t, points)
    if first is Method.RESIDUE:
        closed = delta_closed(t)
        return closed if closed is not None else delta_theorem1(t)
    return delta_residue(t, points)
