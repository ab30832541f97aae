"""
Exact polynomial and Hilbert-series arithmetic, inner 2-minors, the
Y-restricted lexicographic orders, a binomial Buchberger engine and the
Hilbert series of monomial quotients.

The oracle computes HP_{K[P]} from the initial ideal of the inner 2-minors:
passing to the initial ideal keeps the Hilbert function, and the series of
a monomial quotient is pure combinatorics.
"""
import heapq
import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import NamedTuple

from .conf import polyalg_settings
from .exceptions import BudgetExceeded, InvariantViolation, NotFound
from .geometry import GridPoint, inner_intervals

logger = logging.getLogger(__name__)


# Polynomials and series

@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in t; coefficients[k] is the coefficient of t^k"""
    coefficients: tuple = ()

    def __post_init__(self):
        coefficients = list(self.coefficients)
        for c in coefficients:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an integer")
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, 'coefficients', tuple(coefficients))

    @classmethod
    def of(cls, *coefficients):
        return cls(coefficients)

    @classmethod
    def monomial(cls, degree, coefficient=1):
        return cls((0,) * degree + (coefficient,))

    @property
    def degree(self):
        """-1 for the zero polynomial"""
        return len(self.coefficients) - 1

    def __bool__(self):
        return bool(self.coefficients)

    def __getitem__(self, k):
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __len__(self):
        return len(self.coefficients)

    def __add__(self, other):
        other = _as_polynomial(other)
        n = max(len(self), len(other))
        return IntPolynomial(tuple(self[k] + other[k] for k in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-_as_polynomial(other))

    def __rsub__(self, other):
        return _as_polynomial(other) - self

    def __mul__(self, other):
        other = _as_polynomial(other)
        if not self or not other:
            return IntPolynomial()
        product = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    product[i + j] += a * b
        return IntPolynomial(tuple(product))

    __rmul__ = __mul__

    def __call__(self, x):
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def shift(self, m):
        """Multiply by t^m."""
        if not self:
            return self
        return IntPolynomial((0,) * m + self.coefficients)

    def divide_by_one_minus_t(self):
        if self(1) != 0:
            raise ValueError(f"{self} is not divisible by (1 - t)")
        quotient = []
        running = 0
        for c in self.coefficients[:-1]:
            running += c
            quotient.append(running)
        return IntPolynomial(tuple(quotient))

    def is_palindromic(self):
        return self.coefficients == tuple(reversed(self.coefficients))

    def to_list(self):
        return list(self.coefficients)

    def __str__(self):
        if not self:
            return '0'
        terms = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = 't' if k == 1 else f't^{k}'
                body = power if magnitude == 1 else f'{magnitude}{power}'
            sign = '-' if c < 0 else '+'
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ('-' if first_sign == '-' else '') + first
        for sign, body in terms[1:]:
            text += f' {sign} {body}'
        return text


def _as_polynomial(value):
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return IntPolynomial((value,))
    return IntPolynomial(tuple(value))


ONE_MINUS_T = IntPolynomial.of(1, -1)


def one_minus_t_power(k):
    result = IntPolynomial.of(1)
    for _ in range(k):
        result = result * ONE_MINUS_T
    return result


@dataclass(frozen=True)
class HilbertSeries:
    """
    h(t) / (1 - t)^d, always stored in canonical form: (1 - t) is divided
    out of h while h(1) = 0 and d > 0. The zero series has d = 0.
    """
    numerator: IntPolynomial
    denom_exponent: int

    def __post_init__(self):
        numerator = _as_polynomial(self.numerator)
        d = self.denom_exponent
        if d < 0:
            raise ValueError('negative denominator exponent')
        if not numerator:
            d = 0
        while d > 0 and numerator(1) == 0:
            numerator = numerator.divide_by_one_minus_t()
            d -= 1
        object.__setattr__(self, 'numerator', numerator)
        object.__setattr__(self, 'denom_exponent', d)

    @property
    def krull_dimension(self):
        return self.denom_exponent

    @property
    def regularity(self):
        return self.numerator.degree

    def add(self, other):
        d = max(self.denom_exponent, other.denom_exponent)
        numerator = (
            self.numerator * one_minus_t_power(d - self.denom_exponent)
            + other.numerator * one_minus_t_power(d - other.denom_exponent)
        )
        return HilbertSeries(numerator, d)

    __add__ = add

    def scale(self, factor):
        return HilbertSeries(self.numerator * factor, self.denom_exponent)

    def subtract(self, other):
        return self.add(other.scale(-1))

    __sub__ = subtract

    def shift(self, m):
        """Multiply by t^m."""
        return HilbertSeries(self.numerator.shift(m), self.denom_exponent)

    def scale_frac(self, k):
        """Multiply by 1 / (1 - t)^k."""
        return HilbertSeries(self.numerator, self.denom_exponent + k)

    def multiply(self, other):
        return HilbertSeries(self.numerator * other.numerator, self.denom_exponent + other.denom_exponent)

    def hilbert_function(self, n):
        """First n coefficients of the power series."""
        h, d = self.numerator, self.denom_exponent
        if d == 0:
            return [h[k] for k in range(n)]
        return [
            sum(h[i] * comb(k - i + d - 1, d - 1) for i in range(min(k, h.degree) + 1))
            for k in range(n)
        ]

    def __str__(self):
        return f'({self.numerator})/(1 - t)^{self.denom_exponent}'


# Monomials and binomials over vertices

@dataclass(frozen=True, order=True)
class VertexMonomial:
    """Product of vertex variables; powers is a sorted ((vertex, exponent), ...) tuple"""
    powers: tuple = ()

    def __post_init__(self):
        items = self.powers.items() if isinstance(self.powers, dict) else self.powers
        merged = {}
        for vertex, exponent in items:
            if isinstance(exponent, bool) or not isinstance(exponent, int) or exponent < 0:
                raise ValueError(f"bad exponent {exponent!r}")
            vertex = GridPoint(*vertex)
            merged[vertex] = merged.get(vertex, 0) + exponent
        object.__setattr__(
            self, 'powers', tuple(sorted((v, e) for v, e in merged.items() if e)),
        )

    @classmethod
    def of(cls, *vertices):
        return cls(tuple((v, 1) for v in vertices))

    @property
    def degree(self):
        return sum(e for _, e in self.powers)

    @property
    def support(self):
        return frozenset(v for v, _ in self.powers)

    def exponent(self, vertex):
        for v, e in self.powers:
            if v == vertex:
                return e
        return 0

    def as_dict(self):
        return dict(self.powers)

    def is_squarefree(self):
        return all(e == 1 for _, e in self.powers)

    def __mul__(self, other):
        return VertexMonomial(self.powers + other.powers)

    def divides(self, other):
        return all(other.exponent(v) >= e for v, e in self.powers)

    def lcm(self, other):
        merged = self.as_dict()
        for v, e in other.powers:
            merged[v] = max(merged.get(v, 0), e)
        return VertexMonomial(merged)

    def __truediv__(self, other):
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        merged = self.as_dict()
        for v, e in other.powers:
            merged[v] -= e
        return VertexMonomial(merged)

    def __str__(self):
        if not self.powers:
            return '1'
        return '*'.join(
            f'x{tuple(v)}' if e == 1 else f'x{tuple(v)}^{e}' for v, e in self.powers
        )


@dataclass(frozen=True)
class VertexBinomial:
    plus: VertexMonomial
    minus: VertexMonomial

    def __post_init__(self):
        if self.plus == self.minus:
            raise ValueError('a binomial needs two distinct terms')

    @property
    def vertices(self):
        return self.plus.support | self.minus.support

    def __str__(self):
        return f'{self.plus} - {self.minus}'


def inner_two_minors(polyomino):
    """One binomial per inner interval: diagonal product minus anti-diagonal product."""
    return [
        VertexBinomial(
            VertexMonomial.of(*interval.diagonal_corners),
            VertexMonomial.of(*interval.anti_diagonal_corners),
        )
        for interval in inner_intervals(polyomino)
    ]


@dataclass(frozen=True)
class LexOrderConfig:
    """
    Lexicographic order where every vertex of Y is a larger variable than
    every vertex outside Y; inside each group vertices compare by (i, j).
    """
    y: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, 'y', frozenset(GridPoint(*v) for v in self.y))

    def variable_key(self, vertex):
        return (vertex in self.y, tuple(vertex))

    def compare_variables(self, u, v):
        ku, kv = self.variable_key(u), self.variable_key(v)
        return (ku > kv) - (ku < kv)

    def descending(self, vertices):
        return tuple(sorted((GridPoint(*v) for v in vertices), key=self.variable_key, reverse=True))

    def compare(self, m1, m2):
        for vertex in self.descending(m1.support | m2.support):
            e1, e2 = m1.exponent(vertex), m2.exponent(vertex)
            if e1 != e2:
                return 1 if e1 > e2 else -1
        return 0

    def leading(self, binomial):
        """(leading monomial, trailing monomial)"""
        if self.compare(binomial.plus, binomial.minus) > 0:
            return binomial.plus, binomial.minus
        return binomial.minus, binomial.plus


def lex_compare(order, m1, m2):
    return order.compare(m1, m2)


@dataclass(frozen=True)
class GroebnerAnchors:
    """Vertices forced into or out of Y"""
    inside: frozenset = frozenset()
    outside: frozenset = frozenset()

    def __post_init__(self):
        if self.inside & self.outside:
            raise ValueError('a vertex cannot be both inside and outside Y')

    @property
    def vertices(self):
        return self.inside | self.outside


# searches from Y = {} with every vertex free
NO_ANCHORS = GroebnerAnchors()


# Dense binomial engine. Exponent vectors are indexed from the largest
# variable down, so tuple comparison is the lexicographic order.

class _Binomial(NamedTuple):
    lead: tuple
    trail: tuple
    support: tuple  # ((index, exponent), ...) of the lead


def _make(first, second):
    if first == second:
        return None
    lead, trail = (first, second) if first > second else (second, first)
    return _Binomial(lead, trail, tuple((k, e) for k, e in enumerate(lead) if e))


def _divides(support, vector):
    return all(vector[k] >= e for k, e in support)


def _coprime(f, g):
    return not ({k for k, _ in f.support} & {k for k, _ in g.support})


def _s_polynomial(f, g):
    lcm = tuple(max(a, b) for a, b in zip(f.lead, g.lead))
    return _make(
        tuple(m - a + b for m, a, b in zip(lcm, f.lead, f.trail)),
        tuple(m - a + b for m, a, b in zip(lcm, g.lead, g.trail)),
    )


def _reduce(f, basis):
    """Top-reduce; None when the binomial reduces to zero."""
    while f is not None:
        for g in basis:
            if _divides(g.support, f.lead):
                f = _make(tuple(x - a + b for x, a, b in zip(f.lead, g.lead, g.trail)), f.trail)
                break
        else:
            return f
    return None


def _lcm_degree(f, g):
    return sum(max(a, b) for a, b in zip(f.lead, g.lead))


class _Ring:
    def __init__(self, binomials, order):
        vertices = frozenset().union(*(b.vertices for b in binomials)) if binomials else frozenset()
        self.variables = order.descending(vertices)
        self.index = {v: k for k, v in enumerate(self.variables)}

    def vector(self, monomial):
        vector = [0] * len(self.variables)
        for v, e in monomial.powers:
            vector[self.index[v]] = e
        return tuple(vector)

    def monomial(self, vector):
        return VertexMonomial(tuple((self.variables[k], e) for k, e in enumerate(vector) if e))

    def dense(self, binomials):
        entries = (_make(self.vector(b.plus), self.vector(b.minus)) for b in binomials)
        return [e for e in entries if e is not None]

    def binomial(self, entry):
        return VertexBinomial(self.monomial(entry.lead), self.monomial(entry.trail))


def _failing_pairs(basis):
    failing = 0
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if _coprime(basis[i], basis[j]):
                continue
            s = _s_polynomial(basis[i], basis[j])
            if s is not None and _reduce(s, basis) is not None:
                failing += 1
    return failing


def count_failing_s_pairs(gens, order):
    """S-pairs (non-coprime leads) whose S-polynomial does not reduce to zero."""
    ring = _Ring(gens, order)
    return _failing_pairs(ring.dense(gens))


def s_pairs_reduce_to_zero(gens, order):
    return count_failing_s_pairs(gens, order) == 0


def _interreduce(basis):
    kept = []
    for k, g in enumerate(basis):
        redundant = any(
            _divides(h.support, g.lead) and (h.lead != g.lead or m < k)
            for m, h in enumerate(basis) if m != k
        )
        if not redundant:
            kept.append(g)
    reduced = []
    for g in kept:
        trail = g.trail
        while True:
            divisor = next(
                (h for h in kept if h is not g and _divides(h.support, trail)), None,
            )
            if divisor is None:
                break
            trail = tuple(x - a + b for x, a, b in zip(trail, divisor.lead, divisor.trail))
        reduced.append(_Binomial(g.lead, trail, g.support))
    return sorted(reduced)


def buchberger(gens, order, budget=None):
    """
    Complete binomial generators to the reduced Gröbner basis under ``order``.

    Returns (basis, is_groebner_already). Pairs are processed lowest lcm
    degree first; pairs with coprime leads are skipped and do not count
    against ``budget``.
    """
    if budget is None:
        budget = polyalg_settings('BUCHBERGER_PAIR_BUDGET')
    ring = _Ring(gens, order)
    basis = ring.dense(gens)
    heap = []

    def queue_pairs(new):
        for k in range(new):
            heapq.heappush(heap, (_lcm_degree(basis[k], basis[new]), k, new))

    for j in range(len(basis)):
        queue_pairs(j)

    processed = 0
    added = False
    while heap:
        _, i, j = heapq.heappop(heap)
        if _coprime(basis[i], basis[j]):
            continue
        processed += 1
        if processed > budget:
            raise BudgetExceeded(
                f"Buchberger budget of {budget} S-pairs exhausted",
                partial_basis=[ring.binomial(e) for e in basis],
                pairs_processed=processed - 1,
            )
        s = _s_polynomial(basis[i], basis[j])
        if s is None:
            continue
        remainder = _reduce(s, basis)
        if remainder is None:
            continue
        if remainder.lead <= remainder.trail:
            raise InvariantViolation('completion produced a term that is not a binomial')
        basis.append(remainder)
        added = True
        queue_pairs(len(basis) - 1)

    logger.debug('completion: %d pairs, %d elements before reduction', processed, len(basis))
    return [ring.binomial(e) for e in _interreduce(basis)], not added


def find_groebner_lex_order(polyomino, anchors=None, budget=None):
    """
    Search Y so that the inner 2-minors are a Gröbner basis under the
    Y-restricted lex order.

    Greedy single-vertex flips from the anchor seed, with seeded random
    kicks from the best set seen whenever the greedy pass stalls. Each
    candidate costs one evaluation; NotFound once ``budget`` is spent.
    """
    if budget is None:
        budget = polyalg_settings('LEX_ORDER_SEARCH_BUDGET')
    anchors = anchors or GroebnerAnchors()
    vertices = sorted(polyomino.vertices)
    if not anchors.vertices <= polyomino.vertices:
        raise ValueError('anchors do not lie on the polyomino')
    free = [v for v in vertices if v not in anchors.vertices]
    gens = inner_two_minors(polyomino)
    rng = random.Random(polyalg_settings('SEED'))
    evaluations = 0

    def evaluate(y):
        nonlocal evaluations
        evaluations += 1
        return count_failing_s_pairs(gens, LexOrderConfig(y))

    current = frozenset(anchors.inside)
    score = evaluate(current)
    best_score, best = score, current
    while score > 0 and evaluations < budget:
        improved = False
        for v in free:
            if evaluations >= budget:
                break
            candidate = current ^ {v}
            candidate_score = evaluate(candidate)
            if candidate_score < score:
                current, score, improved = candidate, candidate_score, True
                if score == 0:
                    break
        if score < best_score:
            best_score, best = score, current
        if score == 0 or evaluations >= budget:
            break
        if not improved:
            if not free:
                break
            kick = rng.sample(free, min(len(free), 2 + rng.randrange(3)))
            current = best ^ frozenset(kick)
            score = evaluate(current)
        logger.debug('Y search: %d evaluations, best %d failing pairs', evaluations, best_score)

    if score == 0:
        logger.debug('Y search succeeded after %d evaluations', evaluations)
        return LexOrderConfig(current)
    raise NotFound(
        f"no Gröbner lex order within {budget} evaluations (best: {best_score} failing S-pairs)"
    )


# Hilbert series of monomial quotients

def _minimalize(gens):
    gens = sorted(set(gens), key=lambda g: (sum(g), g))
    kept = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in kept):
            kept.append(g)
    return kept


def _inclusion_exclusion(gens):
    coefficients = {0: 1}

    def walk(start, lcm, sign):
        for k in range(start, len(gens)):
            joined = gens[k] if lcm is None else tuple(max(a, b) for a, b in zip(lcm, gens[k]))
            degree = sum(joined)
            coefficients[degree] = coefficients.get(degree, 0) - sign
            walk(k + 1, joined, -sign)

    walk(0, None, 1)
    top = max(coefficients)
    return IntPolynomial(tuple(coefficients.get(k, 0) for k in range(top + 1)))


def _numerator(gens, cutoff, memo):
    gens = _minimalize(gens)
    key = tuple(gens)
    if key in memo:
        return memo[key]
    if len(gens) <= cutoff:
        result = _inclusion_exclusion(gens)
    else:
        n = len(gens[0])
        counts = [sum(1 for g in gens if g[k]) for k in range(n)]
        if max(counts) <= 1:
            # pairwise coprime: a complete intersection
            result = IntPolynomial.of(1)
            for g in gens:
                result = result * (IntPolynomial.of(1) - IntPolynomial.monomial(sum(g)))
        else:
            pivot = counts.index(max(counts))
            unit = tuple(1 if k == pivot else 0 for k in range(n))
            plus = [g for g in gens if not g[pivot]] + [unit]
            colon = [
                tuple(e - 1 if k == pivot and e else e for k, e in enumerate(g)) for g in gens
            ]
            result = _numerator(plus, cutoff, memo) + _numerator(colon, cutoff, memo).shift(1)
    memo[key] = result
    return result


def monomial_hilbert_series(gens, nvars):
    """Hilbert series of S/(gens) with S a polynomial ring in ``nvars`` variables."""
    variables = sorted(frozenset().union(*(m.support for m in gens))) if gens else []
    if nvars < len(variables):
        raise ValueError(f"{len(variables)} variables appear but nvars is {nvars}")
    dense = [tuple(m.exponent(v) for v in variables) for m in gens]
    cutoff = polyalg_settings('INCLUSION_EXCLUSION_CUTOFF')
    return HilbertSeries(_numerator(dense, cutoff, {}), nvars)


def standard_monomial_counts(leads, nvars, max_degree):
    """Count monomials outside (leads) degree by degree, 0..max_degree."""
    variables = sorted(frozenset().union(*(m.support for m in leads))) if leads else []
    if nvars < len(variables):
        raise ValueError(f"{len(variables)} variables appear but nvars is {nvars}")
    index = {v: k for k, v in enumerate(variables)}
    by_variable = [[] for _ in range(nvars)]
    for lead in leads:
        support = tuple((index[v], e) for v, e in lead.powers)
        for k, _ in support:
            by_variable[k].append(support)
    counts = [0] * (max_degree + 1)
    exponents = [0] * nvars

    def grow(start, degree):
        counts[degree] += 1
        if degree == max_degree:
            return
        for k in range(start, nvars):
            exponents[k] += 1
            # only leads involving x_k can start dividing
            if not any(_divides(support, exponents) for support in by_variable[k]):
                grow(k, degree + 1)
            exponents[k] -= 1

    grow(0, 0)
    return counts


# The oracle

@dataclass(frozen=True)
class OracleRun:
    series: HilbertSeries
    order: LexOrderConfig
    basis: tuple
    is_groebner_already: bool
    fallback: bool


@lru_cache(maxsize=512)
def _oracle(polyomino, anchors, search_budget, pair_budget, cutoff):
    gens = inner_two_minors(polyomino)
    order = LexOrderConfig()
    fallback = False
    if anchors is not None:
        try:
            order = find_groebner_lex_order(polyomino, anchors, search_budget)
        except NotFound as exc:
            logger.warning('%s; falling back to completion under Y = {} for %s', exc.message, polyomino)
            fallback = True
    basis, already = buchberger(gens, order, pair_budget)
    leads = [order.leading(b)[0] for b in basis]
    series = monomial_hilbert_series(leads, len(polyomino.vertices))
    return OracleRun(series, order, tuple(basis), already, fallback)


def groebner_oracle(polyomino, anchors=None):
    """
    Run the oracle. With ``anchors`` (``NO_ANCHORS`` included) a lex order
    is searched first and completion only repairs a failed search; with
    ``None`` the inner 2-minors are completed under Y = {} directly.
    """
    return _oracle(
        polyomino,
        anchors,
        polyalg_settings('LEX_ORDER_SEARCH_BUDGET'),
        polyalg_settings('BUCHBERGER_PAIR_BUDGET'),
        polyalg_settings('INCLUSION_EXCLUSION_CUTOFF'),
    )


def hilbert_series_oracle(polyomino, anchors=None):
    """HP_{K[P]} read off the initial ideal of the inner 2-minors."""
    return groebner_oracle(polyomino, anchors).series
