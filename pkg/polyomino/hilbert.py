"""
Hilbert-series formulas for closed paths and the invariants pipeline.

Three independent routes give the h-polynomial of a closed path without
zig-zag walks: the rook polynomial, a decomposition formula and the
Gröbner oracle. ``closed_path_invariants`` computes the ones requested and
records whether they agree.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from .algebra import NO_ANCHORS, HilbertSeries, IntPolynomial, hilbert_series_oracle
from .classify import (
    closed_path_sequence,
    has_zig_zag_walk,
    is_simple,
    is_thin,
    weakly_closed_path_sequence,
)
from .decompositions import (
    LCDecomposition,
    Ladder3Decomposition,
    WConfiguration,
    find_decomposition,
)
from .exceptions import (
    ComplementNotSimple,
    HasZigZag,
    InvariantViolation,
    NotAClosedPath,
    NotApplicable,
    NotFromWConfiguration,
    NotSimpleThin,
    OutOfScopeClass,
    WrongCase,
)
from .rook import rook_polynomial, s_property

logger = logging.getLogger(__name__)

METHODS = ('rook', 'formula', 'oracle')
FORMULA_SCOPE = 'the formula route needs a closed path without zig-zag walks'

T = IntPolynomial.monomial(1)


@dataclass(frozen=True)
class InvariantsReport:
    cells: tuple
    polyomino_class: str
    hp: HilbertSeries
    krull_dim: int
    regularity: int
    gorenstein: Optional[bool]
    methods_agree: bool
    h_rook: Optional[IntPolynomial] = None
    h_formula: Optional[IntPolynomial] = None
    formula: Optional[str] = None
    h_oracle: Optional[IntPolynomial] = None
    conjecture_consistent: Optional[bool] = None

    @property
    def h(self):
        return self.hp.numerator


def expected_dimension(polyomino):
    return len(polyomino.vertices) - polyomino.rank


def h_simple_thin(polyomino):
    if not (is_simple(polyomino) and is_thin(polyomino)):
        raise NotSimpleThin()
    return rook_polynomial(polyomino)


def component_series(polyomino):
    """HP of a formula component: rook route when simple thin, oracle otherwise."""
    if is_simple(polyomino) and is_thin(polyomino):
        return HilbertSeries(rook_polynomial(polyomino), expected_dimension(polyomino))
    logger.debug('component %s is not simple thin; using the oracle', polyomino)
    return hilbert_series_oracle(polyomino)


def component_h(polyomino):
    return component_series(polyomino).numerator


# (L,C) formulas

def hp_lc_general(polyomino, dec, hp1, hp2, hp3, hp4):
    r, s = dec.r, dec.s
    bracket = (
        hp1.scale_frac(r - 2)
        + hp2.scale_frac(s - 2)
        + hp3.scale_frac(s + r - 3)
    )
    return hp4.scale_frac(1) + bracket.shift(1).scale_frac(1)


def h_lc_general_prime(polyomino, dec):
    """(L,C) series with every component series taken from ``component_series``."""
    derived = dec.derived
    return hp_lc_general(
        polyomino, dec,
        component_series(derived['p1']),
        component_series(derived['p2']),
        component_series(derived['p3']),
        component_series(derived['p4']),
    )


def h_lc_simple(polyomino, dec):
    if not is_simple(dec.complement):
        raise ComplementNotSimple()
    h1, h2, h3, h4 = (component_h(dec.derived[name]) for name in ('p1', 'p2', 'p3', 'p4'))
    return h4 + T * (h1 + h2 + (1 - T) * h3)


# Ladder formulas

def _require(dec, kind, case=None):
    if dec.kind != kind or (case is not None and dec.case != case):
        raise WrongCase(f"expected a {kind} decomposition" + (f" of case {case}" if case else ''))


def h_1config(polyomino, w):
    _require(w, 'w', 1)
    derived = w.derived
    return component_h(derived['r1']) + T * (component_h(derived['r2']) + component_h(derived['q1']))


def h_2config(polyomino, w):
    _require(w, 'w', 2)
    derived = w.derived
    return (1 + T) * component_h(derived['q1']) + T * (
        component_h(derived['f1']) + component_h(derived['f2'])
    )


def h_ladder3(polyomino, k):
    _require(k, 'ladder3')
    h1, h2, h3, h4 = (component_h(k.derived[name]) for name in ('k1', 'k2', 'k3', 'k4'))
    return h4 + T * (h1 + 2 * h2 + h3)


def formula_h(polyomino, dec):
    """(formula name, h) for a decomposition of a closed path."""
    if isinstance(dec, LCDecomposition):
        if is_simple(dec.complement):
            return 'lc_simple', h_lc_simple(polyomino, dec)
        return 'lc_general', h_lc_general_prime(polyomino, dec).numerator
    if isinstance(dec, WConfiguration):
        if dec.case == 1:
            return 'w_1config', h_1config(polyomino, dec)
        return 'w_2config', h_2config(polyomino, dec)
    if isinstance(dec, Ladder3Decomposition):
        return 'ladder3', h_ladder3(polyomino, dec)
    raise WrongCase(f"no formula for {type(dec).__name__}")


# W-configuration series relations

def _check_frame(polyomino, w):
    if polyomino.transformed(w.transform) != w.frame:
        raise NotFromWConfiguration()


def hp_q_relation_check(polyomino, w, q=None, q1=None):
    """HP_P = HP_Q + t/(1-t) HP_Q1 on oracle series; ``q``/``q1`` override the derived pieces."""
    _check_frame(polyomino, w)
    hp_p = hilbert_series_oracle(w.frame, w.anchors)
    hp_q = hilbert_series_oracle(q or w.q)
    hp_q1 = hilbert_series_oracle(q1 or w.q1)
    holds = hp_p == hp_q + hp_q1.shift(1).scale_frac(1)
    if not holds:
        logger.warning('HP relation fails for %s', polyomino)
    return holds


def hp_q_second_relation_check(polyomino, w):
    """
    1-configuration: HP_Q = HP_R1 + t HP_R2 / (1-t)^e with e = dim Q - dim R2.
    2-configuration: HP_Q = HP_Q1/(1-t) + t/(1-t) [HP_F1/(1-t)^(s-2) + HP_F2/(1-t)^(r-1)].
    """
    _check_frame(polyomino, w)
    derived = w.derived
    hp_q = hilbert_series_oracle(w.q)
    if w.case == 1:
        hp_r2 = hilbert_series_oracle(derived['r2'])
        gap = hp_q.krull_dimension - hp_r2.krull_dimension
        if gap < 0:
            return False
        expected = hilbert_series_oracle(derived['r1']) + hp_r2.shift(1).scale_frac(gap)
    else:
        bracket = (
            hilbert_series_oracle(derived['f1']).scale_frac(w.s - 2)
            + hilbert_series_oracle(derived['f2']).scale_frac(w.r - 1)
        )
        expected = hilbert_series_oracle(w.q1).scale_frac(1) + bracket.shift(1).scale_frac(1)
    return hp_q == expected


# Invariants

def _agreement(polynomials):
    present = [h for h in polynomials if h is not None]
    return all(h == present[0] for h in present)


def gorenstein(polyomino):
    """S-property, checked against palindromicity of the rook polynomial."""
    if closed_path_sequence(polyomino) is not None:
        if has_zig_zag_walk(polyomino):
            raise OutOfScopeClass('closed path with a zig-zag walk')
    elif not (is_simple(polyomino) and is_thin(polyomino)):
        raise OutOfScopeClass()
    holds, _ = s_property(polyomino)
    if rook_polynomial(polyomino).is_palindromic() != holds:
        raise InvariantViolation(f"S-property and palindromicity disagree on {polyomino}")
    return holds


def _oracle_for(polyomino, dec):
    if isinstance(dec, WConfiguration):
        return hilbert_series_oracle(dec.frame, dec.anchors)
    return hilbert_series_oracle(polyomino, NO_ANCHORS)


def closed_path_invariants(polyomino, methods=METHODS):
    if closed_path_sequence(polyomino) is None:
        raise NotAClosedPath()
    if has_zig_zag_walk(polyomino):
        raise HasZigZag()
    dim = expected_dimension(polyomino)
    h_rook = rook_polynomial(polyomino) if 'rook' in methods else None

    formula = h_formula = None
    dec = None
    if 'formula' in methods or 'oracle' in methods:
        dec = find_decomposition(polyomino)
    if 'formula' in methods:
        if dec is None:
            logger.warning('no decomposition applies to %s; formula route skipped', polyomino)
        else:
            formula, h_formula = formula_h(polyomino, dec)

    h_oracle = None
    agree = True
    if 'oracle' in methods:
        series = _oracle_for(polyomino, dec)
        h_oracle = series.numerator
        if series.denom_exponent != dim:
            logger.warning(
                'oracle dimension %d differs from |V| - rank = %d for %s',
                series.denom_exponent, dim, polyomino,
            )
            agree = False

    agree = agree and _agreement((h_rook, h_formula, h_oracle))
    h = next((p for p in (h_rook, h_formula, h_oracle) if p is not None), None)
    if h is None:
        raise ValueError('no method selected')
    if not agree:
        logger.warning(
            'methods disagree on %s: rook=%s formula=%s oracle=%s',
            polyomino, h_rook, h_formula, h_oracle,
        )

    holds, _ = s_property(polyomino)
    if holds != h.is_palindromic():
        logger.warning('S-property (%s) and palindromicity disagree on %s', holds, polyomino)
        agree = False

    return InvariantsReport(
        cells=polyomino.sorted_cells,
        polyomino_class='closed_path',
        hp=HilbertSeries(h, dim),
        krull_dim=dim,
        regularity=h.degree,
        gorenstein=holds,
        methods_agree=agree,
        h_rook=h_rook,
        h_formula=h_formula,
        formula=formula,
        h_oracle=h_oracle,
    )


def weakly_closed_invariants(q, context):
    """Invariants of Q = P minus A for a W-configuration, from h_P - t h_Q1."""
    frame_q = context.q
    if q.cells != frame_q.cells and q != context.derived_in_input_frame('q'):
        raise NotFromWConfiguration()
    if weakly_closed_path_sequence(frame_q) is None:
        raise NotFromWConfiguration('Q is not a weakly closed path')
    h_q = rook_polynomial(context.frame) - T * component_h(context.q1)
    h_rook = rook_polynomial(frame_q)
    if h_q != h_rook:
        raise InvariantViolation(f"h_P - t h_Q1 = {h_q} but the rook polynomial of Q is {h_rook}")
    dim = expected_dimension(frame_q)
    holds, _ = s_property(frame_q)
    agree = holds == h_q.is_palindromic()
    if not agree:
        logger.warning('S-property (%s) and palindromicity disagree on %s', holds, q)
    return InvariantsReport(
        cells=q.sorted_cells,
        polyomino_class='weakly_closed_path',
        hp=HilbertSeries(h_q, dim),
        krull_dim=dim,
        regularity=h_q.degree,
        gorenstein=holds,
        methods_agree=agree,
        h_rook=h_rook,
        h_formula=h_q,
        formula='weakly_closed',
    )


def compute_invariants(polyomino, methods=METHODS):
    """
    Class dispatch: closed paths without zig-zag walks get all three routes,
    simple thin polyominoes the rook route and the oracle, everything else
    the oracle alone.
    """
    if closed_path_sequence(polyomino) is not None and not has_zig_zag_walk(polyomino):
        return closed_path_invariants(polyomino, methods)

    if is_simple(polyomino) and is_thin(polyomino):
        dim = expected_dimension(polyomino)
        h_rook = rook_polynomial(polyomino) if 'rook' in methods else None
        h_oracle = None
        agree = True
        if 'oracle' in methods:
            series = hilbert_series_oracle(polyomino)
            h_oracle = series.numerator
            agree = series.denom_exponent == dim
        agree = agree and _agreement((h_rook, h_oracle))
        h = h_rook if h_rook is not None else h_oracle
        if h is None:
            raise NotApplicable(FORMULA_SCOPE)
        return InvariantsReport(
            cells=polyomino.sorted_cells,
            polyomino_class='simple_thin',
            hp=HilbertSeries(h, dim),
            krull_dim=dim,
            regularity=h.degree,
            gorenstein=gorenstein(polyomino),
            methods_agree=agree,
            h_rook=h_rook,
            h_oracle=h_oracle,
        )

    if 'oracle' not in methods and 'rook' not in methods:
        raise NotApplicable(FORMULA_SCOPE)
    series = hilbert_series_oracle(polyomino)
    consistent = None
    if is_thin(polyomino):
        # h = rook polynomial is only conjectured here; report, never assert
        consistent = series.numerator == rook_polynomial(polyomino)
    return InvariantsReport(
        cells=polyomino.sorted_cells,
        polyomino_class='other',
        hp=series,
        krull_dim=series.denom_exponent,
        regularity=series.numerator.degree,
        gorenstein=None,
        methods_agree=True,
        h_oracle=series.numerator,
        conjecture_consistent=consistent,
    )
