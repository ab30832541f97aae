"""
Corpus verification: runs every consistency check on each instance and
aggregates a summary. Instances are independent and may be fanned out to
worker processes; results are merged in corpus order.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from contextlib import suppress
from dataclasses import dataclass, field
from pathlib import Path

from .algebra import NO_ANCHORS, groebner_oracle, inner_two_minors, s_pairs_reduce_to_zero
from .classify import (
    closed_path_sequence,
    find_l_configurations,
    find_ladders,
    has_zig_zag_walk,
    is_simple,
    is_thin,
)
from .conf import polyalg_settings
from .corpus import REFERENCE_INSTANCES, closed_paths, free_polyominoes, reference_instance
from .decompositions import (
    LCDecomposition,
    Ladder3Decomposition,
    WConfiguration,
    decompose_ladder3,
    find_decomposition,
)
from .exceptions import NotApplicable, PolyominoError
from .geometry import Orientation, Polyomino, canonical_form, maximal_blocks
from .hilbert import (
    T,
    expected_dimension,
    formula_h,
    h_ladder3,
    hp_q_relation_check,
    hp_q_second_relation_check,
    weakly_closed_invariants,
)
from .ingest import render_document
from .rook import AttackConvention, rook_number, rook_polynomial, s_property

logger = logging.getLogger(__name__)

INJECTIONS = ('attack-flip', 'formula-sign')

CHECKS = (
    'zig_zag_equivalence',
    'three_way',
    'dimension',
    'regularity',
    'gorenstein',
    'ladder3_formula',
    'rook_relations',
    'hp_relation',
    'hp_second_relation',
    'weakly_closed',
    'groebner',
    'simple_thin',
)


@dataclass(frozen=True)
class CheckOutcome:
    check: str
    passed: bool
    detail: str = ''


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0


@dataclass(frozen=True)
class Failure:
    check: str
    cells: tuple
    detail: str


@dataclass
class VerifySummary:
    instances: int = 0
    checks: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


class _Checks:
    """Collects outcomes; a PolyominoError inside a check counts as a failure."""

    def __init__(self):
        self.outcomes = []

    def record(self, check, run):
        try:
            passed, detail = run()
        except PolyominoError as exc:
            passed, detail = False, f'{exc.code}: {exc.message}'
        self.outcomes.append(CheckOutcome(check, passed, detail))


def _flip_linear(h):
    return h - 2 * h[1] * T


def _closed_path_checks(polyomino, checks, inject):
    convention = AttackConvention.SEE_THROUGH if inject == 'attack-flip' else AttackConvention.BLOCKED
    h_rook = rook_polynomial(polyomino, convention)
    dec = find_decomposition(polyomino)
    h_formula = None
    if dec is not None:
        _, h_formula = formula_h(polyomino, dec)
        if inject == 'formula-sign':
            h_formula = _flip_linear(h_formula)
    if isinstance(dec, WConfiguration):
        run = groebner_oracle(dec.frame, dec.anchors)
    else:
        run = groebner_oracle(polyomino, NO_ANCHORS)
    series = run.series

    checks.record('three_way', lambda: (
        h_formula is not None and h_rook == h_formula == series.numerator,
        f'rook={h_rook} formula={h_formula} oracle={series.numerator}',
    ))
    dim = expected_dimension(polyomino)
    checks.record('dimension', lambda: (
        series.denom_exponent == dim, f'oracle {series.denom_exponent}, |V| - rank {dim}',
    ))
    checks.record('regularity', lambda: (
        series.numerator.degree == rook_number(polyomino, convention),
        f'deg h {series.numerator.degree}',
    ))

    def gorenstein():
        blocks = all(
            block.rank == 3 for orientation in Orientation
            for block in maximal_blocks(polyomino, orientation)
        )
        palindromic = h_rook.is_palindromic()
        holds, _ = s_property(polyomino)
        return palindromic == blocks == holds, f'palindromic={palindromic} blocks={blocks} S={holds}'

    checks.record('gorenstein', gorenstein)

    # W paths may carry a three-cell ladder too
    ladder = dec if isinstance(dec, Ladder3Decomposition) else None
    if ladder is None and isinstance(dec, WConfiguration):
        with suppress(NotApplicable):
            ladder = decompose_ladder3(polyomino)
    if ladder is not None:
        def ladder3_formula():
            h_ladder = h_ladder3(polyomino, ladder)
            if inject == 'formula-sign':
                h_ladder = _flip_linear(h_ladder)
            return h_ladder == h_rook, f'ladder3={h_ladder} rook={h_rook}'

        checks.record('ladder3_formula', ladder3_formula)

    bounded = dec if isinstance(dec, LCDecomposition) else ladder
    if bounded is not None:
        def relations():
            bounds = bounded.rook_number_bounds(rook_number(polyomino))
            numbers = {name: rook_number(bounded.derived[name]) for name in bounds}
            bad = {
                name: n for name, n in numbers.items()
                if not bounds[name][0] <= n <= bounds[name][1]
            }
            return not bad, f'out of bounds: {bad}' if bad else ''

        checks.record('rook_relations', relations)

    if isinstance(dec, WConfiguration):
        checks.record('hp_relation', lambda: (hp_q_relation_check(polyomino, dec), ''))
        checks.record('hp_second_relation', lambda: (hp_q_second_relation_check(polyomino, dec), ''))
        checks.record('weakly_closed', lambda: (
            weakly_closed_invariants(dec.q, dec).h == rook_polynomial(dec.q), '',
        ))

        def groebner():
            if run.fallback:
                return False, 'no lex order honouring the anchors was found'
            anchors = dec.anchors
            honoured = anchors.inside <= run.order.y and not (anchors.outside & run.order.y)
            certified = s_pairs_reduce_to_zero(inner_two_minors(dec.frame), run.order)
            return honoured and certified, f'Y={sorted(run.order.y)}'

        checks.record('groebner', groebner)


def check_instance(polyomino, inject=None):
    """Every applicable check for one polyomino, as CheckOutcomes."""
    checks = _Checks()
    if closed_path_sequence(polyomino) is not None:
        zig_zag = has_zig_zag_walk(polyomino)
        prime = bool(find_l_configurations(polyomino)) or find_ladders(polyomino)[0] >= 3
        checks.record('zig_zag_equivalence', lambda: (prime != zig_zag, f'prime={prime} zig_zag={zig_zag}'))
        if not zig_zag:
            _closed_path_checks(polyomino, checks, inject)
    elif is_simple(polyomino) and is_thin(polyomino):
        def simple_thin():
            series = groebner_oracle(polyomino).series
            h = rook_polynomial(polyomino)
            dim = expected_dimension(polyomino)
            return (
                series.numerator == h and series.denom_exponent == dim,
                f'oracle {series}, rook {h}, |V| - rank {dim}',
            )

        checks.record('simple_thin', simple_thin)
    return checks.outcomes


def _check_instance_job(job):
    polyomino, inject = job
    return check_instance(polyomino, inject)


def default_corpus(max_rank=12, simple_rank=7):
    """Closed paths up to ``max_rank``, the reference instances and simple thin polyominoes."""
    corpus = {canonical_form(p): p for p in closed_paths(max_rank)}
    for name in REFERENCE_INSTANCES:
        p = reference_instance(name)
        corpus.setdefault(canonical_form(p), p)
    if simple_rank:
        for p in free_polyominoes(simple_rank, simple=True, thin=True):
            corpus.setdefault(canonical_form(p), p)
    return [corpus[key] for key in sorted(corpus, key=lambda cells: (len(cells), cells))]


def run_verify(corpus, inject=None, workers=None, dump_dir=None):
    if inject is not None and inject not in INJECTIONS:
        raise ValueError(f"unknown injection '{inject}'")
    workers = workers or polyalg_settings('VERIFY_WORKERS')
    jobs = [(p, inject) for p in corpus]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_check_instance_job, jobs))
    else:
        results = [_check_instance_job(job) for job in jobs]

    tallies = {name: CheckResult(name) for name in CHECKS}
    summary = VerifySummary(instances=len(jobs))
    for polyomino, outcomes in zip(corpus, results):
        seen = set()
        for outcome in outcomes:
            seen.add(outcome.check)
            tally = tallies[outcome.check]
            if outcome.passed:
                tally.passed += 1
            else:
                tally.failed += 1
                summary.failures.append(Failure(outcome.check, polyomino.sorted_cells, outcome.detail))
                logger.warning('%s failed on %s: %s', outcome.check, polyomino, outcome.detail)
        for name in CHECKS:
            if name not in seen:
                tallies[name].skipped += 1
    summary.checks = [tallies[name] for name in CHECKS]

    if dump_dir and summary.failures:
        directory = Path(dump_dir)
        directory.mkdir(parents=True, exist_ok=True)
        for k, failure in enumerate(summary.failures):
            target = directory / f'{k:04d}_{failure.check}.json'
            target.write_text(render_document(Polyomino(frozenset(failure.cells))) + '\n', encoding='utf-8')
    return summary