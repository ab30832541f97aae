"""Error hierarchy. Every error carries a stable ``code`` and a CLI exit code."""

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_DISAGREEMENT = 3
EXIT_BUDGET_EXCEEDED = 4


class PolyominoError(Exception):
    code = 'polyomino_error'
    exit_code = 1

    def __init__(self, message=None):
        super().__init__(message or self.__class__.__doc__)
        self.message = message or self.__class__.__doc__


# Geometry / classification

class DegenerateInterval(PolyominoError):
    """Interval is not proper"""
    code = 'degenerate_interval'


class CellNotInPolyomino(PolyominoError):
    """Cell does not belong to the polyomino"""
    code = 'cell_not_in_polyomino'


class NotAClosedPath(PolyominoError):
    """Polyomino is not a closed path"""
    code = 'not_a_closed_path'


class NoDecomposition(PolyominoError):
    """No (L,C) decomposition exists"""
    code = 'no_decomposition'


class NotApplicable(PolyominoError):
    """Decomposition preconditions do not hold"""
    code = 'not_applicable'


class NotThin(PolyominoError):
    """Polyomino contains a square tetromino"""
    code = 'not_thin'


# Invariants

class NotSimpleThin(PolyominoError):
    """Polyomino is not simple and thin"""
    code = 'not_simple_thin'


class ComplementNotSimple(PolyominoError):
    """Complement of the L-region is not simple"""
    code = 'complement_not_simple'


class WrongCase(PolyominoError):
    """Decomposition has the wrong case for this formula"""
    code = 'wrong_case'


class NotFromWConfiguration(PolyominoError):
    """Polyomino does not arise from the given W-configuration"""
    code = 'not_from_w_configuration'


class HasZigZag(PolyominoError):
    """Closed path has a zig-zag walk; only the oracle applies"""
    code = 'has_zig_zag'


class OutOfScopeClass(PolyominoError):
    """Polyomino class is outside the proven Gorenstein characterization"""
    code = 'out_of_scope_class'


class InvariantViolation(PolyominoError):
    """An asserted cross-check failed"""
    code = 'invariant_violation'
    exit_code = EXIT_DISAGREEMENT


# Algebra

class BudgetExceeded(PolyominoError):
    """Search or completion budget exhausted"""
    code = 'budget_exceeded'
    exit_code = EXIT_BUDGET_EXCEEDED

    def __init__(self, message=None, partial_basis=None, pairs_processed=0):
        super().__init__(message)
        self.partial_basis = partial_basis or []
        self.pairs_processed = pairs_processed


class NotFound(PolyominoError):
    """No valid lexicographic order found within the search budget"""
    code = 'not_found'
    exit_code = EXIT_BUDGET_EXCEEDED


# Input

class InputError(PolyominoError):
    """Invalid input document"""
    code = 'input_error'
    exit_code = EXIT_INPUT_ERROR


class EmptyInput(InputError):
    """Input contains no cells"""
    code = 'empty'


class Disconnected(InputError):
    """Cells are not edge-connected"""
    code = 'disconnected'


class DuplicateCell(InputError):
    """A cell is listed more than once"""
    code = 'duplicate_cell'


class GridSyntaxError(InputError):
    """Malformed grid text"""
    code = 'syntax_error'

    def __init__(self, message=None, line=None, column=None):
        if line is not None:
            message = f"{message or self.__class__.__doc__} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class UnknownFormat(InputError):
    """Unknown output format"""
    code = 'unknown_format'


class CapExceeded(InputError):
    """Requested rank exceeds the configured generator cap"""
    code = 'cap_exceeded'
