"""
Input documents: grid text and JSON.

Grid text is a block of lines over ``#`` (cell) and ``.`` (no cell); the
first line is the top row, so row k of an r-row block holds cells with
y = r - 1 - k. JSON documents look like ``{"cells": [[i, j], ...]}``. Both
parse to a Polyomino translated so its bounding box starts at (0, 0).
"""
import io

from rest_framework.exceptions import ParseError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from .exceptions import Disconnected, DuplicateCell, EmptyInput, GridSyntaxError, InputError
from .geometry import Cell, Polyomino, is_polyomino
from .serializers import InputDocumentSerializer

CELL = '#'
EMPTY = '.'

_ERRORS = {
    'empty': EmptyInput,
    'duplicate_cell': DuplicateCell,
    'disconnected': Disconnected,
}


def parse_grid(text):
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    rows = len(lines)
    cells = set()
    for k, line in enumerate(lines):
        for col, char in enumerate(line.rstrip()):
            if char == CELL:
                cells.add(Cell(col, rows - 1 - k))
            elif char != EMPTY:
                raise GridSyntaxError(f"unexpected character {char!r}", line=k + 1, column=col + 1)
    if not cells:
        raise EmptyInput()
    if not is_polyomino(cells):
        raise Disconnected()
    return Polyomino(frozenset(cells)).translated()


def _first_error(detail):
    # ListField reports item errors as {index: [errors]}
    if isinstance(detail, dict):
        return _first_error(next(iter(detail.values())))
    if isinstance(detail, list):
        return _first_error(detail[0])
    return detail


def parse_document(data):
    serializer = InputDocumentSerializer(data=data)
    if not serializer.is_valid():
        error = _first_error(serializer.errors)
        raise _ERRORS.get(getattr(error, 'code', None), InputError)(str(error))
    return Polyomino(frozenset(serializer.validated_data['cells'])).translated()


def parse_json(text):
    try:
        data = JSONParser().parse(io.BytesIO(text.encode('utf-8')))
    except ParseError as exc:
        raise GridSyntaxError(str(exc.detail))
    if not isinstance(data, dict):
        raise InputError('a JSON input document must be an object')
    return parse_document(data)


def _looks_like_json(text):
    return text.lstrip().startswith('{')


def parse_input(text):
    if _looks_like_json(text):
        return parse_json(text)
    return parse_grid(text)


def parse_stream(text):
    """
    Yield every polyomino in a stream: one JSON document per line, or grid
    blocks separated by blank lines.
    """
    if _looks_like_json(text):
        for line in text.splitlines():
            if line.strip():
                yield parse_json(line)
        return
    block = []
    for line in text.splitlines() + ['']:
        if line.strip():
            block.append(line)
        elif block:
            yield parse_grid('\n'.join(block))
            block = []


def render_document(polyomino):
    """One-line JSON input document."""
    return JSONRenderer().render(InputDocumentSerializer(polyomino).data).decode('utf-8')
