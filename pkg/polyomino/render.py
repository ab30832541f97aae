"""
ASCII, TikZ and SVG pictures of a polyomino, optionally with rook markers.

Pictures are drawn relative to the bounding box, top row first.
"""
import xml.etree.ElementTree as ET

from .conf import polyalg_settings
from .exceptions import CellNotInPolyomino, UnknownFormat
from .geometry import Cell
from .rook import attacks, maximum_rook_configuration

SVG_NAMESPACE = 'http://www.w3.org/2000/svg'
CELL_FILL = '#d9d9d9'
STROKE = '#000000'


def resolve_rooks(polyomino, rooks):
    """``'auto'`` places a maximum configuration; explicit cells must be non-attacking."""
    if rooks == 'auto':
        return maximum_rook_configuration(polyomino)
    rooks = tuple(sorted(Cell(*c) for c in rooks or ()))
    for cell in rooks:
        if cell not in polyomino:
            raise CellNotInPolyomino(f"rook on {tuple(cell)} is outside the polyomino")
    for k, first in enumerate(rooks):
        for second in rooks[k + 1:]:
            if first == second or attacks(polyomino, first, second):
                raise ValueError(f"rooks on {tuple(first)} and {tuple(second)} attack each other")
    return rooks


def render_ascii(polyomino, rooks=()):
    lo, hi = polyomino.bounding_box
    rooks = set(rooks)
    lines = []
    for y in range(hi.j - 1, lo.j - 1, -1):
        row = ''
        for x in range(lo.i, hi.i):
            cell = Cell(x, y)
            row += 'R' if cell in rooks else '#' if cell in polyomino else '.'
        lines.append(row)
    return '\n'.join(lines)


def render_tikz(polyomino, rooks=()):
    lo, _ = polyomino.bounding_box
    lines = [r'\begin{tikzpicture}[scale=0.5]']
    for cell in polyomino.sorted_cells:
        x, y = cell.i - lo.i, cell.j - lo.j
        lines.append(rf'  \draw[fill=gray!25] ({x},{y}) rectangle ({x + 1},{y + 1});')
    for cell in rooks:
        x, y = cell.i - lo.i, cell.j - lo.j
        lines.append(rf'  \fill ({x}.5,{y}.5) circle (0.2);')
    lines.append(r'\end{tikzpicture}')
    return '\n'.join(lines)


def render_svg(polyomino, rooks=(), cell_size=None):
    size = cell_size or polyalg_settings('SVG_CELL_SIZE')
    lo, hi = polyomino.bounding_box
    width, height = (hi.i - lo.i) * size, (hi.j - lo.j) * size

    def corner(cell):
        return (cell.i - lo.i) * size, (hi.j - 1 - cell.j) * size

    root = ET.Element('svg', {
        'xmlns': SVG_NAMESPACE,
        'width': str(width),
        'height': str(height),
        'viewBox': f'0 0 {width} {height}',
    })
    squares = ET.SubElement(root, 'g', {'fill': CELL_FILL, 'stroke': STROKE})
    for cell in polyomino.sorted_cells:
        x, y = corner(cell)
        ET.SubElement(squares, 'rect', {
            'x': str(x), 'y': str(y), 'width': str(size), 'height': str(size),
        })
    if rooks:
        markers = ET.SubElement(root, 'g', {'fill': STROKE})
        for cell in rooks:
            x, y = corner(cell)
            ET.SubElement(markers, 'circle', {
                'cx': str(x + size // 2), 'cy': str(y + size // 2), 'r': str(size // 4),
            })
    ET.indent(root, space='  ')
    return ET.tostring(root, encoding='unicode') + '\n'


FORMATS = {
    'ascii': render_ascii,
    'tikz': render_tikz,
    'svg': render_svg,
}


def render(polyomino, fmt='ascii', rooks=()):
    try:
        renderer = FORMATS[fmt]
    except KeyError:
        raise UnknownFormat(f"unknown format '{fmt}'; expected one of {', '.join(FORMATS)}")
    return renderer(polyomino, resolve_rooks(polyomino, rooks))
