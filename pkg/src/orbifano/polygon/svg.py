from __future__ import annotations

import io
import math

import cairo

from orbifano.polygon.fano import FanoPolygon

_OUTLINE = (0.12, 0.23, 0.58)
_GRID = (0.6, 0.6, 0.6)


def _dot(ctx: cairo.Context, x: int, y: int, radius: float) -> None:
    ctx.new_sub_path()
    ctx.arc(x, y, radius, 0, 2 * math.pi)


def render_polygon_svg(p: FanoPolygon, scale: int = 40) -> str:
    """SVG picture of p on its lattice: grid points, outline, vertices, hollow origin.

    Output depends only on the vertices and scale.
    """
    xs = [v[0] for v in p.vertices]
    ys = [v[1] for v in p.vertices]
    xmin, xmax = min(xs) - 1, max(xs) + 1
    ymin, ymax = min(ys) - 1, max(ys) + 1
    width = (xmax - xmin) * scale
    height = (ymax - ymin) * scale

    buf = io.BytesIO()
    surface = cairo.SVGSurface(buf, width, height)
    surface.set_document_unit(cairo.SVG_UNIT_PX)
    ctx = cairo.Context(surface)
    # lattice coordinates, y up
    ctx.translate(-xmin * scale, ymax * scale)
    ctx.scale(scale, -scale)

    ctx.set_source_rgb(*_GRID)
    for x in range(xmin, xmax + 1):
        for y in range(ymin, ymax + 1):
            _dot(ctx, x, y, max(scale // 20, 1) / scale)
    ctx.fill()

    ctx.set_source_rgb(*_OUTLINE)
    ctx.set_line_width(max(scale // 16, 1) / scale)
    first, *rest = p.vertices
    ctx.move_to(*first)
    for v in rest:
        ctx.line_to(*v)
    ctx.close_path()
    ctx.stroke()
    for x, y in p.vertices:
        _dot(ctx, x, y, max(scale // 8, 2) / scale)
    ctx.fill()

    _dot(ctx, 0, 0, max(scale // 6, 3) / scale)
    ctx.set_source_rgb(1, 1, 1)
    ctx.fill_preserve()
    ctx.set_source_rgb(0, 0, 0)
    ctx.set_line_width(max(scale // 20, 1) / scale)
    ctx.stroke()

    surface.finish()
    return buf.getvalue().decode("utf-8")
