"""
SVG schematic of the vertex link: one sector per corner, labelled with its
corner number, gaps highlighted, maximal bands drawn as labelled arcs outside
the ring.
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from PyQt6.QtCore import QBuffer, QCoreApplication, QIODevice, QPointF, QRect, QRectF, QSize, Qt
from PyQt6.QtGui import QBrush, QColor, QFont, QGuiApplication, QPainter, QPen
from PyQt6.QtSvg import QSvgGenerator

from .band_analysis import Band, BandKind, bands
from .coloring import Coloring, link_corner_numbers, require_admissible
from .surface_model import Corner, Triangulation

logger = logging.getLogger(__name__)

FULL_CIRCLE = 360 * 16  # Qt angles are in 1/16 degree
DEFAULT_SIZE = 480

GAP_COLOR = "#f4c542"
CORNER_COLOR = "#dde3ea"
BAND_COLORS = {
    BandKind.LONG: "#c0392b",
    BandKind.SHORT: "#2e86c1",
    BandKind.HALF: "#8e44ad",
    BandKind.EQUATORIAL: "#27ae60",
}

_app: Optional[QGuiApplication] = None


@dataclass(frozen=True)
class Sector:
    position: int
    corner: Corner
    number: int
    gap: bool
    start_angle: int  # 1/16 degree, counter-clockwise from 3 o'clock
    span: int


@dataclass(frozen=True)
class BandArc:
    band: Band
    start_angle: int
    span: int

    @property
    def label(self) -> str:
        return self.band.kind.value


@dataclass(frozen=True)
class LinkSchematic:
    sectors: Tuple[Sector, ...]
    arcs: Tuple[BandArc, ...]


def _boundary(position: int, n: int) -> int:
    # Position 0 starts at 12 o'clock; positions advance clockwise.
    return round(90 * 16 - position * FULL_CIRCLE / n)


def link_schematic(tri: Triangulation, f: Coloring) -> LinkSchematic:
    f = require_admissible(tri, f)
    link = tri.link
    n = link.size
    numbers = link_corner_numbers(tri, f)
    sectors = tuple(
        Sector(k, link.corners[k], numbers[k], numbers[k] == 0,
               _boundary(k, n), _boundary(k + 1, n) - _boundary(k, n))
        for k in range(n)
    )
    arcs = tuple(
        BandArc(band, _boundary(band.start, n), _boundary(band.start + band.length, n) - _boundary(band.start, n))
        for band in bands(tri, f) or ()
    )
    return LinkSchematic(sectors, arcs)


def _ensure_gui():
    """QPainter text needs a GUI application; start an offscreen one if none exists."""
    global _app
    if QCoreApplication.instance() is None:
        _app = QGuiApplication(["dehnslide", "-platform", "offscreen"])


def _point(center: float, radius: float, angle16: float) -> QPointF:
    theta = math.radians(angle16 / 16)
    return QPointF(center + radius * math.cos(theta), center - radius * math.sin(theta))


def _label(painter: QPainter, at: QPointF, text: str):
    painter.drawText(QRectF(at.x() - 30, at.y() - 10, 60, 20), Qt.AlignmentFlag.AlignCenter, text)


def render_link(tri: Triangulation, f: Coloring, format: str = "svg", size: int = DEFAULT_SIZE) -> str:
    """Renders the vertex-link schematic; the output is identical for identical inputs."""
    if format != "svg":
        raise ValueError(f"unsupported render format {format!r}; only 'svg' is available")
    schematic = link_schematic(tri, f)
    _ensure_gui()

    buffer = QBuffer()
    buffer.open(QIODevice.OpenModeFlag.WriteOnly)
    generator = QSvgGenerator()
    generator.setOutputDevice(buffer)
    generator.setSize(QSize(size, size))
    generator.setViewBox(QRect(0, 0, size, size))
    generator.setTitle("Vertex link")
    generator.setDescription(f"coloring {' '.join(map(str, f))}")

    center = size / 2
    ring = 0.36 * size
    band_radius = 0.41 * size
    painter = QPainter()
    painter.begin(generator)
    try:
        painter.setFont(QFont("DejaVu Sans", max(8, size // 40)))
        outer = QRectF(center - ring, center - ring, 2 * ring, 2 * ring)
        for sector in schematic.sectors:
            painter.setPen(QPen(QColor("#34495e"), 1))
            painter.setBrush(QBrush(QColor(GAP_COLOR if sector.gap else CORNER_COLOR)))
            painter.drawPie(outer, sector.start_angle, sector.span)
        painter.setBrush(Qt.BrushStyle.NoBrush)
        for sector in schematic.sectors:
            middle = sector.start_angle + sector.span / 2
            _label(painter, _point(center, 0.72 * ring, middle), str(sector.number))

        around = QRectF(center - band_radius, center - band_radius, 2 * band_radius, 2 * band_radius)
        for arc in schematic.arcs:
            pen = QPen(QColor(BAND_COLORS[arc.band.kind]), max(2, size // 120))
            pen.setCapStyle(Qt.PenCapStyle.FlatCap)
            painter.setPen(pen)
            painter.drawArc(around, arc.start_angle, arc.span)
            middle = arc.start_angle + arc.span / 2
            _label(painter, _point(center, band_radius + 0.05 * size, middle), arc.label)
    finally:
        painter.end()

    document = bytes(buffer.data()).decode("utf-8")
    logger.info(f"Rendered link of {f}: {len(schematic.sectors)} sectors, {len(schematic.arcs)} band arc(s)")
    return document
