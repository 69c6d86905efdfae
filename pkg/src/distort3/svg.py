"""Static SVG figures of curves and marked points."""

from __future__ import annotations

import xml.etree.ElementTree as ET

import numpy as np

PLANES = {"xy": (0, 1), "xz": (0, 2), "yz": (1, 2)}


def project(points, plane: str = "xy") -> np.ndarray:
    """Orthographic projection onto a coordinate plane."""
    P = np.asarray(points, dtype=float)
    if P.shape[1] == 2 and plane == "xy":
        return P
    try:
        a, b = PLANES[plane]
    except KeyError:
        raise ValueError(f"unknown plane {plane!r}; choose from {sorted(PLANES)}") from None
    if max(a, b) >= P.shape[1]:
        raise ValueError(f"plane {plane!r} needs dimension >= {max(a, b) + 1}")
    return P[:, [a, b]]


def render_svg(curves, marks=None, plane: str = "xy", width: int = 800, title: str | None = None) -> str:
    """SVG text with one ``<path>`` per curve and one ``<circle>`` per marked point.

    The y-axis points up and the view box fits everything with a 5% margin.
    """
    curves = [project(c, plane) for c in curves]
    mk = project(marks, plane) if marks is not None and len(marks) else np.zeros((0, 2))
    allp = np.vstack(curves + [mk])
    lo, hi = allp.min(axis=0), allp.max(axis=0)
    span = float(max(hi[0] - lo[0], hi[1] - lo[1], 1e-12))
    pad = 0.05 * span
    x0, y0 = lo[0] - pad, -(hi[1] + pad)
    w, h = (hi[0] - lo[0]) + 2 * pad, (hi[1] - lo[1]) + 2 * pad
    w, h = max(w, 1e-9), max(h, 1e-9)
    stroke = span / 400
    root = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=str(width),
        height=str(max(1, int(round(width * h / w)))),
        viewBox=f"{x0:.9g} {y0:.9g} {w:.9g} {h:.9g}",
    )
    if title:
        ET.SubElement(root, "title").text = title
    for c in curves:
        d = "M " + " L ".join(f"{x:.9g},{-y:.9g}" for x, y in c)
        ET.SubElement(root, "path", d=d, fill="none", stroke="#1f4e99", **{"stroke-width": f"{stroke:.6g}"})
    for x, y in mk:
        ET.SubElement(root, "circle", cx=f"{x:.9g}", cy=f"{-y:.9g}", r=f"{2.5 * stroke:.6g}", fill="#c0392b")
    return ET.tostring(root, encoding="unicode")
