"""SVG rendering of tessellations and shaded hulls.

Chamber polygons keep exact coordinates until serialization; only the
final attribute strings are decimal.  Each drawn polygon carries exactly
one class: hull-uv, hull-vw, hull-uvw (membership precedence in that
order) or plain for the surrounding belt.  Walls are clipped line
segments, one per family offset crossing the viewport.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .convexity import ChamberSet
from .tessellation import Chamber, GroupContext


@dataclass
class SvgScene:
    viewbox: tuple  # (min_x, min_y, width, height) in plane coordinates
    polygons: list = field(default_factory=list)  # (points, css_class)
    lines: list = field(default_factory=list)     # ((x1, y1), (x2, y2))
    labels: list = field(default_factory=list)    # (text, (x, y))

    def filled_count(self) -> int:
        return sum(1 for _, cls in self.polygons if cls != "plain")

    def to_svg(self) -> str:
        min_x, min_y, w, h = self.viewbox
        # Flip y so the plane's upward direction points up on screen.
        def pt(p):
            return f"{float(p[0]):.5f},{-float(p[1]):.5f}"

        out = [
            f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'viewBox="{min_x:.5f} {-(min_y + h):.5f} {w:.5f} {h:.5f}">',
            "<style>",
            ".hull-uv{fill:#9a9a9a}.hull-vw{fill:#bfbfbf}.hull-uvw{fill:#e3e3e3}",
            ".plain{fill:#ffffff}",
            "polygon{stroke:#555555;stroke-width:0.015}",
            "line{stroke:#aaaaaa;stroke-width:0.01}",
            "text{font-size:0.32px;font-family:sans-serif;text-anchor:middle;"
            "dominant-baseline:middle}",
            "</style>",
        ]
        for (x1, y1), (x2, y2) in self.lines:
            out.append(f'<line x1="{x1:.5f}" y1="{-y1:.5f}" '
                       f'x2="{x2:.5f}" y2="{-y2:.5f}"/>')
        for points, cls in self.polygons:
            body = " ".join(pt(p) for p in points)
            out.append(f'<polygon class="{cls}" points="{body}"/>')
        for text, (x, y) in self.labels:
            out.append(f'<text x="{float(x):.5f}" y="{-float(y):.5f}">{text}</text>')
        out.append("</svg>")
        return "\n".join(out) + "\n"


def _clip_line_to_box(n1, n2, c, box):
    """Segment of the line n1*x + n2*y = c inside an axis-aligned box."""
    min_x, min_y, max_x, max_y = box
    pts = []
    if abs(n2) > 1e-12:
        for x in (min_x, max_x):
            y = (c - n1 * x) / n2
            if min_y - 1e-9 <= y <= max_y + 1e-9:
                pts.append((x, y))
    if abs(n1) > 1e-12:
        for y in (min_y, max_y):
            x = (c - n2 * y) / n1
            if min_x - 1e-9 <= x <= max_x + 1e-9:
                pts.append((x, y))
    uniq = []
    for p in pts:
        if all(abs(p[0] - q[0]) + abs(p[1] - q[1]) > 1e-7 for q in uniq):
            uniq.append(p)
    if len(uniq) < 2:
        return None
    return uniq[0], uniq[1]


def hull_scene(ctx: GroupContext,
               u: Chamber, v: Chamber, w: Chamber,
               hull_uv: ChamberSet, hull_vw: ChamberSet, hull_uvw: ChamberSet,
               margin: float = 0.05) -> SvgScene:
    """Scene with the triple hull shaded and its pair hulls emphasized."""
    drawn = {}
    for c in hull_uvw:
        if c in hull_uv:
            cls = "hull-uv"
        elif c in hull_vw:
            cls = "hull-vw"
        else:
            cls = "hull-uvw"
        drawn[c] = cls
    belt = {}
    for c in list(drawn):
        for _, nb in c.neighbors():
            if nb not in drawn and nb not in belt:
                belt[nb] = "plain"

    polygons = []
    xs, ys = [], []
    for c, cls in list(drawn.items()) + list(belt.items()):
        verts = [(float(p[0]), float(p[1])) for p in c.vertices()]
        xs.extend(x for x, _ in verts)
        ys.extend(y for _, y in verts)
        polygons.append((verts, cls))

    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    pad = margin * max(max_x - min_x, max_y - min_y, 1.0)
    box = (min_x - pad, min_y - pad, max_x + pad, max_y + pad)
    viewbox = (box[0], box[1], box[2] - box[0], box[3] - box[1])

    lines = []
    corners = [(box[0], box[1]), (box[0], box[3]), (box[2], box[1]), (box[2], box[3])]
    for fam in ctx.families:
        n1, n2 = float(fam.normal[0]), float(fam.normal[1])
        ref, spacing = float(fam.ref), float(fam.spacing)
        values = [(n1 * x + n2 * y - ref) / spacing for x, y in corners]
        for k in range(math.ceil(min(values)), math.floor(max(values)) + 1):
            seg = _clip_line_to_box(n1, n2, ref + k * spacing, box)
            if seg:
                lines.append(seg)

    labels = []
    for text, ch in (("u", u), ("v", v), ("w", w)):
        labels.append((text, (float(ch.barycenter[0]), float(ch.barycenter[1]))))

    scene = SvgScene(viewbox=viewbox)
    scene.polygons = polygons
    scene.lines = lines
    scene.labels = labels
    return scene
