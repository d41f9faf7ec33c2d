"""Text formats: Gauss codes, planar diagram files, atlas files.

Gauss code grammar, one line:  ``@L`` or ``@R``, then whitespace-separated
tokens ``A<digits>h``, ``A<digits>t``, ``C+``, ``C-``, ``S<digits>``.
The token sequence reads the cyclic word starting at index 0.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .diagram import (
    FlatVirtualString,
    LegendrianGaussDiagram,
    canonical_code,
    canonical_form,
    validate,
)
from .errors import GaussSyntaxError, PlanarFileError
from .sites import Site, SiteKind

_TOKEN_RE = re.compile(r"A(\d+)([ht])|C([+-])|S(\d+)")


def parse_gauss_code(text: str) -> LegendrianGaussDiagram:
    """Parse and validate a Gauss code line.

    Raises GaussSyntaxError with the character position of the offending
    token, or a DiagramError if the word is grammatical but invalid.
    """
    i = 0
    n = len(text)
    while i < n and text[i].isspace():
        i += 1
    if i >= n or text[i] != "@":
        raise GaussSyntaxError(i, "expected '@L' or '@R' coorientation header")
    if i + 1 >= n or text[i + 1] not in "LR":
        raise GaussSyntaxError(i + 1, "coorientation must be 'L' or 'R'")
    base = text[i + 1]
    i += 2
    sites = []
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN_RE.match(text, i)
        if not m or (m.end() < n and not text[m.end()].isspace()):
            raise GaussSyntaxError(i, f"unrecognized token {text[i:].split()[0]!r}")
        if m.group(1) is not None:
            aid = int(m.group(1))
            if aid <= 0:
                raise GaussSyntaxError(i, "arrow ids must be positive")
            kind = SiteKind.HEAD if m.group(2) == "h" else SiteKind.TAIL
            sites.append(Site(kind, aid))
        elif m.group(3) is not None:
            sites.append(Site(SiteKind.CUSP, 1 if m.group(3) == "+" else -1))
        else:
            mid = int(m.group(4))
            if mid <= 0:
                raise GaussSyntaxError(i, "mark ids must be positive")
            sites.append(Site(SiteKind.MARK, mid))
        i = m.end()
    # Arbitrary positive ids are accepted and renumbered by first
    # occurrence, so relabeled inputs parse to the same diagram.
    arrow_map, mark_map = {}, {}
    renumbered = []
    for s in sites:
        if s.kind in (SiteKind.HEAD, SiteKind.TAIL):
            s = Site(s.kind, arrow_map.setdefault(s.value, len(arrow_map) + 1))
        elif s.kind is SiteKind.MARK:
            s = Site(s.kind, mark_map.setdefault(s.value, len(mark_map) + 1))
        renumbered.append(s)
    d = LegendrianGaussDiagram(tuple(renumbered), base)
    validate(d)
    return d


def emit_gauss_code(d: LegendrianGaussDiagram) -> str:
    """Emit the canonical rotation; parse(emit(d)) has d's code."""
    return canonical_code(d)


def parse_string_code(text: str) -> FlatVirtualString:
    """Parse an arrows-only word (no '@' header)."""
    d = parse_gauss_code("@L " + text.strip())
    return FlatVirtualString(d.sites)


# ---------------------------------------------------------------------------
# Planar diagram files.  Line format:
#
#     # comments and blank lines ignored
#     seed L
#     vertex <x> <y>          (decimal or p/q rational, one per line, in order)
#     cusp <vertex-index> <+|->
#     virtual <seg-i> <seg-j>  (segment pair forced virtual; others real)


def _parse_coord(tok, line_no, col):
    try:
        if "/" in tok:
            num, den = tok.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise PlanarFileError(line_no, col, f"bad coordinate {tok!r}") from None


def load_planar_record(text: str):
    """Parse the planar file text into (vertices, cusps, virtual_pairs, seed).

    Geometric validation happens when the record is turned into a
    PlanarFrontDiagram; this loader only enforces the grammar.
    """
    vertices = []
    cusps = []
    virtual_pairs = []
    seed = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kw = parts[0]
        if kw == "seed":
            if len(parts) != 2 or parts[1] not in ("L", "R"):
                raise PlanarFileError(line_no, len(parts[0]) + 2, "seed must be L or R")
            seed = parts[1]
        elif kw == "vertex":
            if len(parts) != 3:
                raise PlanarFileError(line_no, 1, "vertex needs two coordinates")
            x = _parse_coord(parts[1], line_no, raw.find(parts[1]) + 1)
            y = _parse_coord(parts[2], line_no, raw.find(parts[2]) + 1)
            vertices.append((x, y))
        elif kw == "cusp":
            if len(parts) != 3 or parts[2] not in ("+", "-"):
                raise PlanarFileError(line_no, 1, "cusp needs a vertex index and a sign")
            try:
                idx = int(parts[1])
            except ValueError:
                raise PlanarFileError(line_no, raw.find(parts[1]) + 1, "bad vertex index") from None
            cusps.append((idx, 1 if parts[2] == "+" else -1))
        elif kw == "virtual":
            if len(parts) != 3:
                raise PlanarFileError(line_no, 1, "virtual needs two segment indices")
            try:
                i, j = int(parts[1]), int(parts[2])
            except ValueError:
                raise PlanarFileError(line_no, 1, "bad segment index") from None
            virtual_pairs.append((min(i, j), max(i, j)))
        else:
            raise PlanarFileError(line_no, 1, f"unknown keyword {kw!r}")
    if seed is None:
        raise PlanarFileError(1, 1, "missing 'seed' line")
    return vertices, cusps, virtual_pairs, seed


def dump_planar_record(vertices, cusps, virtual_pairs, seed) -> str:
    out = [f"seed {seed}"]
    for x, y in vertices:
        out.append(f"vertex {x} {y}")
    for idx, sign in cusps:
        out.append(f"cusp {idx} {'+' if sign > 0 else '-'}")
    for i, j in sorted(virtual_pairs):
        out.append(f"virtual {i} {j}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Atlas files (JSON-compatible)

ATLAS_FORMAT_VERSION = 1


def dump_atlas(records, mode, budget) -> str:
    header = {
        "mode": mode,
        "budget": {
            "max_depth": budget.max_depth,
            "max_nodes": budget.max_nodes,
            "max_word_length": budget.max_word_length,
        },
        "format_version": ATLAS_FORMAT_VERSION,
    }
    recs = [
        {
            "code": r.code,
            "maslov": r.invariants.maslov,
            "arrows": r.invariants.arrow_count,
            "cusps": r.invariants.positive_cusps + r.invariants.negative_cusps,
            "genus": r.invariants.genus,
            "rho": r.invariants.rho,
            "orbit_id": r.orbit_id,
        }
        for r in records
    ]
    return json.dumps({"header": header, "records": recs}, indent=0, sort_keys=True)


def load_atlas(text: str):
    doc = json.loads(text)
    if doc["header"]["format_version"] != ATLAS_FORMAT_VERSION:
        raise ValueError(f"unsupported atlas format {doc['header']['format_version']}")
    return doc


def render_svg(vertices, virtual_points, cusp_indices, width=400) -> str:
    """Debug export of a planar realization as a minimal SVG document."""
    xs = [float(x) for x, _ in vertices]
    ys = [float(y) for _, y in vertices]
    if not xs:
        return "<svg xmlns='http://www.w3.org/2000/svg'/>"
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    s = (width - 20) / span

    def tx(p):
        return 10 + (float(p[0]) - x0) * s, 10 + (y1 - float(p[1])) * s

    pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in map(tx, vertices))
    bits = [
        f"<svg xmlns='http://www.w3.org/2000/svg' width='{width}' height='{width}'>",
        f"<polygon points='{pts}' fill='none' stroke='black'/>",
    ]
    for p in virtual_points:
        x, y = tx(p)
        bits.append(f"<circle cx='{x:.2f}' cy='{y:.2f}' r='4' fill='none' stroke='gray'/>")
    for i in cusp_indices:
        x, y = tx(vertices[i])
        bits.append(f"<circle cx='{x:.2f}' cy='{y:.2f}' r='2.5' fill='black'/>")
    bits.append("</svg>")
    return "\n".join(bits)
