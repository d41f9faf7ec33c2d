"""Gauss diagram types, validation, canonical codes, and basic projections.

A ``LegendrianGaussDiagram`` is a cyclic word of sites together with the
coorientation label of the arc at cyclic index 0.  Labels flip at every
cusp site, so one base bit determines all arc labels.  The core circle is
oriented counter-clockwise and never reflected; two diagrams are the same
object exactly when they differ by a rotation of the word plus a
relabeling of arrow/mark ids, which is what ``canonical_code`` quotients.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Tuple

from .errors import (
    BadMarkMultiplicity,
    NonContiguousIds,
    OddCuspCount,
    SingularNotAllowed,
    UnpairedArrow,
)
from .sites import Site, SiteKind, flip_coor, is_arrow_site, site_tag

CanonicalCode = str


@dataclass(frozen=True)
class LegendrianGaussDiagram:
    sites: Tuple[Site, ...]
    base_coorientation: str = "L"

    def __post_init__(self):
        object.__setattr__(self, "sites", tuple(self.sites))
        if self.base_coorientation not in ("L", "R"):
            raise ValueError("base coorientation must be 'L' or 'R'")

    def __len__(self):
        return len(self.sites)

    @property
    def arrow_count(self) -> int:
        return sum(1 for s in self.sites if s.kind is SiteKind.HEAD)

    @property
    def cusp_count(self) -> int:
        return sum(1 for s in self.sites if s.kind is SiteKind.CUSP)

    @property
    def mark_count(self) -> int:
        return sum(1 for s in self.sites if s.kind is SiteKind.MARK) // 2

    @property
    def positive_cusps(self) -> int:
        return sum(1 for s in self.sites if s.kind is SiteKind.CUSP and s.value > 0)

    @property
    def negative_cusps(self) -> int:
        return sum(1 for s in self.sites if s.kind is SiteKind.CUSP and s.value < 0)

    def __repr__(self):
        toks = " ".join(s.token() for s in self.sites)
        return f"<diagram @{self.base_coorientation} {toks}>".replace(" >", ">")


@dataclass(frozen=True)
class FlatVirtualString:
    """Arrows only: the underlying virtual string of a diagram."""

    sites: Tuple[Site, ...]

    def __post_init__(self):
        object.__setattr__(self, "sites", tuple(self.sites))
        for s in self.sites:
            if not is_arrow_site(s):
                raise ValueError(f"flat string may contain arrow sites only, got {s.token()}")

    def __len__(self):
        return len(self.sites)

    @property
    def arrow_count(self) -> int:
        return len(self.sites) // 2

    def __repr__(self):
        return "<string " + " ".join(s.token() for s in self.sites) + ">"


def validate(d: LegendrianGaussDiagram) -> None:
    """Check pairing, id contiguity, and cusp parity; raise on failure."""
    heads = Counter()
    tails = Counter()
    marks = Counter()
    cusps = 0
    for s in d.sites:
        if s.kind is SiteKind.HEAD:
            heads[s.value] += 1
        elif s.kind is SiteKind.TAIL:
            tails[s.value] += 1
        elif s.kind is SiteKind.MARK:
            marks[s.value] += 1
        else:
            cusps += 1
    for a in set(heads) | set(tails):
        if heads[a] != 1 or tails[a] != 1:
            raise UnpairedArrow(a)
    arrow_ids = set(heads)
    if arrow_ids and arrow_ids != set(range(1, len(arrow_ids) + 1)):
        raise NonContiguousIds("arrow", arrow_ids)
    for m, k in marks.items():
        if k != 2:
            raise BadMarkMultiplicity(m, k)
    mark_ids = set(marks)
    if mark_ids and mark_ids != set(range(1, len(mark_ids) + 1)):
        raise NonContiguousIds("mark", mark_ids)
    if cusps % 2:
        raise OddCuspCount(cusps)


def validate_string(s: FlatVirtualString) -> None:
    validate(LegendrianGaussDiagram(s.sites, "L"))


def arc_coorientation(d: LegendrianGaussDiagram, position: int) -> str:
    """Label of the arc at the gap just before site index ``position``.

    Positions are taken cyclically; the label flips once per cusp site
    strictly between index 0 and the position.
    """
    n = len(d.sites)
    if n == 0:
        return d.base_coorientation
    position %= n
    flips = sum(1 for s in d.sites[:position] if s.kind is SiteKind.CUSP)
    return flip_coor(d.base_coorientation) if flips % 2 else d.base_coorientation


def underlying_string(d: LegendrianGaussDiagram) -> FlatVirtualString:
    """Forget the cusps.  Not defined for singular diagrams."""
    validate(d)
    if d.mark_count:
        raise SingularNotAllowed("underlying_string")
    return FlatVirtualString(tuple(s for s in d.sites if is_arrow_site(s)))


# ---------------------------------------------------------------------------
# Canonical codes


def _relabeled_tokens(sites, start):
    """Token texts of the rotation at ``start`` with first-occurrence ids.

    Comparing rotations as tuples of token strings agrees with comparing
    the space-joined code texts, because the space character sorts below
    every character that can appear inside a token.
    """
    n = len(sites)
    arrow_map = {}
    mark_map = {}
    toks = []
    out_sites = []
    for i in range(n):
        s = sites[(start + i) % n]
        if s.kind is SiteKind.HEAD or s.kind is SiteKind.TAIL:
            v = arrow_map.setdefault(s.value, len(arrow_map) + 1)
            s = Site(s.kind, v)
        elif s.kind is SiteKind.MARK:
            v = mark_map.setdefault(s.value, len(mark_map) + 1)
            s = Site(s.kind, v)
        out_sites.append(s)
        toks.append(s.token())
    return tuple(toks), tuple(out_sites)


_FIRST_TOKEN = {0: "A1h", 1: "A1t", 2: "C+", 3: "C-", 4: "S1"}


def _canonical_rotation(sites, base):
    """Rotation whose emitted text is lexicographically least."""
    n = len(sites)
    if n == 0:
        return (), base
    # Base label seen from each rotation start; the base character leads
    # the code text, so it dominates the comparison.
    bases = []
    b = base
    for s in sites:
        bases.append(b)
        if s.kind is SiteKind.CUSP:
            b = flip_coor(b)
    best_base = min(bases)
    starts = [k for k in range(n) if bases[k] == best_base]
    # Cheap prefilter: the first emitted token is known without relabeling.
    firsts = [_FIRST_TOKEN[site_tag(sites[k])] for k in starts]
    least = min(firsts)
    starts = [k for k, f in zip(starts, firsts) if f == least]
    best = min(_relabeled_tokens(sites, k) for k in starts)
    return best[1], best_base


def canonical_form(d: LegendrianGaussDiagram) -> LegendrianGaussDiagram:
    """The canonical representative of d's rotation/relabeling class."""
    validate(d)
    sites, base = _canonical_rotation(d.sites, d.base_coorientation)
    return LegendrianGaussDiagram(sites, base)


def canonical_code(d: LegendrianGaussDiagram) -> CanonicalCode:
    """Stable text code, equal exactly on rotation/relabeling orbits."""
    c = canonical_form(d)
    toks = " ".join(s.token() for s in c.sites)
    return f"@{c.base_coorientation} {toks}" if toks else f"@{c.base_coorientation}"


def canonical_string_form(s: FlatVirtualString) -> FlatVirtualString:
    validate_string(s)
    sites, _ = _canonical_rotation(s.sites, "L")
    return FlatVirtualString(sites)


def canonical_string_code(s: FlatVirtualString) -> CanonicalCode:
    c = canonical_string_form(s)
    return " ".join(x.token() for x in c.sites)


def diagram_of_tokens(tokens: Iterable[Site], base: str = "L") -> LegendrianGaussDiagram:
    return LegendrianGaussDiagram(tuple(tokens), base)
