"""Sites of a Gauss diagram: arrow endpoints, signed cusps, singular marks.

A diagram is a cyclic word of sites.  Arrow heads and tails come in pairs
sharing an id; cusps carry a sign; singular marks (self-tangency preimages)
come in pairs sharing an id.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class SiteKind(Enum):
    HEAD = "h"
    TAIL = "t"
    CUSP = "c"
    MARK = "s"


@dataclass(frozen=True, order=True)
class Site:
    """One letter of the cyclic word.

    ``value`` is the arrow id (HEAD/TAIL), mark id (MARK), or the cusp sign
    +1/-1 (CUSP).  Ids are positive integers.
    """

    kind: SiteKind
    value: int

    def token(self):
        if self.kind is SiteKind.HEAD:
            return f"A{self.value}h"
        if self.kind is SiteKind.TAIL:
            return f"A{self.value}t"
        if self.kind is SiteKind.CUSP:
            return "C+" if self.value > 0 else "C-"
        return f"S{self.value}"

    def __repr__(self):
        return self.token()


def head(arrow_id: int) -> Site:
    return Site(SiteKind.HEAD, arrow_id)


def tail(arrow_id: int) -> Site:
    return Site(SiteKind.TAIL, arrow_id)


def cusp(sign: int) -> Site:
    if sign not in (1, -1):
        raise ValueError("cusp sign must be +1 or -1")
    return Site(SiteKind.CUSP, sign)


def mark(mark_id: int) -> Site:
    return Site(SiteKind.MARK, mark_id)


CUSP_POS = cusp(1)
CUSP_NEG = cusp(-1)


def is_arrow_site(s: Site) -> bool:
    return s.kind is SiteKind.HEAD or s.kind is SiteKind.TAIL


def flip_coor(label: str) -> str:
    return "R" if label == "L" else "L"


# Integer tags used by the canonicalization hot path.  Ids are relabeled
# before comparison, so any fixed tag order gives a total order on codes.
def site_tag(s: Site) -> int:
    """Tag ignoring pairing ids (cusp signs are part of the tag)."""
    if s.kind is SiteKind.HEAD:
        return 0
    if s.kind is SiteKind.TAIL:
        return 1
    if s.kind is SiteKind.CUSP:
        return 2 if s.value > 0 else 3
    return 4
