"""Three-page presentations of links.

A presentation consists of n binding points on an axis and three pages
arranged around it, each page holding disjoint, mutually non-crossing arcs
between binding points.  A valid presentation satisfies:

* every binding point meets exactly two arcs, lying on two distinct pages;
* no two arcs on one page share an endpoint or interleave;
* all three pages hold at least one arc.

It follows that the number of arcs equals the number of binding points.

Everything here is an immutable value; operations return new objects.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional

Arc = tuple[int, int]


class ParseError(ValueError):
    """Raised for malformed presentation text or out-of-range indices."""


class InvalidPresentationError(ValueError):
    """Raised when an operation requires a valid presentation but got violations."""

    def __init__(self, report: "ValidationReport"):
        super().__init__("; ".join(str(v) for v in report.violations))
        self.report = report


def _normalize_arc(i: int, j: int) -> Arc:
    if i == j:
        raise ParseError(f"degenerate arc {i}-{j}")
    return (i, j) if i < j else (j, i)


def arcs_interleave(a: Arc, b: Arc) -> bool:
    """True iff the chords a, b interleave (cross when drawn in a half-plane)."""
    (i, j), (k, l) = a, b
    return i < k < j < l or k < i < l < j


@dataclass(frozen=True)
class PageMatching:
    """The arcs of one page: a partial matching of the binding points.

    Stored sorted, which makes the representation canonical.  Invariants
    (disjointness and non-crossing) are *checked by validate()*, not enforced
    here, because the search engine and the parser need to hold candidate
    data that may violate them.
    """

    arcs: tuple[Arc, ...] = ()

    @staticmethod
    def of(arcs: Iterable[tuple[int, int]]) -> "PageMatching":
        return PageMatching(tuple(sorted({_normalize_arc(i, j) for i, j in arcs})))

    def __len__(self) -> int:
        return len(self.arcs)

    def __iter__(self) -> Iterator[Arc]:
        return iter(self.arcs)

    def __contains__(self, arc: Arc) -> bool:
        return arc in self.arcs

    def is_matching(self) -> bool:
        seen: set[int] = set()
        for i, j in self.arcs:
            if i in seen or j in seen:
                return False
            seen.update((i, j))
        return True

    def is_noncrossing(self) -> bool:
        return not any(arcs_interleave(a, b)
                       for x, a in enumerate(self.arcs)
                       for b in self.arcs[x + 1:])


class PlacedArc(NamedTuple):
    """An arc together with the page (0, 1 or 2) carrying it."""

    page: int
    arc: Arc


@dataclass(frozen=True)
class ThreePagePresentation:
    """n binding points plus an ordered triple of page matchings.

    Page order is the cyclic order of the half-planes around the binding
    axis; points are 1-indexed along the axis.
    """

    n: int
    pages: tuple[PageMatching, PageMatching, PageMatching]

    @staticmethod
    def of(n: int,
           p1: Iterable[tuple[int, int]],
           p2: Iterable[tuple[int, int]],
           p3: Iterable[tuple[int, int]]) -> "ThreePagePresentation":
        if n < 1:
            raise ParseError(f"point count must be positive, got {n}")
        pages = (PageMatching.of(p1), PageMatching.of(p2), PageMatching.of(p3))
        for pg in pages:
            for i, j in pg:
                if not (1 <= i <= n and 1 <= j <= n):
                    raise ParseError(f"arc {i}-{j} out of range for n={n}")
        return ThreePagePresentation(n, pages)

    def placed_arcs(self) -> Iterator[PlacedArc]:
        for page, matching in enumerate(self.pages):
            for arc in matching:
                yield PlacedArc(page, arc)

    def arc_count(self) -> int:
        return sum(len(pg) for pg in self.pages)

    def page_sizes(self) -> tuple[int, int, int]:
        return tuple(len(pg) for pg in self.pages)  # type: ignore[return-value]

    def arcs_at(self, point: int) -> list[PlacedArc]:
        return [pa for pa in self.placed_arcs() if point in pa.arc]

    # -- serialization ---------------------------------------------------

    def serialize(self) -> str:
        """Native one-line text form, e.g. ``n=3; P1:1-2; P2:2-3; P3:1-3``."""
        chunks = [f"n={self.n}"]
        for k, pg in enumerate(self.pages, start=1):
            body = ",".join(f"{i}-{j}" for i, j in pg.arcs)
            chunks.append(f"P{k}:{body}")
        return "; ".join(chunks)

    def to_json(self) -> str:
        return json.dumps({"n": self.n,
                           "pages": [[[i, j] for i, j in pg.arcs] for pg in self.pages]},
                          separators=(",", ":"))

    def __str__(self) -> str:
        return self.serialize()

    def sort_key(self) -> tuple:
        return (self.n, tuple(pg.arcs for pg in self.pages))


def parse(text: str) -> ThreePagePresentation:
    """Parse the native text format or its JSON mirror (auto-detected)."""
    s = text.strip()
    if not s:
        raise ParseError("empty input")
    if s.startswith("{"):
        try:
            obj = json.loads(s)
            n = obj["n"]
            p1, p2, p3 = obj["pages"]
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad JSON presentation: {exc}") from exc
        if not isinstance(n, int):
            raise ParseError("n must be an integer")
        return ThreePagePresentation.of(n, [tuple(a) for a in p1],
                                        [tuple(a) for a in p2],
                                        [tuple(a) for a in p3])
    s = re.sub(r"\s+", "", s)
    fields = [f for f in s.split(";") if f]
    if len(fields) != 4:
        raise ParseError("expected 'n=<int>; P1:...; P2:...; P3:...'")
    m = re.fullmatch(r"n=(\d+)", fields[0])
    if not m:
        raise ParseError(f"bad point count field {fields[0]!r}")
    n = int(m.group(1))
    pages: list[list[tuple[int, int]]] = []
    for k, field in enumerate(fields[1:], start=1):
        m = re.fullmatch(rf"P{k}:(.*)", field)
        if m is None:
            raise ParseError(f"expected page P{k}, got {field!r}")
        body = m.group(1)
        arcs: list[tuple[int, int]] = []
        if body:
            for chunk in body.split(","):
                am = re.fullmatch(r"(\d+)-(\d+)", chunk)
                if not am:
                    raise ParseError(f"bad arc {chunk!r} on page P{k}")
                arcs.append((int(am.group(1)), int(am.group(2))))
        pages.append(arcs)
    return ThreePagePresentation.of(n, *pages)


# -- validation -----------------------------------------------------------


@dataclass(frozen=True)
class NonCrossingViolated:
    page: int
    arc1: Arc
    arc2: Arc

    def __str__(self) -> str:
        return f"arcs {self.arc1} and {self.arc2} interleave on page P{self.page + 1}"


@dataclass(frozen=True)
class EndpointShared:
    page: int
    point: int
    arc1: Arc
    arc2: Arc

    def __str__(self) -> str:
        return (f"arcs {self.arc1} and {self.arc2} share point {self.point} "
                f"on page P{self.page + 1}")


@dataclass(frozen=True)
class DegreeViolated:
    point: int
    degree: int

    def __str__(self) -> str:
        return f"point {self.point} meets {self.degree} arcs (expected 2)"


@dataclass(frozen=True)
class PageEmpty:
    page: int

    def __str__(self) -> str:
        return f"page P{self.page + 1} holds no arcs"


Violation = NonCrossingViolated | EndpointShared | DegreeViolated | PageEmpty


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def validate(p: ThreePagePresentation) -> ValidationReport:
    """Check all presentation invariants; violations are data, not failures.

    Two arcs on *different* pages with identical endpoints are legal (they
    certify a splittable sublink, see detect_split_pair) and are not
    reported here.
    """
    violations: list[Violation] = []
    for page, matching in enumerate(p.pages):
        if not matching.arcs:
            violations.append(PageEmpty(page))
        for x, a in enumerate(matching.arcs):
            for b in matching.arcs[x + 1:]:
                shared = set(a) & set(b)
                if shared:
                    violations.append(EndpointShared(page, min(shared), a, b))
                elif arcs_interleave(a, b):
                    violations.append(NonCrossingViolated(page, a, b))
    degree = {pt: 0 for pt in range(1, p.n + 1)}
    for _, (i, j) in p.placed_arcs():
        degree[i] += 1
        degree[j] += 1
    for pt in range(1, p.n + 1):
        if degree[pt] != 2:
            violations.append(DegreeViolated(pt, degree[pt]))
    return ValidationReport(not violations, tuple(violations))


def require_valid(p: ThreePagePresentation) -> None:
    report = validate(p)
    if not report.ok:
        raise InvalidPresentationError(report)


# -- components ------------------------------------------------------------


@dataclass(frozen=True)
class ComponentDecomposition:
    """Cycles of the degree-2 graph on binding points whose edges are arcs.

    Each cycle is the ordered walk of placed arcs along one link component;
    ``point_cycles`` gives the binding points in matching traversal order.
    """

    cycles: tuple[tuple[PlacedArc, ...], ...]
    point_cycles: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cycles)


def components(p: ThreePagePresentation) -> ComponentDecomposition:
    """Decompose a valid presentation into its link components.

    Traversal is deterministic: each cycle starts at its smallest binding
    point, leaving along the arc on the lower-indexed page.
    """
    require_valid(p)
    at_point: dict[int, list[PlacedArc]] = {pt: [] for pt in range(1, p.n + 1)}
    for pa in p.placed_arcs():
        at_point[pa.arc[0]].append(pa)
        at_point[pa.arc[1]].append(pa)
    for pt in at_point:
        at_point[pt].sort()
    visited: set[PlacedArc] = set()
    cycles: list[tuple[PlacedArc, ...]] = []
    point_cycles: list[tuple[int, ...]] = []
    for start in range(1, p.n + 1):
        first = next((pa for pa in at_point[start] if pa not in visited), None)
        if first is None:
            continue
        walk: list[PlacedArc] = []
        points: list[int] = []
        point, pa = start, first
        while pa not in visited:
            visited.add(pa)
            walk.append(pa)
            points.append(point)
            point = pa.arc[1] if pa.arc[0] == point else pa.arc[0]
            nxt = [q for q in at_point[point] if q != pa]
            pa = nxt[0]
        cycles.append(tuple(walk))
        point_cycles.append(tuple(points))
    return ComponentDecomposition(tuple(cycles), tuple(point_cycles))


def detect_split_pair(p: ThreePagePresentation) -> Optional[tuple[PlacedArc, PlacedArc]]:
    """Find two arcs on different pages with identical endpoints, if any.

    Such a pair bounds a disk that can be pushed off the rest of the link,
    so its presence certifies that the presented link is splittable.  The
    check is sound but not complete: absence proves nothing.
    """
    require_valid(p)
    placed = sorted(p.placed_arcs())
    for x, a in enumerate(placed):
        for b in placed[x + 1:]:
            if a.arc == b.arc and a.page != b.page:
                return (a, b)
    return None


# -- canonical form ----------------------------------------------------------


def rotate_pages(p: ThreePagePresentation, k: int) -> ThreePagePresentation:
    k %= 3
    pg = p.pages
    return ThreePagePresentation(p.n, (pg[k % 3], pg[(k + 1) % 3], pg[(k + 2) % 3]))


def reverse_points(p: ThreePagePresentation) -> ThreePagePresentation:
    """Reverse the point order together with the cyclic page order.

    This is a rigid rotation of the open book (orientation-preserving), so
    it never mirrors the presented link.
    """
    def flip(pg: PageMatching) -> PageMatching:
        return PageMatching.of((p.n + 1 - j, p.n + 1 - i) for i, j in pg)
    p1, p2, p3 = p.pages
    return ThreePagePresentation(p.n, (flip(p3), flip(p2), flip(p1)))


def symmetry_orbit(p: ThreePagePresentation) -> Iterator[ThreePagePresentation]:
    """The six images of p under page rotation and point reversal.

    Swapping exactly two pages is a reflection and may mirror the link, so
    it is deliberately not part of this group.
    """
    for q in (p, reverse_points(p)):
        for k in range(3):
            yield rotate_pages(q, k)


def canonicalize(p: ThreePagePresentation) -> ThreePagePresentation:
    """Lexicographically smallest member of the order-6 symmetry orbit."""
    return min(symmetry_orbit(p), key=ThreePagePresentation.sort_key)


def is_canonical(p: ThreePagePresentation) -> bool:
    return canonicalize(p).sort_key() == p.sort_key()


# -- surgeries used by tests and the census -----------------------------------


def insert_kink(p: ThreePagePresentation, placed: PlacedArc) -> ThreePagePresentation:
    """Split one end of an arc through the third page, adding one point.

    The strand heading into the right endpoint of ``placed`` is made to dip
    briefly into the page carrying neither of that endpoint's arcs.  This is
    an isotopy of the presented link, so the result presents the same link
    with n+1 points.
    """
    require_valid(p)
    page, (a, b) = placed
    if placed.arc not in p.pages[page]:
        raise ValueError(f"{placed} not present")
    other = next(pa for pa in p.arcs_at(b) if pa != placed)
    detour_page = next(k for k in range(3) if k not in (page, other.page))
    # New point sits immediately left of b; old points >= b shift up by one.
    def shift(x: int) -> int:
        return x + 1 if x >= b else x
    new_pages: list[list[Arc]] = [[], [], []]
    for q_page, (i, j) in p.placed_arcs():
        if (q_page, (i, j)) == (page, (a, b)):
            continue
        new_pages[q_page].append((shift(i), shift(j)))
    c = b  # the fresh point, taking b's old position
    new_pages[page].append((shift(a), c) if shift(a) < c else (c, shift(a)))
    new_pages[detour_page].append((c, c + 1))
    return ThreePagePresentation.of(p.n + 1, *new_pages)


def without_component(p: ThreePagePresentation, index: int) -> ThreePagePresentation:
    """Delete one component and renumber the remaining points."""
    comp = components(p)
    dropped = set(comp.cycles[index])
    kept_points = sorted({pt for pa in set(p.placed_arcs()) - dropped for pt in pa.arc})
    renum = {pt: k + 1 for k, pt in enumerate(kept_points)}
    pages: list[list[Arc]] = [[], [], []]
    for pa in p.placed_arcs():
        if pa in dropped:
            continue
        i, j = pa.arc
        pages[pa.page].append((renum[i], renum[j]))
    return ThreePagePresentation.of(len(kept_points), *pages)
