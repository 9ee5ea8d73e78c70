"""Planar link diagrams with combinatorial crossing data.

A diagram is a list of crossings, each a 4-tuple of edge labels read
counterclockwise with the under-strand occupying slots 0 and 2 and the
over-strand slots 1 and 3.  Closed curves without crossings are tracked by a
count of free loops.  Diagrams store the combinatorial embedding only; no
coordinates (rendering recomputes semicircle geometry).

Projection convention for three-page presentations (fixed globally):

* the binding axis is horizontal with points 1..n;
* page 2 arcs are semicircles in the lower half-plane and never cross;
* page 1 and page 3 arcs are semicircles in the upper half-plane;
* a page-1 arc (a,b) and a page-3 arc (c,d) cross exactly when their
  endpoints interleave, and the page-3 arc is always the over-strand.

Crossing sign convention (right-hand rule, over-strand first): a crossing is
positive when rotating the over-strand's direction a quarter turn
counterclockwise yields the under-strand's direction::

        ^ under                    over ^
         \\   ^ over                 \\   ^ under
          \\ /                        \\ /
           \\            vs            /
          / \\                        / \\
    positive crossing          negative crossing
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .braids import BraidWord
from .presentation import (Arc, PlacedArc, ThreePagePresentation,
                           arcs_interleave, components)

CrossingTuple = tuple[int, int, int, int]


@dataclass(frozen=True)
class PlanarDiagram:
    """Crossings as ccw edge 4-tuples (under at slots 0/2, over at 1/3)."""

    crossings: tuple[CrossingTuple, ...]
    free_loops: int = 0
    #: optional provenance: per crossing, (under placed arc, over placed arc)
    labels: Optional[tuple[tuple[PlacedArc, PlacedArc], ...]] = None
    #: optional provenance for projections: per presentation cycle with
    #: crossings, (first edge id, head incidence of that edge along the walk)
    walk_heads: Optional[tuple[Optional[tuple[int, Incidence]], ...]] = None

    def __post_init__(self) -> None:
        seen: dict[int, int] = {}
        for t in self.crossings:
            for e in t:
                seen[e] = seen.get(e, 0) + 1
        bad = {e: k for e, k in seen.items() if k != 2}
        if bad:
            raise ValueError(f"edges must occur exactly twice at crossings: {bad}")
        if self.free_loops < 0:
            raise ValueError("free loop count cannot be negative")

    def crossing_count(self) -> int:
        return len(self.crossings)

    def edges(self) -> tuple[int, ...]:
        return tuple(sorted({e for t in self.crossings for e in t}))


@dataclass(frozen=True)
class Orientation:
    """A direction choice per component, as flips of the traced base direction."""

    flips: tuple[bool, ...]

    @staticmethod
    def base(k: int) -> "Orientation":
        return Orientation((False,) * k)


# -- strand tracing ----------------------------------------------------------

Incidence = tuple[int, int]  # (crossing index, slot)


@dataclass(frozen=True)
class Trace:
    """Base traversal data: components, edge directions and crossing signs."""

    #: per component, edge ids in traversal order (free loops excluded)
    components: tuple[tuple[int, ...], ...]
    #: total component count including free loops
    component_count: int
    #: edge -> component index
    edge_component: dict[int, int] = field(hash=False)
    #: edge -> (tail incidence, head incidence) along the base direction
    edge_direction: dict[int, tuple[Incidence, Incidence]] = field(hash=False)
    #: per crossing: sign under the base orientation
    base_signs: tuple[int, ...] = ()
    #: per crossing: (under component, over component)
    crossing_components: tuple[tuple[int, int], ...] = ()


def _incidences(d: PlanarDiagram) -> dict[int, list[Incidence]]:
    out: dict[int, list[Incidence]] = {}
    for c, t in enumerate(d.crossings):
        for s, e in enumerate(t):
            out.setdefault(e, []).append((c, s))
    return out


def trace(d: PlanarDiagram) -> Trace:
    inc = _incidences(d)
    edge_component: dict[int, int] = {}
    edge_direction: dict[int, tuple[Incidence, Incidence]] = {}
    comps: list[tuple[int, ...]] = []
    for e0 in sorted(inc):
        if e0 in edge_component:
            continue
        walk: list[int] = []
        tail, head = inc[e0]
        e = e0
        while True:
            walk.append(e)
            edge_component[e] = len(comps)
            edge_direction[e] = (tail, head)
            c, s = head
            exit_inc = (c, (s + 2) % 4)
            e = d.crossings[c][exit_inc[1]]
            a, b = inc[e]
            tail = exit_inc
            head = b if a == exit_inc else a
            if e == e0 and tail == inc[e0][0]:
                break
        comps.append(tuple(walk))
    signs: list[int] = []
    crossing_comps: list[tuple[int, int]] = []
    for c, t in enumerate(d.crossings):
        under_in_0 = edge_direction[t[0]][1] == (c, 0)
        over_in_3 = edge_direction[t[3]][1] == (c, 3)
        signs.append((1 if under_in_0 else -1) * (1 if over_in_3 else -1))
        crossing_comps.append((edge_component[t[0]], edge_component[t[1]]))
    return Trace(tuple(comps), len(comps) + d.free_loops, edge_component,
                 edge_direction, tuple(signs), tuple(crossing_comps))


def component_count(d: PlanarDiagram) -> int:
    return trace(d).component_count


def orientations(d: PlanarDiagram) -> Iterator[Orientation]:
    for flips in itertools.product((False, True), repeat=component_count(d)):
        yield Orientation(flips)


def _signed_crossings(d: PlanarDiagram, o: Orientation) -> Iterator[tuple[int, int, int]]:
    """Yield (sign, under component, over component) per crossing under o."""
    tr = trace(d)
    if len(o.flips) != tr.component_count:
        raise ValueError(f"orientation has {len(o.flips)} flips for "
                         f"{tr.component_count} components")
    for base, (cu, co) in zip(tr.base_signs, tr.crossing_components):
        s = base
        if o.flips[cu]:
            s = -s
        if o.flips[co]:
            s = -s
        yield s, cu, co


def writhe(d: PlanarDiagram, o: Orientation) -> int:
    """Signed crossing sum under the stated right-hand sign rule."""
    return sum(s for s, _, _ in _signed_crossings(d, o))


def linking_matrix(d: PlanarDiagram, o: Orientation) -> tuple[tuple[int, ...], ...]:
    """lk(i, j) = half the signed sum of crossings between components i and j."""
    k = trace(d).component_count
    acc = [[0] * k for _ in range(k)]
    for s, cu, co in _signed_crossings(d, o):
        if cu != co:
            acc[cu][co] += s
            acc[co][cu] += s
    for i in range(k):
        for j in range(k):
            if acc[i][j] % 2 != 0:
                raise AssertionError("inter-component crossings must pair up")
            acc[i][j] //= 2
    return tuple(tuple(row) for row in acc)


def abs_linking_multiset(d: PlanarDiagram) -> tuple[int, ...]:
    """Sorted |lk| values over unordered component pairs (orientation-free)."""
    k = trace(d).component_count
    mat = linking_matrix(d, Orientation.base(k))
    return tuple(sorted(abs(mat[i][j]) for i in range(k) for j in range(i + 1, k)))


# -- projection of a three-page presentation ---------------------------------


def crossing_position(under: Arc, over: Arc) -> Fraction:
    """Exact x-coordinate where the two upper semicircles intersect."""
    m1, r1 = Fraction(under[0] + under[1], 2), Fraction(under[1] - under[0], 2)
    m2, r2 = Fraction(over[0] + over[1], 2), Fraction(over[1] - over[0], 2)
    return (r1 * r1 - r2 * r2 + m2 * m2 - m1 * m1) / (2 * (m2 - m1))


def project(p: ThreePagePresentation) -> PlanarDiagram:
    """Project a presentation to a diagram under the fixed page convention.

    Page-2 arcs stay crossing-free below the axis; every interleaving
    (page-1, page-3) pair contributes one crossing with page 3 on top.
    """
    comp = components(p)
    under_arcs = p.pages[0].arcs
    over_arcs = p.pages[2].arcs
    pairs = [(u, v) for u in under_arcs for v in over_arcs if arcs_interleave(u, v)]
    pairs.sort()
    index = {pair: k for k, pair in enumerate(pairs)}
    events: dict[PlacedArc, list[tuple[Fraction, int]]] = {}
    for u, v in pairs:
        x = crossing_position(u, v)
        events.setdefault(PlacedArc(0, u), []).append((x, index[(u, v)]))
        events.setdefault(PlacedArc(2, v), []).append((x, index[(u, v)]))
    for ev in events.values():
        ev.sort()

    # slot of each (crossing, role, branch); branch 0 is toward the arc's
    # left endpoint.  The ccw order at a crossing of upper semicircles
    # (a,b) under and (c,d) over is (under-left, over-left, under-right,
    # over-right) when a < c, with the over slots swapped when c < a.
    def slot(pair: tuple[Arc, Arc], role: int, branch: int) -> int:
        under, over = pair
        if role == 0:
            return 0 if branch == 0 else 2
        if under[0] < over[0]:
            return 1 if branch == 0 else 3
        return 3 if branch == 0 else 1

    slots: dict[int, dict[int, int]] = {k: {} for k in index.values()}
    free_loops = 0
    next_edge = 0
    walk_heads: list[Optional[tuple[int, Incidence]]] = []
    for cycle, points in zip(comp.cycles, comp.point_cycles):
        attachments: list[tuple[int, int]] = []  # (crossing, slot) in walk order
        for pa, entry_point in zip(cycle, points):
            ev = events.get(pa, [])
            forward = entry_point == pa.arc[0]
            ordered = ev if forward else list(reversed(ev))
            role = 0 if pa.page == 0 else 2
            for _, cross in ordered:
                pair = pairs[cross]
                b_in, b_out = (0, 1) if forward else (1, 0)
                attachments.append((cross, slot(pair, role, b_in)))
                attachments.append((cross, slot(pair, role, b_out)))
        if not attachments:
            free_loops += 1
            walk_heads.append(None)
            continue
        # attachments alternate (incoming slot, outgoing slot); the edge
        # between event t and event t+1 joins outgoing slot of t with
        # incoming slot of t+1, cyclically.
        m = len(attachments) // 2
        walk_heads.append((next_edge, attachments[2 % (2 * m)]))
        for t in range(m):
            out_at = attachments[2 * t + 1]
            in_at = attachments[(2 * t + 2) % (2 * m)]
            e = next_edge
            next_edge += 1
            slots[out_at[0]][out_at[1]] = e
            slots[in_at[0]][in_at[1]] = e
    crossings = tuple((slots[k][0], slots[k][1], slots[k][2], slots[k][3])
                      for k in range(len(pairs)))
    labels = tuple((PlacedArc(0, u), PlacedArc(2, v)) for u, v in pairs)
    return PlanarDiagram(crossings, free_loops, labels or None,
                         tuple(walk_heads) or None)


def orientation_from_point_cycles(p: ThreePagePresentation, d: PlanarDiagram,
                                  wanted: Iterable[tuple[int, ...]]) -> Orientation:
    """Translate per-component directions, given as binding-point cycles like
    (1, 3, 5) for 1 -> 3 -> 5 -> 1, into orientation flips for project(p)."""
    if d.walk_heads is None:
        raise ValueError("diagram lacks projection walk data")
    comp = components(p)
    tr = trace(d)
    flips = [False] * tr.component_count
    wanted_list = list(wanted)
    if len(wanted_list) != len(comp.point_cycles):
        raise ValueError(f"expected {len(comp.point_cycles)} point cycles")
    for base, want, head in zip(comp.point_cycles, wanted_list, d.walk_heads):
        if set(base) != set(want) or len(base) != len(want):
            raise ValueError(f"cycle {want} does not match component {base}")
        k = want.index(base[0])
        rotated = want[k:] + want[:k]
        if rotated == base:
            reversed_walk = False
        elif rotated == (base[0],) + tuple(reversed(base[1:])):
            reversed_walk = True
        else:
            raise ValueError(f"{want} is not a rotation or reversal of {base}")
        if head is None:  # crossing-free component: direction is immaterial
            continue
        first_edge, walk_head = head
        agrees = tr.edge_direction[first_edge][1] == walk_head
        flips[tr.edge_component[first_edge]] = reversed_walk == agrees
    return Orientation(tuple(flips))


# -- braid closures -----------------------------------------------------------


def braid_closure_diagram(w: BraidWord) -> PlanarDiagram:
    """Diagram of the closed braid; crossing count equals the word length.

    A positive generator makes the higher-numbered strand cross over the
    lower one, which comes out as a positive crossing for every orientation
    of the closure.
    """
    s = w.strands
    cur = list(range(s))
    nxt = s
    provisional: list[CrossingTuple] = []
    for i, sign in w.letters:
        li, ri = cur[i - 1], cur[i]
        a, b = nxt, nxt + 1
        nxt += 2
        provisional.append((li, a, b, ri) if sign > 0 else (ri, li, a, b))
        cur[i - 1], cur[i] = a, b
    parent = list(range(nxt))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k in range(s):
        a, b = find(cur[k]), find(k)
        if a != b:
            parent[a] = b
    rename: dict[int, int] = {}
    crossings: list[CrossingTuple] = []
    for t in provisional:
        crossings.append(tuple(rename.setdefault(find(e), len(rename)) for e in t))  # type: ignore[arg-type]
    touched = {find(e) for t in provisional for e in t}
    free_loops = len({find(k) for k in range(s)} - touched)
    return PlanarDiagram(tuple(crossings), free_loops)


def disjoint_union(d1: PlanarDiagram, d2: PlanarDiagram) -> PlanarDiagram:
    shift = (max((e for t in d1.crossings for e in t), default=-1)) + 1
    moved = tuple(tuple(e + shift for e in t) for t in d2.crossings)
    return PlanarDiagram(d1.crossings + moved, d1.free_loops + d2.free_loops)  # type: ignore[arg-type]


# -- faces and planarity -------------------------------------------------------

Dart = tuple[int, int]  # (crossing, slot): the half-edge leaving that slot


def faces(d: PlanarDiagram) -> list[tuple[Dart, ...]]:
    """Face boundaries of the embedded 4-valent graph (free loops ignored).

    A dart (c, s) walks away from crossing c along the edge in slot s; the
    next dart turns to slot (s'-1) mod 4 at the far incidence (c', s'),
    keeping the face on the walker's left for ccw vertex rotations.
    """
    inc = _incidences(d)
    darts = [(c, s) for c in range(len(d.crossings)) for s in range(4)]
    seen: set[Dart] = set()
    out: list[tuple[Dart, ...]] = []
    for start in darts:
        if start in seen:
            continue
        cycle: list[Dart] = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            cycle.append(cur)
            c, s = cur
            e = d.crossings[c][s]
            a, b = inc[e]
            far = b if a == (c, s) else a
            cur = (far[0], (far[1] - 1) % 4)
        out.append(tuple(cycle))
    return out


def _connected_parts(d: PlanarDiagram) -> list[set[int]]:
    adj: dict[int, set[int]] = {c: set() for c in range(len(d.crossings))}
    owner: dict[int, int] = {}
    for c, t in enumerate(d.crossings):
        for e in t:
            if e in owner and owner[e] != c:
                adj[c].add(owner[e])
                adj[owner[e]].add(c)
            owner[e] = c
    parts: list[set[int]] = []
    left = set(adj)
    while left:
        stack = [min(left)]
        part: set[int] = set()
        while stack:
            x = stack.pop()
            if x in part:
                continue
            part.add(x)
            stack.extend(adj[x] - part)
        parts.append(part)
        left -= part
    return parts


def is_planar(d: PlanarDiagram) -> bool:
    """Euler check V - E + F = 2 on every connected part of the 4-valent graph."""
    if not d.crossings:
        return True
    face_list = faces(d)
    for part in _connected_parts(d):
        v = len(part)
        e = 2 * v
        f = sum(1 for face in face_list if face and face[0][0] in part)
        if v - e + f != 2:
            return False
    return True


# -- PD export -----------------------------------------------------------------


def pd_export(d: PlanarDiagram) -> str:
    """Interchange text: header plus one ``X a b c d`` line per crossing.

    Edges are listed counterclockwise starting from the incoming under-edge
    with respect to the base orientation (1-based labels).
    """
    tr = trace(d)
    lines = [f"components={tr.component_count} crossings={len(d.crossings)}"]
    for c, t in enumerate(d.crossings):
        if tr.edge_direction[t[0]][1] == (c, 0):
            rot = t
        else:
            rot = (t[2], t[3], t[0], t[1])
        lines.append("X " + " ".join(str(e + 1) for e in rot))
    return "\n".join(lines) + "\n"
