"""Independent oracles used by the tests.

Everything here deliberately avoids the library's diagram machinery so that
test expectations are computed along a different path than the code under
test: crossing signs come from semicircle calculus, enumeration counts from
a naive generate-and-filter pass, and braid equality from the action on a
free group.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from threepage.presentation import (ThreePagePresentation, arcs_interleave,
                                    components, validate)

# -- geometric semicircle oracle -------------------------------------------------
#
# Page-1 and page-3 arcs are upper semicircles over the axis; an interleaved
# pair crosses once, where both tangents have the same x direction, so the
# sign of det[over, under] reduces to the sign of (under centre - over
# centre), flipped once per right-to-left traversal.


def geometric_signed_crossings(p: ThreePagePresentation,
                               directions: dict[tuple[int, int], int],
                               comp_of_arc: dict,
                               ) -> list[tuple[int, object, object]]:
    """(sign, under component, over component) per crossing of project(p).

    ``directions`` maps each arc on pages 1 and 3 to +1 (traversed left to
    right) or -1; ``comp_of_arc`` maps placed arcs to component keys.
    """
    out = []
    for under in p.pages[0]:
        for over in p.pages[2]:
            if not arcs_interleave(under, over):
                continue
            mu = Fraction(under[0] + under[1], 2)
            mo = Fraction(over[0] + over[1], 2)
            centre_sign = 1 if mu > mo else -1
            sign = directions[under] * directions[over] * centre_sign
            out.append((sign, comp_of_arc[(0, under)], comp_of_arc[(2, over)]))
    return out


def geometric_writhe_and_linking(p: ThreePagePresentation,
                                 point_cycles: list[tuple[int, ...]],
                                 ) -> tuple[int, dict[frozenset, int]]:
    """Writhe and pairwise linking numbers for the stated orientations.

    Orientations are given as directed binding-point cycles; arc directions
    follow from consecutive points in each cycle.
    """
    decomp = components(p)
    directions: dict[tuple[int, int], int] = {}
    comp_of_arc: dict = {}
    for want in point_cycles:
        base_idx = next(i for i, base in enumerate(decomp.point_cycles)
                        if set(base) == set(want))
        cycle = decomp.cycles[base_idx]
        base_points = decomp.point_cycles[base_idx]
        for pa, entry in zip(cycle, base_points):
            comp_of_arc[(pa.page, pa.arc)] = base_idx
        for k, pt in enumerate(want):
            nxt = want[(k + 1) % len(want)]
            arc = (pt, nxt) if pt < nxt else (nxt, pt)
            placed = next(pa for pa in cycle if pa.arc == arc)
            directions[arc] = 1 if pt == arc[0] else -1
    signed = geometric_signed_crossings(p, directions, comp_of_arc)
    writhe = sum(s for s, _, _ in signed)
    linking: dict[frozenset, int] = {}
    for s, cu, co in signed:
        if cu != co:
            key = frozenset((cu, co))
            linking[key] = linking.get(key, 0) + s
    assert all(v % 2 == 0 for v in linking.values())
    return writhe, {k: v // 2 for k, v in linking.items()}


# -- naive enumeration oracle ----------------------------------------------------


def naive_noncrossing_matchings(points: tuple[int, ...]) -> list[tuple]:
    """All non-crossing partial matchings by filtering all partial matchings."""
    out = []

    def go(remaining: tuple[int, ...], acc: tuple) -> None:
        if not remaining:
            out.append(acc)
            return
        first, rest = remaining[0], remaining[1:]
        go(rest, acc)
        for k, other in enumerate(rest):
            arc = (first, other)
            if all(not arcs_interleave(arc, b) for b in acc):
                go(rest[:k] + rest[k + 1:], acc + (arc,))
    go(points, ())
    return out


def naive_valid_presentations(n: int) -> list[ThreePagePresentation]:
    """Every valid presentation on n points by triple product and filtering."""
    points = tuple(range(1, n + 1))
    matchings = naive_noncrossing_matchings(points)
    out = []
    for m1, m2, m3 in itertools.product(matchings, repeat=3):
        if not (m1 and m2 and m3):
            continue
        if len(m1) + len(m2) + len(m3) != n:
            continue
        pres = ThreePagePresentation.of(n, m1, m2, m3)
        if validate(pres).ok:
            out.append(pres)
    return out


# -- braid action on the free group ----------------------------------------------


def _reduce(word: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    out: list[tuple[int, int]] = []
    for g, s in word:
        if out and out[-1] == (g, -s):
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


def _substitute(word, images) -> tuple[tuple[int, int], ...]:
    expanded: list[tuple[int, int]] = []
    for g, s in word:
        img = images[g] if s > 0 else [(h, -t) for h, t in reversed(images[g])]
        expanded.extend(img)
    return _reduce(expanded)


def artin_images(strands: int, letters) -> tuple:
    """Images of the free generators under the braid's Artin action.

    This action is faithful, so equal images certify equal braids exactly.
    """
    images: list = [[(g, 1)] for g in range(strands)]
    for i, s in letters:
        a, b = i - 1, i
        xa, xb = images[a], images[b]
        if s > 0:
            images[a] = list(_substitute([(0, 1), (1, 1), (0, -1)], {0: xa, 1: xb}))
            images[b] = list(xa)
        else:
            images[a] = list(xb)
            images[b] = list(_substitute([(1, -1), (0, 1), (1, 1)], {0: xa, 1: xb}))
    return tuple(tuple(_reduce(img)) for img in images)


def braids_exactly_equal(w1, w2) -> bool:
    if w1.strands != w2.strands:
        return False
    return (artin_images(w1.strands, w1.letters)
            == artin_images(w2.strands, w2.letters))
