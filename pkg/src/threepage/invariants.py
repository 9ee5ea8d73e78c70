"""Kauffman bracket, Jones polynomial and link identification profiles.

The bracket polynomial <.> is characterised by

    <unknot> = 1
    <L_x>    = A <L_0> + A^-1 <L_inf>
    <L u O>  = (-A^2 - A^-2) <L>

and is computed by two independent algorithms: a brute-force sum over all
2^c smoothing states, and a memoised skein recursion.  The Jones polynomial
is the writhe normalisation f = (-A^3)^(-w) <D>, kept in the A variable.

Links are identified by an orientation-insensitive profile: component
count, the multiset of |lk| over component pairs and the set of Jones
polynomials over all orientation choices.  Profiles are compared up to
mirror (A <-> A^-1) throughout, because the construction conventions fix a
chirality that the identified link types do not.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .diagram import (CrossingTuple, Orientation, PlanarDiagram,
                      abs_linking_multiset, orientations, project, trace, writhe)
from .laurent import LOOP, LaurentPoly, poly_sort_key, writhe_unit
from .presentation import ThreePagePresentation

DEFAULT_CROSSING_LIMIT = 24


class CrossingLimitError(RuntimeError):
    """Raised when a bracket computation would exceed the crossing limit."""


def _check_limit(d: PlanarDiagram, limit: int) -> None:
    if len(d.crossings) > limit:
        raise CrossingLimitError(
            f"{len(d.crossings)} crossings exceed the limit of {limit}")


def bracket_statesum(d: PlanarDiagram, limit: int = DEFAULT_CROSSING_LIMIT) -> LaurentPoly:
    """Bracket by direct expansion of all 2^c smoothing states.

    State smoothing of a crossing (t0, t1, t2, t3) joins (t0 t1)(t2 t3) in
    the A state and (t0 t3)(t1 t2) in the B state; each state contributes
    A^(a-b) delta^(loops-1).
    """
    _check_limit(d, limit)
    if not d.crossings:
        if d.free_loops == 0:
            raise ValueError("bracket of the empty diagram is undefined")
        return LOOP ** (d.free_loops - 1)
    c = len(d.crossings)
    edges = d.edges()
    idx = {e: k for k, e in enumerate(edges)}
    m = len(edges)
    counts: dict[tuple[int, int], int] = {}
    for state in range(1 << c):
        parent = list(range(m))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        a_count = 0
        for k, t in enumerate(d.crossings):
            if state >> k & 1:
                pairs = ((t[0], t[1]), (t[2], t[3]))
                a_count += 1
            else:
                pairs = ((t[0], t[3]), (t[1], t[2]))
            for u, v in pairs:
                ru, rv = find(idx[u]), find(idx[v])
                if ru != rv:
                    parent[ru] = rv
        loops = len({find(x) for x in range(m)}) + d.free_loops
        key = (2 * a_count - c, loops)
        counts[key] = counts.get(key, 0) + 1
    out = LaurentPoly()
    for (diff, loops), mult in sorted(counts.items()):
        term = LaurentPoly.monomial(diff, mult) * (LOOP ** (loops - 1))
        out = out + term
    return out


# -- skein recursion -----------------------------------------------------------


def _canonical_key(crossings: tuple[CrossingTuple, ...]) -> tuple[CrossingTuple, ...]:
    """Relabel-and-sort normal form; imperfect canonicalisation only costs
    memo hits, never correctness."""
    cur = tuple(min(t, (t[2], t[3], t[0], t[1])) for t in crossings)
    for _ in range(4):
        rename: dict[int, int] = {}
        relabeled = tuple(
            tuple(rename.setdefault(e, len(rename)) for e in t) for t in cur)
        relabeled = tuple(min(t, (t[2], t[3], t[0], t[1])) for t in relabeled)
        nxt = tuple(sorted(relabeled))
        if nxt == cur:
            break
        cur = nxt
    return cur


_KINK_ACTION = {
    # slots holding the repeated edge -> (exponent of the -A^3 unit, surviving slot pair)
    (0, 1): (1, (2, 3)),
    (2, 3): (1, (0, 1)),
    (1, 2): (-1, (0, 3)),
    (0, 3): (-1, (1, 2)),
}


def _smooth(crossings: list[CrossingTuple], pairs: tuple[tuple[int, int], tuple[int, int]]
            ) -> tuple[list[CrossingTuple], int]:
    """Join the two edge pairs, renaming through the merge; returns the new
    crossing list and the number of loops closed by the joins."""
    loops = 0
    rename: dict[int, int] = {}

    def find(e: int) -> int:
        while e in rename:
            e = rename[e]
        return e

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru == rv:
            loops += 1
        else:
            rename[ru] = rv
    out = [tuple(find(e) for e in t) for t in crossings]  # type: ignore[misc]
    return out, loops


def bracket_skein(d: PlanarDiagram, limit: int = DEFAULT_CROSSING_LIMIT) -> LaurentPoly:
    """Bracket by skein recursion: resolve one crossing, recurse, memoise on
    a canonical key of the remaining sub-diagram.

    Crossings whose tuple repeats an edge in adjacent slots are curls and
    are resolved deterministically first (each contributes a -A^{+-3}
    factor without branching), which collapses braid-like diagrams fast.
    """
    _check_limit(d, limit)
    memo: dict[tuple[CrossingTuple, ...], LaurentPoly] = {}

    def reduce_curls(crossings: list[CrossingTuple]) -> tuple[list[CrossingTuple], int, int]:
        """Strip curls; returns (rest, net power of -A^3, loops closed)."""
        power = 0
        loops = 0
        changed = True
        while changed:
            changed = False
            for k, t in enumerate(crossings):
                for slots, (pw, keep) in _KINK_ACTION.items():
                    if t[slots[0]] == t[slots[1]]:
                        rest = crossings[:k] + crossings[k + 1:]
                        rest, closed = _smooth(rest, ((t[keep[0]], t[keep[1]]),))
                        power += pw
                        loops += closed
                        crossings = rest
                        changed = True
                        break
                if changed:
                    break
        return crossings, power, loops

    def value(crossings: list[CrossingTuple]) -> LaurentPoly:
        """Bracket normalised so the empty diagram evaluates to 1."""
        crossings, power, loops = reduce_curls(crossings)
        prefactor = writhe_unit(power) * (LOOP ** loops)
        if not crossings:
            return prefactor
        key = _canonical_key(tuple(crossings))
        hit = memo.get(key)
        if hit is None:
            t = crossings[0]
            rest = crossings[1:]
            ra, la = _smooth(rest, ((t[0], t[1]), (t[2], t[3])))
            rb, lb = _smooth(rest, ((t[0], t[3]), (t[1], t[2])))
            hit = (LaurentPoly.monomial(1) * (LOOP ** la) * value(ra)
                   + LaurentPoly.monomial(-1) * (LOOP ** lb) * value(rb))
            memo[key] = hit
        return prefactor * hit

    if not d.crossings:
        if d.free_loops == 0:
            raise ValueError("bracket of the empty diagram is undefined")
        return LOOP ** (d.free_loops - 1)
    total = value(list(d.crossings)) * (LOOP ** d.free_loops)
    return total.divide_exact(LOOP)


def jones(d: PlanarDiagram, o: Orientation, limit: int = DEFAULT_CROSSING_LIMIT) -> LaurentPoly:
    """Writhe-normalised bracket f = (-A^3)^(-w) <D>, in the A variable.

    Invariant under all Reidemeister moves, hence an invariant of the
    oriented link presented by the diagram.
    """
    return writhe_unit(-writhe(d, o)) * bracket_skein(d, limit)


def jones_set(d: PlanarDiagram, limit: int = DEFAULT_CROSSING_LIMIT) -> frozenset[LaurentPoly]:
    """Jones polynomials over all 2^components orientation assignments.

    The bracket is orientation-free, so it is computed once and only the
    writhe normalisation varies."""
    b = bracket_skein(d, limit)
    return frozenset(writhe_unit(-writhe(d, o)) * b for o in orientations(d))


def mirror_set(polys: frozenset[LaurentPoly]) -> frozenset[LaurentPoly]:
    return frozenset(p.mirror() for p in polys)


@dataclass(frozen=True)
class InvariantProfile:
    """Orientation-insensitive identification record for a link type.

    Sound for distinguishing the small links handled here; the Jones set is
    not a complete invariant in general, and the census documentation says
    "profile-distinct" rather than "distinct" for that reason.
    """

    component_count: int
    abs_linking: tuple[int, ...]
    jones: frozenset[LaurentPoly]

    def sort_key(self) -> tuple:
        return (self.component_count, self.abs_linking,
                tuple(sorted(poly_sort_key(p) for p in self.jones)))

    def jones_strings(self) -> tuple[str, ...]:
        return tuple(str(p) for p in sorted(self.jones, key=poly_sort_key))

    def __str__(self) -> str:
        return (f"components={self.component_count} "
                f"|lk|={list(self.abs_linking)} "
                f"jones={{{'; '.join(self.jones_strings())}}}")


def profile(obj: Union[ThreePagePresentation, PlanarDiagram],
            limit: int = DEFAULT_CROSSING_LIMIT) -> InvariantProfile:
    """Assemble the identification profile of a presentation or diagram."""
    d = project(obj) if isinstance(obj, ThreePagePresentation) else obj
    tr = trace(d)
    return InvariantProfile(tr.component_count, abs_linking_multiset(d),
                            jones_set(d, limit))


def equal_up_to_mirror(a: InvariantProfile, b: InvariantProfile) -> bool:
    """Profile equality allowing one global mirror A <-> A^-1."""
    if a.component_count != b.component_count or a.abs_linking != b.abs_linking:
        return False
    return a.jones == b.jones or a.jones == mirror_set(b.jones)


def trivial_profile(k: int) -> InvariantProfile:
    """Profile of the k-component unlink."""
    return InvariantProfile(k, (0,) * (k * (k - 1) // 2), frozenset({LOOP ** (k - 1)}))
