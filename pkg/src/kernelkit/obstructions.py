"""Enumeration and queries for small forbidden induced subgraphs.

Covered shapes: P3, P4, C4, C5, 2K2, and P3s whose center is a marked
vertex.  Each shape has a canonical tuple (lexicographically smallest
ordering among its role-preserving symmetries), and the generators emit
canonical tuples in ascending order, so the first hit of a generator is
the minimum occurrence and full enumeration is duplicate-free.
"""

from __future__ import annotations

import heapq
from enum import Enum
from itertools import islice
from typing import Iterable, Iterator, NamedTuple, Optional

from .graph import Graph, bits


class Kind(str, Enum):
    P3 = "P3"
    P4 = "P4"
    C4 = "C4"
    C5 = "C5"
    TWO_K2 = "2K2"
    I0_P3 = "I0P3"


class Obstruction(NamedTuple):
    kind: Kind
    vertices: tuple[int, ...]


class CandidatePair(NamedTuple):
    kind: Kind
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], tuple[int, int]]


def _above(v: int) -> int:
    # mask of all ids strictly greater than v
    return -1 << (v + 1)


def p3s(g: Graph, allowed: int | None = None) -> Iterator[tuple[int, int, int]]:
    """Induced paths x-b-y as (x, b, y) with x < y, ascending."""
    full = g.full_mask if allowed is None else allowed
    rows = g.rows
    for x in bits(full):
        for b in bits(rows[x] & full):
            ys = rows[b] & full & ~rows[x] & ~(1 << x) & _above(x)
            for y in bits(ys):
                yield (x, b, y)


def p4s(g: Graph, allowed: int | None = None) -> Iterator[tuple[int, ...]]:
    """Induced paths x-y-z-w as (x, y, z, w) with x < w, ascending."""
    full = g.full_mask if allowed is None else allowed
    rows = g.rows
    for x in bits(full):
        nx = rows[x] & full
        for y in bits(nx):
            zs = rows[y] & full & ~rows[x] & ~(1 << x)
            for z in bits(zs):
                ws = rows[z] & full & ~rows[x] & ~rows[y] & ~(1 << y) & _above(x)
                for w in bits(ws):
                    yield (x, y, z, w)


def c4s(g: Graph, allowed: int | None = None) -> Iterator[tuple[int, ...]]:
    """Induced 4-cycles (a, b, c, d): a minimal, b < d its cycle neighbors."""
    full = g.full_mask if allowed is None else allowed
    rows = g.rows
    for a in bits(full):
        na = rows[a] & full & _above(a)
        for b in bits(na):
            cs = rows[b] & full & ~rows[a] & ~(1 << a) & _above(a)
            for c in bits(cs):
                ds = na & rows[c] & ~rows[b] & _above(b)
                for d in bits(ds):
                    yield (a, b, c, d)


def c5s(g: Graph, allowed: int | None = None) -> Iterator[tuple[int, ...]]:
    """Induced 5-cycles (a, b, c, d, e): a minimal, b < e its cycle neighbors."""
    full = g.full_mask if allowed is None else allowed
    rows = g.rows
    for a in bits(full):
        na = rows[a] & full & _above(a)
        for b in bits(na):
            cs = rows[b] & full & ~rows[a] & ~(1 << a) & _above(a)
            for c in bits(cs):
                ds = rows[c] & full & ~rows[a] & ~rows[b] & ~(1 << b) & _above(a)
                for d in bits(ds):
                    es = rows[d] & na & ~rows[b] & ~rows[c] & ~(1 << c) & _above(b)
                    for e in bits(es):
                        yield (a, b, c, d, e)


def two_k2s(g: Graph, allowed: int | None = None) -> Iterator[tuple[int, ...]]:
    """Induced 2K2s (a, b, c, d) with edges ab, cd; a global minimum, c < d."""
    full = g.full_mask if allowed is None else allowed
    rows = g.rows
    for a in bits(full):
        na = rows[a] & full & _above(a)
        for b in bits(na):
            rest = full & ~rows[a] & ~rows[b] & ~(1 << b) & _above(a)
            for c in bits(rest):
                for d in bits(rows[c] & rest & _above(c)):
                    yield (a, b, c, d)


_GENERATORS = {
    Kind.P3: p3s,
    Kind.P4: p4s,
    Kind.C4: c4s,
    Kind.C5: c5s,
    Kind.TWO_K2: two_k2s,
}


def enumerate_obstructions(
    g: Graph,
    kinds: Iterable[Kind],
    limit: Optional[int] = None,
    allowed: int | None = None,
) -> list[Obstruction]:
    """All occurrences of the given kinds, one canonical tuple per vertex set.

    Output is sorted by canonical tuple; with ``limit`` only the first
    ``limit`` occurrences in that order are produced.
    """
    def stream(kind: Kind):
        return ((tup, kind) for tup in _GENERATORS[kind](g, allowed))

    streams = [stream(kind) for kind in sorted(set(kinds), key=lambda k: k.value)]
    merged = heapq.merge(*streams)
    if limit is not None:
        merged = islice(merged, limit)
    return [Obstruction(kind, tup) for tup, kind in merged]


def first_obstruction(
    g: Graph, kinds: Iterable[Kind], allowed: int | None = None
) -> Optional[Obstruction]:
    """Minimum-canonical occurrence among the given kinds, or None."""
    best = None
    for kind in kinds:
        tup = next(_GENERATORS[kind](g, allowed), None)
        if tup is not None and (best is None or tup < best.vertices):
            best = Obstruction(kind, tup)
    return best


def induces_kind(g: Graph, kind: Kind, vertices: tuple[int, ...]) -> bool:
    """Check that the tuple realizes its claimed shape, role order included."""
    vs = vertices
    if len(set(vs)) != len(vs):
        return False
    edge = g.has_edge
    if kind in (Kind.P3, Kind.I0_P3):
        if kind is Kind.I0_P3:
            b, x, y = vs
        else:
            x, b, y = vs
        return edge(x, b) and edge(b, y) and not edge(x, y)
    if kind is Kind.P4:
        x, y, z, w = vs
        return (
            edge(x, y) and edge(y, z) and edge(z, w)
            and not edge(x, z) and not edge(x, w) and not edge(y, w)
        )
    if kind is Kind.C4:
        a, b, c, d = vs
        return (
            edge(a, b) and edge(b, c) and edge(c, d) and edge(d, a)
            and not edge(a, c) and not edge(b, d)
        )
    if kind is Kind.C5:
        cyc = list(vs)
        for i in range(5):
            for j in range(i + 1, 5):
                adjacent = j - i == 1 or (i == 0 and j == 4)
                if edge(cyc[i], cyc[j]) != adjacent:
                    return False
        return True
    if kind is Kind.TWO_K2:
        a, b, c, d = vs
        return (
            edge(a, b) and edge(c, d)
            and not edge(a, c) and not edge(a, d)
            and not edge(b, c) and not edge(b, d)
        )
    raise ValueError(f"unknown kind {kind}")


# -- membership queries (short-circuiting) -----------------------------


def _in_p3(g: Graph, v: int, full: int) -> bool:
    rows = g.rows
    nv = rows[v] & full
    for u in bits(nv):
        # v as an end: u-center path leaving N[v]
        if rows[u] & full & ~rows[v] & ~(1 << v):
            return True
        # v as the center: two nonadjacent neighbors
        if nv & ~rows[u] & ~(1 << u):
            return True
    return False


def _in_p4(g: Graph, v: int, full: int) -> bool:
    rows = g.rows
    nv = rows[v] & full
    closed_v = (rows[v] | (1 << v)) & full
    for y in bits(nv):
        for z in bits(rows[y] & full & ~closed_v):
            # v an end of v-y-z-w
            if rows[z] & full & ~closed_v & ~rows[y] & ~(1 << y):
                return True
        # v interior of x-v-z-w
        for z in bits(nv & ~rows[y] & ~(1 << y)):
            if rows[z] & full & ~closed_v & ~rows[y]:
                return True
    return False


def _in_c4(g: Graph, v: int, full: int) -> bool:
    rows = g.rows
    nv = rows[v] & full
    for b in bits(nv):
        for d in bits(nv & ~rows[b] & _above(b)):
            if rows[b] & rows[d] & full & ~rows[v] & ~(1 << v):
                return True
    return False


def _in_c5(g: Graph, v: int, full: int) -> bool:
    rows = g.rows
    nv = rows[v] & full
    closed_v = (rows[v] | (1 << v)) & full
    for p in bits(nv):
        for q in bits(nv & ~rows[p] & _above(p)):
            for x in bits(rows[p] & full & ~closed_v & ~rows[q]):
                if rows[x] & rows[q] & full & ~closed_v & ~rows[p]:
                    return True
    return False


def _in_2k2(g: Graph, v: int, full: int) -> bool:
    rows = g.rows
    for a in bits(rows[v] & full):
        rest = full & ~rows[v] & ~rows[a] & ~(1 << v) & ~(1 << a)
        for c in bits(rest):
            if rows[c] & rest & _above(c):
                return True
    return False


_CHECKS = {
    Kind.P3: _in_p3,
    Kind.P4: _in_p4,
    Kind.C4: _in_c4,
    Kind.C5: _in_c5,
    Kind.TWO_K2: _in_2k2,
}


def vertex_in_obstruction(
    g: Graph, v: int, kinds: Iterable[Kind], allowed: int | None = None
) -> bool:
    """True iff some occurrence of a listed kind contains ``v``."""
    g._check(v)
    full = g.full_mask if allowed is None else allowed
    return any(_CHECKS[kind](g, v, full) for kind in kinds)


# -- candidate edges of P4/C4 occurrences ------------------------------


def candidate_pairs(g: Graph) -> list[CandidatePair]:
    """The two completion candidates of every induced P4 and C4."""
    out = []
    for tup in p4s(g):
        x, y, z, w = tup
        e1 = (x, z) if x < z else (z, x)
        e2 = (y, w) if y < w else (w, y)
        out.append(CandidatePair(Kind.P4, tup, (e1, e2)))
    for tup in c4s(g):
        a, b, c, d = tup
        e1 = (a, c) if a < c else (c, a)
        e2 = (b, d) if b < d else (d, b)
        out.append(CandidatePair(Kind.C4, tup, (e1, e2)))
    return out


def candidate_multiplicity(g: Graph, e: tuple[int, int]) -> int:
    """How many P4/C4 occurrences have ``e`` as one of their candidates."""
    u, v = e
    key = (u, v) if u < v else (v, u)
    return sum(key in pair.edges for pair in candidate_pairs(g))


def candidate_multiplicities(g: Graph) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for pair in candidate_pairs(g):
        for e in pair.edges:
            counts[e] = counts.get(e, 0) + 1
    return counts


# -- marked-center structures ------------------------------------------


def i0_centered_p3s(g: Graph, i0: Iterable[int]) -> list[Obstruction]:
    """All induced P3s whose degree-two vertex is marked; center listed first."""
    i0_mask = g.mask_of(i0)
    rows = g.rows
    out = []
    for b in bits(i0_mask):
        nb = rows[b]
        for x in bits(nb):
            for y in bits(nb & ~rows[x] & _above(x)):
                out.append(Obstruction(Kind.I0_P3, (b, x, y)))
    out.sort(key=lambda o: o.vertices)
    return out


def in_i0_centered_p3(g: Graph, v: int, i0_mask: int) -> bool:
    """Does ``v`` sit in some induced P3 with marked center?"""
    rows = g.rows
    if i0_mask >> v & 1:
        nv = rows[v]
        for x in bits(nv):
            if nv & ~rows[x] & ~(1 << x):
                return True
        return False
    for c in bits(rows[v] & i0_mask):
        if rows[c] & ~rows[v] & ~(1 << v):
            return True
    return False


def no_c4_c5_through(g: Graph, v: int, allowed: int) -> bool:
    """No induced C4 or C5 through ``v`` inside the allowed mask."""
    if not (allowed >> v & 1):
        return True
    return not (_in_c4(g, v, allowed) or _in_c5(g, v, allowed))


def c4_c5_avoiding(g: Graph, v: int, i0: Iterable[int]) -> bool:
    """True iff every induced C4/C5 through ``v`` meets the marked set."""
    g._check(v)
    return no_c4_c5_through(g, v, g.full_mask & ~g.mask_of(i0))
