"""Hereditary saturated vertex sets and the order-ideal correspondence.

A vertex set H is hereditary when every edge with range in H has its source
in H, and saturated when a vertex all of whose degree-n sources lie in H (for
some n with at least one such path) itself lies in H.  On a finite graph the
relevant reachability data is the finite commutative semigroup of boolean
matrices generated by the supports of the color matrices, which replaces the
unbounded quantifier over degrees.

Hereditary saturated sets correspond to order ideals of the graded monoid:
H generates the ideal of elements that push inside H, and an ideal is
recovered from the vertices whose generators it contains.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from . import degrees as dg
from .kgraph import GraphLike, VertexId
from .monoid import TElement, common_level, push_to_level
from .tri import Certificate, Tri, no, register_replayer, unknown, yes


# ---------------------------------------------------------------------------
# boolean reachability semigroup


class BooleanReach:
    """All distinct boolean supports of the coordinate matrices A_n, n != 0.

    Generated by closing the color supports under boolean products; the
    semigroup is commutative (the integer matrices commute) and finite, so
    the closure terminates.  ``size_cap`` guards degenerate blowups.
    """

    def __init__(self, graph, size_cap: int = 4096):
        self.graph = graph
        n = len(graph.vertices)
        gens = []
        for i in range(graph.k):
            gens.append(np.array(graph.color_matrix(i) != 0, dtype=bool))
        states: Dict[bytes, np.ndarray] = {}
        frontier = []
        for g in gens:
            key = g.tobytes()
            if key not in states:
                states[key] = g
                frontier.append(g)
        while frontier:
            nxt = []
            for s in frontier:
                for g in gens:
                    prod = (s.astype(int) @ g.astype(int)) > 0
                    key = prod.tobytes()
                    if key not in states:
                        if len(states) >= size_cap:
                            raise RuntimeError("boolean reachability semigroup "
                                               f"exceeded {size_cap} states")
                        states[key] = prod
                        nxt.append(prod)
            frontier = nxt
        self.states: List[np.ndarray] = list(states.values())
        self.generators = gens

    def any_reach(self) -> np.ndarray:
        """Reflexive-transitive reachability by paths of any degree."""
        n = len(self.graph.vertices)
        acc = np.eye(n, dtype=bool)
        for s in self.states:
            acc |= s
        return acc


# ---------------------------------------------------------------------------
# closures


def hereditary_closure(graph: GraphLike, xs: Iterable[VertexId],
                       universe: Optional[Sequence[VertexId]] = None) -> Set[VertexId]:
    """Close under taking sources of out-edges.

    On a lazy graph a ``universe`` (typically a sampled window) clips the
    walk, making the result a truncated closure.
    """
    allowed = None if universe is None else set(universe)
    out = set(xs)
    frontier = list(out)
    while frontier:
        v = frontier.pop()
        for i in range(graph.k):
            for e in graph.out_edges(v, i):
                s = e.source
                if allowed is not None and s not in allowed:
                    continue
                if s not in out:
                    out.add(s)
                    frontier.append(s)
    return out


def _source_sets(graph: GraphLike, v: VertexId, depth: int) -> List[Set[VertexId]]:
    """The sets s(vL^n) for n in the box [0, depth]^k (n != 0), via set BFS."""
    k = graph.k
    memo: Dict[Tuple[int, ...], Set[VertexId]] = {dg.zero(k): {v}}
    for n in sorted(dg.box(dg.zero(k), (depth,) * k), key=dg.norm1):
        if n in memo:
            continue
        i = next(i for i in range(k) if n[i] > 0)
        prev = memo[dg.sub(n, dg.unit(k, i))]
        memo[n] = {e.source for w in prev for e in graph.out_edges(w, i)}
    return [s for n, s in memo.items() if any(n)]


def saturated_hereditary_closure(graph: GraphLike, xs: Iterable[VertexId],
                                 depth: int = 6) -> Set[VertexId]:
    """Smallest hereditary saturated set containing ``xs``.

    Alternates hereditary closure with saturation steps until stable.  On
    finite graphs saturation quantifies over the whole boolean reachability
    semigroup (exact); on lazy graphs it is truncated to the sampled window
    and degrees up to ``depth`` (a lower bound for the true closure).
    """
    if graph.is_lazy:
        universe = graph.sample_vertices(depth)
        x = hereditary_closure(graph, xs, universe)
        while True:
            added = False
            for u in universe:
                if u in x:
                    continue
                for srcs in _source_sets(graph, u, depth):
                    if srcs and srcs <= x:
                        x |= hereditary_closure(graph, {u}, universe)
                        added = True
                        break
            if not added:
                return x

    reach = BooleanReach(graph)
    idx = graph.vertex_index
    x = hereditary_closure(graph, xs)
    while True:
        added = False
        for u in graph.vertices:
            if u in x:
                continue
            row = idx[u]
            for state in reach.states:
                srcs = {graph.vertices[j] for j in np.flatnonzero(state[row])}
                if srcs and srcs <= x:
                    x |= hereditary_closure(graph, {u})
                    added = True
                    break
        if not added:
            return x


def is_hereditary(graph, h: Iterable[VertexId]) -> bool:
    hs = set(h)
    return all(e.source in hs for e in graph.edges if e.range in hs)


def is_saturated(graph, h: Iterable[VertexId],
                 reach: Optional[BooleanReach] = None) -> bool:
    hs = set(h)
    reach = reach or BooleanReach(graph)
    idx = graph.vertex_index
    for u in graph.vertices:
        if u in hs:
            continue
        row = idx[u]
        for state in reach.states:
            srcs = {graph.vertices[j] for j in np.flatnonzero(state[row])}
            if srcs and srcs <= hs:
                return False
    return True


def all_hs_subsets(graph) -> List[FrozenSet[VertexId]]:
    """Every hereditary saturated subset, smallest first (finite graphs)."""
    if graph.is_lazy:
        raise ValueError("the full lattice needs a finite graph")
    if len(graph.vertices) > 20:
        raise ValueError("lattice enumeration is limited to 20 vertices")
    reach = BooleanReach(graph)
    out = []
    verts = list(graph.vertices)
    for mask in range(1 << len(verts)):
        h = frozenset(v for j, v in enumerate(verts) if mask >> j & 1)
        if is_hereditary(graph, h) and is_saturated(graph, h, reach):
            out.append(h)
    return sorted(out, key=lambda h: (len(h), sorted(map(repr, h))))


# ---------------------------------------------------------------------------
# order ideals


@dataclass(frozen=True)
class OrderIdealDesc:
    """The order ideal generated by shifts of the vertices in ``h``."""

    h: FrozenSet[VertexId]


def ideal_of_vertex_set(graph, h: Iterable[VertexId]) -> OrderIdealDesc:
    return OrderIdealDesc(frozenset(h))


def ideal_membership(graph, a: TElement, h: Iterable[VertexId]) -> Tri:
    """Does a lie in the order ideal generated by the hereditary saturated h?

    a belongs exactly when some push of its level vector is supported inside
    h; the finitely many boolean support states make the search exhaustive.
    """
    hs = set(h)
    hkey = tuple(sorted(hs, key=repr))
    if a.is_zero():
        return yes(Certificate("ideal_member", {"a": a, "h": hkey,
                                                "level": None, "path": []}))
    t = common_level(a, TElement.zero(), graph.k)
    vec = push_to_level(graph, a, t).vector(graph.vertices)
    row = np.array([bool(c) for c in vec], dtype=bool)
    seen = {row.tobytes()}
    trail: Dict[bytes, List[int]] = {row.tobytes(): []}
    frontier = [row]
    while frontier:
        nxt = []
        for state in frontier:
            supp = {graph.vertices[j] for j in np.flatnonzero(state)}
            if supp <= hs:
                return yes(Certificate("ideal_member",
                                       {"a": a, "h": hkey, "level": t,
                                        "path": trail[state.tobytes()]}))
            for i in range(graph.k):
                gen = np.array(graph.color_matrix(i) != 0, dtype=bool)
                # the expansion relation only applies where out-edges exist
                if not gen[state].any(axis=1).all():
                    continue
                new = (state.astype(int) @ gen.astype(int)) > 0
                key = new.tobytes()
                if key not in seen:
                    seen.add(key)
                    trail[key] = trail[state.tobytes()] + [i]
                    nxt.append(new)
        frontier = nxt
    return no(Certificate("ideal_nonmember", {"a": a, "h": hkey}))


def vertices_of_ideal(graph, ideal: OrderIdealDesc) -> FrozenSet[VertexId]:
    """Recover the hereditary saturated set from the ideal it generates."""
    return frozenset(v for v in graph.vertices
                     if ideal_membership(graph, TElement.gen(v, dg.zero(graph.k)),
                                         ideal.h).is_yes)


def rho_eta_roundtrip(graph, h: Iterable[VertexId]) -> bool:
    """Check that generating an ideal and reading back its vertices is lossless."""
    hs = frozenset(h)
    return vertices_of_ideal(graph, ideal_of_vertex_set(graph, hs)) == hs


# ---------------------------------------------------------------------------
# primes and quotients


def is_prime_ideal(graph, h: Iterable[VertexId]) -> Tri:
    """Is the ideal of the proper hereditary saturated set h prime?

    Equivalent to the complement being a maximal tail: any two outside
    vertices must reach a common outside vertex.
    """
    hs = set(h)
    hkey = tuple(sorted(hs, key=repr))
    comp = [v for v in graph.vertices if v not in hs]
    if not comp:
        return no(Certificate("not_prime", {"h": hkey, "reason": "improper"}))
    reach = BooleanReach(graph).any_reach()
    idx = graph.vertex_index
    for v in comp:
        for w in comp:
            if not any(reach[idx[v], idx[u]] and reach[idx[w], idx[u]]
                       for u in comp):
                return no(Certificate("not_prime", {"h": hkey, "v": v, "w": w}))
    return yes(Certificate("prime_tail", {"h": hkey}))


def quotient_monoid_map(graph, a: TElement, h: Iterable[VertexId]) -> TElement:
    """The image of a in the quotient by the ideal of h: drop h-generators."""
    hs = set(h)
    return TElement.from_pairs([((v, n), c) for (v, n), c in a.items if v not in hs])


# ---------------------------------------------------------------------------
# certificate replay


@register_replayer("ideal_member")
def _replay_ideal_member(graph, tri: Tri) -> bool:
    d = tri.certificate.data
    a = d["a"]
    if a.is_zero():
        return True
    hs = set(d["h"])
    vec = push_to_level(graph, a, d["level"]).vector(graph.vertices)
    row = np.array([bool(c) for c in vec], dtype=bool)
    for i in d["path"]:
        gen = np.array(graph.color_matrix(i) != 0, dtype=bool)
        if not gen[row].any(axis=1).all():
            return False
        row = (row.astype(int) @ gen.astype(int)) > 0
    supp = {graph.vertices[j] for j in np.flatnonzero(row)}
    return supp <= hs


@register_replayer("ideal_nonmember")
def _replay_ideal_nonmember(graph, tri: Tri) -> bool:
    d = tri.certificate.data
    return ideal_membership(graph, d["a"], set(d["h"])).is_no


@register_replayer("not_prime")
def _replay_not_prime(graph, tri: Tri) -> bool:
    d = tri.certificate.data
    hs = set(d["h"])
    comp = [u for u in graph.vertices if u not in hs]
    if d.get("reason") == "improper":
        return not comp
    reach = BooleanReach(graph).any_reach()
    idx = graph.vertex_index
    v, w = d["v"], d["w"]
    if v in hs or w in hs:
        return False
    return not any(reach[idx[v], idx[u]] and reach[idx[w], idx[u]]
                   for u in comp)


@register_replayer("prime_tail")
def _replay_prime_tail(graph, tri: Tri) -> bool:
    return is_prime_ideal(graph, set(tri.certificate.data["h"])).is_yes
