"""One-step rewriting on the free commutative monoid over vertices.

A free element is a finite multiset of generators (vertices of the graph at
hand; for skew products the generators are (vertex, offset) pairs).  A step
in color i replaces one occurrence of a generator v by the multiset of
sources of its color-i out-edges, and is only enabled when that edge set is
nonempty.  The congruence generated by these steps (with the zero class kept
trivial) is exactly connectivity in the symmetric step graph, which is what
:func:`congruent` searches.

Certified negative answers come from two sound routes: exhausting a finite
connected component, or an integer-lattice invariant (each step changes the
coefficient vector by a relation vector, so elements whose difference lies
outside the relation lattice are never congruent).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from .intlinalg import lattice_member
from .kgraph import GraphLike
from .tri import Certificate, Tri, no, register_replayer, unknown, yes

Gen = Hashable
StepLabel = Tuple[int, Gen, int]  # (direction +1/-1, generator, color)

DEFAULT_NODE_CAP = 20000


@dataclass(frozen=True)
class FreeElement:
    """A multiset of generators with positive integer coefficients."""

    items: Tuple[Tuple[Gen, int], ...]

    @staticmethod
    def from_pairs(pairs: Iterable[Tuple[Gen, int]]) -> "FreeElement":
        c: Counter = Counter()
        for g, n in pairs:
            if n < 0:
                raise ValueError("coefficients must be nonnegative")
            if n:
                c[g] += n
        return FreeElement(tuple(sorted(c.items(), key=lambda kv: repr(kv[0]))))

    @staticmethod
    def single(gen: Gen, count: int = 1) -> "FreeElement":
        return FreeElement.from_pairs([(gen, count)])

    @staticmethod
    def zero() -> "FreeElement":
        return FreeElement(())

    def counter(self) -> Counter:
        return Counter(dict(self.items))

    def is_zero(self) -> bool:
        return not self.items

    def total(self) -> int:
        return sum(n for _, n in self.items)

    def __add__(self, other: "FreeElement") -> "FreeElement":
        c = self.counter()
        c.update(other.counter())
        return FreeElement.from_pairs(c.items())

    def subtract(self, other: "FreeElement") -> Optional["FreeElement"]:
        """self - other, or None when other is not dominated by self."""
        c = self.counter()
        for g, n in other.items:
            if c.get(g, 0) < n:
                return None
            c[g] -= n
        return FreeElement.from_pairs(c.items())

    def support(self) -> Tuple[Gen, ...]:
        return tuple(g for g, _ in self.items)

    def __repr__(self) -> str:
        if not self.items:
            return "0"
        return " + ".join(f"{n}*{g!r}" if n != 1 else f"{g!r}"
                          for g, n in self.items)


def expansion(graph: GraphLike, gen: Gen, color: int) -> Optional[FreeElement]:
    """The multiset of out-edge sources of ``gen`` in ``color``.

    None when the generator has no color-``color`` out-edge (the step is not
    enabled there: sources never rewrite away).
    """
    edges = graph.out_edges(gen, color)
    if not edges:
        return None
    return FreeElement.from_pairs(Counter(e.source for e in edges).items())


def step(graph: GraphLike, elem: FreeElement, gen: Gen, color: int) -> Optional[FreeElement]:
    """Apply one rewriting step at one occurrence of ``gen``, if enabled."""
    exp = expansion(graph, gen, color)
    if exp is None:
        return None
    rest = elem.subtract(FreeElement.single(gen))
    if rest is None:
        return None
    return rest + exp


def successors(graph: GraphLike, elem: FreeElement) -> List[Tuple[FreeElement, StepLabel]]:
    out = []
    for gen, _ in elem.items:
        for color in range(graph.k):
            nxt = step(graph, elem, gen, color)
            if nxt is not None:
                out.append((nxt, (+1, gen, color)))
    return out


def _predecessor_candidates(graph: GraphLike, elem: FreeElement) -> List[Tuple[Gen, int]]:
    if not graph.is_lazy:
        return [(v, i) for v in graph.vertex_ids() for i in range(graph.k)]
    if not graph.supports_in_edges:
        return []
    cands = set()
    for gen, _ in elem.items:
        for color in range(graph.k):
            for e in graph.in_edges(gen, color):
                cands.add((e.range, color))
    return sorted(cands, key=repr)


def predecessors(graph: GraphLike, elem: FreeElement) -> List[Tuple[FreeElement, StepLabel]]:
    """Elements that rewrite to ``elem`` in one step."""
    out = []
    for gen, color in _predecessor_candidates(graph, elem):
        exp = expansion(graph, gen, color)
        if exp is None:
            continue
        rest = elem.subtract(exp)
        if rest is not None:
            out.append((rest + FreeElement.single(gen), (-1, gen, color)))
    return out


def reachable(graph: GraphLike, elem: FreeElement, bound: int,
              node_cap: int = DEFAULT_NODE_CAP) -> Tuple[Dict[FreeElement, List[StepLabel]], bool]:
    """Forward closure of ``elem`` under at most ``bound`` steps.

    Returns (mapping element -> derivation trace, complete) where complete
    means the closure saturated before hitting either bound.
    """
    traces: Dict[FreeElement, List[StepLabel]] = {elem: []}
    frontier = [elem]
    complete = True
    for _ in range(bound):
        if not frontier:
            return traces, True
        nxt = []
        for cur in frontier:
            for succ, label in successors(graph, cur):
                if succ not in traces:
                    traces[succ] = traces[cur] + [label]
                    nxt.append(succ)
                    if len(traces) > node_cap:
                        return traces, False
        frontier = nxt
    if frontier:
        complete = False
    return traces, complete


def common_reduct(graph: GraphLike, a: FreeElement, b: FreeElement, bound: int,
                  node_cap: int = DEFAULT_NODE_CAP):
    """A common forward reduct of a and b within the bound, if one exists.

    Returns (gamma, trace_a, trace_b) or None.  On graphs without sources a
    common reduct exists if and only if the elements are congruent, so this
    doubles as a confluence-based equality check there; with sources the
    absence of a common reduct decides nothing.
    """
    ra, _ = reachable(graph, a, bound, node_cap)
    rb, _ = reachable(graph, b, bound, node_cap)
    meet = set(ra) & set(rb)
    if not meet:
        return None
    gamma = min(meet, key=lambda e: (len(ra[e]) + len(rb[e]), repr(e)))
    return gamma, ra[gamma], rb[gamma]


def _neighbors(graph: GraphLike, elem: FreeElement):
    return successors(graph, elem) + predecessors(graph, elem)


def _relation_vectors(graph) -> Tuple[List[List[int]], List[Gen]]:
    verts = list(graph.vertex_ids())
    idx = {v: i for i, v in enumerate(verts)}
    rels = []
    for v in verts:
        for color in range(graph.k):
            exp = expansion(graph, v, color)
            if exp is None:
                continue
            vec = [0] * len(verts)
            vec[idx[v]] -= 1
            for g, n in exp.items:
                vec[idx[g]] += n
            rels.append(vec)
    return rels, verts


def congruent(graph: GraphLike, a: FreeElement, b: FreeElement, bound: int = 16,
              node_cap: int = DEFAULT_NODE_CAP) -> Tri:
    """Are a and b identified in the quotient monoid of the step relation?

    Searches the symmetric step graph bidirectionally.  Yes comes with the
    connecting chain; no comes from an exhausted finite component or (on
    finite graphs) from the integer relation-lattice invariant; otherwise
    unknown with the bound noted.
    """
    if a == b:
        return yes(Certificate("rewrite_chain", {"start": a, "end": b, "steps": []}))
    if a.is_zero() or b.is_zero():
        return no(Certificate("zero_class", {"left": a, "right": b}))

    parent_a: Dict[FreeElement, Optional[Tuple[FreeElement, StepLabel]]] = {a: None}
    parent_b: Dict[FreeElement, Optional[Tuple[FreeElement, StepLabel]]] = {b: None}
    frontier_a, frontier_b = [a], [b]
    closed_a = closed_b = False

    def chain_from(parents, end) -> List[StepLabel]:
        steps = []
        cur = end
        while parents[cur] is not None:
            prev, label = parents[cur]
            steps.append(label)
            cur = prev
        steps.reverse()
        return steps

    def meet_cert(m: FreeElement) -> Tri:
        fwd = chain_from(parent_a, m)
        back = [( -d, g, c) for d, g, c in reversed(chain_from(parent_b, m))]
        return yes(Certificate("rewrite_chain",
                               {"start": a, "end": b, "steps": fwd + back}))

    for _ in range(bound):
        if closed_a or closed_b or (not frontier_a and not frontier_b):
            break
        # expand the smaller live frontier first
        if frontier_a and (not frontier_b or len(frontier_a) <= len(frontier_b)):
            side, parents, other = "a", parent_a, parent_b
            frontier = frontier_a
        else:
            side, parents, other = "b", parent_b, parent_a
            frontier = frontier_b
        nxt = []
        for cur in frontier:
            for succ, label in _neighbors(graph, cur):
                if succ in other:
                    parents.setdefault(succ, (cur, label))
                    return meet_cert(succ)
                if succ not in parents:
                    parents[succ] = (cur, label)
                    nxt.append(succ)
                    if len(parents) > node_cap:
                        return unknown(f"node cap {node_cap} hit")
        if side == "a":
            frontier_a = nxt
            closed_a = not nxt
        else:
            frontier_b = nxt
            closed_b = not nxt

    if closed_a or closed_b:
        return no(Certificate("component_separation",
                              {"left": a, "right": b,
                               "closed_side": "left" if closed_a else "right",
                               "component_size": len(parent_a if closed_a else parent_b)}))
    if not graph.is_lazy:
        rels, verts = _relation_vectors(graph)
        idx = {v: i for i, v in enumerate(verts)}
        diff = [0] * len(verts)
        for g, n in a.items:
            diff[idx[g]] += n
        for g, n in b.items:
            diff[idx[g]] -= n
        if not lattice_member(rels, diff):
            return no(Certificate("integer_invariant", {"left": a, "right": b}))
    return unknown(f"no connection within {bound} rounds")


def apply_chain(graph: GraphLike, start: FreeElement,
                steps: Sequence[StepLabel]) -> Optional[FreeElement]:
    """Replay a signed step chain; None when a step does not apply."""
    cur = start
    for d, gen, color in steps:
        if d == +1:
            cur = step(graph, cur, gen, color)
            if cur is None:
                return None
        else:
            exp = expansion(graph, gen, color)
            if exp is None:
                return None
            rest = cur.subtract(exp)
            if rest is None:
                return None
            cur = rest + FreeElement.single(gen)
    return cur


def split_derivation(graph: GraphLike, parts: Sequence[FreeElement],
                     steps: Sequence[StepLabel]) -> List[Tuple[FreeElement, List[StepLabel]]]:
    """Attribute a forward derivation on a sum to its summands.

    Given parts with sum alpha and a forward trace alpha ->* beta, each step
    consumes one occurrence of a generator; it is charged to the first part
    still holding that generator, yielding per-part reducts whose sum is
    beta together with the per-part step lists.
    """
    states = [p for p in parts]
    charged: List[List[StepLabel]] = [[] for _ in parts]
    for d, gen, color in steps:
        if d != +1:
            raise ValueError("split_derivation needs a forward-only trace")
        for t, st in enumerate(states):
            nxt = step(graph, st, gen, color)
            if nxt is not None:
                states[t] = nxt
                charged[t].append((+1, gen, color))
                break
        else:
            raise ValueError(f"step on {gen!r} applies to no summand")
    return list(zip(states, charged))


# ---------------------------------------------------------------------------
# certificate replay


@register_replayer("rewrite_chain")
def _replay_chain(graph, tri: Tri) -> bool:
    d = tri.certificate.data
    end = apply_chain(graph, d["start"], d["steps"])
    return end == d["end"]


@register_replayer("zero_class")
def _replay_zero(graph, tri: Tri) -> bool:
    d = tri.certificate.data
    return d["left"].is_zero() != d["right"].is_zero()


@register_replayer("component_separation")
def _replay_component(graph, tri: Tri) -> bool:
    d = tri.certificate.data
    closed = d["left"] if d["closed_side"] == "left" else d["right"]
    other = d["right"] if d["closed_side"] == "left" else d["left"]
    size = d["component_size"]
    seen = {closed}
    frontier = [closed]
    while frontier:
        nxt = []
        for cur in frontier:
            for succ, _ in _neighbors(graph, cur):
                if succ == other:
                    return False
                if succ not in seen:
                    seen.add(succ)
                    nxt.append(succ)
                    if len(seen) > size + 1:
                        return False
        frontier = nxt
    return other not in seen


@register_replayer("integer_invariant")
def _replay_invariant(graph, tri: Tri) -> bool:
    d = tri.certificate.data
    rels, verts = _relation_vectors(graph)
    idx = {v: i for i, v in enumerate(verts)}
    diff = [0] * len(verts)
    for g, n in d["left"].items:
        diff[idx[g]] += n
    for g, n in d["right"].items:
        diff[idx[g]] -= n
    return not lattice_member(rels, diff)
