"""Structure classifiers: cofinality, aperiodicity, line points, the socle,
and the semisimplicity report.

Everything returns three-valued verdicts with replayable certificates.  The
the exact routes rest on structural equivalences: cofinality is triviality of the hereditary
saturated lattice; on atomic graphs aperiodicity is equivalent to freeness
of the shift action, whose failure is witnessed by a periodic atom; a free
action forces aperiodicity on any graph without sources; and semisimplicity
is atomicity together with freeness, which on a finite graph without sources
always fails by pigeonhole (leaf orbits must revisit a vertex).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from . import degrees as dg
from .kgraph import GraphLike, VertexId, is_leaf, quotient_graph, validate
from .lattice import all_hs_subsets, saturated_hereditary_closure
from .monoid import (Bounds, DEFAULT_BOUNDS, TElement, act, acts_freely, atoms,
                     find_periodic_element, is_atomic, leaf_orbit_collision,
                     t_equal)
from .tri import Certificate, Tri, no, register_replayer, unknown, yes


def is_cofinal(graph) -> Tri:
    """Is the hereditary saturated lattice trivial ({empty, everything})?"""
    if graph.is_lazy:
        return unknown("cofinality is decided on finite graphs only")
    subsets = all_hs_subsets(graph)
    proper = [h for h in subsets if h and h != frozenset(graph.vertices)]
    if proper:
        return no(Certificate("proper_hs", {"h": tuple(sorted(proper[0], key=repr))}))
    return yes(Certificate("trivial_lattice", {}))


def line_points(graph, bounds: Bounds = DEFAULT_BOUNDS) -> List[VertexId]:
    """Leaves whose orbit never revisits a vertex.

    On a finite graph without sources the orbit of any leaf revisits by
    pigeonhole, so the answer is always empty there.  On lazy graphs the
    revisit check is bounded by the offset box (bounded inclusion).
    """
    if graph.is_lazy:
        verts = graph.sample_vertices(bounds.sample_depth)
        radius = bounds.offset_radius
    else:
        verts = list(graph.vertices)
        radius = len(graph.vertices) + 1
    out = []
    for v in verts:
        depth = bounds.leaf_depth if graph.is_lazy else None
        if not is_leaf(graph, v, depth=depth).is_yes:
            continue
        if leaf_orbit_collision(graph, v, radius) is None:
            out.append(v)
    return out


def count_line_point_classes(graph, bounds: Bounds = DEFAULT_BOUNDS) -> int:
    """Line points up to orbit equivalence (orbits sharing a vertex)."""
    pts = line_points(graph, bounds)
    radius = bounds.sample_depth * 2 if graph.is_lazy else len(getattr(graph, "vertices", ())) + 1
    parent = list(range(len(pts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: Dict[Any, int] = {}
    for i, v in enumerate(pts):
        for w in _orbit_vertices(graph, v, radius):
            if w in owner:
                parent[find(i)] = find(owner[w])
            else:
                owner[w] = i
    return len({find(i) for i in range(len(pts))})


def _orbit_vertices(graph, v: VertexId, radius: int) -> List[VertexId]:
    k = graph.k
    seen = {v}
    frontier = [v]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for i in range(k):
                out = graph.out_edges(w, i)
                if len(out) != 1:
                    raise ValueError(f"{v!r} is not a leaf")
                s = out[0].source
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return list(seen)


def socle_vertices(graph, bounds: Bounds = DEFAULT_BOUNDS) -> List[VertexId]:
    """The hereditary saturated closure of the line points."""
    pts = line_points(graph, bounds)
    if not pts:
        return []
    closure = saturated_hereditary_closure(graph, pts,
                                           depth=bounds.sample_depth if graph.is_lazy else 6)
    return sorted(closure, key=repr)


def socle_essential(graph, bounds: Bounds = DEFAULT_BOUNDS) -> Tri:
    """Does every vertex reach a line point along some path?"""
    pts = set(line_points(graph, bounds))
    verts = graph.sample_vertices(bounds.sample_depth) if graph.is_lazy \
        else list(graph.vertices)
    if not verts:
        return unknown("no vertices to check")
    missing = []
    for v in verts:
        seen = {v}
        frontier = [v]
        hit = v in pts
        guard = 0
        while frontier and not hit and guard < (bounds.sample_depth if graph.is_lazy else len(verts) + 1):
            nxt = []
            for w in frontier:
                for i in range(graph.k):
                    for e in graph.out_edges(w, i):
                        if e.source in pts:
                            hit = True
                        if e.source not in seen:
                            seen.add(e.source)
                            nxt.append(e.source)
            frontier = nxt
            guard += 1
        if not hit:
            missing.append(v)
    if not missing:
        cert = Certificate("socle_essential", {"bounded": graph.is_lazy})
        return yes(cert, note="bounded verdict" if graph.is_lazy else "")
    if graph.is_lazy:
        return unknown(f"{len(missing)} sampled vertices reach no sampled line point")
    return no(Certificate("socle_gap", {"witness": missing[0]}))


def is_aperiodic(graph, bounds: Bounds = DEFAULT_BOUNDS) -> Tri:
    """Does some boundary path through every vertex avoid all periodicities?

    Exact on finite graphs without sources whenever the monoid is atomic
    (aperiodicity is then equivalent to a free shift action); a free action
    certifies yes on any graph without sources; graphs with sources get an
    unknown because the level/orbit machinery loses its footing there.
    """
    if not graph.is_lazy and graph.has_sources():
        note = "graph has sources: aperiodicity verdict withheld"
        found = find_periodic_element(graph, bounds)
        if found is not None:
            a, p = found
            note += f"; periodic element {a!r} with period {p} exists in the monoid"
        return unknown(note)

    free = acts_freely(graph, bounds)
    if free.is_yes:
        return yes(Certificate("free_action", {"inner": free}),
                   note="a free shift action forces aperiodicity")
    atomic = is_atomic(graph, bounds)
    if atomic.is_yes and not graph.is_lazy:
        if free.is_no and free.certificate.kind == "periodic_pair":
            d = free.certificate.data
            return no(Certificate("periodic_atom",
                                  {"element": d["element"], "period": d["period"]}))
        return unknown("atomic graph but freeness undecided")
    if free.is_no:
        return unknown("a periodic element exists but the monoid is not known "
                       "to be atomic, which leaves aperiodicity open")
    return unknown("no decisive route within bounds")


def is_strongly_aperiodic(graph, bounds: Bounds = DEFAULT_BOUNDS) -> Tri:
    """Is every quotient by a proper hereditary saturated set aperiodic?"""
    if graph.is_lazy:
        return unknown("strong aperiodicity is decided on finite graphs only")
    subsets = [h for h in all_hs_subsets(graph) if h != frozenset(graph.vertices)]
    parts = []
    for h in subsets:
        q = quotient_graph(graph, h)
        verdict = is_aperiodic(q, bounds)
        if verdict.is_no:
            return no(Certificate("quotient_periodic",
                                  {"h": tuple(sorted(h, key=repr)),
                                   "inner": verdict}))
        parts.append((tuple(sorted(h, key=repr)), verdict))
    if all(v.is_yes for _, v in parts):
        return yes(Certificate("quotients_aperiodic", {"parts": tuple(parts)}))
    return unknown("some quotient verdict is unknown")


def is_semisimple(graph, bounds: Bounds = DEFAULT_BOUNDS) -> Tri:
    """Atomicity together with a free action.

    On a finite graph without sources this is always no: leaves force orbit
    revisits (not free) and their absence kills atomicity.
    """
    atomic = is_atomic(graph, bounds)
    free = acts_freely(graph, bounds)
    if atomic.is_no:
        return no(Certificate("conjunction_fail", {"part": atomic, "which": "atomic"}))
    if free.is_no:
        return no(Certificate("conjunction_fail", {"part": free, "which": "free"}))
    if atomic.is_yes and free.is_yes:
        bounded = bool(atomic.note) or bool(free.note)
        return yes(Certificate("conjunction", {"parts": (atomic, free)}),
                   note="bounded verdict" if bounded else "")
    return unknown("atomicity or freeness undecided")


# ---------------------------------------------------------------------------
# report


@dataclass
class ClassificationReport:
    """Everything the report command prints, verdicts plus witnesses."""

    name: str
    rank: int
    has_sources: bool
    cofinal: Tri
    atomic: Tri
    free_action: Tri
    aperiodic: Tri
    strongly_aperiodic: Tri
    graded_basic_ideal_simple: Tri
    simple: Tri
    semisimple: Tri
    line_points: List[VertexId]
    line_point_classes: int
    socle: List[VertexId]
    socle_essential: Tri
    atom_vertices: List[VertexId]
    periodic_witness: Optional[Tuple[TElement, Tuple[int, ...]]]
    lattice: Optional[List[Tuple[VertexId, ...]]]
    warnings: List[str] = field(default_factory=list)

    def verdicts(self) -> Dict[str, Tri]:
        return {"cofinal": self.cofinal, "atomic": self.atomic,
                "freeAction": self.free_action, "aperiodic": self.aperiodic,
                "stronglyAperiodic": self.strongly_aperiodic,
                "gradedBasicIdealSimple": self.graded_basic_ideal_simple,
                "simple": self.simple, "semisimple": self.semisimple,
                "socleEssential": self.socle_essential}


def _tri_and(a: Tri, b: Tri) -> Tri:
    if a.is_no:
        return no(Certificate("conjunction_fail", {"part": a, "which": "left"}))
    if b.is_no:
        return no(Certificate("conjunction_fail", {"part": b, "which": "right"}))
    if a.is_yes and b.is_yes:
        return yes(Certificate("conjunction", {"parts": (a, b)}))
    return unknown("conjunct undecided")


def kp_report(graph, bounds: Bounds = DEFAULT_BOUNDS) -> ClassificationReport:
    """The full classification summary for one graph."""
    warnings: List[str] = []
    has_src = False
    if not graph.is_lazy:
        rep = validate(graph)
        warnings.extend(rep.warnings)
        has_src = rep.has_sources
    cofinal = is_cofinal(graph)
    atomic = is_atomic(graph, bounds)
    free = acts_freely(graph, bounds)
    aper = is_aperiodic(graph, bounds)
    strong = is_strongly_aperiodic(graph, bounds) if not graph.is_lazy and not has_src \
        else unknown("not computed")
    simple = _tri_and(cofinal, aper)
    semi = is_semisimple(graph, bounds)
    try:
        pts = line_points(graph, bounds)
        classes = count_line_point_classes(graph, bounds)
        soc = socle_vertices(graph, bounds)
        ess = socle_essential(graph, bounds)
    except ValueError:
        pts, classes, soc = [], 0, []
        ess = unknown("line point scan failed")
    witness = None
    if free.is_no and free.certificate is not None \
            and free.certificate.kind == "periodic_pair":
        d = free.certificate.data
        witness = (d["element"], tuple(d["period"]))
    elif has_src or aper.is_unknown:
        found = find_periodic_element(graph, bounds)
        if found is not None:
            witness = found
    lattice_sets = None
    if not graph.is_lazy and len(graph.vertices) <= 20:
        lattice_sets = [tuple(sorted(h, key=repr)) for h in all_hs_subsets(graph)]
    return ClassificationReport(
        name=getattr(graph, "name", ""), rank=graph.k, has_sources=has_src,
        cofinal=cofinal, atomic=atomic, free_action=free, aperiodic=aper,
        strongly_aperiodic=strong, graded_basic_ideal_simple=cofinal,
        simple=simple, semisimple=semi, line_points=pts,
        line_point_classes=classes, socle=soc, socle_essential=ess,
        atom_vertices=atoms(graph, bounds), periodic_witness=witness,
        lattice=lattice_sets, warnings=warnings)


# ---------------------------------------------------------------------------
# certificate replay


@register_replayer("trivial_lattice")
def _replay_trivial_lattice(graph, tri: Tri) -> bool:
    subsets = all_hs_subsets(graph)
    return all(not h or h == frozenset(graph.vertices) for h in subsets)


@register_replayer("proper_hs")
def _replay_proper_hs(graph, tri: Tri) -> bool:
    from .lattice import is_hereditary, is_saturated

    h = set(tri.certificate.data["h"])
    return bool(h) and h != set(graph.vertices) \
        and is_hereditary(graph, h) and is_saturated(graph, h)


@register_replayer("free_action")
def _replay_free_action(graph, tri: Tri) -> bool:
    from .tri import replay

    if not graph.is_lazy and graph.has_sources():
        return False
    inner = tri.certificate.data["inner"]
    return inner.is_yes and replay(graph, inner)


@register_replayer("periodic_atom")
def _replay_periodic_atom(graph, tri: Tri) -> bool:
    d = tri.certificate.data
    a, p = d["element"], tuple(d["period"])
    if len(a.items) != 1 or not any(p):
        return False
    (v, _), _ = a.items[0]
    if not is_leaf(graph, v).is_yes:
        return False
    if not t_equal(graph, a, act(p, a)).is_yes:
        return False
    return is_atomic(graph).is_yes


@register_replayer("quotient_periodic")
def _replay_quotient_periodic(graph, tri: Tri) -> bool:
    from .tri import replay

    d = tri.certificate.data
    q = quotient_graph(graph, set(d["h"]))
    return d["inner"].is_no and replay(q, d["inner"])


@register_replayer("quotients_aperiodic")
def _replay_quotients_aperiodic(graph, tri: Tri) -> bool:
    from .tri import replay

    for h, verdict in tri.certificate.data["parts"]:
        q = quotient_graph(graph, set(h))
        if not (verdict.is_yes and replay(q, verdict)):
            return False
    return True


@register_replayer("conjunction")
def _replay_conjunction(graph, tri: Tri) -> bool:
    from .tri import replay

    return all(p.is_yes and replay(graph, p) for p in tri.certificate.data["parts"])


@register_replayer("conjunction_fail")
def _replay_conjunction_fail(graph, tri: Tri) -> bool:
    from .tri import replay

    part = tri.certificate.data["part"]
    return part.is_no and replay(graph, part)


@register_replayer("socle_essential")
def _replay_socle_essential(graph, tri: Tri) -> bool:
    return socle_essential(graph).is_yes


@register_replayer("socle_gap")
def _replay_socle_gap(graph, tri: Tri) -> bool:
    return socle_essential(graph).is_no
