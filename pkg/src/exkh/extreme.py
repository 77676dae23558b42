"""Extreme Khovanov cohomology through the Lando graph.

The lowest quantum grading j_min of a diagram is realised exactly by the
enhanced states S_min: all circles signed minus, B-labels forming an
independent set of admissible A-chords.  That bijection turns the j_min row
of the Khovanov complex into the reduced simplicial cochain complex of the
independence complex X_D of the Lando graph, shifted by n - 1:

    H^{i, j_min}(D)  ~=  H~^{i-1+n}(X_D),       n = negative crossings.

Three routes to the same row live here.  'lando' computes the right-hand
side directly (splitting X_D over the connected components of the graph,
since independence complexes of disjoint unions are joins).  'brute'
restricts the enhanced-state complex to j = j_min and reduces it, sharing
no code with the geometric route; agreement of the two is the strongest
self-test in the package.  'dual' goes through the Alexander dual Y_D of a
Jonsson complex of the bipartite Lando graph,

    H^{i, j_min}(D)  ~=  H~_{|V|-i-1-n}(Y_D),

which is the route that stays small when X_D has millions of faces but the
chosen side V of the bipartition is thin.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import A, B, Diagram, State
from .errors import EmptyPartW
from .khovanov import EnhancedState, j_bounds, khovanov_complex
from .lando import Graph, build_lando, is_complete_bipartite
from .simplicial import (
    DEFAULT_FACE_CAP,
    AbelianGroup,
    SimplicialComplex,
    alexander_dual,
    cohomology,
    cohomology_of,
    homology,
    independence_complex,
    join_homology,
    jonsson_complex,
    parse_ring,
)


@dataclass
class ExtremeRow:
    """One extreme row of a cohomology table, with its provenance.

    ``groups`` holds only the nonzero entries; ``shift`` records the degree
    translation n - 1 between diagram gradings and complex gradings.
    """

    j: int
    groups: dict[int, AbelianGroup]
    provenance: str  # 'lando' | 'brute' | 'dual'
    n: int
    shift: int

    def summary(self) -> str:
        if not self.groups:
            return f"j={self.j}: (row is zero)"
        cells = ", ".join(
            f"i={i}: {g}" for i, g in sorted(self.groups.items())
        )
        return f"j={self.j}: {cells}"

    def ranks_from_lowest(self) -> tuple[AbelianGroup, ...]:
        """The group sequence starting at the lowest nonzero i.

        Reorienting components shifts the whole row in i; comparing these
        sequences factors that shift out.
        """
        if not self.groups:
            return ()
        lo = min(self.groups)
        hi = max(self.groups)
        return tuple(
            self.groups.get(i, AbelianGroup(0)) for i in range(lo, hi + 1)
        )


def s_min_states(d: Diagram, cap: int = DEFAULT_FACE_CAP) -> set[EnhancedState]:
    """The enhanced states realising j = j_min.

    They are exactly the all-minus enhancements of states whose B-labelled
    crossings form an independent set of the Lando graph; in particular
    there are as many of them as X_D has faces, the empty face included.
    """
    g = build_lando(d)
    x = independence_complex(g, cap)
    out: set[EnhancedState] = set()
    c = d.crossing_count
    for face in x.faces(cap):
        chords = set(face)
        labels = tuple(B if k in chords else A for k in range(c))
        state = State(labels)
        m = len(d._resolve_bits(sum(1 << k for k in chords)))
        out.add(EnhancedState(state, (-1,) * m))
    return out


def _flip_to_cohomology(h_groups: dict[int, AbelianGroup]) -> dict[int, AbelianGroup]:
    """Homology to cohomology over Z: torsion climbs one degree."""
    degrees = set(h_groups)
    degrees.update(k + 1 for k in h_groups)
    out: dict[int, AbelianGroup] = {}
    for k in degrees:
        rank = h_groups.get(k, AbelianGroup(0)).rank
        torsion = h_groups.get(k - 1, AbelianGroup(0)).torsion
        out[k] = AbelianGroup(rank, torsion)
    return out


def lando_cohomology(
    g: Graph, ring: str = "Z", cap: int = DEFAULT_FACE_CAP
) -> dict[int, AbelianGroup]:
    """Reduced cohomology of the independence complex of a graph.

    Disconnected graphs are handled component by component: X of a disjoint
    union is the join of the X's, so the homologies convolve; that keeps a
    graph with thirty vertices in three components tractable even though
    its independence complex would have millions of faces.
    """
    comps = g.connected_components()
    if len(comps) <= 1:
        return cohomology_of(independence_complex(g, cap), ring, cap)
    kind, _ = parse_ring(ring)
    folded: dict[int, AbelianGroup] | None = None
    for comp in comps:
        hk = homology(independence_complex(g.subgraph(comp), cap), ring, cap)
        hk = {k: grp for k, grp in hk.items() if not grp.is_trivial}
        folded = hk if folded is None else join_homology(folded, hk)
    folded = folded or {}
    if kind == "Z":
        return _flip_to_cohomology(folded)
    return folded


def extreme_via_lando(
    d: Diagram, ring: str = "Z", cap: int = DEFAULT_FACE_CAP
) -> ExtremeRow:
    """The j_min row computed geometrically from the Lando graph."""
    n = d.negative_count
    j_min, _ = j_bounds(d)
    groups = {
        deg + 1 - n: grp
        for deg, grp in lando_cohomology(build_lando(d), ring, cap).items()
        if not grp.is_trivial
    }
    return ExtremeRow(
        j=j_min, groups=groups, provenance="lando", n=n, shift=n - 1
    )


def extreme_via_brute(
    d: Diagram, ring: str = "Z", max_crossings: int = 16
) -> ExtremeRow:
    """The j_min row from the enhanced-state complex, no geometry involved."""
    n = d.negative_count
    j_min, _ = j_bounds(d)
    cc = khovanov_complex(d, j_min, max_crossings)
    groups = {
        i: grp for i, grp in cohomology(cc, ring).items() if not grp.is_trivial
    }
    return ExtremeRow(
        j=j_min, groups=groups, provenance="brute", n=n, shift=n - 1
    )


def y_complex(d: Diagram) -> SimplicialComplex:
    """The Alexander dual Y_D of a Jonsson complex of the Lando graph.

    The Lando graph of a planar diagram is bipartite (chords drawn inside
    the circles never interleave each other, nor do the outside ones).  V
    is chosen per connected component as the smaller colour class, which
    sends isolated vertices to W and keeps the ground set of Y_D thin.

    Raises EmptyPartW when the graph has no vertices at all; callers fall
    back to the plain Lando route, whose complex is then a single point.
    """
    g = build_lando(d)
    if not g.vertices:
        raise EmptyPartW("the Lando graph has no admissible chords")
    coloring = g.two_coloring()
    if coloring is None:
        raise EmptyPartW("the Lando graph is not bipartite")
    part_v: list = []
    for comp in g.connected_components():
        side0 = [v for v in comp if coloring[v] == 0]
        side1 = [v for v in comp if coloring[v] == 1]
        part_v.extend(side0 if len(side0) <= len(side1) else side1)
    ordered = [v for v in g.vertices if v in set(part_v)]
    return alexander_dual(jonsson_complex(g, ordered))


def extreme_via_dual(
    d: Diagram, ring: str = "Z", cap: int = DEFAULT_FACE_CAP
) -> ExtremeRow:
    """The j_min row through Y_D:  H^{i,j_min} ~= H~_{|V|-i-1-n}(Y_D)."""
    n = d.negative_count
    j_min, _ = j_bounds(d)
    y = y_complex(d)
    size_v = len(y.ground)
    groups = {
        size_v - 1 - n - deg: grp
        for deg, grp in homology(y, ring, cap).items()
        if not grp.is_trivial
    }
    return ExtremeRow(
        j=j_min, groups=groups, provenance="dual", n=n, shift=n - 1
    )


def extreme_jmax(
    d: Diagram, ring: str = "Z", cap: int = DEFAULT_FACE_CAP
) -> ExtremeRow:
    """The j_max row of a diagram.

    Over a field this mirrors the diagram and negates indices, reusing the
    geometric route.  Over Z that reflection moves torsion between degrees,
    so integral answers come from brute force on the j_max row instead.
    """
    _, j_max = j_bounds(d)
    kind, _ = parse_ring(ring)
    if kind == "Z":
        n = d.negative_count
        cc = khovanov_complex(d, j_max)
        groups = {
            i: grp
            for i, grp in cohomology(cc, ring).items()
            if not grp.is_trivial
        }
        return ExtremeRow(
            j=j_max, groups=groups, provenance="brute", n=n, shift=n - 1
        )
    row = extreme_via_lando(d.mirror(), ring, cap)
    return ExtremeRow(
        j=j_max,
        groups={-i: grp for i, grp in row.groups.items()},
        provenance="lando",
        n=d.negative_count,
        shift=row.shift,
    )


def extreme_row(
    d: Diagram,
    ring: str = "Z",
    method: str = "lando",
    cap: int = DEFAULT_FACE_CAP,
) -> ExtremeRow:
    """Dispatch on the computation route; 'dual' falls back for tiny graphs."""
    if method == "lando":
        return extreme_via_lando(d, ring, cap)
    if method == "brute":
        return extreme_via_brute(d, ring)
    if method == "dual":
        try:
            return extreme_via_dual(d, ring, cap)
        except EmptyPartW:
            return extreme_via_lando(d, ring, cap)
    raise ValueError(f"unknown method {method!r} (use lando, brute or dual)")


def krs_criterion(d: Diagram, ring: str = "Z") -> AbelianGroup:
    """The group at (1 - n, j_min), read off the Lando graph's shape.

    It is one copy of the coefficient ring when the Lando graph is a
    complete bipartite graph K_{r,s} (r, s >= 1) and trivial otherwise;
    this is the degree where H~^0(X_D) sits, and the independence complex
    of a graph is disconnected exactly in the complete bipartite case,
    when it is a disjoint union of two simplices.
    """
    parse_ring(ring)
    g = build_lando(d)
    if is_complete_bipartite(g) is not None:
        return AbelianGroup(1)
    return AbelianGroup(0)
