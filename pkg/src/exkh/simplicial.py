"""Abstract simplicial complexes and exact integer (co)homology.

Complexes are stored by ground set and maximal faces; the full face list is
expanded on demand under a cap.  Two degenerate complexes are kept distinct:
the *void* complex has no faces at all, while the *empty* complex has the
single face {}.  All homology here is reduced, computed from the augmented
(co)chain complex in which the empty face generates degree -1; with that
convention the empty complex has one unit of (co)homology in degree -1 and
combinatorial Alexander duality

    H~_i(X)  ~=  H~^{n-i-3}(dual(X)),        n = |ground|,

holds on the nose in every degree, void and empty cases included.

Cochain conventions.  Faces of each degree are ordered lexicographically by
ground position.  The coboundary of a face s is

    delta(s) = sum over v with s+{v} a face of (-1)^k (s+{v}),

k being the number of vertices of s that come after v in the ground order.
Matrices are written target-by-source, so delta_i has one row per
(i+1)-face.  Boundaries are the transposes, whence homology and cohomology
share free ranks while torsion shifts one degree, as usual.

Integer linear algebra is exact: Smith normal form over arbitrary-precision
ints, eliminating with unit pivots while any exist and falling back to gcd
pivoting on the small residual core.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import gcd
from typing import Hashable, Iterable, Sequence

from .errors import CapExceeded, EmptyPartW, NotAComplex, NotBipartition
from .lando import Graph

DEFAULT_FACE_CAP = 1 << 22

Face = frozenset
Matrix = tuple  # tuple of row tuples, ints


# --------------------------------------------------------------------------
# finitely generated abelian groups
# --------------------------------------------------------------------------


def _prime_powers(n: int) -> dict[int, int]:
    powers: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            powers[d] = powers.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        powers[n] = powers.get(n, 0) + 1
    return powers


@dataclass(frozen=True)
class AbelianGroup:
    """Z^rank plus cyclic torsion with an ascending divisibility chain."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0 or any(t < 2 for t in self.torsion):
            raise ValueError("rank must be >= 0 and torsion orders >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion chain not divisible: {self.torsion}")

    @staticmethod
    def from_orders(rank: int, orders: Iterable[int]) -> "AbelianGroup":
        """Normalise a direct sum of cyclic groups of the given orders."""
        by_prime: dict[int, list[int]] = {}
        for n in orders:
            if n in (0, 1):
                rank += 1 if n == 0 else 0
                continue
            for p, e in _prime_powers(n).items():
                by_prime.setdefault(p, []).append(e)
        if not by_prime:
            return AbelianGroup(rank)
        width = max(len(es) for es in by_prime.values())
        factors = []
        for k in range(width):
            f = 1
            for p, es in by_prime.items():
                es_sorted = sorted(es)
                idx = k - (width - len(es_sorted))
                if idx >= 0:
                    f *= p ** es_sorted[idx]
            factors.append(f)
        return AbelianGroup(rank, tuple(f for f in factors if f > 1))

    def direct_sum(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup.from_orders(
            self.rank + other.rank, self.torsion + other.torsion
        )

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"


def tensor_group(a: AbelianGroup, b: AbelianGroup) -> AbelianGroup:
    orders = []
    orders.extend([d] * b.rank for d in a.torsion)
    orders.extend([e] * a.rank for e in b.torsion)
    flat = [x for chunk in orders for x in chunk]
    flat.extend(gcd(d, e) for d in a.torsion for e in b.torsion)
    return AbelianGroup.from_orders(a.rank * b.rank, flat)


def tor_group(a: AbelianGroup, b: AbelianGroup) -> AbelianGroup:
    return AbelianGroup.from_orders(
        0, (gcd(d, e) for d in a.torsion for e in b.torsion)
    )


# --------------------------------------------------------------------------
# smith normal form
# --------------------------------------------------------------------------


def _snf_dense(m: list[list[int]]) -> list[int]:
    """Diagonal entries (not yet divisibility-sorted) of an integer SNF."""
    if not m or not m[0]:
        return []
    rows, cols = len(m), len(m[0])
    out = []
    t = 0
    while True:
        pivot = None
        best = None
        for i in range(t, rows):
            row = m[i]
            for j in range(t, cols):
                v = row[j]
                if v and (best is None or abs(v) < best):
                    best = abs(v)
                    pivot = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break
        i, j = pivot
        m[t], m[i] = m[i], m[t]
        if j != t:
            for row in m:
                row[t], row[j] = row[j], row[t]
        while True:
            # Clear the pivot column, shrinking the pivot on any remainder.
            restart = False
            for i in range(t + 1, rows):
                v = m[i][t]
                if not v:
                    continue
                q = v // m[t][t]
                if q:
                    piv_row = m[t]
                    row = m[i]
                    for j in range(t, cols):
                        row[j] -= q * piv_row[j]
                if m[i][t]:
                    m[t], m[i] = m[i], m[t]
                    restart = True
                    break
            if restart:
                continue
            for j in range(t + 1, cols):
                v = m[t][j]
                if not v:
                    continue
                q = v // m[t][t]
                if q:
                    for row in m:
                        row[j] -= q * row[t]
                if m[t][j]:
                    for row in m:
                        row[t], row[j] = row[j], row[t]
                    restart = True
                    break
            if restart:
                continue
            # Pivot now alone in its row and column; enforce divisibility.
            piv = m[t][t]
            offender = None
            for i in range(t + 1, rows):
                row = m[i]
                for j in range(t + 1, cols):
                    if row[j] % piv:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, cols):
                m[t][j] += m[offender][j]
        out.append(abs(m[t][t]))
        t += 1
        if t == rows or t == cols:
            break
    return out


def _sparse_unit_eliminate(matrix: Sequence[Sequence[int]]) -> tuple[int, list[list[int]]]:
    """Strip unit pivots from a matrix.

    Returns (number of unit pivots, dense residual matrix without unit
    entries).  This is where almost all the work happens for the +-1
    incidence matrices of chain complexes.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for i, row in enumerate(matrix):
        r = {j: v for j, v in enumerate(row) if v}
        if r:
            rows[i] = r
            for j in r:
                cols.setdefault(j, set()).add(i)
    units = 0
    while True:
        pick = None
        best = None
        for i, r in rows.items():
            for j, v in r.items():
                if v in (1, -1):
                    score = (len(r) - 1) * (len(cols[j]) - 1)
                    if best is None or score < best:
                        best = score
                        pick = (i, j, v)
                        if score == 0:
                            break
            if best == 0:
                break
        if pick is None:
            break
        i, j, v = pick
        piv_row = rows.pop(i)
        for jj in piv_row:
            cols[jj].discard(i)
            if not cols[jj]:
                del cols[jj]
        for ii in list(cols.get(j, ())):
            row = rows[ii]
            q = row[j] * v  # v in {1,-1} so this is row[j]/v
            for jj, pv in piv_row.items():
                new = row.get(jj, 0) - q * pv
                if new:
                    if jj not in row:
                        cols.setdefault(jj, set()).add(ii)
                    row[jj] = new
                elif jj in row:
                    del row[jj]
                    cols[jj].discard(ii)
                    if not cols[jj]:
                        del cols[jj]
            if not row:
                del rows[ii]
        units += 1
    live_rows = sorted(rows)
    live_cols = sorted({j for r in rows.values() for j in r})
    col_index = {j: k for k, j in enumerate(live_cols)}
    dense = [[0] * len(live_cols) for _ in live_rows]
    for k, i in enumerate(live_rows):
        for j, v in rows[i].items():
            dense[k][col_index[j]] = v
    return units, dense


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], int]:
    """Invariant factors and rank of an integer matrix.

    The factors come back as the full ascending divisibility chain, ones
    included, so ``len(factors) == rank``.
    """
    units, residual = _sparse_unit_eliminate(matrix)
    diagonal = [1] * units + _snf_dense(residual)
    # Repair divisibility pairwise: diag(a, b) ~ diag(gcd, lcm).
    changed = True
    while changed:
        changed = False
        for i in range(len(diagonal)):
            for j in range(i + 1, len(diagonal)):
                a, b = diagonal[i], diagonal[j]
                if b % a:
                    g = gcd(a, b)
                    diagonal[i], diagonal[j] = g, a * b // g
                    changed = True
    diagonal.sort()
    return tuple(diagonal), len(diagonal)


def integer_rank(matrix: Sequence[Sequence[int]]) -> int:
    units, residual = _sparse_unit_eliminate(matrix)
    return units + len(_snf_dense(residual))


def rank_mod_p(matrix: Sequence[Sequence[int]], p: int) -> int:
    rows = []
    for row in matrix:
        r = {j: v % p for j, v in enumerate(row) if v % p}
        if r:
            rows.append(r)
    rank = 0
    pivots: list[tuple[int, dict[int, int]]] = []
    for r in rows:
        for j, piv_row in pivots:
            if j in r:
                factor = r[j] * pow(piv_row[j], p - 2, p) % p
                for jj, v in piv_row.items():
                    new = (r.get(jj, 0) - factor * v) % p
                    if new:
                        r[jj] = new
                    elif jj in r:
                        del r[jj]
        if r:
            j = min(r)
            pivots.append((j, r))
            rank += 1
    return rank


# --------------------------------------------------------------------------
# rings
# --------------------------------------------------------------------------


def parse_ring(ring: str) -> tuple[str, int | None]:
    """Validate a coefficient ring name: 'Z', 'Q' or 'F<p>' with p prime."""
    if ring in ("Z", "Q"):
        return ring, None
    if ring.startswith("F"):
        try:
            p = int(ring[1:])
        except ValueError:
            p = 0
        if p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1)):
            return "F", p
    raise ValueError(f"unknown coefficient ring {ring!r} (use Z, Q or Fp)")


# --------------------------------------------------------------------------
# chain complexes
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ChainComplex:
    """A finite cochain complex of free modules with chosen bases.

    ``matrices[d]`` is the matrix of the degree-raising map from degree d to
    d+1, with one row per degree-(d+1) basis element.
    """

    bases: dict[int, tuple]
    matrices: dict[int, Matrix]

    def dim(self, degree: int) -> int:
        return len(self.bases.get(degree, ()))

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self.bases))

    def check(self) -> None:
        """Verify shapes and that consecutive maps compose to zero."""
        for d, m in self.matrices.items():
            if len(m) != self.dim(d + 1):
                raise NotAComplex(f"row count at degree {d}")
            if any(len(r) != self.dim(d) for r in m):
                raise NotAComplex(f"column count at degree {d}")
        for d in self.matrices:
            m2 = self.matrices.get(d + 1)
            if m2 is None or not self.matrices[d] or not m2:
                continue
            m1 = self.matrices[d]
            for i in range(len(m2)):
                for k in range(len(m1[0]) if m1 else 0):
                    s = sum(m2[i][j] * m1[j][k] for j in range(len(m1)))
                    if s != 0:
                        raise NotAComplex(f"maps do not square to zero at degree {d}")


def cohomology(cc: ChainComplex, ring: str = "Z") -> dict[int, AbelianGroup]:
    """Cohomology groups of a cochain complex, degree by degree."""
    kind, p = parse_ring(ring)
    ranks: dict[int, int] = {}
    factors: dict[int, tuple[int, ...]] = {}
    for d, m in cc.matrices.items():
        if kind == "Z":
            f, r = smith_normal_form(m)
            factors[d] = f
            ranks[d] = r
        elif kind == "Q":
            ranks[d] = integer_rank(m)
        else:
            ranks[d] = rank_mod_p(m, p)
    out: dict[int, AbelianGroup] = {}
    for d in cc.degrees:
        free = cc.dim(d) - ranks.get(d, 0) - ranks.get(d - 1, 0)
        torsion = ()
        if kind == "Z":
            torsion = tuple(t for t in factors.get(d - 1, ()) if t > 1)
        # Over Q and F_p every group is a vector space; integral torsion
        # shows up as extra mod-p rank, which the ranks above already carry.
        out[d] = AbelianGroup(free, torsion)
    return out


# --------------------------------------------------------------------------
# simplicial complexes
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SimplicialComplex:
    """An abstract simplicial complex with ordered ground set.

    ``maximal`` empty means the void complex; ``maximal == {frozenset()}``
    is the empty complex whose only face is the empty face.
    """

    ground: tuple[Hashable, ...]
    maximal: frozenset

    def __post_init__(self):
        vs = set(self.ground)
        if len(vs) != len(self.ground):
            raise ValueError("duplicate ground vertices")
        for f in self.maximal:
            if not f <= vs:
                raise ValueError(f"face {sorted(f, key=repr)} not inside ground")
        for f, g in itertools.combinations(self.maximal, 2):
            if f <= g or g <= f:
                raise ValueError("maximal faces must be inclusion-incomparable")

    # ---- constructors ----

    @staticmethod
    def from_maximal(ground: Iterable, faces: Iterable[Iterable]) -> "SimplicialComplex":
        fs = {frozenset(f) for f in faces}
        maximal = {f for f in fs if not any(f < g for g in fs)}
        return SimplicialComplex(tuple(ground), frozenset(maximal))

    @staticmethod
    def from_faces(
        ground: Iterable, faces: Iterable[Iterable], check: bool = True
    ) -> "SimplicialComplex":
        """Build from an explicit full face list, verifying closure."""
        fs = {frozenset(f) for f in faces}
        if check:
            for f in fs:
                for v in f:
                    if f - {v} not in fs:
                        raise NotAComplex(
                            f"face {sorted(f, key=repr)} present but "
                            f"{sorted(f - {v}, key=repr)} missing"
                        )
        return SimplicialComplex.from_maximal(ground, fs)

    @staticmethod
    def void(ground: Iterable = ()) -> "SimplicialComplex":
        return SimplicialComplex(tuple(ground), frozenset())

    @staticmethod
    def empty(ground: Iterable = ()) -> "SimplicialComplex":
        return SimplicialComplex(tuple(ground), frozenset({frozenset()}))

    @staticmethod
    def full_simplex(ground: Iterable) -> "SimplicialComplex":
        g = tuple(ground)
        return SimplicialComplex(g, frozenset({frozenset(g)}))

    # ---- basic queries ----

    @property
    def is_void(self) -> bool:
        return not self.maximal

    @property
    def is_empty_complex(self) -> bool:
        return self.maximal == frozenset({frozenset()})

    @property
    def dimension(self) -> int | None:
        if self.is_void:
            return None
        return max(len(f) for f in self.maximal) - 1

    def has_face(self, face: Iterable) -> bool:
        f = frozenset(face)
        return any(f <= m for m in self.maximal)

    def _position(self, v: Hashable) -> int:
        return self.ground.index(v)

    def sort_face(self, face: Iterable) -> tuple:
        pos = {v: i for i, v in enumerate(self.ground)}
        return tuple(sorted(face, key=pos.__getitem__))

    def faces(self, cap: int = DEFAULT_FACE_CAP) -> tuple[tuple, ...]:
        """Every face, ordered by dimension then lexicographically."""
        cached = self.__dict__.get("_faces")
        if cached is None:
            seen: set = set()
            stack = list(self.maximal)
            while stack:
                f = stack.pop()
                if f in seen:
                    continue
                seen.add(f)
                if len(seen) > cap:
                    raise CapExceeded("face enumeration", cap)
                for v in f:
                    g = f - {v}
                    if g not in seen:
                        stack.append(g)
            pos = {v: i for i, v in enumerate(self.ground)}
            cached = tuple(
                sorted(
                    (tuple(sorted(f, key=pos.__getitem__)) for f in seen),
                    key=lambda t: (len(t), tuple(pos[v] for v in t)),
                )
            )
            self.__dict__["_faces"] = cached
        if len(cached) > cap:
            raise CapExceeded("face enumeration", cap)
        return cached

    def f_vector(self, cap: int = DEFAULT_FACE_CAP) -> tuple[int, ...]:
        """Face counts (f_-1, f_0, ..., f_dim); (0,) for the void complex."""
        if self.is_void:
            return (0,)
        fs = self.faces(cap)
        top = max(len(f) for f in fs)
        counts = [0] * (top + 1)
        for f in fs:
            counts[len(f)] += 1
        return tuple(counts)

    # ---- serialisation ----

    def to_json(self) -> str:
        pos = {v: i for i, v in enumerate(self.ground)}
        return json.dumps(
            {
                "ground": list(self.ground),
                "maximal_faces": sorted(
                    (sorted(f, key=pos.__getitem__) for f in self.maximal),
                    key=lambda t: (len(t), [pos[v] for v in t]),
                ),
            }
        )

    @staticmethod
    def from_json(text: str) -> "SimplicialComplex":
        data = json.loads(text)
        return SimplicialComplex.from_maximal(
            data["ground"], data["maximal_faces"]
        )


def coboundary_complex(
    x: SimplicialComplex, cap: int = DEFAULT_FACE_CAP
) -> ChainComplex:
    """The reduced simplicial cochain complex of x with lex-ordered bases."""
    if x.is_void:
        return ChainComplex(bases={}, matrices={})
    pos = {v: i for i, v in enumerate(x.ground)}
    by_dim: dict[int, list[tuple]] = {}
    for f in x.faces(cap):
        by_dim.setdefault(len(f) - 1, []).append(f)
    bases = {d: tuple(fs) for d, fs in by_dim.items()}
    index = {
        d: {f: i for i, f in enumerate(fs)} for d, fs in bases.items()
    }
    face_set = {frozenset(f) for f in x.faces(cap)}
    matrices: dict[int, Matrix] = {}
    top = max(bases)
    for d in range(-1, top):
        source = bases.get(d, ())
        target = bases.get(d + 1, ())
        rows = [[0] * len(source) for _ in target]
        for j, f in enumerate(source):
            fset = frozenset(f)
            members = set(f)
            for v in x.ground:
                if v in members:
                    continue
                g = fset | {v}
                if g not in face_set:
                    continue
                k = sum(1 for u in f if pos[u] > pos[v])
                g_sorted = tuple(sorted(g, key=pos.__getitem__))
                rows[index[d + 1][g_sorted]][j] = -1 if k % 2 else 1
        matrices[d] = tuple(tuple(r) for r in rows)
    return ChainComplex(bases=bases, matrices=matrices)


def homology(
    x: SimplicialComplex, ring: str = "Z", cap: int = DEFAULT_FACE_CAP
) -> dict[int, AbelianGroup]:
    """Reduced simplicial homology of a complex.

    Boundary matrices are the transposes of the coboundaries, so free ranks
    match the cohomology of the same degree and torsion comes from the
    outgoing coboundary instead of the incoming one.
    """
    kind, p = parse_ring(ring)
    cc = coboundary_complex(x, cap)
    ranks: dict[int, int] = {}
    factors: dict[int, tuple[int, ...]] = {}
    for d, m in cc.matrices.items():
        if kind == "Z":
            f, r = smith_normal_form(m)
            factors[d] = f
            ranks[d] = r
        elif kind == "Q":
            ranks[d] = integer_rank(m)
        else:
            ranks[d] = rank_mod_p(m, p)
    out: dict[int, AbelianGroup] = {}
    for d in cc.degrees:
        free = cc.dim(d) - ranks.get(d, 0) - ranks.get(d - 1, 0)
        torsion = ()
        if kind == "Z":
            torsion = tuple(t for t in factors.get(d, ()) if t > 1)
        out[d] = AbelianGroup(free, torsion)
    return out


def cohomology_of(
    x: SimplicialComplex, ring: str = "Z", cap: int = DEFAULT_FACE_CAP
) -> dict[int, AbelianGroup]:
    """Reduced simplicial cohomology of a complex."""
    return cohomology(coboundary_complex(x, cap), ring)


# --------------------------------------------------------------------------
# complex constructions
# --------------------------------------------------------------------------


def independence_complex(g: Graph, cap: int = DEFAULT_FACE_CAP) -> SimplicialComplex:
    """The complex of independent vertex sets of a graph."""
    adj = g.adjacency
    order = list(g.vertices)
    faces: list[frozenset] = []
    count = [0]

    def grow(base: frozenset, start: int) -> None:
        count[0] += 1
        if count[0] > cap:
            raise CapExceeded("independent set enumeration", cap)
        faces.append(base)
        for k in range(start, len(order)):
            v = order[k]
            if not (adj[v] & base):
                grow(base | {v}, k + 1)

    grow(frozenset(), 0)
    return SimplicialComplex.from_maximal(g.vertices, faces)


def alexander_dual(
    x: SimplicialComplex, cap: int = DEFAULT_FACE_CAP
) -> SimplicialComplex:
    """Faces of the dual are complements of non-faces of x, same ground."""
    ground = list(x.ground)
    n = len(ground)
    full = frozenset(ground)
    faces: list[frozenset] = []
    count = [0]

    def grow(base: frozenset, start: int) -> None:
        count[0] += 1
        if count[0] > cap:
            raise CapExceeded("dual face enumeration", cap)
        faces.append(base)
        for k in range(start, n):
            v = ground[k]
            cand = base | {v}
            if not x.has_face(full - cand):
                grow(cand, k + 1)

    if not x.has_face(full):
        grow(frozenset(), 0)
        return SimplicialComplex.from_maximal(x.ground, faces)
    return SimplicialComplex.void(x.ground)


def join(x: SimplicialComplex, y: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join; vertices are tagged (0, v) and (1, w)."""
    ground = tuple((0, v) for v in x.ground) + tuple((1, w) for w in y.ground)
    if x.is_void or y.is_void:
        return SimplicialComplex.void(ground)
    maximal = frozenset(
        frozenset((0, v) for v in f) | frozenset((1, w) for w in g)
        for f in x.maximal
        for g in y.maximal
    )
    return SimplicialComplex(ground, maximal)


def suspension(x: SimplicialComplex) -> SimplicialComplex:
    two_points = SimplicialComplex.from_maximal("NS", [["N"], ["S"]])
    return join(two_points, x)


def join_homology(
    hx: dict[int, AbelianGroup], hy: dict[int, AbelianGroup]
) -> dict[int, AbelianGroup]:
    """Reduced homology of a join from the factors' reduced homology.

    H~_i(X * Y) = sum over r+s=i-1 of H~_r(X) (x) H~_s(Y)
                plus sum over r+s=i-2 of Tor(H~_r(X), H~_s(Y)).
    """
    out: dict[int, AbelianGroup] = {}

    def add(i: int, g: AbelianGroup) -> None:
        if g.is_trivial:
            return
        out[i] = out.get(i, AbelianGroup(0)).direct_sum(g)

    for r, a in hx.items():
        for s, b in hy.items():
            add(r + s + 1, tensor_group(a, b))
            add(r + s + 2, tor_group(a, b))
    return out


def jonsson_complex(g: Graph, part_v: Iterable) -> SimplicialComplex:
    """Jonsson's complex of a bipartite graph with a chosen side.

    Faces are the subsets of the chosen side all of whose vertices avoid the
    neighbourhood of at least one vertex of the other side.  Its suspension
    is homotopy equivalent to the independence complex of the graph.
    """
    v_side = list(dict.fromkeys(part_v))
    v_set = set(v_side)
    if not v_set <= set(g.vertices):
        raise NotBipartition("chosen part contains unknown vertices")
    w_side = [w for w in g.vertices if w not in v_set]
    for e in g.edges:
        a, b = tuple(e)
        if (a in v_set) == (b in v_set):
            raise NotBipartition(
                f"edge {sorted(e, key=repr)} does not cross the partition"
            )
    if not w_side:
        raise EmptyPartW("the complementary part of the bipartition is empty")
    adj = g.adjacency
    ordered_v = [v for v in g.vertices if v in v_set]
    faces: list[frozenset] = []

    def witness(face: frozenset) -> bool:
        return any(not (adj[w] & face) for w in w_side)

    def grow(base: frozenset, start: int) -> None:
        faces.append(base)
        for k in range(start, len(ordered_v)):
            cand = base | {ordered_v[k]}
            if witness(cand):
                grow(cand, k + 1)

    if witness(frozenset()):
        grow(frozenset(), 0)
        return SimplicialComplex.from_maximal(tuple(ordered_v), faces)
    return SimplicialComplex.void(tuple(ordered_v))


def bipartite_from_complex(x: SimplicialComplex) -> Graph:
    """The bipartite graph on ground vertices and maximal faces of x.

    A ground vertex v is joined to a maximal face m exactly when v is not a
    member of m.  For complexes arising as Jonsson complexes this reverses
    the construction up to isomorphism.
    """
    pos = {v: i for i, v in enumerate(x.ground)}
    face_ids = sorted(
        (tuple(sorted(m, key=pos.__getitem__)) for m in x.maximal),
        key=lambda t: (len(t), [pos[v] for v in t]),
    )
    vertices = list(x.ground) + [("m",) + f for f in face_ids]
    edges = [
        (v, ("m",) + f)
        for v in x.ground
        for f in face_ids
        if v not in f
    ]
    return Graph.build(vertices, edges)
