"""Shared corpora and independent oracles.

The corpora are deterministic (fixed seeds) so failures replay exactly.
Oracles here recompute package outputs by the most naive route available:
independent sets by subset enumeration, Smith invariant factors by
gcd-of-minors, joins by direct face products.  They are deliberately slow
and deliberately share no code with the package.
"""

import itertools
import random
from fractions import Fraction
from math import gcd

import pytest

from exkh.families import random_diagrams
from exkh.lando import Graph
from exkh.simplicial import SimplicialComplex

CORPUS_SEED = 20260814


@pytest.fixture(scope="session")
def corpus12():
    """200 random diagrams with 1..12 crossings."""
    return random_diagrams(200, max_crossings=12, seed=CORPUS_SEED)


@pytest.fixture(scope="session")
def corpus_multi():
    """Diagrams with at least two crossing-carrying components."""
    return random_diagrams(
        60, max_crossings=10, seed=CORPUS_SEED + 1, multi_component=True
    )


def random_complex(rng: random.Random, max_ground: int = 8) -> SimplicialComplex:
    n = rng.randrange(1, max_ground + 1)
    ground = tuple(range(1, n + 1))
    count = rng.randrange(1, n + 2)
    maximal = []
    for _ in range(count):
        size = rng.randrange(0, n + 1)
        maximal.append(tuple(sorted(rng.sample(ground, size))))
    return SimplicialComplex.from_maximal(ground, maximal)


@pytest.fixture(scope="session")
def complex_corpus():
    rng = random.Random(CORPUS_SEED + 2)
    return [random_complex(rng) for _ in range(60)]


def random_bipartite(rng: random.Random, max_vertices: int = 14) -> Graph:
    r = rng.randrange(1, max_vertices)
    s = rng.randrange(1, max_vertices - r + 1)
    part_v = tuple(f"v{k}" for k in range(r))
    part_w = tuple(f"w{k}" for k in range(s))
    edges = [
        (v, w)
        for v in part_v
        for w in part_w
        if rng.random() < 0.4
    ]
    return Graph.build(part_v + part_w, edges)


@pytest.fixture(scope="session")
def bipartite_corpus():
    rng = random.Random(CORPUS_SEED + 3)
    return [random_bipartite(rng) for _ in range(40)]


def random_graph(rng: random.Random, max_vertices: int = 9) -> Graph:
    n = rng.randrange(0, max_vertices + 1)
    vertices = tuple(range(n))
    edges = [
        e for e in itertools.combinations(vertices, 2) if rng.random() < 0.35
    ]
    return Graph.build(vertices, edges)


# --------------------------------------------------------------------------
# oracles
# --------------------------------------------------------------------------


def independent_sets_by_enumeration(g: Graph) -> list[tuple]:
    """Every independent set, empty set included, by brute subsets."""
    out = []
    vs = g.vertices
    for r in range(len(vs) + 1):
        for combo in itertools.combinations(vs, r):
            if all(
                frozenset((a, b)) not in g.edges
                for a, b in itertools.combinations(combo, 2)
            ):
                out.append(combo)
    return out


def invariant_factors_by_minors(matrix) -> tuple[int, ...]:
    """Smith invariant factors as ratios of gcds of k-by-k minors.

    Exact and obviously correct, exponentially slow; keep the inputs tiny.
    """
    rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        return ()
    m, n = len(rows), len(rows[0])

    def laplace(sub):
        k = len(sub)
        if k == 0:
            return Fraction(1)
        if k == 1:
            return sub[0][0]
        total = Fraction(0)
        for j in range(k):
            minor = [r[:j] + r[j + 1 :] for r in sub[1:]]
            sign = -1 if j % 2 else 1
            total += sign * sub[0][j] * laplace(minor)
        return total

    def det(idx_r, idx_c):
        return laplace([[Fraction(rows[i][j]) for j in idx_c] for i in idx_r])

    gcds = [1]
    for k in range(1, min(m, n) + 1):
        g_k = 0
        for idx_r in itertools.combinations(range(m), k):
            for idx_c in itertools.combinations(range(n), k):
                g_k = gcd(g_k, int(det(idx_r, idx_c)))
        gcds.append(g_k)
        if g_k == 0:
            break
    factors = []
    for k in range(1, len(gcds)):
        if gcds[k] == 0:
            break
        factors.append(gcds[k] // gcds[k - 1])
    return tuple(factors)


def faces_by_product(x: SimplicialComplex, y: SimplicialComplex) -> set:
    """Faces of the join, built directly from the definition."""
    fx = x.faces()
    fy = y.faces()
    return {
        frozenset({(0, v) for v in a} | {(1, w) for w in b})
        for a in fx
        for b in fy
    }
