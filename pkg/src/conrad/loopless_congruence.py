"""Congruence calculus for graphs with no loops.

On top of the loop-admitting conditions, a loopless congruence keeps its
blocks independent: related vertices never carry a congruence edge.  The
congruences form a complete meet-semilattice only; no join is provided
because closing a union can break independence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EdgeSetOutOfRange,
    EmptyList,
    EmptySubset,
    IndependenceViolated,
    InvalidCongruence,
    NotContained,
    NotHomomorphism,
    SearchExhausted,
    SubstitutionViolated,
)
from .structures import (
    FiniteGraph,
    NOLOOPS,
    Partition,
    _norm_pair,
    all_partitions,
    graph,
    meet_partitions,
)

Map = tuple


@dataclass(frozen=True)
class LooplessCongruence:
    part: Partition
    cedges: frozenset[tuple[int, int]]

    def encoding(self) -> tuple:
        return (self.part.class_id, tuple(sorted(self.cedges)))


def identity_lc(g: FiniteGraph) -> LooplessCongruence:
    return LooplessCongruence(Partition.identity(g.n), g.edges)


def le_lc(a: LooplessCongruence, b: LooplessCongruence) -> bool:
    return a.part.refines(b.part) and a.cedges <= b.cedges


def _cross_orbit(part: Partition, a: int, b: int) -> frozenset[tuple[int, int]]:
    return frozenset(
        _norm_pair(u, v)
        for u in part.blocks[part.class_id[a]]
        for v in part.blocks[part.class_id[b]]
        if u != v
    )


def _blocks_independent(g: FiniteGraph, part: Partition) -> bool:
    return all(not part.same(a, b) for a, b in g.edges)


def saturation_lc(g: FiniteGraph, part: Partition) -> frozenset[tuple[int, int]]:
    """Pairs joined by an edge between their blocks."""
    out: set[tuple[int, int]] = set()
    for a, b in g.edges:
        out.update(_cross_orbit(part, a, b))
    return frozenset(out)


def strongify_lc(g: FiniteGraph, part: Partition):
    """Strong congruence for the partition, or None when a block has an edge."""
    if not _blocks_independent(g, part):
        return None
    return LooplessCongruence(part, saturation_lc(g, part))


def is_strong_lc(g: FiniteGraph, theta: LooplessCongruence) -> bool:
    return _blocks_independent(g, theta.part) and theta.cedges == saturation_lc(g, theta.part)


def validate_lc(g: FiniteGraph, theta: LooplessCongruence) -> LooplessCongruence:
    if g.policy != NOLOOPS:
        raise InvalidCongruence("loopless congruences need a loopless carrier")
    if theta.part.n != g.n:
        raise InvalidCongruence(f"partition on {theta.part.n} vertices, graph has {g.n}")
    if not (g.edges <= theta.cedges <= g.all_pairs):
        raise EdgeSetOutOfRange("congruence edge-set must sit between E and K")
    for a, b in theta.cedges:
        if theta.part.same(a, b):
            raise IndependenceViolated(f"{a}-{b} joins related vertices")
    for a, b in theta.cedges:
        if not _cross_orbit(theta.part, a, b) <= theta.cedges:
            raise SubstitutionViolated(f"orbit of {a}-{b} escapes the edge-set")
    return theta


# ---------------------------------------------------------------------------
# Maps, quotients
# ---------------------------------------------------------------------------

def is_homomorphism(g: FiniteGraph, h: FiniteGraph, f: Map) -> bool:
    # h is loopless, so an edge image in E_H forces distinct endpoints
    return all(_norm_pair(f[a], f[b]) in h.edges for a, b in g.edges)


def is_surjective(f: Map, m: int) -> bool:
    return set(f) == set(range(m))


def kernel_lc(g: FiniteGraph, h: FiniteGraph, f: Map) -> LooplessCongruence:
    if not is_homomorphism(g, h, f):
        raise NotHomomorphism("kernel needs an edge-preserving map")
    part = Partition.from_map(tuple(f))
    cedges = frozenset(
        p for p in g.all_pairs if _norm_pair(f[p[0]], f[p[1]]) in h.edges
    )
    return LooplessCongruence(part, cedges)


def strong_kernel_lc(g: FiniteGraph, h: FiniteGraph, f: Map) -> LooplessCongruence:
    if not is_homomorphism(g, h, f):
        raise NotHomomorphism("strong kernel needs an edge-preserving map")
    strong = strongify_lc(g, Partition.from_map(tuple(f)))
    if strong is None:
        raise InvalidCongruence("fibres of the map are not independent")
    return strong


def pointwise_image_lc(f: Map, theta: LooplessCongruence):
    """The raw pair (f(~), f(E)); need not be a congruence on the codomain."""
    rel = frozenset(
        _norm_pair(f[a], f[b])
        for block in theta.part.blocks
        for a in block
        for b in block
    )
    pairs = frozenset(_norm_pair(f[a], f[b]) for a, b in theta.cedges)
    return rel, pairs


def pointwise_le_lc(image, beta: LooplessCongruence) -> bool:
    rel, pairs = image
    return all(beta.part.same(a, b) for a, b in rel) and pairs <= beta.cedges


def quotient_lc(g: FiniteGraph, theta: LooplessCongruence) -> tuple[FiniteGraph, Map]:
    validate_lc(g, theta)
    cid = theta.part.class_id
    edges = {(min(cid[a], cid[b]), max(cid[a], cid[b])) for a, b in theta.cedges}
    return graph(theta.part.num_blocks, NOLOOPS, edges), cid


def restrict_lc(g: FiniteGraph, theta: LooplessCongruence, subset) -> LooplessCongruence:
    sub = sorted(set(subset))
    if not sub:
        raise EmptySubset("restriction to the empty set")
    pos = {v: i for i, v in enumerate(sub)}
    part = theta.part.restrict(sub)
    cedges = frozenset(
        (pos[a], pos[b]) for a, b in theta.cedges if a in pos and b in pos
    )
    return LooplessCongruence(part, cedges)


def quotient_cong_lc(g: FiniteGraph, t1: LooplessCongruence, t2: LooplessCongruence) -> LooplessCongruence:
    if not le_lc(t1, t2):
        raise NotContained("the second congruence must contain the first")
    cid = t1.part.class_id
    part = Partition.from_map(tuple(t2.part.class_id[b[0]] for b in t1.part.blocks))
    cedges = frozenset(_norm_pair(cid[a], cid[b]) for a, b in t2.cedges)
    return LooplessCongruence(part, cedges)


def meet_lc(g: FiniteGraph, thetas: list[LooplessCongruence]) -> LooplessCongruence:
    if not thetas:
        raise EmptyList("meet of no congruences")
    part = meet_partitions([t.part for t in thetas])
    cedges = frozenset.intersection(*(t.cedges for t in thetas))
    return LooplessCongruence(part, cedges)


# ---------------------------------------------------------------------------
# Enumeration and Birkhoff decomposition
# ---------------------------------------------------------------------------

def enumerate_congruences_lc(g: FiniteGraph) -> list[LooplessCongruence]:
    """Every congruence: independent-block partitions, off-diagonal orbits."""
    out = []
    for part in all_partitions(g.n):
        if not _blocks_independent(g, part):
            continue
        required = saturation_lc(g, part)
        free = []
        for i in range(part.num_blocks):
            for j in range(i + 1, part.num_blocks):
                orbit = frozenset(
                    _norm_pair(u, v)
                    for u in part.blocks[i]
                    for v in part.blocks[j]
                )
                if not orbit & required:
                    free.append(sorted(orbit))
        free.sort()
        found = []
        for k in range(2 ** len(free)):
            cedges = set(required)
            for i in range(len(free)):
                if k >> i & 1:
                    cedges.update(free[i])
            found.append(LooplessCongruence(part, frozenset(cedges)))
        found.sort(key=lambda c: c.encoding())
        out.extend(found)
    return out


@dataclass(frozen=True)
class SubdirectResultLC:
    ok: bool
    factors: tuple
    embedding: tuple[tuple[int, ...], ...]


def check_subdirect_lc(g: FiniteGraph, thetas: list[LooplessCongruence]) -> SubdirectResultLC:
    if not thetas:
        raise EmptyList("subdirect check needs at least one congruence")
    for t in thetas:
        validate_lc(g, t)
    ok = meet_lc(g, thetas) == identity_lc(g)
    factors = tuple(quotient_lc(g, t)[0] for t in thetas)
    embedding = tuple(
        tuple(t.part.class_id[v] for t in thetas) for v in range(g.n)
    )
    return SubdirectResultLC(ok, factors, embedding)


def is_subdirectly_irreducible_lc(g: FiniteGraph) -> bool:
    iota = identity_lc(g)
    others = [t for t in enumerate_congruences_lc(g) if t != iota]
    return not others or meet_lc(g, others) != iota


def _coloring_congruence(g: FiniteGraph, part: Partition) -> LooplessCongruence:
    """Proper-coloring partition with every cross-block pair present."""
    cedges = set()
    for i in range(part.num_blocks):
        for j in range(i + 1, part.num_blocks):
            cedges.update(
                _norm_pair(u, v)
                for u in part.blocks[i]
                for v in part.blocks[j]
            )
    return LooplessCongruence(part, frozenset(cedges))


def birkhoff_complete_decomposition(g: FiniteGraph) -> list[LooplessCongruence]:
    """Congruences with complete quotients whose meet is the identity.

    The all-singletons factor fixes the relation; greedy set cover by proper
    colorings removes each absent pair from the edge-set meet.  Merging any
    single non-adjacent pair is always a proper coloring, so the cover
    always completes.
    """
    base = _coloring_congruence(g, Partition.identity(g.n))
    uncovered = set(g.all_pairs - g.edges)
    chosen: list[LooplessCongruence] = []
    colorings = [
        part for part in all_partitions(g.n)
        if part.num_blocks < g.n and _blocks_independent(g, part)
    ]
    covers = []
    for part in colorings:
        inside = {
            _norm_pair(a, b)
            for block in part.blocks
            for a in block
            for b in block
            if a < b
        }
        covers.append((part, inside))
    while uncovered:
        best = None
        for part, inside in covers:
            gain = len(inside & uncovered)
            if gain == 0:
                continue
            key = (-gain, part.class_id)
            if best is None or key < best[0]:
                best = (key, part, inside)
        if best is None:
            raise SearchExhausted("no proper coloring separates a non-edge")
        _, part, inside = best
        chosen.append(_coloring_congruence(g, part))
        uncovered -= inside
    factors = [base] + chosen
    factors.sort(key=lambda c: c.encoding())
    met = meet_lc(g, factors)
    if met != identity_lc(g):
        raise SearchExhausted("decomposition meet is not the identity")
    return factors
