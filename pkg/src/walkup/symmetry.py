"""Automorphism groups of pure simplicial complexes.

A permutation is the tuple of images of the dense vertex ids 0..n-1.  The
search maps vertices to vertices by backtracking with
individualization-refinement: vertices start colored by invariants built
from higher-order structure (facet degree, link face vector, and the
multiset of edge-link face vectors and co-degree profiles over the other
vertices), the coloring is refined to a fixed point, and branching assigns
one vertex of the rarest color class at a time.  The catalog complexes are
2-neighborly, so the 1-skeleton is complete and plain degrees are useless;
the pair invariants are what make the search near-linear there.

Every candidate reaching a leaf is verified against the facet set, and the
collected automorphisms are closed under composition as a final self-check,
so pruning bugs cannot produce a wrong group silently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from . import classify
from .core import Complex
from .errors import CapacityError, DomainError

Perm = tuple[int, ...]

AUT_VERTEX_CAP = 64


def identity_permutation(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """Composition acting left to right on images: (p o q)(i) = p[q[i]]."""
    return tuple(p[x] for x in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def permutation_order(p: Perm) -> int:
    seen = [False] * len(p)
    order = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        v = start
        while not seen[v]:
            seen[v] = True
            v = p[v]
            length += 1
        order = lcm(order, length)
    return order


def _require_dense(K: Complex) -> int:
    n = K.num_vertices
    if K.vertices != tuple(range(n)):
        raise DomainError("automorphism operations need dense vertex ids 0..n-1")
    return n


def is_automorphism(K: Complex, p: Perm) -> bool:
    """True iff the permutation maps the facet set onto itself."""
    n = _require_dense(K)
    if len(p) != n:
        raise DomainError(f"permutation length {len(p)} != vertex count {n}")
    if sorted(p) != list(range(n)):
        raise DomainError("not a bijection on the vertex set")
    facet_set = {frozenset(f) for f in K.facets}
    return all(frozenset(p[v] for v in f) in facet_set for f in K.facets)


def _fvector_of_facets(facets: list[tuple[int, ...]]) -> tuple[int, ...]:
    """Face counts of the complex spanned by the given facets (may be empty)."""
    if not facets:
        return ()
    top = max(len(f) for f in facets)
    counts = []
    for k in range(1, top + 1):
        seen = set()
        for f in facets:
            if len(f) >= k:
                seen.update(itertools.combinations(f, k))
        counts.append(len(seen))
    return tuple(counts)


def _pair_invariants(K: Complex, n: int) -> list[list[int]]:
    """Interned invariant of each vertex pair: edge-link f-vector + co-degrees."""
    pair_facets: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    triple_count: dict[tuple[int, int, int], int] = {}
    for f in K.facets:
        for pair in itertools.combinations(f, 2):
            rest = tuple(v for v in f if v not in pair)
            pair_facets.setdefault(pair, []).append(rest)
        for triple in itertools.combinations(f, 3):
            triple_count[triple] = triple_count.get(triple, 0) + 1
    # co-degree profile of a pair: how often each third vertex completes it
    profiles: dict[tuple[int, int], list[int]] = {}
    for (a, b, c), cnt in triple_count.items():
        profiles.setdefault((a, b), []).append(cnt)
        profiles.setdefault((a, c), []).append(cnt)
        profiles.setdefault((b, c), []).append(cnt)
    keys: dict[tuple[int, int], tuple] = {}
    for u in range(n):
        for v in range(u + 1, n):
            links = pair_facets.get((u, v))
            fvec = _fvector_of_facets(links) if links is not None else None
            keys[(u, v)] = (fvec, tuple(sorted(profiles.get((u, v), ()))))
    intern = {k: i for i, k in enumerate(sorted(set(keys.values()),
                                                key=repr))}
    table = [[0] * n for _ in range(n)]
    for (u, v), k in keys.items():
        table[u][v] = table[v][u] = intern[k]
    return table


def _initial_colors(K: Complex, n: int, pinv: list[list[int]]) -> list[int]:
    v_facets: dict[int, list[tuple[int, ...]]] = {v: [] for v in range(n)}
    for f in K.facets:
        for v in f:
            v_facets[v].append(tuple(u for u in f if u != v))
    keys = []
    for v in range(n):
        link_fvec = _fvector_of_facets(v_facets[v])
        around = tuple(sorted(pinv[v][u] for u in range(n) if u != v))
        keys.append((len(v_facets[v]), link_fvec, around))
    intern = {k: i for i, k in enumerate(sorted(set(keys), key=repr))}
    return [intern[k] for k in keys]


def _refine_pair(dom: list[int], cod: list[int],
                 pinv: list[list[int]], n: int):
    """Refine both colorings in lockstep; None when class profiles diverge."""
    while True:
        dkeys = [(dom[v],
                  tuple(sorted((dom[u], pinv[v][u]) for u in range(n) if u != v)))
                 for v in range(n)]
        ckeys = [(cod[v],
                  tuple(sorted((cod[u], pinv[v][u]) for u in range(n) if u != v)))
                 for v in range(n)]
        if sorted(dkeys) != sorted(ckeys):
            return None
        intern = {k: i for i, k in enumerate(sorted(set(dkeys)))}
        ndom = [intern[k] for k in dkeys]
        ncod = [intern[k] for k in ckeys]
        if len(intern) == len(set(dom)):
            return ndom, ncod
        dom, cod = ndom, ncod


@dataclass(frozen=True)
class GroupDescription:
    """Exact order plus a generating set; structure tag only when cyclic."""

    order: int
    generators: tuple[Perm, ...]
    structure: str | None

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "structure": self.structure,
            "generators": [list(g) for g in self.generators],
        }


def group_closure(generators, n: int) -> frozenset[Perm]:
    """All products of the generators, by breadth-first multiplication."""
    ident = identity_permutation(n)
    elems = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in generators]
    while frontier:
        fresh = []
        for g in frontier:
            for h in gens:
                p = compose(g, h)
                if p not in elems:
                    elems.add(p)
                    fresh.append(p)
        frontier = fresh
    return frozenset(elems)


def _enumerate_automorphisms(K: Complex, n: int) -> list[Perm]:
    facets = [tuple(f) for f in K.facets]
    facet_set = {frozenset(f) for f in facets}
    pinv = _pair_invariants(K, n)
    base = _initial_colors(K, n, pinv)
    refined = _refine_pair(list(base), list(base), pinv, n)
    assert refined is not None  # identical colorings cannot diverge
    found: set[Perm] = set()

    def descend(dom: list[int], cod: list[int]) -> None:
        classes: dict[int, tuple[list[int], list[int]]] = {}
        for v in range(n):
            classes.setdefault(dom[v], ([], []))[0].append(v)
        for w in range(n):
            classes.setdefault(cod[w], ([], []))[1].append(w)
        multi = [(len(dvs), min(dvs), c)
                 for c, (dvs, cws) in classes.items() if len(dvs) > 1]
        if not multi:
            perm = [0] * n
            for dvs, cws in classes.values():
                perm[dvs[0]] = cws[0]
            p = tuple(perm)
            if all(frozenset(p[v] for v in f) in facet_set for f in facets):
                found.add(p)
            return
        _, _, color = min(multi)
        dvs, cws = classes[color]
        v = min(dvs)
        fresh = n  # interned colors live in [0, n), so n is always unused
        for w in sorted(cws):
            dom2 = list(dom)
            cod2 = list(cod)
            dom2[v] = fresh
            cod2[w] = fresh
            result = _refine_pair(dom2, cod2, pinv, n)
            if result is not None:
                descend(*result)

    descend(*refined)
    return sorted(found)


@lru_cache(maxsize=128)
def automorphism_group(K: Complex) -> GroupDescription:
    """Exact automorphism group of a pure complex with at most 64 vertices.

    The returned description is deterministic: element enumeration, the
    greedy generating set and the structure tag do not depend on hashing or
    scheduling.  The set of collected automorphisms is verified to be closed
    under composition before anything is reported.
    """
    n = _require_dense(K)
    if n > AUT_VERTEX_CAP:
        raise CapacityError(
            f"{n} vertices exceed the automorphism search cap of {AUT_VERTEX_CAP}")
    if K.is_empty:
        raise DomainError("the empty complex has no automorphism group")
    elements = _enumerate_automorphisms(K, n)
    closure = group_closure(elements, n)
    if set(elements) != closure:
        raise RuntimeError("automorphism search returned a non-closed set; "
                           "this is a bug")
    order = len(elements)
    ident = identity_permutation(n)
    generators: list[Perm] = []
    closed: frozenset[Perm] = frozenset([ident])
    for p in elements:
        if p in closed:
            continue
        generators.append(p)
        closed = group_closure(generators, n)
        if len(closed) == order:
            break
    structure = None
    if order == 1:
        structure = "Z_1"
    elif any(permutation_order(p) == order for p in elements):
        structure = f"Z_{order}"
    return GroupDescription(order=order, generators=tuple(generators),
                            structure=structure)


def group_elements(K: Complex) -> frozenset[Perm]:
    """The full element set of Aut(K), expanded from the generators."""
    desc = automorphism_group(K)
    return group_closure(desc.generators, _require_dense(K))


def verify_aut_equality(M: Complex) -> bool:
    """Check Aut(M) = Aut(boundary of M) as permutation sets.

    ``M`` must be a member of Kbar of dimension at least 5; its boundary
    shares the vertex set, so both groups act on the same points.
    """
    if M.dim < 5:
        raise DomainError("automorphism equality check needs dimension >= 5")
    if not classify.in_walkup_class(M, "Kbar"):
        raise DomainError("complex is not in Kbar of its dimension")
    boundary = M.boundary_complex()
    if boundary.vertices != M.vertices:
        return False
    return group_elements(M) == group_elements(boundary)
