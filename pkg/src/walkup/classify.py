"""Recognition procedures for pure complexes.

Dual graphs, (weak) pseudomanifold tests, stacked balls and spheres, the
Walkup classes and the face-vector lower-bound report.

The stacked-sphere recognizer works by reverse stacking moves: a vertex
whose link is the boundary of a simplex is removed and its star replaced by
the single facet on the link's vertex set.  Each such move inverts one
stacking step, so a complex reduces to the boundary of a simplex exactly
when it is a stacked sphere.  The lowest-numbered qualifying vertex is
always taken, which keeps runs deterministic; any qualifying vertex is the
apex over a leaf of the underlying tree, so the greedy choice is safe.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .core import Complex
from .errors import DomainError
from .graphs import Graph

WALKUP_VARIANTS = ("K", "Kbar", "Kstar")


def dual_graph(K: Complex) -> Graph:
    """Graph on facet indices; facets are adjacent iff they share a ridge."""
    if K.dim < 1:
        raise DomainError("dual graph needs a pure complex of dimension >= 1")
    edges = set()
    for owners in K.ridge_incidence().values():
        if len(owners) > 1:
            edges.update(itertools.combinations(owners, 2))
    return Graph(K.num_facets, edges)


def is_weak_pseudomanifold(K: Complex) -> bool:
    """True iff every (dim-1)-face lies in at most two facets."""
    if K.dim < 1:
        raise DomainError("weak pseudomanifold test needs dimension >= 1")
    return all(len(owners) <= 2 for owners in K.ridge_incidence().values())


def is_closed(K: Complex) -> bool:
    """True iff every (dim-1)-face lies in exactly two facets."""
    if K.dim < 1:
        raise DomainError("closedness test needs dimension >= 1")
    return all(len(owners) == 2 for owners in K.ridge_incidence().values())


def is_pseudomanifold(K: Complex) -> bool:
    return is_weak_pseudomanifold(K) and dual_graph(K).is_connected()


def is_stacked_ball(K: Complex) -> bool:
    """Tree dual graph plus the vertex count f_0 = f_d + d.

    The single facet is a stacked ball.  A tree dual graph alone is not
    enough: the equality of the vertex count is what rules out complexes
    that glue a ring of facets into a tree shape without adding vertices.
    """
    if K.dim < 1:
        raise DomainError("stacked ball test needs dimension >= 1")
    if not is_weak_pseudomanifold(K):
        return False
    if K.num_vertices != K.num_facets + K.dim:
        return False
    return dual_graph(K).is_tree()


def _is_boundary_simplex(facet_set: set[tuple[int, ...]], vertices: set[int],
                         d: int) -> bool:
    # d+2 distinct (d+1)-subsets of d+2 vertices are necessarily all of them
    return len(vertices) == d + 2 and len(facet_set) == d + 2


def is_stacked_sphere(K: Complex) -> bool:
    """Greedy reverse-stacking reduction to the boundary of a simplex.

    The input must be a closed weak pseudomanifold; a complex with nonempty
    boundary raises ``DomainError``.
    """
    d = K.dim
    if d < 1:
        raise DomainError("stacked sphere test needs dimension >= 1")
    for owners in K.ridge_incidence().values():
        if len(owners) > 2:
            raise DomainError("not a weak pseudomanifold")
        if len(owners) == 1:
            raise DomainError("complex has nonempty boundary")

    facet_set = set(K.facets)
    incidence: dict[int, set[tuple[int, ...]]] = {}
    for f in facet_set:
        for v in f:
            incidence.setdefault(v, set()).add(f)

    while True:
        if _is_boundary_simplex(facet_set, set(incidence), d):
            return True
        reduced = False
        for v in sorted(incidence):
            stars = incidence[v]
            if len(stars) != d + 1:
                continue
            around: set[int] = set()
            for f in stars:
                around.update(f)
            around.discard(v)
            if len(around) != d + 1:
                continue
            link = {frozenset(f) - {v} for f in stars}
            if link != {frozenset(around) - {u} for u in around}:
                continue
            tau = tuple(sorted(around))
            if tau in facet_set:
                # the filled-in facet already exists; only the boundary
                # simplex itself does that, and it was checked above
                return False
            for f in list(stars):
                facet_set.discard(f)
                for u in f:
                    if u != v:
                        incidence[u].discard(f)
            del incidence[v]
            facet_set.add(tau)
            for u in tau:
                incidence[u].add(tau)
            reduced = True
            break
        if not reduced:
            return False


def in_walkup_class(K: Complex, variant: str) -> bool:
    """Membership in K(d), Kbar(d) or Kstar(d) by checking every vertex link.

    ``K``: all vertex links are stacked (d-1)-spheres.  ``Kbar``: all vertex
    links are stacked (d-1)-balls.  ``Kstar``: ``K`` plus 2-neighborly.
    """
    if variant not in WALKUP_VARIANTS:
        raise DomainError(f"unknown Walkup variant {variant!r}; "
                          f"expected one of {WALKUP_VARIANTS}")
    if K.dim < 2:
        raise DomainError("Walkup class test needs dimension >= 2")
    if variant == "Kstar":
        return K.is_neighborly(2) and in_walkup_class(K, "K")
    for v in K.vertices:
        link = K.link(v)
        if variant == "Kbar":
            if not is_stacked_ball(link):
                return False
        else:
            try:
                if not is_stacked_sphere(link):
                    return False
            except DomainError:
                return False  # link not closed, so not a sphere
    return True


def cone(K: Complex) -> Complex:
    """Join with one fresh apex vertex appended to every facet."""
    if K.is_empty:
        raise DomainError("cannot cone the empty complex")
    apex = max(K.vertices) + 1
    return Complex(f + (apex,) for f in K.facets)


@dataclass(frozen=True)
class BoundEntry:
    """One row of the lower-bound report: dimension j against its bound."""

    j: int
    bound: int
    actual: int

    @property
    def satisfied(self) -> bool:
        return self.actual >= self.bound

    @property
    def equality(self) -> bool:
        return self.actual == self.bound


@dataclass(frozen=True)
class BoundReport:
    """Face-vector lower bounds for a closed d-manifold with given beta_1.

    ``entries`` holds the per-dimension bounds (a); ``b_lhs >= b_rhs`` is the
    vertex-count bound (b), whose equality characterizes the 2-neighborly
    Walkup-class members.  Manifoldness of the input is the caller's
    responsibility and is recorded, not fully verified.
    """

    dimension: int
    beta1: int
    entries: tuple[BoundEntry, ...]
    b_lhs: int
    b_rhs: int
    manifoldness: str

    @property
    def b_satisfied(self) -> bool:
        return self.b_lhs >= self.b_rhs

    @property
    def b_equality(self) -> bool:
        return self.b_lhs == self.b_rhs

    @property
    def all_satisfied(self) -> bool:
        return self.b_satisfied and all(e.satisfied for e in self.entries)

    @property
    def all_equalities(self) -> bool:
        return self.b_equality and all(e.equality for e in self.entries)

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "beta1": self.beta1,
            "per_dimension": [
                {"j": e.j, "bound": e.bound, "actual": e.actual,
                 "satisfied": e.satisfied, "equality": e.equality}
                for e in self.entries
            ],
            "vertex_bound": {"lhs": self.b_lhs, "rhs": self.b_rhs,
                             "satisfied": self.b_satisfied,
                             "equality": self.b_equality},
            "manifoldness": self.manifoldness,
        }


def check_lower_bounds(K: Complex, beta1: int, *, verify_links: bool = False) -> BoundReport:
    """Evaluate the face-vector lower bounds for a closed d-manifold, d >= 3.

    (a) per dimension j:  f_j >= C(d+1, j) f_0 + j C(d+2, j+1) (beta1 - 1)
        for j < d, and f_d >= d f_0 + (d-1)(d+2)(beta1 - 1);
    (b) C(f_0 - d - 1, 2) >= C(d+2, 2) beta1.

    ``beta1`` is the first Betti number with GF(2) coefficients, supplied by
    the caller.  With ``verify_links`` the vertex links are checked to be
    stacked spheres or boundary simplices, which certifies manifoldness for
    Walkup-class inputs; anything else is reported as unverified.
    """
    d = K.dim
    if d < 3:
        raise DomainError("lower bounds apply to dimension >= 3")
    fv = K.f_vector()
    f0 = fv[0]
    entries = []
    for j in range(1, d + 1):
        if j < d:
            bound = comb(d + 1, j) * f0 + j * comb(d + 2, j + 1) * (beta1 - 1)
        else:
            bound = d * f0 + (d - 1) * (d + 2) * (beta1 - 1)
        entries.append(BoundEntry(j=j, bound=bound, actual=fv[j]))
    manifoldness = "asserted by caller"
    if verify_links:
        ok = True
        for v in K.vertices:
            link = K.link(v)
            try:
                if not is_stacked_sphere(link):
                    ok = False
                    break
            except DomainError:
                ok = False
                break
        manifoldness = ("verified: all vertex links are stacked spheres"
                        if ok else "unverified manifoldness")
    return BoundReport(
        dimension=d,
        beta1=beta1,
        entries=tuple(entries),
        b_lhs=comb(f0 - d - 1, 2),
        b_rhs=comb(d + 2, 2) * beta1,
        manifoldness=manifoldness,
    )
