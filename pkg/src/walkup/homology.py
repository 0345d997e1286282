"""Exact simplicial homology over GF(2) and over the rationals.

Boundary matrices are indexed by the canonical (sorted) face order of the
complex.  The orientation convention is the alternating sum over the sorted
vertex tuple, so the entry for the face obtained by deleting the i-th vertex
carries sign (-1)^i.  Ranks are computed exactly: packed bit rows over
GF(2), fraction-free integer elimination over Q.  Betti numbers are the only
output; torsion is out of scope.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from . import classify
from .core import Complex, GeneralComplex
from .errors import CapacityError, DomainError
from .linalg import (gf2_kernel_basis, gf2_rank, int_rank,
                     rational_kernel_basis)

GF2 = "GF2"
Q = "Q"

TIGHTNESS_VERTEX_CAP = 16


def normalize_field(field: str) -> str:
    f = field.strip().upper()
    if f in ("GF2", "GF(2)", "Z2", "F2"):
        return GF2
    if f in ("Q", "QQ", "RATIONAL", "RATIONALS"):
        return Q
    raise DomainError(f"unknown coefficient field {field!r}")


@dataclass(frozen=True)
class ChainBoundary:
    """Boundary map from j-chains to (j-1)-chains.

    ``columns[c]`` lists the (row, sign) incidences of the c-th j-face; over
    GF(2) every sign is 1.  Row and column index maps are exposed through
    ``row_faces`` / ``col_faces`` in canonical face order.
    """

    dimension: int
    field: str
    row_faces: tuple[tuple[int, ...], ...]
    col_faces: tuple[tuple[int, ...], ...]
    columns: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row_faces), len(self.col_faces))

    def entry(self, i: int, j: int) -> int:
        for r, s in self.columns[j]:
            if r == i:
                return s
        return 0

    def bit_rows(self) -> list[int]:
        """Rows packed as ints (GF(2) view; signs reduced mod 2)."""
        rows = [0] * len(self.row_faces)
        for c, col in enumerate(self.columns):
            for r, _ in col:
                rows[r] |= 1 << c
        return rows

    def sparse_rows(self) -> list[dict[int, int]]:
        rows: list[dict[int, int]] = [dict() for _ in self.row_faces]
        for c, col in enumerate(self.columns):
            for r, s in col:
                rows[r][c] = s
        return rows

    def rank(self) -> int:
        if self.field == GF2:
            return gf2_rank(self.bit_rows())
        return int_rank(self.sparse_rows())


def boundary_matrix(K: GeneralComplex, j: int, field: str = GF2) -> ChainBoundary:
    """Boundary matrix from j-faces to (j-1)-faces, 1 <= j <= dim."""
    field = normalize_field(field)
    if not 1 <= j <= K.dim:
        raise DomainError(f"boundary dimension {j} out of range [1, {K.dim}]")
    row_faces = K.faces(j - 1)
    col_faces = K.faces(j)
    row_index = {f: i for i, f in enumerate(row_faces)}
    columns = []
    for face in col_faces:
        col = []
        for i in range(len(face)):
            sub = face[:i] + face[i + 1:]
            sign = 1 if field == GF2 else (-1) ** i
            col.append((row_index[sub], sign))
        columns.append(tuple(col))
    return ChainBoundary(dimension=j, field=field, row_faces=row_faces,
                         col_faces=col_faces, columns=tuple(columns))


def composes_to_zero(K: GeneralComplex, j: int, field: str = GF2) -> bool:
    """Check the chain-complex identity: boundary of boundary vanishes."""
    field = normalize_field(field)
    if not 2 <= j <= K.dim:
        raise DomainError(f"composition needs 2 <= j <= {K.dim}")
    outer = boundary_matrix(K, j - 1, field)
    inner = boundary_matrix(K, j, field)
    for col in inner.columns:
        acc: dict[int, int] = {}
        for r, s in col:
            for rr, ss in outer.columns[r]:
                acc[rr] = acc.get(rr, 0) + s * ss
        if field == GF2:
            if any(v % 2 for v in acc.values()):
                return False
        elif any(acc.values()):
            return False
    return True


@dataclass(frozen=True)
class BettiVector:
    """Betti numbers (beta_0, ..., beta_d) over the tagged coefficient field."""

    field: str
    values: tuple[int, ...]

    @property
    def alternating_sum(self) -> int:
        return sum(v if j % 2 == 0 else -v for j, v in enumerate(self.values))

    def __getitem__(self, j: int) -> int:
        return self.values[j]

    def __len__(self) -> int:
        return len(self.values)


@lru_cache(maxsize=128)
def _betti_cached(K: GeneralComplex, field: str) -> BettiVector:
    d = K.dim
    counts = [len(K.faces(j)) for j in range(d + 1)]
    ranks = [0] * (d + 2)  # rank of boundary_j; 0 for j=0 and j=d+1
    for j in range(1, d + 1):
        ranks[j] = boundary_matrix(K, j, field).rank()
    values = tuple(counts[j] - ranks[j] - ranks[j + 1] for j in range(d + 1))
    return BettiVector(field=field, values=values)


def betti_numbers(K: GeneralComplex, field: str = GF2) -> BettiVector:
    """Betti numbers by exact elimination: beta_j = dim ker d_j - rank d_{j+1}."""
    if K.is_empty:
        raise DomainError("the empty complex has no Betti numbers")
    return _betti_cached(K, normalize_field(field))


def _oriented_adjacency(K: Complex):
    """Dual edges as (facet a, facet b, sign product) from shared ridges."""
    out = []
    for ridge, owners in K.ridge_incidence().items():
        if len(owners) != 2:
            raise DomainError("complex is not closed")
        a, b = owners
        rset = set(ridge)
        fa, fb = K.facets[a], K.facets[b]
        ia = fa.index(next(v for v in fa if v not in rset))
        ib = fb.index(next(v for v in fb if v not in rset))
        out.append((a, b, (-1) ** (ia + ib)))
    return out


def is_orientable(K: Complex, *, cross_check: bool = False) -> bool:
    """Propagate facet orientations across the dual graph.

    Adjacent facets must induce opposite orientations on their shared ridge;
    the complex is orientable iff the propagation closes without
    contradiction.  Requires a closed connected weak pseudomanifold.  With
    ``cross_check`` the verdict is compared against beta_d over Q being 1.
    """
    if K.dim < 1:
        raise DomainError("orientability needs dimension >= 1")
    if not classify.is_weak_pseudomanifold(K):
        raise DomainError("not a weak pseudomanifold")
    adjacency = _oriented_adjacency(K)  # raises if not closed
    neighbors: dict[int, list[tuple[int, int]]] = {i: [] for i in range(K.num_facets)}
    for a, b, sign in adjacency:
        neighbors[a].append((b, sign))
        neighbors[b].append((a, sign))
    orient = [0] * K.num_facets
    orient[0] = 1
    queue = deque([0])
    seen = 1
    while queue:
        a = queue.popleft()
        for b, sign in neighbors[a]:
            # epsilon_a * (-1)^{ia} = -epsilon_b * (-1)^{ib}
            want = -orient[a] * sign
            if orient[b] == 0:
                orient[b] = want
                seen += 1
                queue.append(b)
    if seen != K.num_facets:
        raise DomainError("dual graph is not connected")
    result = all(orient[b] == -orient[a] * sign for a, b, sign in adjacency)
    if cross_check:
        beta_top = betti_numbers(K, Q)[K.dim]
        if result != (beta_top == 1):
            raise RuntimeError(
                "internal inconsistency: orientation propagation disagrees "
                f"with rational top Betti number {beta_top}")
    return result


@dataclass(frozen=True)
class TypeReport:
    """Homeomorphism type certified through Walkup-class membership."""

    dimension: int
    chi: int
    beta1: int
    orientable: bool
    euler_formula_ok: bool
    type_string: str

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "chi": self.chi,
            "beta1": self.beta1,
            "orientable": self.orientable,
            "euler_formula_ok": self.euler_formula_ok,
            "type": self.type_string,
        }


def sphere_bundle_type(d: int, beta1: int, orientable: bool) -> str:
    """Type string for a connected d-manifold all of whose links are stacked."""
    if beta1 == 0:
        return f"S{d}"
    base = f"(S{d - 1}xS1)^#{beta1}"
    return base if orientable else base + " twisted"


def identify_type(K: Complex) -> TypeReport:
    """Certify the homeomorphism type of a connected K(d) member, d >= 4.

    Such complexes triangulate a connected sum of sphere bundles over the
    circle (or the sphere itself when beta_1 = 0); the bundle is twisted iff
    the complex is non-orientable.  This is a certificate derived from class
    membership, not an independent homeomorphism test.
    """
    if K.dim < 4:
        raise DomainError("type identification needs dimension >= 4")
    if not K.is_connected():
        raise DomainError("complex is not connected")
    if not classify.in_walkup_class(K, "K"):
        raise DomainError("complex is not in the Walkup class K(d)")
    chi = K.euler_characteristic
    beta1 = betti_numbers(K, GF2)[1]
    orientable = is_orientable(K)
    # sphere bundles over the circle have chi = 0; connected sums then give
    # 2 - 2*beta1 in even dimensions and 0 in odd ones
    euler_ok = (chi == 2 - 2 * beta1) if K.dim % 2 == 0 else (chi == 0)
    return TypeReport(
        dimension=K.dim,
        chi=chi,
        beta1=beta1,
        orientable=orientable,
        euler_formula_ok=euler_ok,
        type_string=sphere_bundle_type(K.dim, beta1, orientable),
    )


def _gray_subsets(n: int):
    """Yield (toggled position, subset mask) covering all nonempty subsets."""
    mask = 0
    for k in range(1, 1 << n):
        t = (k & -k).bit_length() - 1
        mask ^= 1 << t
        yield t, mask


def is_tight_bruteforce(K: GeneralComplex, field: str = GF2) -> bool:
    """Check tightness by enumerating every induced subcomplex.

    For each vertex subset W and every dimension j, the map induced in
    homology by the inclusion of the subcomplex on W must be injective; the
    kernel is (cycles of Y meeting boundaries of X) modulo boundaries of Y,
    so injectivity is a rank condition checked exactly.  Capped at
    2^16 subsets; larger inputs must use the certificate path.
    """
    field = normalize_field(field)
    n = K.num_vertices
    if n == 0:
        raise DomainError("the empty complex cannot be tight")
    if n > TIGHTNESS_VERTEX_CAP:
        raise CapacityError(
            f"{n} vertices exceed the 2^{TIGHTNESS_VERTEX_CAP}-subset brute force; "
            "use the certificate path (certify_tight)")
    if not K.is_connected():
        return False

    verts = K.vertices
    vpos = {v: i for i, v in enumerate(verts)}
    dim = K.dim
    faces_by_dim = [K.faces(j) for j in range(dim + 1)]
    face_masks = [[sum(1 << vpos[v] for v in f) for f in faces_by_dim[j]]
                  for j in range(dim + 1)]
    # boundary incidences of each j-face, as (index into faces_{j-1}, sign)
    bnd: list[list[tuple[tuple[int, int], ...]]] = [[]]
    for j in range(1, dim + 1):
        idx = {f: i for i, f in enumerate(faces_by_dim[j - 1])}
        lst = []
        for f in faces_by_dim[j]:
            inc = []
            for i in range(len(f)):
                sign = 1 if field == GF2 else (-1) ** i
                inc.append((idx[f[:i] + f[i + 1:]], sign))
            lst.append(tuple(inc))
        bnd.append(lst)
    with_vertex = [[[i for i, f in enumerate(faces_by_dim[j]) if v in f]
                    for j in range(dim + 1)] for v in verts]

    # global boundary columns of d_{j+1} in C_j coordinates, and their ranks
    if field == GF2:
        bcols: list[list[int]] = []
        for j in range(dim + 1):
            cols = []
            if j < dim:
                for inc in bnd[j + 1]:
                    cols.append(sum(1 << r for r, _ in inc))
            bcols.append(cols)
        bdim = [gf2_rank(cols) for cols in bcols]
    else:
        qcols: list[list[dict[int, int]]] = []
        for j in range(dim + 1):
            cols = []
            if j < dim:
                for inc in bnd[j + 1]:
                    cols.append({r: s for r, s in inc})
            qcols.append(cols)
        bdim = [int_rank(cols) for cols in qcols]

    active: list[set[int]] = [set() for _ in range(dim + 1)]

    def injective_at(j: int) -> bool:
        cols_j = sorted(active[j])
        if not cols_j:
            return True
        local = {g: p for p, g in enumerate(cols_j)}
        ncols = len(cols_j)
        if field == GF2:
            # rank of the subcomplex boundary d^Y_{j+1}
            sub_rows = [sum(1 << local[r] for r, _ in bnd[j + 1][g])
                        for g in active[j + 1]] if j < dim else []
            dim_b_y = gf2_rank(sub_rows)
            # kernel of d^Y_j
            rows: dict[int, int] = {}
            if j > 0:
                for g in cols_j:
                    bit = 1 << local[g]
                    for r, _ in bnd[j][g]:
                        rows[r] = rows.get(r, 0) | bit
            kernel = gf2_kernel_basis(rows.values(), ncols)
            if len(kernel) == dim_b_y:
                return True  # B_j(Y) subset of Z_j(Y), dims already equal
            glob = [sum(1 << cols_j[p] for p in range(ncols) if (vec >> p) & 1)
                    for vec in kernel]
            joint = gf2_rank(glob + bcols[j])
            meet = len(kernel) + bdim[j] - joint
        else:
            sub_rows_q = [{local[r]: s for r, s in bnd[j + 1][g]}
                          for g in active[j + 1]] if j < dim else []
            dim_b_y = int_rank(sub_rows_q)
            rows_q: dict[int, dict[int, int]] = {}
            if j > 0:
                for g in cols_j:
                    for r, s in bnd[j][g]:
                        rows_q.setdefault(r, {})[local[g]] = s
            kernel_q = rational_kernel_basis(list(rows_q.values()), ncols)
            if len(kernel_q) == dim_b_y:
                return True
            glob_q = [{cols_j[p]: v for p, v in vec.items()} for vec in kernel_q]
            joint = int_rank(glob_q + qcols[j])
            meet = len(kernel_q) + bdim[j] - joint
        return meet == dim_b_y

    for t, mask in _gray_subsets(n):
        bit = 1 << t
        if mask & bit:
            for j in range(dim + 1):
                acts = active[j]
                for i in with_vertex[t][j]:
                    if face_masks[j][i] & ~mask == 0:
                        acts.add(i)
        else:
            for j in range(dim + 1):
                acts = active[j]
                for i in with_vertex[t][j]:
                    acts.discard(i)
        for j in range(dim + 1):
            if not injective_at(j):
                return False
    return True


@dataclass(frozen=True)
class TightCertificate:
    """Tightness and strong minimality certified through class membership."""

    dimension: int
    in_kstar: bool
    orientable: bool | None
    field: str | None
    tight: bool
    strongly_minimal: bool
    certified: bool
    beta1: int | None
    detail: str

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "in_kstar": self.in_kstar,
            "orientable": self.orientable,
            "field": self.field,
            "tight": self.tight,
            "strongly_minimal": self.strongly_minimal,
            "certified": self.certified,
            "beta1": self.beta1,
            "detail": self.detail,
        }


def certify_tight(K: Complex) -> TightCertificate:
    """Certify tightness for 2-neighborly Walkup-class manifolds.

    In dimension 4 (and any dimension other than 3) membership in the
    2-neighborly class plus orientability over the field is the whole
    certificate: orientable members are Q-tight, and every complex is
    GF(2)-orientable, so non-orientable members are GF(2)-tight.  In
    dimension 3 tightness additionally requires
    20 beta_1 = (f_0 - 4)(f_0 - 5).  Tight members are strongly minimal.
    A complex outside the class yields verdict "not certified", not an
    error.
    """
    d = K.dim
    if d not in (3, 4):
        raise DomainError("tightness certificates cover dimensions 3 and 4")
    if not classify.in_walkup_class(K, "Kstar"):
        return TightCertificate(
            dimension=d, in_kstar=False, orientable=None, field=None,
            tight=False, strongly_minimal=False, certified=False, beta1=None,
            detail="not certified: not a 2-neighborly Walkup-class member")
    orientable = is_orientable(K)
    field = Q if orientable else GF2
    beta1 = betti_numbers(K, field)[1]
    if d == 3:
        f0 = K.num_vertices
        tight = 20 * beta1 == (f0 - 4) * (f0 - 5)
        detail = (f"dimension 3 equality 20*beta1 = (f0-4)(f0-5): "
                  f"{20 * beta1} vs {(f0 - 4) * (f0 - 5)}")
        return TightCertificate(
            dimension=d, in_kstar=True, orientable=orientable, field=field,
            tight=tight, strongly_minimal=tight, certified=tight, beta1=beta1,
            detail=detail)
    return TightCertificate(
        dimension=d, in_kstar=True, orientable=orientable, field=field,
        tight=True, strongly_minimal=True, certified=True, beta1=beta1,
        detail=f"{field}-orientable 2-neighborly Walkup-class member")
