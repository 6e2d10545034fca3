"""Clutters (antichain hypergraphs): minors, matching/covering, Konig and
packing deciders with certificates, edge ideals, universal-vertex extensions,
and incidence matrices.

Vertices are 1-based; edges are stored as bitmasks (bit i-1 = vertex i),
sorted ascending, which fixes a canonical edge order throughout.  Deletion,
contraction and minors return clutters on a compacted vertex set; packing
certificates always name vertices by their original labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DimensionMismatch, ResourceLimitExceeded
from .monomials import MonomialIdeal, PrimeSupport

DEFAULT_PACKING_VERTEX_CAP = 12


class _TrivialMinor:
    """Marker for a minor whose contraction emptied an edge (unit-ideal minor)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "TRIVIAL"


TRIVIAL = _TrivialMinor()


def _mask_of(vertices, n: int) -> int:
    mask = 0
    for v in vertices:
        if not isinstance(v, int) or v < 1 or v > n:
            raise ValueError(f"vertex {v!r} out of range 1..{n}")
        mask |= 1 << (v - 1)
    return mask


def _vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _minimal_masks(masks) -> list[int]:
    """Inclusion-minimal elements of a set of bitmasks."""
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in uniq:
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class Clutter:
    """n vertices plus an inclusion-antichain of nonempty edges (bitmasks)."""

    n: int
    edges: tuple[int, ...]

    def edge_vertex_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_vertices_of(e) for e in self.edges)

    def uniformity(self) -> int | None:
        """Common edge size if the clutter is uniform (or edgeless), else None."""
        sizes = {e.bit_count() for e in self.edges}
        if not sizes:
            return 0
        if len(sizes) == 1:
            return sizes.pop()
        return None

    def isolated_vertices(self) -> tuple[int, ...]:
        covered = 0
        for e in self.edges:
            covered |= e
        return tuple(v for v in range(1, self.n + 1) if not covered >> (v - 1) & 1)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edge_vertex_sets()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Clutter":
        return make_clutter(data["n"], data["edges"])


def make_clutter(n: int, edges) -> Clutter:
    """Build a clutter: rejects empty edges, keeps only inclusion-minimal ones."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"vertex count must be a nonnegative integer, got {n!r}")
    masks = []
    for edge in edges:
        mask = _mask_of(edge, n)
        if mask == 0:
            raise ValueError("empty edge is not allowed in a clutter")
        masks.append(mask)
    return Clutter(n, tuple(sorted(_minimal_masks(masks))))


def edge_ideal(H: Clutter) -> MonomialIdeal:
    """Squarefree ideal with one generator per edge; edgeless gives the zero ideal."""
    gens = []
    for e in H.edges:
        gens.append(tuple(e >> i & 1 for i in range(H.n)))
    return MonomialIdeal(H.n, tuple(sorted(gens)))


def matching_number(H: Clutter) -> int:
    """Largest number of pairwise-disjoint edges, by backtracking."""
    edges = H.edges
    m = len(edges)
    best = 0

    def extend(i: int, used: int, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if count + (m - i) <= best:
            return
        for j in range(i, m):
            if not edges[j] & used:
                extend(j + 1, used | edges[j], count + 1)

    extend(0, 0, 0)
    return best


def cover_number(H: Clutter) -> int:
    """Minimum size of a vertex set meeting every edge; 0 when edgeless."""
    for size in range(H.n + 1):
        for combo in combinations(range(H.n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if all(mask & e for e in H.edges):
                return size
    raise RuntimeError("unreachable: the full vertex set covers every edge")


def min_vertex_covers(H: Clutter) -> tuple[PrimeSupport, ...]:
    """All inclusion-minimal vertex covers, sorted by (size, vertices)."""
    if not H.edges:
        raise ValueError("min_vertex_covers requires at least one edge")
    covers = [
        mask
        for mask in range(1, 1 << H.n)
        if all(mask & e for e in H.edges)
    ]
    cover_set = set(covers)
    minimal = [
        mask
        for mask in covers
        if all(
            (mask ^ (1 << i)) not in cover_set
            for i in range(H.n)
            if mask >> i & 1
        )
    ]
    sets = [frozenset(_vertices_of(m)) for m in minimal]
    return tuple(sorted(sets, key=lambda A: (len(A), sorted(A))))


def _compact(masks, n: int, removed_mask: int) -> Clutter:
    """Reindex edge masks onto the vertices surviving `removed_mask`."""
    survivors = [i for i in range(n) if not removed_mask >> i & 1]
    new_index = {old: new for new, old in enumerate(survivors)}
    out = []
    for e in masks:
        new_e = 0
        for i in new_index:
            if e >> i & 1:
                new_e |= 1 << new_index[i]
        out.append(new_e)
    return Clutter(len(survivors), tuple(sorted(out)))


def deletion(H: Clutter, v: int) -> Clutter:
    """Drop vertex v and every edge containing it; surviving vertices compact."""
    bit = _mask_of([v], H.n)
    kept = [e for e in H.edges if not e & bit]
    return _compact(kept, H.n, bit)


def contraction(H: Clutter, v: int):
    """Remove v from every edge and re-minimalize; TRIVIAL if an edge empties."""
    bit = _mask_of([v], H.n)
    stripped = [e & ~bit for e in H.edges]
    if any(e == 0 for e in stripped):
        return TRIVIAL
    return _compact(_minimal_masks(stripped), H.n, bit)


def minor(H: Clutter, deleted, contracted):
    """Minor by deleting all of `deleted` then contracting all of `contracted`.

    The two vertex sets must be disjoint; the result does not depend on the
    order of the individual operations.  Returns TRIVIAL when a contraction
    empties an edge.
    """
    d_mask = _mask_of(deleted, H.n)
    c_mask = _mask_of(contracted, H.n)
    if d_mask & c_mask:
        raise ValueError("deleted and contracted vertex sets must be disjoint")
    kept = [e for e in H.edges if not e & d_mask]
    stripped = [e & ~c_mask for e in kept]
    if any(e == 0 for e in stripped):
        return TRIVIAL
    return _compact(_minimal_masks(stripped), H.n, d_mask | c_mask)


def has_koenig(H) -> bool:
    """Cover number equals matching number; TRIVIAL minors count as True."""
    if H is TRIVIAL:
        return True
    return cover_number(H) == matching_number(H)


@dataclass(frozen=True)
class FailingMinor:
    """Certificate: the minor of (deleted, contracted) violates Konig."""

    deleted: tuple[int, ...]
    contracted: tuple[int, ...]
    cover_number: int
    matching_number: int

    def to_json_dict(self) -> dict:
        return {
            "deleted": list(self.deleted),
            "contracted": list(self.contracted),
            "cover_number": self.cover_number,
            "matching_number": self.matching_number,
        }


@dataclass(frozen=True)
class PackingReport:
    packs: bool
    failing_minor: FailingMinor | None = None

    def to_json_dict(self) -> dict:
        return {
            "packs": self.packs,
            "failing_minor": (
                self.failing_minor.to_json_dict() if self.failing_minor else None
            ),
        }


def _subsets_lex(items):
    """All subsets of a sorted tuple, in lexicographic (DFS prefix) order."""
    items = tuple(items)

    def rec(start: int, prefix: tuple[int, ...]):
        yield prefix
        for i in range(start, len(items)):
            yield from rec(i + 1, prefix + (items[i],))

    yield from rec(0, ())


def has_packing(H: Clutter, vertex_cap: int = DEFAULT_PACKING_VERTEX_CAP) -> PackingReport:
    """Scan all 3^n disjoint (deleted, contracted) pairs for a Konig failure.

    TRIVIAL minors are skipped.  The certificate is the lexicographically
    first failing pair; vertices keep their original labels.
    """
    if H.n > vertex_cap:
        raise ResourceLimitExceeded(
            f"packing scan over 3^{H.n} minors exceeds the cap of {vertex_cap} vertices"
        )
    vertices = tuple(range(1, H.n + 1))
    for D in _subsets_lex(vertices):
        rest = tuple(v for v in vertices if v not in D)
        for C in _subsets_lex(rest):
            M = minor(H, D, C)
            if M is TRIVIAL:
                continue
            cov = cover_number(M)
            mat = matching_number(M)
            if cov != mat:
                return PackingReport(False, FailingMinor(D, C, cov, mat))
    return PackingReport(True)


def extend(H: Clutter, r: int) -> Clutter:
    """Append r new vertices and put all of them into every edge."""
    if r < 0:
        raise ValueError(f"extension count must be >= 0, got {r}")
    if r == 0:
        return H
    new_bits = ((1 << r) - 1) << H.n
    return Clutter(H.n + r, tuple(sorted(e | new_bits for e in H.edges)))


@dataclass(frozen=True)
class IncidenceMatrix:
    """0/1 edge-vertex incidence matrix; row i is the i-th canonical edge."""

    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        for row in self.data:
            if len(row) != self.cols:
                raise DimensionMismatch(
                    f"row of length {len(row)} in a {self.cols}-column matrix"
                )
            if any(x not in (0, 1) for x in row):
                raise ValueError(f"matrix entries must be 0/1: {row!r}")

    def row_masks(self) -> tuple[int, ...]:
        return tuple(
            sum(1 << j for j, x in enumerate(row) if x) for row in self.data
        )

    def to_json_dict(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "data": [list(r) for r in self.data]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "IncidenceMatrix":
        return cls(data["rows"], data["cols"], tuple(tuple(r) for r in data["data"]))

    @classmethod
    def from_rows(cls, rows, cols: int) -> "IncidenceMatrix":
        rows = tuple(tuple(r) for r in rows)
        return cls(len(rows), cols, rows)


def incidence_matrix(H: Clutter) -> IncidenceMatrix:
    data = tuple(
        tuple(e >> j & 1 for j in range(H.n)) for e in H.edges
    )
    return IncidenceMatrix(len(H.edges), H.n, data)
