"""Exact integer covering/packing program pair for 0/1 matrices.

For an m x n incidence matrix M and a nonnegative integral objective alpha:

    phi_alpha(M) = min { alpha . x : M x >= 1, x integral >= 0 }
    psi_alpha(M) = max { y . 1   : y M <= alpha, y integral >= 0, len(y) = m }

For 0/1 covering constraints restricting x to {0,1}^n is lossless (raising
a coordinate above 1 never helps), which the tests cross-check against a
wider box.  The module also provides the all-ones column extension, the
lexicographic duality-gap scan over a bounded alpha box, and the structural
characterization of the matrices with no gap anywhere (row sums n-2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .clutters import IncidenceMatrix
from .errors import DimensionMismatch, ResourceLimitExceeded

PHI_COLUMN_CAP = 20
STRUCTURAL_COLUMN_CAP = 8
DEFAULT_SCAN_STATE_CAP = 5_000_000


def extend_matrix(A: IncidenceMatrix, r: int) -> IncidenceMatrix:
    """Append r all-ones columns (a universal vertex per column); r=0 is A."""
    if r < 0:
        raise ValueError(f"extension count must be >= 0, got {r}")
    if r == 0:
        return A
    data = tuple(tuple(row) + (1,) * r for row in A.data)
    return IncidenceMatrix(A.rows, A.cols + r, data)


def _validate_instance(M: IncidenceMatrix, alpha) -> tuple[int, ...]:
    alpha = tuple(alpha)
    if len(alpha) != M.cols:
        raise DimensionMismatch(
            f"objective of length {len(alpha)} for a {M.cols}-column matrix"
        )
    if any(not isinstance(a, int) or a < 0 for a in alpha):
        raise ValueError(f"objective must be nonnegative integers: {alpha!r}")
    if any(not any(row) for row in M.data):
        raise ValueError("zero row makes the covering constraints infeasible")
    return alpha


def phi(M: IncidenceMatrix, alpha) -> tuple[int, tuple[int, ...]]:
    """Exact covering optimum and an optimal 0/1 vector x.

    Brute force over x in {0,1}^n; ties break to the smallest bitmask.
    """
    alpha = _validate_instance(M, alpha)
    n = M.cols
    if M.rows == 0:
        return 0, (0,) * n
    if n > PHI_COLUMN_CAP:
        raise ResourceLimitExceeded(f"covering brute force capped at {PHI_COLUMN_CAP} columns")
    row_masks = M.row_masks()
    best = None
    best_mask = 0
    for mask in range(1 << n):
        if any(not mask & rm for rm in row_masks):
            continue
        cost = sum(alpha[j] for j in range(n) if mask >> j & 1)
        if best is None or cost < best:
            best = cost
            best_mask = mask
    assert best is not None  # the all-ones x is feasible (no zero rows)
    return best, tuple(best_mask >> j & 1 for j in range(n))


def psi(M: IncidenceMatrix, alpha) -> tuple[int, tuple[int, ...]]:
    """Exact packing optimum and an optimal multiplicity vector y (length m).

    Bounded enumeration: y_i is capped by the smallest objective entry on
    row i's support, and branches are cut when even the per-row caps on the
    residual capacities cannot beat the incumbent.
    """
    alpha = _validate_instance(M, alpha)
    m = M.rows
    if m == 0:
        return 0, ()
    supports = [tuple(j for j, x in enumerate(row) if x) for row in M.data]
    residual = list(alpha)
    best_value = 0
    best_y: tuple[int, ...] = (0,) * m
    y = [0] * m

    def cap(i: int) -> int:
        return min(residual[j] for j in supports[i])

    def search(i: int, total: int) -> None:
        nonlocal best_value, best_y
        if i == m:
            if total > best_value:
                best_value = total
                best_y = tuple(y)
            return
        optimistic = total + sum(cap(r) for r in range(i, m))
        if optimistic <= best_value:
            return
        for value in range(cap(i), -1, -1):
            y[i] = value
            for j in supports[i]:
                residual[j] -= value
            search(i + 1, total + value)
            for j in supports[i]:
                residual[j] += value
        y[i] = 0

    search(0, 0)
    return best_value, best_y


@dataclass(frozen=True)
class LpReport:
    """Optimal values and certificates for the covering/packing pair."""

    phi: int
    psi: int
    x_opt: tuple[int, ...]
    y_opt: tuple[int, ...]

    @property
    def gap(self) -> int:
        return self.phi - self.psi

    def to_json_dict(self) -> dict:
        return {
            "phi": self.phi,
            "psi": self.psi,
            "gap": self.gap,
            "x_opt": list(self.x_opt),
            "y_opt": list(self.y_opt),
        }


def solve_lp(M: IncidenceMatrix, alpha) -> LpReport:
    phi_value, x_opt = phi(M, alpha)
    psi_value, y_opt = psi(M, alpha)
    if psi_value > phi_value:
        raise RuntimeError(
            "internal invariant violated: packing optimum exceeds covering optimum"
        )
    return LpReport(phi_value, psi_value, x_opt, y_opt)


def _minimal_cover_masks(row_masks: tuple[int, ...], n: int) -> list[int]:
    """Antichain of minimal x-supports hitting every row."""
    covers = [
        mask for mask in range(1 << n) if all(mask & rm for rm in row_masks)
    ]
    cover_set = set(covers)
    return [
        mask
        for mask in covers
        if all(
            (mask ^ (1 << j)) not in cover_set for j in range(n) if mask >> j & 1
        )
    ]


def duality_gap_search(
    M: IncidenceMatrix,
    box: int,
    state_cap: int = DEFAULT_SCAN_STATE_CAP,
) -> tuple[tuple[int, ...], LpReport] | None:
    """First alpha in {0..box}^n (lexicographic) with phi > psi, or None.

    phi is evaluated over the precomputed minimal covers and psi through a
    residual-capacity dynamic program shared by the whole scan; a found
    witness is re-solved with the standalone phi/psi as a cross-check.
    """
    if box < 1:
        raise ValueError(f"scan box must be >= 1, got {box}")
    _validate_instance(M, (0,) * M.cols)
    n = M.cols
    if n * (box + 1) ** n > state_cap:
        raise ResourceLimitExceeded(
            f"scan over {(box + 1) ** n} objectives exceeds the state cap"
        )
    if M.rows == 0:
        return None

    row_masks = M.row_masks()
    covers = _minimal_cover_masks(row_masks, n)
    cover_indices = [
        tuple(j for j in range(n) if mask >> j & 1) for mask in covers
    ]
    supports = [tuple(j for j, x in enumerate(row) if x) for row in M.data]

    packing_best: dict[tuple[int, ...], int] = {}
    for capacity in product(range(box + 1), repeat=n):
        best = 0
        for sup in supports:
            if all(capacity[j] >= 1 for j in sup):
                reduced = list(capacity)
                for j in sup:
                    reduced[j] -= 1
                value = 1 + packing_best[tuple(reduced)]
                if value > best:
                    best = value
        packing_best[capacity] = best

    for alpha in product(range(box + 1), repeat=n):
        phi_value = min(sum(alpha[j] for j in idx) for idx in cover_indices)
        if phi_value > packing_best[alpha]:
            report = solve_lp(M, alpha)
            if report.phi != phi_value or report.psi != packing_best[alpha]:
                raise RuntimeError(
                    "internal invariant violated: scan optima disagree with "
                    "the standalone solvers"
                )
            return alpha, report
    return None


# --- structural characterization of gap-free row-sum-(n-2) matrices --------

def _base_matrices() -> tuple[tuple[str, IncidenceMatrix], ...]:
    """Incidence matrices of the clutters of the six reference graphs.

    The two-vertex complete graph contributes two bases: its own clutter is
    edgeless (0x2), and since appending universal vertices to an edgeless
    clutter cannot create edges, the single-edge clutter it induces once an
    isolated vertex is present (1x3) must be a base of its own.
    """
    def mat(rows, cols):
        return IncidenceMatrix.from_rows(rows, cols)

    return (
        ("K2", mat([], 2)),
        ("K2+isolated", mat([(0, 0, 1)], 3)),
        ("K3", mat([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)),
        ("P3", mat([(0, 0, 1), (1, 0, 0)], 3)),
        ("2K2", mat([(1, 1, 0, 0), (0, 0, 1, 1)], 4)),
        ("P4", mat([(0, 0, 1, 1), (1, 0, 0, 1), (1, 1, 0, 0)], 4)),
        ("C4", mat([(0, 0, 1, 1), (1, 0, 0, 1), (1, 1, 0, 0), (0, 1, 1, 0)], 4)),
    )


BASE_MATRICES = _base_matrices()


def _canonical_matrix_form(data: tuple[tuple[int, ...], ...], cols: int):
    """Minimum over column permutations of the sorted row tuple."""
    best = None
    for perm in permutations(range(cols)):
        candidate = tuple(sorted(tuple(row[j] for j in perm) for row in data))
        if best is None or candidate < best:
            best = candidate
    return best


@lru_cache(maxsize=None)
def _base_canonical_form(base_index: int, r: int):
    base = BASE_MATRICES[base_index][1]
    extended = extend_matrix(base, r)
    return _canonical_matrix_form(extended.data, extended.cols)


def structural_mfmc_check(M: IncidenceMatrix) -> bool:
    """True iff M is, up to independent row and column permutations, an
    all-ones-column extension of one of the base matrices.

    Requires every row sum to equal cols-2 and the rows to be distinct and
    nonzero (M is then the incidence matrix of an (n-2)-uniform clutter,
    whose equal-size edges are automatically an antichain).  This is the
    theorem-exact predicate for "no duality gap at any objective"; the
    bounded alpha scan is the falsification tool.
    """
    n = M.cols
    for row in M.data:
        if sum(row) != n - 2:
            raise ValueError(
                f"row sum {sum(row)} differs from cols-2 = {n - 2}: {row!r}"
            )
        if not any(row):
            raise ValueError("zero row is not an edge")
    if len(set(M.data)) != M.rows:
        raise ValueError("rows must be pairwise distinct")
    if n > STRUCTURAL_COLUMN_CAP:
        raise ResourceLimitExceeded(
            f"structural check capped at {STRUCTURAL_COLUMN_CAP} columns"
        )
    form = _canonical_matrix_form(M.data, n)
    for index, (_, base) in enumerate(BASE_MATRICES):
        if base.rows == M.rows and base.cols <= n:
            if form == _base_canonical_form(index, n - base.cols):
                return True
    return False
