"""Exact arithmetic on monomials and squarefree-generated monomial ideals.

A monomial is an exponent tuple over a fixed ordered variable set
(x1, ..., xn); the all-zeros tuple is the unit monomial 1.  Ideals are
stored by their unique minimal generating set, sorted lexicographically,
so equal ideals have identical representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import DimensionMismatch, ResourceLimitExceeded

Monomial = tuple[int, ...]

# Inclusion-minimal variable support of a monomial ideal generator set;
# vertices/variables are 1-based.
PrimeSupport = frozenset[int]

_MINIMAL_PRIMES_VAR_CAP = 20


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff a | b, i.e. a <= b componentwise."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def is_squarefree(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def _support_mask(m: Monomial) -> int:
    mask = 0
    for i, e in enumerate(m):
        if e:
            mask |= 1 << i
    return mask


def minimal_generators(candidates) -> tuple[Monomial, ...]:
    """Divisibility antichain of a candidate set, sorted lexicographically.

    If the unit monomial is present the result is (1,); an empty input
    yields ().
    """
    uniq = sorted(set(candidates), key=lambda m: (sum(m), m))
    kept: list[tuple[int, int, Monomial]] = []  # (degree, support mask, monomial)
    for m in uniq:
        d = sum(m)
        mask = _support_mask(m)
        dominated = False
        for dk, km, k in kept:
            # kept is degree-sorted; equal-degree distinct monomials never divide
            if dk >= d:
                break
            if km & ~mask:
                continue
            if divides(k, m):
                dominated = True
                break
        if not dominated:
            kept.append((d, mask, m))
    return tuple(sorted(m for _, _, m in kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in n variables, held by its minimal generating set.

    The empty generator tuple is the zero ideal; the single unit monomial
    is the unit ideal.  Construct through :func:`minimalize` (or the
    operations below) so the antichain/sort invariants hold.
    """

    n: int
    gens: tuple[Monomial, ...]

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_squarefree(self) -> bool:
        return all(is_squarefree(g) for g in self.gens)

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, ((0,) * n,))

    def to_json_dict(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "MonomialIdeal":
        n = data["n"]
        if not isinstance(n, int) or n < 0:
            raise ValueError("variable count must be a nonnegative integer")
        gens = []
        for g in data["gens"]:
            if len(g) != n:
                raise DimensionMismatch(
                    f"exponent vector {g!r} has length {len(g)}, expected {n}"
                )
            if any(not isinstance(e, int) or e < 0 for e in g):
                raise ValueError(f"exponents must be nonnegative integers: {g!r}")
            gens.append(tuple(g))
        return minimalize(gens, n)


def _check_same_n(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.n != J.n:
        raise DimensionMismatch(f"ideals live in {I.n} and {J.n} variables")


def minimalize(gens, n: int) -> MonomialIdeal:
    """Canonical ideal generated by `gens`: the divisibility antichain."""
    gens = [tuple(g) for g in gens]
    for g in gens:
        if len(g) != n:
            raise DimensionMismatch(
                f"exponent vector of length {len(g)} in a {n}-variable ring"
            )
        if any(e < 0 for e in g):
            raise ValueError(f"negative exponent in {g!r}")
    return MonomialIdeal(n, minimal_generators(gens))


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Product ideal; the zero ideal absorbs, the unit ideal is the identity."""
    _check_same_n(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(I.n)
    cands = {monomial_mul(g, h) for g in I.gens for h in J.gens}
    return MonomialIdeal(I.n, minimal_generators(cands))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """k-th ordinary power by repeated multiplication, minimalizing each step."""
    if k < 1:
        raise ValueError(f"power requires k >= 1, got {k}")
    result = I
    for _ in range(k - 1):
        result = multiply(result, I)
    return result


def contains_monomial(I: MonomialIdeal, m: Monomial) -> bool:
    """True iff m lies in I, i.e. some generator divides m."""
    m = tuple(m)
    if len(m) != I.n:
        raise DimensionMismatch(f"monomial of length {len(m)} vs n={I.n}")
    return any(divides(g, m) for g in I.gens)


def ideals_equal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _check_same_n(I, J)
    return I.gens == J.gens


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise lcm of generators.

    Generators already contained in the other ideal pass through directly;
    only the remaining pairs need an lcm.  Both routes land in the same
    minimal antichain.
    """
    _check_same_n(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(I.n)
    cands: list[Monomial] = []
    hard_i = []
    for g in I.gens:
        if contains_monomial(J, g):
            cands.append(g)
        else:
            hard_i.append(g)
    hard_j = []
    for h in J.gens:
        if contains_monomial(I, h):
            cands.append(h)
        else:
            hard_j.append(h)
    for g in hard_i:
        for h in hard_j:
            cands.append(monomial_lcm(g, h))
    return MonomialIdeal(I.n, minimal_generators(cands))


def _require_proper_squarefree(I: MonomialIdeal, op: str) -> None:
    if I.is_zero or I.is_unit:
        raise ValueError(f"{op} requires a nonzero proper ideal")
    if not I.is_squarefree:
        raise ValueError(f"{op} requires squarefree generators")


def minimal_primes(I: MonomialIdeal) -> tuple[PrimeSupport, ...]:
    """Inclusion-minimal variable sets meeting the support of every generator.

    For a squarefree ideal these are exactly its minimal primes (equivalently
    the minimal vertex covers of the support hypergraph).  Brute force over
    variable subsets; returned sorted by (size, variables).
    """
    _require_proper_squarefree(I, "minimal_primes")
    n = I.n
    if n > _MINIMAL_PRIMES_VAR_CAP:
        raise ResourceLimitExceeded(f"minimal_primes capped at n={_MINIMAL_PRIMES_VAR_CAP}")
    supports = [_support_mask(g) for g in I.gens]
    covers = [
        mask
        for mask in range(1, 1 << n)
        if all(mask & s for s in supports)
    ]
    cover_set = set(covers)
    minimal = []
    for mask in covers:
        if all(
            (mask ^ (1 << i)) not in cover_set
            for i in range(n)
            if mask >> i & 1
        ):
            minimal.append(mask)
    sets = [frozenset(i + 1 for i in range(n) if m >> i & 1) for m in minimal]
    return tuple(sorted(sets, key=lambda A: (len(A), sorted(A))))


def prime_power_contains(A: PrimeSupport, k: int, m: Monomial) -> bool:
    """Membership of m in the k-th power of the prime generated by A's variables.

    Holds iff the exponents of m summed over A reach k.
    """
    if not A:
        raise ValueError("prime support must be nonempty")
    if k < 1:
        raise ValueError(f"prime_power_contains requires k >= 1, got {k}")
    if any(v < 1 or v > len(m) for v in A):
        raise DimensionMismatch(f"support {sorted(A)} out of range for n={len(m)}")
    return sum(m[v - 1] for v in A) >= k


def _prime_power_ideal(n: int, A: PrimeSupport, k: int) -> MonomialIdeal:
    """k-th power of the variable prime on A: all degree-k monomials in A."""
    idx = sorted(v - 1 for v in A)
    gens = []
    for combo in combinations_with_replacement(idx, k):
        m = [0] * n
        for i in combo:
            m[i] += 1
        gens.append(tuple(m))
    return MonomialIdeal(n, tuple(sorted(gens)))


def symbolic_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """k-th symbolic power: intersection of the k-th powers of the minimal primes."""
    if k < 1:
        raise ValueError(f"symbolic_power requires k >= 1, got {k}")
    _require_proper_squarefree(I, "symbolic_power")
    result: MonomialIdeal | None = None
    for A in minimal_primes(I):
        P = _prime_power_ideal(I.n, A, k)
        result = P if result is None else intersect(result, P)
    assert result is not None
    return result


@dataclass(frozen=True)
class SimisReport:
    """Outcome of comparing the k-th symbolic and ordinary powers.

    `witness` is the lexicographically first minimal generator of the
    symbolic power that the ordinary power misses; absent iff equal.
    """

    k: int
    equal: bool
    witness: Monomial | None = None

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "equal": self.equal,
            "witness": list(self.witness) if self.witness is not None else None,
        }


def is_simis(I: MonomialIdeal, k: int) -> SimisReport:
    """Decide whether the k-th symbolic and ordinary powers of I coincide.

    Zero and unit ideals trivially report equal.  Raises if the ordinary
    power ever escapes the symbolic one (that would falsify the
    implementation, never the mathematics).
    """
    if k < 1:
        raise ValueError(f"is_simis requires k >= 1, got {k}")
    if I.is_zero or I.is_unit:
        return SimisReport(k, True)
    if not I.is_squarefree:
        raise ValueError("is_simis requires squarefree generators")
    P = power(I, k)
    primes = minimal_primes(I)
    for g in P.gens:
        if not all(prime_power_contains(A, k, g) for A in primes):
            raise RuntimeError(
                f"internal invariant violated: ordinary power generator {g} "
                f"escapes the symbolic power at k={k}"
            )
    S = symbolic_power(I, k)
    if P.gens == S.gens:
        return SimisReport(k, True)
    for g in S.gens:  # gens are lex-sorted, so the first miss is the witness
        if not contains_monomial(P, g):
            return SimisReport(k, False, g)
    raise RuntimeError("internal invariant violated: unequal ideals with no witness")
