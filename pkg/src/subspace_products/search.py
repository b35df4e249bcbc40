"""Ground-truth minimum of dim<AB> by enumeration of subspace pairs.

Subspaces are enumerated through their RREF profiles (pivot column set plus
free entries), which visits every subspace exactly once.  The pair search
normalizes both subspaces to contain 1 -- multiplying A by a^-1 and B by b^-1
is an F_p-linear bijection that preserves dim<AB> -- and prunes with a proven
lower bound, so early exit never changes the reported minimum.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from multiprocessing import get_context
from typing import Any

from .fields import ExtensionField
from .kappa import divisors, kappa_rs
from .linalg import Subspace, _ech_insert_bits, _ech_insert_modp, span


def gaussian_binomial(n: int, r: int, p: int) -> int:
    """Number of r-dimensional subspaces of F_p^n."""
    if r < 0 or r > n:
        return 0
    num = den = 1
    for i in range(r):
        num *= p ** (n - i) - 1
        den *= p ** (r - i) - 1
    q, rem = divmod(num, den)
    if rem:
        raise AssertionError("Gaussian binomial did not divide exactly")
    return q


def pivot_profiles(n: int, r: int, containing_one: bool = False):
    """RREF profiles: (pivot columns, free cells).  Each r-dim subspace matches
    exactly one profile with one assignment of F_p values to the free cells."""
    for pivots in itertools.combinations(range(n), r):
        if containing_one and pivots[0] != 0:
            continue
        pivset = set(pivots)
        free = [(i, j)
                for i, pi in enumerate(pivots)
                for j in range(pi + 1, n)
                if j not in pivset and not (containing_one and i == 0)]
        yield pivots, free


def enumerate_subspaces(field: ExtensionField, r: int, containing_one: bool = False):
    """Yield each r-dimensional subspace exactly once, in deterministic
    profile order.  With containing_one, restrict to subspaces containing 1
    (the pivot-0 row is then forced to be the vector 1 itself)."""
    n = field.n
    if r < 0 or r > n:
        raise ValueError(f"r={r} out of range [0, {n}]")
    if r == 0:
        yield Subspace(field, (), ())
        return
    p = field.p
    if p == 2:
        for pivots, free in pivot_profiles(n, r, containing_one):
            base = [1 << pi for pi in pivots]
            for values in itertools.product((0, 1), repeat=len(free)):
                rows = base.copy()
                for (i, j), val in zip(free, values):
                    if val:
                        rows[i] |= 1 << j
                yield Subspace(field, tuple(rows), pivots)
    else:
        ppows = [p ** i for i in range(n)]
        for pivots, free in pivot_profiles(n, r, containing_one):
            base = [ppows[pi] for pi in pivots]
            for values in itertools.product(range(p), repeat=len(free)):
                rows = base.copy()
                for (i, j), val in zip(free, values):
                    if val:
                        rows[i] += val * ppows[j]
                yield Subspace(field, tuple(rows), pivots)


def random_subspace(field: ExtensionField, r: int, rng: random.Random,
                    containing_one: bool = False) -> Subspace:
    """Uniformly random r-dimensional subspace (spanning sets of full rank are
    equidistributed over subspaces)."""
    fixed = [1] if containing_one else []
    k = r - len(fixed)
    while True:
        sp = span(field, fixed + [rng.randrange(field.q) for _ in range(k)])
        if sp.dim == r:
            return sp


def product_dim_capped(field: ExtensionField, arows, brows, cap: int) -> int:
    """dim of span{a*b} computed incrementally; returns cap as soon as the
    running rank reaches it (the exact value is only needed below cap)."""
    mul = field.mul
    if field.p == 2:
        acc: list[int] = []
        dim = 0
        for x in arows:
            for y in brows:
                dim += _ech_insert_bits(acc, mul(x, y))
                if dim >= cap:
                    return cap
        return dim
    coeffs = field.coeffs
    p = field.p
    acc2: list[list[int]] = []
    pivots: list[int] = []
    for x in arows:
        for y in brows:
            if _ech_insert_modp(acc2, pivots, list(coeffs(mul(x, y))), p) and len(acc2) >= cap:
                return cap
    return len(acc2)


@dataclass(frozen=True)
class SearchOptions:
    budget: int = 10 ** 9          # max pairs examined before truncating
    workers: int = 1
    canonicalize: bool = True      # restrict to subspaces containing 1
    use_kappa_floor: bool = True   # prune at the proven lower bound


@dataclass(frozen=True)
class MuResult:
    value: int
    witness_a: Any                 # Subspace, or element tuple for groups
    witness_b: Any
    exhaustive: bool               # exact minimum (False when budget-truncated)
    pairs_examined: int


# Worker globals, set once per process by the pool initializer.
_W: dict = {}


def _init_worker(p, n, modulus, a_list, b_list, floor):
    _W["field"] = ExtensionField(p, n, modulus)
    _W["a"] = a_list
    _W["b"] = b_list
    _W["floor"] = floor


def _scan_chunk(bounds):
    start, end = bounds
    field = _W["field"]
    a_list, b_list, floor = _W["a"], _W["b"], _W["floor"]
    best = field.n + 1
    best_ai = best_bi = -1
    processed = 0
    for ai in range(start, end):
        ar = a_list[ai]
        for bi, br in enumerate(b_list):
            d = product_dim_capped(field, ar, br, best)
            processed += 1
            if d < best:
                best, best_ai, best_bi = d, ai, bi
                if best <= floor:
                    return best, best_ai, best_bi, processed
    return best, best_ai, best_bi, processed


def mu_exact(field: ExtensionField, r: int, s: int,
             options: SearchOptions | None = None) -> MuResult:
    """Exact minimum of dim<AB> over all pairs with dim A = r, dim B = s.

    The enumeration is truncated (exhaustive=False) if it would exceed the
    pair budget; otherwise the reported value is the exact minimum even when
    floor pruning stops the scan early.
    """
    opts = options or SearchOptions()
    n = field.n
    if not (1 <= r <= n and 1 <= s <= n):
        raise ValueError(f"r={r}, s={s} must lie in [1, {n}]")
    if opts.budget < 1:
        raise ValueError("budget must be >= 1")
    floor = (kappa_rs(r, s, divisors(n)).value if opts.use_kappa_floor
             else max(r, s))
    if opts.canonicalize:
        est_pairs = (gaussian_binomial(n - 1, r - 1, field.p)
                     * gaussian_binomial(n - 1, s - 1, field.p))
    else:
        est_pairs = gaussian_binomial(n, r, field.p) * gaussian_binomial(n, s, field.p)
    if est_pairs > opts.budget:
        return _mu_truncated(field, r, s, opts, floor)

    a_list = [sp.rows for sp in enumerate_subspaces(field, r, opts.canonicalize)]
    b_list = (a_list if s == r
              else [sp.rows for sp in enumerate_subspaces(field, s, opts.canonicalize)])

    if opts.workers <= 1:
        best, best_ai, best_bi, processed = _scan_serial(field, a_list, b_list, floor)
    else:
        best, best_ai, best_bi, processed = _scan_parallel(field, a_list, b_list,
                                                           floor, opts.workers)
    return MuResult(value=best,
                    witness_a=span(field, a_list[best_ai]),
                    witness_b=span(field, b_list[best_bi]),
                    exhaustive=True,
                    pairs_examined=processed)


def _scan_serial(field, a_list, b_list, floor):
    best = field.n + 1
    best_ai = best_bi = -1
    processed = 0
    for ai, ar in enumerate(a_list):
        for bi, br in enumerate(b_list):
            d = product_dim_capped(field, ar, br, best)
            processed += 1
            if d < best:
                best, best_ai, best_bi = d, ai, bi
                if best <= floor:
                    return best, best_ai, best_bi, processed
    return best, best_ai, best_bi, processed


def _scan_parallel(field, a_list, b_list, floor, workers):
    chunk = max(1, -(-len(a_list) // (workers * 4)))
    bounds = [(k, min(k + chunk, len(a_list))) for k in range(0, len(a_list), chunk)]
    best = field.n + 1
    best_ai = best_bi = -1
    processed = 0
    ctx = get_context()
    with ctx.Pool(workers, initializer=_init_worker,
                  initargs=(field.p, field.n, field.modulus, a_list, b_list, floor)) as pool:
        # Consuming chunk results in submission order makes the reduction
        # independent of scheduling.
        for value, ai, bi, done in pool.imap(_scan_chunk, bounds):
            processed += done
            if value < best:
                best, best_ai, best_bi = value, ai, bi
            if best <= floor:
                pool.terminate()
                break
    return best, best_ai, best_bi, processed


def _mu_truncated(field, r, s, opts, floor):
    """Deterministic prefix scan when the full pair count exceeds the budget.
    Hitting the proven floor still certifies the value as exact."""
    best = field.n + 1
    best_a = best_b = None
    processed = 0
    if opts.canonicalize:
        b_count = gaussian_binomial(field.n - 1, s - 1, field.p)
    else:
        b_count = gaussian_binomial(field.n, s, field.p)
    b_list = [sp.rows for sp in
              itertools.islice(enumerate_subspaces(field, s, opts.canonicalize),
                               min(b_count, opts.budget))]
    done = False
    for a_sp in enumerate_subspaces(field, r, opts.canonicalize):
        ar = a_sp.rows
        for br in b_list:
            d = product_dim_capped(field, ar, br, best)
            processed += 1
            if d < best:
                best, best_a, best_b = d, ar, br
            if processed >= opts.budget or best <= floor:
                done = True
                break
        if done:
            break
    return MuResult(value=best,
                    witness_a=span(field, best_a),
                    witness_b=span(field, best_b),
                    exhaustive=best <= floor,
                    pairs_examined=processed)


def mu_randomized(field: ExtensionField, r: int, s: int, trials: int,
                  seed: int) -> MuResult:
    """Minimum of dim<AB> over `trials` uniformly sampled pairs of subspaces
    containing 1.  Upper bound only; seed-reproducible."""
    n = field.n
    if not (1 <= r <= n and 1 <= s <= n):
        raise ValueError(f"r={r}, s={s} must lie in [1, {n}]")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    best = n + 1
    best_a = best_b = None
    for _ in range(trials):
        a_sp = random_subspace(field, r, rng, containing_one=True)
        b_sp = random_subspace(field, s, rng, containing_one=True)
        d = product_dim_capped(field, a_sp.rows, b_sp.rows, best)
        if d < best:
            best, best_a, best_b = d, a_sp, b_sp
    return MuResult(value=best, witness_a=best_a, witness_b=best_b,
                    exhaustive=False, pairs_examined=trials)
