"""Integer minimization kernel for the extremal bound on subspace products.

For an extension with admissible intermediate degrees D, the bound at
dimensions (r, s) is

    kappa(r, s) = min over h in D of (ceil(r/h) + ceil(s/h) - 1) * h.

Everything here is exact integer arithmetic; ceilings are computed by
ceiling division, never through floats.
"""

from __future__ import annotations

from dataclasses import dataclass

#: Sentinel for "infinite extension degree" in AdmissibleDegreeSet.n.
INFINITE = 0


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def f_h(r: int, s: int, h: int) -> int:
    """Per-degree term (ceil(r/h) + ceil(s/h) - 1) * h.

    All three arguments must be >= 1; the formula degenerates at zero and
    zero inputs are rejected outright.
    """
    if r < 1 or s < 1 or h < 1:
        raise ValueError(f"f_h requires positive integers, got r={r}, s={s}, h={h}")
    return (_ceil_div(r, h) + _ceil_div(s, h) - 1) * h


@dataclass(frozen=True)
class AdmissibleDegreeSet:
    """Sorted set of degrees of intermediate fields (or subgroup orders).

    ``n`` is the ambient degree, or ``INFINITE`` (0) when there is none.
    1 is always admissible, and for finite ``n`` every degree divides ``n``.
    """

    n: int
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"ambient degree must be >= 0, got {self.n}")
        ds = self.degrees
        if not ds:
            raise ValueError("degree set is empty")
        if ds[0] != 1:
            raise ValueError("degree set must contain 1")
        if any(a >= b for a, b in zip(ds, ds[1:])):
            raise ValueError(f"degrees must be strictly ascending: {ds}")
        if self.n != INFINITE:
            bad = [h for h in ds if self.n % h != 0]
            if bad:
                raise ValueError(f"degrees {bad} do not divide n={self.n}")


def divisors(n: int) -> AdmissibleDegreeSet:
    """All divisors of n, as the degree set of a full subfield lattice."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    ds = [d for d in range(1, n + 1) if n % d == 0]
    return AdmissibleDegreeSet(n=n, degrees=tuple(ds))


@dataclass(frozen=True)
class KappaQuery:
    r: int
    s: int
    degrees: AdmissibleDegreeSet

    def __post_init__(self) -> None:
        if self.r < 1 or self.s < 1:
            raise ValueError(f"r and s must be >= 1, got r={self.r}, s={self.s}")
        n = self.degrees.n
        if n != INFINITE and (self.r > n or self.s > n):
            raise ValueError(f"r={self.r}, s={self.s} exceed ambient degree n={n}")


@dataclass(frozen=True)
class KappaResult:
    """Minimum value, the smallest degree h0 attaining it, and the ceilings."""

    value: int
    h0: int
    r0: int
    s0: int


def kappa(query: KappaQuery) -> KappaResult:
    """Minimize f_h over the admissible degrees.

    Ties are broken toward the smallest minimizing h, so downstream
    constructions land in the cheapest intermediate field.
    """
    r, s = query.r, query.s
    best = -1
    best_h = 0
    for h in query.degrees.degrees:
        v = f_h(r, s, h)
        if best < 0 or v < best:
            best, best_h = v, h
    return KappaResult(value=best, h0=best_h, r0=_ceil_div(r, best_h), s0=_ceil_div(s, best_h))


def kappa_rs(r: int, s: int, degrees: AdmissibleDegreeSet) -> KappaResult:
    """Shorthand for kappa(KappaQuery(r, s, degrees))."""
    return kappa(KappaQuery(r, s, degrees))


def kappa_table(n: int, degrees: AdmissibleDegreeSet | None = None) -> list[list[int]]:
    """n x n matrix with entry (r, s) = kappa(r, s); symmetric by construction."""
    if degrees is None:
        degrees = divisors(n)
    if degrees.n != n:
        raise ValueError(f"degree set is for n={degrees.n}, table requested for n={n}")
    return [[kappa_rs(r, s, degrees).value for s in range(1, n + 1)] for r in range(1, n + 1)]
