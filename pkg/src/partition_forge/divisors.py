"""Divisor lists, k-fold divisor counts and the weight functions chi/psi.

Everything downstream (the coefficient recurrences, the brute-force
counters) is driven by the two arithmetic weights computed here:

* ``chi(t, n)``  -- weight of the cycle-sum form, defined for every
  admissible triple ``t = (i, j, k)``,
* ``psi(t, n)``  -- weight of the ordinary product form, defined only
  when ``j = 0``.

All values are exact Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


@dataclass(frozen=True)
class AdmissibleTriple:
    """Parameter triple (i, j, k) of nonnegative integers with i+j+k >= 1."""

    i: int
    j: int
    k: int

    def __post_init__(self):
        for name in ("i", "j", "k"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")
        if self.i + self.j + self.k < 1:
            raise ValueError("triple must satisfy i + j + k >= 1")

    def __iter__(self):
        return iter((self.i, self.j, self.k))

    def __str__(self):
        return f"({self.i},{self.j},{self.k})"

    @classmethod
    def parse(cls, text: str) -> "AdmissibleTriple":
        """Parse a triple from a string like ``"0,1,0"``."""
        parts = text.split(",")
        if len(parts) != 3:
            raise ValueError(f"expected three comma-separated integers, got {text!r}")
        try:
            i, j, k = (int(p.strip()) for p in parts)
        except ValueError:
            raise ValueError(f"expected three comma-separated integers, got {text!r}") from None
        return cls(i, j, k)


def as_triple(t) -> AdmissibleTriple:
    """Coerce a 3-tuple or AdmissibleTriple to an AdmissibleTriple."""
    if isinstance(t, AdmissibleTriple):
        return t
    i, j, k = t
    return AdmissibleTriple(i, j, k)


def divisors_of(n: int) -> list[int]:
    """Strictly increasing list of the divisors of n (n >= 1), by trial division."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


class DivisorTable:
    """Sieved divisor lists for every n up to a fixed limit.

    Built once in O(N log N); lookups beyond the limit fall back to
    trial division so callers never need to size the table exactly.
    """

    def __init__(self, limit: int):
        if limit < 1:
            raise ValueError("limit must be >= 1")
        self.limit = limit
        lists: list[list[int]] = [[] for _ in range(limit + 1)]
        for d in range(1, limit + 1):
            for m in range(d, limit + 1, d):
                lists[m].append(d)
        self._lists = lists

    def divisors(self, n: int) -> list[int]:
        if n <= self.limit:
            if n < 1:
                raise ValueError(f"n must be a positive integer, got {n!r}")
            return self._lists[n]
        return divisors_of(n)


@lru_cache(maxsize=None)
def tau_k(k: int, n: int) -> int:
    """Number of ordered k-tuples of positive integers with product n.

    tau_0 and tau_1 are both the constant 1 by convention; for k >= 1
    the recursion tau_{k+1}(n) = sum_{d|n} tau_k(n/d) applies.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if k <= 1:
        return 1
    return sum(tau_k(k - 1, n // d) for d in divisors_of(n))


@lru_cache(maxsize=None)
def tau_k_table(k: int, limit: int) -> tuple[int, ...]:
    """tau_k(n) for n = 0..limit (index 0 is a placeholder 1).

    Computed by k-1 Dirichlet convolutions with the constant-1 sequence,
    cached per (k, limit).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    values = [1] * (limit + 1)
    for _ in range(max(k - 1, 0)):
        nxt = [0] * (limit + 1)
        nxt[0] = 1
        for d in range(1, limit + 1):
            for m in range(d, limit + 1, d):
                nxt[m] += values[m // d]
        values = nxt
    return tuple(values)


def chi(t, n: int) -> int:
    """Cycle-sum weight chi(n) for an admissible triple.

    Dispatches on which of i, j, k are nonzero; exactly one of the seven
    branches below applies to any admissible triple.
    """
    t = as_triple(t)
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    i, j, k = t
    divs = divisors_of(n)
    if i >= 1 and j == 0 and k == 0:
        return n * n * tau_k(i, n)
    if i >= 1 and j == 0 and k >= 1:
        return n * sum(p * tau_k(i, p) * tau_k(k, n // p) for p in divs)
    if i >= 1 and j >= 1 and k == 0:
        return sum(p * p * tau_k(i, p) * tau_k(j, n // p) for p in divs)
    if i >= 1 and j >= 1 and k >= 1:
        total = 0
        for p in divs:
            rest = n // p
            for q in divisors_of(rest):
                total += p * p * q * tau_k(i, p) * tau_k(k, q) * tau_k(j, rest // q)
        return total
    if i == 0 and j == 0 and k >= 1:
        return n * tau_k(k, n)
    if i == 0 and j >= 1 and k >= 1:
        return sum(p * tau_k(k, p) * tau_k(j, n // p) for p in divs)
    # (0, j >= 1, 0)
    return tau_k(j, n)


def psi(t, n: int) -> int:
    """Ordinary product weight psi(n); defined only for triples with j = 0."""
    t = as_triple(t)
    if t.j != 0:
        raise ValueError(f"psi is undefined for j > 0 (triple {t})")
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    i, _, k = t
    if i >= 1 and k == 0:
        return n * tau_k(i, n)
    if i == 0 and k >= 1:
        return tau_k(k, n)
    # (i >= 1, 0, k >= 1)
    return sum(p * tau_k(i, p) * tau_k(k, n // p) for p in divisors_of(n))


def chi_table(t, limit: int, table: DivisorTable | None = None) -> list[int]:
    """chi(n) for n = 1..limit (index 0 unused), sieve-backed."""
    t = as_triple(t)
    dt = table if table is not None and table.limit >= limit else DivisorTable(limit)
    i, j, k = t
    ti = tau_k_table(i, limit) if i >= 1 else None
    tj = tau_k_table(j, limit) if j >= 1 else None
    tk = tau_k_table(k, limit) if k >= 1 else None
    out = [0] * (limit + 1)
    for n in range(1, limit + 1):
        divs = dt.divisors(n)
        if i >= 1 and j == 0 and k == 0:
            v = n * n * ti[n]
        elif i >= 1 and j == 0 and k >= 1:
            v = n * sum(p * ti[p] * tk[n // p] for p in divs)
        elif i >= 1 and j >= 1 and k == 0:
            v = sum(p * p * ti[p] * tj[n // p] for p in divs)
        elif i >= 1 and j >= 1 and k >= 1:
            v = 0
            for p in divs:
                rest = n // p
                for q in dt.divisors(rest):
                    v += p * p * q * ti[p] * tk[q] * tj[rest // q]
        elif i == 0 and j == 0 and k >= 1:
            v = n * tk[n]
        elif i == 0 and j >= 1 and k >= 1:
            v = sum(p * tk[p] * tj[n // p] for p in divs)
        else:
            v = tj[n]
        out[n] = v
    return out


def psi_table(t, limit: int, table: DivisorTable | None = None) -> list[int]:
    """psi(n) for n = 1..limit (index 0 unused); requires j = 0."""
    t = as_triple(t)
    if t.j != 0:
        raise ValueError(f"psi is undefined for j > 0 (triple {t})")
    dt = table if table is not None and table.limit >= limit else DivisorTable(limit)
    i, _, k = t
    out = [0] * (limit + 1)
    if i >= 1 and k == 0:
        ti = tau_k_table(i, limit)
        for n in range(1, limit + 1):
            out[n] = n * ti[n]
    elif i == 0 and k >= 1:
        tk = tau_k_table(k, limit)
        for n in range(1, limit + 1):
            out[n] = tk[n]
    else:
        ti = tau_k_table(i, limit)
        tk = tau_k_table(k, limit)
        for n in range(1, limit + 1):
            out[n] = sum(p * ti[p] * tk[n // p] for p in dt.divisors(n))
    return out


def cycle_weight(t, length: int, form: str = "P") -> int:
    """Log-series weight W(L): the coefficient of z^L/L in log F(z).

    W_P(L) = sum_{d|L} chi(d); the Q variant alternates the sign with
    the cofactor parity, W_Q(L) = sum_{d|L} (-1)^(L/d+1) chi(d).
    """
    t = as_triple(t)
    if length < 1:
        raise ValueError(f"length must be a positive integer, got {length!r}")
    if form not in ("P", "Q"):
        raise ValueError(f"form must be 'P' or 'Q', got {form!r}")
    divs = divisors_of(length)
    if form == "P":
        return sum(chi(t, d) for d in divs)
    return sum((-1) ** (length // d + 1) * chi(t, d) for d in divs)


def cycle_weight_weighted(t, length: int, v: Fraction) -> Fraction:
    """General-v weight: sum_{d|L} v^(L/d+1) chi(d), exact rational."""
    t = as_triple(t)
    if length < 1:
        raise ValueError(f"length must be a positive integer, got {length!r}")
    v = Fraction(v)
    return sum((v ** (length // d + 1)) * chi(t, d) for d in divisors_of(length))


def cycle_weight_table(t, form: str, limit: int) -> list[int]:
    """W(L) for L = 1..limit (index 0 unused), built from one chi sieve."""
    if form not in ("P", "Q"):
        raise ValueError(f"form must be 'P' or 'Q', got {form!r}")
    dt = DivisorTable(limit)
    chis = chi_table(t, limit, dt)
    out = [0] * (limit + 1)
    for length in range(1, limit + 1):
        if form == "P":
            out[length] = sum(chis[d] for d in dt.divisors(length))
        else:
            out[length] = sum(
                (-1) ** (length // d + 1) * chis[d] for d in dt.divisors(length)
            )
    return out
