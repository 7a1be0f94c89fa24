"""Brute-force counters used to cross-validate the fast recurrences.

These stay deliberately naive: a sum over cycle types for the
exponential numerators, and factor-by-factor truncated product
expansion for the ordinary coefficients.  Both are capped so they
remain obviously correct and quick enough for CI; the cap on the
cycle-type sum can be raised with PARTITION_FORGE_ORACLE_BOUND.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import factorial

from .divisors import as_triple, cycle_weight, psi_table

CYCLE_SUM_BOUND = 40
PRODUCT_BOUND = 200
_BOUND_ENV = "PARTITION_FORGE_ORACLE_BOUND"


def _cycle_sum_bound() -> int:
    raw = os.environ.get(_BOUND_ENV)
    if raw is None:
        return CYCLE_SUM_BOUND
    try:
        return max(int(raw), CYCLE_SUM_BOUND)
    except ValueError:
        return CYCLE_SUM_BOUND


@dataclass(frozen=True)
class CycleType:
    """A partition of n read as the cycle lengths of a permutation."""

    parts: tuple[int, ...]  # weakly decreasing, sum n

    @property
    def size(self) -> int:
        return sum(self.parts)

    def multiplicity(self, m: int) -> int:
        return self.parts.count(m)

    def symmetry_factor(self) -> int:
        """z = prod_m m^(c_m) c_m!; n!/z permutations share this cycle type."""
        z = 1
        run_val, run_len = 0, 0
        for part in self.parts:
            if part == run_val:
                run_len += 1
            else:
                run_val, run_len = part, 1
            z *= part * run_len
        return z

    def permutation_count(self) -> int:
        return factorial(self.size) // self.symmetry_factor()


def cycle_types(n: int):
    """Yield every CycleType of size n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield CycleType(())
        return
    parts: list[int] = []

    def descend(remaining, largest):
        if remaining == 0:
            yield CycleType(tuple(parts))
            return
        for part in range(min(remaining, largest), 0, -1):
            parts.append(part)
            yield from descend(remaining - part, part)
            parts.pop()

    yield from descend(n, n)


def cycle_type_sum(t, form: str, n: int) -> int:
    """Independent count of the exponential numerator p_n (or q_n).

    Sums n!/z over all cycle types, each weighted by the product of the
    per-cycle weights W(length).  Equals n! * [z^n] exp(sum W(L) z^L / L).
    """
    t = as_triple(t)
    if form not in ("P", "Q"):
        raise ValueError(f"form must be 'P' or 'Q', got {form!r}")
    if n < 0:
        raise ValueError("n must be >= 0")
    bound = _cycle_sum_bound()
    if n > bound:
        raise ValueError(
            f"n={n} exceeds the cycle-sum oracle bound {bound} "
            f"(raise it with {_BOUND_ENV})"
        )
    if n == 0:
        return 1
    weights = [0] + [cycle_weight(t, length, form) for length in range(1, n + 1)]
    total = 0
    for ct in cycle_types(n):
        w = 1
        for part in ct.parts:
            w *= weights[part]
        if w:
            total += ct.permutation_count() * w
    return total


def product_expand(t, form: str, upto: int) -> list[int]:
    """Truncated expansion of the ordinary (j = 0) product, factor by factor.

    Each factor (1 - z^m)^(-1) is applied psi(m) times by prefix-sum
    convolution; each factor (1 + z^m) likewise, in reverse order.
    """
    t = as_triple(t)
    if form not in ("P", "Q"):
        raise ValueError(f"form must be 'P' or 'Q', got {form!r}")
    if t.j != 0:
        raise ValueError(f"product expansion requires j = 0 (triple {t})")
    if upto < 0:
        raise ValueError("upto must be >= 0")
    if upto > PRODUCT_BOUND:
        raise ValueError(f"upto={upto} exceeds the product oracle bound {PRODUCT_BOUND}")
    coeffs = [0] * (upto + 1)
    coeffs[0] = 1
    if upto == 0:
        return coeffs
    psis = psi_table(t, upto)
    for m in range(1, upto + 1):
        for _ in range(psis[m]):
            if form == "P":
                for idx in range(m, upto + 1):
                    coeffs[idx] += coeffs[idx - m]
            else:
                for idx in range(upto, m - 1, -1):
                    coeffs[idx] += coeffs[idx - m]
    return coeffs
