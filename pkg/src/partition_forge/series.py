"""Exact coefficient engines for the P/Q product families.

Two recurrences do all the work, both O(N^2) in exact integer (or
rational) arithmetic:

* the exponential recurrence for F = exp(G) with G_L = W(L)/L, scaled
  so that the stored value is the numerator p_n = n! * [z^n] F(z):

      p_m = sum_{k=1..m} W(k) * (m-1)!/(m-k)! * p_{m-k},   p_0 = 1,

  where the falling-factorial ratio is always an integer;

* the log-derivative recurrence for the ordinary (j = 0) products
  F = prod (1 - z^m)^(-psi(m)) and prod (1 + z^m)^psi(m):

      n * F_n = sum_{k=1..n} c_k F_{n-k},   F_0 = 1,

  with c_k = sum_{d|k} d*psi(d) for P and the sign-alternating analogue
  for Q.  The division by n is exact; an assertion guards it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .divisors import (
    AdmissibleTriple,
    DivisorTable,
    as_triple,
    cycle_weight_table,
    cycle_weight_weighted,
    psi_table,
)

KIND_EGF = "egf-numerator"
KIND_OGF = "ogf"


@dataclass(frozen=True)
class CoeffSequence:
    """An exact coefficient run values[0..N] with its provenance tags."""

    triple: AdmissibleTriple
    form: str                 # "P", "Q" or "weighted"
    kind: str                 # KIND_EGF or KIND_OGF
    values: tuple
    v: Fraction | None = field(default=None)

    def __post_init__(self):
        if self.kind not in (KIND_EGF, KIND_OGF):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.form not in ("P", "Q", "weighted"):
            raise ValueError(f"unknown form {self.form!r}")
        if not self.values or self.values[0] != 1:
            raise ValueError("values[0] must be 1 (empty structure)")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]


def _check_form(form: str):
    if form not in ("P", "Q"):
        raise ValueError(f"form must be 'P' or 'Q', got {form!r}")


def _exp_numerators(weights, zero, one, upto: int) -> list:
    """Run the exponential recurrence; generic over int and Fraction."""
    p = [zero] * (upto + 1)
    p[0] = one
    for m in range(1, upto + 1):
        acc = zero
        ff = 1  # (m-1)!/(m-k)!, updated incrementally
        for k in range(1, m + 1):
            w = weights[k]
            if w:
                acc += w * ff * p[m - k]
            ff *= m - k
        p[m] = acc
    return p


def egf_coeffs(t, form: str, upto: int) -> CoeffSequence:
    """Numerators p_n = n! * [z^n] F(z) for n = 0..upto, exact."""
    t = as_triple(t)
    _check_form(form)
    if upto < 0:
        raise ValueError("upto must be >= 0")
    weights = cycle_weight_table(t, form, upto) if upto >= 1 else [0, 0]
    values = _exp_numerators(weights, 0, 1, upto)
    return CoeffSequence(t, form, KIND_EGF, tuple(values))


def egf_coeffs_weighted(t, v, upto: int) -> CoeffSequence:
    """Numerators of the v-weighted family, exact rational arithmetic.

    The weight of a cycle of length L picks up a factor v^(l+1) per
    l-fold winding, so W_v(k) = sum_{d|k} v^(k/d+1) chi(d).  v = 1
    recovers the P engine and v = -1 the Q engine.
    """
    t = as_triple(t)
    if upto < 0:
        raise ValueError("upto must be >= 0")
    v = Fraction(v)
    weights = [Fraction(0)] * (upto + 1)
    for k in range(1, upto + 1):
        weights[k] = cycle_weight_weighted(t, k, v)
    values = _exp_numerators(weights, Fraction(0), Fraction(1), upto)
    return CoeffSequence(t, "weighted", KIND_EGF, tuple(values), v=v)


def ogf_coeffs_euler(t, form: str, upto: int) -> CoeffSequence:
    """Ordinary coefficients [z^n] F(z) for a j = 0 triple, exact."""
    t = as_triple(t)
    _check_form(form)
    if t.j != 0:
        raise ValueError(f"ordinary coefficients require j = 0 (triple {t})")
    if upto < 0:
        raise ValueError("upto must be >= 0")
    dt = DivisorTable(max(upto, 1))
    psis = psi_table(t, upto, dt) if upto >= 1 else [0]
    c = [0] * (upto + 1)
    for k in range(1, upto + 1):
        if form == "P":
            c[k] = sum(d * psis[d] for d in dt.divisors(k))
        else:
            c[k] = sum((-1) ** (k // d + 1) * d * psis[d] for d in dt.divisors(k))
    values = [0] * (upto + 1)
    values[0] = 1
    for n in range(1, upto + 1):
        s = 0
        for k in range(1, n + 1):
            ck = c[k]
            if ck:
                s += ck * values[n - k]
        q, r = divmod(s, n)
        assert r == 0, f"inexact division at n={n} for triple {t}, form {form}"
        values[n] = q
    return CoeffSequence(t, form, KIND_OGF, tuple(values))


def to_bfile(seq: CoeffSequence, start_index: int = 0) -> str:
    """Render a sequence as b-file text: one ascii 'index value' pair per line."""
    lines = []
    for n, value in enumerate(seq.values):
        lines.append(f"{start_index + n} {value}")
    return "\n".join(lines) + "\n"


def to_json(seq: CoeffSequence) -> str:
    """JSON rendering; big integers (and rationals) travel as decimal strings."""
    payload = {
        "triple": [seq.triple.i, seq.triple.j, seq.triple.k],
        "form": seq.form,
        "kind": seq.kind,
        "values": [str(value) for value in seq.values],
    }
    if seq.v is not None:
        payload["v"] = str(seq.v)
    return json.dumps(payload)
