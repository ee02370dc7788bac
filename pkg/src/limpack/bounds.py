"""Closed-form bounds on the k-limited packing number L_k(G).

Everything involving a fractional power of a binomial coefficient is computed
in the log domain; exact binomials come from Pascal's triangle on Python ints.
Functions return ``None`` when their precondition on (n, Delta, delta, k) fails.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import InputError
from .graph import Graph, is_connected, max_degree, min_degree

LOWER = "lower"
UPPER = "upper"
EXACT = "exact"


@lru_cache(maxsize=4096)
def exact_binomial(a: int, b: int) -> int:
    """C(a, b) by Pascal's triangle, keeping one row of length b + 1.

    C(a, b) = 0 when b > a.
    """
    if a < 0 or b < 0:
        raise InputError(f"binomial arguments must be non-negative, got ({a}, {b})")
    if b > a:
        return 0
    b = min(b, a - b)
    row = [1] + [0] * b
    for i in range(1, a + 1):
        for j in range(min(i, b), 0, -1):
            row[j] += row[j - 1]
    return row[b]


def log_binomial(a: int, b: int) -> float:
    """Natural log of C(a, b); raises :class:`InputError` when C(a, b) = 0."""
    if b > a:
        raise InputError(f"log of C({a}, {b}) = 0 is undefined")
    return math.log(exact_binomial(a, b))


def _check_thm1(delta: int, k: int) -> bool:
    return 1 <= k <= delta


def thm1_coefficient(delta: int, k: int) -> float | None:
    """k / (C(Delta+1, k+1)^(1/k) (1+k)^(1+1/k)), the lower bound divided by n."""
    if not _check_thm1(delta, k):
        return None
    log_c = log_binomial(delta + 1, k + 1)
    return math.exp(math.log(k) - log_c / k - (1 + 1 / k) * math.log1p(k))


def thm1_coefficient_rewritten(delta: int, k: int) -> float | None:
    """Same quantity as :func:`thm1_coefficient`, via k / ((k+1) (C(Delta,k)(Delta+1))^(1/k))."""
    if not _check_thm1(delta, k):
        return None
    log_inner = log_binomial(delta, k) + math.log(delta + 1)
    return math.exp(math.log(k) - math.log1p(k) - log_inner / k)


def lower_bound_thm1(n: int, delta: int, k: int) -> float | None:
    coef = thm1_coefficient(delta, k)
    return None if coef is None else coef * n


def lower_bound_cor1(n: int, delta: int, k: int) -> float | None:
    """k n / (e (1+Delta)^(1+1/k)); weaker than :func:`lower_bound_thm1`."""
    if not _check_thm1(delta, k):
        return None
    return k * n * math.exp(-1.0 - (1 + 1 / k) * math.log1p(delta))


def upper_bound_fraction(n: int, k: int) -> float:
    """k n / (k+1). Valid for connected graphs with minimum degree >= k."""
    return k * n / (k + 1)


def fraction_bound_applies(g: Graph, k: int) -> bool:
    return g.n >= 1 and min_degree(g) >= k and is_connected(g)


def upper_bound_classical(n: int, delta_min: int, k: int) -> float:
    """k n (ln(delta+1) + 1) / (delta+1), from L_k <= k * gamma and the classical domination bound."""
    return k * n * (math.log1p(delta_min) + 1) / (delta_min + 1)


def cor2_coefficient(delta_min: int, k: int) -> float | None:
    """1 - d' / (C(delta+1, k-1)^(1/d') (1+d')^(1+1/d')) with d' = delta - k + 1."""
    if not 1 <= k <= delta_min:
        return None
    dp = delta_min - k + 1
    log_b = log_binomial(delta_min + 1, k - 1)
    return 1.0 - math.exp(math.log(dp) - log_b / dp - (1 + 1 / dp) * math.log1p(dp))


def upper_bound_cor2(n: int, delta_min: int, k: int) -> float | None:
    coef = cor2_coefficient(delta_min, k)
    return None if coef is None else coef * n


def sharpness_ratio(k: int) -> float:
    """(k+1)^(-1/k): the lower-bound coefficient for k = Delta on a regular graph over k/(k+1)."""
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    return math.exp(-math.log1p(k) / k)


@dataclass
class BoundEntry:
    name: str
    kind: str
    value: float | None
    applicable: bool
    precondition_note: str


@dataclass
class BoundReport:
    n: int
    delta_max: int
    delta_min: int
    k: int
    connected: bool
    entries: list[BoundEntry] = field(default_factory=list)

    def get(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def applicable(self, kind: str) -> list[BoundEntry]:
        return [e for e in self.entries if e.applicable and e.kind == kind]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "delta_max": self.delta_max,
            "delta_min": self.delta_min,
            "k": self.k,
            "connected": self.connected,
            "entries": [
                {
                    "name": e.name,
                    "kind": e.kind,
                    "value": e.value,
                    "coefficient": None if e.value is None or self.n == 0 else e.value / self.n,
                    "applicable": e.applicable,
                    "precondition": e.precondition_note,
                }
                for e in self.entries
            ],
        }


def bound_report(g: Graph, k: int, ktuple_number: int | None = None) -> BoundReport:
    """Evaluate every bound for ``(g, k)`` and flag which ones apply.

    ``ktuple_number`` is an exact gamma_{x k}(G) if the caller computed one; it
    adds the ``ktuple_upper`` entry.
    """
    if g.n < 1:
        raise InputError("bound report needs at least one vertex")
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    n = g.n
    dmax, dmin = max_degree(g), min_degree(g)
    connected = is_connected(g)
    rep = BoundReport(n, dmax, dmin, k, connected)
    add = rep.entries.append

    thm1_ok = dmax >= k
    add(BoundEntry("thm1_lower", LOWER, lower_bound_thm1(n, dmax, k), thm1_ok,
                   f"Delta >= k ({dmax} >= {k})"))
    add(BoundEntry("cor1_lower", LOWER, lower_bound_cor1(n, dmax, k), thm1_ok,
                   f"Delta >= k ({dmax} >= {k})"))

    frac_ok = fraction_bound_applies(g, k)
    add(BoundEntry("fraction_upper", UPPER, upper_bound_fraction(n, k) if frac_ok else None,
                   frac_ok, f"connected ({connected}) and delta >= k ({dmin} >= {k})"))
    add(BoundEntry("classical_upper", UPPER, upper_bound_classical(n, dmin, k), True,
                   "none"))
    cor2_ok = dmin >= k
    add(BoundEntry("cor2_upper", UPPER, upper_bound_cor2(n, dmin, k), cor2_ok,
                   f"delta >= k ({dmin} >= {k})"))

    if k >= dmax + 1:
        add(BoundEntry("trivial_exact", EXACT, float(n), True,
                       f"k >= Delta + 1 ({k} >= {dmax + 1}) forces L_k = n"))
    if ktuple_number is not None:
        kt_ok = dmin >= k - 1
        add(BoundEntry("ktuple_upper", UPPER, float(ktuple_number) if kt_ok else None, kt_ok,
                       f"delta >= k - 1 ({dmin} >= {k - 1})"))
    return rep
