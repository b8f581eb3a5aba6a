"""Schur polynomial values in Segre classes, exactly.

Two independent routes to the same number: a Jacobi-Trudi determinant over
the raw Segre coefficients, and a factorial closed form special to
Veronese varieties.  Integrals of these values over the variety are
collected in tables keyed by partitions, with a JSON interchange format.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .partitions import (
    Partition,
    canonical,
    enumerate_partitions,
    pad,
    syt_count_hook,
    weight,
)


@dataclass(frozen=True)
class VeroneseVariety:
    """Image of projective n-space under the embedding by forms of degree d.

    The ambient projective space has dimension N = C(n+d, d) - 1.
    """

    n: int
    d: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.d < 2:
            raise ValueError("d must be >= 2 (d = 1 embeds nothing new)")

    @property
    def N(self) -> int:
        return comb(self.n + self.d, self.d) - 1


@dataclass(frozen=True)
class SegreSequence:
    """Coefficients s_0..s_K of a Segre series; out-of-range indices read 0."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients or self.coefficients[0] != 1:
            raise ValueError("Segre sequence must start with s_0 = 1")

    def at(self, i: int) -> int:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0


def veronese_segre(v: VeroneseVariety, i: int) -> int:
    """Coefficient of h^i in the Segre series of the twisted normal sheaf.

    Equals C(n+1, i) (d-1)^i, the expansion of (1 + (d-1)h)^(n+1); zero
    outside 0 <= i <= n+1.
    """
    if i < 0 or i > v.n + 1:
        return 0
    return comb(v.n + 1, i) * (v.d - 1) ** i


def veronese_segre_sequence(v: VeroneseVariety) -> SegreSequence:
    return SegreSequence(tuple(veronese_segre(v, i) for i in range(v.n + 2)))


def _det_int(matrix: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    size = len(matrix)
    if size == 0:
        return 1
    m = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


def schur_delta_determinant(s: SegreSequence, lam, length: int) -> int:
    """Jacobi-Trudi value det[ s_(lam_i + j - i) ] of the given size.

    `lam` is zero-padded to `length` rows; the empty shape gives 1 at any
    positive length.
    """
    if length < 1:
        raise ValueError("length must be positive")
    padded = pad(lam, length)
    matrix = [
        [s.at(padded[i] + j - i) for j in range(length)]
        for i in range(length)
    ]
    return _det_int(matrix)


def schur_delta_veronese_closed(v: VeroneseVariety, lam, length: int) -> int:
    """Factorial closed form for the Schur value on a Veronese variety.

    Returns (d-1)^|lam| / |lam|! times the tableau count of `lam` times the
    product over rows i = 1..length of (n+i)! / (n+i-lam_i)!, where a
    negative factorial argument kills the whole product.  Shapes heavier
    than n are rejected; anything the formula returns must be an integer,
    and a non-integral value is an internal error.
    """
    if length < 1:
        raise ValueError("length must be positive")
    padded = pad(lam, length)
    total = weight(padded)
    if total > v.n:
        raise ValueError(f"|lam| = {total} exceeds the variety dimension {v.n}")
    value = Fraction((v.d - 1) ** total * syt_count_hook(padded), factorial(total))
    for i, part in enumerate(padded, start=1):
        if part > v.n + i:
            return 0
        value *= Fraction(factorial(v.n + i), factorial(v.n + i - part))
    if value.denominator != 1:
        raise ArithmeticError(f"closed form for {padded} is not integral: {value}")
    return int(value)


@dataclass(frozen=True)
class SegreIntegralTable:
    """Integrals of Schur values over an n-fold, keyed by partitions of n.

    `entries` must contain every partition of n (canonical keys, integer
    values); `N` is the dimension of the ambient projective space.
    """

    n: int
    N: int
    entries: dict[Partition, int]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.N <= self.n:
            raise ValueError("N must exceed n")
        cleaned: dict[Partition, int] = {}
        for key, value in self.entries.items():
            lam = canonical(key)
            if weight(lam) != self.n:
                raise ValueError(f"entry {lam} does not have weight {self.n}")
            if lam in cleaned:
                raise ValueError(f"duplicate entry for partition {lam}")
            cleaned[lam] = int(value)
        missing = [lam for lam in enumerate_partitions(self.n, self.n) if lam not in cleaned]
        if missing:
            raise ValueError(f"table is missing entries for {missing}")
        object.__setattr__(self, "entries", cleaned)

    def lookup(self, lam) -> int:
        key = canonical(lam)
        if key not in self.entries:
            raise KeyError(f"no entry for partition {key}")
        return self.entries[key]

    def to_json(self) -> str:
        doc = {
            "n": self.n,
            "N": self.N,
            "entries": [
                {"partition": list(lam), "integral": str(value)}
                for lam, value in sorted(self.entries.items(), reverse=True)
            ],
        }
        return json.dumps(doc, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "SegreIntegralTable":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON: {exc}") from exc
        if not isinstance(doc, dict):
            raise ValueError("table document must be a JSON object")
        for key in ("n", "N", "entries"):
            if key not in doc:
                raise ValueError(f"table document is missing '{key}'")
        n, big_n, raw_entries = doc["n"], doc["N"], doc["entries"]
        if not _is_int(n) or not _is_int(big_n):
            raise ValueError("'n' and 'N' must be integers")
        if not isinstance(raw_entries, list):
            raise ValueError("'entries' must be a list")
        entries: dict[Partition, int] = {}
        for item in raw_entries:
            if not isinstance(item, dict):
                raise ValueError(f"entry is not an object: {item!r}")
            if "partition" not in item or "integral" not in item:
                raise ValueError(f"entry needs 'partition' and 'integral': {item!r}")
            parts = item["partition"]
            if not isinstance(parts, list) or not all(_is_int(p) for p in parts):
                raise ValueError(f"'partition' must be a list of integers: {parts!r}")
            raw = item["integral"]
            if not isinstance(raw, str):
                raise ValueError(f"'integral' must be a decimal string: {raw!r}")
            try:
                value = int(raw, 10)
            except ValueError as exc:
                raise ValueError(f"bad integral value {raw!r}") from exc
            lam = canonical(parts)
            if lam in entries:
                raise ValueError(f"duplicate entry for partition {lam}")
            entries[lam] = value
        return cls(n=n, N=big_n, entries=entries)


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def veronese_integral_table(v: VeroneseVariety) -> SegreIntegralTable:
    """Table of all weight-n Schur integrals of a Veronese variety."""
    entries = {
        lam: schur_delta_veronese_closed(v, lam, v.n)
        for lam in enumerate_partitions(v.n, v.n)
    }
    return SegreIntegralTable(n=v.n, N=v.N, entries=entries)
