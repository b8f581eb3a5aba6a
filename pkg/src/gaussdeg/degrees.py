"""Dimension and degree of the variety of tangent m-planes.

For an n-fold X in P^N and n <= m <= N-1, the closure X_m* of the union of
tangent m-planes (equivalently, the image of the order-m Gauss map in the
Grassmannian, under the Pluecker embedding) has expected dimension
n + (N-m)(m-n).  When the Gauss map is generically finite onto X_m*, its
degree is a tableau-weighted sum of Schur integrals of the twisted normal
sheaf.  This module evaluates that sum exactly for Veronese varieties and
for arbitrary varieties given as integral tables, together with several
independent closed forms used to cross-check it, sandwich bounds on the
normalized degree, and a scan harness for a conjectured sharper bound.

Everything is exact: integers are unbounded, intermediate rationals are
`fractions.Fraction`, and any value the theory promises to be a positive
integer is checked to be one.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .grassmann import GrassmannShape, grassmann_degree, grassmann_dim
from .partitions import (
    add_rectangle,
    enumerate_partitions,
    pad,
    syt_count_hook,
)
from .schur import SegreIntegralTable, VeroneseVariety

METHOD_TAGS = (
    "main",
    "alternate",
    "curve_closed",
    "surface_closed",
    "threefold_closed",
    "boole",
    "generic",
    "m_eq_n_plus_1",
    "general_curve",
)


class NotGenericallyFiniteError(Exception):
    """Raised when a table-driven degree comes out non-positive.

    A vanishing total means the order-m Gauss map is not generically
    finite onto its image (the fibres are positive-dimensional), so no
    degree exists; a negative total means the table itself is not the
    Segre data of any variety.  Either way the number must not be
    reported as a degree.
    """


@dataclass(frozen=True)
class DegreeReport:
    """Dimension and degree of one tangent-plane variety, with provenance."""

    n: int
    N: int
    m: int
    dim_xm: int
    deg_xm: int
    method: str
    d: int | None = None
    notes: str = ""

    def __post_init__(self):
        if self.method not in METHOD_TAGS:
            raise ValueError(f"unknown method tag {self.method!r}")
        if self.dim_xm != self.n + (self.N - self.m) * (self.m - self.n):
            raise ValueError("dimension field is inconsistent with (n, N, m)")
        if self.deg_xm <= 0:
            raise ValueError("degree must be positive")

    def to_dict(self) -> dict:
        doc: dict = {"n": self.n}
        if self.d is not None:
            doc["d"] = self.d
        doc["N"] = self.N
        doc["m"] = self.m
        doc["dim"] = self.dim_xm
        doc["degree"] = str(self.deg_xm)
        doc["method"] = self.method
        if self.notes:
            doc["notes"] = self.notes
        return doc


@dataclass(frozen=True)
class BoundsReport:
    """Sandwich bounds on the normalized degree ratio at one (variety, m)."""

    product: int
    ratio: Fraction
    lower: Fraction
    upper: Fraction
    conjecture_upper: Fraction
    within_bounds: bool
    within_conjecture: bool

    def to_dict(self) -> dict:
        return {
            "product": str(self.product),
            "ratio": str(self.ratio),
            "lower": str(self.lower),
            "upper": str(self.upper),
            "conjecture_upper": str(self.conjecture_upper),
            "within_bounds": self.within_bounds,
            "within_conjecture": self.within_conjecture,
        }


@dataclass(frozen=True)
class ScanRow:
    n: int
    d: int
    N: int
    m: int
    degree: int
    product: int
    ratio: Fraction
    conjecture_upper: Fraction
    conjecture_value: Fraction
    within_conjecture: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "N": self.N,
            "m": self.m,
            "degree": str(self.degree),
            "product": str(self.product),
            "ratio": str(self.ratio),
            "conjecture_upper": str(self.conjecture_upper),
            "conjecture_value": str(self.conjecture_value),
            "within_conjecture": self.within_conjecture,
        }


@dataclass(frozen=True)
class ScanReport:
    rows: tuple[ScanRow, ...]
    violations: tuple[ScanRow, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self,
            "violations",
            tuple(row for row in self.rows if not row.within_conjecture),
        )


def _check_range(n: int, N: int, m: int) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")
    if not n <= m <= N - 1:
        raise ValueError(f"m must satisfy {n} <= m <= {N - 1}, got {m}")


def binom_or_zero(k: int, r: int) -> int:
    """C(k, r) with the convention that it vanishes for k < r (or r < 0)."""
    if r < 0 or k < r:
        return 0
    return comb(k, r)


def falling_factorial_ratio(n: int, i: int, part: int) -> int:
    """(n+i)! / (n+i-part)! for 0 <= part <= n+i; exact integer."""
    return factorial(n + i) // factorial(n + i - part)


def dim_xm(n: int, N: int, m: int) -> int:
    """Dimension n + (N-m)(m-n) of the variety of tangent m-planes."""
    _check_range(n, N, m)
    return n + (N - m) * (m - n)


def ordinary_gauss_degree(v: VeroneseVariety) -> int:
    """Degree of the image of the ordinary (m = n) Gauss map: (n+1)^n (d-1)^n."""
    return (v.n + 1) ** v.n * (v.d - 1) ** v.n


def boole_degree(n: int, d: int) -> int:
    """Degree (n+1)(d-1)^n of the variety dual to the degree-d Veronese n-fold."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if d < 2:
        raise ValueError("d must be >= 2")
    return (n + 1) * (d - 1) ** n


def _exact_positive(value: Fraction, context: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{context}: degree came out non-integral: {value}")
    degree = int(value)
    if degree <= 0:
        raise ArithmeticError(f"{context}: degree came out non-positive: {degree}")
    return degree


def _veronese_report(v: VeroneseVariety, m: int, value: Fraction, method: str) -> DegreeReport:
    degree = _exact_positive(value, f"{method}(n={v.n}, d={v.d}, m={m})")
    return DegreeReport(
        n=v.n,
        d=v.d,
        N=v.N,
        m=m,
        dim_xm=dim_xm(v.n, v.N, m),
        deg_xm=degree,
        method=method,
    )


def degree_main(v: VeroneseVariety, m: int) -> DegreeReport:
    """Degree of the tangent m-plane variety by the tableau-weighted sum.

    Sums, over partitions lam of n with at most N-m parts, the product of
    the tableau counts of lam and of lam plus the (m-n)-wide rectangle of
    height N-m, weighted by falling factorials, then normalizes by
    n! (n+1)^n times the ordinary Gauss degree.
    """
    n, N = v.n, v.N
    _check_range(n, N, m)
    e = N - m
    total = 0
    for lam in enumerate_partitions(n, min(n, e)):
        shifted = add_rectangle(lam, e, m - n)
        term = syt_count_hook(lam) * syt_count_hook(shifted)
        for i, part in enumerate(lam, start=1):
            term *= falling_factorial_ratio(n, i, part)
        total += term
    value = Fraction(ordinary_gauss_degree(v) * total, factorial(n) * (n + 1) ** n)
    return _veronese_report(v, m, value, "main")


def degree_alternate(v: VeroneseVariety, m: int) -> DegreeReport:
    """Same degree through the inclusion-exclusion form over the dual rectangle.

    Independent of `degree_main`: the rectangle here is (N-m) wide and m-n
    tall, and the sum runs over k = 0..n with partitions of n-k in at most
    m-n parts.  At m = n the inner sum collapses to the k = n term.
    """
    n, N = v.n, v.N
    _check_range(n, N, m)
    e = m - n
    big_m = dim_xm(n, N, m)
    total = Fraction(0)
    for k in range(n + 1):
        inner = 0
        for lam in enumerate_partitions(n - k, e):
            shifted = add_rectangle(lam, e, N - m)
            term = syt_count_hook(lam) * syt_count_hook(shifted)
            for i, part in enumerate(lam, start=1):
                term *= falling_factorial_ratio(n, i, part)
            inner += term
        coeff = Fraction((-1) ** (n - k) * (n + 1) ** k, factorial(n - k))
        total += coeff * comb(big_m, k) * inner
    value = Fraction(ordinary_gauss_degree(v)) * total / (n + 1) ** n
    return _veronese_report(v, m, value, "alternate")


def degree_m_np1(v: VeroneseVariety) -> DegreeReport:
    """Closed form at m = n+1: an alternating binomial sum, no partitions."""
    n, N = v.n, v.N
    m = n + 1
    if m > N - 1:
        raise ValueError(f"m = n+1 = {m} is out of range for N = {N}")
    total = sum(
        (-1) ** (n - k) * (n + 1) ** k * comb(N - 1, k) * comb(n + 1, n - k)
        for k in range(n + 1)
    )
    value = Fraction(ordinary_gauss_degree(v) * total, (n + 1) ** n)
    return _veronese_report(v, m, value, "m_eq_n_plus_1")


def degree_curve_closed(d: int, m: int) -> DegreeReport:
    """Closed form for the rational normal curve of degree d (n = 1, N = d).

    The two Grassmannians G(m-1, d-1) and G(d-m, d-1) are dual and must
    have equal Pluecker degree; both are computed and compared.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    N = d
    _check_range(1, N, m)
    fibre = GrassmannShape(d - m, d - 1)
    plucker = GrassmannShape(m - 1, d - 1)
    deg_g = grassmann_degree(plucker)
    if deg_g != grassmann_degree(fibre):
        raise ArithmeticError("dual Grassmannian degrees disagree")
    value = (
        Fraction(d - m, d - 1)
        * (1 + grassmann_dim(fibre))
        * deg_g
        * (2 * (d - 1))
    )
    return _veronese_report(VeroneseVariety(1, d), m, value, "curve_closed")


def degree_general_curve(N: int, d: int, g: int, m: int) -> DegreeReport:
    """Closed form for any smooth non-degenerate curve of degree d, genus g in P^N.

    The first-stage degree 2g - 2 + 2d must be positive.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    if g < 0:
        raise ValueError("genus must be >= 0")
    if d < 1:
        raise ValueError("curve degree must be >= 1")
    _check_range(1, N, m)
    first = 2 * g - 2 + 2 * d
    if first <= 0:
        raise ValueError(f"2g - 2 + 2d = {first} must be positive")
    shape = GrassmannShape(N - m, N - 1)
    value = (
        Fraction(N - m, N - 1)
        * (1 + grassmann_dim(shape))
        * grassmann_degree(shape)
        * first
    )
    degree = _exact_positive(value, f"general_curve(N={N}, d={d}, g={g}, m={m})")
    return DegreeReport(
        n=1,
        d=d,
        N=N,
        m=m,
        dim_xm=dim_xm(1, N, m),
        deg_xm=degree,
        method="general_curve",
        notes=f"genus {g}",
    )


def degree_surface_closed(d: int, m: int) -> DegreeReport:
    """Closed form for the degree-d Veronese surface (n = 2)."""
    if d < 2:
        raise ValueError("d must be >= 2")
    v = VeroneseVariety(2, d)
    N = v.N
    _check_range(2, N, m)
    e = N - m
    shape = GrassmannShape(m - 2, N - 2)
    coeff = Fraction(
        e * (3 * e * N - N - 5 * e - 1),
        3 * (N - 1) * (N - 2) * (N - 3),
    )
    value = (
        coeff
        * comb(2 + grassmann_dim(shape), 2)
        * grassmann_degree(shape)
        * ordinary_gauss_degree(v)
    )
    return _veronese_report(v, m, value, "surface_closed")


def degree_threefold_closed(d: int, m: int) -> DegreeReport:
    """Closed form for the degree-d Veronese threefold (n = 3)."""
    if d < 2:
        raise ValueError("d must be >= 2")
    v = VeroneseVariety(3, d)
    N = v.N
    _check_range(3, N, m)
    e = N - m
    numerator = e * (
        (8 * e * e - 6 * e + 1) * N * N
        + (-42 * e * e + 9 * e + 6) * N
        + 5 * (8 * e * e + 3 * e + 1)
    )
    denominator = 8 * (N - 1) * (N - 2) * (N - 3) * (N - 4) * (N - 5)
    shape = GrassmannShape(m - 3, N - 3)
    value = (
        Fraction(numerator, denominator)
        * comb(3 + grassmann_dim(shape), 3)
        * grassmann_degree(shape)
        * ordinary_gauss_degree(v)
    )
    return _veronese_report(v, m, value, "threefold_closed")


def katz_kleiman(table: SegreIntegralTable) -> int:
    """Degree of the dual variety: the table entry at the one-row partition (n)."""
    return table.lookup((table.n,))


def degree_generic(table: SegreIntegralTable, m: int) -> DegreeReport:
    """Table-driven degree for an arbitrary n-fold in P^N.

    Weights each weight-n Schur integral by the tableau count of the
    partition plus the (m-n)-wide rectangle of height N-m.  A non-positive
    total is not a degree and raises NotGenericallyFiniteError.
    """
    n, N = table.n, table.N
    _check_range(n, N, m)
    e = N - m
    total = 0
    for lam in enumerate_partitions(n, min(n, e)):
        shifted = add_rectangle(lam, e, m - n)
        total += syt_count_hook(shifted) * table.lookup(lam)
    if total <= 0:
        raise NotGenericallyFiniteError(
            f"weighted total {total} <= 0 at m = {m}: the order-{m} Gauss map "
            "is not generically finite onto its image, or the table is not "
            "the Segre data of a variety"
        )
    return DegreeReport(
        n=n,
        N=N,
        m=m,
        dim_xm=dim_xm(n, N, m),
        deg_xm=total,
        method="generic",
    )


def binomial_ratio_product(lam, n: int, N: int, m: int) -> Fraction:
    """Row-wise product of C(N-m+lam_i-i, lam_i) / C(N-n+lam_i-i, lam_i).

    Computed as the telescoping double product over cells so that zero rows
    contribute 1; denominators stay positive whenever N >= 2n.  Over
    partitions of n this interpolates monotonically between the column
    shape (1^n) (minimum) and the row shape (n) (maximum).
    """
    _check_range(n, N, m)
    if N < 2 * n:
        raise ValueError("N must be at least 2n for the denominators to be positive")
    padded = pad(lam, n)
    value = Fraction(1)
    for i, part in enumerate(padded, start=1):
        for cell in range(1, part + 1):
            value *= Fraction(N - m + cell - i, N - n + cell - i)
    return value


def bounds(v: VeroneseVariety, m: int) -> BoundsReport:
    """Sandwich bounds for the degree against its virtual decomposition.

    The reference product is C(n + dim G, n) * deg G * (ordinary Gauss
    degree) with G = G(m-n, N-n).  The ratio degree/product always lies in
    [C(N-m,n)/C(N-n,n), C(N-m+n-1,n)/C(N-1,n)] (a theorem, enforced); the
    sharper power bound ((N-m)/(N-n))^n is only conjectural and is
    reported, never enforced.
    """
    n, N = v.n, v.N
    _check_range(n, N, m)
    shape = GrassmannShape(m - n, N - n)
    product = (
        comb(n + grassmann_dim(shape), n)
        * grassmann_degree(shape)
        * ordinary_gauss_degree(v)
    )
    ratio = Fraction(degree_main(v, m).deg_xm, product)
    lower = Fraction(binom_or_zero(N - m, n), comb(N - n, n))
    upper = Fraction(binom_or_zero(N - m + n - 1, n), comb(N - 1, n))
    conjecture_upper = Fraction(N - m, N - n) ** n
    if not lower <= ratio <= upper:
        raise ArithmeticError(
            f"proved bounds violated at (n={n}, d={v.d}, m={m}): "
            f"{lower} <= {ratio} <= {upper} fails"
        )
    return BoundsReport(
        product=product,
        ratio=ratio,
        lower=lower,
        upper=upper,
        conjecture_upper=conjecture_upper,
        within_bounds=True,
        within_conjecture=ratio <= conjecture_upper,
    )


def verify_identity(n: int, tableau_count=syt_count_hook) -> tuple[int, int, bool]:
    """Weighted square-sum identity over partitions of n.

    Returns (lhs, rhs, lhs == rhs) where lhs sums f(lam)^2 times the
    falling-factorial product over all partitions of n and rhs is
    (n+1)^n n!.  `tableau_count` is injectable so the identity can be
    re-checked against the brute-force counter.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = 0
    for lam in enumerate_partitions(n, n):
        f = tableau_count(lam)
        term = f * f
        for i, part in enumerate(lam, start=1):
            term *= falling_factorial_ratio(n, i, part)
        lhs += term
    rhs = (n + 1) ** n * factorial(n)
    return lhs, rhs, lhs == rhs


def conjecture_scan(n_values, d_values) -> ScanReport:
    """Evaluate the conjectured power bound over a parameter sweep.

    For every n in `n_values`, d in `d_values`, and every admissible m,
    records the exact ratio, the conjectured bound, and the conjectured
    virtual degree (bound times reference product, rational in general).
    Violations are collected, not raised.
    """
    n_values = tuple(n_values)
    d_values = tuple(d_values)
    if not n_values or not d_values:
        raise ValueError("scan ranges must be non-empty")
    rows = []
    for n in n_values:
        for d in d_values:
            v = VeroneseVariety(n, d)
            for m in range(n, v.N):
                b = bounds(v, m)
                degree = b.ratio * b.product
                rows.append(
                    ScanRow(
                        n=n,
                        d=d,
                        N=v.N,
                        m=m,
                        degree=int(degree),
                        product=b.product,
                        ratio=b.ratio,
                        conjecture_upper=b.conjecture_upper,
                        conjecture_value=b.conjecture_upper * b.product,
                        within_conjecture=b.within_conjecture,
                    )
                )
    return ScanReport(rows=tuple(rows))
