"""Self-check suites: each one recomputes a family of values two ways.

These are the same cross-checks the test suite runs, packaged as plain
functions returning structured results so the command line can execute
them on demand.  A suite never raises on a mismatch; it records the
failing tuple verbatim.
"""

from dataclasses import dataclass

from .degrees import (
    NotGenericallyFiniteError,
    boole_degree,
    bounds,
    degree_alternate,
    degree_curve_closed,
    degree_general_curve,
    degree_generic,
    degree_m_np1,
    degree_main,
    degree_surface_closed,
    degree_threefold_closed,
    ordinary_gauss_degree,
    verify_identity,
)
from .partitions import (
    DEFAULT_BRUTE_CAP,
    enumerate_partitions,
    syt_count_bruteforce,
    syt_count_hook,
)
from .schur import (
    VeroneseVariety,
    schur_delta_determinant,
    schur_delta_veronese_closed,
    veronese_integral_table,
    veronese_segre_sequence,
)

SUITE_NAMES = ("identity", "syt", "schur", "crossform", "bounds")


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: int
    failed: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _result(name: str, checks: int, failures: list[str]) -> SuiteResult:
    return SuiteResult(
        name=name,
        passed=checks - len(failures),
        failed=len(failures),
        failures=tuple(failures),
    )


def run_identity_suite(max_n: int = 6) -> SuiteResult:
    """Square-sum identity for n = 1..max_n."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    checks = 0
    failures = []
    for n in range(1, max_n + 1):
        checks += 1
        lhs, rhs, equal = verify_identity(n)
        if not equal:
            failures.append(f"identity n={n}: lhs={lhs} rhs={rhs}")
    return _result("identity", checks, failures)


def run_syt_suite(max_weight: int = 8, cap: int = DEFAULT_BRUTE_CAP) -> SuiteResult:
    """Hook-formula tableau counts against brute-force enumeration."""
    if max_weight < 0:
        raise ValueError("max_weight must be >= 0")
    if max_weight > cap:
        raise ValueError(
            f"max_weight {max_weight} exceeds the brute-force cap {cap}"
        )
    checks = 0
    failures = []
    for k in range(max_weight + 1):
        for lam in enumerate_partitions(k, max(k, 1)):
            checks += 1
            by_hook = syt_count_hook(lam)
            by_force = syt_count_bruteforce(lam, cap=cap)
            if by_hook != by_force:
                failures.append(f"syt {lam}: hook={by_hook} bruteforce={by_force}")
    return _result("syt", checks, failures)


def run_schur_suite(max_n: int = 4, max_d: int = 5) -> SuiteResult:
    """Jacobi-Trudi determinants against the Veronese closed form."""
    checks = 0
    failures = []
    for n in range(1, max_n + 1):
        for d in range(2, max_d + 1):
            v = VeroneseVariety(n, d)
            s = veronese_segre_sequence(v)
            for k in range(n + 1):
                for lam in enumerate_partitions(k, max(k, 1)):
                    for length in range(max(len(lam), 1), n + 1):
                        checks += 1
                        det = schur_delta_determinant(s, lam, length)
                        closed = schur_delta_veronese_closed(v, lam, length)
                        if det != closed:
                            failures.append(
                                f"schur (n={n}, d={d}, lam={lam}, length={length}): "
                                f"determinant={det} closed={closed}"
                            )
    return _result("schur", checks, failures)


def run_crossform_suite(n_values=(1, 2, 3), d_values=(2, 3, 4)) -> SuiteResult:
    """Every applicable degree formula against `degree_main`, all m."""
    checks = 0
    failures = []

    def expect(context: str, got: int, want: int) -> None:
        nonlocal checks
        checks += 1
        if got != want:
            failures.append(f"{context}: got {got}, want {want}")

    for n in n_values:
        for d in d_values:
            v = VeroneseVariety(n, d)
            table = veronese_integral_table(v)
            for m in range(n, v.N):
                want = degree_main(v, m).deg_xm
                expect(
                    f"alternate (n={n}, d={d}, m={m})",
                    degree_alternate(v, m).deg_xm,
                    want,
                )
                try:
                    generic = degree_generic(table, m).deg_xm
                except NotGenericallyFiniteError:
                    generic = 0
                expect(f"generic (n={n}, d={d}, m={m})", generic, want)
                if n == 1:
                    expect(
                        f"curve_closed (d={d}, m={m})",
                        degree_curve_closed(d, m).deg_xm,
                        want,
                    )
                    expect(
                        f"general_curve (N={d}, d={d}, g=0, m={m})",
                        degree_general_curve(d, d, 0, m).deg_xm,
                        want,
                    )
                if n == 2:
                    expect(
                        f"surface_closed (d={d}, m={m})",
                        degree_surface_closed(d, m).deg_xm,
                        want,
                    )
                if n == 3:
                    expect(
                        f"threefold_closed (d={d}, m={m})",
                        degree_threefold_closed(d, m).deg_xm,
                        want,
                    )
                if m == n + 1:
                    expect(
                        f"m_eq_n_plus_1 (n={n}, d={d})",
                        degree_m_np1(v).deg_xm,
                        want,
                    )
                if m == n:
                    expect(
                        f"ordinary (n={n}, d={d})",
                        ordinary_gauss_degree(v),
                        want,
                    )
                if m == v.N - 1:
                    expect(
                        f"boole (n={n}, d={d})",
                        boole_degree(n, d),
                        want,
                    )
    return _result("crossform", checks, failures)


def run_bounds_suite(n_values=(1, 2, 3), d_values=(2, 3, 4)) -> SuiteResult:
    """Sandwich bounds everywhere; exact equality throughout for curves."""
    checks = 0
    failures = []
    for n in n_values:
        for d in d_values:
            v = VeroneseVariety(n, d)
            for m in range(n, v.N):
                checks += 1
                try:
                    b = bounds(v, m)
                except ArithmeticError as exc:
                    failures.append(f"bounds (n={n}, d={d}, m={m}): {exc}")
                    continue
                if n == 1 and not (b.lower == b.ratio == b.upper):
                    failures.append(
                        f"bounds (n=1, d={d}, m={m}): expected equality, "
                        f"got lower={b.lower} ratio={b.ratio} upper={b.upper}"
                    )
    return _result("bounds", checks, failures)


def run_suite(name: str, **kwargs) -> SuiteResult:
    runners = {
        "identity": run_identity_suite,
        "syt": run_syt_suite,
        "schur": run_schur_suite,
        "crossform": run_crossform_suite,
        "bounds": run_bounds_suite,
    }
    if name not in runners:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    return runners[name](**kwargs)
