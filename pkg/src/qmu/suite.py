"""The reproduction suite: every headline value and structural claim as a
runnable check producing one pass/fail line.  The CLI `qmu suite` and the
acceptance tests share these check implementations."""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .graphs import (
    hypercube,
    path,
    cycle,
    complete,
    cartesian_product_k2,
    bipartition,
)
from .coloring import (
    random_bijective_coloring,
    random_proper_coloring,
    reverse_colors,
    spectrum_report,
    chromatic_index,
)
from .constructions import (
    q3_phi,
    q3_psi,
    lift_zero,
    is_harmonic,
    shift_sequence,
    block_harmonic,
    interval_on_part,
)
from .search import (
    brute_force_mu,
    mu_exact,
    mu_table,
    closed_form_qn,
    mu_inequalities_check,
)
from .patterns import check_lemma3, verify_subset_lemma, max_pathforest_subset

__all__ = ["SuiteCheck", "CheckResult", "SuiteReport", "CHECKS", "run_suite"]


class CheckFailure(AssertionError):
    """A suite check did not reproduce the expected value."""


def _expect(cond: bool, message: str):
    if not cond:
        raise CheckFailure(message)


# -- check implementations ---------------------------------------------------


def check_closed_form_small_cubes() -> str:
    """Fully exhaustive tables for the 1- and 2-cube match the closed forms."""
    for n, want in ((1, (2, 2, 2, 2)), (2, (1, 4, 3, 4))):
        table = mu_table(hypercube(n))
        _expect(table.all_exact, f"n={n}: table not fully exact")
        got = tuple(a.value for a in table.aggregates())
        _expect(got == want, f"n={n}: aggregates {got}, want {want}")
        _expect(closed_form_qn(n) == want, f"n={n}: closed form mismatch")
    return "1-cube (2,2,2,2) and 2-cube (1,4,3,4), exhaustively"


def check_q3_endpoints(full: bool = True) -> str:
    """3-cube endpoints: both extremes 8 at t=3, min 0 at t=4 (witnessed
    independently), and max 5 at t=12 via the path-forest cap plus the
    explicit 12-coloring — and via exact search when full."""
    g = hypercube(3)
    for objective in ("min", "max"):
        r = mu_exact(g, 3, objective)
        _expect(r.status == "exact" and r.value == 8,
                f"t=3 {objective}: got {r.value} ({r.status})")
    r = mu_exact(g, 4, "min")
    _expect(r.status == "exact" and r.value == 0, f"t=4 min: got {r.value}")
    _expect(spectrum_report(g, q3_phi()).f == 0, "explicit 4-coloring is not f=0")
    # route 1: structural cap + achieving witness
    cap = max_pathforest_subset(3)
    _expect(cap == 5, f"path-forest cap {cap}, want 5")
    psi_f = spectrum_report(g, q3_psi()).f
    _expect(psi_f == 5, f"explicit 12-coloring has f={psi_f}, want 5")
    detail = "t=3 both 8; t=4 min 0; t=12 max 5 by cap+witness"
    if full:
        # route 2: exact search must agree
        r = mu_exact(g, 12, "max")
        _expect(r.status == "exact" and r.value == 5,
                f"t=12 max search: got {r.value} ({r.status})")
        detail += " and by exact search"
    return detail


def check_lift_chain() -> str:
    """Zero-interval colorings of the 3..6-cubes with palettes 4,5,6,7 by
    repeated lifting, each validated with f = 0."""
    g, c = hypercube(3), q3_phi()
    for n, t in ((3, 4), (4, 5), (5, 6), (6, 7)):
        _expect(c.t == t, f"n={n}: palette {c.t}, want {t}")
        f = spectrum_report(g, c).f
        _expect(f == 0, f"n={n}: f={f}, want 0")
        if n < 6:
            c = lift_zero(g, c)
            g = cartesian_product_k2(g)
    return "palettes 4,5,6,7 on the 3..6-cubes, all f=0"


def check_interval_on_part_all(ns=(3, 4, 5)) -> str:
    """For each cube dimension, every palette size from n to n*2^(n-1)
    admits a validated coloring interval on all 2^(n-1) part vertices."""
    count = 0
    for n in ns:
        g = hypercube(n)
        b = bipartition(g)
        for t in range(n, g.edge_count + 1):
            c = interval_on_part(g, b, t)  # validated inside
            rep = spectrum_report(g, c)
            _expect(b.part_r <= rep.v_int, f"n={n} t={t}: not interval on part")
            _expect(rep.f >= 2 ** (n - 1), f"n={n} t={t}: f={rep.f} < 2^(n-1)")
            count += 1
    return f"{count} colorings across dimensions {tuple(ns)}, all interval on part"


def check_q4_midpoint() -> str:
    """The 4-cube lower aggregate for mu2 is exactly 8: path-forest cap 8 at
    the bijective palette, and 8 is achieved at every palette size."""
    cap = max_pathforest_subset(4)
    _expect(cap == 8, f"path-forest cap {cap}, want 8")
    check_interval_on_part_all(ns=(4,))
    _expect(closed_form_qn(4)[2] == 8, "closed form disagrees")
    return "cap 8 at t=32 and lower bound 8 at every t"


def check_subset_cover(full: bool = True) -> str:
    """Every large-enough cube subset contains a claw or the chordless
    cycle: size >= 6 on the 3-cube (always), size >= 9 on the 4-cube (full
    level), exhaustively."""
    dims = (3, 4) if full else (3,)
    for n in dims:
        ok, bad = verify_subset_lemma(n)
        _expect(ok, f"n={n}: counterexample {bad}")
    return f"all critical subsets covered for dimensions {dims}"


def check_witness_checker_catches_corruption() -> str:
    """Negative control: a deliberately corrupted certificate must fail."""
    from .constructions import WitnessCertificate, witness_q3_psi

    cert = witness_q3_psi()
    wrong_value = WitnessCertificate(
        cert.graph, cert.coloring, {"kind": "f_equals", "value": 6}
    )
    ok, _ = wrong_value.check()
    _expect(not ok, "checker accepted a wrong claimed value")
    colors = list(cert.coloring.color_of)
    colors[0] = colors[1]
    from .coloring import EdgeColoring

    broken = WitnessCertificate(cert.graph, EdgeColoring(12, tuple(colors)), cert.claim)
    ok, _ = broken.check()
    _expect(not ok, "checker accepted an improper coloring")
    return "wrong claims and improper colorings are both rejected"


_ORACLE_CORPUS = (
    ("path2", lambda: path(2)),
    ("path3", lambda: path(3)),
    ("path4", lambda: path(4)),
    ("path5", lambda: path(5)),
    ("cycle3", lambda: cycle(3)),
    ("cycle4", lambda: cycle(4)),
    ("cycle5", lambda: cycle(5)),
    ("K3", lambda: complete(3)),
    ("Q1", lambda: hypercube(1)),
    ("Q2", lambda: hypercube(2)),
)


def check_oracle_equivalence() -> str:
    """Branch-and-bound equals plain exhaustive enumeration on the small
    corpus, for every valid palette size and both objectives."""
    cases = 0
    for name, make in _ORACLE_CORPUS:
        g = make()
        for t in range(chromatic_index(g), g.edge_count + 1):
            lo, hi = brute_force_mu(g, t)
            rmin = mu_exact(g, t, "min")
            rmax = mu_exact(g, t, "max")
            _expect(rmin.status == "exact" and rmin.value == lo,
                    f"{name} t={t} min: search {rmin.value}, oracle {lo}")
            _expect(rmax.status == "exact" and rmax.value == hi,
                    f"{name} t={t} max: search {rmax.value}, oracle {hi}")
            cases += 1
    return f"{cases} (graph, palette) cases agree on both objectives"


def check_property_suites(samples: int = 1000, seed: int = 20240801) -> str:
    """Three randomized invariant suites at `samples` seeded draws each:
    shift steps preserve harmonicity and part intervalness, bijective
    colorings keep their interval vertices a path forest, and palette
    reversal preserves f."""
    rng = np.random.default_rng(seed)

    # shift sequences from randomized block colorings of the 3- and 4-cube
    for i in range(samples):
        n = 3 if i % 2 == 0 else 4
        g = hypercube(n)
        b = bipartition(g)
        order = [int(v) for v in rng.permutation(sorted(b.part_r))]
        base = block_harmonic(g, b, part_order=order)
        seq = shift_sequence(g, base)  # validates and re-checks harmonicity
        for s in seq.steps:
            _expect(is_harmonic(g, s), f"shift broke harmonicity (n={n})")
            rep = spectrum_report(g, s)
            _expect(b.part_r <= rep.v_int,
                    f"shift broke part intervalness (n={n}, t={s.t})")

    # path-forest structure of interval vertices under bijective colorings
    for g in (hypercube(3), cycle(5), cycle(6), complete(4)):
        for _ in range(samples):
            c = random_bijective_coloring(g, rng)
            _expect(check_lemma3(g, c), f"path-forest violation on {g!r}")

    # palette reversal preserves f
    corpus = (hypercube(3), cycle(5), cycle(6), complete(4))
    for i in range(samples):
        g = corpus[i % len(corpus)]
        t = int(rng.integers(chromatic_index(g), g.edge_count + 1))
        c = random_proper_coloring(g, t, rng)
        f0 = spectrum_report(g, c).f
        f1 = spectrum_report(g, reverse_colors(c)).f
        _expect(f0 == f1, f"reversal changed f: {f0} -> {f1}")
    return f"3 suites x {samples} seeded samples, zero violations"


def check_inequality_chains(include_q3: bool = True) -> str:
    """Both aggregate chains hold on every fully exact table."""
    ns = (1, 2, 3) if include_q3 else (1, 2)
    for n in ns:
        table = mu_table(hypercube(n))
        _expect(table.all_exact, f"n={n}: table not fully exact")
        _expect(mu_inequalities_check(table), f"n={n}: chains violated")
    return f"chains hold on exact tables for dimensions {ns}"


# -- registry and runner -----------------------------------------------------


@dataclass(frozen=True)
class SuiteCheck:
    check_id: str
    description: str
    check_ref: str  # runnable implementation pointer
    levels: tuple[str, ...]
    run: callable


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    description: str
    check_ref: str
    status: str  # pass | fail | skipped
    elapsed: float
    detail: str


@dataclass(frozen=True)
class SuiteReport:
    level: str
    results: tuple[CheckResult, ...]

    @property
    def failed(self) -> int:
        return sum(1 for r in self.results if r.status == "fail")

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            lines.append(
                f"{r.status.upper():7s} {r.check_id:28s} {r.elapsed:8.2f}s  {r.detail}"
            )
        lines.append(
            f"suite level={self.level}: {len(self.results)} checks, {self.failed} failed"
        )
        return "\n".join(lines)


CHECKS = (
    SuiteCheck(
        "closed-form-small-cubes",
        "exhaustive 1-/2-cube tables match the closed forms",
        "qmu.suite:check_closed_form_small_cubes",
        ("quick", "full"),
        check_closed_form_small_cubes,
    ),
    SuiteCheck(
        "q3-endpoints",
        "3-cube extremes at t=3, t=4 and t=12 (cap+witness; search when full)",
        "qmu.suite:check_q3_endpoints",
        ("quick", "full"),
        check_q3_endpoints,  # wrapped by run_suite to pass full flag
    ),
    SuiteCheck(
        "zero-interval-lift-chain",
        "lifted colorings of the 3..6-cubes have palettes 4,5,6,7 and f=0",
        "qmu.suite:check_lift_chain",
        ("quick", "full"),
        check_lift_chain,
    ),
    SuiteCheck(
        "interval-on-part-all-palettes",
        "every palette admits a coloring interval on one part (n=3,4,5)",
        "qmu.suite:check_interval_on_part_all",
        ("quick", "full"),
        check_interval_on_part_all,
    ),
    SuiteCheck(
        "q4-mu2-floor",
        "4-cube: path-forest cap 8 plus lower bound 8 at every palette",
        "qmu.suite:check_q4_midpoint",
        ("quick", "full"),
        check_q4_midpoint,
    ),
    SuiteCheck(
        "subset-cover-exhaustive",
        "critical-size cube subsets contain a claw or chordless cycle "
        "(3-cube always; 4-cube at full level)",
        "qmu.suite:check_subset_cover",
        ("quick", "full"),
        check_subset_cover,  # wrapped by run_suite to pass full flag
    ),
    SuiteCheck(
        "oracle-equivalence",
        "branch-and-bound equals exhaustive enumeration on the small corpus",
        "qmu.suite:check_oracle_equivalence",
        ("quick", "full"),
        check_oracle_equivalence,
    ),
    SuiteCheck(
        "randomized-invariants",
        "seeded property suites: shifts, path forests, palette reversal",
        "qmu.suite:check_property_suites",
        ("quick", "full"),
        check_property_suites,  # wrapped by run_suite to set sample count
    ),
    SuiteCheck(
        "aggregate-inequality-chains",
        "mu11 <= mu12 <= mu22 and mu11 <= mu21 <= mu22 on exact tables",
        "qmu.suite:check_inequality_chains",
        ("quick", "full"),
        check_inequality_chains,
    ),
    SuiteCheck(
        "witness-checker-negative-control",
        "corrupted certificates are rejected by the checker",
        "qmu.suite:check_witness_checker_catches_corruption",
        ("quick", "full"),
        check_witness_checker_catches_corruption,
    ),
)


def run_suite(level: str = "quick", seed: int = 20240801) -> SuiteReport:
    """Run all checks for the level; quick skips the exact t=12 search and
    the 4-cube subset scan and trims the randomized suites to 200 samples."""
    if level not in ("quick", "full"):
        raise ValueError("level must be 'quick' or 'full'")
    full = level == "full"
    results = []
    for check in CHECKS:
        if level not in check.levels:
            results.append(
                CheckResult(check.check_id, check.description, check.check_ref,
                            "skipped", 0.0, "full level only")
            )
            continue
        if check.check_id == "q3-endpoints":
            run = lambda: check_q3_endpoints(full=full)
        elif check.check_id == "subset-cover-exhaustive":
            run = lambda: check_subset_cover(full=full)
        elif check.check_id == "randomized-invariants":
            run = lambda: check_property_suites(
                samples=1000 if full else 200, seed=seed
            )
        else:
            run = check.run
        start = time.perf_counter()
        try:
            detail = run()
            status = "pass"
        except CheckFailure as exc:
            detail, status = str(exc), "fail"
        elapsed = time.perf_counter() - start
        results.append(
            CheckResult(check.check_id, check.description, check.check_ref,
                        status, elapsed, detail)
        )
    return SuiteReport(level, tuple(results))
