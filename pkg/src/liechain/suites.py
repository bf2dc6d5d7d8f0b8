"""Named verification suites behind the ``check-theorems`` command.

Each suite exhaustively checks one classification or inequality over a
bounded search space (total dimension for group enumerations, degree for
per-family scans) and returns a list of Check records.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Optional

from .formulas import (
    Check,
    chain_difference,
    check_dimlen,
    check_lcd,
    check_sqrt_lower_bound,
    complex_depth_simple,
    depth,
    depth_simple,
    elem_inequalities,
    f_classical,
    is_cd_one,
    is_length_eq_depth,
    lendim_formula,
    length,
    length_complex_semisimple,
    length_simple,
    smalll_deficit,
)
from .groups import GroupType, SimpleType, iter_groups, iter_simple_types, simple
from .oracle import oracle_depth
from .radicals import BETA, QuadExpr
from .subgroups import CURATED_SIMPLE, is_curated, min_irrep_dim

DEFAULT_MAX_DIM = 60

# the values everything exceptional is pinned to
_EXBD_M = {"G2": 7, "F4": 31, "E6": 32, "E7": 69, "E8": 309}


def computed_length_eq_depth(g: GroupType) -> Optional[bool]:
    """Decide l(G) = depth(G) from the implementation itself (None if the
    implementation cannot resolve it, which does not happen in range)."""
    total = length(g)
    d = depth(g)
    if d.is_exact:
        return total == d.exact_value
    if total > d.upper:
        return False
    if is_curated(g):
        return total == depth(g, refine=True).exact_value
    return None


def computed_cd_is_one(g: GroupType) -> Optional[bool]:
    """Decide cd(G) = 1 from the implementation itself."""
    cd = chain_difference(g)
    if cd.is_exact:
        return cd.exact_value == 1
    if 1 not in cd:
        return False
    if is_curated(g):
        return chain_difference(g, refine=True).exact_value == 1
    return None


def _classification(name: str, max_dim: int,
                    predicate: Callable[[GroupType], bool],
                    computed: Callable[[GroupType], Optional[bool]]) -> list[Check]:
    scanned = 0
    mismatches: list[str] = []
    unresolved: list[str] = []
    for g in iter_groups(max_dim):
        scanned += 1
        want = predicate(g)
        got = computed(g)
        if got is None:
            unresolved.append(str(g))
        elif got != want:
            mismatches.append(f"{g} (computed={got}, characterized={want})")
    return [Check(
        name,
        {"max_dim": max_dim, "groups_scanned": scanned,
         "mismatches": mismatches[:8], "unresolved": unresolved[:8]},
        f"mismatches = {len(mismatches)}",
        "expected 0",
        not mismatches and not unresolved,
    )]


# -- individual suites -----------------------------------------------------------

def suite_general(max_dim: int) -> list[Check]:
    """Rank bounds on the length of every enumerated group."""
    worst = None
    scanned = 0
    ok = True
    for g in iter_groups(max_dim):
        scanned += 1
        z = g.torus_rank
        r = g.rank - z
        t = len(g.factors)
        total = length(g)
        good = z + 2 * r <= total <= z + 3 * r - t if t else total == z
        if not good:
            ok = False
            worst = str(g)
            break
    return [Check(
        "length within the rank bounds z+2r <= l <= z+3r-t",
        {"max_dim": max_dim, "groups_scanned": scanned, "first_failure": worst},
        "all groups in range",
        "bounds hold",
        ok,
    )]


def suite_dimlen(max_dim: int) -> list[Check]:
    """Dimension-deficit bounds for every enumerated group."""
    scanned = 0
    failures: list[str] = []
    for g in iter_groups(max_dim):
        scanned += 1
        for check in check_dimlen(g):
            if not check.passed:
                failures.append(f"{g}: {check.claim}")
    return [Check(
        "dimension deficit bounds over the enumeration",
        {"max_dim": max_dim, "groups_scanned": scanned, "failures": failures[:8]},
        f"failures = {len(failures)}",
        "expected 0",
        not failures,
    )]


def suite_sqrt(max_dim: int) -> list[Check]:
    """Square-root lower bound for every enumerated group, the sharper
    simple-group variant, and the three elementary inequalities."""
    scanned = 0
    failures: list[str] = []
    for g in iter_groups(max_dim):
        scanned += 1
        for check in check_sqrt_lower_bound(g):
            if not check.passed:
                failures.append(f"{g}: {check.claim}")
    out = [Check(
        "square-root dimension lower bound over the enumeration",
        {"max_dim": max_dim, "groups_scanned": scanned, "failures": failures[:8]},
        f"failures = {len(failures)}",
        "expected 0",
        not failures,
    )]
    grid = [Fraction(1), Fraction(3, 2), Fraction(3), Fraction(7), Fraction(25, 2),
            Fraction(78), Fraction(100), Fraction(625, 4)]
    elem_bad = []
    for x in grid:
        for y in grid:
            for label, value in zip(("growth", "sum-vs-1", "sum-vs-alpha"),
                                    elem_inequalities(x, y)):
                if value is False:
                    elem_bad.append(f"({x},{y}) {label}")
    out.append(Check(
        "elementary square-root inequalities on a rational grid",
        {"grid": [str(q) for q in grid], "failures": elem_bad},
        f"failures = {len(elem_bad)}",
        "expected 0",
        not elem_bad,
    ))
    return out


def suite_smalll(max_dim: int) -> list[Check]:
    """Orthogonal-product deficit: nonnegative on the whole tuple range
    except exactly at (n_1, k) = (7, 2)."""
    del max_dim  # fixed range
    negatives: list[tuple[int, ...]] = []
    checked = 0

    def tuples(k: int):
        def rec(prefix):
            if len(prefix) == k:
                yield prefix
                return
            for n in range(7, prefix[0] + 1):
                yield from rec(prefix + (n,))
        for n1 in range(7, 21):
            yield from rec((n1,))

    for k in (2, 3, 4):
        for ns in tuples(k):
            checked += 1
            if smalll_deficit(ns).sign() < 0:
                negatives.append(ns)
    expected = [ns for ns in negatives if not (ns[0] == 7 and len(ns) == 2)]
    only_excluded = not expected and all(
        ns[0] == 7 and len(ns) == 2 for ns in negatives) and negatives
    return [Check(
        "product-length deficit nonnegative except exactly at (n_1, k) = (7, 2)",
        {"tuples_checked": checked, "negatives": [list(n) for n in negatives[:8]]},
        f"unexpected negatives = {len(expected)}",
        "expected 0, with (7, 7) negative",
        bool(only_excluded),
    )]


def suite_liedep(max_dim: int, max_degree: int = 60) -> list[Check]:
    """Simple-group depth table: brute force on the curated types, and the
    complexified-depth offset as stored data everywhere."""
    out = []
    bad = [str(s) for s in sorted(CURATED_SIMPLE, key=lambda s: s.sort_key)
           if oracle_depth(simple(s.family, s.degree)) != depth_simple(s)]
    out.append(Check(
        "brute-force depth matches the simple depth table on curated types",
        {"curated": len(CURATED_SIMPLE), "mismatches": bad},
        f"mismatches = {len(bad)}",
        "expected 0",
        not bad,
    ))
    offset_bad = [str(s) for s in iter_simple_types(max_degree=max_degree)
                  if depth_simple(s) != complex_depth_simple(s) - 1
                  or depth_simple(s) not in (2, 3, 4, 5)]
    out.append(Check(
        "compact depth is the complexified depth minus one",
        {"max_degree": max_degree, "mismatches": offset_bad[:8]},
        f"mismatches = {len(offset_bad)}",
        "expected 0",
        not offset_bad,
    ))
    return out


def suite_depbds(max_dim: int) -> list[Check]:
    """Depth of homogeneous powers, and interval bounds for mixed products,
    against the brute force."""
    homog_bad = []
    for s in sorted(CURATED_SIMPLE, key=lambda t: t.sort_key):
        for k in range(1, 5):
            for z in (0, 2):
                g = GroupType(z, (s,) * k)
                if oracle_depth(g) != z + depth_simple(s) + k - 1:
                    homog_bad.append(str(g))
    out = [Check(
        "homogeneous power depth z + depth(S) + k - 1",
        {"powers": "k <= 4, z in {0, 2}", "mismatches": homog_bad[:8]},
        f"mismatches = {len(homog_bad)}",
        "expected 0",
        not homog_bad,
    )]
    pair_bad = []
    curated = sorted(CURATED_SIMPLE, key=lambda t: t.sort_key)
    for i, s1 in enumerate(curated):
        for s2 in curated[i + 1:]:
            g = GroupType(0, (s1, s2))
            if oracle_depth(g) not in depth(g):
                pair_bad.append(str(g))
    out.append(Check(
        "mixed-product depth within the interval bounds",
        {"pairs": len(curated) * (len(curated) - 1) // 2, "mismatches": pair_bad},
        f"mismatches = {len(pair_bad)}",
        "expected 0",
        not pair_bad,
    ))
    return out


def suite_ld(max_dim: int) -> list[Check]:
    """Groups with equal length and depth are exactly the tori and SU_2
    times a torus."""
    return _classification(
        "length equals depth exactly for tori and SU(2) x torus",
        max_dim, is_length_eq_depth, computed_length_eq_depth)


def suite_cd(max_dim: int) -> list[Check]:
    """Groups of chain difference one against the published list."""
    return _classification(
        "chain difference one matches the published list",
        max_dim, is_cd_one, computed_cd_is_one)


def suite_lcd(max_dim: int) -> list[Check]:
    """Semisimple length against the chain difference, over the enumeration,
    with equality spot-checked at SU(2)^k."""
    scanned = 0
    failures: list[str] = []
    for g in iter_groups(max_dim):
        scanned += 1
        for check in check_lcd(g, refine=True):
            if not check.passed:
                failures.append(f"{g}: {check.claim}")
    out = [Check(
        "chain-difference length bounds over the enumeration",
        {"max_dim": max_dim, "groups_scanned": scanned, "failures": failures[:8]},
        f"failures = {len(failures)}",
        "expected 0",
        not failures,
    )]
    eq_bad = [k for k in range(1, 6)
              if length(GroupType(0, (SimpleType("SU", 2),) * k))
              != 2 * chain_difference(GroupType(0, (SimpleType("SU", 2),) * k)).exact_value + 2]
    out.append(Check(
        "equality l = 2 cd + 2 at every power of SU(2)",
        {"k": "1..5", "mismatches": eq_bad},
        f"mismatches = {len(eq_bad)}",
        "expected 0",
        not eq_bad,
    ))
    superadd_bad = []
    for g in iter_groups(min(max_dim, 40)):
        if len(g.counts()) < 2:
            continue
        block_sum = sum(
            chain_difference(GroupType(0, (s,) * k)).exact_value
            for s, k in g.counts())
        if chain_difference(g).lower < block_sum:
            superadd_bad.append(str(g))
    out.append(Check(
        "chain difference at least the sum over homogeneous blocks",
        {"mismatches": superadd_bad[:8]},
        f"mismatches = {len(superadd_bad)}",
        "expected 0",
        not superadd_bad,
    ))
    return out


def suite_complex(max_dim: int, max_degree: int = 40) -> list[Check]:
    """Compact length strictly below the complexified length."""
    bad = [str(s) for s in iter_simple_types(max_degree=max_degree)
           if not length_simple(s) < length_complex_semisimple(simple(s.family, s.degree))]
    return [Check(
        "compact length below complexified length for simple types",
        {"max_degree": max_degree, "mismatches": bad[:8]},
        f"mismatches = {len(bad)}",
        "expected 0",
        not bad,
    )]


def suite_tables(max_dim: int) -> list[Check]:
    """Minimal-representation comparisons: classical growth, and the
    exceptional cut-off row."""
    bad = []
    for h in iter_simple_types(max_degree=30):
        if not h.is_classical:
            continue
        n_min = min_irrep_dim(h)
        for fam in ("SU", "Sp", "SO"):
            if fam == "Sp" and (n_min % 2 or n_min < 4):
                continue
            if fam == "SO" and n_min < 7:
                continue
            if not f_classical(fam, n_min) > f_classical(h.family, h.degree):
                bad.append(f"{h} -> {fam}({n_min})")
    out = [Check(
        "classical minimal-representation length growth",
        {"max_degree": 30, "failures": bad[:8]},
        f"failures = {len(bad)}",
        "expected 0",
        not bad,
    )]
    for family, m_expected in _EXBD_M.items():
        s = SimpleType(family)
        n_min = min_irrep_dim(s)
        candidates = [f_classical("SU", n_min)]
        if n_min % 2 == 0 and n_min >= 4:
            candidates.append(f_classical("Sp", n_min))
        if n_min >= 7:
            candidates.append(f_classical("SO", n_min))
        m = min(candidates)
        out.append(Check(
            f"exceptional cut-off for {family}",
            {"N": n_min, "m": m},
            f"l({family}) = {length_simple(s)}, m = {m}",
            f"expected m = {m_expected}, l < m",
            m == m_expected and length_simple(s) < m,
        ))
    return out


def suite_lendim(max_dim: int, max_degree: int = 60) -> list[Check]:
    """Radical length-vs-dimension formulas: exact agreement, the uniform
    floor, and the large-degree ratio limits."""
    bad = []
    floor_bad = []
    for s in iter_simple_types(max_degree=max_degree):
        if not s.is_classical:
            continue
        if lendim_formula(s) != QuadExpr.rational(length_simple(s)):
            bad.append(str(s))
        floor = QuadExpr.sqrt(s.dim, Fraction(5, 4)) * QuadExpr.sqrt(Fraction(1, 2)) - Fraction(9, 8)
        if not QuadExpr.rational(length_simple(s)) >= floor:
            floor_bad.append(str(s))
    out = [
        Check(
            "radical formula reproduces the classical length exactly",
            {"max_degree": max_degree, "mismatches": bad[:8]},
            f"mismatches = {len(bad)}",
            "expected 0",
            not bad,
        ),
        Check(
            "uniform floor l >= beta*sqrt(d) - 9/8",
            {"max_degree": max_degree, "mismatches": floor_bad[:8]},
            f"mismatches = {len(floor_bad)}",
            "expected 0",
            not floor_bad,
        ),
    ]
    limits = {"SU": QuadExpr.rational(2),
              "Sp": QuadExpr.sqrt(2, Fraction(3, 2)),
              "SO": BETA}
    degree = 400
    for fam, limit in limits.items():
        s = SimpleType(fam, degree)
        ratio = length_simple(s) / (s.dim ** 0.5)
        gap = abs(ratio - float(limit))
        out.append(Check(
            f"length-to-sqrt-dimension ratio near its limit for {fam}",
            {"degree": degree, "ratio": round(ratio, 5), "limit": limit.decimal(5)},
            f"|ratio - limit| = {gap:.5f}",
            "< 0.05",
            gap < 0.05,
        ))
    return out


SUITES: dict[str, Callable[[int], list[Check]]] = {
    "general": suite_general,
    "dimlen": suite_dimlen,
    "sqrt": suite_sqrt,
    "smalll": suite_smalll,
    "liedep": suite_liedep,
    "depbds": suite_depbds,
    "ld": suite_ld,
    "cd": suite_cd,
    "lcd": suite_lcd,
    "complex": suite_complex,
    "tables": suite_tables,
    "lendim": suite_lendim,
}


def run_suites(names: Iterable[str], max_dim: int = DEFAULT_MAX_DIM) -> list[tuple[str, Check]]:
    out = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r} (have: {', '.join(sorted(SUITES))})")
        for check in SUITES[name](max_dim):
            out.append((name, check))
    return out
