"""The twelve acceptance criteria, each at its stated tolerance.

Every test prints one ``ACCEPTANCE #k PASS|FAIL`` line (visible with ``-s`` or in
the terminal summary) before asserting.
"""

import math
import time


from eccspectra import closed_forms as cf
from eccspectra.eigen import eigenvalues, energy
from eccspectra.enumeration import enumerate_free_trees, pruefer_free_trees
from eccspectra.graphs import build_dnd, build_t3, canonical_code, complement, path
from eccspectra.matrices import adjacency_matrix, eccentricity_matrix
from conftest import automorphism_count, to_nx
from eccspectra.verifier import (
    STATISTICS,
    TheoremId,
    appendix_table_crosscheck,
    check,
    clear_profile_cache,
    profiles,
)

TOL = 1e-8
NG_TOL = 1e-6
TABLE_TOL = 5e-4
PATH_TOL = 1e-9

RESULTS: list[str] = []


def record(k: int, name: str, ok: bool, detail: str = "") -> None:
    line = f"ACCEPTANCE #{k:<2d} {'PASS' if ok else 'FAIL'}  {name}" + (f"  [{detail}]" if detail else "")
    RESULTS.append(line)
    print("\n" + line)
    assert ok, line


def statuses(report):
    return {o.n: o.status for o in report.orders}


def test_01_t3_closed_form_agreement():
    start = time.perf_counter()
    worst = 0.0
    cases = 0
    for n in range(4, 13):
        for a in range((n - 4) // 2 + 1):
            b = n - 4 - a
            solver = eigenvalues(eccentricity_matrix(complement(build_t3(n, a, b)))).values
            closed = cf.spec_t3_complement(n, a, b).values()
            worst = max(worst, max(abs(x - y) for x, y in zip(solver, closed)))
            # zero eigenvalue with multiplicity n - 4
            zeros = sum(1 for x in solver if abs(x) <= TOL)
            assert zeros == n - 4
            cases += 1
    elapsed = time.perf_counter() - start
    record(1, "T3 complement spectrum vs closed form", worst <= TOL and elapsed < 5.0,
           f"{cases} cases, max dev {worst:.2e}, {elapsed:.2f}s")


def test_02_t4_closed_form_agreement():
    r = check(TheoremId.LEMMA_T4, 5, 12)
    st = statuses(r)
    devs = {o.n: o.data["spectrum_deviation"] for o in r.orders}
    ok = (
        all(st[n] == "holds" and devs[n] <= TOL for n in range(6, 13))
        and st[5] == "informational"
        and "spectrum_deviation" in r.orders[0].data
    )
    record(2, "T4 complement spectrum vs closed form (n=6..12, n=5 informational)", ok,
           f"max dev {max(devs[n] for n in range(6, 13)):.2e}; n=5 dev {devs[5]:.2e}")


def test_03_spectrum_symmetry():
    clear_profile_cache()
    start = time.perf_counter()
    r = check(TheoremId.SPEC_SYM, 4, 10)
    elapsed = time.perf_counter() - start
    trees = sum(o.data["trees"] for o in r.orders)
    worst = max(o.data["max_asymmetry"] for o in r.orders)
    # 191 = non-star free trees on 4..10 vertices
    ok = r.verdict == "holds" and trees == 191 and worst <= TOL and elapsed < 30.0
    record(3, "E(T^c) spectrum symmetric about 0 (n=4..10)", ok,
           f"{trees} trees, max asym {worst:.2e}, {elapsed:.2f}s")


def test_04_xi1_extremes():
    lo = check(TheoremId.XI1_MIN, 4, 10)
    hi = check(TheoremId.XI1_MAX, 4, 10)
    ok = all(s == "holds" for r in (lo, hi) for s in statuses(r).values())
    for n in range(5, 11):
        mins = [w for w in lo.witnesses if w.n == n]
        ok &= len(mins) == 1 and mins[0].code == canonical_code(path(n))
        ok &= abs(mins[0].value - 4 * math.cos(math.pi / (n + 1))) <= TOL
    for n in range(4, 11):
        maxs = [w for w in hi.witnesses if w.n == n]
        s = 4 * n + 1
        ok &= len(maxs) == 1 and maxs[0].code == canonical_code(build_t3(n, 0, n - 4))
        ok &= abs(maxs[0].value - math.sqrt((s + math.sqrt(s * s - 64 * (n - 3))) / 2)) <= TOL
    record(4, "xi_1 unique min P_n and unique max T_{n,3}^{0,n-4}", ok)


def test_05_xin_and_xi2_minima():
    ids = (TheoremId.XIN_MIN, TheoremId.XIN_MAX, TheoremId.XI2_MIN)
    reports = [check(t, 4, 10) for t in ids]
    ok = all(s == "holds" for r in reports for s in statuses(r).values())
    ok &= all(not r.counterexamples for r in reports)
    # one witness per order means a unique attainer
    ok &= all(len([w for w in r.witnesses if w.n == n]) == 1 for r in reports for n in range(5, 11))
    xi2 = reports[2]
    for n in range(4, 11):
        w = next(w for w in xi2.witnesses if w.n == n)
        ok &= w.code == canonical_code(build_t3(n, 0, n - 4))
        ok &= abs(w.value - cf.bounds_diam3(n)["xi2_min"].value) <= TOL
    record(5, "xi_n extremes and xi_2 minimum, unique attainers", ok, ", ".join(r.verdict for r in reports))


def _xi2c(p):
    return p.complement_spectrum.values[1]


def test_06_xi2_maxima():
    ok = True
    notes = []
    for n in (7, 9):
        s = (n - 3) // 2
        bound = 2 * math.sqrt((n - 3) / 2)
        deep = [p for p in profiles(n) if p.diameter >= 4]
        top = max(_xi2c(p) for p in deep)
        at_top = {p.code for p in deep if abs(_xi2c(p) - top) <= TOL}
        family = {
            canonical_code(build_dnd(n, 4, s - 1, s - 1)),
            canonical_code(build_dnd(n, 5, s - 2, s - 1)),
            canonical_code(build_dnd(n, 6, s - 2, s - 2)),
        }
        ok &= abs(top - bound) <= TOL and at_top == family
        notes.append(f"n={n}: {len(at_top)} maximizers")
    r = check(TheoremId.XI2_MAX, 6, 10)
    ok &= r.verdict == "holds"
    for o in r.orders:
        if "exceptional" not in o.data:
            continue
        exc = o.data["exceptional"]
        twice_root = 2 * cf.exceptional_root(exc["s"])
        ok &= exc["observed"] > math.sqrt(2 * (o.n - 3))
        ok &= abs(exc["observed"] - twice_root) <= TOL
        ok &= cf.RESOLVED_CUBIC in exc["matched_forms"]
        notes.append(f"n={o.n}: matched {exc['matched_forms']}")
    ok &= any("cubic form matching" in note for note in r.notes)
    record(6, "xi_2 maxima and exceptional family", ok, "; ".join(notes))


def test_07_energy_extremes():
    lo = check(TheoremId.ENERGY_MIN, 5, 10)
    hi = check(TheoremId.ENERGY_MAX, 5, 10)
    ok = not lo.counterexamples and not hi.counterexamples
    for n in range(7, 11):
        ok &= statuses(lo)[n] == "holds" and statuses(hi)[n] == "holds"
        wmin = [w for w in lo.witnesses if w.n == n]
        wmax = [w for w in hi.witnesses if w.n == n]
        ok &= len(wmin) == 1 and wmin[0].code == canonical_code(build_t3(n, 0, n - 4))
        ok &= abs(wmin[0].value - 2 * math.sqrt(4 * n + 1 + 8 * math.sqrt(n - 3))) <= TOL
        ok &= len(wmax) == 1 and wmax[0].code == canonical_code(path(n))
        ok &= abs(wmax[0].value - 2 * energy(eigenvalues(adjacency_matrix(path(n))))) <= TOL
    small = {o.n: o for o in lo.orders if o.n in (5, 6)}
    ok &= all(o.status == "informational" and o.data.get("deviations") for o in small.values())
    ok &= [w.code for w in small[5].witnesses] == [canonical_code(path(5))]
    ok &= [w.code for w in small[6].witnesses] == [canonical_code(build_dnd(6, 4, 0, 1))]
    ok &= all(statuses(hi)[n] == "informational" for n in (5, 6))
    record(7, "energy min/max for n=7..10; n=5,6 informational", ok)


def test_08_tabulated_energies():
    r = appendix_table_crosscheck()
    by = {e["label"]: e for e in r.orders[0].data["entries"]}
    deep = ("T2", "T5", "T6", "T7")
    shallow = ("T1", "T3", "T4")
    ok = all(by[k]["diameter"] >= 4 and abs(by[k]["solver_energy"] - by[k]["table"]) <= TABLE_TOL for k in deep)
    ok &= all(by[k]["diameter"] == 3 and not by[k]["matches_solver"] for k in shallow)
    ok &= all(abs(by[k]["twice_adjacency_energy"] - by[k]["table"]) <= TABLE_TOL for k in shallow)
    ok &= all(any(k in note for note in r.notes) for k in shallow)
    detail = ", ".join(f"{k}={by[k]['solver_energy']:.4f}" for k in sorted(by))
    record(8, "tabulated energies: 4 reproduced, 3 explained by 2*E_A", ok, detail)


def test_09_path_energy_closed_form():
    worst = 0.0
    for n in range(1, 51):
        direct = energy(eigenvalues(adjacency_matrix(path(n))))
        worst = max(worst, abs(cf.path_adjacency_energy(n) - direct))
    record(9, "path energy closed form vs eigenvalue sum, n<=50", worst <= PATH_TOL, f"max dev {worst:.2e}")


def test_10_nordhaus_gaddum():
    ok = True
    for tid in (TheoremId.NG_XI2, TheoremId.NG_ENERGY):
        r = check(tid, 7, 10)
        ok &= r.verdict == "holds" and all(s == "holds" for s in statuses(r).values())
        for n in range(7, 11):
            bound = cf.nordhaus_gaddum_bounds(n)["ng_xi2" if tid is TheoremId.NG_XI2 else "ng_energy"].value
            key = "ng-xi2" if tid is TheoremId.NG_XI2 else "ng-energy"
            vals = {p.code: STATISTICS[key].from_profile(p) for p in profiles(n)}
            ok &= all(v >= bound - NG_TOL for v in vals.values())
            tight = {c for c, v in vals.items() if abs(v - bound) <= NG_TOL}
            ok &= tight == {canonical_code(build_t3(n, 0, n - 4))}
    record(10, "Nordhaus-Gaddum lower bounds, equality only at T_{n,3}^{0,n-4}", ok)


def test_11_enumeration():
    expected = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106)
    gen = {n: [canonical_code(t) for t in enumerate_free_trees(n)] for n in range(1, 11)}
    oracle = {n: set(pruefer_free_trees(n)) for n in range(1, 10)}
    ok = tuple(len(gen[n]) for n in range(1, 11)) == expected
    ok &= tuple(len(oracle[n]) for n in range(1, 10)) == expected[:9]
    ok &= all(set(gen[n]) == oracle[n] for n in range(1, 10))
    # n = 10 is out of reach for full decoding (10**8 sequences); the labeled
    # trees counted by the Prüfer bijection must split into orbits n!/|Aut T|
    labeled = sum(math.factorial(10) // automorphism_count(to_nx(t)) for t in enumerate_free_trees(10))
    ok &= labeled == 10**8
    record(11, "free-tree counts and Prüfer oracle agreement", ok,
           f"counts {tuple(len(gen[n]) for n in range(1, 11))}, n=10 labeled {labeled}")


def test_12_quotient_containment():
    r = check(TheoremId.QUOTIENT_CONTAINMENT, 4, 12)
    labels = [(o.n, k, v) for o in r.orders for k, v in o.data.items()]
    equitable = all(v["equitable"] for _, _, v in labels)
    worst = max(v["max_mismatch"] for _, _, v in labels)
    ok = r.verdict == "holds" and equitable and worst <= TOL
    record(12, "equitable quotients, eigenvalues contained in the spectrum", ok,
           f"{len(labels)} partitions, max mismatch {worst:.2e}")
