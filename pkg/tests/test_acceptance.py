"""Acceptance criteria 1-10, exact integer equality throughout.

Each test records one ``[PASS]``/``[FAIL]`` line, repeated in the terminal
summary under "acceptance criteria".
"""

import json
import time

from klsposets.cli import main
from klsposets.generators import boolean, cross_polytope_faces, cube_faces, paper_fig1
from klsposets.isomorphism import is_isomorphic
from klsposets.kls import be_toric, be_z, chow_function, chow_via_zeta_oracle, eulerian_kernel, kls_bundle, z_function
from klsposets.polynomial import IntPolynomial
from klsposets.poset import interval_poset, is_eulerian
from klsposets.props import veronese
from klsposets.suite import eulerian_suite
from klsposets.verify import verify_chow_veronese, verify_ghat_formula, verify_rank_lemma, verify_z_equals_hhat


def cli_json(capsys, *argv):
    code = main(list(argv) + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_criterion_01_figure2_fixture(capsys, acceptance_line):
    start = time.perf_counter()
    code, inv = cli_json(capsys, "invariants", "gen:paper_fig2")
    elapsed = time.perf_counter() - start
    ok = (
        code == 0
        and inv["h"] == [1, -1, -1, 1]
        and inv["Z"] == [1, 0, -2, 0, 1]
        and inv["properties"]["Z"]["gamma"] == [1, -4, 0]
        and inv["properties"]["Z"]["gamma_positive"] is False
        and elapsed < 1.0
    )
    assert acceptance_line(1, "Figure-2 h, Z, gamma(Z)", ok, f"{elapsed:.3f}s")


def test_criterion_02_z_equals_hhat_on_suite(acceptance_line):
    start = time.perf_counter()
    reports = [verify_z_equals_hhat(P) for P in eulerian_suite()]
    elapsed = time.perf_counter() - start
    checked = sum(r.checked for r in reports)
    ok = all(r.passed for r in reports) and elapsed < 60
    assert acceptance_line(2, "Z = toric h of interval poset, all intervals, suite", ok,
                           f"{checked} intervals, {elapsed:.2f}s")


def test_criterion_03_ghat_product_formula(acceptance_line):
    P, B3 = paper_fig1(), boolean(3)
    reports = [verify_ghat_formula(P), verify_ghat_formula(B3)]
    ok = all(r.passed for r in reports) and interval_poset(P).poset.n == 20
    assert acceptance_line(3, "g of interval poset factors as g * f (Figure-1, B3)", ok,
                           f"{sum(r.checked for r in reports)} pairs")


def test_criterion_04_rank_lemma(acceptance_line):
    reports = [verify_rank_lemma(P) for P in eulerian_suite()]
    ok = all(r.passed for r in reports)
    assert acceptance_line(4, "interval poset rank formulas, suite", ok,
                           f"{sum(r.checked for r in reports)} checks")


def test_criterion_05_lindstrom_and_cross_polytope(acceptance_line):
    eulerian = all(is_eulerian(interval_poset(P).poset) for P in eulerian_suite())
    cross = all(is_isomorphic(interval_poset(boolean(r)).poset, cross_polytope_faces(r)) for r in (1, 2, 3))
    ok = eulerian and cross
    assert acceptance_line(5, "interval poset stays Eulerian; Int(B_r) = r-cross-polytope", ok)


def test_criterion_06_chow_dual_route(acceptance_line):
    same = all(chow_function(P)[(P.bottom, P.top)] == chow_via_zeta_oracle(P) for P in eulerian_suite())
    B3 = boolean(3)
    ok = same and chow_function(B3)[(B3.bottom, B3.top)] == IntPolynomial([1, 4, 1])
    assert acceptance_line(6, "Chow function = zeta-polynomial route; B3 gives 1+4x+x^2", ok)


def test_criterion_07_chow_veronese(acceptance_line):
    reports = [verify_chow_veronese(P) for P in eulerian_suite()]
    diamond = boolean(2)
    H = chow_function(diamond)[(diamond.bottom, diamond.top)]
    Hhat = chow_function(interval_poset(diamond).poset)
    hat = interval_poset(diamond)
    example = (H == IntPolynomial([1, 1]) and veronese(H.coeffs, 2, 2) == [1, 6, 1]
               and Hhat[(hat.poset.bottom, hat.poset.top)] == IntPolynomial([1, 6, 1]))
    ok = all(r.passed for r in reports) and example
    assert acceptance_line(7, "Chow of interval poset = 2nd Veronese; diamond (1,1) -> (1,6,1)", ok)


def test_criterion_08_be_consistency(acceptance_line):
    ok = True
    for P in eulerian_suite():
        b = kls_bundle(P)
        g, h = be_toric(P)
        ok &= g == b.g
        ok &= all(h[st] == b.h[st] for st in P.intervals if st[0] != st[1])
        ok &= be_z(P) == b.z
    assert acceptance_line(8, "Bayer-Ehrenborg g, h, Z match the kernel route", ok,
                           "h compared off the diagonal")


def test_criterion_09_counterexample_search(capsys, acceptance_line):
    start = time.perf_counter()
    code, res = cli_json(capsys, "search", "--mode", "z_vs_hhat", "--max-elements", "8", "--exhaustive")
    elapsed = time.perf_counter() - start
    ok = (code == 0 and res["count"] >= 1 and all(not f["eulerian"] for f in res["findings"])
          and all(f["Z"] != f["hhat"] for f in res["findings"]) and elapsed < 300)
    assert acceptance_line(9, "search finds graded non-Eulerian posets with Z != toric h", ok,
                           f"{res['count']} of {res['candidates']}, {elapsed:.2f}s")


def test_criterion_10_performance(acceptance_line):
    cube = cube_faces(3)
    start = time.perf_counter()
    z = z_function(cube, eulerian_kernel(cube))
    rep = verify_z_equals_hhat(cube)
    t_cube = time.perf_counter() - start
    B5 = boolean(5)
    start = time.perf_counter()
    zb = z_function(B5, eulerian_kernel(B5))
    t_b5 = time.perf_counter() - start
    # Z of a Boolean interval of rank r is (1 + x)^r
    b5_ok = all(zb[(s, t)] == IntPolynomial([1, 1]) ** B5.rho(s, t) for s, t in B5.intervals)
    ok = rep.passed and len(z.table) == len(cube.intervals) and b5_ok and t_cube < 10 and t_b5 < 10
    assert acceptance_line(10, "3-cube Z with interval-poset route, B5 Z", ok,
                           f"cube {t_cube:.2f}s, B5 {t_b5:.2f}s")
