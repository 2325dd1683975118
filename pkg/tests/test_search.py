import pytest

from klsposets.generators import chain
from klsposets.isomorphism import is_isomorphic
from klsposets.poset import is_eulerian, poset_from_dict
from klsposets.search import SearchConfig, run_search, sample_graded_posets, z_vs_hhat
from klsposets.suite import gamma_scan_suite


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(mode="nope"),
        dict(truncation_variant="loose"),
        dict(max_elements=11),
        dict(max_elements=1),
        dict(max_rank=0),
        dict(jobs=0),
        dict(exhaustive=False, samples=0),
    ],
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        SearchConfig(**kwargs).validate()


def test_sampled_mode_allows_larger_posets():
    SearchConfig(max_elements=14, exhaustive=False).validate()


def test_three_chain_is_a_counterexample():
    found = z_vs_hhat(chain(2))
    assert found["Z"] == [0, 3] and found["hhat"] == [0, 2, 1]
    assert z_vs_hhat(chain(1)) is None


def test_smallest_counterexample_is_the_three_chain():
    res = run_search(SearchConfig(max_elements=3, max_rank=3))
    assert res["count"] == 1
    assert is_isomorphic(poset_from_dict(res["findings"][0]["poset"]), chain(2))


def test_exhaustive_search_finds_counterexamples_deterministically():
    cfg = SearchConfig(max_elements=7, max_rank=3)
    a, b = run_search(cfg), run_search(cfg)
    assert a == b
    assert a["count"] >= 1
    for f in a["findings"]:
        P = poset_from_dict(f["poset"])
        assert not is_eulerian(P) and f["Z"] != f["hhat"]


def test_parallel_matches_serial():
    serial = run_search(SearchConfig(max_elements=7, max_rank=3))
    parallel = run_search(SearchConfig(max_elements=7, max_rank=3, jobs=2))
    assert serial["findings"] == parallel["findings"]


def test_eulerian_only_has_no_findings():
    for trunc in ("paper", "strict"):
        res = run_search(SearchConfig(max_elements=8, max_rank=3, eulerian_only=True, truncation_variant=trunc))
        assert res["count"] == 0


def test_sampled_reproducible_by_seed():
    a = [P.covers for P in sample_graded_posets(9, 4, 20, seed=3)]
    b = [P.covers for P in sample_graded_posets(9, 4, 20, seed=3)]
    c = [P.covers for P in sample_graded_posets(9, 4, 20, seed=4)]
    assert a == b and a != c
    cfg = SearchConfig(max_elements=9, max_rank=4, exhaustive=False, samples=20, seed=3)
    assert run_search(cfg) == run_search(cfg)


def test_gamma_scan_on_polytopal_suite():
    res = run_search(SearchConfig(mode="gamma_scan"), gamma_scan_suite())
    assert res["candidates"] == len(gamma_scan_suite()) and res["count"] == 0
