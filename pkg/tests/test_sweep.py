from symcomm.pairs import Family
from symcomm.sweep import SweepConfig, run_sweep, summary


def test_small_sweep_is_clean():
    cfg = SweepConfig(samples=6, families=(Family.of("AIII", 1, 2), Family.of("CI", 2)))
    res = run_sweep(cfg)
    s = summary(res)
    assert s["pairs"] == 2 and s["samples"] == 12 and s["violations"] == 0
    assert sum(res[0].strategies.values()) == 6


def test_grid_config():
    assert len(SweepConfig().family_list()) == 73
    assert len(SweepConfig(max_pq=2, max_n=3).family_list()) < 73
