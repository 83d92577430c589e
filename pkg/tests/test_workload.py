import numpy as np
import pytest
from scipy import stats

from ccnsim.topology import generate_random_graph, star_graph
from ccnsim.workload import (
    WorkloadConfig,
    ZipfMandelbrot,
    generate_requests,
    place_consumers_and_server,
    poisson_arrivals,
    read_trace,
    write_trace,
    zipf_mandelbrot_sample,
)


def test_exponent_zero_is_uniform():
    rng = np.random.default_rng(1)
    draws = ZipfMandelbrot(10, 0.0, q=3.0).sample(rng, 100_000)
    freq = np.bincount(draws, minlength=11)[1:] / 100_000
    assert np.abs(freq - 0.1).max() <= 0.01


def test_two_item_normalization():
    p1 = 1 / (1 + 2 ** -0.7)
    z = ZipfMandelbrot(2, 0.7)
    assert p1 == pytest.approx(0.6190, abs=1e-4)
    np.testing.assert_allclose(z.pmf, [p1, 1 - p1])
    draws = z.sample(np.random.default_rng(2), 100_000)
    assert (draws == 1).mean() == pytest.approx(p1, abs=0.01)


@pytest.mark.parametrize("a,q", [(0.1, 0.0), (0.7, 0.0), (1.0, 5.0)])
def test_rank_one_is_modal(a, q):
    draws = ZipfMandelbrot(50, a, q).sample(np.random.default_rng(3), 50_000)
    counts = np.bincount(draws)
    assert counts.argmax() == 1


def test_single_draw_in_range():
    rng = np.random.default_rng(4)
    cfg = WorkloadConfig(catalog_size=7)
    for _ in range(200):
        r = zipf_mandelbrot_sample(rng, cfg)
        assert isinstance(r, int) and 1 <= r <= 7


def test_chi_square_goodness_of_fit():
    z = ZipfMandelbrot(100, 0.7)
    draws = z.sample(np.random.default_rng(5), 100_000)
    observed = np.bincount(draws, minlength=101)[1:]
    _, p = stats.chisquare(observed, z.pmf * 100_000)
    assert p > 0.01


def test_poisson_count_and_gaps():
    for seed in range(5):
        t = poisson_arrivals(np.random.default_rng(seed), 100.0, 100.0)
        assert abs(len(t) - 10_000) <= 300
        assert (np.diff(t) > 0).all()
        assert t[0] >= 0 and t[-1] < 100.0
    t = poisson_arrivals(np.random.default_rng(9), 100.0, 1000.0)
    assert np.diff(t).mean() == pytest.approx(0.01, rel=0.05)
    assert len(poisson_arrivals(np.random.default_rng(0), 100.0, 0.0)) == 0
    with pytest.raises(ValueError):
        poisson_arrivals(np.random.default_rng(0), 0.0, 1.0)


def test_merged_rate_of_eighteen_consumers():
    cfg = WorkloadConfig(consumer_count=18, duration=10.0)
    trace = generate_requests(cfg, range(18), np.random.default_rng(6))
    expected = 18 * 100.0 * 10.0
    assert abs(len(trace) - expected) <= 3 * np.sqrt(expected)
    assert (np.diff(trace.times) >= 0).all()


def test_same_seed_same_trace():
    cfg = WorkloadConfig(duration=2.0)
    a = generate_requests(cfg, [1, 2, 3], np.random.default_rng(8))
    b = generate_requests(cfg, [1, 2, 3], np.random.default_rng(8))
    for x, y in zip((a.times, a.consumers, a.contents), (b.times, b.consumers, b.contents)):
        np.testing.assert_array_equal(x, y)


def test_star_consumers_are_leaves():
    g = star_graph(3)
    seed = next(s for s in range(100) if int(np.random.default_rng(s).integers(4)) == 0)
    consumers, server = place_consumers_and_server(g, 3, np.random.default_rng(seed))
    assert server == 0
    assert consumers == [1, 2, 3]


def test_default_placement():
    g = generate_random_graph(50, 150, 1)
    consumers, server = place_consumers_and_server(g, 18, np.random.default_rng(0))
    assert len(set(consumers)) == 18 and server not in consumers
    degrees = sorted(g.degree(v) for v in range(50) if v != server)
    assert sorted(g.degree(v) for v in consumers) == degrees[:18]


def test_placement_exhaustion_and_limit():
    g = generate_random_graph(10, 15, 2)
    consumers, server = place_consumers_and_server(g, 9, np.random.default_rng(0))
    assert sorted(consumers + [server]) == list(range(10))
    with pytest.raises(ValueError):
        place_consumers_and_server(g, 10, np.random.default_rng(0))


def test_config_validation():
    for bad in (dict(catalog_size=0), dict(zipf_a=-1), dict(lambda_per_consumer=0), dict(duration=0)):
        with pytest.raises(ValueError):
            WorkloadConfig(**bad)


def test_trace_csv_round_trip(tmp_path):
    trace = generate_requests(WorkloadConfig(duration=0.5), [4, 7], np.random.default_rng(1))
    path = tmp_path / "trace.csv"
    write_trace(trace, path)
    assert path.read_text().splitlines()[0] == "time_s,consumer_node,content_rank"
    back = read_trace(path)
    np.testing.assert_array_equal(back.consumers, trace.consumers)
    np.testing.assert_array_equal(back.contents, trace.contents)
    np.testing.assert_allclose(back.times, trace.times, atol=1e-9)
