import pytest

from ccnsim.metrics import CACHE, SERVER, MetricsReport, record_delivery, record_issue


def test_hit_ratio_six_of_ten():
    r = record_issue(MetricsReport(), 10)
    for i in range(10):
        record_delivery(r, CACHE if i < 6 else SERVER, 2, 0.04)
    assert r.hit_ratio == pytest.approx(0.6)


def test_all_from_server():
    r = record_issue(MetricsReport(), 4)
    for _ in range(4):
        record_delivery(r, SERVER, 3, 0.06)
    assert r.hit_ratio == 0.0


def test_single_delivery_averages():
    r = record_delivery(record_issue(MetricsReport()), SERVER, 3, 0.0648)
    assert r.avg_hop_count == 3.0
    assert r.avg_latency == pytest.approx(0.0648)


def test_empty_report_is_zero():
    r = MetricsReport()
    assert (r.hit_ratio, r.avg_hop_count, r.avg_latency) == (0.0, 0.0, 0.0)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        record_delivery(MetricsReport(), CACHE, -1, 0.0)
    with pytest.raises(ValueError):
        record_delivery(MetricsReport(), "router", 1, 0.0)
