import pytest

from core.exceptions import ConfigurationError
from domain import Corpus, CountingMode, MetricKind, ServiceDescription, SweepConfig
from services.corpus import build_corpus, operation
from services.metrics import make_metric
from services.sweep import SweepRunner, run_sweep


def service(sid, inputs, outputs):
    return ServiceDescription(id=sid, name=sid, operations=(operation("op", inputs, outputs),))


def test_default_grid():
    grid = SweepConfig().grid()
    assert len(grid) == 101
    assert grid[0] == 0.0
    assert grid[37] == 0.37
    assert grid[-1] == 1.0


def test_fig2_three_point_grid(fig2_corpus):
    result = run_sweep(fig2_corpus, SweepConfig(t_step=0.5))
    assert len(result.records) == 9
    for kind in MetricKind:
        thresholds = [r.threshold for r in result.records_for(kind)]
        assert thresholds == [0.0, 0.5, 1.0]
        at_one = result.record_at(kind, 1.0)
        assert at_one.n_links == 1
        assert at_one.density == pytest.approx(1 / 6)
        assert at_one.n_isolated == 1


def test_records_cover_metrics_and_grid(mini_corpus):
    result = run_sweep(mini_corpus, SweepConfig())
    assert len(result.records) == 303
    assert result.metrics == list(MetricKind)
    for kind in MetricKind:
        records = result.records_for(kind)
        links = [r.n_links for r in records]
        pairs = [r.n_similarities for r in records]
        assert links == sorted(links, reverse=True)
        assert pairs == sorted(pairs, reverse=True)
        assert all(r.n_nodes == 12 for r in records)


def test_every_record_has_consistent_degree(mini_corpus, corpus_factory):
    for corpus in (mini_corpus, corpus_factory(7), corpus_factory(8)):
        for record in run_sweep(corpus, SweepConfig(t_step=0.05)).records:
            n = record.n_nodes
            assert record.avg_degree == pytest.approx(2 * record.n_links / n, abs=1e-12)
            if n > 1:
                assert record.avg_degree == pytest.approx(record.density * 2 * (n - 1), abs=1e-12)


def test_link_at_exact_jaro_score():
    corpus = build_corpus([service("alpha", [], ["ab"]), service("beta", ["abxyz"], [])])
    config = SweepConfig(metrics=(make_metric("jaro"),), t_start=0.7, t_end=0.9, t_step=0.1)
    records = run_sweep(corpus, config).records
    assert [r.threshold for r in records] == [0.7, 0.8, 0.9]
    assert [r.n_links for r in records] == [1, 1, 0]
    assert [r.n_similarities for r in records] == [1, 1, 0]


def test_reports_track_baseline(mini_corpus):
    result = run_sweep(mini_corpus, SweepConfig(t_step=0.1))
    for summary in result.reports:
        assert summary.n_additional >= 0
        if summary.threshold == 1.0:
            assert summary.n_additional == 0


def test_cached_scores_match_recomputation(corpus_factory):
    config = SweepConfig(t_step=0.05)
    for seed in range(5):
        corpus = corpus_factory(seed)
        assert SweepRunner(config, cache_scores=True).run(corpus) == SweepRunner(config, cache_scores=False).run(corpus)


def test_parallel_sweep_is_identical(mini_corpus):
    serial = run_sweep(mini_corpus, SweepConfig(t_step=0.1))
    parallel = run_sweep(mini_corpus, SweepConfig(t_step=0.1, jobs=2))
    assert parallel.records == serial.records
    assert parallel.reports == serial.reports


def test_exact_co_occurrence_counts_more(mini_corpus):
    distinct = run_sweep(mini_corpus, SweepConfig(t_step=0.25))
    exact = run_sweep(mini_corpus, SweepConfig(t_step=0.25, counting_mode=CountingMode.EXACT_CO_OCCURRENCE))
    for a, b in zip(distinct.records, exact.records):
        assert b.n_similarities >= a.n_similarities
        assert a.n_links == b.n_links


def test_single_metric_partial_grid(mini_corpus):
    config = SweepConfig(metrics=(make_metric("jaro"),), t_start=0.9, t_end=1.0, t_step=0.01)
    result = run_sweep(mini_corpus, config)
    assert len(result.records) == 11
    assert result.records[0].threshold == 0.9


@pytest.mark.parametrize(
    "config",
    [
        SweepConfig(t_step=0.03),
        SweepConfig(t_start=0.8, t_end=0.2),
        SweepConfig(t_step=0.0),
        SweepConfig(metrics=()),
    ],
)
def test_invalid_grid(config, mini_corpus):
    with pytest.raises(ConfigurationError):
        run_sweep(mini_corpus, config)


def test_empty_corpus_rejected():
    with pytest.raises(ConfigurationError):
        run_sweep(Corpus(), SweepConfig())
