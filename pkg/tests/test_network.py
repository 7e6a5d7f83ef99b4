import random
from itertools import combinations

import pytest

from core.exceptions import UsageError
from domain import CountingMode, MetricKind, ServiceDescription
from services.corpus import build_corpus, operation, service_io
from services.metrics import make_metric, similarity
from services.network import CompositionScorer, build_network, diff_reports, link_exists, similarity_pairs

METRICS = [make_metric(kind) for kind in MetricKind]
GRID = [i / 10 for i in range(11)]


def brute_force_links(corpus, metric, t, vacuous=False):
    return {
        (a.id, b.id)
        for a in corpus.services
        for b in corpus.services
        if a.id != b.id and link_exists(a, b, metric, t, vacuous)
    }


def brute_force_pairs(corpus, metric, t):
    vocabulary = corpus.vocabulary
    found = set()
    for a, b in combinations(sorted(vocabulary), 2):
        ea, eb = vocabulary[a], vocabulary[b]
        roles = (ea.as_output and eb.as_input) or (eb.as_output and ea.as_input)
        if roles and similarity(metric, a, b) >= t:
            found.add((a, b))
    return found


def service(sid, inputs, outputs):
    return ServiceDescription(id=sid, name=sid, operations=(operation("op", inputs, outputs),))


# ==================== link_exists ====================

def test_fig2_links(fig2_corpus):
    lev = METRICS[0]
    alpha, beta, gamma = fig2_corpus.services
    assert link_exists(alpha, beta, lev, 1.0)
    assert not link_exists(alpha, gamma, lev, 1.0)
    assert not link_exists(beta, gamma, lev, 1.0)


def test_source_without_outputs_never_links():
    source = service("s", ["a"], [])
    target = service("t", ["a"], ["b"])
    for metric in METRICS:
        assert not link_exists(source, target, metric, 0.0)


def test_empty_input_target():
    source = service("s", [], ["a"])
    target = service("t", [], ["b"])
    assert not link_exists(source, target, METRICS[0], 0.5)
    assert link_exists(source, target, METRICS[0], 0.5, vacuous_links=True)


def test_self_link_is_usage_error(fig2_corpus):
    alpha = fig2_corpus.services[0]
    with pytest.raises(UsageError):
        link_exists(alpha, alpha, METRICS[0], 1.0)


# ==================== build_network ====================

def test_fig2_network(fig2_corpus):
    for metric in METRICS:
        net = build_network(fig2_corpus, metric, 1.0)
        assert net.nodes == ("alpha", "beta", "gamma")
        assert set(net.links) == {("alpha", "beta")}
        assert net.metric == metric.kind
        assert len(net.corpus_fingerprint) == 16


def test_no_matching_pair_means_no_links():
    corpus = build_corpus([service("s1", ["aaaa"], ["bbbb"]), service("s2", ["cccc"], ["dddd"])])
    net = build_network(corpus, METRICS[0], 0.5)
    assert net.links == ()


@pytest.mark.parametrize(
    "kind, output, input_, t",
    [
        (MetricKind.JARO, "ab", "abxyz", 0.8),
        (MetricKind.LEVENSHTEIN, "aaaaaaaaaa", "bbbbbbbbba", 0.1),
        (MetricKind.LEVENSHTEIN, "a" * 25, "b" * 8 + "a" * 17, 0.68),
        (MetricKind.JARO_WINKLER, "_LOCATION", "_LOCATION1", 0.98),
    ],
)
def test_link_at_exact_score(kind, output, input_, t):
    corpus = build_corpus([service("alpha", [], [output]), service("beta", [input_], [])])
    metric = make_metric(kind)
    alpha, beta = corpus.services
    assert link_exists(alpha, beta, metric, t)
    assert build_network(corpus, metric, t).links == (("alpha", "beta"),)
    assert len(similarity_pairs(corpus, metric, t).pairs) == 1
    assert build_network(corpus, metric, t + 0.01).links == ()


def test_jaro_network_equals_brute_force(corpus_factory):
    corpus = corpus_factory(10, n_services=10)
    jaro = make_metric(MetricKind.JARO)
    assert set(build_network(corpus, jaro, 0.8).links) == brute_force_links(corpus, jaro, 0.8)


def test_network_equals_brute_force_on_random_corpora(corpus_factory):
    for seed in range(25):
        corpus = corpus_factory(seed, n_services=1 + seed % 12)
        for metric in METRICS:
            scorer = CompositionScorer(corpus, metric)
            for t in (0.0, 0.35, 0.7, 0.9, 1.0):
                for vacuous in (False, True):
                    expected = brute_force_links(corpus, metric, t, vacuous)
                    assert set(scorer.network(t, vacuous).links) == expected


def test_links_are_sorted_and_deterministic(mini_corpus):
    first = build_network(mini_corpus, METRICS[2], 0.8)
    second = build_network(mini_corpus, METRICS[2], 0.8)
    assert first == second
    assert list(first.links) == sorted(first.links)


def test_complete_at_zero_except_empty_sets(corpus_factory):
    for seed in range(10):
        corpus = corpus_factory(seed)
        net = build_network(corpus, METRICS[1], 0.0)
        links = set(net.links)
        for a in corpus.services:
            for b in corpus.services:
                if a.id == b.id:
                    continue
                outputs, inputs = service_io(a)[1], service_io(b)[0]
                assert ((a.id, b.id) in links) == (bool(outputs) and bool(inputs))


def test_metrics_agree_at_one(corpus_factory):
    for seed in range(20):
        corpus = corpus_factory(seed)
        nets = {frozenset(build_network(corpus, m, 1.0).links) for m in METRICS}
        pairs = {frozenset(p.key for p in similarity_pairs(corpus, m, 1.0).pairs) for m in METRICS}
        assert len(nets) == 1
        assert len(pairs) == 1


def test_monotonicity(corpus_factory):
    for seed in range(100):
        corpus = corpus_factory(seed, n_services=6)
        for metric in METRICS:
            scorer = CompositionScorer(corpus, metric)
            links = [set(scorer.network(t).links) for t in GRID]
            pairs = [{p.key for p in scorer.pairs(t)} for t in GRID]
            for low, high in zip(range(len(GRID)), range(1, len(GRID))):
                assert links[high] <= links[low]
                assert pairs[high] <= pairs[low]


def test_network_validation_rejects_self_links():
    from domain import InteractionNetwork

    with pytest.raises(ValueError):
        InteractionNetwork(nodes=("a",), links=(("a", "a"),), metric=MetricKind.JARO, threshold=0.5)


# ==================== similarity_pairs ====================

def test_exact_co_occurrence_mode():
    corpus = build_corpus([service("s1", [], ["x"]), service("s2", ["x"], [])])
    lev = METRICS[0]
    exact = similarity_pairs(corpus, lev, 1.0, CountingMode.EXACT_CO_OCCURRENCE)
    assert [p.key for p in exact.pairs] == [("x", "x")]
    assert similarity_pairs(corpus, lev, 1.0).pairs == ()


def test_location_pairs_jaro_winkler():
    corpus = build_corpus([
        service("s1", ["_LOCATION1"], ["_LOCATION"]),
        service("s2", ["_LOCATION2"], ["_CITY"]),
    ])
    expected = {("_LOCATION", "_LOCATION1"), ("_LOCATION", "_LOCATION2")}

    # p=0.1, l_max=4: ambos pares puntúan exactamente 0.98
    default = {p.key for p in similarity_pairs(corpus, make_metric(MetricKind.JARO_WINKLER), 0.98).pairs}
    assert expected <= default
    assert ("_LOCATION1", "_LOCATION2") not in default

    boosted = make_metric(MetricKind.JARO_WINKLER, prefix_scale=0.2)
    assert expected <= {p.key for p in similarity_pairs(corpus, boosted, 0.99).pairs}


def test_pairs_equal_brute_force_on_random_names():
    rng = random.Random(50)
    pool = sorted({"".join(rng.choice("abcd") for _ in range(rng.randint(3, 8))) for _ in range(80)})[:50]
    services = [service(f"s{i}", rng.sample(pool, 4), rng.sample(pool, 4)) for i in range(12)]
    corpus = build_corpus(services)
    lev = METRICS[0]
    report = similarity_pairs(corpus, lev, 0.7)
    assert {p.key for p in report.pairs} == brute_force_pairs(corpus, lev, 0.7)
    assert all(p.score >= 0.7 for p in report.pairs)


def test_report_counts_and_baseline(mini_corpus):
    for metric in METRICS:
        scorer = CompositionScorer(mini_corpus, metric)
        for mode in CountingMode:
            for t in GRID:
                report = scorer.report(t, mode)
                assert report.n_pairs == scorer.count_pairs(t, mode)
                baseline = {p.key for p in report.baseline_pairs}
                assert baseline <= {p.key for p in report.pairs}
                assert not baseline & {p.key for p in report.additional}


def test_mini_corpus_government_pair(mini_corpus):
    for metric in METRICS:
        report = similarity_pairs(mini_corpus, metric, 0.9)
        assert ("_GOVERNMENT-ORGANIZATION", "_GOVERNMENTORGANIZATION") in {p.key for p in report.additional}


# ==================== diff_reports ====================

def test_diff_identical_thresholds(mini_corpus):
    scorer = CompositionScorer(mini_corpus, METRICS[0])
    assert diff_reports(scorer.report(0.8), scorer.report(0.8)) == ()


def test_diff_set_algebra(corpus_factory):
    for seed in range(20):
        corpus = corpus_factory(seed)
        for metric in METRICS:
            scorer = CompositionScorer(corpus, metric)
            for t1, t2 in [(0.3, 0.6), (0.6, 0.9), (0.5, 1.0)]:
                low, high = scorer.report(t1), scorer.report(t2)
                added = {p.key for p in diff_reports(low, high)}
                assert added | {p.key for p in high.pairs} == {p.key for p in low.pairs}
                assert not added & {p.key for p in high.pairs}


def test_diff_requires_same_metric_and_mode(mini_corpus):
    lev = CompositionScorer(mini_corpus, METRICS[0])
    jaro = CompositionScorer(mini_corpus, METRICS[1])
    with pytest.raises(UsageError):
        diff_reports(lev.report(0.8), jaro.report(1.0))
    with pytest.raises(UsageError):
        diff_reports(lev.report(0.8), lev.report(1.0, CountingMode.EXACT_CO_OCCURRENCE))
    with pytest.raises(UsageError):
        diff_reports(lev.report(1.0), lev.report(0.8))
