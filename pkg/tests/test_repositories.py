import networkx as nx
import pytest

from core.exceptions import CorpusSchemaError, UsageError
from domain import CountingMode, MetricKind, NameSource, PairLabel, SweepConfig
from infrastructure.chart_renderer import ChartRenderer
from infrastructure.mappers import PROPERTY_COLUMNS
from infrastructure.repositories import LabelsRepository, NetworkRepository, SweepRepository, to_dot
from services.metrics import make_metric
from services.network import build_network
from services.sweep import run_sweep


@pytest.fixture
def fig2_sweep(fig2_corpus):
    return run_sweep(fig2_corpus, SweepConfig(t_step=0.5))


@pytest.fixture
def fig2_network(fig2_corpus):
    return build_network(fig2_corpus, make_metric("jaro"), 1.0)


# ==================== SWEEP ====================

def test_sweep_csv_layout(fig2_sweep, tmp_path):
    path = SweepRepository().save(fig2_sweep, tmp_path / "gold" / "sweep.csv")
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == ",".join(PROPERTY_COLUMNS)
    assert len(lines) == 1 + 9

    fields = dict(zip(PROPERTY_COLUMNS, lines[3].split(",")))
    assert (fields["metric"], fields["threshold"]) == ("levenshtein", "1.00")
    assert fields["n_links"] == "1"
    # un solo enlace: todos los extremos tienen el mismo grado
    assert fields["degree_correlation"] == ""
    assert fields["n_similarities"] == "0"


def test_sweep_csv_reload(fig2_sweep, tmp_path):
    repository = SweepRepository(tmp_path)
    repository.save(fig2_sweep, "sweep.csv")
    reloaded = repository.load("sweep.csv")
    assert len(reloaded.records) == len(fig2_sweep.records)
    for original, loaded in zip(fig2_sweep.records, reloaded.records):
        assert loaded.metric == original.metric
        assert loaded.threshold == pytest.approx(original.threshold)
        assert loaded.n_links == original.n_links
        assert (loaded.degree_correlation is None) == (original.degree_correlation is None)
        assert loaded.density == pytest.approx(original.density)


def test_sweep_parquet_round_trip(fig2_sweep, tmp_path):
    repository = SweepRepository(tmp_path)
    repository.save(fig2_sweep, "sweep.parquet")
    assert repository.load("sweep.parquet").records == fig2_sweep.records


def test_sweep_config_round_trip(fig2_corpus, tmp_path):
    config = SweepConfig(
        metrics=(make_metric("jaro_winkler", prefix_scale=0.2),),
        t_step=0.25,
        counting_mode=CountingMode.EXACT_CO_OCCURRENCE,
        vacuous_links=True,
        name_source=NameSource.QUALIFIED,
        jobs=2,
    )
    result = run_sweep(fig2_corpus, config)
    repository = SweepRepository(tmp_path)
    for name in ("sweep.csv", "sweep.parquet"):
        repository.save(result, name)
        loaded = repository.load(name)
        assert loaded.config == config.model_copy(update={"jobs": 1})
        assert loaded.corpus_fingerprint == result.corpus_fingerprint != ""
    assert (tmp_path / "sweep.config.json").exists()


def test_sweep_without_config_file(fig2_sweep, tmp_path):
    repository = SweepRepository(tmp_path)
    repository.save(fig2_sweep.model_copy(update={"config": None}), "bare.csv")
    assert not (tmp_path / "bare.config.json").exists()
    assert repository.load("bare.csv").config is None


def test_sweep_frame_requires_columns(tmp_path):
    path = tmp_path / "other.csv"
    path.write_text("a,b\n1,2\n", encoding="utf-8")
    with pytest.raises(UsageError):
        SweepRepository().load_frame(path)


# ==================== LABELS ====================

def test_labels_load(labels_path):
    labels = LabelsRepository().load(labels_path)
    assert len(labels) == 8
    assert labels.label_for("_HOTEL", "_HOSPITAL") == PairLabel.FALSE_POSITIVE
    assert labels.label_for("_LOCATION1", "_LOCATION") == PairLabel.APPROPRIATE
    assert labels.label_for("_LOCATION", "_HOTEL") is None


def test_labels_normalization_and_blank_rows(tmp_path):
    path = tmp_path / "labels.csv"
    path.write_text(
        "name_a,name_b,label\n Zeta , Alpha ,false_positive\nx,y,\n",
        encoding="utf-8",
    )
    labels = LabelsRepository(fold_case=True).load(path)
    assert labels.labels == {("alpha", "zeta"): PairLabel.FALSE_POSITIVE}


def test_labels_invalid_value(tmp_path):
    path = tmp_path / "labels.csv"
    path.write_text("name_a,name_b,label\na,b,maybe\n", encoding="utf-8")
    with pytest.raises(CorpusSchemaError) as info:
        LabelsRepository().load(path)
    assert info.value.path.endswith(":2")


def test_labels_missing_column(tmp_path):
    path = tmp_path / "labels.csv"
    path.write_text("name_a,label\na,appropriate\n", encoding="utf-8")
    with pytest.raises(CorpusSchemaError):
        LabelsRepository().load(path)


def test_labels_template(tmp_path):
    path = LabelsRepository(tmp_path).save_template([("a", "b"), ("c", "d")], "todo.csv")
    assert path.read_text(encoding="utf-8") == "name_a,name_b,label\na,b,\nc,d,\n"


# ==================== NETWORK ====================

def test_dot_output(fig2_network):
    dot = to_dot(fig2_network)
    assert dot.startswith("digraph composition {\n")
    assert "// metric=jaro threshold=1.00" in dot
    assert [line.strip() for line in dot.splitlines() if "->" in line] == ['"alpha" -> "beta";']


def test_dot_escapes_quotes(fig2_network):
    net = fig2_network.model_copy(update={"nodes": ('say "hi"', "beta", "gamma"), "links": ()})
    assert '"say \\"hi\\"";' in to_dot(net)


def test_graphml_export(fig2_network, tmp_path):
    path = NetworkRepository(tmp_path).save(fig2_network, "net.graphml")
    graph = nx.read_graphml(path)
    assert sorted(graph.nodes) == ["alpha", "beta", "gamma"]
    assert list(graph.edges) == [("alpha", "beta")]
    assert graph.graph["metric"] == "jaro"


def test_json_round_trip(fig2_network, tmp_path):
    repository = NetworkRepository(tmp_path)
    repository.save(fig2_network, "net.json")
    assert repository.load("net.json") == fig2_network


def test_format_detection(tmp_path):
    assert NetworkRepository.format_for(tmp_path / "a.gv") == "dot"
    assert NetworkRepository.format_for(tmp_path / "a.txt", "graphml") == "graphml"
    with pytest.raises(UsageError):
        NetworkRepository.format_for(tmp_path / "a.txt")
    with pytest.raises(UsageError):
        NetworkRepository.format_for(tmp_path / "a.dot", "xml")


# ==================== CHART ====================

def test_chart_series(fig2_sweep):
    frame = SweepRepository().to_frame(fig2_sweep)
    series = ChartRenderer.series(frame, "avg_degree")
    assert list(series) == [kind.value for kind in MetricKind]
    thresholds, values = series["jaro"]
    assert thresholds == [0.0, 0.5, 1.0]
    assert values[-1] == pytest.approx(2 / 3)


def test_chart_rejects_unknown_property(fig2_sweep):
    frame = SweepRepository().to_frame(fig2_sweep)
    with pytest.raises(UsageError):
        ChartRenderer.series(frame, "betweenness")
    with pytest.raises(UsageError):
        ChartRenderer.series(frame.drop(columns=["density"]), "density")


def test_chart_is_deterministic(fig2_sweep, tmp_path):
    frame = SweepRepository().to_frame(fig2_sweep)
    renderer = ChartRenderer()
    renderer.render(frame, "density", tmp_path / "first.svg")
    renderer.render(frame, "density", tmp_path / "second.svg")
    first = (tmp_path / "first.svg").read_bytes()
    assert first.startswith(b"<?xml")
    assert first == (tmp_path / "second.svg").read_bytes()
