import json
import shutil

import pytest

from core.exceptions import DuplicateServiceError, ExtractionError, NoInputDocumentsError
from domain import NameSource
from infrastructure.repositories import CorpusRepository
from services.corpus import service_io
from services.extraction import ExtractionPipeline


def test_extract_wsdl_directory(wsdl_dir, tmp_path):
    corpus = ExtractionPipeline().run([wsdl_dir], tmp_path / "corpus.json")
    # el id es el nombre del archivo; el .xsd importado no es un documento de entrada
    assert corpus.ids == ["flight", "hotel", "weather"]
    assert service_io(corpus.service("weather")) == ({"_LOCATION"}, {"_WEATHER", "_TEMPERATURE"})
    assert (tmp_path / "corpus.json").exists()


def test_extracted_corpus_reloads(wsdl_dir, tmp_path):
    out = tmp_path / "silver" / "corpus.json"
    corpus = ExtractionPipeline(name_source=NameSource.QUALIFIED).run([wsdl_dir], out)
    assert CorpusRepository().load(out) == corpus


def test_mixed_json_and_wsdl(wsdl_dir, fig2_path, tmp_path):
    corpus = ExtractionPipeline().extract([fig2_path, wsdl_dir / "hotel.wsdl"])
    assert corpus.ids == ["alpha", "beta", "gamma", "hotel"]


def test_empty_directory(tmp_path):
    with pytest.raises(NoInputDocumentsError) as info:
        ExtractionPipeline().extract([tmp_path])
    assert str(info.value) == "no input documents"


def _broken_inputs(wsdl_dir, tmp_path):
    inputs = tmp_path / "inputs"
    inputs.mkdir()
    shutil.copy(wsdl_dir / "hotel.wsdl", inputs / "hotel.wsdl")
    (inputs / "broken.wsdl").write_text("<definitions>", encoding="utf-8")
    (inputs / "bad.json").write_text(json.dumps({"services": "nope"}), encoding="utf-8")
    return inputs


def test_invalid_documents_abort(wsdl_dir, tmp_path):
    inputs = _broken_inputs(wsdl_dir, tmp_path)
    out = tmp_path / "corpus.json"
    with pytest.raises(ExtractionError) as info:
        ExtractionPipeline().run([inputs], out)
    failed = sorted(path for path, _ in info.value.failures)
    assert [p.rsplit("/", 1)[-1] for p in failed] == ["bad.json", "broken.wsdl"]
    assert not out.exists()


def test_keep_going_writes_valid_services(wsdl_dir, tmp_path):
    inputs = _broken_inputs(wsdl_dir, tmp_path)
    pipeline = ExtractionPipeline(keep_going=True)
    corpus = pipeline.run([inputs], tmp_path / "corpus.json")
    assert corpus.ids == ["hotel"]
    assert len(pipeline.failures) == 2


def test_duplicate_ids_across_documents(fig2_path, tmp_path):
    copy = tmp_path / "again.json"
    copy.write_text(fig2_path.read_text(encoding="utf-8"), encoding="utf-8")
    with pytest.raises(DuplicateServiceError) as info:
        ExtractionPipeline().extract([fig2_path, copy])
    assert str(fig2_path) in info.value.first
    assert str(copy) in info.value.second
