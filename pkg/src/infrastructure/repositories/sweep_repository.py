"""Sweep Repository - CSV (o Parquet) de registros del barrido y su configuración."""

import logging
from pathlib import Path
from typing import Optional, Tuple

import pandas as pd

from core.exceptions import UsageError
from domain import SweepConfig, SweepResult
from infrastructure.mappers import PROPERTY_COLUMNS, RecordMapper, SweepMetaMapper
from infrastructure.models import SweepMetaDocument
from infrastructure.repositories.base_repository import BaseRepository, PathLike

logger = logging.getLogger(__name__)


class SweepRepository(BaseRepository[SweepResult]):
    """
    Persistencia de SweepResult.

    CSV: umbral con 2 decimales, medidas indefinidas como celda vacía.
    Una ruta .parquet se escribe con compresión snappy. La configuración
    (métricas, grilla, modo de conteo, enlaces vacuos, regla de nombres y
    huella del corpus) va en <nombre>.config.json junto a la tabla.
    """

    @staticmethod
    def config_path(target: Path) -> Path:
        return target.with_name(f"{target.stem}.config.json")

    def to_frame(self, result: SweepResult) -> pd.DataFrame:
        return RecordMapper.to_frame(result.records)

    def save(self, obj: SweepResult, path: PathLike) -> Path:
        target = self.prepare(path)
        df = self.to_frame(obj)
        if target.suffix.lower() == ".parquet":
            df.to_parquet(target, index=False, compression="snappy")
        else:
            df["threshold"] = df["threshold"].map("{:.2f}".format)
            df["n_similarities"] = df["n_similarities"].astype("Int64")
            df.to_csv(target, index=False, na_rep="", lineterminator="\n")
        logger.info(f"  ✓ {target} ({len(df)} registros)")

        if obj.config is not None:
            meta = self.config_path(target)
            document = SweepMetaMapper.to_document(obj)
            meta.write_text(document.model_dump_json(indent=2) + "\n", encoding="utf-8")
            logger.info(f"  ✓ {meta}")
        return target

    def load_frame(self, path: PathLike) -> pd.DataFrame:
        source = self.resolve(path)
        if source.suffix.lower() == ".parquet":
            df = pd.read_parquet(source)
        else:
            df = pd.read_csv(source)
        missing = [c for c in ("metric", "threshold") if c not in df.columns]
        if missing:
            raise UsageError(f"{source}: faltan columnas {missing}")
        return df

    def load_config(self, path: PathLike) -> Tuple[Optional[SweepConfig], str]:
        """Configuración y huella del corpus; (None, "") si no hay archivo de configuración."""
        meta = self.config_path(self.resolve(path))
        if not meta.exists():
            return None, ""
        document = SweepMetaDocument.model_validate_json(meta.read_text(encoding="utf-8"))
        return SweepMetaMapper.from_document(document), document.corpus_fingerprint

    def load(self, path: PathLike) -> SweepResult:
        df = self.load_frame(path)
        columns = [c for c in PROPERTY_COLUMNS if c in df.columns]
        records = RecordMapper.from_frame(df[columns])
        config, fingerprint = self.load_config(path)
        return SweepResult(records=tuple(records), config=config, corpus_fingerprint=fingerprint)
