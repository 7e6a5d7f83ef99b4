"""Labels Repository - CSV de etiquetas humanas (name_a,name_b,label)."""

import logging
from pathlib import Path
from typing import Dict, Iterable, Tuple

import pandas as pd

from core.exceptions import CorpusSchemaError
from domain import GroundTruthLabels, PairLabel
from domain.naming import normalize_name
from infrastructure.repositories.base_repository import BaseRepository, PathLike

logger = logging.getLogger(__name__)

LABEL_COLUMNS = ["name_a", "name_b", "label"]


class LabelsRepository(BaseRepository[GroundTruthLabels]):
    """Etiquetas appropriate/false_positive; los nombres se normalizan al cargar."""

    def __init__(self, base_path=None, fold_case: bool = False) -> None:
        super().__init__(base_path)
        self.fold_case = fold_case

    def load(self, path: PathLike) -> GroundTruthLabels:
        source = self.resolve(path)
        df = pd.read_csv(source, dtype=str, keep_default_na=False)
        missing = [c for c in LABEL_COLUMNS if c not in df.columns]
        if missing:
            raise CorpusSchemaError(f"faltan columnas {missing}", str(source))

        labels: Dict[Tuple[str, str], PairLabel] = {}
        skipped = 0
        for i, row in enumerate(df.itertuples(index=False)):
            label = row.label.strip()
            if not label:
                skipped += 1
                continue
            try:
                value = PairLabel(label)
            except ValueError:
                raise CorpusSchemaError(f"etiqueta inválida '{label}'", f"{source}:{i + 2}")
            a = normalize_name(row.name_a, self.fold_case)
            b = normalize_name(row.name_b, self.fold_case)
            labels[GroundTruthLabels.pair_key(a, b)] = value

        if skipped:
            logger.info(f"Filas sin etiqueta ignoradas: {skipped}")
        logger.info(f"Etiquetas cargadas: {len(labels)}")
        return GroundTruthLabels(labels=labels)

    def save(self, obj: GroundTruthLabels, path: PathLike) -> Path:
        rows = [(a, b, label.value) for (a, b), label in sorted(obj.labels.items())]
        return self._write(rows, path)

    def save_template(self, pairs: Iterable[Tuple[str, str]], path: PathLike) -> Path:
        """Escribe pares sin etiquetar con la columna label vacía (plantilla)."""
        return self._write([(a, b, "") for a, b in pairs], path)

    def _write(self, rows, path: PathLike) -> Path:
        target = self.prepare(path)
        pd.DataFrame(rows, columns=LABEL_COLUMNS).to_csv(target, index=False, lineterminator="\n")
        logger.info(f"  ✓ {target} ({len(rows)} pares)")
        return target
