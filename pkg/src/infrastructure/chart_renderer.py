"""Chart Renderer - Curvas de propiedades del barrido en SVG (matplotlib)."""

import logging
from pathlib import Path
from typing import Dict, List, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import pandas as pd  # noqa: E402

from core.exceptions import UsageError  # noqa: E402
from domain import MetricKind  # noqa: E402
from infrastructure.mappers import PROPERTY_COLUMNS  # noqa: E402

logger = logging.getLogger(__name__)

CHART_PROPERTIES: List[str] = PROPERTY_COLUMNS[2:]

# (color, marcador) por métrica
SERIES_STYLE: Dict[MetricKind, Tuple[str, str]] = {
    MetricKind.LEVENSHTEIN: ("green", "^"),
    MetricKind.JARO: ("red", "o"),
    MetricKind.JARO_WINKLER: ("blue", "x"),
}

Series = Dict[str, Tuple[List[float], List[float]]]


class ChartRenderer:
    """Dibuja una propiedad contra el umbral, una serie por métrica."""

    def __init__(self, width: float = 8.0, height: float = 5.0) -> None:
        self.figsize = (width, height)

    @staticmethod
    def series(frame: pd.DataFrame, prop: str) -> Series:
        """
        Datos de cada serie: {métrica: (umbrales, valores)}, NaN para indefinidos.

        Raises:
            UsageError: Propiedad desconocida o ausente del CSV.
        """
        if prop not in CHART_PROPERTIES:
            raise UsageError(f"propiedad desconocida '{prop}' (válidas: {', '.join(CHART_PROPERTIES)})")
        if prop not in frame.columns:
            raise UsageError(f"el CSV no tiene la columna '{prop}'")

        data: Series = {}
        for kind in MetricKind:
            rows = frame[frame["metric"] == kind.value].sort_values("threshold")
            if rows.empty:
                continue
            values = pd.to_numeric(rows[prop], errors="coerce").astype(float)
            data[kind.value] = (rows["threshold"].astype(float).tolist(), values.tolist())
        return data

    def render(self, frame: pd.DataFrame, prop: str, out: Path) -> Series:
        """Escribe el SVG en out y retorna los datos graficados."""
        data = self.series(frame, prop)
        out = Path(out)
        out.parent.mkdir(parents=True, exist_ok=True)

        # salt fijo y sin fecha: el SVG es idéntico byte a byte entre corridas
        with plt.rc_context({"svg.hashsalt": "composition-network", "svg.fonttype": "none"}):
            fig, ax = plt.subplots(figsize=self.figsize)
            for value, (x, y) in data.items():
                kind = MetricKind(value)
                color, marker = SERIES_STYLE[kind]
                ax.plot(x, np.asarray(y, dtype=float), marker=marker, color=color, label=kind.label, markersize=4)

            ax.set_xlim(0.0, 1.0)
            ax.set_xlabel("threshold")
            ax.set_ylabel(prop)
            ax.grid(True, linestyle="--", alpha=0.7)
            if data:
                ax.legend(loc="best")
            fig.tight_layout()
            fig.savefig(out, format="svg", metadata={"Date": None})
            plt.close(fig)

        logger.info(f"  ✓ {out} ({len(data)} series)")
        return data
