"""Écriture sérialisée du CSV de résultats et relecture via pandas."""

import asyncio
import csv
import io
from pathlib import Path

import aiofiles
import pandas as pd

from app.core.exceptions import StorageError
from app.core.logging import get_logger
from app.domain.value_objects.benchmark import CSV_COLUMNS, CSV_SCHEMA_VERSION, BenchmarkRecord

logger = get_logger(__name__)

HEADER_COMMENT = f"# mmnl-assortment results schema v{CSV_SCHEMA_VERSION}"


def _format(rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="\n").writerows(rows)
    return buffer.getvalue()


def header_text() -> str:
    """Commentaire de version suivi de la ligne d'en-tête."""
    return HEADER_COMMENT + "\n" + _format([list(CSV_COLUMNS)])


class ResultsWriter:
    """Un seul rédacteur par fichier ; les ajouts concurrents sont sérialisés."""

    def __init__(self, path: Path | str) -> None:
        """Initialiser le rédacteur."""
        self.path = Path(path)
        self._lock = asyncio.Lock()
        self.rows_written = 0

    async def open(self) -> None:
        """Créer le fichier avec son en-tête (écrase un fichier existant)."""
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            async with aiofiles.open(self.path, "w", encoding="utf-8") as f:
                await f.write(header_text())
        except OSError as e:
            raise StorageError(f"Impossible de créer le CSV: {str(e)}", {"path": str(self.path)}) from e

    async def append(self, record: BenchmarkRecord) -> None:
        """Ajouter une ligne."""
        async with self._lock:
            try:
                async with aiofiles.open(self.path, "a", encoding="utf-8") as f:
                    await f.write(_format([record.as_row()]))
                self.rows_written += 1
            except OSError as e:
                raise StorageError(f"Impossible d'écrire le CSV: {str(e)}", {"path": str(self.path)}) from e


def read_results(path: Path | str) -> pd.DataFrame:
    """Relire un CSV de résultats (commentaire de version ignoré)."""
    path = Path(path)
    if not path.is_file():
        raise StorageError(f"Fichier non trouvé: {path}", {"path": str(path)})
    return pd.read_csv(path, comment="#")


def write_frame(frame: pd.DataFrame, path: Path | str) -> Path:
    """Écrire un tableau agrégé en CSV."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False)
    logger.info("Tableau écrit", path=str(path), rows=len(frame))
    return path
