"""Stockage local des instances et des résultats de résolution (JSON)."""

import json
from pathlib import Path
from typing import Any, Optional

import aiofiles
from pydantic import BaseModel, ValidationError

from app.config import get_settings
from app.core.exceptions import InstanceError, StorageError
from app.core.logging import get_logger
from app.domain.entities.instance import Instance

logger = get_logger(__name__)


def dumps_canonical(document: dict[str, Any]) -> str:
    """Sérialisation JSON déterministe (ordre des clés du document, sans espaces)."""
    return json.dumps(document, separators=(",", ":"), ensure_ascii=False) + "\n"


def parse_instance(payload: str | bytes | dict[str, Any], normalize_rho: bool = False) -> Instance:
    """
    Construire une instance depuis un document JSON.

    Raises:
        InstanceError: Si le document est mal formé ou viole les invariants
    """
    try:
        data = json.loads(payload) if isinstance(payload, (str, bytes)) else payload
        inst = Instance.model_validate(data)
    except json.JSONDecodeError as e:
        raise InstanceError(f"JSON invalide: {e.msg}", {"line": e.lineno}) from e
    except ValidationError as e:
        raise InstanceError(
            "Instance invalide", {"errors": [err["msg"] for err in e.errors()]}
        ) from e
    return inst.normalized() if normalize_rho else inst


class InstanceStore:
    """Stockage local des instances sous <base_dir>/<famille>/<id>.json."""

    def __init__(self, base_dir: Optional[Path] = None) -> None:
        """Initialiser le stockage."""
        self.base_dir = Path(base_dir or get_settings().instances_dir)

    def path_for(self, family: str, instance_id: str) -> Path:
        return self.base_dir / family / f"{instance_id}.json"

    async def save(self, inst: Instance, family: str, instance_id: str) -> Path:
        """
        Sauvegarder une instance.

        Returns:
            Chemin du fichier écrit
        """
        path = self.path_for(family, instance_id)
        await write_text(path, dumps_canonical(inst.to_document()))
        logger.debug("Instance sauvegardée", path=str(path))
        return path

    async def load(self, path: Path | str, normalize_rho: bool = False) -> Instance:
        """
        Charger une instance.

        Raises:
            StorageError: Si le fichier est absent ou illisible
            InstanceError: Si le contenu est invalide
        """
        return parse_instance(await read_text(path), normalize_rho)

    async def list_files(self, family: Optional[str] = None) -> list[Path]:
        """Fichiers d'instances présents (triés)."""
        root = self.base_dir / family if family else self.base_dir
        if not root.exists():
            return []
        return sorted(root.rglob("*.json"))


async def write_text(path: Path | str, content: str) -> Path:
    """Écrire un fichier texte UTF-8 en créant les répertoires parents."""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        async with aiofiles.open(path, "w", encoding="utf-8") as f:
            await f.write(content)
        return path
    except OSError as e:
        logger.exception(f"Erreur lors de l'écriture: {e}")
        raise StorageError(f"Impossible d'écrire le fichier: {str(e)}", {"path": str(path)}) from e


async def read_text(path: Path | str) -> str:
    """Lire un fichier texte UTF-8."""
    path = Path(path)
    if not path.is_file():
        raise StorageError(f"Fichier non trouvé: {path}", {"path": str(path)})
    try:
        async with aiofiles.open(path, "r", encoding="utf-8") as f:
            return await f.read()
    except OSError as e:
        logger.exception(f"Erreur lors de la lecture: {e}")
        raise StorageError(f"Impossible de lire le fichier: {str(e)}", {"path": str(path)}) from e


async def save_model(model: BaseModel, path: Path | str) -> Path:
    """Écrire un modèle pydantic (résultat, verdict) en JSON indenté."""
    return await write_text(path, model.model_dump_json(indent=2) + "\n")
