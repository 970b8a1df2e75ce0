"""Script de démarrage : API (par défaut) ou CLI (`python run.py <commande> ...`)."""

import sys
from pathlib import Path

# Ajouter le répertoire au path
sys.path.insert(0, str(Path(__file__).parent))

from app.core.dependencies_checker import BackendChecker
from app.core.logging import get_logger

logger = get_logger(__name__)


def check_backends() -> bool:
    """Vérifier les backends avant de démarrer."""
    print("\n" + "=" * 60)
    print("Vérification des backends de résolution...")
    print("=" * 60 + "\n")

    report = BackendChecker().report()
    if report.default_ok and not report.missing:
        print(f"\n✓ Backends disponibles : {', '.join(report.available)}\n")
    else:
        print(f"\n⚠ Backend par défaut '{report.default_backend}' indisponible ou paquets manquants.")
        print("L'API va démarrer mais les méthodes exactes peuvent échouer.\n")

    return True  # On continue même si un backend manque


if __name__ == "__main__":
    if len(sys.argv) > 1:
        from app.cli import main

        sys.exit(main(sys.argv[1:]))

    check_backends()

    print("Démarrage de l'application...\n")

    try:
        import uvicorn
        uvicorn.run("app.main:app", host="0.0.0.0", port=8000, reload=True)
    except ImportError:
        print("ERREUR: uvicorn n'est pas installé")
        print("Veuillez exécuter: pip install -r requirements/base.txt")
        sys.exit(1)
