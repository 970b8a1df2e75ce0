"""Interface en ligne de commande : génération, résolution, validation et campagnes."""

import argparse
import asyncio
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from app.application.algorithms.greedy import greedy_family
from app.application.algorithms.oracle import brute_force
from app.application.pipelines.benchmark_pipeline import DEFAULT_SEGMENTS, BenchmarkPipeline, ratio_experiment
from app.application.use_cases.solve_instance import SolveInstanceUseCase
from app.application.use_cases.validate_solution import ValidateSolutionUseCase
from app.config import get_settings
from app.core.exceptions import ModelError, SolverError, StorageError
from app.core.logging import get_logger
from app.domain.entities.instance import Instance
from app.domain.value_objects.bound_table import BoundMode
from app.domain.value_objects.cut import CutSet
from app.domain.value_objects.exact_result import ExactResult
from app.domain.value_objects.solve_config import CutSelection, Linearization, MasterKind, Method, SolveConfig
from app.infrastructure.generators.families import family_names, get_family
from app.infrastructure.generators.instance_generator import GeneratedInstance, generate_family, with_size
from app.infrastructure.storage.instance_store import InstanceStore, read_text, save_model

logger = get_logger(__name__)

EXIT_INPUT = 2
EXIT_BACKEND = 3


def _add_solve_options(parser: argparse.ArgumentParser) -> None:
    settings = get_settings()
    parser.add_argument("--master", choices=[k.value for k in MasterKind], default=MasterKind.LI.value)
    parser.add_argument("--cuts", choices=[c.value for c in CutSet], default=CutSet.OA.value)
    parser.add_argument("--segments", type=int, default=0, help="Nombre de groupes L (0 = par classe)")
    parser.add_argument("--epsilon", type=float, default=settings.default_epsilon)
    parser.add_argument("--time-limit", type=float, default=settings.default_time_limit)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--threads", type=int, default=settings.threads)
    parser.add_argument(
        "--cut-selection", choices=[c.value for c in CutSelection], default=CutSelection.VIOLATED.value
    )
    parser.add_argument("--linearization", choices=[k.value for k in Linearization], default=Linearization.MCCORMICK.value)
    parser.add_argument("--bound-mode", choices=[b.value for b in BoundMode], default=settings.bound_mode)
    parser.add_argument("--no-strengthen", action="store_true", help="B&C sans lignes de renforcement")
    parser.add_argument(
        "--dump-model",
        nargs="?",
        const=str(settings.dump_dir),
        default=None,
        help="Répertoire où écrire les modèles LP (DUMP_DIR si aucune valeur)",
    )


def _add_size_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--count", type=int, default=None, help="Instances par cellule")
    parser.add_argument("--m", type=int, default=None, help="Nombre de produits réduit")
    parser.add_argument("--n", type=int, default=None, help="Nombre de classes réduit")
    parser.add_argument("--capacities", type=float, nargs="+", default=None)


def build_parser() -> argparse.ArgumentParser:
    """Construire l'analyseur d'arguments."""
    parser = argparse.ArgumentParser(prog="mmnl-assortment", description="Assortiment sous logit multinomial mixte")
    parser.add_argument("--backend", default=None, help="Backend MILP (cbc, gurobi)")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="Générer les instances d'une famille")
    gen.add_argument("--family", required=True, choices=family_names())
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default=None, help="Répertoire racine des instances")
    _add_size_options(gen)

    solve = sub.add_parser("solve", help="Résoudre une instance")
    solve.add_argument("instance")
    solve.add_argument("--method", choices=[m.value for m in Method], default=Method.CP.value)
    solve.add_argument("--out", default=None, help="Fichier JSON du résultat")
    solve.add_argument("--normalize-rho", action="store_true")
    _add_solve_options(solve)

    for name, help_text in (("greedy", "Heuristique gloutonne"), ("brute", "Énumération exhaustive")):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("instance")
        cmd.add_argument("--out", default=None)
        cmd.add_argument("--normalize-rho", action="store_true")
        if name == "brute":
            cmd.add_argument("--max-m", type=int, default=None)

    bench = sub.add_parser("benchmark", help="Campagne méthodes × familles")
    bench.add_argument("--family", nargs="+", required=True, choices=family_names())
    bench.add_argument("--method", nargs="+", choices=[m.value for m in Method], default=[Method.CP.value])
    bench.add_argument("--masters", nargs="+", choices=[k.value for k in MasterKind], default=[MasterKind.LI.value])
    bench.add_argument("--cut-sets", nargs="+", choices=[c.value for c in CutSet], default=[CutSet.OA.value])
    bench.add_argument("--segment-values", type=int, nargs="+", default=[0])
    bench.add_argument("--workers", type=int, default=None)
    bench.add_argument("--out", default=None, help="CSV des résultats")
    _add_size_options(bench)
    _add_solve_options(bench)

    sweep = sub.add_parser("sweep-l", help="Balayage du nombre de groupes L")
    sweep.add_argument("--family", required=True, choices=family_names())
    sweep.add_argument("--values", type=int, nargs="+", default=list(DEFAULT_SEGMENTS))
    sweep.add_argument("--workers", type=int, default=None)
    sweep.add_argument("--out", default=None)
    _add_size_options(sweep)
    _add_solve_options(sweep)

    ratio = sub.add_parser("ratio", help="Ratio glouton / optimum contre la garantie")
    ratio.add_argument("--count", type=int, default=50)
    ratio.add_argument("--seed", type=int, default=0)
    ratio.add_argument("--n", type=int, default=5)
    ratio.add_argument("--m", type=int, default=12)
    ratio.add_argument("--capacity", type=int, default=4)
    ratio.add_argument("--out", default=None)

    val = sub.add_parser("validate", help="Vérifier une solution annoncée")
    val.add_argument("instance")
    val.add_argument("solution", help="JSON avec x et, en option, objective")
    val.add_argument("--normalize-rho", action="store_true")
    return parser


def config_from_args(args: argparse.Namespace, method: Optional[str] = None) -> SolveConfig:
    """Construire la configuration de résolution depuis les options."""
    return SolveConfig(
        method=Method(method or args.method),
        master=MasterKind(args.master),
        cuts=CutSet(args.cuts),
        segments=args.segments,
        epsilon=args.epsilon,
        time_limit=args.time_limit,
        seed=args.seed,
        threads=args.threads,
        cut_selection=CutSelection(args.cut_selection),
        cut_tolerance=get_settings().cut_tolerance,
        strengthen=not args.no_strengthen,
        linearization=Linearization(args.linearization),
        bound_mode=BoundMode(args.bound_mode),
        dump_model=args.dump_model,
    )


def _load(path: str, normalize: bool) -> Instance:
    store = InstanceStore()
    return asyncio.run(store.load(path, normalize or get_settings().normalize_rho))


def _emit(result: ExactResult, out: Optional[str]) -> int:
    print(result.summary_line())
    if out:
        asyncio.run(save_model(result, out))
    return result.status.exit_code()


def _instances(args: argparse.Namespace, family: str) -> list[GeneratedInstance]:
    spec = with_size(
        get_family(family),
        m=args.m,
        n=args.n,
        capacities=tuple(args.capacities) if args.capacities else None,
    )
    return generate_family(spec, args.seed, args.count)


def cmd_generate(args: argparse.Namespace) -> int:
    store = InstanceStore(Path(args.out) if args.out else None)

    async def save_all(items: list[GeneratedInstance]) -> list[Path]:
        return [await store.save(item.instance, item.family, item.instance_id) for item in items]

    paths = asyncio.run(save_all(_instances(args, args.family)))
    for path in paths:
        print(path)
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    inst = _load(args.instance, args.normalize_rho)
    result = SolveInstanceUseCase(backend_name=args.backend).execute(inst, config_from_args(args))
    return _emit(result, args.out)


def cmd_greedy(args: argparse.Namespace) -> int:
    result = greedy_family(_load(args.instance, args.normalize_rho))
    if result.ratio_bound is not None:
        print(f"ratio_bound={result.ratio_bound:.6f}")
    return _emit(result, args.out)


def cmd_brute(args: argparse.Namespace) -> int:
    result = brute_force(_load(args.instance, args.normalize_rho), args.max_m)
    return _emit(result, args.out)


def _configs(args: argparse.Namespace) -> list[SolveConfig]:
    base = config_from_args(args, Method.CP.value)
    configs = []
    for method in args.method:
        if Method(method) in (Method.CP, Method.BC):
            configs.extend(
                base.model_copy(
                    update={"method": Method(method), "master": MasterKind(master), "cuts": CutSet(cuts), "segments": L}
                )
                for master in args.masters
                for cuts in args.cut_sets
                for L in args.segment_values
            )
        else:
            configs.append(base.model_copy(update={"method": Method(method)}))
    return configs


def cmd_benchmark(args: argparse.Namespace) -> int:
    out = Path(args.out or get_settings().results_dir / "benchmark.csv")
    instances = [item for family in args.family for item in _instances(args, family)]
    pipeline = BenchmarkPipeline(args.workers, args.backend)
    _, summary = asyncio.run(pipeline.run_benchmark(instances, _configs(args), out))
    print(summary.to_string(index=False))
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    out = Path(args.out or get_settings().results_dir / "sweep_segments.csv")
    pipeline = BenchmarkPipeline(args.workers, args.backend)
    _, pivot = asyncio.run(
        pipeline.sweep_segments(_instances(args, args.family), out, args.values, config_from_args(args, Method.CP.value))
    )
    print(pivot.to_string())
    return 0


def cmd_ratio(args: argparse.Namespace) -> int:
    out = Path(args.out or get_settings().results_dir / "ratio.csv")
    frame = ratio_experiment(args.count, args.seed, n=args.n, m=args.m, capacity=args.capacity, out_path=out)
    print(frame.to_string(index=False))
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    inst = _load(args.instance, args.normalize_rho)
    try:
        claim = json.loads(asyncio.run(read_text(args.solution)))
        x = claim["x"]
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        raise ModelError(f"Fichier de solution invalide: {e}", {"path": args.solution}) from e
    verdict = ValidateSolutionUseCase().execute(inst, x, claim.get("objective"))
    print(verdict.model_dump_json())
    return 0 if verdict.valid else EXIT_INPUT


COMMANDS = {
    "generate": cmd_generate,
    "solve": cmd_solve,
    "greedy": cmd_greedy,
    "brute": cmd_brute,
    "benchmark": cmd_benchmark,
    "sweep-l": cmd_sweep,
    "ratio": cmd_ratio,
    "validate": cmd_validate,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Point d'entrée.

    Returns:
        Code de sortie : 0 résolu, 1 limite de temps avec solution, 2 erreur
        d'entrée, 3 erreur de backend
    """
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ModelError, StorageError) as e:
        print(f"erreur: {e.message}", file=sys.stderr)
        return EXIT_INPUT
    except SolverError as e:
        print(f"erreur backend: {e.message}", file=sys.stderr)
        return EXIT_BACKEND


if __name__ == "__main__":
    sys.exit(main())
