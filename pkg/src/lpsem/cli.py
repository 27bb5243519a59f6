"""Command-line front end.

Four subcommands:

* ``compute``: evaluate one semantics for a program file,
* ``compare``: tabulate all semantics and how they relate,
* ``check``  : run the theorem cross-check battery on a file or on
  generated programs,
* ``gen``    : emit a seeded random program.

Exit codes: 0 success, 1 check failure or other error, 2 parse error,
3 enumeration cap exceeded, 4 definite-program operation on a program
with negation.  Output is deterministic: identical inputs and flags give
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import checks as checks_mod
from . import semantics as semantics_mod
from .gen import random_program
from .interp import PartialInterpretation, interpretation_json, is_total, knowledge_leq
from .operators import NotDefiniteError
from .semantics import CapExceededError, DEFAULT_ENUM_CAP, SEMANTICS_NAMES
from .syntax import GroundProgram, ParseError, ground, parse_program, program_text

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_CAP_EXCEEDED = 3
EXIT_NOT_DEFINITE = 4


@dataclass
class RunConfig:
    path: str | None = None
    semantics: str = "wf"
    fmt: str = "text"
    cap: int = DEFAULT_ENUM_CAP
    trace: bool = False
    seed: int = 0
    count: int = 1
    atoms: int = 4
    clauses: int = 6
    max_body: int = 3
    neg_prob: float = 0.3
    stratified: bool = False
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.cap < 1:
            raise ValueError("cap must be positive")
        if not 0.0 <= self.neg_prob <= 1.0:
            raise ValueError("neg-prob must be within [0, 1]")
        if self.atoms < 1 or self.clauses < 0 or self.count < 1 or self.jobs < 1:
            raise ValueError("size parameters must be positive")


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _load_ground(path: str) -> GroundProgram:
    with open(path, encoding="utf-8") as handle:
        return ground(parse_program(handle.read()))


def _atom_set_text(m) -> str:
    return "{" + ", ".join(sorted(map(str, m))) + "}"


def _model_set_json(models) -> dict:
    return {
        "models": [sorted(str(a) for a in m) for m in models],
        "count": len(models),
    }


def _interp_text(i: PartialInterpretation) -> str:
    return str(i)


def cmd_compute(cfg: RunConfig) -> int:
    g = _load_ground(cfg.path)
    result = semantics_mod.compute_semantics(g, cfg.semantics, cap=cfg.cap)
    if isinstance(result.model, PartialInterpretation):
        if cfg.fmt == "json":
            if cfg.trace and result.trace is not None:
                payload = {
                    "model": interpretation_json(result.model, g.base),
                    "trace": [interpretation_json(s, g.base) for s in result.trace.stages],
                }
                print(_dumps(payload))
            elif result.pair is not None and cfg.trace:
                payload = {
                    "model": interpretation_json(result.model, g.base),
                    "lfp_sq": sorted(str(a) for a in result.pair.lfp_sq),
                    "gfp_sq": sorted(str(a) for a in result.pair.gfp_sq),
                }
                print(_dumps(payload))
            else:
                print(_dumps(interpretation_json(result.model, g.base)))
        else:
            total = "total" if result.total else "partial"
            print(f"{cfg.semantics}: {_interp_text(result.model)} ({total})")
            if cfg.trace and result.trace is not None:
                for k, stage in enumerate(result.trace.stages):
                    print(f"  stage {k}: {_interp_text(stage)}")
            if cfg.trace and result.pair is not None:
                print(f"  lfp of squared operator: {_atom_set_text(result.pair.lfp_sq)}")
                print(f"  gfp of squared operator: {_atom_set_text(result.pair.gfp_sq)}")
    else:
        if cfg.fmt == "json":
            print(_dumps(_model_set_json(result.model)))
        else:
            print(f"{cfg.semantics} models ({len(result.model)}):")
            for m in result.model:
                print("  " + _atom_set_text(m))
    return EXIT_OK


_SINGLE_MODEL_ORDER = ("least", "greatest", "fitting", "wf", "wf-alt", "maxwf", "maxwf-alt")


def _relation(i: PartialInterpretation, j: PartialInterpretation) -> str:
    below = knowledge_leq(i, j)
    above = knowledge_leq(j, i)
    if below and above:
        return "equal"
    if below:
        return "below"
    if above:
        return "above"
    return "incomparable"


def cmd_compare(cfg: RunConfig) -> int:
    g = _load_ground(cfg.path)
    singles: dict[str, PartialInterpretation] = {}
    for name in _SINGLE_MODEL_ORDER:
        if name in ("least", "greatest") and not g.is_definite:
            continue
        singles[name] = semantics_mod.compute_semantics(g, name).model

    agreement = []
    names = list(singles)
    for idx, left in enumerate(names):
        for right in names[idx + 1 :]:
            agreement.append((left, right, _relation(singles[left], singles[right])))

    sets: dict[str, object] = {}
    for name in ("stable", "maxstable", "supported"):
        try:
            sets[name] = semantics_mod.compute_semantics(g, name, cap=cfg.cap).model
        except CapExceededError as exc:
            sets[name] = f"skipped ({exc})"

    if cfg.fmt == "json":
        payload = {
            "semantics": {
                name: {
                    "model": interpretation_json(i, g.base),
                    "total": is_total(i, g.base),
                }
                for name, i in singles.items()
            },
            "agreement": [
                {"left": a, "right": b, "relation": rel} for a, b, rel in agreement
            ],
            "model_sets": {
                name: (_model_set_json(v) if not isinstance(v, str) else v)
                for name, v in sets.items()
            },
        }
        print(_dumps(payload))
    else:
        width = max(len(n) for n in singles)
        for name, i in singles.items():
            total = "total" if is_total(i, g.base) else "partial"
            print(f"{name:<{width}}  {_interp_text(i)} ({total})")
        print("agreement:")
        for a, b, rel in agreement:
            print(f"  {a} {rel} {b}")
        for name, v in sets.items():
            if isinstance(v, str):
                print(f"{name}: {v}")
            else:
                rendered = ", ".join(_atom_set_text(m) for m in v) or "(none)"
                print(f"{name} ({len(v)}): {rendered}")
    return EXIT_OK


def _run_seed_checks(args: tuple) -> tuple[int, list]:
    seed, atoms, clauses, max_body, neg_prob, stratified, cap = args
    program = random_program(
        atoms, clauses, seed=seed, max_body=max_body, neg_prob=neg_prob, stratified=stratified
    )
    return seed, checks_mod.run_checks(ground(program), enum_cap=cap)


def cmd_check(cfg: RunConfig) -> int:
    batches: list[tuple[int | None, list]] = []
    if cfg.path is not None:
        batches.append((None, checks_mod.run_checks(_load_ground(cfg.path), enum_cap=cfg.cap)))
        header = {"source": cfg.path, "seed": None, "count": 1}
    else:
        jobs = [
            (seed, cfg.atoms, cfg.clauses, cfg.max_body, cfg.neg_prob, cfg.stratified, cfg.cap)
            for seed in range(cfg.seed, cfg.seed + cfg.count)
        ]
        if cfg.jobs > 1:
            with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
                results = list(pool.map(_run_seed_checks, jobs))
            results.sort(key=lambda pair: pair[0])
            batches.extend(results)
        else:
            batches.extend(_run_seed_checks(job) for job in jobs)
        header = {
            "source": None,
            "seed": cfg.seed,
            "count": cfg.count,
            "atoms": cfg.atoms,
            "clauses": cfg.clauses,
            "neg_prob": cfg.neg_prob,
            "stratified": cfg.stratified,
        }

    failures = 0
    if cfg.fmt == "json":
        entries = []
        for seed, results in batches:
            for r in results:
                entry = {"name": r.name, "status": r.status, "witness": r.witness}
                if seed is not None:
                    entry["seed"] = seed
                entries.append(entry)
                failures += r.status == checks_mod.FAIL
        print(_dumps({"header": header, "checks": entries}))
    else:
        for seed, results in batches:
            if seed is not None:
                print(f"seed {seed}:")
            indent = "  " if seed is not None else ""
            for r in results:
                if r.status == checks_mod.PASS:
                    print(f"{indent}PASS {r.name}")
                elif r.status == checks_mod.SKIPPED:
                    print(f"{indent}SKIP {r.name} ({r.witness})")
                else:
                    print(f"{indent}FAIL {r.name}: {r.witness}")
                    failures += 1
        total = sum(len(results) for _, results in batches)
        print(f"{total} checks, {failures} failures")
    return EXIT_FAILURE if failures else EXIT_OK


def cmd_gen(cfg: RunConfig) -> int:
    program = random_program(
        cfg.atoms,
        cfg.clauses,
        seed=cfg.seed,
        max_body=cfg.max_body,
        neg_prob=cfg.neg_prob,
        stratified=cfg.stratified,
    )
    strat = "true" if cfg.stratified else "false"
    print(
        f"% seed={cfg.seed} atoms={cfg.atoms} clauses={cfg.clauses}"
        f" max-body={cfg.max_body} neg-prob={cfg.neg_prob} stratified={strat}"
    )
    sys.stdout.write(program_text(program))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lpsem", description="Semantics engine for normal logic programs"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP,
                       help="atom cap for exhaustive model enumeration")

    def add_size(p: argparse.ArgumentParser) -> None:
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--atoms", type=int, default=4)
        p.add_argument("--clauses", type=int, default=6)
        p.add_argument("--max-body", type=int, default=3)
        p.add_argument("--neg-prob", type=float, default=0.3)
        p.add_argument("--stratified", action="store_true")

    p_compute = sub.add_parser("compute", help="compute one semantics for a program file")
    p_compute.add_argument("path")
    p_compute.add_argument("--semantics", choices=SEMANTICS_NAMES, required=True)
    p_compute.add_argument("--trace", action="store_true")
    add_common(p_compute)

    p_compare = sub.add_parser("compare", help="compute and relate all semantics")
    p_compare.add_argument("path")
    add_common(p_compare)

    p_check = sub.add_parser("check", help="run theorem cross-checks")
    p_check.add_argument("path", nargs="?", default=None,
                         help="program file; omit to check generated programs")
    p_check.add_argument("--count", type=int, default=1,
                         help="number of consecutive seeds to check when generating")
    p_check.add_argument("--jobs", type=int, default=1)
    add_size(p_check)
    add_common(p_check)

    p_gen = sub.add_parser("gen", help="emit a seeded random program")
    add_size(p_gen)
    return parser


_ARG_FIELDS = {
    "path": "path",
    "semantics": "semantics",
    "format": "fmt",
    "cap": "cap",
    "trace": "trace",
    "seed": "seed",
    "count": "count",
    "atoms": "atoms",
    "clauses": "clauses",
    "max_body": "max_body",
    "neg_prob": "neg_prob",
    "stratified": "stratified",
    "jobs": "jobs",
}


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    kwargs = {
        field: getattr(args, name) for name, field in _ARG_FIELDS.items() if hasattr(args, name)
    }
    return RunConfig(**kwargs)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
        if args.command == "compute":
            return cmd_compute(cfg)
        if args.command == "compare":
            return cmd_compare(cfg)
        if args.command == "check":
            return cmd_check(cfg)
        if args.command == "gen":
            return cmd_gen(cfg)
        raise AssertionError(f"unhandled command {args.command}")
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except NotDefiniteError as exc:
        print(f"not definite: {exc}", file=sys.stderr)
        return EXIT_NOT_DEFINITE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
