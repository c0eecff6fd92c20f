"""Command-line surface: type queries, character computations, batch
verification sweeps, and a persistent Weyl-group cache.

Exit codes: 0 all checks verified, 1 mathematical mismatch, 2 usage error.
Output is deterministic and byte-identical between serial and parallel runs.
"""

from __future__ import annotations

import argparse
import functools
import itertools
import json
import os
import random
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from .charring import CharElement
from .demazure import demazure_char, euler_char, top_cohomology_char
from .kernel import (
    decompose,
    decomposition_to_json,
    in_kernel,
    kernel_basis_element,
    verify_characterization,
)
from .rootsys import Weight, build_datum, weight_neg, weight_sub
from .theorem import sweep_verify_lemma31, sweep_verify_theorem
from .weyl import (
    CACHE_FORMAT_VERSION,
    DEFAULT_MAX_GROUP_ORDER,
    WeylGroup,
    bruhat_leq,
    element_by_word,
    generate,
    group_from_payload,
    group_to_payload,
    lower_interval,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

ENV_CACHE_DIR = "DEMCHAR_CACHE_DIR"

# fixed seed: randomized kernel combinations must print identically across runs
KERNEL_SWEEP_SEED = 0x5EED


@dataclass
class RunConfig:
    """Parsed invocation; round-trips through to_dict/from_dict."""

    command: str
    family: str
    rank: int
    tau: str | None = None
    w: str | None = None
    lam: tuple[int, ...] | None = None
    mu: tuple[int, ...] | None = None
    grid: int = 2
    fmt: str = "plain"
    cache_dir: str | None = None
    parallel: bool = False
    max_group_order: int = DEFAULT_MAX_GROUP_ORDER
    dot: bool = False
    charfile: str | None = None

    def to_dict(self) -> dict:
        data = asdict(self)
        data["lam"] = list(self.lam) if self.lam is not None else None
        data["mu"] = list(self.mu) if self.mu is not None else None
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        data = dict(data)
        if data.get("lam") is not None:
            data["lam"] = tuple(data["lam"])
        if data.get("mu") is not None:
            data["mu"] = tuple(data["mu"])
        return cls(**data)


def _parse_weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse weight {text!r}; expected comma-separated integers")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="demchar",
        description="Exact Demazure-operator computations and identity verification "
        "on weight-lattice character rings.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=True, dest="family", help="family letter A-G")
    common.add_argument("--rank", required=True, type=int)
    common.add_argument("--format", default="plain", choices=("plain", "json"), dest="fmt")
    common.add_argument("--cache-dir", default=None, help=f"Weyl-table cache (default ${ENV_CACHE_DIR})")
    common.add_argument("--parallel", action="store_true", help="parallelize sweeps over weights")
    common.add_argument("--max-group-order", type=int, default=DEFAULT_MAX_GROUP_ORDER)

    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("info", parents=[common], help="group order, roots, Cartan matrix")

    p = sub.add_parser("weyl", parents=[common], help="dump elements and Bruhat table")
    p.add_argument("--dot", action="store_true", help="emit the Bruhat Hasse diagram as DOT")

    p = sub.add_parser("demchar", parents=[common], help="section character for dominant mu")
    p.add_argument("--tau", default="w0", help='element: "e", "w0", or a word like "1,2,1"')
    p.add_argument("--mu", required=True, help="dominant weight, comma-separated")

    p = sub.add_parser("topchar", parents=[common], help="top cohomology character of -lambda")
    p.add_argument("--w", default="w0", help='element: "e", "w0", or a word')
    p.add_argument("--lambda", required=True, dest="lam", help="regular dominant weight")

    p = sub.add_parser("euler", parents=[common], help="Euler characteristic for any mu")
    p.add_argument("--w", default="w0")
    p.add_argument("--mu", required=True)

    for name in ("verify-theorem", "verify-lemma31", "verify-kernel"):
        p = sub.add_parser(name, parents=[common], help=f"batch verification sweep ({name})")
        p.add_argument("--grid", type=int, default=2, help="sweep weights with coordinates in [1, grid]")

    p = sub.add_parser("decompose", parents=[common], help="decompose a kernel element (JSON in)")
    p.add_argument("charfile", nargs="?", default=None, help="CharElement JSON file (default stdin)")

    p = sub.add_parser("bruhat", parents=[common], help="compare two elements in Bruhat order")
    p.add_argument("--w", required=True)
    p.add_argument("--tau", required=True)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        family=args.family,
        rank=args.rank,
        tau=getattr(args, "tau", None),
        w=getattr(args, "w", None),
        lam=_parse_weight(args.lam) if getattr(args, "lam", None) else None,
        mu=_parse_weight(args.mu) if getattr(args, "mu", None) else None,
        grid=getattr(args, "grid", 2),
        fmt=args.fmt,
        cache_dir=args.cache_dir,
        parallel=args.parallel,
        max_group_order=args.max_group_order,
        dot=getattr(args, "dot", False),
        charfile=getattr(args, "charfile", None),
    )


def cache_path(cache_dir: str, family: str, rank: int) -> Path:
    return Path(cache_dir) / f"weyl-{family}{rank}-v{CACHE_FORMAT_VERSION}.json"


def load_group(cfg: RunConfig) -> WeylGroup:
    d = build_datum(cfg.family, cfg.rank)
    cache_dir = cfg.cache_dir or os.environ.get(ENV_CACHE_DIR)
    if not cache_dir:
        return generate(d, cfg.max_group_order)
    path = cache_path(cache_dir, d.family, d.rank)
    if path.exists():
        try:
            cached = group_from_payload(d, json.loads(path.read_text()))
        except (json.JSONDecodeError, KeyError, ValueError):
            cached = None
        if cached is not None:
            return cached
    g = generate(d, cfg.max_group_order)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(group_to_payload(g), sort_keys=True))
    tmp.replace(path)
    return g


def _resolve_element(g: WeylGroup, selector: str):
    if selector == "e":
        return g.identity_element
    if selector == "w0":
        return g.longest_element
    return element_by_word(g, _parse_weight(selector))


def _dump_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _print_char(v: CharElement, fmt: str) -> None:
    if fmt == "json":
        _dump_json(v.to_json_dict())
    else:
        print(v)
        print(f"dimension: {v.dimension()}")


def _lambda_grid(rank: int, bound: int) -> list[Weight]:
    if bound < 1:
        raise ValueError("grid bound must be at least 1")
    return [tuple(c) for c in itertools.product(range(1, bound + 1), repeat=rank)]


def cmd_info(cfg: RunConfig) -> int:
    g = load_group(cfg)
    d = g.datum
    if cfg.fmt == "json":
        _dump_json(
            {
                "family": d.family,
                "rank": d.rank,
                "order": g.order,
                "num_positive_roots": len(d.positive_roots),
                "cartan": [list(row) for row in d.cartan],
                "rho": list(d.rho),
                "longest_word": list(g.longest_element.word),
            }
        )
    else:
        print(f"type: {d.family}{d.rank}")
        print(f"order of the Weyl group: {g.order}")
        print(f"positive roots: {len(d.positive_roots)}")
        print(f"rho: {list(d.rho)}")
        print(f"longest element word: {list(g.longest_element.word)}")
        print("cartan:")
        for row in d.cartan:
            print(f"  {list(row)}")
    return EXIT_OK


def cmd_weyl(cfg: RunConfig) -> int:
    g = load_group(cfg)
    if cfg.dot:
        print("digraph bruhat {")
        print("  rankdir=BT;")
        for e in g.elements:
            label = "e" if not e.word else ",".join(map(str, e.word))
            print(f'  n{e.index} [label="{label}"];')
        for tau in g.elements:
            for w in lower_interval(g, tau):
                if w.length == tau.length - 1:
                    print(f"  n{w.index} -> n{tau.index};")
        print("}")
        return EXIT_OK
    if cfg.fmt == "json":
        _dump_json(
            {
                "elements": [
                    {"index": e.index, "length": e.length, "word": list(e.word)} for e in g.elements
                ],
                "bruhat_rows": [format(row, "x") for row in g.bruhat_rows],
            }
        )
    else:
        for e in g.elements:
            print(f"{e.index}: length={e.length} word={list(e.word)}")
        print("bruhat rows (element index ascending, leftmost bit = identity):")
        for tau in g.elements:
            row = g.bruhat_rows[tau.index]
            print("".join("1" if (row >> k) & 1 else "." for k in range(g.order)))
    return EXIT_OK


def cmd_demchar(cfg: RunConfig) -> int:
    g = load_group(cfg)
    tau = _resolve_element(g, cfg.tau or "w0")
    _print_char(demazure_char(g, tau, cfg.mu), cfg.fmt)
    return EXIT_OK


def cmd_topchar(cfg: RunConfig) -> int:
    g = load_group(cfg)
    w = _resolve_element(g, cfg.w or "w0")
    _print_char(top_cohomology_char(g, w, cfg.lam), cfg.fmt)
    return EXIT_OK


def cmd_euler(cfg: RunConfig) -> int:
    g = load_group(cfg)
    w = _resolve_element(g, cfg.w or "w0")
    _print_char(euler_char(g, w, cfg.mu), cfg.fmt)
    return EXIT_OK


def cmd_bruhat(cfg: RunConfig) -> int:
    g = load_group(cfg)
    w = _resolve_element(g, cfg.w)
    tau = _resolve_element(g, cfg.tau)
    result = bruhat_leq(g, w, tau)
    if cfg.fmt == "json":
        _dump_json({"w": list(w.word), "tau": list(tau.word), "leq": result})
    else:
        print("true" if result else "false")
    return EXIT_OK


@functools.lru_cache(maxsize=8)
def _cached_group(family: str, rank: int, max_order: int) -> WeylGroup:
    return generate(build_datum(family, rank), max_order)


def _sweep_lambda(g: WeylGroup, mode: str, lam: Weight) -> dict:
    sweep = sweep_verify_theorem if mode == "theorem" else sweep_verify_lemma31
    reports = sweep(g, lam)
    return {
        "lambda": list(lam),
        "reports": [r.to_json_dict(g.elements[k], lam) for k, r in enumerate(reports)],
    }


def _sweep_task(args: tuple) -> dict:
    family, rank, max_order, mode, lam = args
    return _sweep_lambda(_cached_group(family, rank, max_order), mode, lam)


def _run_sweep(cfg: RunConfig, g: WeylGroup, mode: str, lams: list[Weight]) -> list[dict]:
    if cfg.parallel and len(lams) > 1:
        import multiprocessing

        tasks = [(g.datum.family, g.datum.rank, cfg.max_group_order, mode, lam) for lam in lams]
        with multiprocessing.Pool() as pool:
            return pool.map(_sweep_task, tasks, chunksize=1)
    return [_sweep_lambda(g, mode, lam) for lam in lams]


def _emit_sweep(cfg: RunConfig, name: str, g: WeylGroup, results: list[dict]) -> int:
    checks = sum(len(block["reports"]) for block in results)
    failures = [r for block in results for r in block["reports"] if not r["passed"]]
    if cfg.fmt == "json":
        _dump_json(
            {
                "command": name,
                "family": g.datum.family,
                "rank": g.datum.rank,
                "grid": cfg.grid,
                "checks": checks,
                "all_passed": not failures,
                "sweeps": results,
            }
        )
    else:
        print(f"{name} type={g.datum.family}{g.datum.rank} grid={cfg.grid} elements={g.order}")
        for block in results:
            ok = all(r["passed"] for r in block["reports"])
            print(f"lambda={block['lambda']} checks={len(block['reports'])} {'ok' if ok else 'MISMATCH'}")
        print(f"total checks={checks} passed={checks - len(failures)}")
        if failures:
            print("first counterexample:")
            print(json.dumps(failures[0], indent=2, sort_keys=True))
        print("PASS" if not failures else "FAIL")
    return EXIT_OK if not failures else EXIT_MISMATCH


def cmd_verify(cfg: RunConfig) -> int:
    g = load_group(cfg)
    lams = _lambda_grid(g.datum.rank, cfg.grid)
    results = _run_sweep(cfg, g, "theorem", lams)
    return _emit_sweep(cfg, "verify-theorem", g, results)


def cmd_verify_lemma(cfg: RunConfig) -> int:
    g = load_group(cfg)
    lams = _lambda_grid(g.datum.rank, cfg.grid)
    results = _run_sweep(cfg, g, "lemma31", lams)
    return _emit_sweep(cfg, "verify-lemma31", g, results)


def _random_char(rng: random.Random, rank: int) -> CharElement:
    terms = {}
    for _ in range(rng.randint(1, 6)):
        mu = tuple(rng.randint(-4, 4) for _ in range(rank))
        terms[mu] = rng.randint(-5, 5)
    return CharElement(rank, terms)


def cmd_kernel(cfg: RunConfig) -> int:
    g = load_group(cfg)
    d = g.datum
    rho = d.rho
    w0 = g.longest_element
    lams = _lambda_grid(d.rank, cfg.grid)
    dual = lambda mu: weight_neg(w0.apply(mu))

    per_lambda = []
    basis = {}
    for lam in lams:
        v = kernel_basis_element(g, lam)
        basis[lam] = v
        expected = {dual(weight_sub(lam, rho)): 1}
        per_lambda.append(
            {
                "lambda": list(lam),
                "member": in_kernel(g, v),
                "roundtrip": decompose(g, v) == expected,
                "characterization": verify_characterization(g, v),
            }
        )

    rng = random.Random(KERNEL_SWEEP_SEED)
    combo_ok = 0
    n_combos = 50
    for _ in range(n_combos):
        chosen = rng.sample(lams, rng.randint(1, min(3, len(lams))))
        coeffs = {lam: rng.choice([-3, -2, -1, 1, 2, 3]) for lam in chosen}
        v = CharElement.zero(d.rank)
        for lam, c in coeffs.items():
            v = v + c * basis[lam]
        expected = {dual(weight_sub(lam, rho)): c for lam, c in coeffs.items()}
        if decompose(g, v) == expected:
            combo_ok += 1
    random_ok = sum(1 for _ in range(n_combos) if verify_characterization(g, _random_char(rng, d.rank)))

    all_ok = (
        all(x["member"] and x["roundtrip"] and x["characterization"] for x in per_lambda)
        and combo_ok == n_combos
        and random_ok == n_combos
    )
    if cfg.fmt == "json":
        _dump_json(
            {
                "command": "verify-kernel",
                "family": d.family,
                "rank": d.rank,
                "grid": cfg.grid,
                "per_lambda": per_lambda,
                "combos_ok": combo_ok,
                "combos_total": n_combos,
                "random_characterizations_ok": random_ok,
                "all_passed": all_ok,
            }
        )
    else:
        print(f"verify-kernel type={d.family}{d.rank} grid={cfg.grid}")
        for x in per_lambda:
            print(
                f"lambda={x['lambda']} member={x['member']} "
                f"roundtrip={x['roundtrip']} characterization={x['characterization']}"
            )
        print(f"combos ok={combo_ok}/{n_combos}")
        print(f"random characterizations ok={random_ok}/{n_combos}")
        print("PASS" if all_ok else "FAIL")
    return EXIT_OK if all_ok else EXIT_MISMATCH


def cmd_decompose(cfg: RunConfig) -> int:
    g = load_group(cfg)
    text = sys.stdin.read() if cfg.charfile in (None, "-") else Path(cfg.charfile).read_text()
    v = CharElement.from_json_dict(json.loads(text))
    if v.rank != g.datum.rank:
        raise ValueError(f"element rank {v.rank} does not match --rank {g.datum.rank}")
    coefficients = decompose(g, v)
    payload = decomposition_to_json(g, coefficients)
    if cfg.fmt == "json":
        _dump_json(payload)
    else:
        for item in payload["coefficients"]:
            print(f"mu={item['mu']} lambda={item['lambda']} coeff={item['coeff']}")
        if not payload["coefficients"]:
            print("zero element: empty decomposition")
    return EXIT_OK


_COMMANDS = {
    "info": cmd_info,
    "weyl": cmd_weyl,
    "demchar": cmd_demchar,
    "topchar": cmd_topchar,
    "euler": cmd_euler,
    "verify-theorem": cmd_verify,
    "verify-lemma31": cmd_verify_lemma,
    "verify-kernel": cmd_kernel,
    "decompose": cmd_decompose,
    "bruhat": cmd_bruhat,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        return _COMMANDS[cfg.command](cfg)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
