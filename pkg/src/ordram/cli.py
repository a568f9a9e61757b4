"""``ordram`` command line.

Exit codes: 0 success / exact, 2 inconclusive (bracket or inexact value),
1 error or failed check.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path
from typing import Any, Sequence

from . import constructions, extremal, patterns
from .cache import ResultCache, canonical, verify_cache
from .graphs import OrderedGraph, OrderedHypergraph, StructureError, load_structure
from .patterns import MatrixOpSpec, PatternND, load_pattern
from .ramsey import (
    Certificate,
    CertificateError,
    EdgeColoring,
    RamseyResult,
    SearchConfig,
    random_blowup_probe,
    ramsey_number,
    verify_certificate,
)

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2


class CliError(Exception):
    pass


# --------------------------------------------------------------------------
# input helpers


def read_text(path: str) -> str:
    if path.startswith("builtin:"):
        name = path.split(":", 1)[1]
        try:
            return resources.files("ordram").joinpath("data", name).read_text(encoding="utf-8")
        except FileNotFoundError as exc:
            raise CliError(f"no packaged fixture {name!r}") from exc
    p = Path(path)
    if not p.exists():
        raise CliError(f"no such file: {path}")
    return p.read_text(encoding="utf-8")


def read_json(path: str) -> Any:
    try:
        return json.loads(read_text(path))
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: invalid JSON ({exc})") from exc


def parse_value(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def parse_params(items: Sequence[str]) -> dict[str, Any]:
    out = {}
    for item in items:
        if "=" not in item:
            raise CliError(f"expected key=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = parse_value(v.strip())
    return out


def parse_dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(x) for x in text.replace("x", ",").split(",") if x.strip())
    except ValueError as exc:
        raise CliError(f"bad --dims {text!r}") from exc
    if not dims or min(dims) < 1:
        raise CliError("--dims needs positive side lengths")
    return dims


def parse_range(text: str) -> list[int]:
    if "-" in text:
        lo, hi = text.split("-", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",")]


def emit(args: argparse.Namespace, obj: Any, text: str) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(text)


def open_cache(args: argparse.Namespace) -> ResultCache | None:
    if args.no_cache:
        return None
    return ResultCache(args.cache)


def render(obj: Any) -> str:
    if isinstance(obj, PatternND):
        return obj.to_text().rstrip("\n") if obj.d == 2 else canonical(obj.to_json())
    if isinstance(obj, (OrderedGraph, OrderedHypergraph)):
        return f"n={obj.n} edges={[list(e) for e in obj.sorted_edges()]}"
    if isinstance(obj, EdgeColoring):
        return "\n".join(f"{' '.join(map(str, e))} {'red' if c == 0 else 'blue'}" for e, c in obj.items())
    return str(obj)


def to_json(obj: Any) -> Any:
    return obj.to_json() if hasattr(obj, "to_json") else obj


# --------------------------------------------------------------------------
# commands


def search_config(args: argparse.Namespace) -> SearchConfig:
    return SearchConfig(
        max_n=args.max_n,
        budget=args.budget,
        workers=args.workers,
        color_swap=not args.no_swap,
        mirror=args.mirror,
        split_depth=args.split_depth,
    )


def compute_ramsey(target: Any, cfg: SearchConfig) -> RamseyResult:
    return ramsey_number(target, cfg)


def cmd_ramsey(args: argparse.Namespace) -> int:
    target = load_structure(read_json(args.graph))
    cfg = search_config(args)
    inputs = {"target": target.to_json(), "config": cfg.to_json()}
    cache = open_cache(args)
    if cache is not None:
        value, _, hit = cache.memo("ramsey", inputs, lambda: _ramsey_value(target, cfg))
        res = RamseyResult.from_json(value)
    else:
        res = compute_ramsey(target, cfg)
        hit = False
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = args.name or Path(args.graph).stem.replace("builtin:", "")
    files = []
    for label, cert in (("lower", res.lower_cert), ("upper", res.upper_cert)):
        if cert is None:
            continue
        path = out_dir / f"{stem}.{label}.json"
        path.write_text(json.dumps(cert.to_json(), indent=1, sort_keys=True) + "\n", encoding="utf-8")
        files.append(str(path))
    text = "\n".join([res.bracket(), *(f"certificate: {f}" for f in files)] + (["(cached)"] if hit else []))
    emit(args, {"result": res.to_json(), "files": files, "cached": hit}, text)
    return EXIT_OK if res.exact else EXIT_INCONCLUSIVE


def _ramsey_value(target: Any, cfg: SearchConfig) -> tuple[dict, bool]:
    res = compute_ramsey(target, cfg)
    return res.to_json(), res.exact


def cmd_verify(args: argparse.Namespace) -> int:
    cert = Certificate.from_json(read_json(args.cert))
    v = verify_certificate(cert, rerun=args.rerun)
    obj = {"ok": v.ok, "reason": v.reason, "color": v.color, "embedding": v.embedding, "claim": cert.claim()}
    text = ("OK " if v.ok else "FAIL ") + v.reason
    if v.embedding is not None:
        text += f"\nwitness embedding: {list(v.embedding)}"
    emit(args, obj, text)
    return EXIT_OK if v.ok else EXIT_ERROR


def _pattern_arg(args: argparse.Namespace) -> PatternND:
    if not args.pattern:
        raise CliError("--pattern is required")
    return load_pattern(read_text(args.pattern))


def _ex_dims(args: argparse.Namespace, p: PatternND) -> tuple[int, ...]:
    if args.dims:
        dims = parse_dims(args.dims)
    elif args.n:
        dims = (args.n,) * (args.d or p.d)
    else:
        raise CliError("give --n or --dims")
    if len(dims) != p.d:
        raise CliError(f"pattern is {p.d}-dimensional but host has {len(dims)} axes")
    return dims


def cmd_ex(args: argparse.Namespace) -> int:
    p = _pattern_arg(args)
    dims = _ex_dims(args, p)
    inputs = {"dims": list(dims), "pattern": p.canonical_hash(), "pattern_json": p.to_json(), "budget": args.budget}

    def compute() -> tuple[dict, bool]:
        r = extremal.ex_exact(dims, p, budget=args.budget, workers=args.workers, seed=args.seed)
        return _ex_export(r), r.exact

    cache = open_cache(args)
    if cache is not None:
        value, exact, hit = cache.memo("ex", inputs, compute)
    else:
        value, exact = compute()
        hit = False
    text = f"ex({'x'.join(map(str, dims))}) = {value['value']}" + ("" if exact else " (lower bound; budget exhausted)")
    text += "\n" + PatternND.from_json(value["witness"]).to_text().rstrip("\n") if p.d == 2 else ""
    emit(args, value | {"cached": hit}, text)
    return EXIT_OK if exact else EXIT_INCONCLUSIVE


def _ex_export(r: extremal.ExResult) -> dict:
    return {
        "dims": list(r.dims),
        "pattern": r.pattern.to_json(),
        "value": r.value,
        "exact": r.exact,
        "witness": r.witness.to_json(),
        "nodes_explored": r.nodes_explored,
    }


def cmd_gen(args: argparse.Namespace) -> int:
    params = parse_params(args.param)
    for key in ("n", "d", "k", "m"):
        val = getattr(args, key, None)
        if val is not None:
            params.setdefault(key, val)
    obj = constructions.generate(args.name, **params)
    emit(args, to_json(obj), render(obj))
    return EXIT_OK


def parse_op(text: str, extra: Sequence[str]) -> tuple[str, dict]:
    if text.lstrip().startswith("{"):
        spec = json.loads(text)
        return spec["kind"], dict(spec.get("params", {}))
    return text, parse_params(extra)


def cmd_matop(args: argparse.Namespace) -> int:
    p = _pattern_arg(args)
    kind, params = parse_op(args.op, args.param)
    if kind == "thmoper":
        opts = {k: v for k, v in params.items() if k not in ("variant", "j")}
        if "steps" in opts:
            opts["steps"] = [tuple(s) for s in opts["steps"]]
        out = patterns.thmoper_family(p, int(params["variant"]), int(params["j"]), **opts)
    else:
        if "other" in params and isinstance(params["other"], str):
            params["other"] = load_pattern(read_text(params["other"]))
        out = patterns.apply_op(p, MatrixOpSpec(kind, params))
    emit(args, out.to_json(), render(out))
    return EXIT_OK


DEFAULT_FIXTURES: dict[str, tuple[dict, dict, str]] = {
    "addblanks": ({"dims": [2, 2], "ones": [[0, 1], [1, 0]]}, {"k": 2}, "1-4"),
    "addlast": ({"dims": [1, 1], "ones": [[0, 0]]}, {}, "1-4"),
    "addmid": ({"dims": [1, 2], "ones": [[0, 0], [0, 1]]}, {"t": 2}, "1-4"),
    "addmidup": ({"dims": [2, 2], "ones": [[0, 0], [0, 1], [1, 0]]}, {}, "1-4"),
    "diagatt": ({"dims": [2, 2], "ones": [[0, 1], [1, 0]]}, {}, "1-4"),
    "superadditivity": ({"dims": [2, 2], "ones": [[0, 0], [0, 1], [1, 0], [1, 1]]}, {"max_sum": 5}, "2-3"),
    "extend-a": ({"dims": [1, 1, 1], "ones": [[0, 0, 0]]}, {}, "1-3"),
    "extend-b": ({"dims": [1, 1, 2], "ones": [[0, 0, 0], [0, 0, 1]]}, {"t": 1}, "1-3"),
    "extend-c": ({"dims": [2, 2, 2], "ones": [[0, 0, 1], [1, 1, 0]]}, {}, "1-3"),
    "extend-d": ({"dims": [1, 1, 2], "ones": [[0, 0, 0], [0, 0, 1]]}, {"k": 2}, "1-3"),
    "extendpettie": ({"dims": [1, 1, 2], "ones": [[0, 0, 0], [0, 0, 1]]}, {"line_axis": 2, "top_axis": 0}, "1-3"),
}


def cmd_props(args: argparse.Namespace) -> int:
    if args.lemma == "rect":
        entries = extremal.rect_bound_check(args.max_side, budget=args.budget)
        obj = [{"b": e.b, "n": e.n, "value": e.value, "bound": e.bound, "exact": e.exact, "ok": e.ok} for e in entries]
        text = "\n".join(f"ex({e.b}x{e.n}) = {e.value} <= {e.bound}: {'pass' if e.ok else 'FAIL'}" for e in entries)
        emit(args, obj, text)
        return EXIT_OK if all(e.ok for e in entries) else EXIT_ERROR
    if args.lemma not in extremal.LEMMAS:
        raise CliError(f"unknown lemma {args.lemma!r}; choose from rect, {', '.join(extremal.LEMMAS)}")
    fixture, params, n_range = DEFAULT_FIXTURES[args.lemma]
    p = _pattern_arg(args) if args.pattern else PatternND.from_json(fixture)
    if args.pattern or args.param:
        params = {}
    params = params | parse_params(args.param)
    n_values = parse_range(args.n_range or n_range)
    report = extremal.verify_lemma_inequalities(args.lemma, p, params, n_values, budget=args.budget, strict=False)
    emit(args, report.to_json(), report.to_text())
    if report.failed:
        return EXIT_ERROR
    return EXIT_OK if report.passed else EXIT_INCONCLUSIVE


def cmd_probe(args: argparse.Namespace) -> int:
    g = load_structure(read_json(args.graph))
    cert = random_blowup_probe(args.t, args.s, g, seed=args.seed, trials=args.trials)
    if cert is None:
        emit(args, None, "no free coloring found")
        return EXIT_INCONCLUSIVE
    emit(args, cert.to_json(), f"{cert.claim()} (trial {cert.meta['trial']})")
    return EXIT_OK


def recompute(op: str, inputs: dict) -> Any:
    if op == "ramsey":
        cfg = SearchConfig(**inputs["config"])
        return compute_ramsey(load_structure(inputs["target"]), cfg).to_json()
    if op == "ex":
        p = PatternND.from_json(inputs["pattern_json"])
        return _ex_export(extremal.ex_exact(tuple(inputs["dims"]), p, budget=inputs["budget"]))
    raise CliError(f"unknown cached operation {op!r}")


def cmd_verify_cache(args: argparse.Namespace) -> int:
    cache = ResultCache(args.cache)
    checks = verify_cache(cache, recompute)
    obj = [{"key": c.key, "op": c.op, "ok": c.ok, "reason": c.reason} for c in checks]
    text = "\n".join(f"{c.key[:12]} {c.op}: {c.reason}" for c in checks) or "cache is empty"
    emit(args, obj, text)
    return EXIT_OK if all(c.ok for c in checks) else EXIT_ERROR


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--cache", default=None, help="result cache file (default: $ORDRAM_CACHE or ~/.cache/ordram)")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=None, help="node budget")
    common.add_argument("--workers", type=int, default=1)

    parser = argparse.ArgumentParser(prog="ordram", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ramsey", parents=[common], help="exact ordered Ramsey number with certificates")
    p.add_argument("--graph", required=True, help="target JSON ({n, edges} or {n, d, edges}); builtin:NAME allowed")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--split-depth", type=int, default=8)
    p.add_argument("--mirror", action="store_true", help="break mirror symmetry (checked against the target)")
    p.add_argument("--no-swap", action="store_true", help="do not break color-swap symmetry")
    p.add_argument("--out-dir", default="ordram-certs")
    p.add_argument("--name", default=None, help="file stem for certificates")
    p.set_defaults(func=cmd_ramsey, default_budget=50_000_000)

    p = sub.add_parser("verify", parents=[common], help="re-check a certificate")
    p.add_argument("--cert", required=True)
    p.add_argument("--rerun", action="store_true", help="repeat the search for upper-bound certificates")
    p.set_defaults(func=cmd_verify, default_budget=50_000_000)

    p = sub.add_parser("ex", parents=[common], help="extremal function of a forbidden pattern")
    p.add_argument("--pattern", required=True, help="pattern file (text rows or JSON {dims, ones}); builtin:NAME allowed")
    p.add_argument("--n", type=int)
    p.add_argument("--dims")
    p.add_argument("--d", type=int)
    p.set_defaults(func=cmd_ex, default_budget=extremal.DEFAULT_BUDGET)

    p = sub.add_parser("gen", parents=[common], help="named construction")
    p.add_argument("name", choices=sorted(constructions.GENERATORS))
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("-p", "--param", action="append", default=[], help="key=value")
    p.set_defaults(func=cmd_gen, default_budget=1)

    p = sub.add_parser("matop", parents=[common], help="apply a matrix operation")
    p.add_argument("--pattern", required=True)
    p.add_argument("--op", required=True, help="kind (add-blanks, add-boundary-one, add-mid, graft, diag-attach, thmoper) or JSON")
    p.add_argument("param", nargs="*", help="key=value parameters")
    p.set_defaults(func=cmd_matop, default_budget=1)

    p = sub.add_parser("props", parents=[common], help="check an extremal inequality")
    p.add_argument("lemma", help="rect or one of: " + ", ".join(extremal.LEMMAS))
    p.add_argument("--pattern")
    p.add_argument("--n-range", help="e.g. 1-4 or 2,3")
    p.add_argument("--max-side", type=int, default=4)
    p.add_argument("-p", "--param", action="append", default=[], help="key=value")
    p.set_defaults(func=cmd_props, default_budget=extremal.DEFAULT_BUDGET)

    p = sub.add_parser("probe", parents=[common], help="random blow-up lower-bound probe")
    p.add_argument("--graph", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_probe, default_budget=1)

    p = sub.add_parser("verify-cache", parents=[common], help="recompute every cache entry")
    p.set_defaults(func=cmd_verify_cache, default_budget=1)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is None:
        args.budget = args.default_budget
    if args.budget <= 0 or args.workers <= 0:
        print("error: --budget and --workers must be positive", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except (CliError, StructureError, CertificateError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
