"""Command-line entry point.

Exit codes: 0 success, 1 "invalid" verdict from ``verify``, 2 usage or input
error, 3 instance above the exact-solver cap. Data goes to stdout, diagnostics
to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import bounds, experiments
from .errors import CapacityError, InputError, UndefinedParameterError
from .graph import FAMILIES, VertexSet, generate, max_degree, parse_graph, write_graph
from .packing import (
    DEFAULT_ORACLE_CAP,
    PackingInstance,
    exact_Lk,
    exact_ktuple_domination,
    randomized_packing,
    verify_ktuple_dominating,
    verify_packing,
)

ORACLE_CAP_ENV = "LIMPACK_ORACLE_CAP"
U64_MAX = (1 << 64) - 1

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


def _u64(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value <= U64_MAX:
        raise argparse.ArgumentTypeError(f"seed {value} outside the unsigned 64-bit range")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv", "text"), default="json")
    cap = argparse.ArgumentParser(add_help=False)
    cap.add_argument("--oracle-cap", type=_positive, default=None,
                     help=f"exact-solver vertex cap (env {ORACLE_CAP_ENV}, default {DEFAULT_ORACLE_CAP})")
    graph_k = argparse.ArgumentParser(add_help=False)
    graph_k.add_argument("graph", help="edge-list file, or - for stdin")
    graph_k.add_argument("--k", type=_positive, required=True)

    parser = argparse.ArgumentParser(prog="limpack", description="k-limited packings in graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family graph as an edge list")
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--n", type=_non_negative, required=True)
    p.add_argument("--d", type=_non_negative)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=_u64)

    p = sub.add_parser("verify", parents=[graph_k, fmt], help="check a vertex set")
    p.add_argument("set", help="vertex-set file: one index per line")
    p.add_argument("--ktuple", action="store_true",
                   help="check k-tuple domination instead of k-limited packing")

    p = sub.add_parser("pack", parents=[graph_k, fmt], help="randomized k-limited packing")
    p.add_argument("--seed", type=_u64, default=0)

    p = sub.add_parser("exact", parents=[graph_k, fmt, cap], help="exact L_k (and gamma_xk)")
    p.add_argument("--ktuple", action="store_true", help="also compute gamma_xk")

    p = sub.add_parser("bounds", parents=[graph_k, fmt, cap], help="all closed-form bounds")
    p.add_argument("--ktuple", action="store_true",
                   help="attach the exact gamma_xk upper bound (oracle-sized graphs)")

    p = sub.add_parser("experiment", help="trials | sandwich | sharpness")
    esub = p.add_subparsers(dest="experiment", required=True)
    e = esub.add_parser("trials", parents=[graph_k, fmt])
    e.add_argument("--trials", type=_positive, default=100)
    e.add_argument("--seed", type=_u64, default=0)
    e.add_argument("--workers", type=_non_negative, default=1,
                   help="worker processes; 0 means one per CPU")
    e = esub.add_parser("sandwich", parents=[fmt, cap])
    e.add_argument("--count", type=_positive, default=200, help="random G(n,p) instances")
    e.add_argument("--seed", type=_u64, default=0)
    e.add_argument("--workers", type=_non_negative, default=1)
    e = esub.add_parser("sharpness", parents=[fmt])
    e.add_argument("--k", type=_positive, required=True, help="largest k = Delta to tabulate")
    return parser


def resolve_oracle_cap(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get(ORACLE_CAP_ENV)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise InputError(f"{ORACLE_CAP_ENV}={env!r} is not an integer") from None
        if value < 1:
            raise InputError(f"{ORACLE_CAP_ENV} must be positive, got {value}")
        return value
    return DEFAULT_ORACLE_CAP


def _read_bytes(path: str, stdin) -> bytes:
    if path == "-":
        data = stdin.buffer.read() if hasattr(stdin, "buffer") else stdin.read()
        return data.encode() if isinstance(data, str) else data
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def parse_vertex_set(text: str, n: int) -> VertexSet:
    """One decimal vertex index per line; blank and ``#`` lines are skipped."""
    out = VertexSet(n)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            v = int(line)
        except ValueError:
            raise InputError(f"set file line {lineno}: not an integer: {line!r}") from None
        if v in out:
            raise InputError(f"set file line {lineno}: vertex {v} repeated")
        try:
            out.add(v)
        except InputError as exc:
            raise InputError(f"set file line {lineno}: {exc}") from None
    return out


def _num(x):
    if isinstance(x, float):
        return float(f"{x:.12g}")
    if isinstance(x, dict):
        return {k: _num(v) for k, v in x.items()}
    if isinstance(x, list):
        return [_num(v) for v in x]
    return x


def _dump_json(payload: dict) -> str:
    return json.dumps(_num(payload), indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(_num(list(r)) for r in rows)
    return buf.getvalue()


def _text_set(meta: dict, members) -> str:
    # comment header keeps the output usable as a `verify` set file
    lines = [f"# {k}: {_num(v)}" for k, v in meta.items()]
    lines += [str(v) for v in members]
    return "\n".join(lines) + "\n"


def _render_set(fmt: str, payload: dict, set_key: str = "set") -> str:
    if fmt == "json":
        return _dump_json(payload)
    if fmt == "csv":
        return _csv(["vertex"], ([v] for v in payload[set_key]))
    meta = {k: v for k, v in payload.items() if not isinstance(v, list)}
    return _text_set(meta, payload[set_key])


def cmd_gen(args, out) -> int:
    g = generate(args.family, args.n, p=args.p, d=args.d, seed=args.seed)
    out.write(write_graph(g).decode("ascii"))
    return EXIT_OK


def cmd_verify(args, out, stdin) -> int:
    g = parse_graph(_read_bytes(args.graph, stdin))
    s = parse_vertex_set(_read_bytes(args.set, stdin).decode("utf-8"), g.n)
    inst = PackingInstance(g, args.k)
    check = verify_ktuple_dominating if args.ktuple else verify_packing
    ok = check(inst, s)
    verdict = "valid" if ok else "invalid"
    prop = "ktuple_dominating" if args.ktuple else "k_limited_packing"
    payload = {"n": g.n, "m": g.m, "k": args.k, "property": prop, "size": len(s),
               "valid": ok}
    if args.format == "json":
        out.write(_dump_json(payload))
    elif args.format == "csv":
        out.write(_csv(list(payload), [payload.values()]))
    else:
        out.write(verdict + "\n")
    return EXIT_OK if ok else EXIT_INVALID


def cmd_pack(args, out, stdin) -> int:
    g = parse_graph(_read_bytes(args.graph, stdin))
    inst = PackingInstance(g, args.k)
    res = randomized_packing(inst, args.seed)
    delta = max_degree(g)
    payload = {
        "n": g.n, "m": g.m, "k": args.k, "seed": args.seed, "size": res.size,
        "lower_bound": bounds.lower_bound_thm1(g.n, delta, args.k),
        "set": res.set.sorted(),
    }
    out.write(_render_set(args.format, payload))
    return EXIT_OK


def cmd_exact(args, out, stdin) -> int:
    cap = resolve_oracle_cap(args.oracle_cap)
    g = parse_graph(_read_bytes(args.graph, stdin))
    inst = PackingInstance(g, args.k)
    res = exact_Lk(inst, cap)
    payload = {"n": g.n, "m": g.m, "k": args.k, "size": res.size, "set": res.set.sorted()}
    if args.ktuple:
        try:
            kt = exact_ktuple_domination(inst, cap)
            payload["ktuple"] = {"size": kt.size, "set": kt.set.sorted(), "note": ""}
        except UndefinedParameterError as exc:
            payload["ktuple"] = {"size": None, "set": None, "note": str(exc)}
    if args.format == "json":
        out.write(_dump_json(payload))
    elif args.format == "csv":
        rows = [["packing", v] for v in payload["set"]]
        if args.ktuple and payload["ktuple"]["set"] is not None:
            rows += [["ktuple", v] for v in payload["ktuple"]["set"]]
        out.write(_csv(["role", "vertex"], rows))
    else:
        meta = {k: v for k, v in payload.items() if not isinstance(v, (list, dict))}
        if args.ktuple:
            meta["ktuple_size"] = payload["ktuple"]["size"]
            if payload["ktuple"]["note"]:
                meta["ktuple_note"] = payload["ktuple"]["note"]
        out.write(_text_set(meta, payload["set"]))
    return EXIT_OK


def cmd_bounds(args, out, stdin) -> int:
    g = parse_graph(_read_bytes(args.graph, stdin))
    kt = None
    if args.ktuple:
        cap = resolve_oracle_cap(args.oracle_cap)
        try:
            kt = exact_ktuple_domination(PackingInstance(g, args.k), cap).size
        except UndefinedParameterError as exc:
            print(f"limpack: {exc}", file=sys.stderr)
    rep = bounds.bound_report(g, args.k, kt)
    payload = rep.to_dict()
    payload["m"] = g.m
    if args.format == "json":
        out.write(_dump_json(payload))
    elif args.format == "csv":
        out.write(_csv(["name", "kind", "value", "coefficient", "applicable", "precondition"],
                       ([e["name"], e["kind"], e["value"], e["coefficient"], e["applicable"],
                         e["precondition"]] for e in payload["entries"])))
    else:
        lines = [f"n={rep.n} m={g.m} k={rep.k} Delta={rep.delta_max} delta={rep.delta_min} "
                 f"connected={rep.connected}"]
        for e in rep.entries:
            val = "n/a" if e.value is None else f"{e.value:.6g} ({e.value / rep.n:.4f} n)"
            flag = "" if e.applicable else "  [not applicable]"
            lines.append(f"{e.kind:5s} {e.name:16s} {val}{flag}  -- {e.precondition_note}")
        out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_experiment(args, out, stdin) -> int:
    if args.experiment == "trials":
        g = parse_graph(_read_bytes(args.graph, stdin))
        workers = args.workers or os.cpu_count() or 1
        stats = experiments.run_trials(PackingInstance(g, args.k), args.trials, args.seed, workers)
        payload = {"n": g.n, "m": g.m, "k": args.k, **stats.to_dict()}
        if args.format == "json":
            out.write(_dump_json(payload))
        elif args.format == "csv":
            seeds = [experiments.trial_seed(args.seed, i) for i in range(args.trials)]
            out.write(_csv(["trial", "seed", "size"],
                           ([i, s, z] for i, (s, z) in enumerate(zip(seeds, stats.sizes)))))
        else:
            lb = "n/a" if stats.lower_bound is None else f"{stats.lower_bound:.6g}"
            out.write(f"trials={stats.trials} max={stats.max} mean={stats.mean:.6g} "
                      f"min={stats.min} lower_bound={lb} seed={stats.master_seed}\n")
        return EXIT_OK

    if args.experiment == "sandwich":
        cap = resolve_oracle_cap(args.oracle_cap)
        corpus = experiments.named_corpus() + experiments.random_corpus(args.count, args.seed)
        workers = args.workers or os.cpu_count() or 1
        rep = experiments.sandwich_sweep(corpus, cap, workers)
        payload = {"seed": args.seed, **rep.to_dict()}
        if args.format == "json":
            out.write(_dump_json(payload))
        elif args.format == "csv":
            out.write(_csv(["label", "n", "k", "L_k", "ktuple", "gamma", "violations", "note"],
                           ([r.label, r.n, r.k, r.lk, r.ktuple, r.domination,
                             "; ".join(r.violations), r.note] for r in rep.rows)))
        else:
            out.write(f"instances={len(rep.rows)} checked={rep.checked} "
                      f"violations={len(rep.violations)}\n")
            for v in rep.violations:
                out.write(f"VIOLATION {v}\n")
        return EXIT_OK

    table = experiments.sharpness_sweep(args.k)
    if args.format == "json":
        out.write(_dump_json({"k_max": args.k,
                              "rows": [{"k": k, "ratio": r} for k, r in table]}))
    elif args.format == "csv":
        out.write(_csv(["k", "ratio"], table))
    else:
        out.write("".join(f"{k}\t{r:.6f}\n" for k, r in table))
    return EXIT_OK


def main(argv=None, stdout=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "gen":
            return cmd_gen(args, stdout)
        handler = {"verify": cmd_verify, "pack": cmd_pack, "exact": cmd_exact,
                   "bounds": cmd_bounds, "experiment": cmd_experiment}[args.command]
        return handler(args, stdout, stdin)
    except CapacityError as exc:
        print(f"limpack: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (InputError, UndefinedParameterError) as exc:
        print(f"limpack: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
