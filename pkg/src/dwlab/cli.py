"""Command-line front end and file formats.

Tournament files are textual: first line n, then n rows of n characters
over {0,1} with row u, column v equal to 1 iff the arc (u, v) is present;
lines starting with '#' are ignored.  Orderings and vertex sets are
whitespace-separated 0-based ids on one line.  Formulas use DIMACS cnf;
cubic graphs use DIMACS-like "p edge" files with 1-based "e u v" lines.

Every computational subcommand prints one JSON report line (sorted keys)
to stdout and revalidates its witness before emitting it.  Reports are
byte-identical across reruns with the same inputs and seeds; wall time is
only included under --timing for that reason.  Exit codes: 0 success,
1 when the answer is "no"/"none", 2 on input errors (cap violations name
the cap).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import approx as approx_mod
from . import domset, oracles, reductions, sparse
from .core import (
    Ordering,
    Tournament,
    backward_arcs,
    backward_profile,
    is_acyclic,
    is_dominating_set,
)
from .errors import DwlabError, SizeCapError, TournamentFormatError
from .generators import GeneratorSpec, generate

# ---------------------------------------------------------------------------
# File formats


def parse_tournament(text: str) -> Tournament:
    rows_txt: list[tuple[int, str]] = []  # (physical line number, content)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows_txt.append((lineno, line))
    if not rows_txt:
        raise TournamentFormatError("empty tournament file")
    head_line, head = rows_txt[0]
    try:
        n = int(head)
    except ValueError:
        raise TournamentFormatError(f"malformed dimension {head!r}", line=head_line)
    if n < 1:
        raise TournamentFormatError("dimension must be positive", line=head_line)
    body = rows_txt[1:]
    if len(body) != n:
        raise TournamentFormatError(f"expected {n} matrix rows, found {len(body)}")
    rows = [0] * n
    for u, (lineno, line) in enumerate(body):
        if len(line) != n:
            raise TournamentFormatError(
                f"row {u} has {len(line)} columns, expected {n}", line=lineno
            )
        for v, ch in enumerate(line):
            if ch == "1":
                rows[u] |= 1 << v
            elif ch != "0":
                raise TournamentFormatError(
                    f"invalid character {ch!r}", line=lineno, col=v + 1
                )
    for u, (lineno, line) in enumerate(body):
        if rows[u] >> u & 1:
            raise TournamentFormatError("self-loop on diagonal", line=lineno, col=u + 1)
        for v in range(u + 1, n):
            fwd = rows[u] >> v & 1
            rev = rows[v] >> u & 1
            if fwd == rev:
                what = "asymmetric pair (both set)" if fwd else f"pair {{{u},{v}}} undecided"
                raise TournamentFormatError(what, line=lineno, col=v + 1)
    return Tournament(n, tuple(rows))


def emit_tournament(t: Tournament) -> str:
    lines = [str(t.n)]
    for u in range(t.n):
        lines.append("".join("1" if t.out_rows[u] >> v & 1 else "0" for v in range(t.n)))
    return "\n".join(lines) + "\n"


def parse_ordering(text: str, n: int) -> Ordering:
    try:
        ids = [int(tok) for tok in text.split()]
    except ValueError as e:
        raise TournamentFormatError(f"malformed ordering: {e}")
    if len(ids) != n:
        raise TournamentFormatError(f"ordering has {len(ids)} entries, expected {n}")
    try:
        return Ordering.from_perm(ids)
    except ValueError as e:
        raise TournamentFormatError(str(e))


def emit_ids(ids: Sequence[int]) -> str:
    return " ".join(str(v) for v in ids) + "\n"


def parse_dimacs_cnf(text: str) -> reductions.Balanced3Sat4:
    n_vars = None
    clauses: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "c#":
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise TournamentFormatError("malformed problem line", line=lineno)
            n_vars = int(parts[2])
            continue
        lits = [int(tok) for tok in line.split()]
        if lits and lits[-1] == 0:
            lits = lits[:-1]
        if len(lits) != 3:
            raise TournamentFormatError("clauses must have three literals", line=lineno)
        clauses.append((lits[0], lits[1], lits[2]))
    if n_vars is None:
        raise TournamentFormatError("missing 'p cnf' line")
    return reductions.Balanced3Sat4(n_vars, tuple(clauses))


def parse_edge_graph(text: str) -> reductions.CubicGraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "c#":
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise TournamentFormatError("malformed problem line", line=lineno)
            n = int(parts[2])
        elif parts[0] == "e":
            if len(parts) != 3:
                raise TournamentFormatError("malformed edge line", line=lineno)
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            raise TournamentFormatError(f"unknown line kind {parts[0]!r}", line=lineno)
    if n is None:
        raise TournamentFormatError("missing 'p edge' line")
    return reductions.CubicGraph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Reports


@dataclass
class RunReport:
    command: list[str]
    input_digest: Optional[str]
    result: dict
    witness: object = None
    wall_time_ms: Optional[float] = None
    include_timing: bool = False

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "input_digest": self.input_digest,
            "result": self.result,
            "witness": self.witness,
        }
        if self.include_timing:
            payload["wall_time_ms"] = self.wall_time_ms
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _digest(data: str) -> str:
    return hashlib.sha256(data.encode()).hexdigest()


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r") as fh:
        return fh.read()


def _exact_cap() -> int:
    raw = os.environ.get("DWLAB_EXACT_CAP")
    return int(raw) if raw else oracles.DEFAULT_EXACT_CAP


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_gen(args) -> tuple[int, Optional[RunReport], str]:
    spec = GeneratorSpec(kind=args.family, n=args.size, k=args.size, seed=args.seed)
    gen = generate(spec)
    return 0, None, emit_tournament(gen.tournament)


def _cmd_dw(args) -> tuple[int, Optional[RunReport], str]:
    text = _read_input(args.tournament)
    t = parse_tournament(text)
    result: dict = {"n": t.n}
    witness = None
    if args.exact:
        res = oracles.exact_degreewidth(t, cap=_exact_cap())
        assert backward_profile(t, res.witness).width == res.value
        result["degreewidth"] = res.value
        result["explored"] = res.explored
        witness = list(res.witness.perm)
    elif args.approx:
        width, order = approx_mod.approx_degreewidth(t)
        assert backward_profile(t, order).width == width
        result["approx_width"] = width
        witness = list(order.perm)
    else:
        rep = approx_mod.degreewidth_bounds(t, fas_cap=_exact_cap())
        result["lower_min_indegree"] = rep.lower_min_indegree
        result["upper_indegree_ordering"] = rep.upper_indegree_ordering
        result["upper_2ctw"] = rep.upper_2ctw
        result["upper_fas"] = rep.upper_fas
    return 0, RunReport(list(args.argv), _digest(text), result, witness), ""


def _cmd_sparse(args) -> tuple[int, Optional[RunReport], str]:
    text = _read_input(args.tournament)
    t = parse_tournament(text)
    cert = sparse.is_m_sparse(t, ())
    if cert is None:
        report = RunReport(list(args.argv), _digest(text), {"sparse": False})
        return 1, report, ""
    sparse.verify_certificate(t, cert)
    decomposition = [
        {
            "vertices": list(block.vertices),
            "closure": block.closure_kind,
            "b": block.b,
            "a": block.a,
        }
        for block in cert.decomposition
    ]
    result = {"sparse": True, "decomposition": decomposition}
    report = RunReport(
        list(args.argv), _digest(text), result, list(cert.ordering.perm)
    )
    return 0, report, ""


def _cmd_fas(args) -> tuple[int, Optional[RunReport], str]:
    text = _read_input(args.tournament)
    t = parse_tournament(text)
    if args.exact:
        res = oracles.exact_fas(t, cap=_exact_cap())
        order = res.witness
        arcs = backward_arcs(t, order)
        assert len(arcs) == res.value
        result = {"fas_size": res.value, "arcs": [list(a) for a in arcs]}
        return 0, RunReport(list(args.argv), _digest(text), result, list(order.perm)), ""
    arcs, order = sparse.fast_sparse(t)
    arc_list = sorted(arcs)
    assert backward_profile(t, order).total_backward == len(arcs)
    result = {"fas_size": len(arc_list), "arcs": [list(a) for a in arc_list]}
    return 0, RunReport(list(args.argv), _digest(text), result, list(order.perm)), ""


def _cmd_fvs(args) -> tuple[int, Optional[RunReport], str]:
    text = _read_input(args.tournament)
    t = parse_tournament(text)
    res = oracles.exact_fvst(t, args.k)
    if res is None:
        report = RunReport(list(args.argv), _digest(text), {"feasible": False, "k": args.k})
        return 1, report, ""
    result = {"feasible": True, "k": args.k, "size": len(res)}
    return 0, RunReport(list(args.argv), _digest(text), result, sorted(res)), ""


def _cmd_ds(args) -> tuple[int, Optional[RunReport], str]:
    text = _read_input(args.tournament)
    t = parse_tournament(text)
    if args.exact:
        res = oracles.exact_min_ds(t)
        assert is_dominating_set(t, res.witness)
        result = {"gamma": res.value, "explored": res.explored}
        return 0, RunReport(list(args.argv), _digest(text), result, sorted(res.witness)), ""
    if args.greedy:
        width, order = approx_mod.approx_degreewidth(t)
        s = domset.greedy_dominating_set(t, order)
        assert is_dominating_set(t, s)
        result = {"size": len(s), "width_bound": width + 1}
        return 0, RunReport(list(args.argv), _digest(text), result, sorted(s)), ""
    res = domset.fpt_dominating_set(t, args.s, mode=args.family, seed=args.seed)
    if res is None:
        report = RunReport(list(args.argv), _digest(text), {"feasible": False, "s": args.s})
        return 1, report, ""
    assert is_dominating_set(t, res) and len(res) <= args.s
    result = {"feasible": True, "s": args.s, "size": len(res)}
    return 0, RunReport(list(args.argv), _digest(text), result, sorted(res)), ""


def _cmd_verify(args) -> tuple[int, Optional[RunReport], str]:
    text = _read_input(args.tournament)
    t = parse_tournament(text)
    order = parse_ordering(_read_input(args.ordering), t.n)
    profile = backward_profile(t, order)
    result = {
        "width": profile.width,
        "total_backward": profile.total_backward,
        "max_cut": profile.max_cut,
    }
    code = 0
    if args.claim_width is not None:
        result["claim_width"] = args.claim_width
        result["claim_holds"] = profile.width == args.claim_width
        if not result["claim_holds"]:
            code = 1
    report = RunReport(list(args.argv), _digest(text), result, list(order.perm))
    return code, report, ""


def _cmd_reduce(args) -> tuple[int, Optional[RunReport], str]:
    text = _read_input(args.input)
    if args.kind == "sat2dw":
        formula = parse_dimacs_cnf(text)
        formula = reductions.normalize_parity(formula)
        inst = reductions.sat_to_degreewidth(formula)
        problems = reductions.audit_sat_instance(inst)
        if problems:
            raise DwlabError("construction audit failed: " + "; ".join(problems))
        sidecar = {
            "kind": "sat2dw",
            "threshold": inst.threshold,
            "w": inst.w,
            "n_vars": inst.n_vars,
            "m_clauses": inst.m_clauses,
            "blocks": {name: list(inst.ranges[name]) for name in inst.ranges},
            "labels": {str(v): list(pair) for v, pair in inst.block_map().items()},
        }
        t = inst.tournament
        result = {"n": t.n, "threshold": inst.threshold, "w": inst.w}
    else:
        graph = parse_edge_graph(text)
        inst2 = reductions.cubic_to_fvst(graph)
        sidecar = {
            "kind": "vc2fvst",
            "offset": inst2.offset,
            "patterns": {str(i): list(p) for i, p in inst2.pattern_map().items()},
            "vertex_arcs": [list(a) for a in inst2.vertex_arcs],
            "edge_arcs": {f"{i},{j}": list(a) for (i, j), a in sorted(inst2.edge_arcs.items())},
            "ordering": list(inst2.ordering.perm),
        }
        t = inst2.tournament
        result = {"n": t.n, "offset": inst2.offset}
    with open(args.out + ".tournament", "w") as fh:
        fh.write(emit_tournament(t))
    with open(args.out + ".json", "w") as fh:
        json.dump(sidecar, fh, sort_keys=True, indent=1)
        fh.write("\n")
    result["files"] = [args.out + ".tournament", args.out + ".json"]
    return 0, RunReport(list(args.argv), _digest(text), result), ""


BENCH_HEADER = "n,seed,dw_exact,dw_approx,ratio,ctw,fas_exact,t_exact_ms,t_approx_ms"


def _cmd_bench(args) -> tuple[int, Optional[RunReport], str]:
    from .generators import random_tournament

    cap = _exact_cap()
    sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    lines = [BENCH_HEADER]
    idx = 0
    for n in sizes:
        for _ in range(args.per_size):
            seed = args.seed + idx
            idx += 1
            t = random_tournament(n, seed)
            t0 = time.perf_counter()
            width, _order = approx_mod.approx_degreewidth(t)
            t_approx = (time.perf_counter() - t0) * 1000
            ctw, _ = oracles.cutwidth_tournament(t)
            dw_exact = fas_exact = ""
            ratio = ""
            t_exact = None
            if n <= cap:
                t0 = time.perf_counter()
                dw = oracles.exact_degreewidth(t, cap=cap).value
                t_exact = (time.perf_counter() - t0) * 1000
                fas = oracles.exact_fas(t, cap=cap).value
                dw_exact, fas_exact = str(dw), str(fas)
                ratio = f"{width / dw:.4f}" if dw else ("1.0000" if width == 0 else "inf")
            cols = [
                str(n), str(seed), dw_exact, str(width), ratio, str(ctw), fas_exact,
                f"{t_exact:.3f}" if (args.timing and t_exact is not None) else "",
                f"{t_approx:.3f}" if args.timing else "",
            ]
            lines.append(",".join(cols))
    return 0, None, "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dwlab", description=__doc__)
    parser.add_argument("--timing", action="store_true",
                        help="include wall time in reports (breaks byte-identical reruns)")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gen", help="generate a tournament file")
    p.add_argument("family", choices=["acyclic", "rotational", "u", "random"])
    p.add_argument("size", type=int, help="n (or k for rotational: order 2k+1)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("dw", help="degreewidth: --exact, --approx or bounds")
    p.add_argument("tournament")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true")
    g.add_argument("--approx", action="store_true")
    g.add_argument("--bounds", action="store_true")
    p.set_defaults(func=_cmd_dw)

    p = sub.add_parser("sparse", help="recognise sparse tournaments, emit certificate")
    p.add_argument("tournament")
    p.set_defaults(func=_cmd_sparse)

    p = sub.add_parser("fas", help="feedback arc set: --sparse (cubic time) or --exact")
    p.add_argument("tournament")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true")
    g.add_argument("--sparse", action="store_true")
    p.set_defaults(func=_cmd_fas)

    p = sub.add_parser("fvs", help="feedback vertex set, exact branching")
    p.add_argument("tournament")
    p.add_argument("--exact", action="store_true")
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=_cmd_fvs)

    p = sub.add_parser("ds", help="dominating set (out-neighbour convention)")
    p.add_argument("tournament")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true")
    g.add_argument("--greedy", action="store_true")
    g.add_argument("--fpt", action="store_true")
    p.add_argument("-s", type=int, default=1, help="target size for --fpt")
    p.add_argument("--family", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_ds)

    p = sub.add_parser("verify", help="recompute a profile, compare a claimed width")
    p.add_argument("tournament")
    p.add_argument("ordering")
    p.add_argument("--claim-width", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("reduce", help="hardness constructions")
    p.add_argument("kind", choices=["sat2dw", "vc2fvst"])
    p.add_argument("input", help="DIMACS cnf / p-edge file, or - for stdin")
    p.add_argument("-o", "--out", required=True, help="output path prefix")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("bench", help="seeded instance sweep, CSV output")
    p.add_argument("--sizes", default="8,10,12")
    p.add_argument("--per-size", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: Sequence[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = list(argv)
    start = time.perf_counter()
    try:
        code, report, payload = args.func(args)
    except SizeCapError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (TournamentFormatError, DwlabError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    elapsed = (time.perf_counter() - start) * 1000
    if payload:
        sys.stdout.write(payload)
    if report is not None:
        report.wall_time_ms = elapsed
        report.include_timing = args.timing
        print(report.to_json())
    if args.timing:
        print(f"wall time: {elapsed:.2f} ms", file=sys.stderr)
    return code


def console_main() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    console_main()
