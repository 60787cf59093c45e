"""Command line front end: ``ndgtool <command> ...``.

Exit status is 0 when every reported check passes, 1 when a check fails and 2
for usage, parse or reference errors. Without ``--timing`` the output is a
pure function of (arguments, input file, seed).
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from .errors import BadArguments, NdgError, ParseError, UnknownName, UnknownSuite, \
    ValidationError
from .linalg import kernel
from .ncx.contraction import contract_acyclic
from .ncx.core import GradedSpace, check_nilpotent, homology, is_acyclic
from .ncx.functors import adjunction_maps, u_functor
from .ncx.homotopy import chain_condition_operator, khom_dim
from .ncx.tensor import hom_complex
from .ncx.triangles import cone, hexagon_report
from .serialize import Workspace, dump_complex, load_workspace


@dataclass
class Result:
    check: str
    passed: bool
    summary: object = None


@dataclass
class Report:
    command: List[str]
    seed: Optional[int] = None
    results: List[Result] = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    seconds: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def add(self, check, passed, summary=None):
        self.results.append(Result(check, bool(passed), summary))

    def to_json(self) -> str:
        obj = {"command": self.command, "seed": self.seed,
               "status": "pass" if self.passed else "fail",
               "results": [{"check": r.check, "status": "pass" if r.passed else "fail",
                            "summary": r.summary} for r in self.results]}
        obj.update(self.extra)
        if self.seconds is not None:
            obj["seconds"] = round(self.seconds, 3)
        return json.dumps(obj, indent=2, sort_keys=False)

    def to_tsv(self) -> str:
        lines = [f"# command\t{' '.join(self.command)}", f"# seed\t{self.seed}",
                 f"# status\t{'pass' if self.passed else 'fail'}"]
        for k, v in self.extra.items():
            lines.append(f"# {k}\t{json.dumps(v, sort_keys=True)}")
        if self.seconds is not None:
            lines.append(f"# seconds\t{self.seconds:.3f}")
        lines.append("check\tstatus\tsummary")
        for r in self.results:
            lines.append(f"{r.check}\t{'pass' if r.passed else 'fail'}\t"
                         f"{json.dumps(r.summary, sort_keys=True)}")
        return "\n".join(lines)


def parse_range(text: str) -> List[int]:
    """'3' -> [3]; '2..5' -> [2, 3, 4, 5]; '-3..3' works too."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise BadArguments(f"bad range {text!r}; expected an integer or a..b") from None


def _resolve_seed(value: Optional[int]) -> int:
    if value is not None:
        return value
    env = os.environ.get("NDGTOOL_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise BadArguments(f"NDGTOOL_SEED={env!r} is not an integer") from None


def _checksum(F, mats) -> str:
    h = hashlib.sha256()
    for key, m in mats:
        h.update(repr(key).encode())
        for i in range(m.rows):
            h.update((",".join(str(F.format(m.data[i, j])) for j in range(m.cols)) + ";")
                     .encode())
    return h.hexdigest()[:16]


# ---------------------------------------------------------------- commands

def cmd_check(ws: Workspace, args, rep: Report):
    rep.add("field", True, ws.spec.to_json())
    for name, X in ws.complexes.items():
        rep.add(f"complex {name}", True, {str(k): v for k, v in X.dims.items()})
    for name, f in ws.maps.items():
        rep.add(f"map {name}", True, {"degree": f.degree, "chain_map": f.is_chain_map()})
    for name, C in ws.categories.items():
        rep.add(f"category {name}", True, {"objects": list(C.objects)})
    for name, X in ws.modules.items():
        rep.add(f"module {name}", True, {"side": X.side})
    for name in ws.bimodules:
        rep.add(f"bimodule {name}", True)


def _window(args, *complexes):
    if args.window:
        w = parse_range(args.window)
        return w[0], w[-1]
    degs = [i for X in complexes for i in X.support]
    return (min(degs), max(degs)) if degs else (0, -1)


def cmd_homology(ws: Workspace, args, rep: Report):
    X = ws.lookup("complexes", args.complex)
    lo, hi = _window(args, X)
    table = [[i, r, homology(X, i, r).h_dim] for i in range(lo, hi + 1) for r in range(1, X.N)]
    rep.add("homology", True, {"columns": ["i", "r", "h_dim"], "rows": table})
    rep.add("acyclic", True, is_acyclic(X, all_r=args.all_r))


def cmd_cone(ws: Workspace, args, rep: Report):
    f = ws.lookup("maps", args.map)
    T = cone(f)
    rep.add("triangle", True, {"dims": {str(k): v for k, v in T.Z.dims.items()}})
    entries = hexagon_report(T)
    bad = [f"{e.position}:{e.i}:{e.r}" for e in entries if not e.exact]
    rep.add("long_exact_sequence", not bad, {"positions": len(entries), "failed": bad})
    if args.emit_complex:
        rep.extra["cone"] = dump_complex(T.Z)


def cmd_contract(ws: Workspace, args, rep: Report):
    X = ws.lookup("complexes", args.complex)
    if not is_acyclic(X):
        rep.add("acyclic", False)
        return
    c = contract_acyclic(X)
    g = c.basis_change
    blocks = sorted(c.multiset().items())
    rep.add("acyclic", True)
    rep.add("blocks", True, [[s, l, k] for (s, l), k in blocks])
    rep.add("basis_change", g.is_chain_map() and g.is_iso(),
            {"checksum": _checksum(X.field, sorted(g.components.items()))})


def _pair(ws: Workspace, args):
    for table in ("complexes", "modules"):
        if args.source in getattr(ws, table):
            return table, ws.lookup(table, args.source), ws.lookup(table, args.target)
    raise UnknownName(f"no complex or module named {args.source!r}")


def cmd_homspace(ws: Workspace, args, rep: Report):
    from .ndgcat import module_hom_complex
    table, X, Y = _pair(ws, args)
    H = hom_complex(X, Y) if table == "complexes" else module_hom_complex(X, Y)
    check_nilpotent(H)
    rep.add("hom_complex", True, {"dims": {str(k): v for k, v in H.dims.items()}})
    if args.window or H.support:
        lo, hi = _window(args, H)
        rows = [[i, r, homology(H, i, r).h_dim] for i in range(lo, hi + 1)
                for r in range(1, H.N)]
        rep.add("homology", True, {"columns": ["i", "r", "h_dim"], "rows": rows})


def cmd_khom(ws: Workspace, args, rep: Report):
    from .ndgcat import khom_module
    table, X, Y = _pair(ws, args)
    if table == "complexes":
        dim = khom_dim(X, Y, args.n, args.flavor)
    else:
        dim = khom_module(X, Y, args.n, args.flavor)
    rep.add("khom", True, {"n": args.n, "flavor": args.flavor, "dim": dim})


def cmd_adjoint(ws: Workspace, args, rep: Report):
    if args.bimodule:
        from .ndgcat import adjunction_check
        if not (args.left and args.right):
            raise BadArguments("--bimodule needs --left and --right modules")
        res = adjunction_check(ws.lookup("modules", args.left),
                               ws.lookup("bimodules", args.bimodule),
                               ws.lookup("modules", args.right))
        rep.add("alpha_iso", res.ok, {"hom_dims": {str(k): v for k, v in
                                                   res.dims_left.items()},
                                      "invertible": res.invertible, "chain": res.chain})
        return
    if args.complex is None or args.space is None:
        raise BadArguments("give --bimodule/--left/--right or --complex/--space/--r")
    X = ws.lookup("complexes", args.complex)
    try:
        Y = GradedSpace({int(k): int(v) for k, v in json.loads(args.space).items()})
    except (ValueError, AttributeError):
        raise BadArguments("--space must be a JSON object of degree: dim") from None
    r = args.r
    adj = adjunction_maps(r, Y, X)
    UX = u_functor(r, X)
    graded = sum(Y.dim(n) * UX.dim(n) for n in Y.support)
    left = kernel(chain_condition_operator(adj["Q_left_Y"], X)).cols
    right = kernel(chain_condition_operator(X, adj["Q_right_Y"])).cols
    rep.add("left_adjoint_dims", left == graded, {"chain_maps": left, "graded_maps": graded})
    rep.add("right_adjoint_dims", right == graded, {"chain_maps": right, "graded_maps": graded})


def cmd_verify(args, rep: Report):
    from .suites import SUITES, run_suite
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if any(n not in SUITES for n in names):
        raise UnknownSuite(f"unknown suite {args.suite!r}; known: all, {', '.join(SUITES)}")
    N_values = parse_range(args.N) if args.N else None
    if N_values and min(N_values) < 2:
        raise BadArguments("N must be at least 2")
    failures = []
    for name in names:
        sr = run_suite(name, N_values, args.trials, rep.seed, args.all_r)
        for c in sr.checks:
            rep.add(f"{name}/{c.name}", c.passed, c.detail)
        failures.extend(sr.failures)
    if failures:
        out_dir = Path(args.reproducer_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        path = out_dir / f"{args.suite}-seed{rep.seed}.json"
        path.write_text(json.dumps({"command": rep.command, "seed": rep.seed,
                                    "rng": "numpy default_rng([seed, N, trial])",
                                    "failures": failures}, indent=2))
        rep.extra["reproducer"] = str(path)


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "tsv"], default="json")
    common.add_argument("--timing", action="store_true", help="append wall-clock seconds")
    common.add_argument("--seed", type=int, default=None,
                        help="random seed (falls back to NDGTOOL_SEED, then 0)")
    common.add_argument("--all-r", action="store_true",
                        help="check every amplitude instead of the sufficient ones")

    p = argparse.ArgumentParser(prog="ndgtool", description="Exact computations with "
                                "N-complexes and N-differential graded categories.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="load and validate a workspace file")
    s.add_argument("file")

    s = sub.add_parser("homology", parents=[common], help="amplitude homology table")
    s.add_argument("file")
    s.add_argument("--complex", required=True)
    s.add_argument("--window", help="degree range a..b")

    s = sub.add_parser("cone", parents=[common], help="cone of a chain map and its exactness")
    s.add_argument("file")
    s.add_argument("--map", required=True)
    s.add_argument("--emit-complex", action="store_true")

    s = sub.add_parser("contract", parents=[common], help="split an acyclic complex")
    s.add_argument("file")
    s.add_argument("--complex", required=True)

    for name, helptext in (("homspace", "q-twisted hom complex"),
                           ("khom", "hom dimension in the homotopy category")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("file")
        s.add_argument("--source", required=True)
        s.add_argument("--target", required=True)
        if name == "khom":
            s.add_argument("--n", type=int, default=0)
            s.add_argument("--flavor", choices=["susp0", "susp1"], default="susp0")
        else:
            s.add_argument("--window", help="degree range a..b")

    s = sub.add_parser("adjoint", parents=[common], help="adjunction checks")
    s.add_argument("file")
    s.add_argument("--bimodule")
    s.add_argument("--left")
    s.add_argument("--right")
    s.add_argument("--complex")
    s.add_argument("--space", help='graded space as JSON, e.g. \'{"0": 1}\'')
    s.add_argument("--r", type=int, default=0)

    s = sub.add_parser("verify", parents=[common], help="seeded verification suites")
    s.add_argument("--suite", required=True)
    s.add_argument("--N", help="N or a..b")
    s.add_argument("--trials", type=int)
    s.add_argument("--reproducer-dir", default="ndgtool-repro")
    return p


COMMANDS = {"check": cmd_check, "homology": cmd_homology, "cone": cmd_cone,
            "contract": cmd_contract, "homspace": cmd_homspace, "khom": cmd_khom,
            "adjoint": cmd_adjoint}


RANGE_OPTIONS = ("--window", "--N")


def _glue_ranges(argv: List[str]) -> List[str]:
    # argparse would read "--window -3..3" as two options
    out, i = [], 0
    while i < len(argv):
        if argv[i] in RANGE_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: Optional[List[str]] = None) -> int:
    argv = _glue_ranges(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    t0 = time.perf_counter()
    try:
        rep = Report(argv, _resolve_seed(args.seed))
        if args.command == "verify":
            cmd_verify(args, rep)
        else:
            try:
                ws = load_workspace(args.file)
            except ValidationError as exc:
                if args.command != "check":
                    raise
                rep.add("load", False, str(exc))
                ws = None
            if ws is not None:
                COMMANDS[args.command](ws, args, rep)
    except (ParseError, ValidationError, UnknownName, BadArguments, UnknownSuite,
            OSError) as exc:
        print(f"ndgtool: error: {exc}", file=sys.stderr)
        return 2
    except NdgError as exc:
        rep.add("error", False, f"{type(exc).__name__}: {exc}")
    if args.timing:
        rep.seconds = time.perf_counter() - t0
    print(rep.to_json() if args.format == "json" else rep.to_tsv())
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
