"""``sq``: normal forms, reference tables and verification suites from the shell.

Exit codes: 0 success, 2 invalid input, 3 a mismatch or failed check.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any

from . import __version__, em
from . import steenrod as st
from .report import VerificationReport, canonical_json

OK, BAD_INPUT, FAILED = 0, 2, 3
SUITES = ("relations", "fxi", "wu", "all")


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    m: list[int] = field(default_factory=lambda: [3])
    # degree ceiling for em-basis; the tables always cover rows 1..9
    window: int = 64
    max_window: int = 256
    include_cube: bool | None = None
    out: str | None = None
    format: str = "text"

    def check(self) -> None:
        if not self.m or any(m < 2 for m in self.m):
            raise UsageError("m must be at least 2")
        if self.window > self.max_window:
            raise UsageError(f"window {self.window} exceeds the configured maximum {self.max_window}")
        if self.format not in ("json", "text"):
            raise UsageError(f"unknown format {self.format!r}")


def load_config(path: str | None) -> dict[str, Any]:
    if path is None:
        return {}
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("config must be a JSON object")
    known = {f.name for f in fields(RunConfig)} | {"include-cube", "max-window"}
    unknown = set(data) - known
    if unknown:
        raise UsageError(f"unknown config keys: {sorted(unknown)}")
    return {k.replace("-", "_"): v for k, v in data.items()}


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Flags override the config file, which overrides defaults."""
    cfg = RunConfig()
    for k, v in load_config(args.config).items():
        if k == "m" and isinstance(v, int):
            v = [v]
        setattr(cfg, k, v)
    if getattr(args, "m", None) is not None:
        cfg.m = list(args.m)
    if getattr(args, "window", None) is not None:
        cfg.window = args.window
    if getattr(args, "include_cube", None) is not None:
        cfg.include_cube = args.include_cube
    if getattr(args, "out", None) is not None:
        cfg.out = args.out
    if getattr(args, "json", False):
        cfg.format = "json"
    cfg.check()
    return cfg


def _emit(cfg: RunConfig, obj: Any, text: str) -> None:
    sys.stdout.write(canonical_json(obj) if cfg.format == "json" else text)


# -- subcommands ----------------------------------------------------------


def cmd_norm(args: argparse.Namespace, cfg: RunConfig) -> int:
    try:
        value = st.normalize(st.parse(args.expr))
    except st.SqParseError as exc:
        print(f"sq norm: parse error: {exc}", file=sys.stderr)
        return BAD_INPUT
    text = st.format_element(value)
    _emit(cfg, {"input": args.expr, "normal_form": text,
                "terms": [list(I) for I in st.sorted_terms(value)]}, text + "\n")
    return OK


def _table_text(tab: dict[str, Any]) -> str:
    head = f"table {tab['table']}" + (f" (m={tab['m']})" if "m" in tab else "")
    lines = [head]
    for row in tab["rows"]:
        mark = "" if row["dim"] == row["expected"] and row["listed_basis_ok"] else "  MISMATCH"
        lines.append(f"  {row['j']:>2}  dim {row['dim']:>2}  {', '.join(row['basis'])}{mark}")
    return "\n".join(lines) + "\n"


def cmd_tables(args: argparse.Namespace, cfg: RunConfig) -> int:
    from .reproduce import first_mismatch, table

    which = [1, 2, 3, 4] if args.which == "all" else [int(args.which)]
    tabs = []
    for m in cfg.m:
        cube = bool(cfg.include_cube)
        for w in which:
            if w == 4 and any(t["table"] == 4 for t in tabs):
                continue
            tabs.append(table(w, m, cube))
    obj: Any = tabs[0] if len(tabs) == 1 else {"tables": tabs}
    _emit(cfg, obj, "".join(_table_text(t) for t in tabs))
    for t in tabs:
        bad = first_mismatch(t)
        if bad is not None:
            print(f"sq tables: mismatch in table {bad[0]}, row {bad[1]}", file=sys.stderr)
            return FAILED
    return OK


def cmd_em_basis(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.n <= 0 or args.deg < 0:
        raise UsageError("need n >= 1 and deg >= 0")
    basis = em.em_basis(args.n, args.deg, cfg.window)
    texts = [em.format_class({mon}) for mon in basis]
    _emit(cfg, {"n": args.n, "degree": args.deg, "dim": len(basis), "basis": texts},
          f"H^{args.deg}(K(Z/2,{args.n})): dim {len(basis)}\n" + "".join(f"  {t}\n" for t in texts))
    return OK


def _load_algebras(paths: list[str]):
    from . import corpus, pd

    out = []
    for p in paths:
        real = corpus.resolve(p)
        if real is None:
            raise UsageError(f"no such input {p}")
        try:
            out.append(pd.load(real))
        except pd.PDInputError as exc:
            raise UsageError(f"{p}: {exc}") from exc
    return out


def _finish(report: VerificationReport, cfg: RunConfig) -> int:
    if cfg.out:
        report.write(cfg.out)
    _emit(cfg, report.to_dict(), report.to_text())
    if report.warnings:
        print(f"sq verify: {len(report.warnings)} parameter-dependent result(s)", file=sys.stderr)
    return OK if report.passed else FAILED


def run_suite(suite: str, cfg: RunConfig, inputs: list[str] | None = None) -> VerificationReport:
    from .fmap import verify_fxi
    from .relations import verify_relations
    from .suites import verify_wu

    def cube(m: int) -> bool | None:
        # m = 2 follows the omission convention unless the cube is asked for
        return False if m == 2 and cfg.include_cube is None else cfg.include_cube

    parts = []
    if suite in ("relations", "all"):
        parts += [verify_relations(m, cube(m)) for m in cfg.m]
    if suite in ("fxi", "all"):
        parts += [verify_fxi(m, include_cube=cube(m)) for m in cfg.m]
    if suite in ("wu", "all"):
        parts.append(verify_wu(_load_algebras(inputs) if inputs else None))
    if len(parts) == 1:
        return parts[0]
    out = VerificationReport(suite, {"suites": [p.to_dict()["inputs"] for p in parts]})
    for p in parts:
        out.extend(p)
    return out


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    return _finish(run_suite(args.suite, cfg, args.input), cfg)


def cmd_wu(args: argparse.Namespace, cfg: RunConfig) -> int:
    from .suites import verify_wu

    return _finish(verify_wu(_load_algebras([args.input]), pairs=False), cfg)


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit canonical JSON")
    common.add_argument("--config", help="JSON file with RunConfig defaults")

    p = argparse.ArgumentParser(prog="sq", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"sq {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("norm", parents=[common], help="admissible normal form of an expression")
    s.add_argument("expr")
    s.set_defaults(func=cmd_norm)

    def m_options(s: argparse.ArgumentParser) -> None:
        s.add_argument("--m", type=int, action="append", help="shift parameter (repeatable)")
        s.add_argument("--include-cube", dest="include_cube", action="store_true", default=None,
                       help="keep the cube class at m = 2 (nonstandard)")

    s = sub.add_parser("tables", parents=[common], help="rebuild the reference tables")
    m_options(s)
    s.add_argument("--which", choices=["1", "2", "3", "4", "all"], default="all")
    s.set_defaults(func=cmd_tables)

    s = sub.add_parser("em-basis", parents=[common], help="basis of H^deg(K(Z/2,n))")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--deg", type=int, required=True)
    s.add_argument("--window", type=int, help="degree ceiling")
    s.set_defaults(func=cmd_em_basis)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=SUITES)
    m_options(s)
    s.add_argument("--input", action="append", help="algebra JSON for the wu suite (repeatable)")
    s.add_argument("--out", help="write the report here (timestamp goes to <out>.meta.json)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("wu", parents=[common], help="Wu classes and checks for one algebra")
    s.add_argument("--input", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_wu)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        cfg = resolve_config(args)
        return args.func(args, cfg)
    except (UsageError, em.UnsupportedM, em.WindowExceeded) as exc:
        print(f"sq: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
