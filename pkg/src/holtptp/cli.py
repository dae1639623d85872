"""Command-line driver: ``translate``, ``classify`` and ``check``.

Exit status is 0 on success, 1 when errors or violations were found and 2 on
usage errors. Set ``GRUNGE_NO_COLOR`` to turn off ANSI colour in reports.
"""

from __future__ import annotations

import argparse
import csv
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .errors import TheoryError, TptpSyntaxError
from .formats import FORMAT_NAMES, FORMATS, expand_formats, translate_text
from .problems import MODES, Category, category_counts, classify, make_problem
from .theory import Theory, load_theory
from .tptp.parser import parse_tptp
from .validate import check_dialect

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    command: str
    theory: Optional[Path] = None
    out: Path = Path(".")
    formats: Tuple[str, ...] = FORMAT_NAMES
    mode: str = "bushy"
    theorem: Optional[str] = None
    special_types: bool = True
    jobs: int = 1
    paths: Tuple[Path, ...] = ()


# colour ------------------------------------------------------------------------

def _colour(text: str, code: str) -> str:
    if os.environ.get("GRUNGE_NO_COLOR"):
        return text
    return f"\033[{code}m{text}\033[0m"


def red(text: str) -> str:
    return _colour(text, "31")


def green(text: str) -> str:
    return _colour(text, "32")


# translate -----------------------------------------------------------------------

_worker_theory: Optional[Theory] = None


def _init_worker(path: str):
    global _worker_theory
    _worker_theory = load_theory(path)


def output_name(theorem: str, fmt: str, mode: str) -> str:
    return f"{theorem}_{fmt}_{mode}.p"


def _translate_one(task) -> str:
    theorem, fmt, mode, special, out = task
    problem = make_problem(_worker_theory, theorem, mode)
    path = Path(out) / output_name(theorem, fmt, mode)
    path.write_text(translate_text(problem, fmt, special), encoding="utf-8")
    return str(path)


def _pick_theorems(theory: Theory, wanted: Optional[str]) -> List[str]:
    names = [f.name for f in theory.theorems]
    if wanted is None:
        return names
    if wanted in names:
        return [wanted]
    folded = [n for n in names if n.lower() == wanted.lower()]
    if len(folded) == 1:
        return folded
    raise LookupError(f"no theorem named {wanted!r} in {theory.name}")


def run_translate(cfg: RunConfig) -> int:
    global _worker_theory
    theory = load_theory(cfg.theory)
    try:
        theorems = _pick_theorems(theory, cfg.theorem)
    except LookupError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    cfg.out.mkdir(parents=True, exist_ok=True)
    tasks = [(t, f, cfg.mode, cfg.special_types, str(cfg.out)) for t in theorems for f in cfg.formats]
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(cfg.jobs, initializer=_init_worker, initargs=(str(cfg.theory),)) as pool:
            written = list(pool.map(_translate_one, tasks, chunksize=max(1, len(tasks) // (4 * cfg.jobs))))
    else:
        _worker_theory = theory
        written = [_translate_one(t) for t in tasks]
    print(f"wrote {len(written)} file(s) to {cfg.out}")
    return EXIT_OK


# classify --------------------------------------------------------------------------

def category_table(counts) -> str:
    width = max(len(c.value) for c in Category)
    lines = [f"{'category':<{width}}  count"]
    lines += [f"{c.value:<{width}}  {counts[c]:>5}" for c in Category]
    lines.append(f"{'total':<{width}}  {sum(counts.values()):>5}")
    return "\n".join(lines) + "\n"


def run_classify(cfg: RunConfig) -> int:
    theory = load_theory(cfg.theory)
    cfg.out.mkdir(parents=True, exist_ok=True)
    table = category_table(category_counts(theory.formulas))
    stem = Path(cfg.theory).stem
    (cfg.out / f"{stem}_categories.txt").write_text(table, encoding="utf-8")
    with open(cfg.out / f"{stem}_categories.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["formula", "role", "category"])
        for f in theory.formulas:
            w.writerow([f.name, f.role, classify(f).value])
    sys.stdout.write(table)
    return EXIT_OK


# check -----------------------------------------------------------------------------

_NAME_FORMAT = re.compile(r"_(" + "|".join(re.escape(f) for f in FORMAT_NAMES) + r")_(?:" + "|".join(MODES) + r")\.p\Z")


def _files(paths: Sequence[Path]) -> List[Path]:
    out: List[Path] = []
    for p in paths:
        out += sorted(p.glob("*.p")) if p.is_dir() else [p]
    return out


def _dialect_for(path: Path, selector: Optional[Tuple[str, ...]]):
    if selector and len(selector) == 1:
        return FORMATS[selector[0]].dialect
    m = _NAME_FORMAT.search(path.name)
    return FORMATS[m.group(1)].dialect if m else None


def run_check(cfg: RunConfig) -> int:
    files = _files(cfg.paths)
    if not files:
        print("error: no .p files to check", file=sys.stderr)
        return EXIT_USAGE
    failed = 0
    for path in files:
        try:
            problem = parse_tptp(path.read_text(encoding="utf-8"), _dialect_for(path, cfg.formats))
            violations = [str(v) for v in check_dialect(problem)]
        except TptpSyntaxError as e:
            violations = [f"syntax error at {e}"]
        except OSError as e:
            violations = [str(e)]
        if violations:
            failed += 1
            print(f"{red('FAIL')} {path}")
            for v in violations:
                print(f"  {v}")
        else:
            print(f"{green('ok')}   {path}")
    print(f"{len(files) - failed} clean, {failed} with violations")
    return EXIT_FAIL if failed else EXIT_OK


# argument parsing ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="holtptp", description="Translate HOL theories to TPTP problems.")
    sub = parser.add_subparsers(dest="command", required=True)
    fmt_choices = list(FORMAT_NAMES) + ["all"]

    tr = sub.add_parser("translate", help="write one problem file per theorem and format")
    tr.add_argument("--theory", type=Path, required=True, help="input .holt file")
    tr.add_argument("--out", type=Path, default=Path("out"), help="output directory (created if absent)")
    tr.add_argument("--format", choices=fmt_choices, default="all")
    tr.add_argument("--mode", choices=MODES, default="bushy")
    tr.add_argument("--theorem", help="only this theorem")
    tr.add_argument("--no-special-types", action="store_true", help="disable special types in th0-ii and tf0-ii")
    tr.add_argument("--jobs", type=int, default=1, help="worker processes")

    cl = sub.add_parser("classify", help="count formulas per category and write a per-formula CSV")
    cl.add_argument("--theory", type=Path, required=True)
    cl.add_argument("--out", type=Path, default=Path("."))

    ch = sub.add_parser("check", help="validate .p files against their dialect")
    ch.add_argument("paths", nargs="+", type=Path, help="files or directories of .p files")
    ch.add_argument("--format", choices=fmt_choices, default=None,
                    help="dialect to check against; inferred from file names or contents by default")
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    if args.command == "check":
        formats = tuple(expand_formats(args.format)) if args.format else None
        return RunConfig("check", formats=formats, paths=tuple(args.paths))
    if args.command == "classify":
        return RunConfig("classify", theory=args.theory, out=args.out)
    if args.jobs < 1:
        build_parser().error("--jobs must be at least 1")
    return RunConfig(
        "translate",
        theory=args.theory,
        out=args.out,
        formats=tuple(expand_formats(args.format)),
        mode=args.mode,
        theorem=args.theorem,
        special_types=not args.no_special_types,
        jobs=args.jobs,
    )


def run(cfg: RunConfig) -> int:
    if cfg.theory is not None and not Path(cfg.theory).is_file():
        print(f"error: cannot read theory file {cfg.theory}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if cfg.command == "translate":
            return run_translate(cfg)
        if cfg.command == "classify":
            return run_classify(cfg)
        return run_check(cfg)
    except TheoryError as e:
        print(f"{cfg.theory}:{e}", file=sys.stderr)
        return EXIT_FAIL


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
