"""Command-line batch runner: ``crverify verify --suite NAME``.

Exit codes: 0 when every check passes, 1 when any check fails, 2 for usage
errors and 3 when a report cannot be written.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import traceback
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .checks import SUITES, Check, Context, checks_for

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


@dataclass
class CheckResult:
    check_id: str
    status: str  # "pass", "fail" or "skipped"
    witness: dict
    anchor: str
    elapsed: float = field(default=0.0, compare=False)

    def body(self) -> dict:
        """Everything except the timing, which lives in the report metadata."""
        return {"check_id": self.check_id, "status": self.status,
                "anchor": self.anchor, "witness": jsonable(self.witness)}


def jsonable(obj):
    """Convert witnesses to plain JSON values with a deterministic layout."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in sorted(obj.items(), key=lambda kv: str(kv[0]))}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return [jsonable(v) for v in sorted(obj)]
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    if hasattr(obj, "to_text"):
        return obj.to_text()
    if hasattr(obj, "__dict__"):
        return jsonable(vars(obj))
    return repr(obj)


def run_check(chk: Check, ctx: Context, budget: Optional[float] = None) -> CheckResult:
    limit = chk.budget if budget is None else budget
    t0 = time.perf_counter()
    try:
        ok, witness = chk.run(ctx)
        status = "pass" if ok else "fail"
    except Exception as e:  # a crashing check is a failing check
        status = "fail"
        witness = {"error": f"{type(e).__name__}: {e}",
                   "traceback_tail": traceback.format_exc().strip().splitlines()[-3:]}
    elapsed = time.perf_counter() - t0
    if status == "pass" and elapsed > limit:
        # threads cannot be interrupted, so the budget is enforced on completion
        status = "fail"
        witness = dict(witness, budget_exceeded={"budget_seconds": limit})
    return CheckResult(chk.check_id, status, witness, chk.anchor, elapsed)


def run_suite(name: str, seed: int = 0, workers: int = 1,
              budget: Optional[float] = None) -> list[CheckResult]:
    """Run every check of a suite; results come back in registry order."""
    try:
        selected = checks_for(name)
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}") from None
    ctx = Context(seed)
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            return list(ex.map(lambda c: run_check(c, ctx, budget), selected))
    return [run_check(c, ctx, budget) for c in selected]


def _summary(results: Sequence[CheckResult]) -> dict:
    counts = {s: sum(r.status == s for r in results) for s in ("pass", "fail", "skipped")}
    return dict(counts, total=len(results))


def report_json(suite: str, results: Sequence[CheckResult], seed: int = 0) -> str:
    body = {"suite": suite, "seed": seed, "version": __version__,
            "summary": _summary(results), "checks": [r.body() for r in results]}
    meta = {"elapsed_seconds": {r.check_id: round(r.elapsed, 3) for r in results}}
    return json.dumps({"report": body, "metadata": meta}, indent=2, sort_keys=True) + "\n"


def report_markdown(suite: str, results: Sequence[CheckResult], seed: int = 0) -> str:
    s = _summary(results)
    lines = [f"# crverify report: suite `{suite}`", "",
             f"version {__version__}, seed {seed}: {s['pass']} passed, {s['fail']} failed, "
             f"{s['skipped']} skipped, {s['total']} total", "",
             "| check | status | anchor |", "|---|---|---|"]
    for r in results:
        lines.append(f"| [`{r.check_id}`](#{_slug(r.check_id)}) | {r.status} | {_cell(r.anchor)} |")
    lines.append("")
    for r in results:
        lines += [f"## {r.check_id}", "", f"- status: **{r.status}**", f"- anchor: {r.anchor}", "",
                  "```json", json.dumps(jsonable(r.witness), indent=2, sort_keys=True), "```", ""]
    lines += ["<!-- metadata -->", "## Metadata", "", "| check | elapsed (s) |", "|---|---|"]
    lines += [f"| `{r.check_id}` | {r.elapsed:.3f} |" for r in results]
    return "\n".join(lines) + "\n"


def report_body(text: str, fmt: str) -> str:
    """Strip the timing metadata so that two reports can be compared byte for byte."""
    if fmt == "json":
        return json.dumps(json.loads(text)["report"], indent=2, sort_keys=True)
    return text.split("<!-- metadata -->")[0]


def _cell(text: str) -> str:
    return text.replace("|", "\\|")


def _slug(check_id: str) -> str:
    return check_id.replace(".", "")


def write_report(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="crverify", description="Exact verification of finite-group and "
                                "invariant-theory computations behind a Fano threefold classification.")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run a suite of checks")
    v.add_argument("--suite", required=True, choices=SUITES + ("all",))
    v.add_argument("--json", metavar="PATH", help="write a JSON report")
    v.add_argument("--markdown", metavar="PATH", help="write a markdown report")
    v.add_argument("--budget", type=float, metavar="SECONDS",
                   help="per-check time budget overriding the defaults")
    v.add_argument("--workers", type=int, default=1, metavar="N")
    v.add_argument("--seed", type=int, default=0, metavar="N")
    v.add_argument("--quiet", action="store_true", help="suppress per-check lines")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.workers < 1:
        print("crverify: --workers must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    results = run_suite(args.suite, seed=args.seed, workers=args.workers, budget=args.budget)
    if not args.quiet:
        for r in results:
            print(f"{r.status.upper():4}  {r.check_id}  ({r.elapsed:.2f}s)")
    try:
        if args.json:
            write_report(args.json, report_json(args.suite, results, args.seed))
        if args.markdown:
            write_report(args.markdown, report_markdown(args.suite, results, args.seed))
    except OSError as e:
        print(f"crverify: cannot write report: {e}", file=sys.stderr)
        return EXIT_IO
    s = _summary(results)
    print(f"{s['pass']}/{s['total']} checks passed")
    return EXIT_OK if s["fail"] == 0 else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
