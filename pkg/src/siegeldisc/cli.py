"""Command-line front end for the verification suites.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 invalid
configuration or arguments. The human summary goes to stdout; --report
writes the machine-readable JSON document to a file.
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterator

from .errors import ConfigInvalid, UnknownSuite
from .suites import SUITE_NAMES, SuiteConfig, SuiteReport, run_suite


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="siegeldisc",
        description="Run randomized verification suites for the block "
        "symplectic group action on the disc of symmetric contractions.",
    )
    p.add_argument("--suite", default="all", choices=SUITE_NAMES, help="suite to run")
    p.add_argument("--dim", type=int, default=8, help="matrix truncation size n")
    p.add_argument("--trials", type=int, default=50, help="random trials per check")
    p.add_argument("--seed", type=int, default=0, help="root seed (64-bit unsigned)")
    p.add_argument(
        "--tol",
        type=float,
        default=None,
        help="override every per-check threshold with this value",
    )
    p.add_argument(
        "--margin",
        type=float,
        default=0.05,
        help="distance kept from the disc boundary when sampling, in (0, 0.5)",
    )
    p.add_argument(
        "--report", default=None, metavar="PATH", help="write the JSON report here"
    )
    return p


def summary_lines(report: SuiteReport) -> Iterator[str]:
    cfg = report.config
    tol = "default" if cfg.tol is None else format(cfg.tol, "g")
    yield (
        f"suite={report.suite} dim={cfg.dim} trials={cfg.trials} seed={cfg.seed} "
        f"margin={cfg.margin:g} tol={tol} threshold_scale={report.threshold_scale:g}"
    )
    for c in report.checks:
        flag = "PASS" if c.passed else "FAIL"
        yield (
            f"[{flag}] {c.name:<42} max_residual={c.max_residual:.3e} "
            f"threshold={c.threshold:.3e} trials={c.trials}"
        )
    good = sum(1 for c in report.checks if c.passed)
    verdict = "PASS" if report.passed else "FAIL"
    yield f"overall: {verdict} ({good}/{len(report.checks)} checks) in {report.wall_time_s:.2f} s"


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = SuiteConfig(
            suite=args.suite,
            dim=args.dim,
            trials=args.trials,
            seed=args.seed,
            tol=args.tol,
            margin=args.margin,
            report_path=args.report,
        )
        report = run_suite(cfg)
    except (ConfigInvalid, UnknownSuite) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for line in summary_lines(report):
        print(line)
    if cfg.report_path is not None:
        with open(cfg.report_path, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    return 0 if report.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
