"""Command-line front end: counting, listing, verifying, tabulating.

Exit codes: 0 on success with everything passing, 1 when a verification or
cross-check fails, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import List, Optional

from .identities import (
    RELATION_KINDS,
    RELATION_STATEMENTS,
    IdentityBuildError,
    VerificationReport,
    find_case,
    negative_control,
    registry,
    report_record,
    verify,
    verify_all,
    verify_relation,
)
from .partitions import (
    FAMILY_SERIES,
    FAMILY_SPECS,
    count_oracle,
    enumerate_partitions,
    gf_de1,
    gf_de2,
    gf_de3,
    gf_regular4,
    gf_regular4_min2,
)

TABLE_HEADER = (
    "n",
    "DE1",
    "DE2",
    "DE3",
    "b4",
    "c4",
    "DE1(n)+DE1(n-1)",
    "DE3(n+2)+DE3(n-1)",
)


@dataclass(frozen=True)
class CliConfig:
    """Run-wide knobs; oracle_limit is clamped to never exceed order."""

    order: int = 200
    oracle_limit: int = 40
    output_mode: str = "human"

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if self.output_mode not in ("human", "machine"):
            raise ValueError("output_mode must be 'human' or 'machine'")
        if self.oracle_limit > self.order:
            object.__setattr__(self, "oracle_limit", self.order)

    @property
    def machine(self) -> bool:
        return self.output_mode == "machine"


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def cmd_count(config: CliConfig, family: str, n: int, use_oracle: bool) -> int:
    if not 0 <= n <= config.order:
        return _fail(f"n must satisfy 0 <= n <= {config.order} (got {n})")
    series_count = FAMILY_SERIES[family](n).coeff(n)
    if not use_oracle:
        if config.machine:
            print(f"{family},{n},{series_count}")
        else:
            print(series_count)
        return 0
    if n > config.oracle_limit:
        return _fail(
            f"--oracle cross-check is capped at n <= {config.oracle_limit}; "
            f"raise --oracle-limit to enumerate n = {n}"
        )
    oracle_count = count_oracle(n, FAMILY_SPECS[family])
    agree = series_count == oracle_count
    if config.machine:
        flag = "agree" if agree else "disagree"
        print(f"{family},{n},{series_count},{oracle_count},{flag}")
    else:
        print(f"series: {series_count}")
        print(f"oracle: {oracle_count}")
        print(f"agree: {'yes' if agree else 'no'}")
    return 0 if agree else 1


def cmd_enumerate(config: CliConfig, family: str, n: int) -> int:
    if n < 0:
        return _fail(f"n must be nonnegative (got {n})")
    if n > config.oracle_limit:
        return _fail(
            f"enumeration is brute force and capped at n <= {config.oracle_limit}; "
            f"raise --oracle-limit if you really want n = {n}"
        )
    partitions = enumerate_partitions(n, FAMILY_SPECS[family])
    for p in partitions:
        print(p)
    print(f"total: {len(partitions)}")
    return 0


def _print_reports(config: CliConfig, reports: List[VerificationReport]) -> None:
    if config.machine:
        for r in reports:
            print(report_record(r))
        return
    width = max(len(r.id) for r in reports)
    print(f"{'id':<{width}}  {'status':<6}  first mismatch")
    for r in reports:
        if r.status == "pass":
            detail = "-"
        elif r.status == "fail":
            k, lhs, rhs = r.mismatch
            detail = f"q^{k}: lhs={lhs} rhs={rhs}"
        else:
            detail = r.error
        print(f"{r.id:<{width}}  {r.status:<6}  {detail}")
    passed = sum(r.passed for r in reports)
    print(f"{passed}/{len(reports)} passed at order {reports[0].order}")


def cmd_verify(config: CliConfig, target: str, use_oracle: bool) -> int:
    if target == "all":
        reports = verify_all(config.order)
    elif target in RELATION_KINDS:
        order = min(config.order, config.oracle_limit) if use_oracle else config.order
        reports = [verify_relation(target, order, use_oracle=use_oracle)]
    else:
        case = negative_control() if target == "negative-control" else find_case(target)
        if case is None:
            valid = [c.id for c in registry()] + list(RELATION_KINDS) + ["negative-control", "all"]
            return _fail(
                f"unknown identity {target!r}; valid targets: {', '.join(valid)}"
            )
        try:
            reports = [verify(case, config.order)]
        except IdentityBuildError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    _print_reports(config, reports)
    return 0 if all(r.passed for r in reports) else 1


def cmd_table(config: CliConfig, max_n: int) -> int:
    if not 0 <= max_n <= config.order:
        return _fail(f"max_n must satisfy 0 <= max_n <= {config.order} (got {max_n})")
    de1 = gf_de1(max_n).coeffs
    de2 = gf_de2(max_n).coeffs
    de3 = gf_de3(max_n + 2).coeffs
    b4 = gf_regular4(max_n).coeffs
    c4 = gf_regular4_min2(max_n).coeffs
    rows = []
    for n in range(max_n + 1):
        de1_pair = de1[n] + (de1[n - 1] if n >= 1 else 0)
        de3_pair = de3[n + 2] + (de3[n - 1] if n >= 1 else 0)
        rows.append((n, de1[n], de2[n], de3[n], b4[n], c4[n], de1_pair, de3_pair))
    if config.machine:
        print(",".join(TABLE_HEADER))
        for row in rows:
            print(",".join(str(v) for v in row))
    else:
        widths = [
            max(len(h), max(len(str(row[i])) for row in rows))
            for i, h in enumerate(TABLE_HEADER)
        ]
        print("  ".join(h.rjust(w) for h, w in zip(TABLE_HEADER, widths)))
        for row in rows:
            print("  ".join(str(v).rjust(w) for v, w in zip(row, widths)))
    return 0


def cmd_list_identities(config: CliConfig) -> int:
    cases = registry()
    extras = [(kind, RELATION_STATEMENTS[kind]) for kind in RELATION_KINDS]
    extras.append(("negative-control", negative_control().description))
    if config.machine:
        for case in cases:
            print(case.id)
        for name, _ in extras:
            print(name)
    else:
        width = max(
            max(len(c.id) for c in cases), max(len(name) for name, _ in extras)
        )
        for case in cases:
            print(f"{case.id:<{width}}  {case.description}")
        for name, text in extras:
            print(f"{name:<{width}}  {text}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--order",
        type=int,
        default=200,
        metavar="N",
        help="truncation order for all series work (default 200)",
    )
    common.add_argument(
        "--oracle-limit",
        type=int,
        default=40,
        metavar="M",
        help="largest n allowed for brute-force enumeration (default 40)",
    )
    common.add_argument(
        "--machine",
        action="store_true",
        help="emit comma-separated, script-friendly output",
    )
    parser = argparse.ArgumentParser(
        prog="qident",
        description="Exact q-series counts and mechanical identity verification "
        "for restricted partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    families = list(FAMILY_SPECS)
    p = sub.add_parser("count", parents=[common], help="count partitions of n in a family")
    p.add_argument("family", choices=families)
    p.add_argument("n", type=int)
    p.add_argument(
        "--oracle",
        action="store_true",
        help="also enumerate by brute force and compare",
    )

    p = sub.add_parser("enumerate", parents=[common], help="list the partitions of n in a family")
    p.add_argument("family", choices=families)
    p.add_argument("n", type=int)

    p = sub.add_parser("verify", parents=[common], help="verify an identity, relation, or everything")
    p.add_argument("target", help="an identity id, cor1..cor4, negative-control, or 'all'")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="for cor1..cor4: use brute-force counts (capped by --oracle-limit)",
    )

    p = sub.add_parser("table", parents=[common], help="tabulate counts and paired sums up to max_n")
    p.add_argument("max_n", type=int)

    sub.add_parser("list-identities", parents=[common], help="list verifiable targets")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.order < 0:
        return _fail(f"--order must be nonnegative (got {args.order})")
    if args.oracle_limit < 0:
        return _fail(f"--oracle-limit must be nonnegative (got {args.oracle_limit})")
    config = CliConfig(
        order=args.order,
        oracle_limit=args.oracle_limit,
        output_mode="machine" if args.machine else "human",
    )
    if args.command == "count":
        return cmd_count(config, args.family, args.n, args.oracle)
    if args.command == "enumerate":
        return cmd_enumerate(config, args.family, args.n)
    if args.command == "verify":
        return cmd_verify(config, args.target, args.oracle)
    if args.command == "table":
        return cmd_table(config, args.max_n)
    return cmd_list_identities(config)


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
