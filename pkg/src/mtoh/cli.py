"""Command-line client for the tower service.

Each subcommand issues one request against the HTTP API and formats the
JSON reply. By default the app runs in-process (no server needed); pass
``--server http://host:port`` to talk to a running instance instead.

Exit codes: 0 success, 1 verification or table mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from typing import Optional

import httpx

from .solvers import Algorithm, compatible_variants

ALG_TOKENS = [a.value for a in Algorithm]
VARIANT_TOKENS = ["free", "colored-rbb", "colored-rrb", "semifree"]
FORMATS = ["pretty", "csv", "json"]


class ClientError(Exception):
    """A request the service rejected; message carries the detail."""


def _request(path: str, params: dict, server: Optional[str]) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            return client.get(path, params=params)

    from .service import create_app

    async def _run() -> httpx.Response:
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://mtoh.internal", timeout=600.0
        ) as client:
            return await client.get(path, params=params)

    return asyncio.run(_run())


def _fetch(path: str, params: dict, server: Optional[str]) -> dict:
    response = _request(path, params, server)
    if response.status_code != 200:
        try:
            detail = response.json().get("detail", response.text)
        except Exception:
            detail = response.text
        raise ClientError(str(detail))
    return response.json()


# --------------------------------------------------------------------------
# Formatters


def _format_solve(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2)
    lines = []
    if fmt == "pretty":
        lines.append(
            f"n={payload['n']} variant={payload['variant']} start={payload['start']}"
        )
        for mv in payload["moves"]:
            c = mv["colors"]
            lines.append(
                f"{mv['index']},{mv['disk']},{mv['from']},{mv['to']},{c[0]},{c[1]},{c[2]}"
            )
    else:  # csv
        lines.append("move,disk,from,to,color_s,color_i,color_d")
        for mv in payload["moves"]:
            c = mv["colors"]
            lines.append(
                f"{mv['index']},{mv['disk']},{mv['from']},{mv['to']},{c[0]},{c[1]},{c[2]}"
            )
    return "\n".join(lines)


def _format_count(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2)
    if fmt == "pretty":
        return str(payload["total"])
    lines = ["k,moves"]
    for k, moves in enumerate(payload["per_disk"], start=1):
        lines.append(f"{k},{moves}")
    lines.append(f"total,{payload['total']}")
    return "\n".join(lines)


def _format_verify(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2)
    if fmt == "csv":
        lines = ["check,passed,blocking,detail"]
        for c in payload["checks"]:
            detail = c["detail"].replace(",", ";")
            lines.append(f"{c['name']},{c['passed']},{c['blocking']},{detail}")
        lines.append(f"ok,{payload['ok']},,")
        return "\n".join(lines)
    lines = []
    for c in payload["checks"]:
        mark = "PASS" if c["passed"] else ("info" if not c["blocking"] else "FAIL")
        lines.append(f"{mark:4s} {c['name']}: {c['detail']}")
    lines.append(f"verification {'OK' if payload['ok'] else 'FAILED'} (max_n={payload['max_n']})")
    return "\n".join(lines)


def _format_oracle_single(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2)
    head = (
        f"n={payload['n']} variant={payload['variant']} "
        f"optimal={payload['optimal_length']} states={payload['states_explored']}"
    )
    if fmt == "pretty":
        lines = [head]
        for mv in payload["moves"]:
            c = mv["colors"]
            lines.append(
                f"{mv['index']},{mv['disk']},{mv['from']},{mv['to']},{c[0]},{c[1]},{c[2]}"
            )
        return "\n".join(lines)
    lines = ["move,disk,from,to,color_s,color_i,color_d"]
    for mv in payload["moves"]:
        c = mv["colors"]
        lines.append(
            f"{mv['index']},{mv['disk']},{mv['from']},{mv['to']},{c[0]},{c[1]},{c[2]}"
        )
    return "\n".join(lines)


def _format_oracle_report(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2)
    header = [
        "n", "100", "67d", "67u", "62", "sf",
        "free_opt", "colored_opt", "semifree_opt", "gap_62", "gap_100", "gap_sf",
    ]
    rows = []
    for r in payload["rows"]:
        rows.append(
            [
                r["n"], r["lengths"]["100"], r["lengths"]["67d"], r["lengths"]["67u"],
                r["lengths"]["62"], r["lengths"]["sf"], r["free_optimum"],
                r["colored_optimum"], r["semifree_optimum"],
                r["gaps"]["62"], r["gaps"]["100"], r["gaps"]["sf"],
            ]
        )
    if fmt == "csv":
        lines = [",".join(header)]
        lines += [",".join(str(v) for v in row) for row in rows]
        return "\n".join(lines)
    widths = [max(len(header[i]), *(len(str(r[i])) for r in rows)) for i in range(len(header))]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    for row in rows:
        lines.append("  ".join(str(v).rjust(w) for v, w in zip(row, widths)))
    return "\n".join(lines)


def _format_crossings(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2)
    if fmt == "csv":
        ns = ",".join(f"n{j}" for j in range(1, payload["max_n"] + 1))
        lines = [f"row,{ns}"]
        for row in payload["rows"]:
            lines.append(row["row"] + "," + ",".join(str(v) for v in row["values"]))
        return "\n".join(lines)
    width = max(len(r["row"]) for r in payload["rows"])
    lines = []
    for row in payload["rows"]:
        cells = " ".join(str(v).rjust(6) for v in row["values"])
        lines.append(f"{row['row'].ljust(width)}  {cells}")
    return "\n".join(lines)


def _format_tables(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2)
    lines = []
    if fmt == "csv":
        lines.append("table,row,cells,total,status")
        for table in payload["tables"]:
            for row in table["rows"]:
                if "per_disk" in row:
                    cells = " ".join(str(v) for v in row["per_disk"])
                    lines.append(
                        f"{table['table']},n={row['n']},{cells},{row['total']},"
                        f"{'ok' if table['ok'] else 'mismatch'}"
                    )
                else:
                    cells = " ".join(str(v) for v in row["values"])
                    lines.append(
                        f"{table['table']},{row['row']},{cells},,"
                        f"{'ok' if table['ok'] else 'mismatch'}"
                    )
        return "\n".join(lines)
    for table in payload["tables"]:
        lines.append(f"{table['table']}  {table['title']}")
        for row in table["rows"]:
            if "per_disk" in row:
                cells = " ".join(str(v).rjust(5) for v in row["per_disk"])
                lines.append(f"  n={row['n']}  {cells}  | {row['total']}")
            else:
                cells = " ".join(str(v).rjust(5) for v in row["values"])
                lines.append(f"  {row['row'].ljust(14)} {cells}")
        if table["ok"]:
            lines.append("  status: OK")
        else:
            m = table["mismatches"][0]
            lines.append(
                f"  status: MISMATCH at table {m['table']}, row {m['row']}, "
                f"column {m['column']}: computed {m['computed']}, "
                f"published {m['published']}"
            )
    return "\n".join(lines)


def _format_ratios(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2)
    header = ["n", "total_100", "total_67", "total_sf", "total_62",
              "67/100", "sf/100", "62/100", "dec_67", "dec_sf", "dec_62"]
    rows = []
    for r in payload["rows"]:
        rows.append([
            r["n"], r["total_100"], r["total_67"], r["total_sf"], r["total_62"],
            f"{r['ratio_67']['numerator']}/{r['ratio_67']['denominator']}",
            f"{r['ratio_sf']['numerator']}/{r['ratio_sf']['denominator']}",
            f"{r['ratio_62']['numerator']}/{r['ratio_62']['denominator']}",
            r["ratio_67"]["decimal"], r["ratio_sf"]["decimal"], r["ratio_62"]["decimal"],
        ])
    if fmt == "csv":
        lines = [",".join(header)]
        lines += [",".join(str(v) for v in row) for row in rows]
        lines.append("limits,,,,,"
                     f"{payload['limits']['67/100']},{payload['limits']['sf/100']},"
                     f"{payload['limits']['62/100']},,,")
        return "\n".join(lines)
    widths = [max(len(header[i]), *(len(str(r[i])) for r in rows)) for i in range(len(header))]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    for row in rows:
        lines.append("  ".join(str(v).rjust(w) for v, w in zip(row, widths)))
    lines.append(f"limits: 67/100 -> {payload['limits']['67/100']}, "
                 f"sf/100 -> {payload['limits']['sf/100']}, "
                 f"62/100 -> {payload['limits']['62/100']}")
    return "\n".join(lines)


def _format_doomsday(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2)
    entries = [
        ("elapsed seconds (2^63)", payload["elapsed_seconds"]),
        ("colored-tower total for 64 disks", payload["colored_total"]),
        ("ratio estimate of the 62 total (exact)", payload["ratio_estimate_digits"]),
        ("ratio estimate minus elapsed (exact)", payload["ratio_remaining_digits"]),
        ("published total estimate", payload["published_total_digits"]),
        ("published remaining estimate", payload["published_remaining_digits"]),
        ("exact 62 total for 64 disks", payload["exact_62_total"]),
        ("exact 62 total minus elapsed", payload["exact_62_remaining"]),
    ]
    if fmt == "csv":
        lines = ["quantity,value"]
        for label, value in entries:
            lines.append(f"{label.replace(',', ';')},{value}")
        return "\n".join(lines)
    width = max(len(label) for label, _ in entries)
    return "\n".join(f"{label.ljust(width)}  {value}" for label, value in entries)


# --------------------------------------------------------------------------
# Argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mtoh",
        description="Magnetic Tower of Hanoi solvers, counts and reports",
    )
    parser.add_argument(
        "--server",
        help="base URL of a running service; default runs in-process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=FORMATS, default="pretty")
        p.add_argument("--out", help="write output to this file instead of stdout")
        # SUPPRESS keeps a value given before the subcommand intact.
        p.add_argument("--server", default=argparse.SUPPRESS,
                       help=argparse.SUPPRESS)

    p_solve = sub.add_parser("solve", help="emit a solver trace")
    p_solve.add_argument("--alg", choices=ALG_TOKENS, required=True)
    p_solve.add_argument("--n", type=int, required=True)
    p_solve.add_argument("--variant", choices=VARIANT_TOKENS)
    add_common(p_solve)

    p_count = sub.add_parser("count", help="exact move counts")
    p_count.add_argument("--alg", choices=ALG_TOKENS, required=True)
    p_count.add_argument("--n", type=int, required=True)
    add_common(p_count)

    p_verify = sub.add_parser("verify", help="run the verification battery")
    p_verify.add_argument("--max-n", type=int, default=8, dest="max_n")
    add_common(p_verify)

    p_oracle = sub.add_parser("oracle", help="breadth-first ground truth")
    p_oracle.add_argument("--n", type=int, help="single-instance search")
    p_oracle.add_argument("--variant", choices=VARIANT_TOKENS, default="free")
    p_oracle.add_argument("--max-n", type=int, dest="max_n",
                          help="optimality report for n = 1..max-n")
    add_common(p_oracle)

    p_cross = sub.add_parser("crossings", help="color-crossing table")
    p_cross.add_argument("--max-n", type=int, default=8, dest="max_n")
    add_common(p_cross)

    p_tables = sub.add_parser("tables", help="regenerate reference tables")
    p_tables.add_argument("--table", choices=["T1", "T4", "T6", "TSF", "T9", "T10"])
    add_common(p_tables)

    p_ratios = sub.add_parser("ratios", help="duration-ratio series")
    p_ratios.add_argument("--max-n", type=int, default=20, dest="max_n")
    add_common(p_ratios)

    p_doom = sub.add_parser("doomsday", help="the 64-disk arithmetic")
    add_common(p_doom)

    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fp:
            fp.write(text + "\n")
    else:
        print(text)


def main(argv: "Optional[list[str]]" = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    server = args.server

    try:
        if args.command == "solve":
            alg = Algorithm(args.alg)
            if args.variant is not None and args.variant not in compatible_variants(alg):
                parser.error(
                    f"algorithm {args.alg!r} does not run on variant "
                    f"{args.variant!r}; allowed: {list(compatible_variants(alg))}"
                )
            if args.n < 1:
                parser.error("--n must be at least 1")
            if args.n > 12:
                parser.error(
                    "solve materializes full traces and is budgeted for n <= 12; "
                    "use count for larger stacks"
                )
            params = {"alg": args.alg, "n": args.n}
            if args.variant:
                params["variant"] = args.variant
            payload = _fetch("/solve", params, server)
            _emit(_format_solve(payload, args.format), args.out)
            return 0

        if args.command == "count":
            if args.n < 1:
                parser.error("--n must be at least 1")
            payload = _fetch("/count", {"alg": args.alg, "n": args.n}, server)
            _emit(_format_count(payload, args.format), args.out)
            return 0

        if args.command == "verify":
            payload = _fetch("/verify", {"max_n": args.max_n}, server)
            _emit(_format_verify(payload, args.format), args.out)
            return 0 if payload["ok"] else 1

        if args.command == "oracle":
            if args.n is not None and args.max_n is not None:
                parser.error("give either --n or --max-n, not both")
            if args.n is not None:
                payload = _fetch(
                    "/oracle", {"n": args.n, "variant": args.variant}, server
                )
                _emit(_format_oracle_single(payload, args.format), args.out)
            else:
                max_n = args.max_n if args.max_n is not None else 6
                payload = _fetch("/oracle/report", {"max_n": max_n}, server)
                _emit(_format_oracle_report(payload, args.format), args.out)
            return 0

        if args.command == "crossings":
            payload = _fetch("/crossings", {"max_n": args.max_n}, server)
            _emit(_format_crossings(payload, args.format), args.out)
            return 0

        if args.command == "tables":
            params = {"table": args.table} if args.table else {}
            payload = _fetch("/tables", params, server)
            _emit(_format_tables(payload, args.format), args.out)
            return 0 if payload["ok"] else 1

        if args.command == "ratios":
            payload = _fetch("/ratios", {"max_n": args.max_n}, server)
            _emit(_format_ratios(payload, args.format), args.out)
            return 0

        if args.command == "doomsday":
            payload = _fetch("/doomsday", {}, server)
            _emit(_format_doomsday(payload, args.format), args.out)
            return 0
    except ClientError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return 2

    parser.error(f"unknown command {args.command!r}")
    return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
