"""Command-line front end.

    fiberlink {parse|invariants|obstruction|realize|hp|witness} <file>
              [--target plane|sphere] [--json] [--batch <dir>]
              [--server URL]

Runs in-process by default; ``--server`` sends the same input to a
running service instead and renders the returned report identically.
Exit codes: 0 positive verdict (or plain success), 1 negative verdict,
2 invalid input or not-applicable, 3 I/O trouble.  ``-`` reads stdin.
The witness command prints a scene file, so it pipes straight back
into ``fiberlink realize -``.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .diagram import DiagramError, ParseError
from .reports import COMMANDS, evaluate, exit_code_for

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INVALID = 2
EXIT_IO = 3


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _fetch_remote(server: str, command: str, text: str, target: str) -> tuple[dict | None, int, str]:
    """Returns (report, exit_code, error_message)."""

    import httpx

    body: dict = {"text": text}
    if command == "realize":
        body["target"] = target
    try:
        response = httpx.post(f"{server.rstrip('/')}/v1/{command}", json=body, timeout=30.0)
    except httpx.HTTPError as err:
        return None, EXIT_IO, f"server unreachable: {err}"
    if response.status_code == 422:
        detail = response.json().get("detail", {})
        if isinstance(detail, dict) and "message" in detail:
            where = ""
            if detail.get("line") is not None:
                where = f"line {detail['line']}"
                if detail.get("column") is not None:
                    where += f", column {detail['column']}"
                where += ": "
            return None, EXIT_INVALID, where + str(detail["message"])
        return None, EXIT_INVALID, str(detail)
    if response.status_code != 200:
        return None, EXIT_IO, f"server error {response.status_code}: {response.text[:200]}"
    report = response.json()
    return report, exit_code_for(command, report["result"]), ""


def _run_one(command: str, text: str, target: str, server: str | None) -> tuple[dict | None, int, str]:
    if server:
        return _fetch_remote(server, command, text, target)
    try:
        report = evaluate(command, text, target)
    except ParseError as err:
        return None, EXIT_INVALID, str(err)
    except DiagramError as err:
        return None, EXIT_INVALID, str(err)
    return report, exit_code_for(command, report["result"]), ""


def _fmt_pairs(pairs: list) -> str:
    if not pairs:
        return "(none)"
    return " ".join(f"{label}={value}" for label, value in pairs)


def _fmt_labels(labels: list) -> str:
    return " ".join(str(x) for x in labels) if labels else "(none)"


def _render(command: str, result: dict) -> str:
    lines: list[str] = []
    if command == "parse":
        lines.append(f"components: {result['components']}")
        lines.append(f"crossings: {result['crossings']}")
        lines.append(f"arcs: {result['arcs']}")
        splits = set(result["unknot_components"])
        for label, cycle in result["cycles"]:
            suffix = " (split unknot)" if label in splits else ""
            lines.append(f"component {label}: arcs {' '.join(str(a) for a in cycle)}{suffix}")
    elif command == "invariants":
        lines.append(f"components: {result['components']}")
        lines.append("linking matrix (diagonal = self-writhe):")
        labels = result["linking_matrix"]["labels"]
        for label, row in zip(labels, result["linking_matrix"]["rows"]):
            lines.append(f"  {label}: {' '.join(str(v) for v in row)}")
        lines.append(f"self-crossings: {_fmt_pairs(result['self_crossings'])}")
        sd = result["seifert"]
        lines.append(
            f"seifert: circles={sd['circles']} crossings={sd['crossings']} euler={sd['euler_characteristic']}"
        )
        if "hopf_invariant" in result:
            lines.append(f"framings: {_fmt_pairs(result['framings'])}")
            lines.append(f"hopf invariant: {result['hopf_invariant']}")
            lines.append(f"framed null-cobordant: {'yes' if result['framed_null_cobordant'] else 'no'}")
    elif command == "obstruction":
        lines.append(f"vector: {_fmt_pairs(result['vector'])}")
        lines.append(f"total parity: {result['total_parity']}")
        lines.append(f"hopf invariant: {result['hopf_invariant']}")
        lines.append(f"framed null-cobordant: {'yes' if result['framed_null_cobordant'] else 'no'}")
        lines.append(f"parity identity: {result['parity_identity']}")
    elif command == "realize":
        lines.append(f"verdict: {result['verdict']}")
        lines.append(f"target: {result['target']}")
        lines.append(f"obstruction: {_fmt_pairs(result['obstruction'])}")
        lines.append(f"j class: {_fmt_pairs(result['j_class'])}")
        lines.append(f"mismatches: {_fmt_labels(result['mismatches'])}")
        lines.append(f"notes: {_fmt_labels(result['notes'])}")
    elif command == "hp":
        lines.append(f"verdict: {result['verdict']}")
        lines.append(f"parities: {_fmt_pairs(result['parities'])}")
        lines.append(f"failing: {_fmt_labels(result['failing'])}")
        lines.append(f"certificate: {'split unknotted singular circle' if result['certificate'] else 'none'}")
        lines.append(f"notes: {_fmt_labels(result['notes'])}")
    elif command == "witness":
        # Bare scene text so the output pipes straight into realize.
        return result["scene"]
    return "\n".join(lines) + "\n"


def _emit(command: str, report: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    return _render(command, report["result"])


def _run_batch(command: str, directory: str, target: str, server: str | None, as_json: bool) -> int:
    root = Path(directory)
    try:
        files = sorted(p for p in root.iterdir() if p.suffix == ".pd")
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_IO

    def job(path: Path) -> tuple[Path, dict | None, int, str]:
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as err:
            return path, None, EXIT_IO, str(err)
        report, code, message = _run_one(command, text, target, server)
        return path, report, code, message

    with ThreadPoolExecutor(max_workers=8) as pool:
        outcomes = list(pool.map(job, files))

    worst = EXIT_OK
    for path, report, code, message in outcomes:
        worst = max(worst, code)
        if as_json:
            entry: dict = {"file": path.name, "exit": code}
            if report is not None:
                entry["report"] = report
            else:
                entry["error"] = message
            print(json.dumps(entry, sort_keys=True))
        else:
            print(f"== {path.name} ==")
            if report is not None:
                print(_emit(command, report, False), end="")
            else:
                print(f"error: {message}")
    return worst


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="fiberlink", description="link diagram realizability toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("file", nargs="?", help="diagram file, or - for stdin")
        p.add_argument("--target", choices=("plane", "sphere"), default="plane")
        p.add_argument("--json", action="store_true")
        p.add_argument("--batch", metavar="DIR", help="evaluate every *.pd file in DIR")
        p.add_argument("--server", metavar="URL", help="send the input to a running service")
    args = parser.parse_args(argv)

    if args.batch:
        return _run_batch(args.command, args.batch, args.target, args.server, args.json)
    if not args.file:
        print("error: need a file argument or --batch", file=sys.stderr)
        return EXIT_INVALID
    try:
        text = _read_input(args.file)
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_IO

    report, code, message = _run_one(args.command, text, args.target, args.server)
    if report is None:
        print(f"error: {message}", file=sys.stderr)
        return code
    print(_emit(args.command, report, args.json), end="")
    return code


def main_entry() -> None:
    raise SystemExit(main())
