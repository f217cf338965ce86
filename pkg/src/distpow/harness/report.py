"""Report serialization: canonical JSON plus a markdown view derived from it."""

from __future__ import annotations

import json
from collections import Counter
from importlib.metadata import PackageNotFoundError, version as _dist_version

from .claims import REGISTRY, Limits


def package_version() -> str:
    try:
        return _dist_version("artifact")
    except PackageNotFoundError:
        return "0+unknown"


def build_report(records: list[dict], limits: Limits) -> dict:
    return {
        "meta": {"seed": limits.seed, "limits": limits.to_json(), "version": package_version()},
        "records": records,
    }


def to_json(report: dict) -> str:
    """Byte-stable text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def summarize(records: list[dict]) -> dict[str, Counter]:
    out: dict[str, Counter] = {}
    for r in records:
        verdict = "SKIP" if r["verdict"].startswith("SKIP") else r["verdict"]
        out.setdefault(r["claim"], Counter())[verdict] += 1
    return out


def _cell(value) -> str:
    text = value if isinstance(value, str) else json.dumps(value, sort_keys=True)
    return text.replace("|", "\\|")


def render_markdown(report: dict) -> str:
    meta = report["meta"]
    records = report["records"]
    lines = [
        "# Claim verification report",
        "",
        f"version {meta['version']}, seed {meta['seed']}",
        "",
        "limits: " + ", ".join(f"{k}={v}" for k, v in sorted(meta["limits"].items())),
        "",
        "| claim | statement | PASS | FAIL | SKIP |",
        "|---|---|---:|---:|---:|",
    ]
    for cid, counts in summarize(records).items():
        claim = REGISTRY.get(cid)
        desc = claim.description if claim else ""
        if claim and claim.report_only:
            desc += " (report only)"
        lines.append(f"| {cid} | {_cell(desc)} | {counts['PASS']} | {counts['FAIL']} | {counts['SKIP']} |")
    bad = [r for r in records if r["verdict"] != "PASS"]
    if bad:
        lines += ["", "## Non-passing instances", "", "| claim | instance | expected | computed | verdict |", "|---|---|---|---|---|"]
        for r in bad:
            lines.append(
                f"| {r['claim']} | {_cell(r['instance'])} | {_cell(r['expected'])} | {_cell(r['computed'])} | {_cell(r['verdict'])} |"
            )
    return "\n".join(lines) + "\n"
