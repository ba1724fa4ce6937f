"""Plain-text tables and JSON Lines for analysis records."""

from __future__ import annotations

import json
from typing import Iterable, Sequence, TextIO


def _cell(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    if isinstance(v, (list, tuple)):
        return "{" + ",".join(str(x) for x in v) + "}"
    if isinstance(v, dict):
        return " ".join(f"{k}:{_cell(x)}" for k, x in v.items())
    return str(v)


def format_table(rows: Sequence[dict], columns: Sequence[str] | None = None) -> str:
    """Aligned columns, one line per row, with a header line."""
    if not rows:
        return ""
    columns = list(columns or rows[0].keys())
    cells = [[_cell(r.get(c)) for c in columns] for r in rows]
    widths = [max(len(c), *(len(line[i]) for line in cells)) for i, c in enumerate(columns)]
    out = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    out += ["  ".join(v.ljust(w) for v, w in zip(line, widths)).rstrip() for line in cells]
    return "\n".join(out)


def write_jsonl(records: Iterable[dict], stream: TextIO) -> None:
    for rec in records:
        stream.write(json.dumps(rec, sort_keys=False) + "\n")


def group_report_text(data: dict) -> str:
    lines = [
        f"group            {data['spec']}",
        f"order            {data['order']}",
        f"exponent         {data['exponent']}",
        f"subgroups        {data['subgroup_count']}",
        f"divisors         {_cell(data['divisors'])}",
        f"image_of_O       {_cell(data['image_of_O'])}",
        f"cyclic           {_cell(data['cyclic'])}",
        f"cflt             {_cell(data['cflt'])}",
        f"clt              {_cell(data['clt'])}",
        f"sylow_all_cyclic {_cell(data['sylow_all_cyclic'])}",
        f"missing_divisors {_cell(data['missing_divisors'])}",
        "witnesses",
    ]
    rows = [{"divisor": d, "relative_exponent": w["relative_exponent"], "members": w["members"]}
            for d, w in data["witnesses"].items()]
    lines += ["  " + line for line in format_table(rows).splitlines()]
    return "\n".join(lines)
