"""Loaders for the transcribed tables shipped in ``paper-tables/``."""
from __future__ import annotations

import csv
import re
from dataclasses import dataclass
from importlib import resources

_TUPLE = re.compile(r"\(([\d,\s]+)\)")


def table_path(name: str):
    return resources.files("symcy").joinpath("paper-tables", name)


def _lines(name: str):
    for line in table_path(name).read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            yield line


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in re.split(r"[,\s]+", text.strip()) if x)


def appendix_a() -> list[tuple[int, ...]]:
    return [_ints(line) for line in _lines("appendix_a.txt")]


def tuple_table(name: str) -> list[tuple[tuple[int, ...], bool]]:
    """Rows ``(weights, marked)`` of a tuple table; ``marked`` is the trailing ``u`` flag."""
    out = []
    for line in _lines(name):
        m = _TUPLE.search(line)
        if m is None:
            raise ValueError(f"{name}: cannot read {line!r}")
        out.append((_ints(m.group(1)), line[m.end():].strip() == "u"))
    return out


@dataclass(frozen=True)
class Table1Row:
    starred: bool
    printed_quad: str
    quad: tuple[int, int, int, int]
    degree: int
    weights: tuple[int, ...]
    h12: int
    g: int
    order: int
    printed_rep: str
    rep: str
    correction: str


def table1() -> list[Table1Row]:
    with table_path("table1.csv").open(newline="") as fh:
        return [
            Table1Row(
                starred=row["starred"] == "*",
                printed_quad=row["printed_quad"],
                quad=_ints(row["quad"].strip("()")),
                degree=int(row["degree"]),
                weights=_ints(row["weights"].strip("[]")),
                h12=int(row["h12"]),
                g=int(row["g"]),
                order=int(row["order"]),
                printed_rep=row["printed_rep"],
                rep=row["rep"],
                correction=row["correction"],
            )
            for row in csv.DictReader(fh)
        ]
