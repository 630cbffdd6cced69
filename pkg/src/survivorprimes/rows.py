"""Flat report rows and their CSV / JSON encodings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, fields

from .survey import SurvivorRecord

COLUMNS = ("p", "mod8", "survivor", "h", "group", "ono_d", "case_check", "witness")


@dataclass(frozen=True)
class ReportRow:
    p: int
    mod8: int
    survivor: bool
    h: int | None
    group: str
    ono_d: int | None
    case_check: bool | None
    witness: str | None

    @classmethod
    def from_record(cls, rec: SurvivorRecord) -> ReportRow:
        witness = None
        if rec.witness is not None:
            name = "t" if rec.residue_class == 7 else "y"
            witness = f"x={rec.witness[0]};{name}={rec.witness[1]}"
        return cls(
            p=rec.p,
            mod8=rec.residue_class,
            survivor=True,
            h=rec.h,
            group=rec.group_label,
            ono_d=rec.ono_d,
            case_check=rec.case_check,
            witness=witness,
        )


def _cell(v: object) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def to_csv(rows: list[ReportRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for row in rows:
        w.writerow([_cell(getattr(row, c)) for c in COLUMNS])
    return buf.getvalue()


def to_json(rows: list[ReportRow]) -> str:
    return json.dumps([asdict(r) for r in rows], indent=1) + "\n"


def _opt_int(s: str) -> int | None:
    return int(s) if s else None


def _opt_bool(s: str) -> bool | None:
    return {"": None, "true": True, "false": False}[s]


def from_csv(text: str) -> list[ReportRow]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != COLUMNS:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    return [
        ReportRow(
            p=int(d["p"]),
            mod8=int(d["mod8"]),
            survivor=_opt_bool(d["survivor"]) is True,
            h=_opt_int(d["h"]),
            group=d["group"],
            ono_d=_opt_int(d["ono_d"]),
            case_check=_opt_bool(d["case_check"]),
            witness=d["witness"] or None,
        )
        for d in reader
    ]


def from_json(text: str) -> list[ReportRow]:
    names = {f.name for f in fields(ReportRow)}
    out = []
    for obj in json.loads(text):
        if set(obj) != names:
            raise ValueError(f"unexpected row keys {sorted(obj)}")
        out.append(ReportRow(**obj))
    return out
