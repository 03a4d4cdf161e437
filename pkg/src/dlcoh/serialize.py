"""JSON and CSV forms of cohomology tables and verification reports."""

from __future__ import annotations

import csv
import io
import json

from .partitions import Partition, parse_partition
from .tables import CohomologyTable, TableEntry

__all__ = ["table_to_dict", "table_from_dict", "table_to_json", "table_from_json",
           "table_to_csv", "table_from_csv", "dump_json"]

CSV_COLUMNS = ["n", "d", "mu", "source", "lambda", "degree", "frobenius_exponent", "multiplicity"]


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def table_to_dict(table: CohomologyTable) -> dict:
    return {
        "n": table.n,
        "d": table.d,
        "mu": list(table.mu),
        "source": table.source,
        "entries": [
            {"lambda": list(e.lam), "degree": e.degree,
             "frobenius_exponent": e.frob_exp, "multiplicity": e.multiplicity}
            for e in table.entries
        ],
    }


def table_from_dict(data: dict) -> CohomologyTable:
    entries = [TableEntry(Partition(e["lambda"]), int(e["degree"]),
                          int(e["frobenius_exponent"]), int(e["multiplicity"]))
               for e in data["entries"]]
    entries.sort(key=lambda e: (e.degree, e.frob_exp, tuple(e.lam)))
    return CohomologyTable(int(data["n"]), int(data["d"]), Partition(data["mu"]),
                           data["source"], tuple(entries))


def table_to_json(table: CohomologyTable) -> str:
    return dump_json(table_to_dict(table))


def table_from_json(text: str) -> CohomologyTable:
    return table_from_dict(json.loads(text))


def _fmt(p) -> str:
    return ",".join(map(str, p))


def table_to_csv(table: CohomologyTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for e in table.entries:
        writer.writerow([table.n, table.d, _fmt(table.mu), table.source,
                         _fmt(e.lam), e.degree, e.frob_exp, e.multiplicity])
    return buf.getvalue()


def table_from_csv(text: str) -> CohomologyTable:
    rows = list(csv.DictReader(io.StringIO(text)))
    if not rows:
        raise ValueError("a CSV table needs at least one entry to carry its parameters")
    first = rows[0]
    return table_from_dict({
        "n": first["n"], "d": first["d"], "mu": parse_partition(first["mu"]),
        "source": first["source"],
        "entries": [{"lambda": parse_partition(r["lambda"]), "degree": r["degree"],
                     "frobenius_exponent": r["frobenius_exponent"],
                     "multiplicity": r["multiplicity"]} for r in rows],
    })
