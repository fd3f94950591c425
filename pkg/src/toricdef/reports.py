"""Input parsing and report serialization for the command line."""

import csv
import io
import json

from .classify import HODGE, DimensionReport, classify
from .errors import InputError
from .lattice import cone_over_polygon, dual_cone

TSV_COLUMNS = ("degree_x", "degree_y", "degree_z", "hodge_i", "dim", "case_label")


def parse_cone(data, source="<input>"):
    """A GorensteinCone from {"rays": [...]} or {"polygon": [...]}."""
    if not isinstance(data, dict):
        raise InputError(f"{source}: expected a JSON object with 'rays' or 'polygon'")
    keys = {"rays", "polygon"} & set(data)
    if len(keys) != 1:
        raise InputError(f"{source}: give exactly one of 'rays' or 'polygon'")
    key = keys.pop()
    value = data[key]
    if not isinstance(value, list):
        raise InputError(f"{source}: '{key}' must be a list of coordinate lists")
    try:
        if key == "rays":
            return dual_cone(value)
        return cone_over_polygon(value)
    except InputError as exc:
        raise type(exc)(f"{source}: {key}: {exc}") from None


def load_cone(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    return parse_cone(data, path)


def _ints(text, count, what):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        raise InputError(f"{what}: expected {count} comma-separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise InputError(f"{what}: non-integer entry in {text!r}") from None


def parse_degree(text, cone):
    """Raw 'x,y,z' or symbolic 'sym:q,j,p' = q R* - p s_j with j counted from 1."""
    text = text.strip()
    if text.startswith("sym:"):
        q, j, p = _ints(text[4:], 3, "symbolic degree")
        if not 1 <= j <= cone.N:
            raise InputError(f"symbolic degree: edge {j} outside 1..{cone.N}")
        return cone.degree(q, j - 1, p)
    return _ints(text, 3, "degree")


def parse_pair(text, what):
    a, b = _ints(text, 2, what)
    if a < 0 or b < 0:
        raise InputError(f"{what}: bounds must be nonnegative")
    return a, b


def parse_hodge(text):
    out = []
    for p in text.split(","):
        try:
            i = int(p)
        except ValueError:
            raise InputError(f"hodge index: non-integer {p!r}") from None
        if i < 0:
            raise InputError("hodge index must be nonnegative")
        out.append(i)
    return tuple(out)


def tsv(rows, columns=TSV_COLUMNS):
    buf = io.StringIO()
    w = csv.writer(buf, delimiter="\t", lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow(["" if v is None else v for v in r])
    return buf.getvalue()


def read_tsv(text):
    lines = list(csv.reader(io.StringIO(text), delimiter="\t"))
    return lines[0], lines[1:]


def dumps(data):
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def t1_rows(records):
    """records: (degree, i, dim, label) -> TSV rows."""
    return [(R[0], R[1], R[2], i, dim, label) for R, i, dim, label in records]


def report_rows(report, cone):
    """Sporadic degrees and the first member of each family, one row per Hodge index."""
    rows = []
    for R, (dims, labels) in sorted(report.sporadic.items()):
        for i, v in zip(HODGE, dims):
            if v:
                rows.append((R[0], R[1], R[2], i, v, "".join(sorted(labels))))
    for fam in report.families:
        R = fam.degree(cone, fam.p_min)
        for i, v in zip(HODGE, fam.dims):
            if v:
                rows.append((R[0], R[1], R[2], i, v, fam.kind))
    return rows


def classify_json(cone, report=None):
    report = classify(cone) if report is None else report
    data = report.to_json()
    data["cone"] = cone.to_json()
    return data


def report_from_json(data):
    if data.get("schema") != 1:
        raise InputError(f"unsupported schema {data.get('schema')!r}")
    return DimensionReport.from_json(data)
