"""Edge-list input and report output.

Edge lists use the SNAP layout: one ``src dst`` pair per line separated by
spaces or tabs, with ``#`` comment lines and blank lines ignored. Node
labels are arbitrary tokens, numbered densely in order of first
appearance.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from array import array
from dataclasses import dataclass, field
from fractions import Fraction
from typing import IO, Iterable, Iterator

import numpy as np

from .control import ControlReport
from .errors import ParseError
from .graph import DirectedGraph, build_graph

REPORT_FIELDS = (
    "n",
    "l",
    "matching_size",
    "mis",
    "possible_inputs",
    "n_pd",
    "perfect_matching",
    "method",
    "elapsed_ms",
    "version",
    "input_digest",
)


@dataclass
class LabelMap:
    """Bijection between external labels and dense node ids."""

    labels: list[str] = field(default_factory=list)
    index: dict[str, int] = field(default_factory=dict)

    @classmethod
    def identity(cls, n: int) -> LabelMap:
        labels = [str(i) for i in range(n)]
        return cls(labels, {s: i for i, s in enumerate(labels)})

    def intern(self, label: str) -> int:
        i = self.index.get(label)
        if i is None:
            i = len(self.labels)
            self.index[label] = i
            self.labels.append(label)
        return i

    def __len__(self) -> int:
        return len(self.labels)

    def label_of(self, node: int) -> str:
        return self.labels[node]

    def id_of(self, label: str) -> int:
        return self.index[label]


def _lines(source) -> Iterator[str]:
    if isinstance(source, (bytes, bytearray)):
        source = io.BytesIO(source)
    elif isinstance(source, str):
        source = io.StringIO(source)
    for raw in source:
        yield raw.decode("utf-8") if isinstance(raw, (bytes, bytearray)) else raw


def parse_edge_list(source: bytes | str | IO | Iterable) -> tuple[DirectedGraph, LabelMap]:
    """Read an edge list from bytes, text, a file object or an iterable of lines.

    Lines are consumed one at a time, so memory grows with the number of
    nodes and edges rather than with the file size.
    """
    labels = LabelMap()
    src, dst = array("q"), array("q")
    for lineno, line in enumerate(_lines(source), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.replace("\t", " ").split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 tokens, found {len(tokens)}: {stripped!r}", line=lineno)
        src.append(labels.intern(tokens[0]))
        dst.append(labels.intern(tokens[1]))
    if not len(labels):
        raise ParseError("input contains no edges")
    pairs = np.column_stack((np.frombuffer(src, dtype=np.int64), np.frombuffer(dst, dtype=np.int64)))
    return build_graph(len(labels), pairs), labels


def write_edge_list(g: DirectedGraph, labels: LabelMap | None = None) -> bytes:
    """Serialize edges as tab-separated lines in (src, dst) order."""
    names = labels.labels if labels is not None else [str(i) for i in range(g.n)]
    out = io.StringIO()
    out.write(f"# nodes: {g.n} edges: {g.num_edges}\n")
    for u, v in zip(g.src.tolist(), g.dst.tolist()):
        out.write(f"{names[u]}\t{names[v]}\n")
    return out.getvalue().encode("utf-8")


def input_digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


@dataclass(frozen=True)
class ReportDocument:
    """A :class:`ControlReport` with node sets resolved to labels.

    Node sets keep node-id order, which is first-appearance order in the
    input file.
    """

    n: int
    l: int
    matching_size: int
    mis: tuple[str, ...]
    possible_inputs: tuple[str, ...]
    n_pd: Fraction
    perfect_matching: bool
    method: str
    elapsed_ms: float
    version: str
    input_digest: str


def make_document(
    report: ControlReport,
    labels: LabelMap | None,
    elapsed_ms: float,
    digest: str,
    version: str | None = None,
) -> ReportDocument:
    from . import __version__

    if labels is None:
        labels = LabelMap.identity(report.n)
    return ReportDocument(
        n=report.n,
        l=report.l,
        matching_size=report.matching_size,
        mis=tuple(labels.label_of(v) for v in report.mis),
        possible_inputs=tuple(labels.label_of(v) for v in report.possible_inputs),
        n_pd=report.n_pd,
        perfect_matching=report.perfect_matching,
        method=report.method.value,
        # 6 decimals is what the serialized form keeps
        elapsed_ms=round(float(elapsed_ms), 6),
        version=version or __version__,
        input_digest=digest,
    )


def _fmt_float(x: float | Fraction) -> str:
    return f"{float(x):.6f}"


def _json_fields(doc: ReportDocument) -> list[tuple[str, str]]:
    return [
        ("n", str(doc.n)),
        ("l", str(doc.l)),
        ("matching_size", str(doc.matching_size)),
        ("mis", json.dumps(list(doc.mis), ensure_ascii=False)),
        ("possible_inputs", json.dumps(list(doc.possible_inputs), ensure_ascii=False)),
        ("n_pd", _fmt_float(doc.n_pd)),
        ("perfect_matching", "true" if doc.perfect_matching else "false"),
        ("method", json.dumps(doc.method)),
        ("elapsed_ms", _fmt_float(doc.elapsed_ms)),
        ("version", json.dumps(doc.version)),
        ("input_digest", json.dumps(doc.input_digest)),
    ]


def write_report(doc: ReportDocument, format: str = "json") -> bytes:
    """Serialize a report; output bytes depend only on the document."""
    if format == "json":
        body = ", ".join(f'"{k}": {v}' for k, v in _json_fields(doc))
        return ("{" + body + "}\n").encode("utf-8")
    if format == "csv":
        row = [
            doc.n,
            doc.l,
            doc.matching_size,
            "|".join(doc.mis),
            "|".join(doc.possible_inputs),
            _fmt_float(doc.n_pd),
            "true" if doc.perfect_matching else "false",
            doc.method,
            _fmt_float(doc.elapsed_ms),
            doc.version,
            doc.input_digest,
        ]
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(REPORT_FIELDS)
        writer.writerow(row)
        return out.getvalue().encode("utf-8")
    raise ValueError(f"unknown report format {format!r}")


def _split_set(cell: str) -> tuple[str, ...]:
    return tuple(cell.split("|")) if cell else ()


def read_report(data: bytes, format: str = "json") -> ReportDocument:
    """Parse the output of :func:`write_report` back into a document."""
    if format == "json":
        obj = json.loads(data.decode("utf-8"))
        mis, possible = tuple(obj["mis"]), tuple(obj["possible_inputs"])
        perfect = obj["perfect_matching"]
    elif format == "csv":
        rows = list(csv.reader(io.StringIO(data.decode("utf-8"))))
        if len(rows) != 2 or tuple(rows[0]) != REPORT_FIELDS:
            raise ValueError("not a ctrlset csv report")
        obj = dict(zip(REPORT_FIELDS, rows[1]))
        mis, possible = _split_set(obj["mis"]), _split_set(obj["possible_inputs"])
        perfect = obj["perfect_matching"] == "true"
    else:
        raise ValueError(f"unknown report format {format!r}")
    n = int(obj["n"])
    n_pd = Fraction(len(possible), n)
    if abs(float(n_pd) - float(obj["n_pd"])) > 5e-7:
        raise ValueError("n_pd does not match the possible-input set")
    return ReportDocument(
        n=n,
        l=int(obj["l"]),
        matching_size=int(obj["matching_size"]),
        mis=mis,
        possible_inputs=possible,
        n_pd=n_pd,
        perfect_matching=bool(perfect),
        method=str(obj["method"]),
        elapsed_ms=float(obj["elapsed_ms"]),
        version=str(obj["version"]),
        input_digest=str(obj["input_digest"]),
    )

