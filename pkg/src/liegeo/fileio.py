"""The algebra-file JSON format and machine-readable reports.

Rationals travel as strings matching -?\\d+(/\\d+)? so intermediate tooling
cannot corrupt them; indices are 1-based.  Unlisted brackets are zero.
Parse errors carry the path of the offending field.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebra import LieAlgebra, Subspace
from .geometry import Metric

RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


class ParseError(ValueError):
    """Malformed input; ``path`` locates the offending field."""

    def __init__(self, message: str, path: str = ""):
        super().__init__("%s: %s" % (path, message) if path else message)
        self.path = path
        self.reason = message


def _rational(value, path: str) -> Fraction:
    if not isinstance(value, str) or not RATIONAL_RE.match(value):
        raise ParseError("expected a rational string like '-3/7'", path)
    return Fraction(value)


def _expect(cond, message, path):
    if not cond:
        raise ParseError(message, path)


@dataclass
class AlgebraFile:
    algebra: LieAlgebra
    metric: Optional[Metric] = None
    subalgebras: dict = field(default_factory=dict)  # name -> Subspace (basis rows)

    @property
    def dim(self) -> int:
        return self.algebra.dim


def parse(data) -> AlgebraFile:
    """Parse and validate an algebra file (JSON text or bytes)."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as e:
        raise ParseError("invalid JSON: %s" % e.msg, "") from None
    _expect(isinstance(doc, dict), "top level must be an object", "")
    _expect("dim" in doc, "missing field", "dim")
    dim = doc["dim"]
    _expect(isinstance(dim, int) and dim >= 1, "dim must be a positive integer", "dim")
    name = doc.get("name")
    _expect(name is None or isinstance(name, str), "name must be a string", "name")

    brackets = {}
    entries = doc.get("brackets", [])
    _expect(isinstance(entries, list), "brackets must be a list", "brackets")
    for idx, entry in enumerate(entries):
        path = "brackets[%d]" % idx
        _expect(isinstance(entry, dict), "entry must be an object", path)
        for key in ("i", "j", "coeffs"):
            _expect(key in entry, "missing field", "%s.%s" % (path, key))
        i, j = entry["i"], entry["j"]
        _expect(isinstance(i, int) and 1 <= i <= dim, "index out of range", path + ".i")
        _expect(isinstance(j, int) and 1 <= j <= dim, "index out of range", path + ".j")
        _expect(i < j, "requires i < j (antisymmetry forces [X_i,X_i] = 0)", path + ".i")
        _expect((i, j) not in brackets, "duplicate bracket pair", path)
        coeffs = {}
        _expect(isinstance(entry["coeffs"], list), "coeffs must be a list", path + ".coeffs")
        for cidx, pair in enumerate(entry["coeffs"]):
            cpath = "%s.coeffs[%d]" % (path, cidx)
            _expect(
                isinstance(pair, list) and len(pair) == 2,
                "expected [k, rational-string]",
                cpath,
            )
            k, val = pair
            _expect(isinstance(k, int) and 1 <= k <= dim, "index out of range", cpath)
            coeffs[k] = _rational(val, cpath)
        brackets[(i, j)] = coeffs

    try:
        algebra = LieAlgebra(dim, brackets, name=name)
    except ValueError as e:
        raise ParseError(str(e), "brackets") from None

    metric = None
    if doc.get("metric") is not None:
        mpath = "metric"
        mdoc = doc["metric"]
        _expect(isinstance(mdoc, dict) and "gram" in mdoc, "expected {'gram': ...}", mpath)
        gram = mdoc["gram"]
        _expect(
            isinstance(gram, list) and len(gram) == dim,
            "gram must be a %dx%d matrix" % (dim, dim),
            mpath + ".gram",
        )
        rows = []
        for r, row in enumerate(gram):
            rpath = "%s.gram[%d]" % (mpath, r)
            _expect(isinstance(row, list) and len(row) == dim, "wrong row length", rpath)
            rows.append([_rational(x, "%s[%d]" % (rpath, c)) for c, x in enumerate(row)])
        try:
            metric = Metric(rows)
        except ValueError as e:
            raise ParseError(str(e), mpath + ".gram") from None

    subalgebras = {}
    if doc.get("subalgebras") is not None:
        sdoc = doc["subalgebras"]
        _expect(isinstance(sdoc, list), "subalgebras must be a list", "subalgebras")
        for sidx, entry in enumerate(sdoc):
            spath = "subalgebras[%d]" % sidx
            _expect(isinstance(entry, dict), "entry must be an object", spath)
            _expect("name" in entry and isinstance(entry["name"], str), "missing name", spath)
            _expect("basis" in entry and isinstance(entry["basis"], list), "missing basis", spath)
            rows = []
            for vidx, v in enumerate(entry["basis"]):
                vpath = "%s.basis[%d]" % (spath, vidx)
                _expect(isinstance(v, list) and len(v) == dim, "wrong vector length", vpath)
                rows.append([_rational(x, "%s[%d]" % (vpath, c)) for c, x in enumerate(v)])
            subalgebras[entry["name"]] = Subspace(dim, rows)
    return AlgebraFile(algebra, metric, subalgebras)


def serialize_algebra(
    algebra: LieAlgebra,
    metric: Optional[Metric] = None,
    subalgebras: Optional[dict] = None,
    name: Optional[str] = None,
) -> dict:
    doc = {"dim": algebra.dim}
    if name or algebra.name:
        doc["name"] = name or algebra.name
    doc["brackets"] = [
        {
            "i": i,
            "j": j,
            "coeffs": [[k + 1, str(c)] for k, c in enumerate(row) if c],
        }
        for i, j, row in algebra.nonzero_brackets()
    ]
    if metric is not None:
        doc["metric"] = {"gram": [[str(x) for x in row] for row in metric.gram]}
    if subalgebras:
        doc["subalgebras"] = [
            {"name": n, "basis": [[str(x) for x in r] for r in s.rows]}
            for n, s in sorted(subalgebras.items())
        ]
    return doc


def emit_algebra(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def format_vector(v) -> list:
    return [str(x) for x in v]


@dataclass
class Report:
    """Command result: verdicts plus reproducible witnesses and residuals."""

    command: str
    verdicts: dict = field(default_factory=dict)  # name -> "pass"/"fail"/text
    witnesses: dict = field(default_factory=dict)  # name -> rational-string payload
    residuals: dict = field(default_factory=dict)  # name -> decimal string
    notes: list = field(default_factory=list)
    elapsed: str = "0"

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "verdicts": self.verdicts,
            "witnesses": self.witnesses,
            "residuals": self.residuals,
            "notes": self.notes,
            "elapsed": self.elapsed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        doc = json.loads(text)
        return cls(
            doc["command"],
            doc["verdicts"],
            doc["witnesses"],
            doc["residuals"],
            doc["notes"],
            doc["elapsed"],
        )

    def to_text(self) -> str:
        lines = ["# %s" % self.command]
        for k in sorted(self.verdicts):
            lines.append("%-28s %s" % (k + ":", self.verdicts[k]))
        for k in sorted(self.witnesses):
            lines.append("%-28s %s" % (k + ":", self.witnesses[k]))
        for k in sorted(self.residuals):
            lines.append("%-28s %s" % (k + ":", self.residuals[k]))
        for note in self.notes:
            lines.append(note)
        lines.append("elapsed: %s s" % self.elapsed)
        return "\n".join(lines) + "\n"


def emit(report: Report, fmt: str = "text") -> str:
    if fmt == "json":
        return report.to_json()
    return report.to_text()
