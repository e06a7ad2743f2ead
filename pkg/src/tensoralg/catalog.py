"""Built-in algebras and pairs, document parsing, and report serialization.

Documents are JSON with a fixed shape.  An algebra document:

    {"name": "heisenberg1", "dim": 3, "basis": ["x", "y", "z"],
     "brackets": {"x,y": {"z": "1"}}}

Bracket keys name an ordered basis pair; values map basis names to rational
scalars written as strings (plain integers are also accepted).  A pair
document wraps an algebra, inline or by file reference, with an ideal:

    {"algebra": "heisenberg1.json", "ideal": [["0", "0", "1"]]}

or "ideal": "all" for the pair of the algebra with itself.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .liealg import LieAlgebra, NotAnIdealError, StructureError, center
from .linalg import Vector, parse_scalar
from .pairs import Pair, PairValidationError, direct_sum_pair, make_pair
from .verify import VerificationReport


class DocumentError(ValueError):
    """A document that cannot be read, with position or witness when known."""

    def __init__(self, message, line=None, col=None, witness=None):
        self.line = line
        self.col = col
        self.witness = witness
        if line is not None:
            message = f"line {line} col {col}: {message}"
        if witness is not None:
            message = f"{message} (witness: {witness})"
        super().__init__(message)


class SelectorError(ValueError):
    """A builtin selector that does not name a constructible object."""


# ---------------------------------------------------------------- builtins


def abelian(n: int) -> LieAlgebra:
    if n < 0:
        raise SelectorError("abelian dimension must be non-negative")
    return LieAlgebra.abelian(n)


def nonabelian2() -> LieAlgebra:
    return LieAlgebra.make(2, ("x", "y"), {(0, 1): (0, 1)})


def heisenberg(m: int) -> LieAlgebra:
    """2m+1 dimensional: [x_i, y_i] = z, everything else zero."""
    if m < 1:
        raise SelectorError("heisenberg rank must be positive")
    names = tuple(f"x{i + 1}" for i in range(m)) + tuple(f"y{i + 1}" for i in range(m)) + ("z",)
    dim = 2 * m + 1
    z = tuple(Fraction(1 if k == dim - 1 else 0) for k in range(dim))
    return LieAlgebra.make(dim, names, {(i, m + i): z for i in range(m)})


def pair_full(algebra: LieAlgebra) -> Pair:
    return make_pair(algebra, [algebra.basis_vector(i) for i in range(algebra.dim)])


def pair_center(algebra: LieAlgebra) -> Pair:
    return make_pair(algebra, list(center(algebra).space.basis))


def pair_direct_sum(a: Pair, b: Pair) -> Pair:
    return direct_sum_pair(a, b)


_TOKEN = re.compile(r"\s*([a-z_][a-z0-9_]*|\d+|[(),])")


def _tokenize(text: str) -> list[str]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise SelectorError(f"cannot read selector at: {text[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


def _parse_node(tokens: list[str], at: int):
    if at >= len(tokens):
        raise SelectorError("selector ends unexpectedly")
    head = tokens[at]
    if head.isdigit():
        return int(head), at + 1
    if not head[0].isalpha() and head[0] != "_":
        raise SelectorError(f"expected a name, found {head!r}")
    at += 1
    args = []
    if at < len(tokens) and tokens[at] == "(":
        at += 1
        if at < len(tokens) and tokens[at] == ")":
            at += 1
        else:
            while True:
                node, at = _parse_node(tokens, at)
                args.append(node)
                if at >= len(tokens):
                    raise SelectorError("unclosed parenthesis in selector")
                if tokens[at] == ",":
                    at += 1
                    continue
                if tokens[at] == ")":
                    at += 1
                    break
                raise SelectorError(f"expected ',' or ')', found {tokens[at]!r}")
    return (head, args), at


def _eval_node(node):
    if isinstance(node, int):
        return node
    name, args = node
    values = [_eval_node(a) for a in args]

    def arity(n, kinds):
        if len(values) != n:
            raise SelectorError(f"{name} takes {n} argument(s), got {len(values)}")
        for v, kind in zip(values, kinds):
            if not isinstance(v, kind):
                raise SelectorError(f"{name} argument has the wrong kind")

    if name == "abelian":
        arity(1, [int])
        return abelian(values[0])
    if name == "nonabelian2":
        arity(0, [])
        return nonabelian2()
    if name == "heisenberg":
        arity(1, [int])
        return heisenberg(values[0])
    if name == "pair_full":
        arity(1, [LieAlgebra])
        return pair_full(values[0])
    if name == "pair_center":
        arity(1, [LieAlgebra])
        return pair_center(values[0])
    if name == "pair_direct_sum":
        arity(2, [Pair, Pair])
        return pair_direct_sum(values[0], values[1])
    raise SelectorError(f"unknown builtin {name!r}")


def resolve_selector(text: str) -> LieAlgebra | Pair:
    """Evaluate a builtin selector such as builtin:pair_full(heisenberg(1))."""
    body = text.strip()
    if body.startswith("builtin:"):
        body = body[len("builtin:"):]
    tokens = _tokenize(body)
    if not tokens:
        raise SelectorError("empty selector")
    node, at = _parse_node(tokens, 0)
    if at != len(tokens):
        raise SelectorError(f"trailing input after selector: {tokens[at:]!r}")
    value = _eval_node(node)
    if isinstance(value, int):
        raise SelectorError("selector names a number, not an algebra or pair")
    return value


def catalog_selectors() -> tuple[str, ...]:
    """The standing list of pairs every decomposition is expected to cover."""
    return (
        "builtin:pair_full(abelian(1))",
        "builtin:pair_full(abelian(2))",
        "builtin:pair_full(abelian(3))",
        "builtin:pair_full(abelian(4))",
        "builtin:pair_full(nonabelian2)",
        "builtin:pair_full(heisenberg(1))",
        "builtin:pair_center(heisenberg(1))",
        "builtin:pair_direct_sum(pair_full(nonabelian2),pair_full(abelian(1)))",
        "builtin:pair_direct_sum(pair_center(heisenberg(1)),pair_full(abelian(1)))",
    )


def catalog_pairs() -> tuple[tuple[str, Pair], ...]:
    return tuple((s, resolve_selector(s)) for s in catalog_selectors())


# ---------------------------------------------------------------- documents


@dataclass(frozen=True)
class AlgebraDocument:
    name: str
    dim: int
    basis: tuple[str, ...]
    brackets: tuple[tuple[tuple[int, int], Vector], ...]


@dataclass(frozen=True)
class PairDocument:
    algebra: AlgebraDocument | str  # inline, or a file reference
    ideal: tuple[Vector, ...] | None  # None means the whole algebra


def _locate(text: str, fragment: str) -> tuple[int | None, int | None]:
    idx = text.find(f'"{fragment}"')
    if idx < 0:
        return None, None
    line = text.count("\n", 0, idx) + 1
    col = idx - text.rfind("\n", 0, idx)
    return line, col


def _no_duplicates(pairs):
    seen = set()
    for key, _ in pairs:
        if key in seen:
            raise ValueError(f"duplicate key {key!r}")
        seen.add(key)
    return dict(pairs)


def _loads(text: str):
    try:
        return json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as e:
        raise DocumentError(e.msg, e.lineno, e.colno) from None
    except ValueError as e:
        raise DocumentError(str(e)) from None


def _scalar(value, text: str, context: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise DocumentError(f"{context}: scalar must be an integer or a rational string",
                            witness=repr(value))
    if isinstance(value, int):
        return Fraction(value)
    try:
        return parse_scalar(value)
    except Exception:
        raise DocumentError(f"{context}: cannot read rational", witness=repr(value)) from None


def _expect_keys(obj: dict, allowed: set, kind: str):
    for key in obj:
        if key not in allowed:
            raise DocumentError(f"unknown key in {kind} document", witness=key)
    for key in allowed:
        if key not in obj:
            raise DocumentError(f"missing key in {kind} document", witness=key)


def _algebra_document(obj: dict, text: str) -> AlgebraDocument:
    _expect_keys(obj, {"name", "dim", "basis", "brackets"}, "algebra")
    name = obj["name"]
    dim = obj["dim"]
    basis = obj["basis"]
    if not isinstance(name, str):
        raise DocumentError("name must be a string", witness=repr(name))
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise DocumentError("dim must be a non-negative integer", witness=repr(dim))
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise DocumentError("basis must be a list of names")
    if len(basis) != dim:
        raise DocumentError("basis length does not match dim", witness=f"{len(basis)} vs {dim}")
    if len(set(basis)) != dim:
        raise DocumentError("basis names must be unique")
    index = {b: k for k, b in enumerate(basis)}
    raw = obj["brackets"]
    if not isinstance(raw, dict):
        raise DocumentError("brackets must be an object")
    entries = {}
    for key, value in raw.items():
        parts = [p.strip() for p in key.split(",")]
        line, col = _locate(text, key)
        if len(parts) != 2:
            raise DocumentError("bracket key must name two basis elements", line, col, witness=key)
        for p in parts:
            if p not in index:
                raise DocumentError("bracket key uses an unknown basis name", line, col, witness=p)
        i, j = index[parts[0]], index[parts[1]]
        if i >= j:
            raise DocumentError(
                "bracket key is not an ordered basis pair", line, col, witness=key
            )
        if not isinstance(value, dict):
            raise DocumentError(f"bracket value for {key} must be an object", witness=repr(value))
        vec = [Fraction(0)] * dim
        for b, c in value.items():
            if b not in index:
                raise DocumentError("bracket value uses an unknown basis name", witness=b)
            vec[index[b]] = _scalar(c, text, f"bracket {key}")
        if any(c != 0 for c in vec):
            entries[(i, j)] = tuple(vec)
    return AlgebraDocument(name, dim, tuple(basis), tuple(sorted(entries.items())))


def _pair_document(obj: dict, text: str) -> PairDocument:
    _expect_keys(obj, {"algebra", "ideal"}, "pair")
    raw_algebra = obj["algebra"]
    if isinstance(raw_algebra, str):
        algebra: AlgebraDocument | str = raw_algebra
    elif isinstance(raw_algebra, dict):
        algebra = _algebra_document(raw_algebra, text)
    else:
        raise DocumentError("algebra must be an object or a file reference")
    raw_ideal = obj["ideal"]
    if raw_ideal == "all":
        return PairDocument(algebra, None)
    if not isinstance(raw_ideal, list):
        raise DocumentError('ideal must be "all" or a list of vectors')
    vectors = []
    for row in raw_ideal:
        if not isinstance(row, list):
            raise DocumentError("ideal vector must be a list", witness=repr(row))
        vectors.append(tuple(_scalar(c, text, "ideal vector") for c in row))
    widths = {len(v) for v in vectors}
    if len(widths) > 1:
        raise DocumentError("ideal vectors have mixed lengths")
    if isinstance(algebra, AlgebraDocument) and vectors and widths != {algebra.dim}:
        raise DocumentError(
            "ideal vector length does not match the algebra dimension",
            witness=f"{widths.pop()} vs {algebra.dim}",
        )
    return PairDocument(algebra, tuple(vectors))


def parse(text: str) -> AlgebraDocument | PairDocument:
    """Read one document; the shape decides whether it is an algebra or a pair."""
    obj = _loads(text)
    if not isinstance(obj, dict):
        raise DocumentError("document must be an object")
    if "ideal" in obj:
        return _pair_document(obj, text)
    return _algebra_document(obj, text)


def _scalar_str(c: Fraction) -> str:
    return str(c)


def _algebra_payload(doc: AlgebraDocument) -> dict:
    return {
        "name": doc.name,
        "dim": doc.dim,
        "basis": list(doc.basis),
        "brackets": {
            f"{doc.basis[i]},{doc.basis[j]}": {
                doc.basis[k]: _scalar_str(c) for k, c in enumerate(v) if c != 0
            }
            for (i, j), v in doc.brackets
        },
    }


def serialize(doc: AlgebraDocument | PairDocument) -> str:
    """Canonical text for a document; parse(serialize(doc)) == doc."""
    if isinstance(doc, AlgebraDocument):
        payload = _algebra_payload(doc)
    else:
        algebra = doc.algebra if isinstance(doc.algebra, str) else _algebra_payload(doc.algebra)
        ideal = "all" if doc.ideal is None else [[_scalar_str(c) for c in v] for v in doc.ideal]
        payload = {"algebra": algebra, "ideal": ideal}
    return json.dumps(payload, indent=2) + "\n"


def algebra_from_document(doc: AlgebraDocument) -> LieAlgebra:
    try:
        return LieAlgebra.make(doc.dim, doc.basis, dict(doc.brackets))
    except StructureError as e:
        raise DocumentError("structure violation", witness=e.args[0]) from None


def pair_from_document(doc: PairDocument, base_dir: str | None = None) -> Pair:
    if isinstance(doc.algebra, str):
        path = os.path.join(base_dir or ".", doc.algebra)
        try:
            with open(path, encoding="utf-8") as fh:
                inner = parse(fh.read())
        except OSError as e:
            raise DocumentError(f"cannot read referenced algebra: {e}") from None
        if not isinstance(inner, AlgebraDocument):
            raise DocumentError("referenced document is not an algebra", witness=doc.algebra)
        algebra = algebra_from_document(inner)
    else:
        algebra = algebra_from_document(doc.algebra)
    if doc.ideal is None:
        vectors: Sequence[Vector] = [algebra.basis_vector(i) for i in range(algebra.dim)]
    else:
        for v in doc.ideal:
            if len(v) != algebra.dim:
                raise DocumentError(
                    "ideal vector length does not match the algebra dimension",
                    witness=f"{len(v)} vs {algebra.dim}",
                )
        vectors = doc.ideal
    try:
        return make_pair(algebra, vectors)
    except NotAnIdealError as e:
        raise DocumentError("ideal is not an ideal", witness=e.witness) from None
    except PairValidationError as e:
        raise DocumentError("pair actions are inconsistent", witness=e.witness) from None


def load_path(path: str) -> LieAlgebra | Pair:
    """Read a document from disk and build the object it describes."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise DocumentError(f"cannot read document: {e}") from None
    doc = parse(text)
    if isinstance(doc, AlgebraDocument):
        return algebra_from_document(doc)
    return pair_from_document(doc, base_dir=os.path.dirname(os.path.abspath(path)))


# ---------------------------------------------------------------- reports


def _summary(records) -> dict:
    return {
        "checks": len(records),
        "pass": sum(1 for r in records if r.status == "pass"),
        "fail": sum(1 for r in records if r.status == "fail"),
        "not-applicable": sum(1 for r in records if r.status == "not-applicable"),
        "asserted-failures": sum(1 for r in records if r.failed_assertion),
    }


def _record_payload(r) -> dict:
    return {
        "pair": r.pair_id,
        "check": r.check,
        "anchor": r.anchor,
        "status": r.status,
        "asserted": r.asserted,
        "dims": dict(sorted(r.dims.items())),
        "flags": dict(sorted(r.flags.items())),
        "witness": r.witness,
        "reason": r.reason,
    }


def serialize_report(report: VerificationReport, machine: bool = False) -> str:
    """Render a report: tab-separated lines, or one JSON document."""
    records = report.sorted_records()
    summary = _summary(records)
    if machine:
        payload = {"records": [_record_payload(r) for r in records], "summary": summary}
        return json.dumps(payload, indent=2) + "\n"
    lines = []
    for r in records:
        dims = ",".join(f"{k}={v}" for k, v in sorted(r.dims.items()))
        flags = ",".join(f"{k}={'yes' if v else 'no'}" for k, v in sorted(r.flags.items()))
        lines.append(
            "\t".join(
                [
                    r.pair_id,
                    r.check,
                    r.anchor,
                    r.status,
                    "asserted" if r.asserted else "reported",
                    dims or "-",
                    flags or "-",
                    r.witness or r.reason or "-",
                ]
            )
        )
    lines.append(
        "# checks={checks} pass={pass} fail={fail} not-applicable={not-applicable}"
        " asserted-failures={asserted-failures}".format(**summary)
    )
    return "\n".join(lines) + "\n"
