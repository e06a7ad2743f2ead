"""Command line front end.

Targets are either builtin selectors (builtin:pair_full(heisenberg(1))) or
paths to JSON documents.  Exit codes: 0 when everything asserted passed,
1 when a validation fails or an asserted check misses, 2 for usage errors
and for pairs over the dimension cap (TENSORALG_MAX_DIM, default 8).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .catalog import (
    DocumentError,
    SelectorError,
    catalog_selectors,
    load_path,
    resolve_selector,
    serialize_report,
)
from .liealg import LieAlgebra, StructureError
from .pairs import Pair
from .tensor import construct_tensor, kappa_maps
from .verify import VerificationReport, verify_kunneth, verify_pair

_DEFAULT_CAP = 8


class _CapError(RuntimeError):
    pass


def _cap() -> int:
    raw = os.environ.get("TENSORALG_MAX_DIM", str(_DEFAULT_CAP))
    try:
        return int(raw)
    except ValueError:
        raise SelectorError(f"TENSORALG_MAX_DIM is not an integer: {raw!r}") from None


def _load(target: str) -> LieAlgebra | Pair:
    if target.startswith("builtin:"):
        return resolve_selector(target)
    return load_path(target)


def _load_pair(target: str) -> Pair:
    obj = _load(target)
    if not isinstance(obj, Pair):
        raise SelectorError(f"{target} names an algebra; this command needs a pair")
    cap = _cap()
    if obj.left_dim > cap:
        raise _CapError(
            f"pair dimension {obj.left_dim} exceeds the cap {cap};"
            " raise TENSORALG_MAX_DIM to allow it"
        )
    return obj


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _fmt_combo(v, names) -> str:
    terms = []
    for c, name in zip(v, names):
        if c == 0:
            continue
        if c == 1:
            terms.append(name)
        elif c == -1:
            terms.append(f"-{name}")
        else:
            terms.append(f"{c}*{name}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out = f"{out} - {t[1:]}" if t.startswith("-") else f"{out} + {t}"
    return out


def _fmt_vector(v) -> str:
    return "(" + ", ".join(str(c) for c in v) + ")"


def _symbol_names(pair: Pair, tensor) -> list[str]:
    names = []
    for k in range(tensor.dim):
        column = tensor.section.apply(tuple(1 if m == k else 0 for m in range(tensor.dim)))
        at = next(i for i, c in enumerate(column) if c != 0)
        i, a = tensor.symbols.split(at)
        names.append(f"{pair.algebra.name_of(i)}(x){pair.ideal_algebra.name_of(a)}")
    return names


def _cmd_validate(args) -> int:
    obj = _load(args.target)
    if isinstance(obj, Pair):
        cap = _cap()
        if obj.left_dim > cap:
            raise _CapError(
                f"pair dimension {obj.left_dim} exceeds the cap {cap};"
                " raise TENSORALG_MAX_DIM to allow it"
            )
        if args.machine:
            payload = {"kind": "pair", "algebra-dim": obj.left_dim, "ideal-dim": obj.right_dim}
            _emit(json.dumps(payload, indent=2) + "\n", args.out)
        else:
            _emit(f"pair ok: algebra dim {obj.left_dim}, ideal dim {obj.right_dim}\n", args.out)
    else:
        if args.machine:
            payload = {"kind": "algebra", "dim": obj.dim, "brackets": len(obj.brackets)}
            _emit(json.dumps(payload, indent=2) + "\n", args.out)
        else:
            _emit(
                f"algebra ok: dim {obj.dim}, {len(obj.brackets)} bracket entr"
                f"{'y' if len(obj.brackets) == 1 else 'ies'}\n",
                args.out,
            )
    return 0


def _cmd_tensor(args) -> int:
    pair = _load_pair(args.target)
    t = construct_tensor(pair)
    maps = kappa_maps(t)
    names = _symbol_names(pair, t)
    image = maps.kappa.image()
    if args.machine:
        payload = {
            "tensor": {"dim": t.dim, "basis": names},
            "diagonal": {"dim": maps.square.dim, "basis": [[str(c) for c in b] for b in maps.square.basis]},
            "exterior": {"dim": maps.exterior.dim},
            "j2": {"dim": maps.j2.dim, "basis": [[str(c) for c in b] for b in maps.j2.basis]},
            "multiplier": {"dim": maps.multiplier.dim, "basis": [[str(c) for c in b] for b in maps.multiplier.basis]},
            "kappa-image": {"dim": image.dim, "basis": [[str(c) for c in b] for b in image.basis]},
            "brackets": {
                f"t{i},t{j}": {f"t{k}": str(c) for k, c in enumerate(v) if c != 0}
                for (i, j), v in t.algebra.brackets
            },
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return 0
    lines = [f"tensor product: dim {t.dim}"]
    for k, name in enumerate(names):
        lines.append(f"  t{k} = [{name}]")
    lines.append(f"diagonal: dim {maps.square.dim}")
    lines.extend(f"  {_fmt_vector(b)}" for b in maps.square.basis)
    lines.append(f"exterior product: dim {maps.exterior.dim}")
    lines.append(f"j2: dim {maps.j2.dim}")
    lines.extend(f"  {_fmt_vector(b)}" for b in maps.j2.basis)
    lines.append(f"multiplier: dim {maps.multiplier.dim}")
    lines.extend(f"  {_fmt_vector(b)}" for b in maps.multiplier.basis)
    lines.append(f"evaluation image in L: dim {image.dim}")
    lines.extend(f"  {_fmt_combo(b, pair.algebra.basis_names)}" for b in image.basis)
    lines.append("brackets:")
    if t.algebra.is_abelian():
        lines.append("  all brackets vanish")
    else:
        tensor_names = tuple(f"t{k}" for k in range(t.dim))
        for (i, j), v in t.algebra.brackets:
            lines.append(f"  [t{i}, t{j}] = {_fmt_combo(v, tensor_names)}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _theorem_list(raw: str | None) -> Sequence[str] | None:
    if raw is None:
        return None
    names = [part.strip() for part in raw.split(",") if part.strip()]
    if not names:
        raise SelectorError("--theorems must name at least one check")
    return names


def _finish_report(report: VerificationReport, args) -> int:
    _emit(serialize_report(report, machine=args.machine), args.out)
    return 1 if report.asserted_failures() else 0


def _cmd_verify(args) -> int:
    pair = _load_pair(args.target)
    try:
        report = verify_pair(pair, pair_id=args.target, checks=_theorem_list(args.theorems))
    except ValueError as e:
        raise SelectorError(str(e)) from None
    return _finish_report(report, args)


def _cmd_kunneth(args) -> int:
    pair_a = _load_pair(args.left)
    pair_b = _load_pair(args.right)
    cap = _cap()
    if pair_a.left_dim + pair_b.left_dim > cap:
        raise _CapError(
            f"direct sum dimension {pair_a.left_dim + pair_b.left_dim} exceeds the cap {cap};"
            " raise TENSORALG_MAX_DIM to allow it"
        )
    records = verify_kunneth(pair_a, pair_b, args.left, args.right)
    return _finish_report(VerificationReport(tuple(records)), args)


def _cmd_catalog(args) -> int:
    rows = []
    for selector in catalog_selectors():
        pair = resolve_selector(selector)
        rows.append((selector, pair.left_dim, pair.right_dim))
    if args.machine:
        payload = [{"selector": s, "algebra-dim": l, "ideal-dim": r} for s, l, r in rows]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        lines = [f"{s}\talgebra dim {l}\tideal dim {r}" for s, l, r in rows]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tensoralg",
        description="Tensor products of Lie algebra pairs and their decompositions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_output(p):
        p.add_argument("--machine", action="store_true", help="emit JSON instead of text")
        p.add_argument("--out", metavar="PATH", help="write output to a file")

    p = sub.add_parser("validate", help="check a document or selector and report shape")
    p.add_argument("target")
    with_output(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("tensor", help="construct the tensor product of a pair")
    p.add_argument("target")
    with_output(p)
    p.set_defaults(func=_cmd_tensor)

    p = sub.add_parser("verify", help="run the decomposition checks on a pair")
    p.add_argument("target")
    p.add_argument("--theorems", metavar="LIST", help="comma separated subset of checks")
    with_output(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("kunneth", help="direct sum decomposition checks for two pairs")
    p.add_argument("left")
    p.add_argument("right")
    with_output(p)
    p.set_defaults(func=_cmd_kunneth)

    p = sub.add_parser("catalog", help="list the built-in pair catalog")
    with_output(p)
    p.set_defaults(func=_cmd_catalog)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except _CapError as e:
        print(f"tensoralg: {e}", file=sys.stderr)
        return 2
    except SelectorError as e:
        print(f"tensoralg: {e}", file=sys.stderr)
        return 2
    except DocumentError as e:
        print(f"tensoralg: {e}", file=sys.stderr)
        return 1
    except StructureError as e:
        print(f"tensoralg: structure violation: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
