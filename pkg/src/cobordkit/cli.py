"""Command-line front end.

Exit codes: 0 when every check passes, 1 when an identity or validation
fails (the first counterexample is printed), 2 for bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass, field

from . import chern, clutch, hexprism
from .chern import StructureKind
from .common import DomainError, Report, jsonable
from .exactring import Partition, partitions
from .lattice import (
    IsotropyMode,
    VectorAssignment,
    check_lemma_equivalence,
    gl_equivalent,
    is_characteristic,
    validate_isotropy,
)
from .polytope import ExceptionalMarking, SimplePolytope

FORMAT_ENV = "COBORDKIT_FORMAT"
_VALUE_FLAGS = {"--n", "--a", "--b", "--a-range", "--b-range", "--partition", "--structure",
                "--input", "--out", "--format"}
_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


class InputError(Exception):
    pass


def parse_range(text: str) -> range:
    """``"lo..hi"`` -> inclusive integer range."""
    m = _RANGE.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"malformed range {text!r}; expected lo..hi")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


@dataclass
class CliConfig:
    command: str
    n: int | None = None
    a: int | None = None
    b: int | None = None
    a_range: range | None = None
    b_range: range | None = None
    structure: str = "standard"
    partition: str | None = None
    input: str | None = None
    out: str | None = None
    format: str = "table"
    extra: dict = field(default_factory=dict)


def _default_format() -> str:
    fmt = os.environ.get(FORMAT_ENV, "table").lower()
    return fmt if fmt in ("table", "json") else "table"


def _common(p: argparse.ArgumentParser, *flags):
    for flag in flags:
        if flag in ("n", "a", "b"):
            p.add_argument(f"--{flag}", type=int)
        elif flag in ("a-range", "b-range"):
            p.add_argument(f"--{flag}", type=parse_range)
    p.add_argument("--format", choices=("table", "json"), default=_default_format())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cobordkit",
                                     description="Chern numbers and bordism certificates for CP^(n-1)-bundles over CP^1.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chern", help="Chern numbers of P^n(a)")
    _common(p, "n", "a")
    p.add_argument("--structure", default="standard", choices=("standard", "twisted"))
    p.add_argument("--partition")

    p = sub.add_parser("verify", help="check a bordism identity over a parameter range")
    vsub = p.add_subparsers(dest="identity", required=True)
    for name in ("independence", "twisted-null", "triple", "gluing"):
        q = vsub.add_parser(name)
        _common(q, "n", "a", "b", "a-range", "b-range")

    p = sub.add_parser("hexprism", help="certificate for the hexagon-prism bordism")
    _common(p, "n", "a", "b")
    p.add_argument("--out")

    p = sub.add_parser("charfun", help="characteristic / isotropy function checks")
    csub = p.add_subparsers(dest="action", required=True)
    q = csub.add_parser("validate")
    q.add_argument("--input", required=True)
    _common(q)

    p = sub.add_parser("glequiv", help="GL_n(Z)-equivalence of two assignments")
    p.add_argument("--input", required=True)
    _common(p)
    return parser


def _normalise_argv(argv: list[str]) -> list[str]:
    # argparse refuses values such as "-3..3" after an option; glue them on.
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _need(value, flag):
    if value is None:
        raise InputError(f"{flag} is required")
    return value


def _values(single, rng, flag):
    if rng is not None:
        return list(rng)
    return [_need(single, flag)]


def _emit(cfg: CliConfig, payload: dict, lines: list[str]):
    if cfg.format == "json":
        print(json.dumps(jsonable(payload), indent=2))
    else:
        print("\n".join(lines))


def _table(header: list[str], rows: list[list]) -> list[str]:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    fmt = lambda r: "  ".join(c.rjust(w) for c, w in zip(r, widths))
    return [fmt(cells[0]), fmt(["-" * w for w in widths])] + [fmt(r) for r in cells[1:]]


def closed_value(n: int, a: int, kind: StructureKind, I: Partition) -> int:
    if kind is StructureKind.STANDARD:
        return chern.chern_number_closed(n, I)
    return chern.chern_number_closed_twisted(n, a, I)


def cmd_chern(cfg: CliConfig) -> int:
    n = _need(cfg.n, "--n")
    a = _need(cfg.a, "--a")
    kind = StructureKind.parse(cfg.structure)
    if n < 1:
        raise DomainError(f"--n must be >= 1, got {n}")
    if cfg.partition:
        parts = [Partition.parse(cfg.partition)]
        if parts[0].n != n:
            raise DomainError(f"partition {parts[0]} does not sum to {n}")
    else:
        parts = partitions(n)
    total = chern.total_chern_class(n, a, kind)
    rows = []
    for I in parts:
        ring_value = chern.chern_number(n, a, kind, I)
        rows.append([I, ring_value, closed_value(n, a, kind, I)])
    agree = all(r[1] == r[2] for r in rows)
    payload = {
        "n": n, "a": a, "structure": kind.value,
        "total_chern_class": str(total),
        "numbers": [{"partition": r[0], "ring": r[1], "closed": r[2]} for r in rows],
        "agree": agree,
    }
    lines = [f"P^{n}({a}), {kind.value} structure, c = {total}"]
    lines += _table(["partition", "ring", "closed"], [[str(r[0]), r[1], r[2]] for r in rows])
    if not agree:
        lines.append("MISMATCH between ring and closed form")
    _emit(cfg, payload, lines)
    return 0 if agree else 1


def cmd_verify(cfg: CliConfig) -> int:
    n = _need(cfg.n, "--n")
    if n < 1:
        raise DomainError(f"--n must be >= 1, got {n}")
    ident = cfg.extra["identity"]
    reports: list[Report] = []
    if ident == "independence":
        reports.append(chern.verify_a_independence(n, _values(cfg.a, cfg.a_range, "--a-range")))
    elif ident == "twisted-null":
        for a in _values(cfg.a, cfg.a_range, "--a"):
            reports.append(chern.verify_twisted_null(n, a))
    else:
        check = chern.verify_triple if ident == "triple" else clutch.verify_gluing_bordism
        for a in _values(cfg.a, cfg.a_range, "--a"):
            for b in _values(cfg.b, cfg.b_range, "--b"):
                reports.append(check(n, a, b))
    failed = next((r for r in reports if not r.ok), None)
    payload = {
        "identity": ident, "n": n,
        "verdict": "pass" if failed is None else "fail",
        "checks": [r.to_json() for r in reports],
        "witness": None if failed is None else jsonable(failed.witness),
    }
    lines = []
    for r in reports:
        params = {k: r.details.get(k) for k in ("a", "b", "a_values") if k in r.details}
        line = f"{r.name} n={n} " + " ".join(f"{k}={v}" for k, v in params.items())
        if "labels" in r.details:
            line += " labels=" + ",".join(r.details["labels"])
        lines.append(f"{'PASS' if r.ok else 'FAIL'}  {line}")
        if not r.ok:
            lines.append(f"      counterexample: {jsonable(r.witness)}")
    _emit(cfg, payload, lines)
    return 0 if failed is None else 1


def cmd_hexprism(cfg: CliConfig) -> int:
    n = _need(cfg.n, "--n")
    a = _need(cfg.a, "--a")
    b = _need(cfg.b, "--b")
    if n < 2:
        raise DomainError(f"the hexagon-prism construction needs n >= 2, got {n}")
    cert = hexprism.certificate(n, a, b)
    if cfg.out:
        try:
            with open(cfg.out, "w") as fh:
                json.dump(cert, fh, indent=2)
                fh.write("\n")
        except OSError as exc:
            raise InputError(f"cannot write {cfg.out}: {exc}") from exc
    lines = [f"hexagon prism n={n} a={a} b={b}: {cert['verdict'].upper()}",
             f"isotropy valid: {cert['isotropy_valid']}"]
    for comp in cert["boundaries"]:
        lines.append(f"  {comp['facet']}: {comp['label']}  b'={comp['b_parameter']}  "
                     f"orientation={comp['orientation_sign']:+d}  U={comp['witness']['U']}")
    for I, row in cert.get("chern_tables", {}).get("boundary_signed_sum", {}).items():
        lines.append(f"  {I}: {' + '.join(map(str, row[:-1]))} = {row[-1]}")
    if cert["witness"]:
        lines.append(f"witness: {cert['witness']}")
    if cfg.out:
        lines.append(f"certificate written to {cfg.out}")
    _emit(cfg, cert, lines)
    return 0 if cert["verdict"] == "pass" else 1


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def cmd_charfun(cfg: CliConfig) -> int:
    """Validate ``{"polytope", "assignment"[, "exceptional"]}``.

    Without ``exceptional`` the assignment is checked as a characteristic
    function; with it, as an isotropy function (basis condition plus the
    restriction criterion).
    """
    data = _load_json(cfg.input)
    if not isinstance(data, dict) or "polytope" not in data or "assignment" not in data:
        raise InputError("input must hold 'polytope' and 'assignment'")
    P = SimplePolytope.from_json(data["polytope"])
    lam = VectorAssignment.from_json(data["assignment"])
    if data.get("exceptional"):
        E = ExceptionalMarking(P, frozenset(data["exceptional"]))
        reports = [
            validate_isotropy(P, E, lam, IsotropyMode.SARKAR_CONDITION),
            validate_isotropy(P, E, lam, IsotropyMode.INDEPENDENCE_ONLY),
            check_lemma_equivalence(P, E, lam),
        ]
        ok = reports[0].ok and reports[2].ok
    else:
        reports = [is_characteristic(P, lam)]
        ok = reports[0].ok
    payload = {"verdict": "pass" if ok else "fail", "checks": [r.to_json() for r in reports]}
    lines = [f"{'PASS' if r.ok else 'FAIL'}  {r.name}" + ("" if r.ok else f"  witness={jsonable(r.witness)}")
             for r in reports]
    lines.append(f"verdict: {payload['verdict']}")
    _emit(cfg, payload, lines)
    return 0 if ok else 1


def cmd_glequiv(cfg: CliConfig) -> int:
    data = _load_json(cfg.input)
    try:
        A = VectorAssignment.from_json(data["A"])
        B = VectorAssignment.from_json(data["B"])
    except (KeyError, TypeError) as exc:
        raise InputError("input must hold assignments 'A' and 'B'") from exc
    w = gl_equivalent(A, B, data.get("perm_blocks", []), bool(data.get("allow_sign", False)))
    payload = {"found": w is not None, "witness": None if w is None else w.to_json()}
    lines = ["not equivalent within the searched family"] if w is None else [
        f"equivalent: U={w.to_json()['U']}", f"sigma={w.to_json()['sigma']}", f"signs={w.to_json()['signs']}"]
    _emit(cfg, payload, lines)
    return 0 if w is not None else 1


COMMANDS = {
    "chern": cmd_chern,
    "verify": cmd_verify,
    "hexprism": cmd_hexprism,
    "charfun": cmd_charfun,
    "glequiv": cmd_glequiv,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = _normalise_argv(list(sys.argv[1:] if argv is None else argv))
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = CliConfig(
        command=ns.command,
        n=getattr(ns, "n", None), a=getattr(ns, "a", None), b=getattr(ns, "b", None),
        a_range=getattr(ns, "a_range", None), b_range=getattr(ns, "b_range", None),
        structure=getattr(ns, "structure", "standard"), partition=getattr(ns, "partition", None),
        input=getattr(ns, "input", None), out=getattr(ns, "out", None),
        format=ns.format,
        extra={k: getattr(ns, k) for k in ("identity", "action") if hasattr(ns, k)},
    )
    try:
        return COMMANDS[cfg.command](cfg)
    except (DomainError, InputError) as exc:
        print(f"cobordkit {cfg.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
