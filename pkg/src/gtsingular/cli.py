"""Command-line surface: generator images, module actions, point
classification, and the named verification suites.

Exit codes: 0 success (all checks passed), 1 verification failure,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .cache import Cache
from .distributions import DistVector, act_lie, canonical_basis_vec
from .gtformulas import phi_general
from .skewring import RingElement
from .suites import SUITES
from .tableau import (
    Point,
    Shift,
    SingularContext,
    canonical_test_point,
    classify_point,
)

_SHIFT_ATOM = re.compile(r"^\((\d+),(\d+)\)([+-]\d+)$")


class UsageError(ValueError):
    pass


def parse_shift_spec(spec: str) -> Shift:
    """Grammar: "id" or comma-separated "(k,i)+m" / "(k,i)-m" atoms."""
    spec = spec.strip()
    if spec == "id":
        return Shift.identity()
    comps: dict = {}
    body = spec.replace(" ", "")
    atom = r"\(\d+,\d+\)[+-]\d+"
    if not re.fullmatch(f"{atom}(,{atom})*", body):
        raise UsageError(f"bad shift spec {spec!r}")
    pieces = re.findall(atom, body)
    for piece in pieces:
        m = _SHIFT_ATOM.match(piece)
        if not m:
            raise UsageError(f"bad shift atom {piece!r}")
        k, i, off = int(m.group(1)), int(m.group(2)), int(m.group(3))
        comps[(k, i)] = comps.get((k, i), 0) + off
    return Shift(comps)


def shift_spec(sigma: Shift) -> str:
    if sigma.is_identity():
        return "id"
    return ",".join(
        f"({k},{i})+{m}" if m > 0 else f"({k},{i}){m}" for (k, i), m in sigma.items
    )


def parse_basis_spec(spec: str) -> tuple[str, Shift]:
    if ":" not in spec:
        raise UsageError(f"basis spec must look like KIND:SHIFTSPEC, got {spec!r}")
    kind, _, rest = spec.partition(":")
    if kind not in ("D1", "D2"):
        raise UsageError(f"basis kind must be D1 or D2, got {kind!r}")
    return kind, parse_shift_spec(rest)


def parse_gen(spec: str) -> tuple[int, int]:
    parts = spec.split(",")
    if len(parts) != 2:
        raise UsageError(f"generator spec must be r,s, got {spec!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise UsageError(f"generator spec must be r,s, got {spec!r}") from exc


def parse_singular(spec: str) -> tuple[int, int, int]:
    parts = spec.split(",")
    if len(parts) != 3:
        raise UsageError(f"singular spec must be k,i,j, got {spec!r}")
    try:
        k, i, j = (int(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"singular spec must be k,i,j, got {spec!r}") from exc
    return k, i, j


@dataclass
class RunConfig:
    n: int = 3
    singular: tuple[int, int, int] | None = None
    point: Point | None = None
    fmt: str = "text"
    cache_dir: Path | None = field(default=None)

    def cache(self) -> Cache:
        return Cache(self.cache_dir)

    def resolve_point(self) -> Point:
        if self.point is not None:
            return self.point
        if self.n == 3:
            return canonical_test_point(3)
        raise UsageError(f"no default point for order {self.n}; pass --point")

    def resolve_context(self) -> SingularContext:
        point = self.resolve_point()
        if point.n != self.n:
            raise UsageError(f"point has order {point.n}, expected {self.n}")
        k, i, j = self.singular if self.singular else (2, 1, 2)
        try:
            return SingularContext(point, k, i, j)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc


def _load_point(path: str) -> Point:
    try:
        return Point.load(path)
    except (OSError, json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read point file {path}: {exc}") from exc


def _config(args) -> RunConfig:
    cfg = RunConfig(fmt=args.format, cache_dir=args.cache)
    if getattr(args, "n", None) is not None:
        cfg.n = args.n
    if getattr(args, "point", None):
        cfg.point = _load_point(args.point)
        cfg.n = cfg.point.n if getattr(args, "n", None) is None else cfg.n
    if getattr(args, "singular", None):
        cfg.singular = parse_singular(args.singular)
    return cfg


def ring_element_text(a: RingElement) -> str:
    return repr(a)


def dist_vector_text(d: DistVector) -> str:
    if d.is_zero():
        return "0"
    from .textform import frac_text

    return "\n".join(
        f"{bv.kind}:{shift_spec(bv.sigma)} = {frac_text(c)}"
        for bv, c in d.sorted_items()
    )


def _emit(payload_json, payload_text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload_json, sort_keys=True, indent=2))
    else:
        print(payload_text)


def cmd_phi(args) -> int:
    cfg = _config(args)
    r, s = parse_gen(args.gen)
    key = {"op": "phi", "n": cfg.n, "gen": [r, s]}
    cache = cfg.cache()
    cached = cache.get("phi", key)
    if cached is not None:
        element = RingElement.from_json(cached)
    else:
        try:
            element = phi_general(cfg.n, r, s)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        cache.put("phi", key, element.to_json())
    _emit(element.to_json(), ring_element_text(element), cfg.fmt)
    return 0


def cmd_act(args) -> int:
    cfg = _config(args)
    ctx = cfg.resolve_context()
    r, s = parse_gen(args.gen)
    kind, sigma = parse_basis_spec(args.basis)
    try:
        sigma.validate(ctx.n)
        bv, sign = canonical_basis_vec(ctx, kind, sigma)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    key = {
        "op": "act",
        "n": cfg.n,
        "point": ctx.v.to_json(),
        "singular": [ctx.k, ctx.i, ctx.j],
        "gen": [r, s],
        "basis": {"kind": bv.kind, "shift": bv.sigma.to_json(), "sign": sign},
    }
    cache = cfg.cache()
    cached = cache.get("act", key)
    if cached is not None:
        result = DistVector.from_json(ctx, cached)
    else:
        try:
            result = act_lie(ctx, (r, s), DistVector.basis(bv)).scale(sign)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        cache.put("act", key, result.to_json())
    _emit(result.to_json(), dist_vector_text(result), cfg.fmt)
    return 0


def cmd_classify(args) -> int:
    cfg = _config(args)
    point = cfg.resolve_point()
    cls = classify_point(point)
    payload = {"class": cls.tag}
    if cls.pair:
        payload["pair"] = list(cls.pair)
    _emit(payload, str(cls), cfg.fmt)
    return 0


def cmd_verify(args) -> int:
    cfg = _config(args)
    suite = args.suite or args.suite_flag
    if not suite:
        raise UsageError("pick a suite: " + ", ".join(sorted(SUITES)))
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from " + ", ".join(sorted(SUITES)))
    ctx = None
    if suite in ("singularity", "module", "appendix"):
        ctx = cfg.resolve_context()
        if ctx.n != 3:
            raise UsageError(f"suite {suite} is defined for order 3")
    report = SUITES[suite](ctx=ctx, n=cfg.n)
    lines = [f"suite {suite}: {report['passed']}/{report['total']} passed"]
    for failure in report.get("failures", []):
        lines.append(f"FAIL {json.dumps(failure, sort_keys=True)}")
    text = "\n".join(lines)
    if cfg.fmt == "json":
        slim = {k: v for k, v in report.items() if k != "checks"}
        print(json.dumps(slim, sort_keys=True, indent=2))
    else:
        print(text)
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gtsingular",
        description="Exact shift-operator algebra on Gelfand-Tsetlin tableaux",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_point=True):
        p.add_argument("--n", type=int, default=None, help="tableau order")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--cache", default=None, help="cache directory")
        if with_point:
            p.add_argument("--point", default=None, help="point JSON file")
            p.add_argument("--singular", default=None, help="singular pair k,i,j")

    p_phi = sub.add_parser("phi", help="print a generator image in the skew ring")
    common(p_phi, with_point=False)
    p_phi.add_argument("--gen", required=True, help="generator r,s")
    p_phi.set_defaults(func=cmd_phi)

    p_act = sub.add_parser("act", help="act with a generator on a basis distribution")
    common(p_act)
    p_act.add_argument("--gen", required=True, help="generator r,s")
    p_act.add_argument("--basis", required=True, help="basis vector KIND:SHIFTSPEC")
    p_act.set_defaults(func=cmd_act)

    p_cls = sub.add_parser("classify", help="classify a tableau point")
    common(p_cls)
    p_cls.set_defaults(func=cmd_classify)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    common(p_ver)
    p_ver.add_argument("suite", nargs="?", default=None)
    p_ver.add_argument("--suite", dest="suite_flag", default=None)
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
