"""Command-line front end.

Usage examples::

    sl2orbits classify -x 1 -y 0 -z 0 --json
    sl2orbits normal-form -x 0 -y 1 -z 0
    sl2orbits flow -x 1 -y 1 -z 1 --t-end 1 --method exact
    sl2orbits ruling --lambda 1 --theta 0.5 --t-min -2 --t-max 2 --samples 5
    sl2orbits sample --class one_sheeted --lambda 1 -n 100 --seed 7
    sl2orbits kks -px 1 -py 0 -pz 0 --v 0,0,-2 --w 0,-2,0

Exit status: 0 on success, 1 on usage errors, 2 on domain errors (the
error code is printed as ``error: <code>: <message>`` on stderr, or as a
JSON object on stdout when ``--json`` is given).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Sequence, TextIO

from . import algebra, morse, orbits, ruling, symplectic
from .algebra import LieVector
from .errors import SL2Error


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2
        raise UsageError(f"{self.prog}: {message}")


def fmt(v: float) -> str:
    return format(float(v), ".17g")


def _triple(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected X,Y,Z, got {text!r}")
    try:
        return tuple(float(p) for p in parts)  # type: ignore[return-value]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sl2orbits", description="Adjoint orbits of sl(2,R).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def coords(sp):
        sp.add_argument("-x", type=float, required=True)
        sp.add_argument("-y", type=float, required=True)
        sp.add_argument("-z", type=float, required=True)
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("classify", help="orbit class and lambda")
    coords(sp)
    sp.add_argument("--tol", type=float, default=orbits.DEFAULT_TOL)

    coords(sub.add_parser("normal-form", help="conjugator onto the canonical representative"))
    coords(sub.add_parser("exp", help="matrix exponential"))

    sp = sub.add_parser("flow", help="gradient-flow trajectory of f = yz as CSV")
    coords(sp)
    sp.add_argument("--t-end", type=float, required=True)
    sp.add_argument("--step", type=float, default=1e-3)
    sp.add_argument("--method", choices=("exact", "rk4"), default="rk4")
    sp.add_argument("--out")

    sp = sub.add_parser("ruling", help="ruling lines of the one-sheeted hyperboloid as CSV")
    sp.add_argument("--lambda", dest="lam", type=float, required=True)
    sp.add_argument("--theta", type=float)
    sp.add_argument("--px", type=float)
    sp.add_argument("--py", type=float)
    sp.add_argument("--pz", type=float)
    sp.add_argument("--t-min", type=float, required=True)
    sp.add_argument("--t-max", type=float, required=True)
    sp.add_argument("--samples", type=int, required=True)
    sp.add_argument("--out")

    sp = sub.add_parser("sample", help="seeded points on an orbit as CSV")
    sp.add_argument("--class", dest="orbit", required=True,
                    choices=[k.value for k in orbits.OrbitKind])
    sp.add_argument("--lambda", dest="lam", type=float, default=1.0)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--out")

    sp = sub.add_parser("kks", help="induced KKS form at p on two tangent vectors")
    sp.add_argument("-px", type=float, required=True)
    sp.add_argument("-py", type=float, required=True)
    sp.add_argument("-pz", type=float, required=True)
    sp.add_argument("--v", type=_triple, required=True)
    sp.add_argument("--w", type=_triple, required=True)
    sp.add_argument("--json", action="store_true")
    return p


def _limit_fields(tag) -> str:
    if isinstance(tag, morse.ConvergesTo):
        return "converges_to " + " ".join(fmt(c) for c in tag.point)
    return "escapes"


def _limit_json(tag) -> dict:
    if isinstance(tag, morse.ConvergesTo):
        return {"tag": "converges_to", "point": list(tag.point)}
    return {"tag": "escapes"}


def _class_dict(c: orbits.OrbitClass) -> dict:
    d = {"class": c.name}
    if c.lam is not None:
        d["lambda"] = c.lam
    return d


def _emit(out: TextIO, args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        out.write(json.dumps(payload, separators=(",", ":")) + "\n")
    else:
        out.write(text + "\n")


def _csv_writer(buf: io.StringIO):
    return csv.writer(buf, lineterminator="\n")


def _flush_csv(buf: io.StringIO, path: str | None, out: TextIO) -> None:
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        out.write(buf.getvalue())


def cmd_classify(args, out: TextIO) -> None:
    c = orbits.classify(LieVector(args.x, args.y, args.z), args.tol)
    text = c.name if c.lam is None else f"{c.name} lambda={fmt(c.lam)}"
    _emit(out, args, _class_dict(c), text)


def cmd_normal_form(args, out: TextIO) -> None:
    r = orbits.normal_form(LieVector(args.x, args.y, args.z))
    g = list(r.conjugator.mat)
    rep = list(r.representative)
    payload = {**_class_dict(r.orbit), "conjugator": g, "representative": rep}
    text = "\n".join([
        f"class {r.orbit.name}" + ("" if r.orbit.lam is None else f" lambda={fmt(r.orbit.lam)}"),
        "conjugator " + " ".join(fmt(v) for v in g),
        "representative " + " ".join(fmt(v) for v in rep),
    ])
    _emit(out, args, payload, text)


def cmd_exp(args, out: TextIO) -> None:
    m = algebra.exp(LieVector(args.x, args.y, args.z)).mat
    payload = {"matrix": [[m.m11, m.m12], [m.m21, m.m22]]}
    text = f"{fmt(m.m11)} {fmt(m.m12)}\n{fmt(m.m21)} {fmt(m.m22)}"
    _emit(out, args, payload, text)


def cmd_flow(args, out: TextIO) -> None:
    p0 = (args.x, args.y, args.z)
    if args.method == "exact":
        tr = morse.flow_exact_trajectory(p0, args.t_end, args.step)
    else:
        tr = morse.flow_numeric(p0, args.t_end, args.step)
    buf = io.StringIO()
    buf.write(f"# limit_forward: {_limit_fields(tr.limit_forward)}\n")
    buf.write(f"# limit_backward: {_limit_fields(tr.limit_backward)}\n")
    w = _csv_writer(buf)
    w.writerow(["t", "x", "y", "z"])
    for t, p in zip(tr.times, tr.points):
        w.writerow([fmt(t), fmt(p[0]), fmt(p[1]), fmt(p[2])])
    _flush_csv(buf, args.out, out)
    if args.out:
        payload = {"rows": len(tr), "limit_forward": _limit_json(tr.limit_forward),
                   "limit_backward": _limit_json(tr.limit_backward)}
        text = (f"wrote {len(tr)} rows to {args.out}\n"
                f"limit_forward: {_limit_fields(tr.limit_forward)}\n"
                f"limit_backward: {_limit_fields(tr.limit_backward)}")
        _emit(out, args, payload, text)


def cmd_ruling(args, out: TextIO) -> None:
    point = (args.px, args.py, args.pz)
    if args.theta is not None and any(v is not None for v in point):
        raise UsageError("give either --theta or --px/--py/--pz, not both")
    if args.theta is not None:
        lines = [ruling.rotate_line(l, args.theta) for l in ruling.base_lines(args.lam)]
    elif all(v is not None for v in point):
        lines = list(ruling.lines_through_point(point, args.lam))
    else:
        raise UsageError("ruling needs --theta or all of --px/--py/--pz")
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    if args.samples == 1:
        ts = [args.t_min]
    else:
        h = (args.t_max - args.t_min) / (args.samples - 1)
        ts = [args.t_min + i * h for i in range(args.samples)]
    buf = io.StringIO()
    w = _csv_writer(buf)
    w.writerow(["family", "t", "x", "y", "z"])
    for line in lines:
        for t in ts:
            p = line.point(t)
            w.writerow([line.family.value, fmt(t), fmt(p[0]), fmt(p[1]), fmt(p[2])])
    _flush_csv(buf, args.out, out)


def cmd_sample(args, out: TextIO) -> None:
    if args.n < 1:
        raise UsageError("-n must be >= 1")
    try:
        cls = orbits.OrbitClass.from_name(args.orbit, args.lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    buf = io.StringIO()
    w = _csv_writer(buf)
    w.writerow(["x", "y", "z"])
    for p in orbits.orbit_sample(cls, args.n, args.seed):
        w.writerow([fmt(p.x), fmt(p.y), fmt(p.z)])
    _flush_csv(buf, args.out, out)


def cmd_kks(args, out: TextIO) -> None:
    val = symplectic.kks(LieVector(args.px, args.py, args.pz), args.v, args.w)
    _emit(out, args, {"kks": val}, fmt(val))


COMMANDS = {
    "classify": cmd_classify,
    "normal-form": cmd_normal_form,
    "exp": cmd_exp,
    "flow": cmd_flow,
    "ruling": cmd_ruling,
    "sample": cmd_sample,
    "kks": cmd_kks,
}


def run(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        for name in ("x", "y", "z", "px", "py", "pz", "lam", "theta", "t_end", "step"):
            v = getattr(args, name, None)
            if v is not None and not math.isfinite(v):
                raise UsageError(f"--{name} must be finite")
        COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return 1
    except SL2Error as exc:
        if getattr(args, "json", False):
            out.write(json.dumps({"error": exc.code, "message": str(exc)}, separators=(",", ":")) + "\n")
        err.write(f"error: {exc.code}: {exc}\n")
        return 2
    except ValueError as exc:
        err.write(f"sl2orbits: {exc}\n")
        return 1
    return 0


def main() -> None:
    try:
        code = run(sys.argv[1:])
    except SystemExit as exc:  # --help
        code = exc.code if isinstance(exc.code, int) else 0
    sys.exit(code)


if __name__ == "__main__":
    main()
