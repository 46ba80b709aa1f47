"""Command line surface.

Subcommands: trace, poly, coords, pairing, ray, plane, limitset,
domain-check, examples.  Exit codes: 1 usage, 2 violated mathematical
precondition, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import math
import os
import re
import sys

from . import emit, limitset, tracer
from .config import RunConfig, load_config
from .domain import membership
from .errors import MaskitError, NumericalError, PreconditionError, WordParseError
from .lamination import coords_from_word, thurston_pairing
from .tracepoly import trace_poly
from .words import (
    ParameterPoint,
    cyclic_reduce,
    format_complex,
    parse_complex,
    parse_word,
    trace_at,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        raise UsageExit(message)


class UsageExit(SystemExit):
    def __init__(self, message):
        print(f"error: {message}", file=sys.stderr)
        super().__init__(1)


def _common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", default=argparse.SUPPRESS, help="key=value config file")
    sub.add_argument(
        "--emit",
        default=argparse.SUPPRESS,
        choices=["jsonl", "csv", "svg", "pgm"],
        help="output format",
    )
    sub.add_argument("--out", default=argparse.SUPPRESS, help="output directory")
    sub.add_argument(
        "--seed-theta",
        type=float,
        default=argparse.SUPPRESS,
        help="bending scale for ray/plane seeding",
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="maskit12")
    parser.add_argument("--config", default=None)
    parser.add_argument("--emit", default=None, choices=["jsonl", "csv", "svg", "pgm"])
    parser.add_argument("--out", default=".")
    parser.add_argument("--seed-theta", type=float, default=0.05)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("trace", help="numeric trace of a word at a parameter point")
    p.add_argument("word")
    p.add_argument("tau1", nargs="?", default="0,2")
    p.add_argument("tau2", nargs="?", default="0,2")
    _common(p)

    p = subs.add_parser("poly", help="exact trace polynomial of a word")
    p.add_argument("word")
    p.add_argument("--json", action="store_true", help="machine form")
    _common(p)

    p = subs.add_parser("coords", help="canonical coordinates of a simple curve")
    p.add_argument("word")
    _common(p)

    p = subs.add_parser("pairing", help="Thurston symplectic pairing of two curves")
    p.add_argument("word1")
    p.add_argument("word2")
    _common(p)

    p = subs.add_parser("domain-check", help="membership verdict for a parameter point")
    p.add_argument("--tau1", required=True)
    p.add_argument("--tau2", required=True)
    _common(p)

    p = subs.add_parser("ray", help="trace one pleating ray to its cusp")
    p.add_argument("--curve", required=True)
    p.add_argument("--theta-start", type=float, default=None)
    p.add_argument("--theta-end", type=float, default=8.0)
    p.add_argument("--steps", type=int, default=4000)
    _common(p)

    p = subs.add_parser("plane", help="trace a pleating plane as pseudo-rays")
    p.add_argument("--c1", required=True)
    p.add_argument("--c2", required=True)
    p.add_argument("--grid", type=int, default=9)
    p.add_argument("--theta-start", type=float, default=None)
    _common(p)

    p = subs.add_parser("limitset", help="render a limit-set approximation")
    p.add_argument("--tau1", required=True)
    p.add_argument("--tau2", required=True)
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--viewport", default="-3,-0.5,3,4.5")
    p.add_argument("--px", default="800,600")
    _common(p)

    p = subs.add_parser("examples", help="run a named closed-form regression")
    p.add_argument("name", choices=["ex1", "ex2", "ex3", "ex3a", "ex4"])
    _common(p)

    return parser


def _config_from(args) -> RunConfig:
    if getattr(args, "config", None):
        return load_config(args.config)
    return RunConfig()


def _emit_rays(args, rays, stem: str) -> list[str]:
    fmt = args.emit or "jsonl"
    os.makedirs(args.out, exist_ok=True)
    written = []
    if fmt in ("jsonl", "csv"):
        text = emit.polyline_jsonl(rays) if fmt == "jsonl" else emit.polyline_csv(rays)
        path = os.path.join(args.out, f"{stem}.{fmt}")
        emit.write_text(path, text)
        written.append(path)
    elif fmt == "svg":
        path = os.path.join(args.out, f"{stem}.svg")
        emit.write_text(path, emit.polyline_svg(rays))
        written.append(path)
    else:
        raise PreconditionError(f"format {fmt!r} does not apply to paths")
    return written


def cmd_trace(args) -> int:
    w = parse_word(args.word)
    tau1, tau2 = parse_complex(args.tau1), parse_complex(args.tau2)
    print(format_complex(trace_at(w, tau1, tau2)))
    return 0


def cmd_poly(args) -> int:
    poly = trace_poly(cyclic_reduce(parse_word(args.word)))
    if args.json:
        import json

        print(json.dumps(poly.to_json_dict()))
    else:
        print(poly.pretty())
    return 0


def cmd_coords(args) -> int:
    print(coords_from_word(parse_word(args.word)))
    return 0


def cmd_pairing(args) -> int:
    c1 = coords_from_word(parse_word(args.word1))
    c2 = coords_from_word(parse_word(args.word2))
    print(thurston_pairing(c1, c2))
    return 0


def cmd_domain_check(args) -> int:
    p = ParameterPoint(parse_complex(args.tau1), parse_complex(args.tau2))
    print(membership(p))
    return 0


def cmd_ray(args) -> int:
    cfg = _config_from(args)
    theta0 = args.theta_start if args.theta_start is not None else args.seed_theta
    ray = tracer.trace_ray(
        parse_word(args.curve), theta0, args.theta_end, args.steps, cfg
    )
    written = _emit_rays(args, [ray], f"ray_{args.curve}")
    end = ray.end()
    print(
        f"{len(ray.samples)} samples, terminus {ray.terminus}"
        + (f"({ray.cusp_curve})" if ray.cusp_curve else "")
        + f" at ({format_complex(end.tau1)}, {format_complex(end.tau2)})"
    )
    for path in written:
        print(f"wrote {path}")
    return 0


def cmd_plane(args) -> int:
    cfg = _config_from(args)
    theta0 = args.theta_start if args.theta_start is not None else args.seed_theta
    rays = tracer.trace_plane(
        parse_word(args.c1), parse_word(args.c2), args.grid, theta0, cfg=cfg
    )
    written = _emit_rays(args, rays, f"plane_{args.c1}_{args.c2}")
    cusps = sum(1 for r in rays if r.terminus == "CUSP")
    print(f"{len(rays)} pseudo-rays, {cusps} reached a cusp")
    for path in written:
        print(f"wrote {path}")
    return 0


def cmd_limitset(args) -> int:
    p = ParameterPoint(parse_complex(args.tau1), parse_complex(args.tau2))
    parts = [float(x) for x in args.viewport.split(",")]
    if len(parts) != 4:
        raise PreconditionError("viewport needs x0,y0,x1,y1")
    w, h = (int(x) for x in args.px.split(","))
    vp = limitset.Viewport(complex(parts[0], parts[1]), complex(parts[2], parts[3]), w, h)
    pts, inside = limitset.limit_points_array(p, args.depth)
    fmt = args.emit or "pgm"
    os.makedirs(args.out, exist_ok=True)
    path = os.path.join(args.out, f"limitset.{fmt}")
    limitset.render(pts, vp, path, fmt)
    note = "" if inside else " (point not proved inside; decorative)"
    print(f"{len(pts)} orbit points{note}")
    print(f"wrote {path}")
    return 0


def _check(label: str, value: float, tol: float, failures: list[str]) -> None:
    status = "PASS" if value <= tol else "FAIL"
    print(f"  {status} {label}: {value:.3e} (tol {tol:.1e})")
    if value > tol:
        failures.append(label)


def cmd_examples(args) -> int:
    from .words import word

    cfg = _config_from(args)
    failures: list[str] = []
    name = args.name
    theta0 = args.seed_theta

    if name == "ex1":
        ray = tracer.trace_ray(word("t"), theta0, 8.0, cfg=cfg)
        dev = max(
            max(
                abs(s.point.tau1.real),
                abs(s.point.tau2.real),
                abs(s.point.tau1.imag - s.point.tau2.imag),
            )
            for s in ray.samples
        )
        end = ray.end()
        print(f"ex1: pleating ray of t ({len(ray.samples)} samples)")
        _check("line deviation", dev, 1e-9, failures)
        _check("residual", max(s.residual for s in ray.samples), 1e-10, failures)
        _check("cusp vs (2i,2i)", abs(end.tau1 - 2j) + abs(end.tau2 - 2j), 1e-9, failures)
        rays = [ray]
    elif name == "ex2":
        ray = tracer.trace_ray(word("aBT"), theta0, 8.0, cfg=cfg)
        dev = max(
            max(
                abs(s.point.tau1.real - 2),
                abs(s.point.tau2.real + 2),
                abs(s.point.tau1.imag - s.point.tau2.imag),
            )
            for s in ray.samples
        )
        end = ray.end()
        print(f"ex2: pleating ray of aBT ({len(ray.samples)} samples)")
        _check("line deviation", dev, 1e-8, failures)
        _check(
            "cusp vs (2+2i,-2+2i)",
            abs(end.tau1 - (2 + 2j)) + abs(end.tau2 - (-2 + 2j)),
            1e-8,
            failures,
        )
        rays = [ray]
    elif name in ("ex3", "ex3a"):
        other = "aBT" if name == "ex3" else "AbT"
        rays = tracer.trace_plane(word("t"), word(other), 21, theta0, cfg=cfg)
        dev = max(
            max(
                abs(s.point.tau1.real + s.point.tau2.real),
                abs(s.point.tau1.imag - s.point.tau2.imag),
            )
            for r in rays
            for s in r.samples
        )
        corner = tracer.find_plane_corner(word("t"), word(other), rays, cfg)
        target = (1 if name == "ex3" else -1) + 1j * math.sqrt(3)
        print(f"{name}: pleating plane of (t, {other}) ({len(rays)} pseudo-rays)")
        _check("plane tau2 = -conj(tau1)", dev, 1e-8, failures)
        _check(f"corner vs {format_complex(target)}", abs(corner.tau1 - target), 1e-8, failures)
    elif name == "ex4":
        rays = tracer.trace_plane(word("t"), word("aTAt"), 34, theta0, cfg=cfg)
        t_ends = [r.end() for r in rays if r.cusp_curve == "t"]
        hyp = max(abs(e.tau1.imag * e.tau2.imag - 4) for e in t_ends)
        corner = tracer.find_plane_corner(word("t"), word("aTAt"), rays, cfg)
        print(f"ex4: pleating plane of (t, aTAt) ({len(rays)} pseudo-rays)")
        print(f"  {len(t_ends)} boundary samples on the t-cusp locus")
        _check("cusp locus Im*Im = 4", hyp, 1e-8, failures)
        _check(
            "corner vs (4i,i)", abs(corner.tau1 - 4j) + abs(corner.tau2 - 1j), 1e-9, failures
        )
    else:  # pragma: no cover
        raise PreconditionError(f"unknown example {name}")

    for path in _emit_rays(args, rays, name):
        print(f"wrote {path}")
    fmt = args.emit or "jsonl"
    if fmt != "svg":
        os.makedirs(args.out, exist_ok=True)
        svg_path = os.path.join(args.out, f"{name}.svg")
        emit.write_text(svg_path, emit.polyline_svg(rays))
        print(f"wrote {svg_path}")
    if failures:
        print(f"{name}: FAIL ({', '.join(failures)})")
        return 3
    print(f"{name}: PASS")
    return 0


_COMMANDS = {
    "trace": cmd_trace,
    "poly": cmd_poly,
    "coords": cmd_coords,
    "pairing": cmd_pairing,
    "domain-check": cmd_domain_check,
    "ray": cmd_ray,
    "plane": cmd_plane,
    "limitset": cmd_limitset,
    "examples": cmd_examples,
}


_TUPLE_FLAGS = ("--tau1", "--tau2", "--viewport")
_NEG_TUPLE_RE = re.compile(r"^-\d[\d.,eE+-]*$")


def _join_negative_tuples(argv: list[str]) -> list[str]:
    """Fold ``--tau2 -1,5`` into ``--tau2=-1,5`` so argparse does not
    mistake a value with a negative leading number for an option."""
    out, skip = [], False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if (
            tok in _TUPLE_FLAGS
            and i + 1 < len(argv)
            and _NEG_TUPLE_RE.match(argv[i + 1])
        ):
            out.append(f"{tok}={argv[i + 1]}")
            skip = True
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _join_negative_tuples(list(argv))
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageExit:
        return 1
    except WordParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except MaskitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
