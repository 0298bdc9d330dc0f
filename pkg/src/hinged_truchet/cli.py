"""Command line front end.

Exit codes: 0 ok, 2 usage error, 3 domain error, 4 failed --check.
"""
import argparse
import os
import sys
import tempfile

from . import __version__
from .boundary import sim_value
from .boxdim import estimate
from .geometry import containment_ratio, interpret, is_non_crossing
from .lsystem import DepthLimitError, WordError, parse_ops, parse_script
from .geometry import ClosedMismatch
from .render import DESIGNS, RenderStyle, animation_frames, svg_curve, svg_tiling
from .tiling import random_grid

USAGE, DOMAIN, CHECK = 2, 3, 4
STYLE_KEYS = ("design", "stroke_width", "corner", "palette", "background")


class UsageError(Exception):
    pass


def write_atomic(path, text):
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        # mkstemp creates 0600; give the file the usual umask-based mode
        um = os.umask(0)
        os.umask(um)
        os.chmod(tmp, 0o666 & ~um)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(path, text):
    if path:
        write_atomic(path, text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def read_config(path):
    conf = {}
    with open(path, encoding="utf-8") as f:
        for n, line in enumerate(f, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError("%s:%d: expected key=value" % (path, n))
            k, v = (s.strip() for s in line.split("=", 1))
            k = k.replace("-", "_")
            if k not in STYLE_KEYS:
                raise UsageError("%s:%d: unknown key %r" % (path, n, k))
            conf[k] = v
    return conf


def make_style(args):
    conf = read_config(args.config) if args.config else {}
    for k in STYLE_KEYS:
        v = getattr(args, k, None)
        if v is not None:
            conf[k] = v
    kw = {}
    if "design" in conf:
        kw["design"] = None if conf["design"] in ("centres", "centers", "none") else conf["design"]
    if "stroke_width" in conf:
        kw["stroke_width"] = float(conf["stroke_width"])
    if "corner" in conf:
        kw["corner"] = conf["corner"]
    if "palette" in conf:
        kw["palette"] = tuple(c.strip() for c in conf["palette"].split(",") if c.strip())
    if "background" in conf:
        kw["background"] = conf["background"] or None
    try:
        return RenderStyle(**kw)
    except ValueError as e:
        raise UsageError(str(e))


def cmd_rewrite(args):
    print(parse_script(args.script).word())
    return 0


def cmd_draw(args):
    script = parse_script(args.script)
    path = interpret(script.word())
    _emit(args.svg, svg_curve([path], make_style(args)))
    if args.check:
        status = 0
        if not is_non_crossing(path):
            print("check failed: curve crosses itself", file=sys.stderr)
            status = CHECK
        if script.ops:
            r = containment_ratio(script.ops, len(script.ops))
            if not r < args.bound:
                print("check failed: containment ratio %.6f >= %g" % (r, args.bound), file=sys.stderr)
                status = CHECK
        return status
    return 0


def _grid(args):
    if args.w < 1 or args.h < 1:
        raise UsageError("grid dimensions must be positive")
    return random_grid(args.w, args.h, args.seed, args.torus)


def cmd_tiling(args):
    svg = svg_tiling(_grid(args), args.op, args.theta, make_style(args))
    _emit(args.svg, svg)
    return 0


def cmd_animate(args):
    if args.frames < 2:
        raise UsageError("--frames must be at least 2")
    frames = animation_frames(_grid(args), args.op, args.frames, make_style(args))
    for k, svg in enumerate(frames):
        write_atomic(os.path.join(args.outdir, "frame_%03d.svg" % k), svg)
    return 0


def cmd_simvalue(args):
    _emit(args.json, sim_value(parse_ops(args.ops)).to_json() + "\n")
    return 0


def cmd_boxdim(args):
    est = estimate(parse_ops(args.ops), args.depth)
    _emit(args.json, est.to_json() + "\n")
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("%s: %s" % (self.prog, message))


def _style_flags(p):
    p.add_argument("--config", help="key=value file with style defaults")
    p.add_argument("--design", choices=DESIGNS + ("centres",))
    p.add_argument("--stroke-width", dest="stroke_width")
    p.add_argument("--corner", choices=("rounded", "sharp"))
    p.add_argument("--palette", help="comma separated colours")
    p.add_argument("--background")


def _grid_flags(p, w=None, h=None):
    p.add_argument("--w", type=int, required=w is None, default=w)
    p.add_argument("--h", type=int, required=h is None, default=h)
    p.add_argument("--seed", type=int, required=w is None, default=0)
    p.add_argument("--torus", action="store_true")
    p.add_argument("--op", type=int, choices=(0, 1), default=0)


def build_parser():
    ap = _Parser(prog="hinged-truchet", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version="%(prog)s " + __version__)
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("rewrite", help="print the rewritten word of a script")
    p.add_argument("--script", required=True)
    p.set_defaults(func=cmd_rewrite)

    p = sub.add_parser("draw", help="draw a script as SVG")
    p.add_argument("--script", required=True)
    p.add_argument("--svg")
    p.add_argument("--check", action="store_true",
                   help="also test non-crossing and containment")
    p.add_argument("--bound", type=float, default=1.0,
                   help="containment ratio must stay below this (default 1)")
    _style_flags(p)
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("tiling", help="random Truchet tiling at a hinge angle")
    _grid_flags(p)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--svg")
    _style_flags(p)
    p.set_defaults(func=cmd_tiling)

    p = sub.add_parser("animate", help="hinge animation frames")
    _grid_flags(p, 4, 4)
    p.add_argument("--frames", type=int, required=True)
    p.add_argument("--outdir", required=True)
    _style_flags(p)
    p.set_defaults(func=cmd_animate)

    p = sub.add_parser("simvalue", help="sim value report for B repeated")
    p.add_argument("--ops", required=True)
    p.add_argument("--json")
    p.set_defaults(func=cmd_simvalue)

    p = sub.add_parser("boxdim", help="box-counting estimate for B repeated")
    p.add_argument("--ops", required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--json")
    p.set_defaults(func=cmd_boxdim)
    return ap


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as e:
        print("usage error: %s" % e, file=sys.stderr)
        return USAGE
    except (WordError, ClosedMismatch, DepthLimitError, ValueError) as e:
        print("error: %s" % e, file=sys.stderr)
        return DOMAIN


if __name__ == "__main__":
    sys.exit(main())
