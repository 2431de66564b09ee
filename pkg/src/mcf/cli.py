"""``mcf`` command line tool.

Exit status is 0 on success, 1 on usage errors and 2 on domain errors
(loops, non-integer orbits, non-unimodular substitutions, degenerate orbits).
"""

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from importlib import resources

from . import dynamics, emit, geometry, symbolic
from .algorithms import ALGORITHM_NAMES, algorithm
from .errors import MCFError

DESK_ITERATIONS = 10**6
FULL_ITERATIONS = 10**8

SYMBOLS = {"e": math.e, "pi": math.pi}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("%s: error: %s" % (self.prog, message))


def load_schema(command):
    """The JSON schema shipped for ``command``'s ``--format json`` output."""
    return json.loads(resources.files("mcf").joinpath("schemas", command + ".json").read_text())


def parse_vector(text):
    """``"1,e,pi"`` or ``"3,1/2,4"``; any symbol or decimal makes the vector float."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise UsageError("vector needs 3 comma separated entries, got %r" % text)
    out = []
    for p in parts:
        if p.lower() in SYMBOLS:
            out.append(SYMBOLS[p.lower()])
            continue
        try:
            out.append(Fraction(p) if "." not in p and "e" not in p.lower() else float(p))
        except (ValueError, ZeroDivisionError):
            raise UsageError("cannot parse vector entry %r" % p) from None
    if any(isinstance(c, float) for c in out):
        out = [float(c) for c in out]
    else:
        out = [int(c) if c.denominator == 1 else c for c in out]
    if any(c < 0 for c in out) or not any(out):
        raise UsageError("vector entries must be nonnegative and not all zero: %r" % text)
    return tuple(out)


def _positive(name):
    def conv(s):
        try:
            v = int(float(s)) if "e" in s.lower() else int(s)
        except ValueError:
            raise argparse.ArgumentTypeError("%s must be an integer, got %r" % (name, s))
        if v < 1:
            raise argparse.ArgumentTypeError("%s must be >= 1, got %d" % (name, v))
        return v
    return conv


def _algo(s):
    try:
        return algorithm(s)
    except KeyError as e:
        raise argparse.ArgumentTypeError(e.args[0])


def _vec(s):
    try:
        return parse_vector(s)
    except UsageError as e:
        raise argparse.ArgumentTypeError(str(e))


def _jsonable_vector(v):
    return [str(c) if isinstance(c, Fraction) else c for c in v]


def _ratio(q):
    return str(q) if isinstance(q, Fraction) else q


# --- subcommands ---------------------------------------------------------

def cmd_matrices(args):
    algo = args.algo
    if args.format == "json":
        return emit.write_json({
            "algo": algo.name,
            "branches": [{"label": b.label, "matrix": [list(r) for r in b.matrix],
                          "inverse": [[_ratio(c) for c in r] for r in b.inverse],
                          "det": b.det} for b in algo.branches],
        })
    lines = []
    for b in algo.branches:
        lines.append("M_%s  (det %d)" % (b.label, b.det))
        lines += ["  [%s]" % " ".join("%d" % c for c in r) for r in b.matrix]
    return ("\n".join(lines) + "\n").encode()


def cmd_substitutions(args):
    algo = args.algo
    if args.format == "json":
        return emit.write_json({
            "algo": algo.name,
            "branches": [{"label": b.label, "substitution": list(b.substitution.images),
                          "dual_substitution": list(b.dual_substitution.images)}
                         for b in algo.branches],
        })
    lines = []
    for b in algo.branches:
        lines.append("sigma_%s = {%s}   sigma*_%s = {%s}"
                     % (b.label, b.substitution, b.label, b.dual_substitution))
    return ("\n".join(lines) + "\n").encode()


def cmd_cylinders(args):
    cells = geometry.enumerate_cylinders(args.algo, args.n)
    if args.format == "json":
        return emit.write_json({
            "algo": args.algo.name, "n": args.n,
            "cells": [{"word": list(c.word), "rays": [list(r) for r in c.rays],
                       "area": str(c.area_fraction())} for c in cells],
        })
    if args.format == "text":
        return "".join("%s  %s\n" % (" ".join(c.word), c.area_fraction()) for c in cells).encode()
    return emit.write_svg(emit.cylinder_scene(cells, labels=args.n == 1))


def cmd_invariant_measure(args):
    n = args.iterations or DESK_ITERATIONS
    h = dynamics.invariant_measure_histogram(args.algo, n, args.ndivs, args.seed)
    if args.format == "json":
        return emit.write_json({
            "algo": h.algo, "ndivs": h.ndivs, "total": h.total, "restarts": h.restarts,
            "seed": args.seed,
            "cells": [{"i": i, "j": j, "k": k, "up": up, "count": c}
                      for i, j, k, up, c in h.cells()],
        })
    if args.format == "svg":
        return emit.write_svg(emit.histogram_scene(h))
    return emit.write_csv(["i", "j", "k", "up", "count"],
                          ([i, j, k, int(up), c] for i, j, k, up, c in h.cells()))


def cmd_natural_extension(args):
    n = args.iterations or 1200
    states = dynamics.natural_extension_sample(args.algo, n, seed=args.seed)
    if args.format == "json":
        cols = dynamics.NATURAL_EXTENSION_COLUMNS
        return emit.write_json({"algo": args.algo.name, "seed": args.seed,
                                "states": [dict(zip(cols, s.row())) for s in states]})
    if args.format == "svg":
        return emit.write_svg(emit.points_scene([[(s.px, s.py) for s in states],
                                                 [(s.pax, s.pay) for s in states]]))
    return emit.write_csv(dynamics.NATURAL_EXTENSION_COLUMNS, (s.row() for s in states))


def _scale(args):
    orbits = args.orbits or (30 if args.paper_scale else 10)
    iters = args.iterations or (FULL_ITERATIONS if args.paper_scale else DESK_ITERATIONS)
    return orbits, iters


def cmd_lyapunov(args):
    orbits, iters = _scale(args)
    t = dynamics.lyapunov_table(args.algo, orbits, iters, args.seed)
    return emit.write_table(t, "json" if args.format == "json" else "text")


def cmd_lyapunov_compare(args):
    orbits, iters = _scale(args)
    names = args.algos.split(",") if args.algos else list(ALGORITHM_NAMES)
    try:
        algos = [algorithm(a) for a in names]
    except KeyError as e:
        raise UsageError(e.args[0]) from None
    rows = dynamics.lyapunov_comparison(algos, orbits, iters, args.seed)
    return emit.write_table(rows, "json" if args.format == "json" else "text")


def cmd_sadic(args):
    if args.integer:
        word = symbolic.s_adic_word_integer(args.algo, args.vector)
        coding = symbolic.integer_coding(args.algo, args.vector)[0]
    else:
        word = symbolic.s_adic_prefix(args.algo, args.vector, args.length)
        coding = args.algo.coding(tuple(float(c) for c in args.vector), 10)
    if args.format == "json":
        return emit.write_json({"algo": args.algo.name, "vector": _jsonable_vector(args.vector),
                                "word": word, "coding": list(coding)})
    return (word + "\n").encode()


def cmd_complexity(args):
    w = symbolic.s_adic_word(args.algo, args.vector, length=args.length)
    p = symbolic.factor_complexity(w, args.nmax)
    if args.format == "json":
        return emit.write_json({"algo": args.algo.name, "vector": _jsonable_vector(args.vector),
                                "word_length": len(w), "complexity": p})
    return (", ".join(map(str, p)) + "\n").encode()


def cmd_discrepancy(args):
    threads = dynamics.max_threads()
    if threads > 1:
        with ProcessPoolExecutor(threads) as ex:
            stats = symbolic.discrepancy_statistics(args.algo, args.sum, executor=ex)
    else:
        stats = symbolic.discrepancy_statistics(args.algo, args.sum)
    rows = []
    for v, d in stats.items():
        if isinstance(d, Exception):
            rows.append([*v, "", type(d).__name__, str(d)])
        else:
            rows.append([*v, d, "ok", ""])
    if args.format == "json":
        return emit.write_json({
            "algo": args.algo.name, "sum": args.sum,
            "entries": [{"v": list(r[:3]), "discrepancy": r[3] if r[4] == "ok" else None,
                         "status": r[4], "message": r[5]} for r in rows],
        })
    if args.format == "text":
        vals = [r[3] for r in rows if r[4] == "ok"]
        errs = len(rows) - len(vals)
        head = "%s sum=%d: %d vectors, %d errors" % (args.algo.name, args.sum, len(rows), errs)
        if vals:
            head += ", discrepancy min %.5g max %.5g" % (min(vals), max(vals))
        return (head + "\n").encode()
    return emit.write_csv(["v1", "v2", "v3", "discrepancy", "status", "message"], rows)


def cmd_eonestar(args):
    patch = geometry.e_one_star_iterate(args.algo, args.vector, args.n)
    faces = sorted(patch)
    if args.format == "json":
        return emit.write_json({"algo": args.algo.name, "vector": _jsonable_vector(args.vector),
                                "n": args.n,
                                "faces": [{"position": list(f.position), "type": f.type}
                                          for f in faces]})
    if args.format == "csv":
        return emit.write_csv(["x", "y", "z", "face_type"],
                              ([*f.position, f.type] for f in faces))
    return emit.write_svg(emit.patch_scene(faces))


# (handler, formats, default format)
COMMANDS = {
    "matrices": (cmd_matrices, ("text", "json"), "text"),
    "cylinders": (cmd_cylinders, ("svg", "json", "text"), "svg"),
    "invariant-measure": (cmd_invariant_measure, ("csv", "json", "svg"), "csv"),
    "natural-extension": (cmd_natural_extension, ("csv", "json", "svg"), "csv"),
    "lyapunov": (cmd_lyapunov, ("text", "json"), "text"),
    "lyapunov-compare": (cmd_lyapunov_compare, ("text", "json"), "text"),
    "substitutions": (cmd_substitutions, ("text", "json"), "text"),
    "sadic": (cmd_sadic, ("text", "json"), "text"),
    "complexity": (cmd_complexity, ("text", "json"), "text"),
    "discrepancy": (cmd_discrepancy, ("csv", "json", "text"), "csv"),
    "eonestar": (cmd_eonestar, ("svg", "csv", "json"), "svg"),
}


def build_parser():
    p = _Parser(prog="mcf", description="Multidimensional continued fraction algorithms in 3-d.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    pos = _positive

    def add(name, help, *opts):
        _, formats, default = COMMANDS[name]
        s = sub.add_parser(name, help=help)
        s.add_argument("--format", choices=formats, default=default)
        s.add_argument("--output", "-o", help="write here instead of stdout")
        if name != "lyapunov-compare":
            s.add_argument("--algo", type=_algo, default=algorithm("Brun"),
                           help="one of %s" % ", ".join(ALGORITHM_NAMES))
        for o in opts:
            o(s)
        return s

    def seed(s):
        s.add_argument("--seed", type=int, default=0)

    def vector(s):
        s.add_argument("--vector", type=_vec, default=(1, math.e, math.pi),
                       help="e.g. 1,e,pi or 3,1/2,4 (default 1,e,pi)")

    def iterations(s):
        s.add_argument("--iterations", type=pos("iterations"))

    def scale(s):
        s.add_argument("--orbits", type=pos("orbits"))
        s.add_argument("--paper-scale", action="store_true",
                       help="30 orbits of 10^8 iterations unless given explicitly")

    add("matrices", "branch matrices")
    add("substitutions", "substitutions and dual substitutions")
    add("cylinders", "n-cylinders", lambda s: s.add_argument("--n", type=pos("n"), default=2))
    add("invariant-measure", "orbit histogram on the simplex", seed, iterations,
        lambda s: s.add_argument("--ndivs", type=pos("ndivs"), default=30))
    add("natural-extension", "natural extension orbit (default 1200 steps)", seed, iterations)
    add("lyapunov", "Lyapunov exponents", seed, iterations, scale)
    ly = add("lyapunov-compare", "Lyapunov comparison table", seed, iterations, scale)
    ly.add_argument("--algos", help="comma separated (default all seven)")

    def sadic(s):
        s.add_argument("--length", type=pos("length"), default=40)
        s.add_argument("--integer", action="store_true",
                       help="finite word of an integer vector")

    add("sadic", "S-adic word prefix", vector, sadic)

    def cx(s):
        s.add_argument("--length", type=pos("length"), default=10000)
        s.add_argument("--nmax", type=int, default=20)

    add("complexity", "factor complexity", vector, cx)
    add("discrepancy", "discrepancy of all integer S-adic words of a given sum",
        lambda s: s.add_argument("--sum", type=pos("sum"), default=200))
    add("eonestar", "E1* patch", vector,
        lambda s: s.add_argument("--n", type=int, default=9))
    return p


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout.buffer
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        for name in ("nmax", "n"):
            if getattr(args, name, 0) is not None and getattr(args, name, 0) < 0:
                raise UsageError("--%s must be >= 0" % name)
        if args.command == "discrepancy" and args.sum < 3:
            raise UsageError("--sum must be >= 3")
        if args.command == "sadic" and args.integer and not all(
                isinstance(c, int) and c > 0 for c in args.vector):
            raise UsageError("--integer needs a vector of positive integers")
        data = COMMANDS[args.command][0](args)
    except UsageError as e:
        print(str(e), file=stderr)
        return 1
    except MCFError as e:
        print("error: %s" % e, file=stderr)
        return 2
    except ValueError as e:
        print("error: %s" % e, file=stderr)
        return 1
    if args.output:
        with open(args.output, "wb") as f:
            f.write(data)
    else:
        stdout.write(data)
        stdout.flush()
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
