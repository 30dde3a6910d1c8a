"""Command-line front door.

Exit codes: 0 success, 1 usage or parse error, 2 precondition violation,
3 internal consistency failure (two routes that must agree did not).
"""

from __future__ import annotations

import json
import random
import sys
from fractions import Fraction
from typing import Sequence

from . import formulas, lab, lie, winding
from .spectrum import classify as classify_spectrum
from .spectrum import spectrum as spectrum_of
from .spectrum import spectrum_to_json
from .core import (
    ConsistencyError,
    MeanderType,
    NotFrobeniusError,
    ParseError,
    PreconditionError,
    build_graph,
    index_naive,
    parse_type,
)

__all__ = ["run", "main"]

USAGE = """\
usage: meanderkit VERB ...

verbs:
  index MEANDER [--verify] [--json]          index via the signature
  signature MEANDER [--refined] [--json]     winding-down move sequence
  homotopy MEANDER [--json]                  plane homotopy type
  spectrum MEANDER [--verify] [--json]       eigenvalues of a Frobenius meander
  check MEANDER [--json]                     Frobenius test plus index
  generate --moves K [--seed S] [--json]     random Frobenius meander
  generate UPMOVE... [--json]                wind up an explicit sequence
  enumerate N [--workers K]                  all meanders of order N
  oracle index MEANDER [--trials T] [--seed S] [--json]
  oracle principal MEANDER [--json]
  oracle spectrum MEANDER [--json]
  oracle cybe MEANDER [--json]
  family parabolic A K B [--json]
  family biparabolic A B K COPIES [--json]
  search gcd [--config F] [--max-coef C] [--n-max N] [--seed S]
             [--sample-size Z] [--workers K] [-o FILE]
  search unimodality [--config F] [--n-max N] [-o FILE]
  search blocks [--config F] [--n-max N] [-o FILE]
  diagram MEANDER [--svg] [-o FILE]

MEANDER text is block sizes, e.g. "6|1/2|3|2"."""


class _Usage(Exception):
    pass


class _Args:
    """Tiny argv helper: positionals plus --flag / --key value options."""

    def __init__(self, argv: Sequence[str], flags: set[str], options: set[str]):
        self.positional: list[str] = []
        self.flags: set[str] = set()
        self.options: dict[str, str] = {}
        items = list(argv)
        i = 0
        while i < len(items):
            arg = items[i]
            if arg in flags:
                self.flags.add(arg)
            elif arg in options:
                if i + 1 >= len(items):
                    raise _Usage(f"option {arg} needs a value")
                self.options[arg] = items[i + 1]
                i += 1
            elif arg.startswith("--") or (arg == "-o"):
                raise _Usage(f"unknown option {arg}")
            else:
                self.positional.append(arg)
            i += 1

    def int_option(self, name: str, default: int | None) -> int | None:
        if name not in self.options:
            return default
        try:
            return int(self.options[name])
        except ValueError:
            raise _Usage(f"option {name} needs an integer, got {self.options[name]!r}")


def _emit(text: str, out) -> None:
    print(text, file=out)


def _frac_json(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        return _dispatch(list(argv), out, err)
    except _Usage as exc:
        _emit(f"error: {exc}", err)
        _emit(USAGE, err)
        return 1
    except ParseError as exc:
        _emit(f"error: {exc}", err)
        return 1
    except winding.WindUpError as exc:
        _emit(f"error: {exc}", err)
        return 2
    except NotFrobeniusError as exc:
        _emit(f"error: {exc}", err)
        return 2
    except PreconditionError as exc:
        _emit(f"error: {exc}", err)
        return 2
    except ConsistencyError as exc:
        _emit(f"internal consistency failure: {exc}", err)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


def _dispatch(argv: list[str], out, err) -> int:
    if not argv or argv[0] in ("-h", "--help", "help"):
        _emit(USAGE, out)
        return 0
    verb = argv[0]
    rest = argv[1:]
    handlers = {
        "index": _cmd_index,
        "signature": _cmd_signature,
        "homotopy": _cmd_homotopy,
        "spectrum": _cmd_spectrum,
        "check": _cmd_check,
        "generate": _cmd_generate,
        "enumerate": _cmd_enumerate,
        "oracle": _cmd_oracle,
        "family": _cmd_family,
        "search": _cmd_search,
        "diagram": _cmd_diagram,
    }
    if verb not in handlers:
        raise _Usage(f"unknown verb {verb!r}")
    return handlers[verb](rest, out, err)


def _one_meander(args: _Args) -> MeanderType:
    if len(args.positional) != 1:
        raise _Usage("expected exactly one MEANDER argument")
    return parse_type(args.positional[0])


def _cmd_index(argv, out, err) -> int:
    args = _Args(argv, {"--json", "--verify"}, set())
    m = _one_meander(args)
    sig = winding.signature_simplified(m)
    ix = winding.index_from_signature(sig)
    if "--verify" in args.flags:
        naive = index_naive(m)
        refined = winding.index_from_signature(winding.signature_refined(m))
        if not (ix == naive == refined):
            _emit(
                f"internal consistency failure: index disagreement "
                f"signature={ix} naive={naive} refined={refined}",
                err,
            )
            return 3
    if "--json" in args.flags:
        _emit(json.dumps({"meander": str(m), "index": ix}), out)
    else:
        _emit(str(ix), out)
    return 0


def _cmd_signature(argv, out, err) -> int:
    args = _Args(argv, {"--json", "--refined", "--verify"}, set())
    m = _one_meander(args)
    if "--refined" in args.flags:
        sig = winding.signature_refined(m)
    else:
        sig = winding.signature_simplified(m)
    if "--verify" in args.flags:
        if winding.index_from_signature(sig) != index_naive(m):
            _emit("internal consistency failure: signature index mismatch", err)
            return 3
    text = winding.signature_to_text(sig)
    if "--json" in args.flags:
        payload = {
            "meander": str(m),
            "signature": [str(mv) for mv in sig],
            "index": winding.index_from_signature(sig),
            "frobenius": winding.is_frobenius(sig),
        }
        _emit(json.dumps(payload), out)
    else:
        _emit(text, out)
    return 0


def _cmd_homotopy(argv, out, err) -> int:
    args = _Args(argv, {"--json"}, set())
    m = _one_meander(args)
    ht = winding.homotopy_type(m)
    if "--json" in args.flags:
        payload = {
            "meander": str(m),
            "symbols": [
                {"c": s.c, "circles": s.nested_cycles, "center_point": s.has_center_path}
                for s in ht.symbols
            ],
        }
        _emit(json.dumps(payload), out)
    else:
        _emit(str(ht), out)
    return 0


def _cmd_spectrum(argv, out, err) -> int:
    args = _Args(argv, {"--json", "--verify"}, set())
    m = _one_meander(args)
    dims = spectrum_of(m)
    if "--verify" in args.flags:
        if lie.ad_spectrum(m) != dims:
            _emit("internal consistency failure: spectrum oracle disagreement", err)
            return 3
    if "--json" in args.flags:
        _emit(json.dumps(spectrum_to_json(dims)), out)
    else:
        flags = classify_spectrum(dims)
        _emit(" ".join(f"{e}:{dims[e]}" for e in sorted(dims)), out)
        _emit(
            f"symmetric={str(flags.symmetric).lower()} "
            f"unbroken={str(flags.unbroken).lower()} "
            f"unimodal={str(flags.unimodal).lower()} "
            f"strictly_unimodal={str(flags.strictly_unimodal).lower()}",
            out,
        )
    return 0


def _cmd_check(argv, out, err) -> int:
    args = _Args(argv, {"--json"}, set())
    m = _one_meander(args)
    sig = winding.signature_simplified(m)
    ix = winding.index_from_signature(sig)
    frob = winding.is_frobenius(sig)
    if "--json" in args.flags:
        _emit(json.dumps({"meander": str(m), "frobenius": frob, "index": ix}), out)
    else:
        _emit(("frobenius" if frob else "not frobenius") + f" index={ix}", out)
    return 0


def _cmd_generate(argv, out, err) -> int:
    args = _Args(argv, {"--json"}, {"--moves", "--seed"})
    if args.positional:
        moves = winding.parse_up_moves(" ".join(args.positional))
        m = winding.wind_up(moves)
        if "--json" in args.flags:
            _emit(json.dumps({"meander": str(m)}), out)
        else:
            _emit(str(m), out)
        return 0
    moves = args.int_option("--moves", None)
    if moves is None:
        raise _Usage("generate needs --moves K or an explicit up-move sequence")
    seed = args.int_option("--seed", None)
    if seed is None:
        seed = random.SystemRandom().randrange(2**32)
    m = winding.generate_frobenius(moves, seed)
    if "--json" in args.flags:
        _emit(json.dumps({"meander": str(m), "seed": seed, "moves": moves}), out)
    else:
        _emit(str(m), out)
        _emit(f"seed={seed} moves={moves}", out)
    return 0


def _cmd_enumerate(argv, out, err) -> int:
    args = _Args(argv, set(), {"--workers"})
    if len(args.positional) != 1 or not args.positional[0].isdigit():
        raise _Usage("enumerate needs a positive order N")
    n = int(args.positional[0])
    workers = args.int_option("--workers", 1)
    if workers is not None and workers < 1:
        raise _Usage("--workers must be >= 1")
    # enumeration is a stream in lexicographic order; extra workers have
    # nothing to parallelize here, the flag is accepted for interface parity
    for m in winding.enumerate_meanders(n):
        _emit(str(m), out)
    return 0


def _cmd_oracle(argv, out, err) -> int:
    if not argv:
        raise _Usage("oracle needs a subcommand: index, principal, spectrum, cybe")
    sub = argv[0]
    args = _Args(argv[1:], {"--json"}, {"--trials", "--seed"})
    m = _one_meander(args)
    as_json = "--json" in args.flags
    if sub == "index":
        trials = args.int_option("--trials", 5)
        seed = args.int_option("--seed", 0)
        ix = lie.index_oracle(m, trials=trials, seed=seed)
        if as_json:
            _emit(json.dumps({"meander": str(m), "index": ix, "trials": trials, "seed": seed}), out)
        else:
            _emit(f"{ix} trials={trials} seed={seed}", out)
        return 0
    if sub == "principal":
        fhat = lie.principal_element(m)
        if fhat.is_diagonal:
            diag = [_frac_json(x) for x in fhat.diagonal()]
            if as_json:
                _emit(json.dumps({"meander": str(m), "diag": diag}), out)
            else:
                _emit("diag " + " ".join(str(x) for x in diag), out)
        else:
            entries = {f"{i},{j}": _frac_json(v) for (i, j), v in sorted(fhat.entries.items())}
            _emit(json.dumps({"meander": str(m), "matrix": entries}), out)
        return 0
    if sub == "spectrum":
        dims = lie.ad_spectrum(m)
        if as_json:
            _emit(json.dumps(spectrum_to_json(dims)), out)
        else:
            _emit(" ".join(f"{e}:{dims[e]}" for e in sorted(dims)), out)
        return 0
    if sub == "cybe":
        ok = lie.cybe_residual(m)
        if as_json:
            _emit(json.dumps({"meander": str(m), "cybe_zero": ok}), out)
        else:
            _emit("true" if ok else "false", out)
        return 0 if ok else 3
    raise _Usage(f"unknown oracle subcommand {sub!r}")


def _cmd_family(argv, out, err) -> int:
    if not argv:
        raise _Usage("family needs a subcommand: parabolic or biparabolic")
    sub = argv[0]
    args = _Args(argv[1:], {"--json"}, set())
    values = []
    for p in args.positional:
        try:
            values.append(int(p))
        except ValueError:
            raise _Usage(f"family arguments must be integers, got {p!r}")
    if sub == "parabolic":
        if len(values) != 3:
            raise _Usage("family parabolic needs A K B")
        m = formulas.family_parabolic(*values)
    elif sub == "biparabolic":
        if len(values) != 4:
            raise _Usage("family biparabolic needs A B K COPIES")
        m = formulas.family_biparabolic(*values)
    else:
        raise _Usage(f"unknown family {sub!r}")
    if "--json" in args.flags:
        _emit(json.dumps({"meander": str(m), "index": index_naive(m)}), out)
    else:
        _emit(str(m), out)
    return 0


def _cmd_search(argv, out, err) -> int:
    if not argv:
        raise _Usage("search needs a subcommand: gcd, unimodality, blocks")
    sub = argv[0]
    args = _Args(
        argv[1:],
        set(),
        {"--config", "--max-coef", "--n-max", "--seed", "--sample-size", "--workers", "-o"},
    )
    config: dict = {}
    if "--config" in args.options:
        try:
            with open(args.options["--config"], "r", encoding="utf-8") as fh:
                config = lab.load_config(fh.read())
        except OSError as exc:
            raise _Usage(f"cannot read config: {exc}")
    max_coef = args.int_option("--max-coef", config.get("max_coef", 2))
    n_max = args.int_option("--n-max", config.get("n_max"))
    seed = args.int_option("--seed", config.get("seed", 0))
    sample_size = args.int_option("--sample-size", config.get("sample_size"))
    workers = args.int_option("--workers", 1)

    if sub == "gcd":
        n_max = 18 if n_max is None else n_max
        frob, nonfrob = lab.five_block_meanders(n_max)
        report = lab.search_gcd_conditions(
            max_coef, frob, nonfrob, seed=seed, sample_size=sample_size, workers=workers
        )
    elif sub == "unimodality":
        n_max = 12 if n_max is None else n_max
        report = lab.scan_unimodality(n_max)
    elif sub == "blocks":
        n_max = 12 if n_max is None else n_max
        report = lab.scan_block_measures(n_max)
    else:
        raise _Usage(f"unknown search subcommand {sub!r}")
    text = report.to_json()
    if "-o" in args.options:
        with open(args.options["-o"], "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        _emit(text, out)
    if sub == "blocks" and report.counterexamples:
        _emit("internal consistency failure: block-measure counterexample", err)
        return 3
    return 0


# ---------------------------------------------------------------------------
# Diagrams
# ---------------------------------------------------------------------------


def _arc_depths(arcs: list[tuple[int, int]]) -> dict[tuple[int, int], int]:
    depth = {}
    for u, v in arcs:
        depth[(u, v)] = 1 + sum(1 for x, y in arcs if x < u and v < y)
    return depth


def ascii_diagram(m: MeanderType) -> str:
    """Static arc diagram: top arcs above the vertex line, bottom below."""
    g = build_graph(m)
    n = m.n
    width = max(2 * n - 1, 1)
    top_arcs = sorted((min(u, v), max(u, v)) for u, v, s in g.edges() if s == "top")
    bot_arcs = sorted((min(u, v), max(u, v)) for u, v, s in g.edges() if s == "bottom")

    def rows(arcs: list[tuple[int, int]], corner: str) -> list[list[str]]:
        depth = _arc_depths(arcs)
        height = max(depth.values(), default=0)
        grid = [[" "] * width for _ in range(height)]
        for (u, v), d in depth.items():
            bar = d - 1
            cu, cv = 2 * (u - 1), 2 * (v - 1)
            grid[bar][cu] = corner
            grid[bar][cv] = corner
            for c in range(cu + 1, cv):
                grid[bar][c] = "-"
            for rr in range(bar + 1, height):
                grid[rr][cu] = "|"
                grid[rr][cv] = "|"
        return grid

    top_grid = rows(top_arcs, ".")
    bot_grid = rows(bot_arcs, "'")
    bot_grid.reverse()
    vertex_row = " ".join("o" for _ in range(n))
    lines = ["".join(r).rstrip() for r in top_grid]
    lines.append(vertex_row)
    lines.extend("".join(r).rstrip() for r in bot_grid)
    return "\n".join(lines)


def svg_diagram(m: MeanderType) -> str:
    """SVG 1.1 arc diagram, semicircles over a horizontal baseline."""
    g = build_graph(m)
    n = m.n
    spacing = 40
    margin = 30
    radius_unit = spacing / 2
    max_span = max(
        [abs(v - u) for u, v, _ in g.edges()] or [1]
    )
    baseline = margin + max_span * radius_unit
    width = 2 * margin + spacing * (n - 1)
    height = 2 * baseline
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<line x1="{margin}" y1="{baseline:.1f}" x2="{width - margin:.0f}" '
        f'y2="{baseline:.1f}" stroke="#ccc" stroke-width="1"/>',
    ]

    def x(v: int) -> float:
        return margin + spacing * (v - 1)

    for u, v, side in sorted(g.edges()):
        r = (x(v) - x(u)) / 2
        sweep = 1 if side == "top" else 0
        parts.append(
            f'<path d="M {x(u):.1f} {baseline:.1f} A {r:.1f} {r:.1f} 0 0 {sweep} '
            f'{x(v):.1f} {baseline:.1f}" fill="none" stroke="black" stroke-width="1.5"/>'
        )
    for v in range(1, n + 1):
        parts.append(
            f'<circle cx="{x(v):.1f}" cy="{baseline:.1f}" r="3" fill="black"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


def _cmd_diagram(argv, out, err) -> int:
    args = _Args(argv, {"--svg"}, {"-o"})
    m = _one_meander(args)
    text = svg_diagram(m) if "--svg" in args.flags else ascii_diagram(m)
    if "-o" in args.options:
        with open(args.options["-o"], "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        _emit(text, out)
    return 0
