"""Command line front end.

Exit codes: 0 success, 1 parse or domain error, 2 a checked property
failed, 3 the step limit was exceeded.
"""

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

from . import oracle
from .buchberger import DEFAULT_STEP_LIMIT, GbTrace, H_ADDED, check_trace, cpd, gb, is_member, strip_zeros
from .core import cp, normal_form
from .domains import Integers, PolynomialRing, Rationals
from .errors import MeasureViolationError, ParseError, RRGBError, StepLimitExceeded
from .parsing import parse_element, parse_ring, split_list

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CHECK_FAILED = 2
EXIT_STEP_LIMIT = 3

FORMAT_ENV = "RRGB_FORMAT"


@dataclass
class Request:
    command: str
    ring: str
    inputs: dict
    trace: bool = False
    format: str = "text"
    bound: object = None
    step_limit: int = DEFAULT_STEP_LIMIT


def _elements(texts, ring):
    return tuple(parse_element(t, ring) for t in texts)


def _trace_json(trace: GbTrace, ring):
    out = []
    for r in trace:
        out.append({
            "action": r.action,
            "measure": list(r.measure),
            "i": r.i,
            "j": r.j,
            "added": None if r.added is None else ring.render(r.added),
            "reductions": r.reductions,
        })
    return out


def _gb_output(basis, trace, ring):
    return [ring.render(b) for b in basis], trace.stats()


def _check(C, ring, bound, step_limit):
    """Verdicts for the input basis and for its completion."""
    G, trace = gb(C, ring, step_limit)
    C = strip_zeros(C, ring)
    info = {}
    props = {}
    try:
        check_trace(trace)
        props["trace_measure_decreasing"] = all(r.witness is not None for r in trace if r.action == H_ADDED)
    except MeasureViolationError:
        props["trace_measure_decreasing"] = False
    props["critical_pairs_resolve"] = all(
        ring.is_zero(cpd(p.first, p.second, k, l, G, ring))
        for k in range(1, len(G) + 1) for l in range(k, len(G) + 1)
        for p in cp(G[k - 1], G[l - 1], ring))

    if ring.finite or isinstance(ring, Integers):
        if ring.finite:
            if bound not in (None, "full"):
                raise ParseError("only --bound full applies to finite rings")
            universe = oracle.universe_for(ring)
        else:
            if bound == "full":
                raise ParseError("Z is infinite; give a numeric --bound")
            bound = oracle.default_bound(C) if bound is None else bound
            universe = oracle.universe_for(ring, bound)
        info["input_confluent"] = oracle.is_confluent(C, ring, universe)
        info["input_criterion"] = oracle.main_theorem_criterion(C, ring, bound)
        props["criterion_matches_confluence"] = info["input_confluent"] == info["input_criterion"]
        props["output_confluent"] = oracle.is_confluent(G, ring, universe)
        props["output_criterion"] = oracle.main_theorem_criterion(G, ring, bound)
        if ring.finite:
            props["ideal_preserved"] = oracle.ideal_enumerate(C, ring) == oracle.ideal_enumerate(G, ring)
            grows = True
            for n, r in enumerate(r for r in trace if r.action == H_ADDED):
                before = G[:len(C) + n]
                grows &= oracle.red_set(before, ring, universe) < oracle.red_set(before + (r.added,), ring, universe)
            props["red_set_grows"] = grows
        else:
            props["ideal_preserved"] = math.gcd(*C) == math.gcd(*G)
        info["bound"] = "full" if ring.finite else bound
    elif isinstance(ring, PolynomialRing) and isinstance(ring.coefficients, Rationals):
        classical = oracle.classical_buchberger(C, ring)
        props["ideal_preserved"] = (
            all(is_member(g, G, ring) for g in classical)
            and all(not oracle.classical_remainder(g, classical, ring) for g in G))
        props["s_polynomials_reduce"] = not any(oracle.s_polynomial_remainders(G, ring))
    elif isinstance(ring, Rationals):
        props["ideal_preserved"] = bool(C) == bool(G)
    return G, trace, info, props


def run(request: Request):
    """Execute a request; returns ``(exit_code, output_text)``."""
    payload = {"ring": request.ring, "result": None, "stats": {}, "trace": []}
    code = EXIT_OK
    try:
        ring = parse_ring(request.ring)
        payload["ring"] = str(ring)
        inputs = request.inputs
        limit = request.step_limit
        if request.command == "gb":
            G, trace = gb(_elements(inputs["gens"], ring), ring, limit)
            payload["result"], payload["stats"] = _gb_output(G, trace, ring)
            if request.trace:
                payload["trace"] = _trace_json(trace, ring)
        elif request.command == "nf":
            f = parse_element(inputs["of"], ring)
            steps = []
            g = normal_form(f, strip_zeros(_elements(inputs["basis"], ring), ring), ring, steps=steps)
            payload["result"] = ring.render(g)
            payload["stats"] = {"reductions": len(steps)}
        elif request.command == "member":
            G, trace = gb(_elements(inputs["ideal"], ring), ring, limit)
            payload["result"] = is_member(parse_element(inputs["element"], ring), G, ring)
            payload["stats"] = trace.stats()
            if request.trace:
                payload["trace"] = _trace_json(trace, ring)
        elif request.command == "equal":
            A, B = (_elements(texts, ring) for texts in inputs["ideals"])
            GA, ta = gb(A, ring, limit)
            GB, tb = gb(B, ring, limit)
            payload["result"] = all(is_member(a, GB, ring) for a in A) and all(is_member(b, GA, ring) for b in B)
            payload["stats"] = {"first": ta.stats(), "second": tb.stats()}
        elif request.command == "check":
            G, trace, info, props = _check(_elements(inputs["basis"], ring), ring, request.bound, limit)
            payload["result"] = {"basis": [ring.render(g) for g in G], "input": info, "properties": props}
            payload["stats"] = trace.stats()
            if request.trace:
                payload["trace"] = _trace_json(trace, ring)
            if not all(props.values()):
                code = EXIT_CHECK_FAILED
        else:
            raise ParseError(f"unknown command {request.command!r}")
    except StepLimitExceeded as exc:
        return EXIT_STEP_LIMIT, _emit_error(request, exc)
    except RRGBError as exc:
        return EXIT_ERROR, _emit_error(request, exc)
    return code, _emit(request, payload)


def _emit_error(request, exc):
    if request.format == "json":
        return json.dumps({"ring": request.ring, "error": str(exc), "kind": type(exc).__name__}, indent=2)
    return f"error: {exc}"


def _emit(request, payload):
    if request.format == "json":
        return json.dumps(payload, indent=2)
    lines = [f"ring: {payload['ring']}"]
    result = payload["result"]
    if request.command == "gb":
        lines.append("basis:")
        lines += [f"  [{k}] {g}" for k, g in enumerate(result, 1)]
    elif request.command == "check":
        lines.append("basis:")
        lines += [f"  [{k}] {g}" for k, g in enumerate(result["basis"], 1)]
        for name, value in result["input"].items():
            lines.append(f"input {name}: {str(value).lower()}")
        for name, ok in result["properties"].items():
            lines.append(f"{'PASS' if ok else 'FAIL'} {name}")
    elif isinstance(result, bool):
        lines.append(f"result: {str(result).lower()}")
    else:
        lines.append(f"result: {result}")
    stats = payload["stats"]
    if stats:
        flat = stats if "first" not in stats else {f"{side}.{k}": v for side, s in stats.items() for k, v in s.items()}
        lines.append("stats: " + " ".join(f"{k}={v}" for k, v in flat.items()))
    for step in payload["trace"]:
        added = f" added={step['added']}" if step["added"] is not None else ""
        lines.append(f"trace {step['action']} measure={tuple(step['measure'])} i={step['i']} j={step['j']}{added}")
    return "\n".join(lines)


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _bound(text):
    if text == "full":
        return text
    return _positive(text)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors share the parse-error exit code
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser():
    default_format = os.environ.get(FORMAT_ENV, "text")
    common = _Parser(add_help=False)
    common.add_argument("--ring", help="ring descriptor, e.g. Z, Q, Z/8, 'poly(Q; x,y; lex)'")
    common.add_argument("--input", help="JSON file with 'ring' and 'generators'")
    common.add_argument("--format", choices=("text", "json"), default=default_format)
    common.add_argument("--trace", action="store_true", help="print the completion trace")
    common.add_argument("--step-limit", type=_positive, default=DEFAULT_STEP_LIMIT)

    parser = _Parser(prog="rrgb", description="Gröbner bases in reduction rings")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("gb", parents=[common], help="complete a basis")
    p.add_argument("--gens")
    p = sub.add_parser("nf", parents=[common], help="normal form modulo a basis as given")
    p.add_argument("--of", required=True)
    p.add_argument("--basis")
    p.add_argument("--gens")
    p = sub.add_parser("member", parents=[common], help="ideal membership")
    p.add_argument("--ideal")
    p.add_argument("--element", required=True)
    p = sub.add_parser("equal", parents=[common], help="ideal equality")
    p.add_argument("--ideal", action="append", default=[])
    p = sub.add_parser("check", parents=[common], help="oracle report on a basis and its completion")
    p.add_argument("--basis")
    p.add_argument("--gens")
    p.add_argument("--bound", type=_bound)
    return parser


def _load_input(path):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, ValueError) as exc:
        raise ParseError(f"cannot read input file {path}: {exc}") from None
    if not isinstance(data, dict) or not isinstance(data.get("generators"), list):
        raise ParseError(f"{path}: expected an object with a 'generators' list")
    if not all(isinstance(g, str) for g in data["generators"]):
        raise ParseError(f"{path}: generators must be strings")
    return data


def request_from_args(args) -> Request:
    inline = {name: getattr(args, name, None) for name in ("gens", "basis", "ideal")}
    given = [name for name, value in inline.items() if value]
    file_data = _load_input(args.input) if args.input else None
    if file_data is not None and given:
        raise ParseError(f"--input and --{given[0]} are mutually exclusive")
    if len(given) > 1 and args.command != "equal":
        raise ParseError(f"give only one of --{' / --'.join(given)}")
    ring = args.ring
    if file_data is not None:
        if ring and file_data.get("ring") and ring != file_data["ring"]:
            raise ParseError("--ring disagrees with the input file")
        ring = ring or file_data.get("ring")
    if not ring:
        raise ParseError("a ring is required (--ring or the input file)")

    if file_data is not None:
        gens = list(file_data["generators"])
    elif given and args.command != "equal":
        gens = split_list(inline[given[0]])
    else:
        gens = None

    inputs = {}
    if args.command == "equal":
        if len(args.ideal) != 2:
            raise ParseError("equal needs --ideal twice")
        inputs["ideals"] = [split_list(t) for t in args.ideal]
    else:
        if gens is None:
            raise ParseError("no generators given")
        key = {"gb": "gens", "nf": "basis", "member": "ideal", "check": "basis"}[args.command]
        inputs[key] = gens
    if args.command == "nf":
        inputs["of"] = args.of
    if args.command == "member":
        inputs["element"] = args.element
    return Request(
        command=args.command,
        ring=ring,
        inputs=inputs,
        trace=args.trace,
        format=args.format,
        bound=getattr(args, "bound", None),
        step_limit=args.step_limit,
    )


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        request = request_from_args(args)
    except RRGBError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    code, text = run(request)
    print(text, file=sys.stdout if code in (EXIT_OK, EXIT_CHECK_FAILED) else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
