"""Batch front end: solve and verify problem files, generate instances,
and run matrix-algebra utilities.

Exit codes are a contract: 0 solved/verified, 1 input error, 2 infeasible
or verification failure, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .errors import (
    DocumentError,
    GridOverflowError,
    PreconditionError,
    ShapeError,
    TropsolveError,
)
from .fileio import (
    ProblemDocument,
    document_to_dict,
    dumps,
    load_document,
    report_to_dict,
    verification_to_dict,
)
from .gen import generate
from .linalg import format_matrix, kleene_star, parse_matrix, spectral_radius, tr_functional
from .oracle import (
    DEFAULT_GRID_CAP,
    GridSpec,
    data_span_grid,
    default_grid,
    verify_report,
)
from .problems import PROBLEM_KINDS
from .semifield import MAX_PLUS, SEMIFIELDS
from .solvers import INFEASIBLE, solve

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INFEASIBLE = 2
EXIT_RESOURCE = 3


def _echo(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _fail(message: str) -> int:
    sys.stderr.write(f"error: {message}\n")
    return EXIT_INPUT


def _print_vector(label: str, v, indent: str = "  ") -> None:
    if v is None:
        _echo(f"{indent}{label}: (none)")
    else:
        _echo(f"{indent}{label}: "
              + " ".join(v[i].literal(".") for i in range(v.dim)))


def _print_report(report, sf) -> None:
    _echo(f"kind: {report.kind}")
    _echo(f"semifield: {sf.tag}")
    _echo(f"status: {report.status}")
    if report.status == INFEASIBLE:
        _echo(f"reason: {report.reason}")
    else:
        _echo(f"optimum: {report.optimum.literal()}")
        sol = report.solution
        type_name = type(sol).__name__
        if type_name == "BoxSolutionSet":
            _echo("solution: box of vectors")
            _print_vector("lower", sol.lower)
            _print_vector("upper", sol.upper)
        elif type_name == "GeneratedSolutionSet":
            _echo("solution: x = G u over a box of u")
            _echo("  G:")
            for line in format_matrix(sol.generator).splitlines():
                _echo("    " + line)
            _print_vector("u lower", sol.lower)
            _print_vector("u upper", sol.upper)
        elif type_name == "RaySolution":
            _echo("solution: x = alpha d for any alpha > zero")
            _print_vector("d", sol.direction)
        else:
            _echo("solution: componentwise family")
            _echo(f"  pinned index: {sol.pinned_index}"
                  f" (ties: {list(sol.tied_pinned_indices)})")
            _echo(f"  pinned value: {sol.pinned_value.literal()}")
            bounds = " ".join("-" if b is None else b.literal()
                              for b in sol.upper_bounds)
            _echo(f"  upper bounds: {bounds}")
            if sol.generator is not None:
                _echo("  mapped through generator G (x = G u)")
    _echo("checks:")
    for name, ok in report.diagnostics:
        _echo(f"  [{'ok' if ok else 'FAIL'}] {name}")


def _grid_from_settings(doc: ProblemDocument, report, args) -> GridSpec | None:
    """Build the verification grid from document settings and flags.

    Flags win over the document's grid section.  Returns None to let the
    verifier center a default grid on the reported solution.
    """
    settings = dict(doc.grid or {})
    if args.step is not None:
        settings["step"] = args.step
    step = settings.get("step")
    step = Fraction(step) if step is not None else None
    margin = settings.get("margin")
    margin = Fraction(margin) if margin is not None else None
    cap = int(settings.get("cap", DEFAULT_GRID_CAP))
    if report.status == INFEASIBLE:
        return data_span_grid(doc.kind, doc.data, step=step, cap=cap)
    if step is None and margin is None and cap == DEFAULT_GRID_CAP:
        return None
    return default_grid(doc.kind, doc.data, report, step=step,
                        margin=margin, cap=cap)


def cmd_solve(args) -> int:
    try:
        doc = load_document(args.path)
        report = solve(doc.kind, **doc.data)
    except (DocumentError, OSError, PreconditionError, ShapeError) as exc:
        return _fail(str(exc))
    if args.json:
        _echo(dumps(report_to_dict(report, doc.semifield)))
    else:
        _print_report(report, doc.semifield)
    return EXIT_OK if report.status != INFEASIBLE else EXIT_INFEASIBLE


def cmd_verify(args) -> int:
    try:
        doc = load_document(args.path)
        report = solve(doc.kind, **doc.data)
    except (DocumentError, OSError, PreconditionError, ShapeError) as exc:
        return _fail(str(exc))
    settings = dict(doc.verify or {})
    samples = args.samples if args.samples is not None else int(settings.get("samples", 20))
    seed = args.seed if args.seed is not None else int(settings.get("seed", 0))
    window = args.window if args.window is not None else settings.get("window", 10)
    try:
        grid = _grid_from_settings(doc, report, args)
        vr = verify_report(doc.kind, doc.data, report, grid=grid,
                           samples=samples, seed=seed, window=window)
    except GridOverflowError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_RESOURCE
    except TropsolveError as exc:
        return _fail(str(exc))
    if args.json:
        _echo(dumps(verification_to_dict(vr, doc.semifield)))
    else:
        _echo(f"kind: {vr.kind}")
        _echo(f"solver status: {vr.solver_status}")
        if vr.solver_optimum is not None:
            _echo(f"solver optimum: {vr.solver_optimum.literal()}")
        if vr.grid_optimum is not None:
            _echo(f"grid optimum: {vr.grid_optimum.literal()} "
                  f"({vr.grid_points} points)")
        else:
            _echo(f"grid optimum: none feasible ({vr.grid_points} points)")
        if vr.gap is not None:
            _echo(f"gap: {vr.gap}")
        _echo(f"samples checked: {vr.samples_checked}"
              f" (feasibility failures: {len(vr.feasibility_failures)},"
              f" attainment failures: {len(vr.attainment_failures)})")
        _echo("verdict: " + ("PASS" if vr.passed else "FAIL"))
    return EXIT_OK if vr.passed else EXIT_INFEASIBLE


def cmd_gen(args) -> int:
    if args.kind not in PROBLEM_KINDS:
        return _fail(f"unknown problem kind {args.kind!r}")
    sf = SEMIFIELDS[args.semifield]
    data = generate(args.kind, args.size, args.seed, sf=sf)
    doc = ProblemDocument(sf, args.kind, data)
    text = dumps(document_to_dict(doc))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        _echo(text)
    return EXIT_OK


def cmd_algebra(args) -> int:
    sf = SEMIFIELDS[args.semifield]
    try:
        with open(args.path, "r", encoding="utf-8") as fh:
            m = parse_matrix(sf, fh.read())
        if args.operation == "star":
            closure = kleene_star(m)
            _echo(format_matrix(closure.matrix))
            _echo(f"closure_valid: {'yes' if closure.closure_valid else 'no'}")
        elif args.operation == "spectral":
            lam = spectral_radius(m)
            _echo(lam.literal())
            if lam.is_zero:
                _echo("note: no nonzero cycle")
        else:
            t = tr_functional(m)
            _echo(t.literal())
            _echo(f"Tr <= one: {'yes' if t <= sf.one else 'no'}")
    except (OSError, TropsolveError) as exc:
        return _fail(str(exc))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropsolve",
        description="Closed-form tropical optimization with oracle verification")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a problem file")
    p_solve.add_argument("path")
    p_solve.add_argument("--json", action="store_true",
                         help="emit the structured report")
    p_solve.set_defaults(fn=cmd_solve)

    p_verify = sub.add_parser("verify",
                              help="solve a problem file and cross-check it")
    p_verify.add_argument("path")
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--samples", type=int, default=None,
                          help="solution-set members to sample (default 20)")
    p_verify.add_argument("--seed", type=int, default=None,
                          help="sampling seed (default 0)")
    p_verify.add_argument("--step", default=None,
                          help="grid step as a rational, e.g. 1/12")
    p_verify.add_argument("--window", type=float, default=None,
                          help="window for unbounded directions (carrier units)")
    p_verify.set_defaults(fn=cmd_verify)

    p_gen = sub.add_parser("gen", help="generate a random feasible instance")
    p_gen.add_argument("kind", help="problem kind identifier")
    p_gen.add_argument("-n", "--size", type=int, default=3)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--semifield", choices=sorted(SEMIFIELDS),
                       default=MAX_PLUS.tag)
    p_gen.add_argument("-o", "--output", default=None)
    p_gen.set_defaults(fn=cmd_gen)

    p_alg = sub.add_parser("algebra", help="matrix utilities on text files")
    p_alg.add_argument("operation", choices=("star", "spectral", "tr"))
    p_alg.add_argument("path")
    p_alg.add_argument("--semifield", choices=sorted(SEMIFIELDS),
                       default=MAX_PLUS.tag)
    p_alg.set_defaults(fn=cmd_algebra)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
