"""Command-line interface: parse, multiplex, invariants, fuzz, verify.

Subcommands
-----------
parse
    Validate a Gauss code and print its canonical serialization.
multiplex
    Print the canonical code of the diagram multiplexed by ``--weights``.
invariants
    Print the invariant report of a diagram (optionally multiplexed
    first); ``--k``/``--mode`` select a single Alexander-type polynomial
    instead of the full report.
fuzz
    Random-walk move-invariance checking: every trial applies ``--steps``
    random moves and requires the full invariant report of the original
    and walked diagram — and of all their multiplexes over the default
    weight grid — to agree.  Trials run concurrently but the summary is
    identical to sequential execution.
verify
    Recompute every pinned reference value shipped with the library and
    print an expected-versus-computed table.

Exit codes: 0 success, 1 mathematical mismatch (a failed reproduction or
a move-invariance violation), 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
from typing import Sequence

from .errors import WeldmuxError
from .gauss import GaussDiagram, parse_gauss_code, serialize_gauss_code
from .groups import generalized_presentation
from .homs import FiniteTarget, target_by_name
from .invariants import (
    InvariantReport,
    alexander,
    full_report,
    intersection_numbers,
)
from .laurent import LaurentPolynomial, gcd_many, normalize
from .moves import default_weight_grid, random_walk
from .multiplex import multiplex, verify_multiplex_relation
from .fixtures import fixture_names, load_fixture

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


# -- input plumbing ----------------------------------------------------------


def _load_diagram(args: argparse.Namespace) -> GaussDiagram:
    """Diagram from --code, a file path, or a built-in fixture name."""
    if args.code is not None:
        return parse_gauss_code(args.code)
    if args.input is None:
        raise WeldmuxError("no input: give a path, fixture name, or --code")
    if os.path.exists(args.input):
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
        lines = [ln for ln in text.splitlines() if not ln.lstrip().startswith("#")]
        return parse_gauss_code(" ".join(lines))
    if args.input in fixture_names():
        return load_fixture(args.input)
    raise WeldmuxError(f"no such file or fixture: {args.input!r}")


def _parse_weights(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError as exc:
        raise WeldmuxError(f"bad weight vector {text!r}") from exc


def _parse_targets(text: str) -> list[FiniteTarget]:
    try:
        return [target_by_name(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise WeldmuxError(str(exc)) from exc


def _emit(args: argparse.Namespace, text: str, obj) -> None:
    if args.output == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text)


# -- subcommands -------------------------------------------------------------


def cmd_parse(args: argparse.Namespace) -> int:
    d = _load_diagram(args)
    code = serialize_gauss_code(d)
    _emit(
        args,
        code,
        {
            "code": code,
            "components": d.n_components,
            "crossings": d.n_crossings,
        },
    )
    return EXIT_OK


def cmd_multiplex(args: argparse.Namespace) -> int:
    d = _load_diagram(args)
    out = multiplex(d, _parse_weights(args.weights))
    code = serialize_gauss_code(out)
    _emit(
        args,
        code,
        {
            "code": code,
            "components": out.n_components,
            "crossings": out.n_crossings,
        },
    )
    return EXIT_OK


def _report_text(r: InvariantReport) -> str:
    lines = [
        f"delta1_single: {r.delta1_single}",
        f"delta2_single: {r.delta2_single}",
        f"delta1_multi: {r.delta1_multi}",
        "linking:",
    ]
    lines.extend("  " + " ".join(f"{v:3d}" for v in row) for row in r.linking)
    lines.append("intersection:")
    lines.extend("  " + " ".join(f"{v:3d}" for v in row) for row in r.intersection)
    lines.append(
        "hom_counts: " + " ".join(f"{name}={n}" for name, n in r.hom_counts)
    )
    return "\n".join(lines)


def cmd_invariants(args: argparse.Namespace) -> int:
    d = _load_diagram(args)
    if args.weights is not None:
        d = multiplex(d, _parse_weights(args.weights))
    if args.k is not None:
        poly = alexander(d, args.k, args.mode)
        _emit(
            args,
            f"delta{args.k} ({args.mode}): {poly}",
            {"k": args.k, "mode": args.mode, "delta": poly.to_json_obj()},
        )
        return EXIT_OK
    report = full_report(d, _parse_targets(args.targets))
    _emit(args, _report_text(report), report.to_json_obj())
    return EXIT_OK


def _fuzz_trial(code: str, steps: int, seed: int) -> str | None:
    """One move-invariance trial; the failure description, or None."""
    d = parse_gauss_code(code)
    walked, script = random_walk(d, steps, seed=seed)
    if full_report(d) != full_report(walked):
        return "report changed under moves; replay script:\n" + script.to_text()
    for m in default_weight_grid(d.n_components):
        if full_report(multiplex(d, m)) != full_report(multiplex(walked, m)):
            return (
                f"report of multiplex {m} changed under moves; replay script:\n"
                + script.to_text()
            )
    return None


def cmd_fuzz(args: argparse.Namespace) -> int:
    d = _load_diagram(args)
    code = serialize_gauss_code(d)
    seeds = [args.seed + i for i in range(args.trials)]
    jobs = args.jobs if args.jobs else min(4, os.cpu_count() or 1)
    if jobs > 1 and args.trials > 1:
        try:
            with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(
                    pool.map(_fuzz_trial, [code] * len(seeds), [args.steps] * len(seeds), seeds)
                )
        except OSError:
            results = [_fuzz_trial(code, args.steps, s) for s in seeds]
    else:
        results = [_fuzz_trial(code, args.steps, s) for s in seeds]
    failures = [(i, msg) for i, msg in enumerate(results) if msg is not None]
    if args.output == "json":
        print(
            json.dumps(
                {
                    "trials": args.trials,
                    "steps": args.steps,
                    "seed": args.seed,
                    "failures": [
                        {"trial": i, "seed": args.seed + i, "detail": msg}
                        for i, msg in failures
                    ],
                },
                indent=2,
            )
        )
    else:
        for i, msg in failures:
            print(f"trial {i} (seed {args.seed + i}): {msg}")
        status = "all invariants agree" if not failures else f"{len(failures)} FAILED"
        print(
            f"fuzz: {args.trials - len(failures)}/{args.trials} trials passed "
            f"(steps={args.steps}, seed={args.seed}): {status}"
        )
    return EXIT_OK if not failures else EXIT_MISMATCH


# -- pinned-value verification ----------------------------------------------


def _t() -> LaurentPolynomial:
    return LaurentPolynomial.variable(1, 0)


Check = tuple[str, str, bool]  # (expected, computed, passed)


def _check_identity_weights() -> Check:
    names = fixture_names()
    ok = sum(
        serialize_gauss_code(multiplex(d, (1,) * d.n_components))
        == serialize_gauss_code(d)
        for d in map(load_fixture, names)
    )
    return "all fixtures unchanged", f"{ok}/{len(names)} fixtures unchanged", ok == len(names)


def _check_zero_weights() -> Check:
    left = [
        multiplex(d, (0,) * d.n_components).n_crossings
        for d in map(load_fixture, fixture_names())
    ]
    return "0 crossings on every fixture", f"max remaining crossings {max(left)}", max(left) == 0


def _check_trefoil_width_two() -> Check:
    out = multiplex(load_fixture("trefoil"), (2,))
    signs = sorted(set(out.signs.values()))
    ok = out.n_components == 1 and out.n_crossings == 6 and signs == [1]
    return (
        "1 component, 6 crossings, signs [1]",
        f"{out.n_components} component, {out.n_crossings} crossings, signs {signs}",
        ok,
    )


def _check_band_relation() -> Check:
    got = str(verify_multiplex_relation(1, 1))
    return "x2^-1 x1^-1 x0 x1", got, got == "x2^-1 x1^-1 x0 x1"


def _check_generalized_relators() -> Check:
    p = generalized_presentation(load_fixture("trefoil"), 2)
    matching = 0
    for r in p.relators:
        ls = r.letters
        if (
            len(ls) == 6
            and ls[0][1] == -1
            and ls[1] == ls[2] == (ls[1][0], -1)
            and ls[3][1] == 1
            and ls[4] == ls[5] == (ls[1][0], 1)
        ):
            matching += 1
    return (
        "3 relators of shape c^-1 b^-2 a b^2",
        f"{len(p.relators)} relators, {matching} matching",
        len(p.relators) == 3 and matching == 3,
    )


def _poly_check(got: LaurentPolynomial, expect: LaurentPolynomial) -> Check:
    return str(expect), str(got), got == expect


def _check_cabled_delta1() -> Check:
    got = alexander(load_fixture("cabled_whitehead"), 1, "single")
    return _poly_check(got, LaurentPolynomial.zero(1))


def _check_cabled_211() -> Check:
    t = _t()
    one = LaurentPolynomial.one(1)
    expect = normalize((one - t) * (t**2 - t) ** 2 * (one - t))
    got = alexander(multiplex(load_fixture("cabled_whitehead"), (2, 1, 1)), 1, "single")
    return _poly_check(got, expect)


def _check_clasp_123() -> Check:
    t = _t()
    one = LaurentPolynomial.one(1)
    expect = normalize((one - t) ** 2 * (one - t**2) * (one - t**3))
    got = alexander(multiplex(load_fixture("clasp_cycle_a"), (1, 2, 3)), 1, "single")
    return _poly_check(got, expect)


def _check_borromean_delta2() -> Check:
    t = _t()
    one = LaurentPolynomial.one(1)
    expect = normalize((one - t) ** 2)
    got = alexander(multiplex(load_fixture("borromean"), (1, 1, 0)), 2, "single")
    return _poly_check(got, expect)


_GRID_SAMPLE = (
    (0, 0, 0),
    (1, 1, 1),
    (2, 1, 1),
    (1, 2, 3),
    (3, 1, 0),
    (0, 2, 1),
    (3, 3, 2),
    (2, 0, 3),
)


def _check_cabled_intersection_grid() -> Check:
    d = load_fixture("cabled_whitehead")
    ok = sum(
        intersection_numbers(multiplex(d, m))[0][1] == m[0] - m[1]
        for m in _GRID_SAMPLE
    )
    return (
        "entry (1,2) = m1 - m2 on all vectors",
        f"{ok}/{len(_GRID_SAMPLE)} vectors",
        ok == len(_GRID_SAMPLE),
    )


def _check_cabled_family_grid() -> Check:
    d = load_fixture("cabled_whitehead")
    t = _t()
    one = LaurentPolynomial.one(1)
    ok = 0
    for m in _GRID_SAMPLE:
        g = gcd_many([one - t ** m[0], one - t ** m[1], one - t ** m[2]])
        expect = normalize(g * (t ** m[0] - t ** m[1]) ** 2 * (one - t ** m[2]))
        ok += alexander(multiplex(d, m), 1, "single") == expect
    return (
        "gcd-weighted product formula on all vectors",
        f"{ok}/{len(_GRID_SAMPLE)} vectors",
        ok == len(_GRID_SAMPLE),
    )


_CHECKS = (
    ("multiplex by identity weights", _check_identity_weights, False),
    ("multiplex by zero weights", _check_zero_weights, False),
    ("trefoil weight-2 band count", _check_trefoil_width_two, False),
    ("band relation (sign +1, m 1)", _check_band_relation, False),
    ("trefoil generalized relators (m 2)", _check_generalized_relators, False),
    ("cabled_whitehead delta1 vanishes", _check_cabled_delta1, False),
    ("cabled_whitehead (2,1,1) delta1", _check_cabled_211, False),
    ("clasp_cycle_a (1,2,3) delta1", _check_clasp_123, False),
    ("borromean (1,1,0) delta2", _check_borromean_delta2, False),
    ("cabled_whitehead intersection grid", _check_cabled_intersection_grid, True),
    ("cabled_whitehead family formula grid", _check_cabled_family_grid, True),
)


def cmd_verify(args: argparse.Namespace) -> int:
    rows = []
    for name, fn, needs_grid in _CHECKS:
        if needs_grid and args.skip_grid:
            rows.append((name, "-", "-", "skipped"))
            continue
        expected, computed, passed = fn()
        rows.append((name, expected, computed, "ok" if passed else "FAIL"))
    failed = sum(1 for _, _, _, s in rows if s == "FAIL")
    if args.output == "json":
        print(
            json.dumps(
                {
                    "checks": [
                        {
                            "name": n,
                            "expected": e,
                            "computed": c,
                            "status": s,
                        }
                        for n, e, c, s in rows
                    ],
                    "failures": failed,
                },
                indent=2,
            )
        )
    else:
        width = max(len(n) for n, _, _, _ in rows)
        for n, e, c, s in rows:
            print(f"{s:7s} {n:{width}s}  expected: {e}  computed: {c}")
        print(f"verify: {len(rows) - failed}/{len(rows)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


# -- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weldmux",
        description="Gauss-code diagrams, crossing multiplexing, and invariants.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p: argparse.ArgumentParser, with_input: bool = True) -> None:
        p.add_argument(
            "--output",
            choices=("text", "json"),
            default="text",
            help="output format (default text)",
        )
        if with_input:
            p.add_argument(
                "input",
                nargs="?",
                help="Gauss-code file path or built-in fixture name",
            )
            p.add_argument("--code", help="inline Gauss code instead of a file")

    p = sub.add_parser("parse", help="validate and canonicalize a Gauss code")
    add_common(p)
    p.set_defaults(fn=cmd_parse)

    p = sub.add_parser("multiplex", help="multiplex every crossing by weights")
    add_common(p)
    p.add_argument(
        "--weights", required=True, help='per-component weights, e.g. "2 1 1"'
    )
    p.set_defaults(fn=cmd_multiplex)

    p = sub.add_parser("invariants", help="invariant report of a diagram")
    add_common(p)
    p.add_argument("--weights", help="multiplex by these weights first")
    p.add_argument("--k", type=int, help="print only the k-th Alexander polynomial")
    p.add_argument(
        "--mode",
        choices=("single", "multi"),
        default="single",
        help="variable mode for --k (default single)",
    )
    p.add_argument(
        "--targets",
        default="S3,S4",
        help="hom-count targets for the report (default S3,S4)",
    )
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("fuzz", help="random-walk move-invariance checking")
    add_common(p)
    p.add_argument("--trials", type=int, default=20, help="number of trials")
    p.add_argument("--steps", type=int, default=50, help="moves per trial")
    p.add_argument("--seed", type=int, default=0, help="base seed; trial i uses seed+i")
    p.add_argument(
        "--jobs",
        type=int,
        default=0,
        help="worker processes (default: up to 4)",
    )
    p.set_defaults(fn=cmd_fuzz)

    p = sub.add_parser("verify", help="recompute all pinned reference values")
    add_common(p, with_input=False)
    p.add_argument(
        "--skip-grid",
        action="store_true",
        help="skip the weight-grid checks (reported as skipped)",
    )
    p.set_defaults(fn=cmd_verify)

    return parser


_SUBCOMMAND_ALIASES = {"verify-paper": "verify"}


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] in _SUBCOMMAND_ALIASES:
        argv[0] = _SUBCOMMAND_ALIASES[argv[0]]
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except WeldmuxError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
