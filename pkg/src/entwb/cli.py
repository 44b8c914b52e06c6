"""Command line interface.

Subcommands: classify, check, repro, table1, props, qfi.  Scenario
files are UTF-8 text in the grammar of `entwb.scenario`.  The sweep
seed comes from --seed when given, else the ENTWB_SEED environment
variable, else the built-in default.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from .classify import (
    Verdict,
    is_entangled_IV,
    is_separable_I,
    is_separable_II,
    is_separable_III,
    is_separable_V,
    qfi_phase,
)
from .config import DEFAULT_PROBE_SAMPLES, DEFAULT_SEED, EPS_TOL
from .correlations import factorization_gap
from .harness import generate_table1, props_report, run_repro_suite
from .scenario import Scenario, ScenarioError, parse_scenario


def _resolve_seed(arg_seed: Optional[int]) -> int:
    if arg_seed is not None:
        return arg_seed
    env = os.environ.get("ENTWB_SEED")
    if env:
        try:
            return int(env)
        except ValueError:
            raise SystemExit(f"ENTWB_SEED must be an integer, got {env!r}")
    return DEFAULT_SEED


def _fmt_c(z: complex) -> str:
    if abs(z.imag) < 1e-12:
        return format(z.real, ".12g")
    return f"{z.real:.12g}{z.imag:+.12g}i"


def _load_scenario(path: str) -> Scenario:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_scenario(fh.read())
    except FileNotFoundError:
        raise SystemExit(f"no such scenario file: {path}")
    except ScenarioError as exc:
        raise SystemExit(f"{path}: {exc}")


def classify_scenario(s: Scenario, definition: str) -> Verdict:
    """Dispatch one definition using the scenario's declared partitions."""
    if definition == "I":
        return is_separable_I(s.state)
    if definition == "II":
        return is_separable_II(s.state)
    if definition == "III":
        if s.sectors is None:
            raise SystemExit("definition III needs V1 and V2 in the scenario")
        return is_separable_III(s.state, s.sectors)
    if definition == "IV":
        if s.kbasis is None:
            raise SystemExit("definition IV needs a K declaration in the scenario")
        return is_entangled_IV(s.state, s.kbasis)
    if definition == "V":
        if s.partition is None:
            raise SystemExit("definition V needs a partition declaration")
        return is_separable_V(s.state_vector(), s.partition)
    raise SystemExit(f"unknown definition {definition!r}")


def _cmd_classify(args) -> int:
    s = _load_scenario(args.scenario)
    verdict = classify_scenario(s, args.definition)
    _, _, _, separable, witness = verdict.record(state_id=s.id)
    print(f"scenario {s.id}: definition {verdict.definition} -> "
          f"{'separable' if separable else 'entangled'}")
    print(f"  witness: {witness}")
    print(f"  tolerance: {verdict.tolerance:g}")
    expect_key = f"separable_{args.definition}"
    if expect_key in s.expectations:
        expected = bool(s.expectations[expect_key])
        ok = expected == verdict.separable
        print(f"  expected separable={str(expected).lower()}: {'pass' if ok else 'FAIL'}")
        return 0 if ok else 1
    return 0


def _cmd_check(args) -> int:
    s = _load_scenario(args.scenario)
    if "A" not in s.probes or "B" not in s.probes:
        raise SystemExit("check needs probes A and B in the scenario")
    try:
        rep = factorization_gap(
            s.state, s.probes["A"], s.probes["B"], state_id=s.id, a_id="A", b_id="B"
        )
    except TypeError as exc:
        raise SystemExit(str(exc))
    print(f"scenario {s.id}: <AB> = {_fmt_c(rep.lhs)}, <A><B> = {_fmt_c(rep.rhs)}")
    print(f"  gap = {_fmt_c(rep.gap)} -> {'factorizes' if rep.factorizes else 'correlated'}")
    status = 0
    for name, attr in (("lhs", rep.lhs), ("rhs", rep.rhs), ("gap", rep.gap)):
        if name in s.expectations:
            expected = float(s.expectations[name])
            ok = abs(attr - expected) <= EPS_TOL
            print(f"  expected {name} = {expected:g}: {'pass' if ok else 'FAIL'}")
            status |= 0 if ok else 1
    return status


def _cmd_repro(args) -> int:
    seed = _resolve_seed(args.seed)
    report = run_repro_suite(seed)
    text = report.to_markdown() if args.format == "md" else report.to_csv()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.out} ({len(report.rows)} checks, "
              f"{len(report.failures())} failures)")
    else:
        sys.stdout.write(text)
    return 0 if report.passed else 1


def _cmd_table1(args) -> int:
    seed = _resolve_seed(args.seed)
    try:
        table = generate_table1(seed)
    except RuntimeError as exc:
        raise SystemExit(f"refusing to emit the table: {exc}")
    sys.stdout.write(table.to_markdown() if args.format == "md" else table.to_csv())
    return 0


def _cmd_props(args) -> int:
    seed = _resolve_seed(args.seed)
    rows = props_report(seed, args.samples)
    status = 0
    print(f"property sweeps (seed {seed}, samples {args.samples})")
    for name, value, bound, ok in rows:
        print(f"  {name}: {value:.3g} (bound {bound:g}) {'pass' if ok else 'FAIL'}")
        status |= 0 if ok else 1
    return status


def _cmd_qfi(args) -> int:
    s = _load_scenario(args.scenario)
    if "G" not in s.probes:
        raise SystemExit("qfi needs a generator G in the scenario")
    try:
        value = qfi_phase(s.state, s.probes["G"])
    except (TypeError, ValueError) as exc:
        raise SystemExit(str(exc))
    print(f"scenario {s.id}: QFI = {value:.12g}")
    if "qfi" in s.expectations:
        expected = float(s.expectations["qfi"])
        ok = abs(value - expected) <= 1e-9
        print(f"  expected {expected:g}: {'pass' if ok else 'FAIL'}")
        return 0 if ok else 1
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="entwb",
        description="entanglement workbench for few-mode identical-particle systems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="run one separability definition on a scenario")
    p.add_argument("--scenario", required=True)
    p.add_argument("--definition", required=True, choices=["I", "II", "III", "IV", "V"])
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("check", help="factorization gap for the scenario's probes A, B")
    p.add_argument("--scenario", required=True)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("repro", help="run the full reproduction corpus")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=["csv", "md"], default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_repro)

    p = sub.add_parser("table1", help="emit the consistency verdict table")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=["md", "csv"], default="md")
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("props", help="randomized property sweeps")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=DEFAULT_PROBE_SAMPLES)
    p.set_defaults(func=_cmd_props)

    p = sub.add_parser("qfi", help="quantum Fisher information of the scenario state")
    p.add_argument("--scenario", required=True)
    p.set_defaults(func=_cmd_qfi)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
