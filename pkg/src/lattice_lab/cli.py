"""Command-line front end: ``lattice-lab <command> ...``.

Exit codes: 0 success, 1 invalid input, 2 budget exceeded (partial result),
3 a verification failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, NoReturn, Optional, Sequence, Tuple

from pydantic import BaseModel, ValidationError

from .budget import BudgetExceeded
from .census import e7_squared_census
from .config import RunConfig
from .enumeration import characteristic_coset, coset_minima
from .invariants import InvariantReport, verify_certificate
from .lattice import CosetClass, Lattice, LatticeError, validate
from .reports import elkies_report
from .roots import root_decomposition
from .specfile import canonical_json, load_lattice
from .zeta import conjecture_check, scaled_zeta_table, substitute_epsilon, verify_range, xi_check, zeta, zeta_prime

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARTIAL = 2
EXIT_FAILED = 3

DEFAULT_UP_TO = 256


def _vector(text: str) -> Tuple[int, ...]:
    parts = text.replace(",", " ").split()
    if not parts:
        raise argparse.ArgumentTypeError("empty vector")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer vector: {text!r}") from None


def _config(args: argparse.Namespace) -> RunConfig:
    fields: Dict[str, Any] = {
        "mode": args.mode,
        "norm_bound": args.norm_bound,
        "budget_seconds": args.budget_seconds,
        "modulus": args.modulus,
        "output": args.output,
        "force": args.force,
        "witnesses": tuple(getattr(args, "witness", None) or ()),
    }
    if args.threads is not None:
        fields["threads"] = args.threads
    if args.mode is None and fields["witnesses"]:
        fields["mode"] = "user"
    return RunConfig(**fields)


def _emit(config: RunConfig, payload: Any, text: str) -> None:
    if config.output == "json":
        if isinstance(payload, BaseModel):
            print(payload.model_dump_json(indent=2))
        else:
            print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


# ----- lattice commands ------------------------------------------------------
def cmd_build(args: argparse.Namespace) -> int:
    """Build a lattice from a spec, validate it and optionally write canonical JSON."""
    config = _config(args)
    lattice = load_lattice(args.spec)
    summary = validate(lattice)
    roots = root_decomposition(lattice, config.budget()).describe()
    document = canonical_json(lattice)
    if args.out is not None:
        args.out.write_text(document + "\n")
        logger.info("wrote %s", args.out)
    payload = {**summary.model_dump(), "roots": roots, "label": lattice.label, "sign": lattice.sign}
    if args.out is None and config.output == "json":
        payload["lattice"] = json.loads(document)
    text = (
        f"{lattice.label or 'lattice'}: rank {summary.rank}, det {summary.det}, "
        f"{'even' if summary.even else 'odd'}, "
        f"{'unimodular' if summary.unimodular else 'not unimodular'}, roots {roots}"
    )
    _emit(config, payload, text)
    return EXIT_OK


def _report_text(report: InvariantReport) -> str:
    kind = "exact" if report.exact else "lower bound"
    lines = [f"{report.invariant}({report.label or 'lattice'}) = {report.value} [{kind}, {report.mode}]"]
    if report.witness is not None:
        w = report.witness
        lines.append(f"  w = {list(w.w)}, |Min| = {w.min_set_size}, η = {w.eta}")
        lines.append(f"  monomial: m0 = {w.monomial.m0}, m1 = {w.monomial.m1}")
    if report.truncated:
        lines.append("  search truncated by the budget")
    lines.append(f"  {report.cosets_scanned} classes, {report.elapsed_ms} ms")
    return "\n".join(lines)


def cmd_invariant(args: argparse.Namespace) -> int:
    """Compute one invariant and print or save its certificate."""
    config = _config(args)
    lattice = load_lattice(args.lattice)
    if args.name == "ep" and config.modulus is None:
        raise ValueError("ep needs --modulus")
    report = config.search(lattice).compute(args.name, config.modulus if args.name == "ep" else None)
    if args.out is not None:
        args.out.write_text(report.model_dump_json(indent=2) + "\n")
    _emit(config, report, _report_text(report))
    return EXIT_PARTIAL if report.truncated else EXIT_OK


def cmd_minima(args: argparse.Namespace) -> int:
    """Print Min(c) for a vector's class or for explicit class bits."""
    config = _config(args)
    lattice = load_lattice(args.lattice)
    if args.vector is not None:
        if len(args.vector) != lattice.rank:
            raise ValueError(f"vector has {len(args.vector)} entries for rank {lattice.rank}")
        coset = CosetClass.of(args.vector)
    else:
        coset = CosetClass.of(args.coset)
    result = coset_minima(lattice, coset, config.budget())
    text = "\n".join(
        [f"min norm {result.min_norm}, |Min| = {len(result.vectors)}"]
        + [f"  {list(v)}" for v in result.vectors]
    )
    _emit(config, result, text)
    return EXIT_OK


def cmd_roots(args: argparse.Namespace) -> int:
    """Print the root system decomposition."""
    config = _config(args)
    decomposition = root_decomposition(load_lattice(args.lattice), config.budget())
    text = f"{decomposition.describe()} ({decomposition.total_roots} roots)"
    _emit(config, decomposition, text)
    return EXIT_OK


def cmd_char_min(args: argparse.Namespace) -> int:
    """Print the characteristic class and its minimal norm."""
    config = _config(args)
    lattice = load_lattice(args.lattice)
    coset = characteristic_coset(lattice)
    result = coset_minima(lattice, coset, config.budget())
    payload = {
        "class": list(coset.bits),
        "min_norm": result.min_norm,
        "rank": lattice.rank,
        "representative": list(result.representative),
    }
    text = f"characteristic class {list(coset.bits)}: min norm {result.min_norm} (rank - 8 = {lattice.rank - 8})"
    _emit(config, payload, text)
    return EXIT_OK


def cmd_verify_certificate(args: argparse.Namespace) -> int:
    """Re-check a saved certificate; exit 3 when it does not hold."""
    config = _config(args)
    lattice = load_lattice(args.lattice)
    report = InvariantReport.model_validate_json(args.certificate.read_text())
    check = verify_certificate(lattice, report, config.budget())
    text = "certificate valid" if check.valid else "certificate invalid:\n" + "\n".join(
        f"  {p}" for p in check.problems
    )
    _emit(config, check, text)
    return EXIT_OK if check.valid else EXIT_FAILED


# ----- reports ---------------------------------------------------------------
def _glue_overrides(items: Sequence[str]) -> Dict[str, Lattice]:
    out: Dict[str, Lattice] = {}
    for item in items:
        label, sep, path = item.partition("=")
        if not sep:
            raise ValueError(f"--glue expects LABEL=FILE, got {item!r}")
        out[label] = load_lattice(f"glue:{path}").with_label(label)
    return out


def cmd_report_elkies(args: argparse.Namespace) -> int:
    """Print the Elkies-list report."""
    config = _config(args)
    report = elkies_report(config, _glue_overrides(args.glue or ()), invariants=not args.no_invariants)
    _emit(config, report, report.render())
    return EXIT_OK if report.consistent else EXIT_FAILED


def cmd_census_e72(args: argparse.Namespace) -> int:
    """Run the E7^2 coset census."""
    config = _config(args)
    report = e7_squared_census(budget=config.budget())
    lines = [
        f"({row.pair}) norm {row.norm} |Min| {row.min_set_size} η {row.eta}"
        f"{' image' if row.in_image else ''}"
        for row in report.rows
    ]
    lines.append(f"classes outside the image: {report.outside_image}")
    lines += [f"  {signature}: {count}" for signature, count in report.orbit_groups.items()]
    lines += [f"FAIL {failure}" for failure in report.failures]
    lines.append("all checks pass" if report.passed else f"{len(report.failures)} checks failed")
    _emit(config, report, "\n".join(lines))
    return EXIT_OK if report.passed else EXIT_FAILED


# ----- ring ------------------------------------------------------------------
def cmd_ring_zeta(args: argparse.Namespace) -> int:
    """Print ζ_g, ζ′_g or their ε forms."""
    config = _config(args)
    poly = zeta_prime(args.g, classical=args.classical) if args.prime else zeta(args.g, classical=args.classical)
    if args.epsilon:
        poly = substitute_epsilon(poly)
    _emit(config, poly, poly.render(args.style))
    return EXIT_OK


def cmd_ring_table(args: argparse.Namespace) -> int:
    """Print the scaled ζ table for g = 1..G."""
    config = _config(args)
    text = scaled_zeta_table(args.g_max, style=args.style)
    payload = {str(g): line.split("  ", 1)[1] for g, line in enumerate(text.splitlines(), start=1)}
    _emit(config, payload, text)
    return EXIT_OK


def cmd_ring_verify(args: argparse.Namespace) -> int:
    """Sweep the mod-4 relation up to G, resuming from a checkpoint."""
    config = _config(args)
    progress = verify_range(args.up_to, classical=args.classical, checkpoint=args.checkpoint)
    lines = []
    for entry in progress.entries:
        status = "pass" if entry.passed else f"FAIL ({entry.offending})"
        sign = "" if entry.sign is None else f" sign {'+' if entry.sign > 0 else '-'}"
        lines.append(f"g={entry.g}: {status}{sign}")
    xi_failures = [] if args.skip_xi else [g for g in range(1, args.up_to + 1) if not xi_check(g, classical=args.classical)]
    if xi_failures:
        lines.append(f"ξ criterion fails at g = {xi_failures}")
    passed = progress.passed and not xi_failures
    lines.append(f"certified g = 1..{args.up_to}" if passed else "verification FAILED")
    _emit(config, progress, "\n".join(lines))
    if not passed:
        logger.error("the conjecture fails within g <= %d", args.up_to)
    return EXIT_OK if passed else EXIT_FAILED


def cmd_ring_check(args: argparse.Namespace) -> int:
    """Certify the relation for one genus."""
    config = _config(args)
    relation = conjecture_check(args.g, classical=args.classical)
    text = (
        f"g={relation.g}: integral {relation.integral}, mod 4 {relation.mod4_poly}, "
        f"N_α² ≤ {relation.n_alpha2_upper}, N_β⁴ ≤ {relation.n_beta4_upper}"
        if relation.passed
        else f"g={relation.g}: FAIL ({relation.offending})"
    )
    _emit(config, relation, text)
    return EXIT_OK if relation.passed else EXIT_FAILED


# ----- parser ----------------------------------------------------------------
class _Parser(argparse.ArgumentParser):
    """Usage errors exit with the invalid-input code instead of argparse's 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        _diagnostic("invalid_input", message)
        self.exit(EXIT_INVALID)


def _common_options() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--mode", choices=("exhaustive", "witness", "user"), default=None)
    common.add_argument("--norm-bound", type=int, default=7, help="witness-mode norm bound")
    common.add_argument("--threads", type=int, default=None, help="worker processes (default $LATTICE_LAB_THREADS or 1)")
    common.add_argument("--budget-seconds", type=float, default=None)
    common.add_argument("--modulus", type=int, default=None, help="odd modulus for ep")
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--force", action="store_true", help="allow exhaustive scans above rank 18")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true")
    verbosity.add_argument("-q", "--quiet", action="store_true")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for every subcommand; shared options come from one parent."""
    common = _common_options()
    parser = _Parser(
        prog="lattice-lab", description="Exact computations on definite unimodular lattices."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    build = commands.add_parser("build", parents=[common], help="build and validate a lattice")
    build.add_argument("spec", help="named:NAME, glue:FILE, a spec JSON file or a catalog name")
    build.add_argument("--out", type=Path, default=None, help="write canonical lattice JSON here")
    build.set_defaults(handler=cmd_build)

    invariant = commands.add_parser("invariant", parents=[common], help="compute m, f2, f4, e0 or ep")
    invariant.add_argument("name", choices=("m", "f2", "f4", "e0", "ep"))
    invariant.add_argument("lattice")
    invariant.add_argument("--witness", type=_vector, action="append", help="extremal vector (user mode)")
    invariant.add_argument("--out", type=Path, default=None, help="write the certificate JSON here")
    invariant.set_defaults(handler=cmd_invariant)

    minima = commands.add_parser("minima", parents=[common], help="minimal vectors of a class of L/2L")
    minima.add_argument("lattice")
    target = minima.add_mutually_exclusive_group(required=True)
    target.add_argument("--vector", type=_vector)
    target.add_argument("--class", dest="coset", type=_vector, help="class bits")
    minima.set_defaults(handler=cmd_minima)

    roots = commands.add_parser("roots", parents=[common], help="root system decomposition")
    roots.add_argument("lattice")
    roots.set_defaults(handler=cmd_roots)

    char_min = commands.add_parser("char-min", parents=[common], help="minimal characteristic norm")
    char_min.add_argument("lattice")
    char_min.set_defaults(handler=cmd_char_min)

    certificate = commands.add_parser(
        "verify-certificate", parents=[common], help="re-check an invariant certificate"
    )
    certificate.add_argument("lattice")
    certificate.add_argument("certificate", type=Path)
    certificate.set_defaults(handler=cmd_verify_certificate)

    report = commands.add_parser("report", help="regression reports")
    report_kinds = report.add_subparsers(dest="report", required=True)
    elkies = report_kinds.add_parser("elkies", parents=[common], help="the fourteen Elkies lattices")
    elkies.add_argument("--glue", action="append", metavar="LABEL=FILE", help="glue spec for an unshipped row")
    elkies.add_argument("--no-invariants", action="store_true", help="skip m, f2 and f4")
    elkies.set_defaults(handler=cmd_report_elkies)

    census = commands.add_parser("census", help="coset census")
    census_kinds = census.add_subparsers(dest="census", required=True)
    e72 = census_kinds.add_parser("e72", parents=[common], help="classes of E7^2 modulo 2")
    e72.set_defaults(handler=cmd_census_e72)

    ring = commands.add_parser("ring", help="ζ relations")
    ring_kinds = ring.add_subparsers(dest="ring", required=True)
    zeta_cmd = ring_kinds.add_parser("zeta", parents=[common], help="print ζ_g")
    zeta_cmd.add_argument("g", type=int)
    zeta_cmd.add_argument("--prime", action="store_true", help="γ = 0 variant")
    zeta_cmd.add_argument("--epsilon", action="store_true", help="substitute β = α² + 8ε")
    zeta_cmd.add_argument("--classical", action="store_true", help="drop the (−1)^r·8 term")
    zeta_cmd.add_argument("--style", choices=("unicode", "ascii"), default="unicode")
    zeta_cmd.set_defaults(handler=cmd_ring_zeta)

    table = ring_kinds.add_parser(
        "table3", aliases=["table"], parents=[common], help="(2g−3)!!ζ_g/g! for g = 1..G"
    )
    table.add_argument("g_max", type=int)
    table.add_argument("--style", choices=("unicode", "ascii"), default="unicode")
    table.set_defaults(handler=cmd_ring_table)

    verify = ring_kinds.add_parser("verify", parents=[common], help="check the conjecture for g = 1..G")
    verify.add_argument("--up-to", type=int, default=DEFAULT_UP_TO)
    verify.add_argument("--checkpoint", type=Path, default=None)
    verify.add_argument("--classical", action="store_true")
    verify.add_argument("--skip-xi", action="store_true", help="skip the ξ coefficient criterion")
    verify.set_defaults(handler=cmd_ring_verify)

    check = ring_kinds.add_parser("check", parents=[common], help="certify one genus")
    check.add_argument("g", type=int)
    check.add_argument("--classical", action="store_true")
    check.set_defaults(handler=cmd_ring_check)
    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    level = logging.INFO
    if getattr(args, "verbose", False):
        level = logging.DEBUG
    elif getattr(args, "quiet", False):
        level = logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def _diagnostic(kind: str, message: str) -> None:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the ``lattice-lab`` script; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID
    _configure_logging(args)
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except BudgetExceeded as exc:
        _diagnostic("budget_exceeded", str(exc))
        return EXIT_PARTIAL
    except ValidationError as exc:
        _diagnostic("invalid_input", str(exc))
        return EXIT_INVALID
    except (LatticeError, ValueError, OSError) as exc:
        _diagnostic(type(exc).__name__, str(exc))
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
