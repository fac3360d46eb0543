"""Command-line entry point: `python cli.py <command> [options]`.

JSON goes to stdout, logs to stderr. Exit codes: 0 ok, 1 a property
check failed, 2 usage or parse error, 3 a search cap was exceeded.
"""
import argparse
import json
import logging
import sys
from pathlib import Path

from certificate import Certificate
from complex_core import alexander_dual, f_vector, h_vector, is_pure
from config import build_engine_config
from filtration import (
    classify, find_clean_filtration, find_pretty_clean_filtration,
    filtration_to_decomposition, is_pretty_clean_via_polarization, verify_filtration,
)
from fixtures import create_fixture
from gorenstein import GorensteinCaseError, certify_instance, template_report
from homology import (
    cohen_macaulay_certificate, depth_ideal, depth_ring, is_buchsbaum, multiplicity,
)
from ideal_core import (
    is_complete_intersection, quotient_dimension, quotient_multiplicity,
    stanley_reisner_complex, stanley_reisner_ideal,
)
from partitions import (
    Partition, check_fhr_identity, decomposition_sdepth, find_nice_partition, is_nice,
    r_vector, sdepth, validate_decomposition, validate_partition,
)
from random_instances import MODELS, generate_instance
from shelling import (
    CapExceededError, ShellingError, has_linear_quotients, is_shellable, verify_shelling,
)
from textio import (
    ParseError, load_complex, load_decomposition, load_filtration, load_ideal,
    load_partition, load_shelling, parse_substitution,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_CAP = 3

LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"


class Subject:
    """The object a command works on: a complex, an ideal, or both."""

    def __init__(self, complex_=None, ideal=None, name=""):
        self.complex = complex_
        self.ideal = ideal
        self.name = name

    @classmethod
    def from_args(cls, args):
        if getattr(args, "fixture", None):
            fixture = create_fixture(args.fixture)
            return cls(fixture.complex, fixture.ideal, fixture.name)
        if getattr(args, "complex", None):
            c = load_complex(args.complex)
            return cls(c, stanley_reisner_ideal(c), args.complex)
        if getattr(args, "ideal", None):
            ideal = load_ideal(args.ideal)
            c = stanley_reisner_complex(ideal) if ideal.is_squarefree else None
            return cls(c, ideal, args.ideal)
        raise ValueError("one of --fixture, --complex or --ideal is required")

    def require_complex(self):
        if self.complex is None:
            raise ValueError("this command needs a complex or a squarefree ideal")
        return self.complex


# --- analyze -----------------------------------------------------------------

def analyze_complex(c, config, caps):
    field = config.coefficient_field
    threads = config.threads
    cm = cohen_macaulay_certificate(c, field, threads)
    depth = depth_ring(c, field, threads)
    report = {
        "n": c.n_vertices,
        "labels": list(c.labels),
        "facets": len(c.facets),
        "dim_complex": c.dim_complex,
        "dim_ring": c.dim_ring,
        "f": list(f_vector(c)),
        "h": list(h_vector(c)),
        "pure": is_pure(c),
        "cohen_macaulay": cm.ok,
        "buchsbaum": is_buchsbaum(c, field, threads).ok,
        "depth": depth,
        "multiplicity": multiplicity(c),
    }
    try:
        shelling = is_shellable(c, config.shelling_cap)
        report["shellable"] = shelling.flag
        if shelling:
            report["shelling"] = [c.format_face(f) for f in shelling.order]
    except CapExceededError as exc:
        caps.append(str(exc))
        report["shellable"] = None

    try:
        dual_ideal = stanley_reisner_ideal(alexander_dual(c))
        report["dual_linear_quotients"] = has_linear_quotients(dual_ideal, cap=config.generator_cap).flag
    except CapExceededError as exc:
        caps.append(str(exc))
        report["dual_linear_quotients"] = None

    nice = find_nice_partition(c)
    report["partitionable"] = not isinstance(nice, Certificate)
    if report["partitionable"]:
        report["partition"] = nice.format()
        report["r"] = list(r_vector(nice))
        report["fhr_identity"] = check_fhr_identity(nice).ok

    ideal = stanley_reisner_ideal(c)
    if ideal.is_zero:
        # a full simplex: S/I = S is one Stanley space
        report["sdepth"] = c.n_vertices
        report["sdepth_witness"] = [f"[-,{c.format_face(c.facets[0])}]"]
    else:
        result = sdepth(ideal)
        report["sdepth"] = result.value
        report["sdepth_witness"] = result.witness.format()
    report["stanley_ideal"] = report["sdepth"] >= depth
    return report


def analyze_ideal(ideal, config, caps):
    field = config.coefficient_field
    depth = depth_ideal(ideal, field, config.threads)
    report = {
        "ideal": ideal.to_dict(),
        "squarefree": False,
        "dim": quotient_dimension(ideal),
        "depth": depth,
        "multiplicity": quotient_multiplicity(ideal),
        "complete_intersection": is_complete_intersection(ideal),
        "pretty_clean": None,
        "stanley_ideal": None,
    }
    try:
        evidence = is_pretty_clean_via_polarization(ideal, config.shelling_cap)
    except CapExceededError as exc:
        caps.append(str(exc))
        return report
    report["pretty_clean"] = evidence.flag
    if not evidence:
        return report
    try:
        found = find_pretty_clean_filtration(ideal, config.shelling_cap, config.box_cap)
    except CapExceededError as exc:
        caps.append(str(exc))
        return report
    if found:
        decomposition = filtration_to_decomposition(found.filtration)
        report["decomposition_sdepth"] = decomposition_sdepth(decomposition)
        report["stanley_ideal"] = report["decomposition_sdepth"] >= depth
    return report


def cmd_analyze(args, config):
    subject = Subject.from_args(args)
    caps = []
    if subject.complex is not None:
        report = analyze_complex(subject.complex, config, caps)
    else:
        report = analyze_ideal(subject.ideal, config, caps)
    if caps:
        report["cap_exceeded"] = caps
        return report, EXIT_CAP
    return report, EXIT_OK


# --- verify ------------------------------------------------------------------

def cmd_verify(args, config):
    subject = Subject.from_args(args)
    report = {"kind": args.kind, "artifact": args.artifact}
    if args.kind == "partition":
        p = load_partition(args.artifact, subject.require_complex())
        certificate = validate_partition(p)
        if certificate:
            report["nice"] = is_nice(p)
            report["r"] = list(r_vector(p))
    elif args.kind == "shelling":
        c = subject.require_complex()
        try:
            certificate = verify_shelling(c, load_shelling(args.artifact, c))
        except ShellingError as exc:
            certificate = Certificate.failure(str(exc))
    elif args.kind == "decomposition":
        certificate = validate_decomposition(load_decomposition(args.artifact, subject.ideal))
    else:
        f = load_filtration(args.artifact, subject.ideal)
        certificate = verify_filtration(f)
        if certificate:
            report["class"] = classify(f).label
    report["certificate"] = certificate.to_dict()
    return report, EXIT_OK if certificate else EXIT_VIOLATION


# --- gorenstein / random -----------------------------------------------------

def cmd_gorenstein(args, config):
    field = config.coefficient_field
    report = template_report(args.m, field, check_witnesses=args.verify_shelling)
    ok = report["shelling"]["ok"] and report.get("witnesses", {"ok": True})["ok"]
    if args.subst:
        path = Path(args.subst)
        text = path.read_text(encoding="utf-8") if path.is_file() else args.subst
        variables, us = parse_substitution(text)
        report["instance"] = certify_instance(args.m, us, variables, field)
        ok = ok and bool(report["instance"]["stanley_ideal"])
    return report, EXIT_OK if ok else EXIT_VIOLATION


def cmd_random(args, config):
    return generate_instance(args.model, args.seed, args.n).to_dict(), EXIT_OK


# --- filtrations, sdepth, shellings -------------------------------------------

def _filtration_command(search):
    def run(args, config):
        subject = Subject.from_args(args)
        result = search(subject.ideal, config.shelling_cap, config.box_cap)
        report = {
            "route": result.route,
            "states": result.states,
            "filtration": result.filtration.to_dict() if result else "none",
        }
        return report, EXIT_OK if result else EXIT_VIOLATION
    return run


def cmd_sdepth(args, config):
    subject = Subject.from_args(args)
    result = sdepth(subject.ideal, target=args.target)
    report = {
        "target": args.target,
        "sdepth": result.value,
        "witness": result.witness.format() if isinstance(result.witness, Partition) else None,
    }
    return report, EXIT_OK if result.value is not None else EXIT_VIOLATION


def cmd_shell(args, config):
    subject = Subject.from_args(args)
    c = subject.require_complex()
    if args.order:
        try:
            certificate = verify_shelling(c, load_shelling(args.order, c))
        except ShellingError as exc:
            certificate = Certificate.failure(str(exc))
        return {"certificate": certificate.to_dict()}, EXIT_OK if certificate else EXIT_VIOLATION
    result = is_shellable(c, config.shelling_cap)
    report = {
        "shellable": result.flag,
        "states": result.states,
        "order": [c.format_face(f) for f in result.order] if result else "none",
    }
    return report, EXIT_OK if result else EXIT_VIOLATION


# --- output ------------------------------------------------------------------

def render(report, indent=0):
    """Human-readable rendering of a JSON report."""
    lines = []
    pad = "  " * indent
    for key, value in report.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render(value, indent + 1))
        elif isinstance(value, list) and value and all(isinstance(v, str) for v in value):
            lines.append(f"{pad}{key}: {' '.join(value)}")
        else:
            lines.append(f"{pad}{key}: {json.dumps(value)}")
    return "\n".join(lines)


def emit(report, as_json):
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        print(render(report))


# --- parser ------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="coefficient field: q or p:<prime>")
    common.add_argument("--threads", type=int, help="worker threads for homology")
    common.add_argument("--shelling-cap", type=int, help="facet cap of the shelling search")
    common.add_argument("--box-cap", type=int, help="candidate cap of the filtration search")
    common.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    common.add_argument("--json", action="store_true", help="print JSON instead of text")

    subject = argparse.ArgumentParser(add_help=False)
    group = subject.add_mutually_exclusive_group()
    group.add_argument("--fixture", help="dunce-hat, cylinder, hachimori or gorenstein-<m>")
    group.add_argument("--complex", help="complex file (text or JSON)")
    group.add_argument("--ideal", help="ideal file (text or JSON)")

    parser = argparse.ArgumentParser(
        prog="cli.py", description="Stanley decompositions, Stanley depth and shellings"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("analyze", parents=[common, subject], help="full invariant report")
    p.set_defaults(handler=cmd_analyze)

    p = commands.add_parser("verify", parents=[common, subject], help="check an artifact file")
    p.add_argument("kind", choices=["partition", "decomposition", "shelling", "filtration"])
    p.add_argument("artifact")
    p.set_defaults(handler=cmd_verify)

    p = commands.add_parser("gorenstein", parents=[common], help="codimension-3 Gorenstein template")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--subst", help="file or inline list of 2m+1 monomials, e.g. x1^2,x2,x3*x4")
    p.add_argument("--verify-shelling", action="store_true", help="check every witness pair")
    p.set_defaults(handler=cmd_gorenstein)

    p = commands.add_parser("random", parents=[common], help="seeded random instance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--model", choices=MODELS, default="squarefree")
    p.set_defaults(handler=cmd_random)

    p = commands.add_parser("clean", parents=[common, subject], help="search a clean filtration")
    p.set_defaults(handler=_filtration_command(find_clean_filtration))

    p = commands.add_parser("pretty-clean", parents=[common, subject],
                            help="search a pretty clean filtration")
    p.set_defaults(handler=_filtration_command(find_pretty_clean_filtration))

    p = commands.add_parser("sdepth", parents=[common, subject], help="squarefree Stanley depth")
    p.add_argument("--target", type=int, help="only decide sdepth >= TARGET")
    p.set_defaults(handler=cmd_sdepth)

    p = commands.add_parser("shell", parents=[common, subject], help="verify or search a shelling")
    p.add_argument("--order", help="shelling order file to verify")
    p.set_defaults(handler=cmd_shell)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        config = build_engine_config({
            "field": args.field,
            "threads": args.threads,
            "shelling_cap": args.shelling_cap,
            "box_cap": args.box_cap,
            "log_level": args.log_level,
        })
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=getattr(logging, config.log_level), format=LOG_FORMAT, stream=sys.stderr)

    try:
        report, code = args.handler(args, config)
    except CapExceededError as exc:
        logger.error("%s", exc)
        emit({"error": str(exc), "cap_exceeded": True}, args.json)
        return EXIT_CAP
    except GorensteinCaseError as exc:
        logger.error("%s", exc)
        emit({"error": str(exc)}, args.json)
        return EXIT_VIOLATION
    except (ParseError, ValueError, OSError) as exc:
        logger.error("%s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception:
        logger.exception("Unexpected failure in %s", args.command)
        return EXIT_USAGE
    emit(report, args.json)
    return code


if __name__ == "__main__":
    sys.exit(main())
