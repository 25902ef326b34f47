"""
Command-line entry point.

Exit status: 0 for a certified decision (or a plain radius/count run),
2 for NotCertified or SingularInside, 1 for runtime errors, 64 for usage
errors.
"""
import argparse
import sys

from .errors import IqmvError
from .files import dumps_report, histogram_csv, load_problem, write_histogram, write_report
from .radius import METHODS, radius
from .verifier import brute_report, qaoa_report, verify_nonsingular, verify_stable_symmetric

EXIT_OK, EXIT_ERROR, EXIT_UNCERTIFIED, EXIT_USAGE = 0, 1, 2, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser():
    parser = _Parser(prog="iqmv", description="Radius of non-singularity and interval-matrix certificates.")
    common = _Parser(add_help=False)
    common.add_argument("--input", required=True, metavar="PATH", help="problem file (JSON)")
    common.add_argument("--epsilon", type=float, metavar="R")
    common.add_argument("--method", choices=METHODS)
    common.add_argument("--layers", type=int, metavar="P")
    common.add_argument("--shots", type=int, metavar="N")
    common.add_argument("--restarts", type=int, metavar="N")
    common.add_argument("--seed", type=int, metavar="N")
    common.add_argument("--report", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--histogram", metavar="PATH", help="write sampled counts as CSV")

    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("radius", parents=[common], help="compute d(A_m, Delta)")
    sub.add_parser("verify-nonsingular", parents=[common], help="certify non-singularity")
    sub.add_parser("verify-stable", parents=[common], help="certify stability (symmetric members)")
    sub.add_parser("brute-force", parents=[common], help="exact radius by enumeration")
    sub.add_parser("sample-counts", parents=[common], help="run QAOA and export measurement counts")
    return parser


def _run(args):
    spec = load_problem(args.input, epsilon=args.epsilon, method=args.method,
                        p=args.layers, shots=args.shots, restarts=args.restarts, seed=args.seed)
    if args.command == "radius":
        report = radius(spec.A_m, spec.Delta, spec.method, spec.qaoa)
    elif args.command == "verify-nonsingular":
        report = verify_nonsingular(spec)
    elif args.command == "verify-stable":
        report = verify_stable_symmetric(spec)
    elif args.command == "brute-force":
        report = brute_report(spec)
    else:
        report = qaoa_report(spec)
        if args.histogram is None and args.report is None:
            sys.stdout.write(histogram_csv(report.histogram, report.shots))
            return report

    if args.report:
        write_report(report, args.report)
    else:
        print(dumps_report(report))
    if args.histogram:
        if report.histogram is None:
            raise IqmvError("no histogram: the chosen method does not sample (use qaoa or both)")
        write_histogram(report.histogram, args.histogram)
    return report


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        report = _run(args)
    except (IqmvError, OSError, ValueError) as exc:
        print(f"iqmv: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if report.decision is None or report.decision.certified:
        return EXIT_OK
    return EXIT_UNCERTIFIED


if __name__ == "__main__":
    sys.exit(main())
