"""Command-line surface.

One subcommand per experiment family, a shared --format/--out pair, and a
`verify` subcommand that runs the whole invariant suite.  Exit codes: 0 on
success, 1 for argument or I/O problems, 2 when verify finds a failing
invariant.  All output is deterministic; equal invocations give equal
bytes.
"""

import argparse
import sys

from . import __version__
from . import reports
from .wells import HARD_ZERO, ODD_IMAGE


class _Parser(argparse.ArgumentParser):
    # argument errors must exit 1, not argparse's default 2, so that 2 is
    # reserved for a failing verify run
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=(reports.CSV_FORMAT,
                                             reports.JSON_FORMAT),
                        default=reports.CSV_FORMAT,
                        help="report format (default csv)")
    common.add_argument("--out", metavar="PATH", default=None,
                        help="write the report here instead of stdout")
    common.add_argument("--figures", metavar="DIR", default=None,
                        help="also render a PNG of the rows into DIR")

    parser = _Parser(prog="qdeform",
                     description="numerical laboratory for "
                                 "fundamental-length deformed algebras")
    parser.add_argument("--version", action="version",
                        version="qdeform %s" % __version__)
    sub = parser.add_subparsers(dest="subcommand", metavar="subcommand",
                                parser_class=_Parser)
    sub.required = True

    spectra = sub.add_parser("spectra", parents=[common],
                             help="square-well level ladders with numeric "
                                  "verification")
    spectra.add_argument("--epsilon", type=int, choices=(-1, 1), default=-1)
    spectra.add_argument("--ell", type=float, required=True)
    spectra.add_argument("--mass", type=float, default=1.0)
    width = spectra.add_mutually_exclusive_group(required=True)
    width.add_argument("--delta", type=float)
    width.add_argument("--k", type=int)
    spectra.add_argument("--levels", type=int, default=None)
    spectra.add_argument("--boundary", choices=(ODD_IMAGE, HARD_ZERO),
                         default=ODD_IMAGE)

    counting = sub.add_parser("counting", parents=[common],
                              help="phase-space cell per added particle")
    counting.add_argument("--epsilon", type=int, choices=(-1, 1), default=-1)
    counting.add_argument("--ell", type=float, required=True)
    cwidth = counting.add_mutually_exclusive_group(required=True)
    cwidth.add_argument("--delta", type=float)
    cwidth.add_argument("--k", type=int)
    counting.add_argument("--levels", type=int, default=5)

    momstats = sub.add_parser("momstats", parents=[common],
                              help="characteristic function and moments of "
                                   "the localized-state momentum law")
    momstats.add_argument("--r", type=float, default=1.0)
    momstats.add_argument("--s-max", type=float, default=30.0)
    momstats.add_argument("--steps", type=int, default=121)

    uncert = sub.add_parser("uncertainty", parents=[common],
                            help="gaussian spread products against the "
                                 "deformed bound")
    uncert.add_argument("--alpha-start", type=float, default=0.01)
    uncert.add_argument("--alpha-stop", type=float, default=6.0)
    uncert.add_argument("--steps", type=int, default=25)
    uncert.add_argument("--ell", type=float, default=1.0)

    gup = sub.add_parser("gup", parents=[common],
                         help="quadratic-comparator bound curve")
    gup.add_argument("--c", type=float, default=2.0)
    gup.add_argument("--dp-min", type=float, default=0.2)
    gup.add_argument("--dp-max", type=float, default=3.0)
    gup.add_argument("--steps", type=int, default=57)

    dos = sub.add_parser("dos", parents=[common],
                         help="discrete-spectrum spacing product")
    dos.add_argument("--ell", type=float, required=True)
    dos.add_argument("--r", type=float, default=1.0)

    measures = sub.add_parser("measures", parents=[common],
                              help="thermal weights of the flat and "
                                   "deformed momentum measures")
    measures.add_argument("--ell", type=float, required=True)
    measures.add_argument("--beta", type=float, required=True)
    measures.add_argument("--tau", type=float, default=1.0)

    sub.add_parser("verify", parents=[common],
                   help="run the full invariant suite (exit 2 on any FAIL)")
    return parser


def _assemble(args):
    if args.subcommand == "spectra":
        return reports.assemble_spectra(args.epsilon, args.ell, args.mass,
                                        delta=args.delta, k=args.k,
                                        levels=args.levels,
                                        boundary=args.boundary)
    if args.subcommand == "counting":
        return reports.assemble_counting(args.epsilon, args.ell,
                                         delta=args.delta, k=args.k,
                                         levels=args.levels)
    if args.subcommand == "momstats":
        return reports.assemble_momstats(args.r, args.s_max, args.steps)
    if args.subcommand == "uncertainty":
        return reports.assemble_uncertainty(args.alpha_start,
                                            args.alpha_stop, args.steps,
                                            args.ell)
    if args.subcommand == "gup":
        return reports.assemble_gup(args.c, args.dp_min, args.dp_max,
                                    args.steps)
    if args.subcommand == "dos":
        return reports.assemble_dos(args.ell, args.r)
    if args.subcommand == "measures":
        return reports.assemble_measures(args.ell, args.beta, args.tau)
    raise ValueError("unknown subcommand %r" % (args.subcommand,))


def _run_verify(args):
    from .verify import run_verify
    lines, all_ok = run_verify()
    text = "\n".join(lines) + "\n"
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    sys.stdout.write(text)
    return 0 if all_ok else 2


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.subcommand == "verify":
            return _run_verify(args)
        meta, columns, rows = _assemble(args)
        text = reports.emit_report(meta, columns, rows, args.format,
                                   args.out)
        if text is not None:
            sys.stdout.write(text)
        if args.figures is not None:
            from .figures import render_figure
            render_figure(args.subcommand, rows, meta, args.figures)
    except ValueError as exc:
        sys.stderr.write("qdeform: error: %s\n" % exc)
        return 1
    except OSError as exc:
        sys.stderr.write("qdeform: error: %s\n" % exc)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
