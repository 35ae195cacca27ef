import argparse
import sys

from friezes import commands
from friezes.errors import EXIT_USAGE

"""
    Use good old argparse to run the commands.

    To build the frieze Φ(D) of a dissection and print its pattern:
    $> python3 scripts/cli.py build --dissection ten_gon.json --render text --quiddity

    To recover the dissection from a frieze file:
    $> python3 scripts/cli.py recover --frieze ten_gon_frieze.json --out recovered.json

    To validate a quiddity row and detect its types Λ_p:
    $> python3 scripts/cli.py validate --quiddity row.json

    To count or sweep the 4-angulations of the 10-gon:
    $> python3 scripts/cli.py enumerate --n 10 --p 4 --count-only
    $> python3 scripts/cli.py enumerate --n 10 --p 4 --roundtrip

    To check the Farey path of a type Λ_4 quiddity and draw it:
    $> python3 scripts/cli.py farey --q 1,2,1,1,3,2,1,1,2,2 --p 4 --svg farey.svg

    Exit codes: 0 success, 1 usage, 2 unreadable input, 3 mathematically invalid input.
"""


class ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = ArgumentParser(prog="cli.py")
    sub_parsers = parser.add_subparsers(dest="command_name", parser_class=ArgumentParser)

    build_parser_ = sub_parsers.add_parser("build", help="Write the frieze Φ(D) of a dissection file.")
    build_parser_.add_argument("--dissection", type=str, required=True,
                               help="A dissection file, e.g. {\"n\": 10, \"diagonals\": [[1,4],[4,9],[5,8]]}")
    build_parser_.add_argument("--render", type=str, choices=["text"],
                               help="Print the frieze pattern in the offset row layout.")
    build_parser_.add_argument("--periods", type=int, default=1,
                               help="Number of periods of the rendered pattern. Default: 1.")
    build_parser_.add_argument("--quiddity", action="store_true", help="Print the quiddity row.")
    build_parser_.add_argument("--out", type=str,
                               help="Frieze file to write. When not given, the frieze JSON is printed.")

    recover_parser = sub_parsers.add_parser("recover", help="Recover the dissection from a frieze file.")
    recover_parser.add_argument("--frieze", type=str, required=True)
    recover_parser.add_argument("--out", type=str,
                                help="Dissection file to write. When not given, the dissection JSON is printed.")

    validate_parser = sub_parsers.add_parser("validate", help="Report on a quiddity file.")
    validate_parser.add_argument("--quiddity", type=str, required=True)

    enumerate_parser = sub_parsers.add_parser("enumerate",
                                              help="Count or sweep the dissections (or p-angulations) of the N-gon.")
    enumerate_parser.add_argument("--n", type=int, required=True)
    enumerate_parser.add_argument("--p", type=int, help="Only the p-angulations.")
    mode = enumerate_parser.add_mutually_exclusive_group(required=True)
    mode.add_argument("--count-only", action="store_true")
    mode.add_argument("--roundtrip", action="store_true", help="Run recover∘Φ and all checks over the family.")
    enumerate_parser.add_argument("--no-progress", action="store_true", help="Hide the progress bar.")

    farey_parser = sub_parsers.add_parser("farey", help="Check the Farey path of a type Λ_p quiddity.")
    source = farey_parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--quiddity", type=str, help="A quiddity file of type Λ_p.")
    source.add_argument("--q", type=str, help="Comma-separated positive integers q_α.")
    farey_parser.add_argument("--p", type=int, required=True)
    farey_parser.add_argument("--svg", type=str, help="SVG file to write the half-plane picture to.")
    return parser


def main(args: argparse.Namespace) -> int:
    if args.command_name == "build":
        return commands.build(args.dissection, render=args.render, quiddity=args.quiddity, out=args.out,
                              periods=args.periods)
    if args.command_name == "recover":
        return commands.recover(args.frieze, out=args.out)
    if args.command_name == "validate":
        return commands.validate(args.quiddity)
    if args.command_name == "enumerate":
        return commands.enumerate_family(args.n, p=args.p, count_only=args.count_only,
                                         progress=not args.no_progress)
    if args.command_name == "farey":
        if args.quiddity:
            return commands.farey(args.p, quiddity_file=args.quiddity, svg=args.svg)
        return commands.farey(args.p, q_text=args.q, svg=args.svg)
    return EXIT_USAGE


if __name__ == "__main__":
    parser = build_parser()
    arguments = parser.parse_args()
    if arguments.command_name is None:
        parser.print_help(sys.stderr)
        sys.exit(EXIT_USAGE)
    sys.exit(main(arguments))
