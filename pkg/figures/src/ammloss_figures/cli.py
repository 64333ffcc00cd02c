"""Command line entry point: render figures from a data directory.

    ammloss-figures --data DIR --out DIR [--figure NAME]

Without --figure every standard figure is rendered.  Exit codes: 0 on
success, 2 on bad arguments or malformed input files.
"""

import argparse
import sys

from .figures import FIGURE_NAMES, preset_figures, render
from .parse import FigureInputError


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ammloss-figures",
        description="render figures from ammloss output files",
    )
    parser.add_argument("--data", required=True, help="directory of input files")
    parser.add_argument("--out", required=True, help="directory for images")
    parser.add_argument("--figure", default="all",
                        choices=("all",) + FIGURE_NAMES, metavar="NAME",
                        help="figure to render (default: all)")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    specs = preset_figures(args.data)
    names = FIGURE_NAMES if args.figure == "all" else (args.figure,)
    try:
        for name in names:
            meta = render(specs[name], args.out)
            print(f"wrote {meta['png']}")
            print(f"wrote {meta['svg']}")
    except (FigureInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
