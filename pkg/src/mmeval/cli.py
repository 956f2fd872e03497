"""Command-line front end.

Exit codes: 0 on success, 1 for malformed input or bad arguments, 2 when a
declared bound turns out to be violated (integer bound violation or failed
rational reconstruction).
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace

from .approx import approx_mme_complex, approx_mme_real
from .backends import BACKENDS, get_backend
from .errors import BoundViolationError, InvalidArgumentError, ParseError, ReconstructionFailedError
from .fileformat import format_results, parse_instance
from .intmme import mme_integers
from .ratmme import mme_rationals

log = logging.getLogger("mmeval")

SUBCOMMANDS = {
    "eval-int": "int",
    "eval-approx": "approx",
    "eval-approx-complex": "approx-complex",
    "eval-rat": "rat",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mmeval",
        description="Multivariate multipoint evaluation over Z, Q, R and C.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, mode in SUBCOMMANDS.items():
        p = sub.add_parser(name, help=f"evaluate a '{mode}' instance file")
        p.add_argument("--input", "-i", required=True, help="instance file, '-' for stdin")
        p.add_argument("--output", "-o", default="-", help="result file (default: stdout)")
        p.add_argument("--backend", default="horner", choices=sorted(BACKENDS),
                       help="prime-field evaluation backend")
        if mode in ("int", "rat"):
            p.add_argument("--s", type=int, default=None, help="override the output bit bound")
        else:
            p.add_argument("--t", type=int, default=None, help="override the accuracy in bits")
        p.add_argument("--verbose", "-v", action="store_true")
    return parser


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, lines):
    text = "".join(line + "\n" for line in lines)
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def evaluate_file(inst, backend="horner"):
    """Run the pipeline matching ``inst.mode`` and return formatted result lines."""
    backend = get_backend(backend)
    typed = inst.to_instance()
    if inst.mode == "int":
        results = mme_integers(typed, backend)
    elif inst.mode == "rat":
        results = mme_rationals(typed, backend)
    elif inst.mode == "approx":
        results = approx_mme_real(typed, backend)
    else:
        f, points, t = typed
        results = approx_mme_complex(f, points, t, backend)
    return format_results(inst.mode, results, inst.t)


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    mode = SUBCOMMANDS[args.command]
    try:
        inst = parse_instance(_read(args.input), mode=mode)
        if getattr(args, "s", None) is not None:
            inst = replace(inst, s=args.s)
        if getattr(args, "t", None) is not None:
            inst = replace(inst, t=args.t)
        log.debug("%s instance: m=%d d=%d N=%d", inst.mode, inst.m, inst.d, inst.N)
        lines = evaluate_file(inst, args.backend)
        _write(args.output, lines)
    except (BoundViolationError, ReconstructionFailedError) as exc:
        print(f"mmeval: {exc}", file=sys.stderr)
        return 2
    except (ParseError, InvalidArgumentError, OSError) as exc:
        print(f"mmeval: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
