#!/usr/bin/env python3
"""Run every corpus file through the command-line interface.

Each file is dispatched on its scalar keys: an ``i:`` line means an
embedded self-gluing (``embed-glue``), ``k1:``/``k2:`` lines mean a
candidate scaling to check (``check-gluing``), and a bare pair of
generator sections means a search (``find-gluing``).  Files named
``*_glue`` or ``*_selfglue`` must come back affirmative, ``*_noglue``
files negative or inconclusive.  The script ends with the levels of
the completers of the two twisted pairs, which the command line does
not expose.

Usage: python3 scripts/run_corpus.py [--json]
"""

import argparse
import pathlib
import sys

from semiglue import Binomial, GluingCandidate, Monomial, level
from semiglue.cli import main as cli_main

CORPUS = pathlib.Path(__file__).resolve().parent.parent / "corpus"

AFFIRMATIVE = {0}
NEGATIVE = {1, 3}


def command_for(text: str) -> str:
    keys = {line.split(":")[0].strip()
            for line in text.splitlines() if ":" in line}
    if "i" in keys:
        return "embed-glue"
    if "k1" in keys or "k2" in keys:
        return "check-gluing"
    return "find-gluing"


def run_corpus(as_json: bool) -> int:
    failures = 0
    for path in sorted(CORPUS.glob("*.txt")):
        command = command_for(path.read_text())
        argv = [command, str(path)] + (["--json"] if as_json else [])
        print(f"== {path.name} ({command})")
        code = cli_main(argv)
        expected = AFFIRMATIVE if path.stem.endswith("glue") else NEGATIVE
        if path.stem.endswith("noglue"):
            expected = NEGATIVE
        if code not in expected:
            print(f"** unexpected exit {code} for {path.name}",
                  file=sys.stderr)
            failures += 1
        print()
    return failures


def completer_levels() -> None:
    """Print the levels of the known completers of the twisted pairs."""
    a_cols = [(4, 0, 0), (3, 1, 0), (2, 2, 0), (1, 3, 0)]
    b_cols = [(3, 3, 0), (3, 2, 1), (3, 1, 2), (3, 0, 3)]
    bad_cols = [(2, 3, 1), (2, 2, 2), (2, 1, 3), (2, 0, 4)]
    from semiglue import SemigroupGens
    a = SemigroupGens.from_columns(a_cols, "x")
    b = SemigroupGens.from_columns(b_cols, "y")
    bad = SemigroupGens.from_columns(bad_cols, "y")

    def mixed(cand, plus, minus):
        block = cand.c_block
        return Binomial(Monomial(block, plus), Monomial(block, minus))

    glue = GluingCandidate(a, b)
    quadric = mixed(glue, (0, 0, 0, 0, 2, 0, 0, 0), (1, 0, 0, 2, 0, 0, 0, 0))
    print("== levels of the twisted-pair completers")
    print(f"y1^2 - x1*x4^2 over the gluing pair:      "
          f"level {level(quadric, glue)}")
    skew = GluingCandidate(a, bad)
    w1 = mixed(skew, (0, 0, 0, 0, 2, 1, 0, 0), (0, 0, 1, 2, 0, 0, 0, 1))
    w2 = mixed(skew, (0, 0, 0, 0, 3, 0, 0, 0), (0, 0, 1, 2, 0, 0, 1, 0))
    print(f"y1^2*y2 - x3*x4^2*y4 over the skewed pair: "
          f"level {level(w1, skew)}")
    print(f"y1^3 - x3*x4^2*y3 over the skewed pair:    "
          f"level {level(w2, skew)}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true",
                        help="ask the command line for JSON payloads")
    args = parser.parse_args()
    failures = run_corpus(args.json)
    completer_levels()
    if failures:
        print(f"\n{failures} corpus file(s) came back unexpected",
              file=sys.stderr)
        return 1
    print("\nall corpus files came back as expected")
    return 0


if __name__ == "__main__":
    sys.exit(main())
