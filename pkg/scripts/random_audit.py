#!/usr/bin/env python3
"""Audit the implication chain on randomly generated pairs.

For pairs whose column spaces meet in a line, the chain says: some
scalings glue the pair, therefore some positive multiple of the
lattice point lies in each semigroup, therefore the rational cones
share a nonzero point, which happens exactly when the semigroups
share a nonzero element.  Every audited pair must come back with an
empty violation list; each gluing the bounded search finds is then
re-verified from scratch.  The sweep is seeded, so runs reproduce.

Usage: python3 scripts/random_audit.py [--pairs N] [--seed S] [--kmax K]
"""

import argparse
import random
import sys

from semiglue import (
    GluingCandidate,
    SemigroupGens,
    check_rank_conditions,
    implication_chain_audit,
    verify_gluing,
)


def random_rank2_gens(rng, prefix):
    """Return 2 to 4 distinct points spanning at most a plane, or None."""
    for _ in range(40):
        base = [tuple(rng.randrange(4) for _ in range(3)) for _ in range(2)]
        cols = set()
        for s, t in ((1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (1, 3)):
            col = tuple(s * x + t * y for x, y in zip(*base))
            if any(col):
                cols.add(col)
        if len(cols) >= 2:
            chosen = sorted(cols)[:rng.randrange(2, min(4, len(cols)) + 1)]
            return SemigroupGens.from_columns(chosen, prefix)
    return None


def random_ray_gens(rng, prefix):
    """Return one or two distinct multiples of a plane direction."""
    direction = tuple(rng.randrange(4) for _ in range(2))
    if not any(direction):
        direction = (1, 2)
    scales = sorted({rng.randrange(1, 5) for _ in range(2)})
    cols = [tuple(s * x for x in direction) for s in scales]
    return SemigroupGens.from_columns(cols, prefix)


def random_plane_gens(rng, prefix):
    """Return 2 or 3 distinct nonzero plane points, or None."""
    cols = set()
    for _ in range(rng.randrange(2, 4)):
        col = (rng.randrange(5), rng.randrange(5))
        if any(col):
            cols.add(col)
    if len(cols) < 2:
        return None
    return SemigroupGens.from_columns(sorted(cols), prefix)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=200,
                        help="number of rank-compatible pairs to audit")
    parser.add_argument("--seed", type=int, default=20260823)
    parser.add_argument("--kmax", type=int, default=12,
                        help="bound on the scalings searched per pair")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    audited = attempts = glued = verified = violations = 0
    inconclusive = 0
    while audited < args.pairs and attempts < 30 * args.pairs:
        attempts += 1
        if attempts % 2:
            a = random_rank2_gens(rng, "x")
            b = random_rank2_gens(rng, "y")
        else:
            a = random_plane_gens(rng, "x")
            b = random_ray_gens(rng, "y")
        if a is None or b is None or not check_rank_conditions(a, b).ok:
            continue
        audit = implication_chain_audit(a, b, kmax=args.kmax)
        audited += 1
        violations += len(audit.violations)
        for violation in audit.violations:
            print(f"violation: {violation}", file=sys.stderr)
            print(f"  first:  {a.matrix.columns()}", file=sys.stderr)
            print(f"  second: {b.matrix.columns()}", file=sys.stderr)
        if audit.gluing is None:
            inconclusive += 1
        elif audit.gluing:
            glued += 1
            k1, k2 = audit.pair
            report = verify_gluing(GluingCandidate(a, b, k1, k2))
            if report.is_gluing:
                verified += 1
            else:
                violations += 1
                print(f"violation: scalings ({k1}, {k2}) found but not "
                      f"verified", file=sys.stderr)

    print(f"audited {audited} pairs ({attempts} sampled)")
    print(f"gluings found and re-verified: {verified} of {glued}")
    print(f"searches inconclusive at kmax {args.kmax}: {inconclusive}")
    print(f"chain violations: {violations}")
    return 1 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
