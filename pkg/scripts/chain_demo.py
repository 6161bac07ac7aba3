"""Print certificate chains for a few semigroups and tally outcomes over a genus range."""

import argparse
from collections import Counter

from weierstrass import tree
from weierstrass.core import effective_weight, from_generators
from weierstrass.families import komeda
from weierstrass.slide import certificate_chain


def show(S):
    chain = certificate_chain(S)
    print(f"{S} (g={S.genus}, ew={effective_weight(S)})")
    for step in chain.steps:
        print(f"  slide_{step.k} [{step.rule}] -> {step.after}   T {list(step.t_before)} -> {list(step.t_after)}")
    print(f"  {chain.outcome.value}\n")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--tally-genus", type=int, default=10)
    args = p.parse_args()

    for S in (from_generators([2, 11]), from_generators([3, 7]), from_generators([4, 5, 7]), komeda(5)):
        show(S)

    tally = Counter()

    def visit(S):
        if S.genus and effective_weight(S) <= S.genus - 1:
            tally[certificate_chain(S).outcome.value] += 1

    tree.enumerate(tree.EnumerationFilter(args.tally_genus), visitor=visit)
    print(f"outcomes for ew <= g-1, g <= {args.tally_genus}:", dict(tally))


if __name__ == "__main__":
    main()
