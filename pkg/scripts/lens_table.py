#!/usr/bin/env python3
"""Tabulate framing invariants of the lens spaces L(m, 1).

For each m the table lists the quotient framing defect, the rho offset
canonicalizing it, and the mu/lambda invariants of every spin structure
seen from the -m-framed unknot presentation.
"""

import argparse

from framings import (
    act,
    characteristic_sublinks,
    cyclic,
    homology,
    lens_canonical_offset,
    lens_double_splits,
    mu_invariant,
    mu_representative,
    lambda_from_mu,
    quotient_framing_defect,
    unknot,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=16, help="largest m (default 16)")
    args = parser.parse_args()

    header = f"{'m':>3}  {'h(phi+)':>8}  {'rho off':>7}  {'canon h':>7}  {'splits':>6}  mu / lambda per spin structure"
    print(header)
    print("-" * len(header))
    for m in range(1, args.max + 1):
        defect = quotient_framing_defect(cyclic(m))
        offset = lens_canonical_offset(m)
        landed = act(defect, offset)
        link = unknot(-m)
        r = homology(link).r
        spins = []
        for c in characteristic_sublinks(link):
            mu = mu_invariant(link, c)
            lam = lambda_from_mu(r, mu)
            spins.append(f"[{c.bitmask}] mu={mu_representative(mu):>2} "
                         f"lam={lam.representative:>2}")
        print(f"{m:>3}  {defect.h:>8}  {offset.m_rho:>7}  {landed.h:>7}  "
              f"{'yes' if lens_double_splits(m) else 'no':>6}  " + "   ".join(spins))


if __name__ == "__main__":
    main()
