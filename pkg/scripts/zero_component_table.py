"""Print the degree-0 derivation table for block-graded matrix algebras.

For L = [A, A] / Z with A = M_n and blocks (p, q), compares the degree-0
derivations of L with Der(L_0), and reports the rank of restriction to L_0.
"""

import argparse

from gradedquot.constructors import full_matrix_algebra
from gradedquot.derivations import compare_zero_component, lie_from_derived, lie_from_skew
from gradedquot.grading import matrix_block_grading


def row(label, L, parts, degs):
    cmp = compare_zero_component(L, parts, degs.index(0))
    print(f"{label:22s} {L.dim:5d} {cmp.der_zero.dim:9d} {cmp.der_L0.dim:8d} "
          f"{cmp.restriction_rank:6d} {cmp.ad_center.dim:9d}")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args(argv)
    print(f"{'algebra':22s} {'dim L':>5s} {'Der_gr_0':>9s} {'Der(L0)':>8s} {'rank':>6s} {'ad Z(L0)':>9s}")
    for n in range(2, args.max_n + 1):
        for p in range(1, n // 2 + 1):
            A = full_matrix_algebra(n)
            L, parts, degs = lie_from_derived(A, matrix_block_grading(A, (p, n - p)))
            row(f"sl{n} blocks ({p},{n - p})", L, parts, degs)
    for n in (4, 6):
        A = full_matrix_algebra(n, involution="transpose")
        L, parts, degs, mode = lie_from_skew(A, matrix_block_grading(A, (n // 2, n // 2)))
        row(f"so{n} blocks ({n // 2},{n // 2})", L, parts, degs)


if __name__ == "__main__":
    main()
