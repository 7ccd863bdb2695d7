"""C0 distance of the best pigeonhole pair as n grows, for a bundled fixture."""
import argparse
import time

from ordlab.fixtures import FIXTURES
from ordlab.search import count_Sn_prime, pigeonhole_search


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fixture", choices=sorted(FIXTURES), default="contracting")
    ap.add_argument("--ns", type=int, nargs="+", default=[6, 8, 10, 12])
    ap.add_argument("--grid", type=int, default=4)
    ap.add_argument("--mode", choices=["best", "closest", "first"], default="best")
    args = ap.parse_args()
    alpha, beta = FIXTURES[args.fixture]()
    print("n\twords\tc0_distance\tgrid_discrepancy\tpair\tseconds")
    for n in args.ns:
        start = time.perf_counter()
        res = pigeonhole_search(alpha, beta, n=n, grid_N=args.grid, mode=args.mode)
        secs = time.perf_counter() - start
        print(f"{n}\t{count_Sn_prime(n)}\t{res.c0_distance}\t{res.grid_discrepancy}\t{','.join(res.words)}\t{secs:.1f}", flush=True)


if __name__ == "__main__":
    main()
