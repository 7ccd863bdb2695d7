"""Scan the exact growth check |S'_n| >= 1.9^n and print the stable threshold."""
import argparse

from ordlab.search import check_growth, count_Sn_prime, growth_threshold


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=200)
    args = ap.parse_args()
    failing = [n for n in range(args.max_n + 1) if not check_growth(n)]
    n0 = growth_threshold(args.max_n)
    print(f"n with |S'_n| < 1.9^n: {failing}")
    print(f"threshold n0 = {n0}; |S'_n0| = {count_Sn_prime(n0)}")


if __name__ == "__main__":
    main()
