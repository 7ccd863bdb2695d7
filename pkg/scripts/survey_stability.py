"""Fixed-point survey of a fixed ball of elements over growing realizations."""
import argparse
import json
import time

from ordlab.realization import enumerate_ball, fixed_point_survey, realize_gamma


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--elements", type=int, default=6, help="radius of the surveyed elements")
    ap.add_argument("--orbits", type=int, nargs="+", default=[6, 7, 8], help="realization radii")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    elements = enumerate_ball(args.elements)
    rows = []
    for radius in args.orbits:
        start = time.perf_counter()
        rep = fixed_point_survey(realize_gamma(radius), elements, workers=args.workers)
        rows.append({
            "orbit_radius": radius,
            "max_isolated": rep["max_isolated"],
            "fixed_intervals": len(rep["fixed_intervals"]),
            "skipped": rep["skipped_insufficient_data"],
            "histogram": rep["histogram"],
            "seconds": round(time.perf_counter() - start, 1),
        })
        print(json.dumps(rows[-1]), flush=True)


if __name__ == "__main__":
    main()
