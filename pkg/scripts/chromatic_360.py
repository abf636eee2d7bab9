"""Colouring and clique certificates for Z~(Z_m); defaults to m = 360."""

import argparse
import json
import time

from tzdg import certify, formulas
from tzdg.graphs import build_total_zero_divisor_graph


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("m", nargs="?", type=int, default=360)
    args = parser.parse_args()
    start = time.perf_counter()
    g = build_total_zero_divisor_graph(args.m)
    coloring = certify.construct_coloring(args.m)
    clique = certify.chromatic_lower_clique(args.m)
    result = {
        "m": args.m,
        "vertices": g.order,
        "edges": g.size,
        "predicted": formulas.predict_chromatic(args.m),
        "colouring_size": coloring.size,
        "colouring_check": certify.verify_certificate(g, coloring).detail,
        "clique": clique.payload,
        "clique_check": certify.verify_certificate(g, clique).detail,
        "seconds": round(time.perf_counter() - start, 3),
    }
    print(json.dumps(result, indent=2))


if __name__ == "__main__":
    main()
