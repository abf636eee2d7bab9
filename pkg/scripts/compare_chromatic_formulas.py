"""Table of the two chromatic closed forms against exact branch and bound.

Covers non-squarefree composite m whose graph has at most --max-vertices vertices.
"""

import argparse

from tzdg import formulas
from tzdg.arith import factor
from tzdg.exact import chromatic_number_exact
from tzdg.graphs import build_total_zero_divisor_graph


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m-max", type=int, default=400)
    parser.add_argument("--max-vertices", type=int, default=64)
    args = parser.parse_args()
    print("m\tconnected\tunified\tceil_half\texact")
    disagree = 0
    for m in range(4, args.m_max + 1):
        fm = factor(m)
        if fm.is_prime or formulas.predict_chromatic(fm)[1] == formulas.OUT_OF_SCOPE:
            continue
        if formulas.vertex_count(fm) > args.max_vertices:
            continue
        unified = formulas.predict_chromatic(fm)[0]
        exact, _ = chromatic_number_exact(build_total_zero_divisor_graph(m), max_vertices=args.max_vertices)
        connected = formulas.predict_connected(fm)
        alt = "" if connected else formulas.printed_disconnected_chromatic(fm)
        disagree += exact != unified
        print(f"{m}\t{connected}\t{unified}\t{alt}\t{exact}")
    print(f"# unified form disagrees with exact on {disagree} moduli")


if __name__ == "__main__":
    main()
