"""Write the prediction-vs-oracle CSV for a range of m (thin wrapper over ``tzdg sweep``)."""

import argparse
import sys

from tzdg.cli import main as cli_main


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--from", dest="m_from", type=int, default=4)
    parser.add_argument("--to", dest="m_to", type=int, default=200)
    parser.add_argument("--out", default="sweep.csv")
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    argv = ["sweep", "--from", str(args.m_from), "--to", str(args.m_to), "--out", args.out, "--jobs", str(args.jobs)]
    sys.exit(cli_main(argv))


if __name__ == "__main__":
    main()
