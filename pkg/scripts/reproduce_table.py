"""Print the Z_{2^s} summary rows (bounds next to exact search) for a grid of s and t."""
import argparse
import json

from homfcc.reproduce import render, table_rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--s", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--t-max", type=int, default=3)
    ap.add_argument("--budget", type=int, default=200_000)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    out = {}
    for s in args.s:
        rows = table_rows(s, range(1, args.t_max + 1), budget=args.budget)
        if args.json:
            out[s] = [r.as_dict() for r in rows]
        else:
            print(f"Z_{2 ** s}")
            print(render(rows))
            print()
    if args.json:
        print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
