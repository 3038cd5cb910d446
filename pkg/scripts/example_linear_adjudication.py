"""Exhaustively check the C_f construction for f(u) = (u1+u2, u2+u3) over Z_4 with
G = [[2,2,0],[0,2,2]], and report why it does or does not correct t errors."""
import argparse

from homfcc.encoders import encoder_linear
from homfcc.functions import analyze_linear, image
from homfcc.verify import counterexample_holds, verify_fcc
from homfcc.witnesses import EXAMPLE_GENERATOR, example_linear


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t", type=int, nargs="+", default=[1, 2])
    args = ap.parse_args()
    f = example_linear()
    info = analyze_linear(f)
    print(f"kernel size {info.kernel_size}, A = {info.kernel_weight_sum}, |Im f| = {len(image(f))}")
    for t in args.t:
        enc = encoder_linear(f, EXAMPLE_GENERATOR, t)
        rep = verify_fcc(enc, f, t)
        p = enc.provenance
        print(f"t={t}: {rep.status}; pairs {rep.pairs_total}, f-distinct {rep.pairs_checked}, "
              f"violations {rep.violations}")
        print(f"  d_h(C) = {p['code_min_distance']}, v.G injective on Im f: {p['injective_on_image']}")
        c = rep.counterexample
        if c is not None:
            print(f"  first counterexample x={c.x} y={c.y}: f(x)={f(c.x)} f(y)={f(c.y)}, "
                  f"Enc distance {c.distance} < {c.required}; re-validated: {counterexample_holds(enc, f, c)}")
            print(f"  parities {enc.parity(c.x)} and {enc.parity(c.y)}")


if __name__ == "__main__":
    main()
