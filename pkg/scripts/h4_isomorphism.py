"""Compare the stated basis map H4 -> H4* with the map that is a Hopf isomorphism.

Prints the multiplication table of H4* on {1*+c*, T, P, TP} and the verdicts
for both candidate maps.
"""
import argparse

from partialhopf.catalog import h4_dual_named, sweedler_h4
from partialhopf.field import GF, QQ
from partialhopf.hopf import check_hopf_morphism


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--field", default="q", help="q or fp:<p> with p odd")
    args = ap.parse_args()
    f = QQ if args.field == "q" else GF(int(args.field.split(":")[1]))
    h, hs = sweedler_h4(f), h4_dual_named(f)
    print("product table of H4*:")
    for i, a in enumerate(hs.names):
        row = []
        for j in range(4):
            v = hs.mul(hs.e(i), hs.e(j))
            row.append(" + ".join(f"{f.format(c)}{hs.names[k]}" for k, c in enumerate(v) if c != 0) or "0")
        print(f"  {a:6s} | " + " | ".join(f"{r:8s}" for r in row))
    stated = check_hopf_morphism(f.eye(4), h, hs, "1->1*+c*, c->T, x->P, cx->TP")
    fixed = check_hopf_morphism(f.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]),
                                h, hs, "1->1*+c*, c->T, x->T*P, cx->P")
    for rep in (stated, fixed):
        print(rep.summary())


if __name__ == "__main__":
    main()
