"""Inspect the k[x] inside H4 example: coaction idempotent, axioms and downstream verdicts."""
import argparse

from partialhopf.actions import check_partial_bimodule, check_symmetry_assumption
from partialhopf.catalog import KX_RIGHT_IDEMPOTENT, check_coaction_idempotent, kx_in_h4_bimodule, sweedler_h4
from partialhopf.duality import build_duality_maps, check_duality
from partialhopf.envelope import build_envelope, check_right_ideal
from partialhopf.smash import build_underline_smash


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--duality", action="store_true", help="also run the 32-dimensional duality checks")
    args = ap.parse_args()
    print(check_coaction_idempotent(sweedler_h4(), KX_RIGHT_IDEMPOTENT).summary())
    d = kx_in_h4_bimodule()
    print(check_partial_bimodule(d).summary())
    print(check_symmetry_assumption(d).summary())
    s = build_underline_smash(d)
    print(f"partial smash product: dim {s.dim}")
    env = build_envelope(d)
    print(f"envelope: dim {env.dim}, algebra {env.B_table is not None}")
    print(check_right_ideal(env).summary())
    if args.duality:
        rep = check_duality(build_duality_maps(d, s))
        print(rep.summary())
        for n in rep.notes:
            print("  note:", n)


if __name__ == "__main__":
    main()
