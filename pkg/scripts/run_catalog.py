"""Run every verification pipeline on every catalog bimodule and tabulate the verdicts."""
import argparse
import time

from partialhopf import catalog
from partialhopf.pipeline import VERIFY_KINDS, GateFailure, verify


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--force", action="store_true", help="downgrade gates to warnings")
    ap.add_argument("--names", nargs="*", default=None, help="restrict to these entries")
    ap.add_argument("-v", "--verbose", action="store_true", help="list failing checks")
    args = ap.parse_args()
    kinds = [k for k in VERIFY_KINDS if k != "hopf"]
    print(f"{'entry':26s}" + "".join(f"{k:>15s}" for k in kinds) + "   secs")
    for c in catalog.CATALOG:
        if c.kind not in ("partial", "global") or (args.names and c.name not in args.names):
            continue
        d = c.build()
        d = d.as_partial() if c.kind == "global" else d
        t = time.time()
        cells, fails = [], {}
        for k in kinds:
            try:
                rep = verify(k, d, args.force)
                cells.append("pass" if rep.ok else "FAIL")
            except GateFailure as exc:
                rep = exc.report
                cells.append("gate")
            fails[k] = [x.name for x in rep.failures()]
        print(f"{c.name:26s}" + "".join(f"{s:>15s}" for s in cells) + f"  {time.time() - t:5.1f}")
        if args.verbose:
            for k, names in fails.items():
                if names:
                    print(f"    {k}: {', '.join(names)}")


if __name__ == "__main__":
    main()
