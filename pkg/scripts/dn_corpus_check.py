"""Cross-check the d_n closed form against exhaustive node enumeration on a random corpus."""

import argparse
import json
import time
from collections import Counter

from posbasis.construct import basis_for_nodes, dn, optimal_nodes
from posbasis.corpus import CorpusConfig, generate_corpus
from posbasis.oracle import dn_oracle
from posbasis.verify import verify_positive_basis


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--count", type=int, default=60)
    ap.add_argument("--max-pieces", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--json", action="store_true", help="one JSON record per case")
    args = ap.parse_args()

    cfg = CorpusConfig(seed=args.seed, count=args.count, max_pieces=args.max_pieces)
    branches, bad = Counter(), 0
    t0 = time.perf_counter()
    for s in generate_corpus(cfg):
        for n in range(3, args.n_max + 1):
            if s.is_finite and n > s.cardinality:
                continue
            formula = dn(s, n)
            oracle = dn_oracle(s, n)
            fam = basis_for_nodes(s, optimal_nodes(s, n))
            ok = oracle.value == formula.degree == fam.max_degree and verify_positive_basis(s, fam.expanded).accepted
            branches[formula.branch.value] += 1
            bad += not ok
            if args.json:
                rec = {"set": str(s), "n": n, "formula": formula.degree, "oracle": oracle.value,
                       "branch": formula.branch.value, "ok": ok}
                print(json.dumps(rec))
            elif not ok:
                print(f"MISMATCH {s} n={n}: formula {formula.degree}, oracle {oracle.value}")
    if not args.json:
        for b, k in sorted(branches.items()):
            print(f"{b:>18}: {k}")
        print(f"# {sum(branches.values())} cases, {bad} failures, {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
