#!/usr/bin/env python3
"""Which amplitude homology of X(A) does dim Hom_K(X, theta^n D(A^)) track?

For random modules over random small categories, compares the left side with
H^(s*n)_(r) X(A) for every amplitude r and both signs s, and reports the
candidates that match on every instance.
"""
import argparse

import numpy as np

from ndgtool.ncx.core import homology
from ndgtool.ndgcat import (dual_module, khom_module, module_functor, object_choice,
                            random_category, random_module, representable)
from ndgtool.suites import suite_prime
from ndgtool.scalars import prime_field


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--N", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--trials", type=int, default=15)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for N in args.N:
        F = prime_field(suite_prime(N), N)
        candidates = {(s, r): 0 for s in (1, -1) for r in range(1, N)}
        total = 0
        for trial in range(args.trials):
            rng = np.random.default_rng([args.seed, N, trial])
            C = random_category(F, rng)
            X = random_module(C, rng)
            A = object_choice(C, rng)
            D = dual_module(representable(C, A, "left"))
            V = X.at(A)
            lo, hi = V.degree_range()
            for n in range(-hi - 1, max(hi, -lo) + 2):
                lhs = khom_module(X, module_functor(D, "theta", n), 0)
                total += 1
                for (s, r) in candidates:
                    candidates[(s, r)] += lhs == homology(V, s * n, r).h_dim
        print(f"N={N}: {total} (instance, n) pairs")
        for (s, r), hits in sorted(candidates.items()):
            tag = "  <- always" if hits == total else ""
            print(f"  H^({'+' if s > 0 else '-'}n)_({r}): {hits}/{total}{tag}")


if __name__ == "__main__":
    main()
