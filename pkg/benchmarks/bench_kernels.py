"""Compare the compiled and pure-Python Bruhat-order kernels.

Usage: python3 benchmarks/bench_kernels.py [--n 6] [--repeat 3]
"""

from __future__ import annotations

import argparse
import random
import timeit
from itertools import permutations

from tropflag import _pykernels

try:
    from tropflag import _kernels
except ImportError:
    _kernels = None


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=6, help="size of the symmetric group for the full table")
    ap.add_argument("--pairs", type=int, default=20000, help="random pairs for the single-test timing")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    perms = list(permutations(range(1, args.n + 1)))
    rng = random.Random(0)
    pairs = [(rng.choice(perms), rng.choice(perms)) for _ in range(args.pairs)]
    backends = {"python": _pykernels}
    if _kernels is not None:
        backends["cython"] = _kernels
    else:
        print("compiled extension not built; timing the fallback only")

    ref = _pykernels.leq_matrix(perms)
    results = {}
    for name, mod in backends.items():
        if mod.leq_matrix(perms) != ref:
            raise SystemExit(f"{name} table disagrees with the reference")
        t_tab = min(timeit.repeat(lambda: mod.leq_matrix(perms), number=1, repeat=args.repeat))
        t_pair = min(timeit.repeat(lambda: [mod.bruhat_leq(u, v) for u, v in pairs],
                                   number=1, repeat=args.repeat))
        results[name] = (t_tab, t_pair)
        print(f"{name:>7}: order table of S_{args.n} ({len(perms)}^2 tests) {t_tab:8.4f} s | "
              f"{args.pairs} single tests {t_pair:8.4f} s")
    if len(results) == 2:
        (pt, pp), (ct, cp) = results["python"], results["cython"]
        print(f"speed-up: table x{pt / ct:.1f}, single tests x{pp / cp:.1f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
