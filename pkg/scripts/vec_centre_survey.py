"""Survey the linear backend across small groups.

For each group up to the size guard, enumerate the simple objects of
the centre (untwisted, plus the nontrivial cocycle on Z2) and tabulate
counts, dimension vectors, and the sum rule.  Abelian groups of order n
should show n^2 invertible simples; S3 shows the 8 simples of its
double with squared dimensions summing to 36.
"""

import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from monocentre.config import GuardConfig
from monocentre.monoidal import S3
from monocentre.veck import centre_simples, trivial_cocycle, z2_nontrivial_cocycle


def cyclic(n):
    return tuple(tuple((i + j) % n for j in range(n)) for i in range(n))


def survey(label, table, omega=None, cfg=None):
    start = time.perf_counter()
    result = centre_simples(table, omega, cfg)
    elapsed = time.perf_counter() - start
    dims = sorted(s.total_dim for s in result.simples)
    status = "ok" if result.all_passed else "INCOMPLETE"
    print(f"{label:<22} |G|={result.group_order}  simples={len(result.simples):>2}  "
          f"dims={dims}  sum_sq={result.sum_of_squares:>3}  "
          f"[{status}, {elapsed:.2f}s]")
    return result


def run():
    cfg = GuardConfig(vec_dim_bound=8)
    for n in range(2, 7):
        survey(f"cyclic Z{n}, trivial", cyclic(n),
               trivial_cocycle(cyclic(n)), cfg)
    survey("Z2, nontrivial omega", cyclic(2), z2_nontrivial_cocycle(), cfg)
    survey("S3, trivial", S3, trivial_cocycle(S3), cfg)
    return 0


if __name__ == "__main__":
    raise SystemExit(run())
