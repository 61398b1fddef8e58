"""Benchmark the pure and compiled kernel lanes on matched workloads.

Run as: python3 benchmarks/bench_kernels.py [--repeat N]

Both lanes implement identical algorithms, so outputs are asserted equal
while timing.  The workloads mirror what the library actually does: GF(2)
elimination on cycle incidence bitmasks, Bareiss determinants on small
integer matrices, branch-and-bound packing, and the hitting-set sweep.
"""

from __future__ import annotations

import argparse
import random
import time

from cycleduality import kernels


def _workloads(seed: int):
    rng = random.Random(seed)
    gf2 = []
    for _ in range(60):
        nr, nc = rng.randint(8, 24), rng.randint(8, 40)
        gf2.append(([rng.getrandbits(nc) for _ in range(nr)], nc))
    dets = []
    for _ in range(40):
        n = rng.randint(6, 9)
        dets.append([[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)])
    packs = []
    for _ in range(12):
        k = rng.randint(16, 22)
        masks = [rng.getrandbits(24) | (1 << rng.randrange(24)) for _ in range(k)]
        weights = [rng.randint(1, 5) for _ in range(k)]
        packs.append((masks, weights))
    hits = []
    for _ in range(12):
        uni = rng.randint(14, 18)
        cms = [rng.getrandbits(uni) | 1 for _ in range(rng.randint(4, 9))]
        hits.append((cms, uni))
    return gf2, dets, packs, hits


def _run(impl, gf2, dets, packs, hits):
    out = []
    for rows, nc in gf2:
        out.append(impl.gf2_eliminate(rows, nc))
        out.append(impl.gf2_solve_bits(rows, nc, (1 << len(rows)) - 1))
    for m in dets:
        out.append(impl.det_bareiss(m))
    for masks, weights in packs:
        out.append(impl.max_weight_disjoint(masks, weights, 10**8))
    for cms, uni in hits:
        out.append(impl.min_hitting_mask(cms, uni, 10**8, None))
    return out


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if kernels.compiled is None:
        print("compiled lane not built; only timing the pure lane")
    lanes = [("python", kernels.pure)]
    if kernels.compiled is not None:
        lanes.append(("cython", kernels.compiled))

    work = _workloads(args.seed)
    results = {}
    times = {}
    for name, impl in lanes:
        best = float("inf")
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            out = _run(impl, *work)
            best = min(best, time.perf_counter() - t0)
        results[name] = out
        times[name] = best
        print(f"{name:>7}: {best * 1000:9.2f} ms")

    if len(lanes) == 2:
        assert results["python"] == results["cython"], "lane outputs differ"
        print(f"speedup: {times['python'] / times['cython']:.2f}x, outputs identical")


if __name__ == "__main__":
    main()
