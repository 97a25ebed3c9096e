"""Compare the compiled and pure-Python extension kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import time

from imbalance import _kernels_py, kernels, poset, shapes


def cases():
    rng = random.Random(1)
    yield "antichain(8)", poset.antichain(8)
    yield "shape 4,3,2,1", shapes.shape_poset((4, 3, 2, 1))[0]
    yield "shape 4,4,3", shapes.shape_poset((4, 4, 3))[0]
    yield "random n=11 p=0.2", poset.random_poset(11, rng, 0.2)
    yield "random n=13 p=0.3", poset.random_poset(13, rng, 0.3)


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.BACKEND != "compiled":
        print("compiled kernel not available; build with `pip install -e . --no-build-isolation`")
        return
    from imbalance import _kernels

    print(f"{'case':22s} {'e(P)':>10s} {'python s':>10s} {'compiled s':>11s} {'speedup':>8s}")
    for name, P in cases():
        preds = list(P.below)
        labels = list(poset.natural_labeling(P))
        cap = poset.DEFAULT_CAP
        t_py, r_py = timed(lambda: _kernels_py.extension_stats(P.n, preds, labels, cap), args.repeat)
        t_c, r_c = timed(lambda: _kernels.extension_stats(P.n, preds, labels, cap), args.repeat)
        assert r_py == r_c, name
        print(f"{name:22s} {r_c[0]:10d} {t_py:10.3f} {t_c:11.4f} {t_py / t_c:7.0f}x")


if __name__ == "__main__":
    main()
