"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--batch 64] [--repeat 5]

Shapes default to the full-size network: a (batch, 40, 64, 2) input into the
3x3 Q/K/V convolutions and a (batch, 256, 256) attention score matrix.
"""

import argparse
import timeit

import numpy as np

from wssnet import _conv_py

try:
    from wssnet import _conv
except ImportError:
    _conv = None


def cases(batch, rng):
    x = rng.standard_normal((batch, 40, 64, 2))
    w = rng.standard_normal((3, 3, 2, 4))
    b = rng.standard_normal(4)
    dy = rng.standard_normal((batch, 40, 64, 4))
    s = rng.standard_normal((batch, 256, 256))
    m = s.copy()
    _conv_py.softmax_rows_inplace(m)
    dm = rng.standard_normal(s.shape)
    return {
        "conv3x3_forward": lambda k: k.conv3x3_forward(x, w, b),
        "conv3x3_backward": lambda k: k.conv3x3_backward(x, w, dy, True),
        "softmax_rows": lambda k: k.softmax_rows_inplace(s.copy()),
        "softmax_backward": lambda k: k.softmax_backward_inplace(m, dm.copy(), 0.125),
    }


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--batch", type=int, default=64)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    backends = {"python": _conv_py}
    if _conv is not None:
        backends["cython"] = _conv
    else:
        print("compiled extension not built; timing the fallback only")

    print(f"{'kernel':<18}" + "".join(f"{name:>12}" for name in backends) + "     speedup")
    for name, call in cases(args.batch, np.random.default_rng(0)).items():
        times = {k: best_of(lambda: call(mod), args.repeat) for k, mod in backends.items()}
        row = f"{name:<18}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times.values())
        if "cython" in times:
            row += f"  {times['python'] / times['cython']:>9.2f}x"
        print(row)


if __name__ == "__main__":
    main()
