"""Compare the compiled and numpy kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Times the Jacobi eigensolver, one full 64x128 conditional-entropy grid,
the 8-point refinement poll, and an end-to-end oracle discord evaluation.
"""
import argparse
import importlib
import os
import subprocess
import sys
import timeit

import numpy as np


def bench_backend(mod, repeat):
    from csdiscord.localops import bloch_decompose
    from csdiscord.oracle import _grid
    from csdiscord.states import random_state

    rng = np.random.default_rng(0)
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    h = g + g.conj().T
    bc = bloch_decompose(random_state(rng))
    _, _, dirs = _grid(64, 128)
    poll = dirs[:8].copy()
    cases = {
        "jacobi_eigh4": (lambda: mod.jacobi_eigh4(h, 100), 2000),
        "grid 64x128": (lambda: mod.cond_entropy_dirs(bc.a, bc.t, bc.b, dirs), 50),
        "poll 8 dirs": (lambda: mod.cond_entropy_dirs(bc.a, bc.t, bc.b, poll), 5000),
    }
    out = {}
    for name, (fn, number) in cases.items():
        best = min(timeit.repeat(fn, number=number, repeat=repeat)) / number
        out[name] = best
    return out


def end_to_end(pure):
    # kernel selection happens at import, so each backend gets its own process
    code = (
        "import timeit, numpy as np\n"
        "from csdiscord.states import random_cs_state\n"
        "from csdiscord.oracle import discord_numeric\n"
        "from csdiscord.kernels import BACKEND\n"
        "rng = np.random.default_rng(0)\n"
        "rhos = [random_cs_state(rng) for _ in range(20)]\n"
        "t = min(timeit.repeat(lambda: [discord_numeric(r) for r in rhos], number=1, repeat=3)) / 20\n"
        "print(BACKEND, t)\n"
    )
    env = dict(os.environ, CSDISCORD_PURE_PYTHON="1" if pure else "0")
    res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    backend, t = res.stdout.split()
    return backend, float(t)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    mods = {"python": importlib.import_module("csdiscord._pykernels")}
    try:
        mods["cython"] = importlib.import_module("csdiscord._ckernels")
    except ImportError:
        print("compiled kernels not built; only the numpy fallback is timed")

    results = {name: bench_backend(mod, args.repeat) for name, mod in mods.items()}
    cases = list(next(iter(results.values())))
    print(f"{'kernel':<16}" + "".join(f"{n:>14}" for n in results) + ("     speedup" if len(results) == 2 else ""))
    for case in cases:
        row = f"{case:<16}" + "".join(f"{results[n][case] * 1e6:>12.1f}us" for n in results)
        if len(results) == 2:
            row += f"{results['python'][case] / results['cython'][case]:>11.1f}x"
        print(row)

    rows = [end_to_end(pure=True)]
    if "cython" in mods:
        rows.append(end_to_end(pure=False))
    print()
    for backend, t in rows:
        print(f"discord_numeric per state [{backend}]: {t * 1e3:.2f} ms")


if __name__ == "__main__":
    main()
