"""Compare the compiled and pure-Python row reduction kernels.

Run:  python benchmarks/bench_kernels.py [--repeat 5] [--json out.json]

Timings cover raw RREF on random sparse integer matrices (over Q and F_p)
and an end-to-end intertwiner solve, Hom(T, M) for a D~_7 series module.
"""
import argparse
import json
import platform
import random
import statistics
import time

from tiltrep import _rref_py

try:
    from tiltrep import _rref as _rref_c
except ImportError:
    _rref_c = None


def random_rows(rng, nrows, ncols, density=0.15):
    return [[rng.choice((-2, -1, 1, 2, 3)) if rng.random() < density else 0 for _ in range(ncols)]
            for _ in range(nrows)]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def bench_rref(repeat):
    rng = random.Random(11)
    out = []
    for n in (40, 80, 160):
        rows = random_rows(rng, n, n + 10)
        for kernel in ("rational", "modp"):
            if kernel == "rational":
                py = lambda: _rref_py.rref_rational(rows, n + 10)  # noqa: E731
                cy = (lambda: _rref_c.rref_rational(rows, n + 10)) if _rref_c else None  # noqa: E731
            else:
                py = lambda: _rref_py.rref_modp(rows, n + 10, 32003)  # noqa: E731
                cy = (lambda: _rref_c.rref_modp(rows, n + 10, 32003)) if _rref_c else None  # noqa: E731
            if cy is not None:
                assert py() == cy(), "backends disagree"
            t_py = best_of(py, repeat)
            t_cy = best_of(cy, repeat) if cy else (float("nan"), float("nan"))
            out.append({"case": f"rref_{kernel} {n}x{n + 10}", "python_s": t_py[0], "compiled_s": t_cy[0],
                        "speedup": t_py[0] / t_cy[0] if cy else None})
    return out


def bench_hom(repeat):
    from tiltrep import _backend
    from tiltrep.series import build_rank2, build_tilting_dn
    from tiltrep.tilt import apply_functor

    T = build_tilting_dn(7)
    M = build_rank2(5, 2, 4, 6)
    res = {}
    for name, mod in (("python", _rref_py), ("compiled", _rref_c)):
        if mod is None:
            res[name] = float("nan")
            continue
        saved = (_backend.rref_rational, _backend.rref_modp)
        _backend.rref_rational, _backend.rref_modp = mod.rref_rational, mod.rref_modp
        try:
            res[name] = best_of(lambda: apply_functor(T, M), repeat)[0]
        finally:
            _backend.rref_rational, _backend.rref_modp = saved
    return [{"case": "apply_functor D~7 M_6^(2,4)", "python_s": res["python"], "compiled_s": res["compiled"],
             "speedup": res["python"] / res["compiled"] if _rref_c else None}]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", help="also write results to this file")
    args = ap.parse_args()
    rows = bench_rref(args.repeat) + bench_hom(max(1, args.repeat // 2))
    print(f"python {platform.python_version()}, compiled kernels: {'yes' if _rref_c else 'no'}")
    print(f"{'case':34s} {'python (s)':>11s} {'compiled (s)':>13s} {'speedup':>8s}")
    for r in rows:
        sp = f"{r['speedup']:.1f}x" if r["speedup"] else "-"
        print(f"{r['case']:34s} {r['python_s']:11.4f} {r['compiled_s']:13.4f} {sp:>8s}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
