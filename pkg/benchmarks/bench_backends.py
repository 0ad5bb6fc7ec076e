"""Time the numba kernel against the pure-Python fallback on the same instances.

    python3 benchmarks/bench_backends.py [--repeat 3] [--skip-large]

Both backends run in one process through the explicit `backend=` argument, so
DOMGAME_BACKEND does not need to change. The first numba call per signature is
a JIT compile; it is done once up front and excluded from the timings.
"""
from __future__ import annotations

import argparse
import statistics
import time

from domgame import _kernels
from domgame.enumeration import enumerate_connected_labeled
from domgame.families import cartesian_product, complete, corona, cycle, direct_product, family_D15, family_G
from domgame.game import Variant, solve


def _instances(skip_large: bool):
    cases = [
        ("D15", family_D15()),
        ("G_4", family_G(4)),
        ("(C5oK1) x K2", direct_product(corona(cycle(5)), complete(2))),
    ]
    if not skip_large:
        cases.append(("C5 box C5", cartesian_product(cycle(5), cycle(5))))
    return cases


def _solve_both(G, backend):
    return solve(G, Variant.CONNECTED, backend=backend), solve(G, Variant.TOTAL, backend=backend)


def _time(fn, repeat):
    samples, result = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples), result


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-large", action="store_true", help="leave out the 25-vertex grid")
    ap.add_argument("--scan-n", type=int, default=6, help="order of the exhaustive scan instance")
    args = ap.parse_args()

    backends = _kernels.available_backends()
    if "numba" in backends:
        _solve_both(complete(3), "numba")  # compile

    rows = []
    for name, G in _instances(args.skip_large):
        rep = 1 if G.n > 20 else args.repeat
        times, values = {}, set()
        for b in backends:
            times[b], val = _time(lambda: _solve_both(G, b), rep)
            values.add(val)
        assert len(values) == 1, f"backends disagree on {name}: {values}"
        rows.append((name, G.n, values.pop(), times))

    graphs = list(enumerate_connected_labeled(args.scan_n))
    times, values = {}, set()
    for b in backends:
        times[b], val = _time(lambda: tuple(_solve_both(G, b) for G in graphs if G.n >= 2), 1)
        values.add(val)
    assert len(values) == 1, "backends disagree on the scan"
    rows.append((f"scan n={args.scan_n} ({len(graphs)} graphs)", args.scan_n, None, times))

    head = f"{'instance':<30} {'n':>3} {'(cg, tcg)':>10}" + "".join(f" {b:>10}" for b in backends)
    if len(backends) == 2:
        head += f" {'speedup':>8}"
    print(head)
    for name, n, vals, times in rows:
        line = f"{name:<30} {n:>3} {str(vals or '-'):>10}" + "".join(f" {times[b]:>9.3f}s" for b in backends)
        if len(backends) == 2:
            line += f" {times['python'] / times['numba']:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
