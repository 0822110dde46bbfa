"""Compare the compiled and pure-Python kernel backends.

Two measurements per backend: the ``separate`` kernel alone on random
hypergraphs of growing size, and full decomposition runs.

    python bench/bench_kernels.py [--repeat 5] [--seed 0]
"""

import argparse
import random
import statistics
import time

from htdecomp import available_backends, build_hypergraph, det_k_decomp


def random_hypergraph(rng, n_edges, n_vertices, arity=3):
    names = [f"v{i}" for i in range(n_vertices)]
    return build_hypergraph([(f"e{i}", rng.sample(names, arity)) for i in range(n_edges)])


def grid2(n):
    edges = []
    for j in range(n):
        edges.append((f"r{j}", [f"x0_{j}", f"x1_{j}"]))
        if j + 1 < n:
            edges.append((f"h0_{j}", [f"x0_{j}", f"x0_{j + 1}"]))
            edges.append((f"h1_{j}", [f"x1_{j}", f"x1_{j + 1}"]))
    return build_hypergraph(edges)


def cycle(n):
    return build_hypergraph([(f"e{i}", [f"v{i}", f"v{(i + 1) % n}"]) for i in range(n)])


def path(n):
    return build_hypergraph([(f"e{i}", [f"v{i}", f"v{i + 1}"]) for i in range(n)])


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times), statistics.median(times)


def bench_separate(rng, backends, repeat):
    rows = []
    for n_edges, n_vertices in [(16, 24), (64, 96), (256, 384), (1024, 1536)]:
        h = random_hypergraph(rng, n_edges, n_vertices)
        queries = [(rng.getrandbits(n_edges), rng.getrandbits(n_edges) & rng.getrandbits(n_edges)
                    & rng.getrandbits(n_edges)) for _ in range(200)]
        row = [f"separate m={n_edges}"]
        for b in backends:
            hb = h.with_backend(b)
            best, _ = best_of(lambda: [hb.separate(e, s) for e, s in queries], repeat)
            row.append(best / len(queries))
        rows.append(row)
    return rows


def bench_engine(backends, repeat):
    cases = [("path300 k=1", path(300), 1), ("path120 k=2", path(120), 2),
             ("grid2x40 k=2", grid2(40), 2), ("cycle60 k=2", cycle(60), 2),
             ("cycle12 k=1", cycle(12), 1)]
    rows = []
    for label, h, k in cases:
        row = [label]
        for b in backends:
            hb = h.with_backend(b)
            best, _ = best_of(lambda: det_k_decomp(hb, k), repeat)
            row.append(best)
        rows.append(row)
    return rows


def fmt_time(t):
    if t < 1e-3:
        return f"{t * 1e6:9.1f} us"
    if t < 1:
        return f"{t * 1e3:9.2f} ms"
    return f"{t:9.3f} s "


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    backends = sorted(available_backends(), reverse=True)
    rng = random.Random(args.seed)
    rows = bench_separate(rng, backends, args.repeat) + bench_engine(backends, args.repeat)
    header = f"{'case':<24}" + "".join(f"{b:>14}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, *times in rows:
        line = f"{label:<24}" + "".join(f"{fmt_time(t):>14}" for t in times)
        if len(times) == 2:
            line += f"{times[0] / times[1]:>9.2f}x"
        print(line)


if __name__ == "__main__":
    main()
