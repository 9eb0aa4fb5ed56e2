#!/usr/bin/env python3
"""Benchmark the compiled graph kernels against the pure-Python fallback.

Runs pruning, SCC labelling, and grounding closure on random graphs of
increasing size, and on the real WordNet-derived graph when the data files
are staged under data/wordnet.  Results are wall-clock medians of --repeat
runs; the two backends' outputs are asserted equal before timing counts.

Usage: python benchmarks/bench_kernels.py [--sizes 1000,10000,100000] [--repeat 3]
"""
import argparse
import time
from pathlib import Path

import numpy as np

from groundlex.defgraph import DefinitionGraph, _pykern

try:
    from groundlex.defgraph import _ckern
except ImportError:
    _ckern = None


def random_graph(rng, n, avg_degree=7):
    m = n * avg_degree
    src = rng.integers(0, n, m, dtype=np.int32)
    dst = rng.integers(0, n, m, dtype=np.int32)
    keep = src != dst
    return DefinitionGraph([f"n{i}" for i in range(n)], src[keep], dst[keep])


def wordnet_graph():
    data_dir = Path(__file__).resolve().parent.parent / "data" / "wordnet"
    if not (data_dir / "data.noun").exists():
        return None
    from groundlex import lexdata
    from groundlex.defgraph import build_definition_graph

    lex = lexdata.build_lexicon(
        lexdata.read_wordnet_dir(data_dir), stoplist=lexdata.load_stoplist()
    )
    return build_definition_graph(lex)


def time_backend(impl, graph, repeat):
    args = (graph.n_nodes, graph.out_indptr, graph.out_indices,
            graph.in_indptr, graph.in_indices)
    seeds = (np.arange(graph.n_nodes) % 17 == 0).astype(np.uint8)
    results, times = {}, {}
    for name, fn in (
        ("prune", lambda: impl.prune_layers(*args)),
        ("scc", lambda: impl.scc_labels(
            graph.n_nodes, graph.out_indptr, graph.out_indices,
            np.ones(graph.n_nodes, dtype=np.uint8))),
        ("closure", lambda: impl.closure_depths(*args, seeds)),
    ):
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            out = fn()
            best = min(best, time.perf_counter() - t0)
        results[name] = out
        times[name] = best
    return results, times


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="1000,10000,100000")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _ckern is None:
        print("compiled backend unavailable; build it with pip install -e .")
        return

    rng = np.random.default_rng(0)
    graphs = [(f"random n={s}", random_graph(rng, int(s)))
              for s in args.sizes.split(",")]
    wn = wordnet_graph()
    if wn is not None:
        graphs.append((f"wordnet n={wn.n_nodes}", wn))
    else:
        print("(wordnet graph skipped: data files not staged)")

    print(f"{'graph':>18} {'kernel':>8} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for label, graph in graphs:
        pure_out, pure_t = time_backend(_pykern, graph, args.repeat)
        comp_out, comp_t = time_backend(_ckern, graph, args.repeat)
        for name in ("prune", "scc", "closure"):
            assert np.array_equal(pure_out[name], comp_out[name]), (label, name)
            speedup = pure_t[name] / comp_t[name] if comp_t[name] > 0 else float("inf")
            print(f"{label:>18} {name:>8} {pure_t[name]:>10.4f} "
                  f"{comp_t[name]:>13.4f} {speedup:>7.1f}x")


if __name__ == "__main__":
    main()
