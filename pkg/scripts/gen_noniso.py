#!/usr/bin/env python3
"""Write isomorphism-free graph6 streams, one file per order, using nauty
canonical certificates (pynauty).

Graphs on n vertices are grown from the n-1 stream by adding a vertex with
every possible neighbourhood and keeping one graph per certificate.

Usage:
    python scripts/gen_noniso.py --max-n 9 --out data
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from adh_hamilton.graph import Graph, emit_graph6, parse_graph6

# published counts of unlabeled graphs (OEIS A000088)
KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668, 10: 12005168}


def _certificate(n: int, adj) -> bytes:
    import pynauty

    g = pynauty.Graph(n, adjacency_dict={v: [w for w in range(n) if adj[v] >> w & 1] for v in range(n)})
    return pynauty.certificate(g)


def extend(graphs: list[Graph]) -> list[Graph]:
    """Isomorphism classes on one more vertex, in first-seen order."""
    seen = set()
    out = []
    for G in graphs:
        n = G.n + 1
        for nb in range(1 << G.n):
            adj = list(G.adj) + [nb]
            for w in range(G.n):
                if nb >> w & 1:
                    adj[w] |= 1 << G.n
            cert = _certificate(n, adj)
            if cert not in seen:
                seen.add(cert)
                out.append(Graph(n, tuple(adj)))
    return out


def stream_path(out: Path, n: int) -> Path:
    return out / f"graphs{n}.g6"


def ensure_streams(max_n: int, out: Path, verbose: bool = False) -> dict[int, Path]:
    """Create (or reuse) ``graphs{n}.g6`` for n = 1..max_n; counts are checked."""
    out.mkdir(parents=True, exist_ok=True)
    paths = {}
    prev: list[Graph] | None = None
    for n in range(1, max_n + 1):
        path = stream_path(out, n)
        if path.exists() and sum(1 for _ in path.open()) == KNOWN_COUNTS[n]:
            paths[n] = path
            prev = None
            continue
        if prev is None:
            prev = [Graph(1, (0,))] if n == 1 else [parse_graph6(s) for s in stream_path(out, n - 1).open()]
        t0 = time.time()
        graphs = prev if n == 1 else extend(prev)
        if len(graphs) != KNOWN_COUNTS[n]:
            raise RuntimeError(f"n={n}: produced {len(graphs)} graphs, expected {KNOWN_COUNTS[n]}")
        tmp = path.with_suffix(".tmp")
        tmp.write_text("".join(emit_graph6(G) + "\n" for G in graphs))
        tmp.replace(path)
        if verbose:
            print(f"n={n}: {len(graphs)} graphs in {time.time() - t0:.1f}s", file=sys.stderr)
        paths[n] = path
        prev = graphs
    return paths


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--out", type=Path, default=Path("data"))
    args = ap.parse_args(argv)
    for n, path in ensure_streams(args.max_n, args.out, verbose=True).items():
        print(n, path)


if __name__ == "__main__":
    main()
