"""Regenerates the bundled graph6 corpora with networkx as an independent encoder."""

import itertools
import json
import random
from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parent.parent / "data" / "corpus"


def encode(g: nx.Graph) -> str:
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def all_labeled(max_n: int):
    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
            yield g


def fuzz(count: int, seed: int):
    rng = random.Random(seed)
    sizes = [0, 1, 2, 62, 63, 64, 100, 200, 258]
    for i in range(count):
        n = sizes[i] if i < len(sizes) else rng.choice([rng.randint(0, 62), rng.randint(63, 160)])
        p = rng.choice([0.0, 0.05, 0.3, 0.7, 1.0])
        g = nx.gnp_random_graph(n, p, seed=rng.randrange(1 << 30))
        edges = sorted([min(u, v), max(u, v)] for u, v in g.edges())
        yield {"graph6": encode(g), "n": n, "edges": edges}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    with open(OUT / "labeled_n1_5.g6", "w") as f:
        for g in all_labeled(5):
            f.write(encode(g) + "\n")
    with open(OUT / "fuzz_graph6.jsonl", "w") as f:
        for rec in fuzz(100, seed=20240611):
            f.write(json.dumps(rec, separators=(",", ":")) + "\n")


if __name__ == "__main__":
    main()
