#!/usr/bin/env python3
"""Regenerate the dolphins-sized surrogate fixture under data/.

The public dolphin social network (62 vertices, 159 edges, two groups of
20 and 42 animals) is not redistributed here. This script builds a
deterministic stand-in with the same vertex count, edge count and 20/42
group split: two randomly grown communities joined by six cross edges.
The 20-vertex group is the follower subset S; its vertex boundary holds
the leaders, which carry a mixed-sign boundary vector.

Drop the real edge list (1-based ids) into data/dolphins.edges together with
matching subset/boundary files to run the same experiments on the original.
"""

import argparse
import pathlib
import random

N_FOLLOWERS = 20
N_OTHERS = 42
EDGES_FOLLOWERS = 50
EDGES_OTHERS = 103
EDGES_CROSS = 6
LEADER_VALUES = [1.0, -0.5, 0.8, -1.0, 0.3, 0.6]


def grow_block(rng, vertices, edge_count):
    order = list(vertices)
    rng.shuffle(order)
    edges = set()
    for i in range(1, len(order)):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    while len(edges) < edge_count:
        u, v = rng.sample(vertices, 2)
        edges.add((min(u, v), max(u, v)))
    return edges


def build(seed):
    rng = random.Random(seed)
    followers = list(range(N_FOLLOWERS))
    others = list(range(N_FOLLOWERS, N_FOLLOWERS + N_OTHERS))
    edges = grow_block(rng, followers, EDGES_FOLLOWERS)
    edges |= grow_block(rng, others, EDGES_OTHERS)
    target = EDGES_FOLLOWERS + EDGES_OTHERS + EDGES_CROSS
    while len(edges) < target:
        edges.add((rng.choice(followers), rng.choice(others)))

    # Relabel to shuffled 1-based ids so the subset is not a contiguous range.
    labels = list(range(1, N_FOLLOWERS + N_OTHERS + 1))
    rng.shuffle(labels)
    edges = sorted((min(labels[u], labels[v]), max(labels[u], labels[v])) for u, v in edges)
    subset = sorted(labels[v] for v in followers)
    subset_set = set(subset)
    leaders = sorted({v if u in subset_set else u
                      for u, v in edges
                      if (u in subset_set) != (v in subset_set)})
    boundary = {u: LEADER_VALUES[i % len(LEADER_VALUES)] for i, u in enumerate(leaders)}
    return edges, subset, boundary


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=20131)
    parser.add_argument("--out", type=pathlib.Path,
                        default=pathlib.Path(__file__).resolve().parent.parent / "data")
    args = parser.parse_args()

    edges, subset, boundary = build(args.seed)
    args.out.mkdir(parents=True, exist_ok=True)
    with open(args.out / "dolphins.edges", "w") as fh:
        fh.write("# dolphins-sized surrogate: 62 vertices, 159 edges, groups of 20 and 42\n")
        fh.write(f"# generated by tools/make_dolphins_surrogate.py --seed {args.seed}\n")
        for u, v in edges:
            fh.write(f"{u} {v}\n")
    with open(args.out / "dolphins.subset", "w") as fh:
        fh.write("# follower group (20 vertices)\n")
        for v in subset:
            fh.write(f"{v}\n")
    with open(args.out / "dolphins.boundary", "w") as fh:
        fh.write("# leader values on the vertex boundary of the follower group\n")
        for u, value in sorted(boundary.items()):
            fh.write(f"{u} {value}\n")


if __name__ == "__main__":
    main()
