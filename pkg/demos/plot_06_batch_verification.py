"""
Seeded corpora and batch verification
=====================================

Every suite draws a reproducible corpus and compares an algorithm with its
oracle instance by instance.
"""

from wellcover.graph import get_family
from wellcover.lab import GeneratorConfig, random_family_graph, random_tree
from wellcover.verify import run_suite

cfg = GeneratorConfig(seed=7, n=10, p=0.15, family=get_family("bip-c6free"))
print("seeded graph:", random_family_graph(cfg).edges())
print("seeded tree:", random_tree(8, seed=3).edges())

for suite, kwargs in (
    ("generating", dict(n=6)),
    ("maxgen", dict(n=12, count=50, seed=1)),
    ("wcw-leaf", dict(n=14, count=50, seed=1)),
    ("dsat-chain", dict(count=30, seed=1)),
):
    rep = run_suite(suite, **kwargs)
    print(f"{suite:>12}: {rep.agreements}/{rep.total} agree")
