"""Smoke test for the documented thread-safety of the public operations.

Complexes memoize face tables lazily; hammering one instance from several
threads must neither raise nor produce divergent answers.
"""

from concurrent.futures import ThreadPoolExecutor

from walkup import GF2, betti_numbers, catalog, dual_graph, in_walkup_class
from walkup.symmetry import automorphism_group


def test_shared_complex_across_threads():
    K = catalog.get("N4_21")

    def probe(_):
        return (
            tuple(K.f_vector().counts),
            betti_numbers(K, GF2).values,
            dual_graph(K).num_edges,
            in_walkup_class(K, "Kstar"),
            automorphism_group(K).order,
        )

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(probe, range(16)))
    assert len(set(results)) == 1
    fv, betti, edges, kstar, order = results[0]
    assert fv == (21, 210, 490, 525, 210)
    assert betti == (1, 8, 0, 8, 1)
    assert kstar and order == 7


def test_fresh_equal_complexes_across_threads():
    # equal but distinct instances exercise the lazy caches independently
    def probe(i):
        K = catalog.get("A5_21").relabeled(tuple(range(21)))
        return betti_numbers(K, GF2).values

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(probe, range(8)))
    assert set(results) == {(1, 8, 0, 0, 0, 0)}
