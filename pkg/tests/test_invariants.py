import math

import numpy as np
import pytest

from subcensus import catalog, groups, invariants
from subcensus.groups import make_cyclic, metacyclic


GROUPS = {
    "Z_12": lambda: make_cyclic(12),
    "S_3": lambda: groups.symmetric(3),
    "Q_8": lambda: metacyclic(4, 2, 3, 2),
    "D_8": lambda: groups.dihedral(8),
    "A_4": lambda: groups.alternating(4),
    "GA(1,5)": lambda: groups.affine_general(5),
    "Dic_12": lambda: groups.dicyclic(12),
    "Heis(3)": lambda: groups.heisenberg(3),
    "M_16": lambda: groups.modular(2, 4),
    "Z_7:Z_3": lambda: metacyclic(7, 3, 2, 0),
}


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_suite_passes(name):
    results = invariants.check_all(GROUPS[name]())
    assert set(results) == set(invariants.SUITE)
    assert all(not violations for violations in results.values()), results


def test_wielandt_only_applies_to_p_groups():
    assert invariants.wielandt(groups.symmetric(3)) == []


def test_burnside_finds_complement():
    # the Sylow 2-subgroup of Z_3:Z_8 is cyclic, so Z_3 is a normal complement
    assert invariants.burnside_complement(metacyclic(3, 8, 2, 0)) == []


@pytest.mark.parametrize("left, right", [
    (lambda: groups.symmetric(3), lambda: make_cyclic(5)),
    (lambda: metacyclic(4, 2, 3, 2), lambda: make_cyclic(9)),
    (lambda: groups.alternating(4), lambda: make_cyclic(5)),
    (lambda: make_cyclic(4), lambda: make_cyclic(3)),
])
def test_coprime_multiplicativity(left, right):
    assert invariants.coprime_multiplicativity(left(), right()) == []


def test_multiplicativity_skips_non_coprime():
    assert invariants.coprime_multiplicativity(make_cyclic(2), make_cyclic(4)) == []


def sampled_coprime_pairs(count, seed=20160704, limit=512):
    pool = [make_cyclic(n) for n in range(1, 33)]
    pool += [G for G in (catalog.pinned_group(e) for e in catalog.catalog_entries()) if G.order <= 64]
    rng = np.random.default_rng(seed)
    pairs = []
    while len(pairs) < count:
        i, j = rng.integers(len(pool), size=2)
        G, H = pool[i], pool[j]
        if math.gcd(G.order, H.order) == 1 and G.order * H.order <= limit:
            pairs.append((G, H))
    return pairs


def test_coprime_multiplicativity_on_sampled_pairs():
    pairs = sampled_coprime_pairs(50)
    assert len(pairs) == 50
    for G, H in pairs:
        assert invariants.coprime_multiplicativity(G, H) == [], (G.label, H.label)
