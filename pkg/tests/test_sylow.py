import pytest

import oracles
from sylowbench import arith
from sylowbench.catalog import (alternating, builtin, catalog_groups, cyclic, dihedral, dodecahedral,
                                elementary_abelian, psl2, symmetric)
from sylowbench.errors import NotAbelianSylow, NotCyclicSylow2, OrbitCapExceeded, SylowNotPrimeOrder
from sylowbench.groups import PermGroup
from sylowbench.sylow import (SylowReport, brodkey_pair, class_size_in_symmetric, count_sylow,
                              cyc2_complement, find_sylow, frobenius_counts, nc_check,
                              p_core_and_kernel, verify_centalt, verify_cyc2)

ORACLE_GROUPS = [(n, G) for n, G in catalog_groups(60)]


def test_find_sylow_examples():
    assert find_sylow(symmetric(4), 3).order() == 3
    assert find_sylow(PermGroup([], 3), 5).order() == 1
    assert find_sylow(dodecahedral(), 5).order() == 5
    assert find_sylow(symmetric(6), 2).order() == 16


@pytest.mark.parametrize("start", [0, 7, 100])
def test_find_sylow_start_is_still_sylow(start):
    P = find_sylow(alternating(6), 2, start=start)
    assert P.order() == 8 and P.is_subgroup_of(alternating(6))


@pytest.mark.parametrize("name, G", ORACLE_GROUPS, ids=[n for n, _ in ORACLE_GROUPS])
def test_count_sylow_against_oracle(name, G):
    elems = oracles.close(G.generators, G.degree) if G.generators else {oracles.ident(G.degree)}
    for p in arith.prime_divisors(G.order()) if G.order() > 1 else []:
        r = count_sylow(G, p)
        assert r.count == oracles.sylow_count(elems, p)
        assert not r.check()


def test_count_sylow_examples():
    assert count_sylow(dihedral(7), 2).count == 7
    assert count_sylow(dodecahedral(), 5).count == 6
    assert count_sylow(symmetric(4), 2).count == 3
    assert count_sylow(psl2(7), 7).count == 8


def test_report_check_flags_bad_rows():
    bad = SylowReport(p=3, group_order=24, sylow_order=3, count=2, normalizer_order=6,
                      p_core_order=2, action_kernel_order=3)
    problems = bad.check()
    assert len(problems) == 3


def test_p_core_examples():
    core, kernel, q = p_core_and_kernel(alternating(4), 3)
    assert (core.order(), kernel.order(), q) == (1, 1, 4)
    core, kernel, q = p_core_and_kernel(cyclic(6), 3)
    assert (core.order(), kernel.order(), q) == (3, 6, 1)
    core, kernel, q = p_core_and_kernel(symmetric(4), 2)
    assert (core.order(), kernel.order(), q) == (4, 4, 3)


def test_brodkey_examples():
    P, Q = brodkey_pair(alternating(4), 3)
    assert len(P.elements() & Q.elements()) == 1
    P, Q = brodkey_pair(builtin("direct_product(cyclic(3),alternating(4))"), 3)
    assert len(P.elements() & Q.elements()) == 3
    with pytest.raises(NotAbelianSylow):
        brodkey_pair(symmetric(4), 2)


def test_brodkey_against_oracle_core():
    G = builtin("direct_product(cyclic(3),alternating(4))")
    elems = oracles.close(G.generators, G.degree)
    sylows = oracles.subgroups_of_order(elems, 9)
    core = frozenset.intersection(*sylows)
    P, Q = brodkey_pair(G, 3)
    assert set(map(tuple, P.elements() & Q.elements())) == core


def test_class_size():
    assert class_size_in_symmetric([3, 3]) == 40
    assert class_size_in_symmetric([2, 1, 1]) == 6


def test_verify_centalt():
    assert verify_centalt(3) == (9, True)
    assert verify_centalt(5) == (25, True)
    assert verify_centalt(3, ambient="symmetric") == (18, True)


def test_verify_centalt_cap():
    with pytest.raises(OrbitCapExceeded) as err:
        verify_centalt(17)
    assert err.value.count == class_size_in_symmetric([17, 17])


def test_nc_examples():
    assert tuple(nc_check(symmetric(3), 3)) == (2, True, True)
    assert nc_check(alternating(4), 3).nc_order == 1
    r = nc_check(dodecahedral(), 5)
    assert 4 % r.nc_order == 0 and r.is_cyclic
    with pytest.raises(SylowNotPrimeOrder):
        nc_check(symmetric(4), 2)


def test_cyc2_examples():
    assert cyc2_complement(cyclic(6)).order() == 3
    N = cyc2_complement(dihedral(7))
    assert N.order() == 7
    assert verify_cyc2(dihedral(7), N) == (True, True, True)
    with pytest.raises(NotCyclicSylow2):
        cyc2_complement(symmetric(4))


def test_cyc2_against_oracle():
    # the rotations are the only normal subgroup of index 2 in D_15
    G = dihedral(15)
    N = cyc2_complement(G)
    elems = oracles.close(G.generators, G.degree)
    normal = [H for H in oracles.subgroups_of_order(elems, 15) if oracles.normalizer(elems, H) == elems]
    assert len(normal) == 1
    assert set(map(tuple, N.elements())) == normal[0]


def test_frobenius_examples():
    rows = frobenius_counts(symmetric(4), 2)
    assert [r.count for r in rows] == [1, 9, 7, 3]
    assert frobenius_counts(cyclic(9), 3)[1].count == 1
    row = frobenius_counts(elementary_abelian(3, 2), 3)[1]
    assert row.count == 4 and row.mod_p2_class == arith.FrobeniusClass.ONE_PLUS_P


@pytest.mark.parametrize("name", ["S4", "A4", "D6", "E9", "C12", "F21"])
def test_frobenius_against_oracle(name):
    G = dict(catalog_groups(100))[name]
    elems = oracles.close(G.generators, G.degree)
    for p in arith.prime_divisors(G.order()):
        for row in frobenius_counts(G, p):
            assert row.count == len(oracles.subgroups_of_order(elems, p ** row.a))
