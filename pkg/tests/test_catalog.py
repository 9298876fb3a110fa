import pytest

from sylowbench.catalog import (DEFAULT_CATALOG, CatalogEntry, CatalogError, builtin, catalog_groups,
                                parse_catalog, resolve)
from sylowbench.sylow import count_sylow


def test_builtin_examples():
    D7 = builtin("dihedral(7)")
    assert D7.order() == 14 and count_sylow(D7, 2).count == 7
    dod = builtin("dodecahedral")
    assert dod.order() == 120 and count_sylow(dod, 5).count == 6
    assert builtin("symmetric(4)").order() == 24


def test_direct_product_relabels_second_factor():
    G = builtin("direct_product(cyclic(3), alternating(4))")
    assert G.degree == 7 and G.order() == 36
    assert all(g[x] == x for g in G.generators[:1] for x in range(3, 7))


@pytest.mark.parametrize("spec", ["nope(3)", "dihedral(2)", "cyclic", "cyclic(3", "cyclic(3))",
                                  "direct_product(3, 4)", "elementary_abelian(4,2)", "7"])
def test_builtin_errors(spec):
    with pytest.raises(ValueError):
        builtin(spec)


def test_catalog_size_and_span():
    groups = catalog_groups()
    assert len(groups) >= 25
    orders = [G.order() for _, G in groups]
    assert min(orders) == 1 and max(orders) <= 10**4
    assert orders == sorted(orders)


def test_parse_catalog_example():
    (entry,) = parse_catalog("D7 ; 7 ; (1 2 3 4 5 6 7) , (2 7)(3 6)(4 5)")
    assert entry.name == "D7" and entry.group().order() == 14


def test_parse_catalog_empty_and_comments():
    assert parse_catalog("") == []
    assert parse_catalog("# nothing\n\n   \n") == []


def test_parse_catalog_degree_error():
    with pytest.raises(CatalogError, match="line 1: point 4 exceeds degree 3"):
        parse_catalog("X ; 3 ; (1 2 3 4)")


def test_parse_catalog_line_numbers_and_duplicates():
    text = "# header\nA ; 3 ; (1 2 3)\nA ; 3 ; (1 2)\n"
    with pytest.raises(CatalogError, match="line 3: duplicate"):
        parse_catalog(text)
    with pytest.raises(CatalogError, match="line 1"):
        parse_catalog("A ; 3")


def test_parse_catalog_order_check():
    assert parse_catalog("S3 ; 3 ; (1 2 3) , (1 2) ; 6")[0].expected_order == 6
    with pytest.raises(CatalogError, match="order 6, expected 5"):
        parse_catalog("S3 ; 3 ; (1 2 3) , (1 2) ; 5")


def test_entry_round_trip():
    for name, G in catalog_groups(200):
        entry = CatalogEntry.from_group(name, G)
        (back,) = parse_catalog(entry.to_line())
        assert back == entry and back.group().order() == G.order()


def test_resolve(tmp_path):
    path = tmp_path / "groups.txt"
    path.write_text("D7 ; 7 ; (1 2 3 4 5 6 7) , (2 7)(3 6)(4 5) ; 14\n")
    name, G = resolve(f"file:{path}:D7")
    assert name == "D7" and G.order() == 14
    assert resolve("builtin:alternating(5)")[1].order() == 60
    assert resolve("S4")[1].order() == 24
    with pytest.raises(ValueError):
        resolve(f"file:{path}:D8")
    with pytest.raises(ValueError):
        resolve("whatever")


def test_default_catalog_specs_build():
    for spec in DEFAULT_CATALOG.values():
        builtin(spec)
