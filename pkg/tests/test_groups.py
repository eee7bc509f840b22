import random

import pytest

from toriq.catalog_data import GENERATORS, ISO_LABELS
from toriq.groups import (
    CatalogEntry,
    MatrixGroup,
    NonUnimodular,
    NotFinite,
    TrivialGroup,
    UnrecognizedIsoType,
    a_invariant,
    b_invariant,
    catalog,
    catalog_entry,
    conjugacy_classes,
    cyclotomic_orbits,
    generate_group,
    group_exponent,
    invariant_table,
    iso_type,
    nontrivial_entries,
)
from toriq.matrices import IDENTITY, mat_inv, mat_mul

NEG_I = tuple(-x for x in IDENTITY)


def test_generate_trivial():
    g = generate_group([])
    assert g.order == 1 and IDENTITY in g.elements


def test_generate_order_two():
    g = generate_group([(1, 0, 0, 0, -1, 0, 0, 0, -1)])
    assert g.order == 2


def test_generate_largest_catalog_group():
    g = generate_group(GENERATORS["H_{48,a}"])
    assert g.order == 48


def test_generate_rejects_non_unimodular():
    with pytest.raises(NonUnimodular):
        generate_group([(2, 0, 0, 0, 1, 0, 0, 0, 1)])


def test_generate_rejects_infinite():
    shear = (1, 1, 0, 0, 1, 0, 0, 0, 1)
    with pytest.raises(NotFinite):
        generate_group([shear])


def test_closure_is_group():
    for label in ("H_{6,e}", "H_{8,g}", "H_{24,e}"):
        g = generate_group(GENERATORS[label])
        for x in g.elements:
            assert mat_inv(x) in g.elements
            for y in g.elements:
                assert mat_mul(x, y) in g.elements


def test_conjugacy_classes_s3():
    g = generate_group(GENERATORS["H_{6,e}"])
    classes = conjugacy_classes(g)
    assert sorted(c.size for c in classes) == [1, 2, 3]
    assert sum(c.size for c in classes) == 6


def test_conjugacy_classes_s4():
    g = generate_group(GENERATORS["H_{24,e}"])
    assert len(conjugacy_classes(g)) == 5


def test_abelian_classes_are_singletons():
    g = generate_group(GENERATORS["H_{8,c}"])
    assert all(c.size == 1 for c in conjugacy_classes(g))


def test_rank_defect_constant_on_classes():
    from toriq.matrices import mat_rank, mat_sub_identity

    for label in ("H_{12,b}", "H_{24,g}", "H_{48,c}"):
        g = generate_group(GENERATORS[label])
        for cls in conjugacy_classes(g):
            ranks = {mat_rank(mat_sub_identity(h)) for h in cls.members}
            assert ranks == {cls.rank_defect}


def test_a_invariant_examples():
    assert a_invariant(generate_group([NEG_I])) == 3
    assert a_invariant(generate_group(GENERATORS["H_{12,b}"])) == 2
    assert a_invariant(generate_group(GENERATORS["H_{6,f}"])) == 1


def test_b_invariant_examples():
    assert b_invariant(generate_group(GENERATORS["H_{4,a}"])) == 2
    assert b_invariant(generate_group(GENERATORS["H_{12,b}"])) == 5
    assert b_invariant(generate_group(GENERATORS["H_{8,c}"])) == 3


def test_trivial_group_raises():
    g = generate_group([])
    with pytest.raises(TrivialGroup):
        a_invariant(g)
    with pytest.raises(TrivialGroup):
        b_invariant(g)


def test_orbits_partition_classes():
    for label in ("H_{12,b}", "H_{24,e}", "H_{16,a}"):
        g = generate_group(GENERATORS[label])
        classes = conjugacy_classes(g)
        orbits = cyclotomic_orbits(g)
        covered = [cls for orb in orbits for cls in orb.classes]
        assert len(covered) == len(classes)
        assert {c.representative for c in covered} == {
            c.representative for c in classes
        }


def test_orbit_count_independent_of_residue_order():
    # union-find over all coprime residues: recomputing twice is deterministic
    g = generate_group(GENERATORS["H_{12,b}"])
    assert b_invariant(g) == b_invariant(g)
    assert group_exponent(g) == 6


def test_iso_type_examples():
    assert iso_type(generate_group(GENERATORS["H_{6,e}"])) == "S3"
    assert iso_type(generate_group(GENERATORS["H_{8,g}"])) == "D4"
    assert iso_type(generate_group([])) == "1"


def test_iso_type_unrecognized():
    # an order-5 cyclic group cannot sit in GL3(Z); fake one via a permutation
    # representation is impossible here, so exercise the error with a direct call
    fake = MatrixGroup(frozenset([IDENTITY]), (IDENTITY,))
    good = iso_type(fake)
    assert good == "1"
    with pytest.raises(UnrecognizedIsoType):
        # five copies of the identity cannot happen; simulate a bad fingerprint
        # by constructing a group value by hand with inconsistent elements
        iso_type(MatrixGroup(frozenset([IDENTITY, NEG_I, (1, 0, 0, 0, 1, 0, 0, 0, -1)]), ()))


def test_catalog_size_and_labels():
    cat = catalog()
    assert len(cat) == 73
    labels = [e.label for e in cat]
    assert labels[0] == "H_{1,a}"
    assert labels[-1] == "H_{48,c}"
    assert len(set(labels)) == 73


def test_catalog_orders():
    allowed = {1, 2, 3, 4, 6, 8, 12, 16, 24, 48}
    for e in catalog():
        assert e.order in allowed
        if e.label != "H_{1,a}":
            assert e.order == int(e.label[3:-1].split(",")[0])


def test_catalog_iso_labels_match_source():
    for e in nontrivial_entries():
        assert e.iso_label == ISO_LABELS[e.label]


def test_catalog_entry_lookup():
    assert catalog_entry("H_{24,d}").iso_label == "D6xC2"
    with pytest.raises(KeyError):
        catalog_entry("H_{99,z}")


def test_a_three_only_for_negated_identity():
    hits = [
        e.label
        for e in nontrivial_entries()
        if a_invariant(e.group) == 3
    ]
    assert hits == ["H_{2,e}"]
    assert catalog_entry("H_{2,e}").group.elements == frozenset([IDENTITY, NEG_I])


def test_invariant_fingerprint_partition_is_stable():
    # The (order, iso, a, b) fingerprint cannot separate integrally inequivalent
    # classes with the same rational character; it partitions the 72 classes
    # into a fixed set of cells, frozen here.
    cells: dict[tuple, int] = {}
    for e in nontrivial_entries():
        fp = (e.order, e.iso_label, a_invariant(e.group), b_invariant(e.group))
        cells[fp] = cells.get(fp, 0) + 1
    assert sum(cells.values()) == 72
    assert len(cells) == 30
    assert cells[(4, "C2^2", 1, 2)] == 5
    assert cells[(2, "C2", 3, 1)] == 1


def test_invariant_table_shape():
    table = invariant_table()
    assert len(table) == 72
    assert all(a in (1, 2, 3) and b >= 1 for _, _, _, a, b in table)
