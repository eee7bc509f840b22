"""Finite subgroups of GL3(Z): closure, conjugacy classes, and the (a, b) invariants.

a(H) is the minimum over nonidentity h of the rational rank of h - I.
b(H) counts orbits, under the power maps h -> h^k with gcd(k, exp H) = 1, of the
conjugacy classes attaining that minimum rank.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .catalog_data import CATALOG_LABELS, GENERATORS, ISO_LABELS, TRIVIAL_LABEL
from .matrices import (
    IDENTITY,
    Mat,
    mat_det,
    mat_inv,
    mat_mul,
    mat_order,
    mat_pow,
    mat_rank,
    mat_sub_identity,
)

MAX_FINITE_ORDER = 48


class NonUnimodular(ValueError):
    """A generator has determinant outside {+1, -1}."""


class NotFinite(ValueError):
    """Closure exceeded the maximal finite subgroup order."""


class TrivialGroup(ValueError):
    """Invariant undefined for the trivial group."""


class UnrecognizedIsoType(ValueError):
    """Fingerprint matches no known abstract type."""


@dataclass(frozen=True)
class MatrixGroup:
    elements: frozenset[Mat]
    generators: tuple[Mat, ...]
    label: str = ""
    iso_label: str = ""

    @property
    def order(self) -> int:
        return len(self.elements)

    def sorted_elements(self) -> list[Mat]:
        return sorted(self.elements)


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Mat
    members: frozenset[Mat]
    rank_defect: int

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class CyclotomicOrbit:
    classes: tuple[ConjugacyClass, ...]


def generate_group(
    gens: list[Mat] | tuple[Mat, ...],
    label: str = "",
    entry_bound: int | None = None,
) -> MatrixGroup:
    """Close a generator list under multiplication; raise NotFinite past order 48."""
    gens = tuple(tuple(g) for g in gens)
    for g in gens:
        if len(g) != 9:
            raise ValueError("generators must be 3x3 (9-tuples)")
        if mat_det(g) not in (1, -1):
            raise NonUnimodular(f"det = {mat_det(g)}")
    elements = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        new: list[Mat] = []
        for x in frontier:
            for g in gens:
                y = mat_mul(x, g)
                if y not in elements:
                    if entry_bound is not None and any(abs(v) > entry_bound for v in y):
                        raise NotFinite(f"entry bound {entry_bound} exceeded")
                    elements.add(y)
                    new.append(y)
                    if len(elements) > MAX_FINITE_ORDER:
                        raise NotFinite(f"closure exceeds {MAX_FINITE_ORDER} elements")
        frontier = new
    return MatrixGroup(frozenset(elements), gens, label=label)


def conjugacy_classes(group: MatrixGroup) -> list[ConjugacyClass]:
    """Disjoint conjugacy classes, deterministically ordered."""
    elems = group.sorted_elements()
    inverses = {g: mat_inv(g) for g in elems}
    remaining = set(elems)
    classes = []
    for x in elems:
        if x not in remaining:
            continue
        members = frozenset(mat_mul(mat_mul(g, x), inverses[g]) for g in elems)
        remaining -= members
        classes.append(
            ConjugacyClass(
                representative=min(members),
                members=members,
                rank_defect=mat_rank(mat_sub_identity(x)),
            )
        )
    classes.sort(key=lambda c: (c.size, c.representative))
    return classes


def group_exponent(group: MatrixGroup) -> int:
    exp = 1
    for g in group.elements:
        exp = math.lcm(exp, mat_order(g))
    return exp


def a_invariant(group: MatrixGroup) -> int:
    if group.order < 2:
        raise TrivialGroup("a(H) needs a nonidentity element")
    return min(
        mat_rank(mat_sub_identity(h)) for h in group.elements if h != IDENTITY
    )


def cyclotomic_orbits(group: MatrixGroup) -> list[CyclotomicOrbit]:
    """Orbits of conjugacy classes under h -> h^k, k coprime to the exponent."""
    classes = conjugacy_classes(group)
    class_of: dict[Mat, int] = {}
    for i, cls in enumerate(classes):
        for h in cls.members:
            class_of[h] = i
    exp = group_exponent(group)
    parent = list(range(len(classes)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, cls in enumerate(classes):
        h = cls.representative
        for k in range(1, exp):
            if math.gcd(k, exp) == 1:
                j = class_of[mat_pow(h, k)]
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    buckets: dict[int, list[ConjugacyClass]] = {}
    for i, cls in enumerate(classes):
        buckets.setdefault(find(i), []).append(cls)
    orbits = [CyclotomicOrbit(tuple(v)) for v in buckets.values()]
    orbits.sort(key=lambda o: (o.classes[0].size, o.classes[0].representative))
    return orbits


def b_invariant(group: MatrixGroup) -> int:
    if group.order < 2:
        raise TrivialGroup("b(H) needs a nonidentity element")
    a = a_invariant(group)
    return sum(
        1
        for orbit in cyclotomic_orbits(group)
        if orbit.classes[0].rank_defect == a and orbit.classes[0].representative != IDENTITY
    )


# ---------------------------------------------------------------------------
# abstract isomorphism types


def _fingerprint(group: MatrixGroup) -> tuple:
    orders: dict[int, int] = {}
    for g in group.elements:
        o = mat_order(g)
        orders[o] = orders.get(o, 0) + 1
    abelian = all(
        mat_mul(x, y) == mat_mul(y, x)
        for x in group.generators
        for y in group.generators
    )
    center = sum(
        1
        for z in group.elements
        if all(mat_mul(z, g) == mat_mul(g, z) for g in group.generators)
    )
    return (group.order, abelian, tuple(sorted(orders.items())), center)


# (order, abelian, element-order histogram, center size) -> label
_KNOWN_TYPES: dict[tuple, str] = {
    (1, True, ((1, 1),), 1): "1",
    (2, True, ((1, 1), (2, 1)), 2): "C2",
    (3, True, ((1, 1), (3, 2)), 3): "C3",
    (4, True, ((1, 1), (2, 1), (4, 2)), 4): "C4",
    (4, True, ((1, 1), (2, 3)), 4): "C2^2",
    (6, True, ((1, 1), (2, 1), (3, 2), (6, 2)), 6): "C6",
    (6, False, ((1, 1), (2, 3), (3, 2)), 1): "S3",
    (8, True, ((1, 1), (2, 3), (4, 4)), 8): "C4xC2",
    (8, True, ((1, 1), (2, 7)), 8): "C2^3",
    (8, False, ((1, 1), (2, 5), (4, 2)), 2): "D4",
    (12, True, ((1, 1), (2, 3), (3, 2), (6, 6)), 12): "C6xC2",
    (12, False, ((1, 1), (2, 7), (3, 2), (6, 2)), 2): "D6",
    (12, False, ((1, 1), (2, 3), (3, 8)), 1): "A4",
    (16, False, ((1, 1), (2, 11), (4, 4)), 4): "D4xC2",
    (24, False, ((1, 1), (2, 7), (3, 8), (6, 8)), 2): "A4xC2",
    (24, False, ((1, 1), (2, 15), (3, 2), (6, 6)), 4): "D6xC2",
    (24, False, ((1, 1), (2, 9), (3, 8), (4, 6)), 1): "S4",
    (48, False, ((1, 1), (2, 19), (3, 8), (4, 12), (6, 8)), 2): "S4xC2",
}


def iso_type(group: MatrixGroup) -> str:
    """Abstract isomorphism label from the (order, abelian, orders, center) fingerprint."""
    fp = _fingerprint(group)
    try:
        return _KNOWN_TYPES[fp]
    except KeyError:
        raise UnrecognizedIsoType(f"fingerprint {fp} matches no known type") from None


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    generators: tuple[Mat, ...]
    group: MatrixGroup
    iso_label: str

    @property
    def order(self) -> int:
        return self.group.order


@lru_cache(maxsize=1)
def catalog() -> tuple[CatalogEntry, ...]:
    """All 73 classes (trivial group first), in label order."""
    entries = []
    for label in CATALOG_LABELS:
        if label == TRIVIAL_LABEL:
            grp = MatrixGroup(frozenset({IDENTITY}), (), label=label, iso_label="1")
            entries.append(CatalogEntry(label, (), grp, "1"))
            continue
        gens = GENERATORS[label]
        grp = generate_group(gens, label=label, entry_bound=2)
        iso = iso_type(grp)
        expected = ISO_LABELS[label]
        if iso != expected:
            raise AssertionError(f"{label}: computed type {iso} != cataloged {expected}")
        grp = MatrixGroup(grp.elements, grp.generators, label=label, iso_label=iso)
        entries.append(CatalogEntry(label, gens, grp, iso))
    return tuple(entries)


def catalog_entry(label: str) -> CatalogEntry:
    for e in catalog():
        if e.label == label:
            return e
    raise KeyError(label)


def nontrivial_entries() -> tuple[CatalogEntry, ...]:
    return tuple(e for e in catalog() if e.label != TRIVIAL_LABEL)


def invariant_table() -> list[tuple[str, int, str, int, int]]:
    """(label, order, iso, a, b) for the 72 nontrivial classes, table-ordered."""
    return [
        (e.label, e.order, e.iso_label, a_invariant(e.group), b_invariant(e.group))
        for e in nontrivial_entries()
    ]
