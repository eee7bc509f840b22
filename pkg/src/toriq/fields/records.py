"""Field records: degree, Galois type, exact factored discriminant, provenance."""

from __future__ import annotations

from dataclasses import dataclass

from ..factored import FactoredInt

GALOIS_LABELS = ("C2", "C3", "S3-cubic", "C4", "V4", "C6", "S3-sextic")


@dataclass(frozen=True)
class QuadraticProvenance:
    d: int  # fundamental discriminant


@dataclass(frozen=True)
class CyclicCubicProvenance:
    f: int  # conductor
    index: int  # which of the 2^(omega(f)-1) fields with this conductor


@dataclass(frozen=True)
class BinaryCubicForm:
    """Reduced integral binary cubic form a x^3 + b x^2 y + c x y^2 + d y^3."""

    a: int
    b: int
    c: int
    d: int

    def disc(self) -> int:
        a, b, c, d = self.a, self.b, self.c, self.d
        return (
            18 * a * b * c * d
            + b * b * c * c
            - 4 * a * c**3
            - 4 * b**3 * d
            - 27 * a * a * d * d
        )

    def coeffs(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class CyclicQuarticProvenance:
    conductor: int  # f(chi), conductor of either order-4 character of the pair
    quad_disc: int  # discriminant of the quadratic subfield
    char_exponents: tuple[int, ...]  # character values on the unit-group generators


@dataclass(frozen=True)
class ImportProvenance:
    source_label: str
    subfield_discs: tuple[int, ...]


@dataclass(frozen=True)
class FieldRecord:
    degree: int
    galois_label: str
    disc: FactoredInt
    provenance: object

    @property
    def disc_int(self) -> int:
        return self.disc.to_int()

    def sort_key(self) -> tuple:
        return (abs(self.disc_int), self.disc_int, repr(self.provenance))
