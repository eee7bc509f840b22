"""CSV ingestion of externally tabulated fields (quartic, sextic, octic families)."""

from __future__ import annotations

import csv
from pathlib import Path

from ..factored import FactoredInt
from .records import FieldRecord, ImportProvenance

SCHEMA_V1 = "lmfdb-nf-v1"
_HEADER_V1 = ["label", "degree", "galois_label", "disc", "subfield_discs"]


class SchemaMismatch(ValueError):
    """File does not match the declared import schema."""


class InvalidDiscriminant(ValueError):
    """Zero or inconsistent discriminant in an import row."""


def import_fields_csv(path: str | Path, schema_label: str = SCHEMA_V1) -> list[FieldRecord]:
    """Read and validate a field table; factorizations are recomputed exactly."""
    if schema_label != SCHEMA_V1:
        raise SchemaMismatch(f"unknown schema {schema_label!r}")
    path = Path(path)
    records = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(row for row in fh if not row.startswith("#"))
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaMismatch("empty file: header row required") from None
        if header != _HEADER_V1:
            raise SchemaMismatch(f"expected header {_HEADER_V1}, got {header}")
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(_HEADER_V1):
                raise SchemaMismatch(f"line {lineno}: expected {len(_HEADER_V1)} columns")
            label, degree_s, galois, disc_s, subs_s = row
            try:
                degree = int(degree_s)
                disc = int(disc_s)
            except ValueError as exc:
                raise SchemaMismatch(f"line {lineno}: {exc}") from None
            if degree < 1:
                raise SchemaMismatch(f"line {lineno}: bad degree {degree}")
            if disc == 0:
                raise InvalidDiscriminant(f"line {lineno}: zero discriminant")
            subs = tuple(int(s) for s in subs_s.split(";") if s.strip())
            if any(s == 0 for s in subs):
                raise InvalidDiscriminant(f"line {lineno}: zero subfield discriminant")
            fact = FactoredInt.from_int(disc)
            if fact.to_int() != disc:
                raise InvalidDiscriminant(f"line {lineno}: factorization mismatch")
            records.append(
                FieldRecord(
                    degree=degree,
                    galois_label=f"imported:{galois}",
                    disc=fact,
                    provenance=ImportProvenance(source_label=label, subfield_discs=subs),
                )
            )
    return records
