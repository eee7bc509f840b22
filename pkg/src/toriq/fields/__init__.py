"""Constituent number fields: enumeration, class groups, imports."""

from .classgroup import BoundExceeded, ClassGroup, ClassGroupData, quad_class_group
from .cubic import enum_cubic_s3, form_disc, form_is_maximal, maximal_cubic_classes
from .cyclic import (
    count_cyclic_cubic_fields,
    cyclic_cubic_conductors,
    cyclic_cubic_disc_counts,
    enum_cyclic_cubic,
    enum_cyclic_quartic,
)
from .imports import InvalidDiscriminant, SchemaMismatch, import_fields_csv
from .quadratic import (
    count_quadratic,
    enum_quadratic,
    quadratic_indicator_vector,
)
from .records import (
    BinaryCubicForm,
    CyclicCubicProvenance,
    CyclicQuarticProvenance,
    FieldRecord,
    ImportProvenance,
    QuadraticProvenance,
)

__all__ = [
    "BinaryCubicForm",
    "BoundExceeded",
    "ClassGroup",
    "ClassGroupData",
    "CyclicCubicProvenance",
    "CyclicQuarticProvenance",
    "FieldRecord",
    "ImportProvenance",
    "InvalidDiscriminant",
    "QuadraticProvenance",
    "SchemaMismatch",
    "count_cyclic_cubic_fields",
    "count_quadratic",
    "cyclic_cubic_conductors",
    "cyclic_cubic_disc_counts",
    "enum_cubic_s3",
    "enum_cyclic_cubic",
    "enum_cyclic_quartic",
    "enum_quadratic",
    "form_disc",
    "form_is_maximal",
    "import_fields_csv",
    "maximal_cubic_classes",
    "quad_class_group",
    "quadratic_indicator_vector",
]
