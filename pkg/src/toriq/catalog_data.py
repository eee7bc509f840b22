"""Generator matrices and abstract types for the finite-subgroup catalog of GL3(Z).

Entries are keyed by the classical labels H_{n,x} (n = group order). Each value
is a tuple of generators, each a row-major 9-tuple of integers.
"""

from __future__ import annotations

GENERATORS: dict[str, tuple[tuple[int, ...], ...]] = {
    "H_{2,a}": ((1, 0, 0, 0, -1, 0, 0, 0, -1),),
    "H_{2,b}": ((-1, 0, 0, 0, 1, 0, 0, 0, 1),),
    "H_{2,c}": ((-1, 0, 0, 0, 0, 1, 0, 1, 0),),
    "H_{2,d}": ((1, 0, 0, 0, 0, -1, 0, -1, 0),),
    "H_{2,e}": ((-1, 0, 0, 0, -1, 0, 0, 0, -1),),
    "H_{3,a}": ((1, 0, 0, 0, 0, -1, 0, 1, -1),),
    "H_{3,b}": ((0, 1, 0, 0, 0, 1, 1, 0, 0),),
    "H_{4,a}": ((1, 0, 0, 0, 0, -1, 0, 1, 0),),
    "H_{4,b}": ((-1, 0, 0, 0, 0, 1, 0, -1, 0),),
    "H_{4,c}": ((1, 0, 1, 0, 0, -1, 0, 1, 0),),
    "H_{4,d}": ((-1, 0, -1, 0, 0, 1, 0, -1, 0),),
    "H_{4,e}": ((1, 0, 0, 0, -1, 0, 0, 0, -1), (-1, 0, 0, 0, -1, 0, 0, 0, -1)),
    "H_{4,f}": ((1, 0, 0, 0, -1, 0, 0, 0, -1), (-1, 0, 0, 0, -1, 0, 0, 0, 1)),
    "H_{4,g}": ((1, 0, 0, 0, -1, 0, 0, 0, -1), (1, 0, 0, 0, 1, 0, 0, 0, -1)),
    "H_{4,h}": ((1, 0, 0, 0, -1, 0, 0, 0, -1), (-1, 0, 0, 0, 0, -1, 0, -1, 0)),
    "H_{4,i}": ((1, 0, 0, 0, -1, 0, 0, 0, -1), (1, 0, 0, 0, 0, 1, 0, 1, 0)),
    "H_{4,j}": ((-1, 0, 0, 0, 1, 0, 0, 0, 1), (1, 0, 0, 0, 0, 1, 0, 1, 0)),
    "H_{4,k}": ((-1, 0, 0, 0, 0, 1, 0, 1, 0), (-1, 0, 0, 0, -1, 0, 0, 0, -1)),
    "H_{4,l}": ((-1, 0, 0, 0, 0, 1, 0, 1, 0), (-1, 0, 0, 1, 0, -1, -1, -1, 0)),
    "H_{4,m}": ((-1, 0, 0, 0, 0, 1, 0, 1, 0), (1, 0, 0, -1, 0, 1, 1, 1, 0)),
    "H_{4,n}": ((-1, 0, 0, 0, 0, 1, 0, 1, 0), (-1, 1, -1, 0, 0, -1, 0, -1, 0)),
    "H_{4,o}": ((-1, 0, 0, 0, 0, 1, 0, 1, 0), (1, -1, 1, 0, 0, 1, 0, 1, 0)),
    "H_{6,a}": ((1, 0, 0, 0, 0, -1, 0, 1, 1),),
    "H_{6,b}": ((-1, 0, 0, 0, 0, 1, 0, -1, -1),),
    "H_{6,c}": ((-1, 0, 0, 0, 0, 1, 0, -1, 1),),
    "H_{6,d}": ((0, -1, 0, 0, 0, -1, -1, 0, 0),),
    "H_{6,e}": ((1, 0, 0, 0, 0, -1, 0, 1, -1), (-1, 0, 0, 0, 0, -1, 0, -1, 0)),
    "H_{6,f}": ((1, 0, 0, 0, 0, -1, 0, 1, -1), (1, 0, 0, 0, 0, 1, 0, 1, 0)),
    "H_{6,g}": ((1, 0, 0, 0, 0, -1, 0, 1, -1), (-1, 0, 0, 0, 0, 1, 0, 1, 0)),
    "H_{6,h}": ((1, 0, 0, 0, 0, -1, 0, 1, -1), (1, 0, 0, 0, 0, -1, 0, -1, 0)),
    "H_{6,i}": ((0, 1, 0, 0, 0, 1, 1, 0, 0), (0, 0, -1, 0, -1, 0, -1, 0, 0)),
    "H_{6,j}": ((0, 1, 0, 0, 0, 1, 1, 0, 0), (0, 0, 1, 0, 1, 0, 1, 0, 0)),
    "H_{8,a}": ((1, 0, 0, 0, 0, -1, 0, 1, 0), (-1, 0, 0, 0, -1, 0, 0, 0, -1)),
    "H_{8,b}": ((1, 0, 1, 0, 0, -1, 0, 1, 0), (-1, 0, 0, 0, -1, 0, 0, 0, -1)),
    "H_{8,c}": ((1, 0, 0, 0, -1, 0, 0, 0, -1), (-1, 0, 0, 0, -1, 0, 0, 0, 1), (-1, 0, 0, 0, -1, 0, 0, 0, -1)),
    "H_{8,d}": ((1, 0, 0, 0, -1, 0, 0, 0, -1), (-1, 0, 0, 0, 0, -1, 0, -1, 0), (-1, 0, 0, 0, -1, 0, 0, 0, -1)),
    "H_{8,e}": ((-1, 0, 0, 0, 0, 1, 0, 1, 0), (-1, 0, 0, 1, 0, -1, -1, -1, 0), (-1, 0, 0, 0, -1, 0, 0, 0, -1)),
    "H_{8,f}": ((-1, 0, 0, 0, 0, 1, 0, 1, 0), (-1, 1, -1, 0, 0, -1, 0, -1, 0), (-1, 0, 0, 0, -1, 0, 0, 0, -1)),
    "H_{8,g}": ((1, 0, 0, 0, 0, -1, 0, 1, 0), (-1, 0, 0, 0, 0, 1, 0, 1, 0)),
    "H_{8,h}": ((1, 0, 0, 0, 0, -1, 0, 1, 0), (1, 0, 0, 0, 0, -1, 0, -1, 0)),
    "H_{8,i}": ((-1, 0, 0, 0, 0, 1, 0, -1, 0), (-1, 0, 0, 0, 0, 1, 0, 1, 0)),
    "H_{8,j}": ((-1, 0, 0, 0, 0, 1, 0, -1, 0), (1, 0, 0, 0, 0, -1, 0, -1, 0)),
    "H_{8,k}": ((1, 0, 1, 0, 0, -1, 0, 1, 0), (-1, 0, 0, 0, 0, -1, 0, -1, 0)),
    "H_{8,l}": ((1, 0, 1, 0, 0, -1, 0, 1, 0), (1, 0, 0, 0, 0, 1, 0, 1, 0)),
    "H_{8,m}": ((-1, 0, -1, 0, 0, 1, 0, -1, 0), (-1, 0, 0, 0, 0, -1, 0, -1, 0)),
    "H_{8,n}": ((-1, 0, -1, 0, 0, 1, 0, -1, 0), (1, 0, 0, 0, 0, 1, 0, 1, 0)),
    "H_{12,a}": ((1, 0, 0, 0, 0, -1, 0, 1, 1), (-1, 0, 0, 0, -1, 0, 0, 0, -1)),
    "H_{12,b}": ((1, 0, 0, 0, 0, -1, 0, 1, 1), (-1, 0, 0, 0, 0, 1, 0, 1, 0)),
    "H_{12,c}": ((1, 0, 0, 0, 0, -1, 0, 1, 1), (1, 0, 0, 0, 0, -1, 0, -1, 0)),
    "H_{12,d}": ((-1, 0, 0, 0, 0, 1, 0, -1, -1), (-1, 0, 0, 0, 0, 1, 0, 1, 0)),
    "H_{12,e}": ((-1, 0, 0, 0, 0, 1, 0, -1, -1), (1, 0, 0, 0, 0, -1, 0, -1, 0)),
    "H_{12,f}": ((-1, 0, 0, 0, 0, 1, 0, -1, 1), (-1, 0, 0, 0, 0, -1, 0, -1, 0)),
    "H_{12,g}": ((-1, 0, 0, 0, 0, 1, 0, -1, 1), (-1, 0, 0, 0, 0, 1, 0, 1, 0)),
    "H_{12,h}": ((0, -1, 0, 0, 0, -1, -1, 0, 0), (0, 0, -1, 0, -1, 0, -1, 0, 0)),
    "H_{12,i}": ((0, 1, 0, 0, 0, 1, 1, 0, 0), (-1, 0, 0, 0, 1, 0, 0, 0, -1)),
    "H_{12,j}": ((0, 1, 0, 0, 0, 1, 1, 0, 0), (0, -1, 1, 0, -1, 0, 1, -1, 0)),
    "H_{12,k}": ((0, 1, 0, 0, 0, 1, 1, 0, 0), (-1, -1, -1, 0, 0, 1, 0, 1, 0)),
    "H_{16,a}": ((1, 0, 0, 0, 0, -1, 0, 1, 0), (-1, 0, 0, 0, 0, 1, 0, 1, 0), (-1, 0, 0, 0, -1, 0, 0, 0, -1)),
    "H_{16,b}": ((1, 0, 1, 0, 0, -1, 0, 1, 0), (-1, 0, 0, 0, 0, -1, 0, -1, 0), (-1, 0, 0, 0, -1, 0, 0, 0, -1)),
    "H_{24,a}": ((0, 1, 0, 0, 0, 1, 1, 0, 0), (-1, 0, 0, 0, 1, 0, 0, 0, -1), (-1, 0, 0, 0, -1, 0, 0, 0, -1)),
    "H_{24,b}": ((0, 1, 0, 0, 0, 1, 1, 0, 0), (0, -1, 1, 0, -1, 0, 1, -1, 0), (-1, 0, 0, 0, -1, 0, 0, 0, -1)),
    "H_{24,c}": ((0, 1, 0, 0, 0, 1, 1, 0, 0), (-1, -1, -1, 0, 0, 1, 0, 1, 0), (-1, 0, 0, 0, -1, 0, 0, 0, -1)),
    "H_{24,d}": ((1, 0, 0, 0, 0, -1, 0, 1, 1), (-1, 0, 0, 0, 0, 1, 0, 1, 0), (-1, 0, 0, 0, -1, 0, 0, 0, -1)),
    "H_{24,e}": ((0, 0, 1, 0, 1, 0, -1, 0, 0), (-1, 0, 0, 0, 0, -1, 0, -1, 0)),
    "H_{24,f}": ((0, 0, -1, 0, -1, 0, 1, 0, 0), (1, 0, 0, 0, 0, 1, 0, 1, 0)),
    "H_{24,g}": ((0, -1, 0, 1, 1, 1, -1, 0, 0), (-1, -1, 0, 0, 1, 0, 0, 0, -1)),
    "H_{24,h}": ((0, 1, 0, -1, -1, -1, 1, 0, 0), (1, 1, 0, 0, -1, 0, 0, 0, 1)),
    "H_{24,i}": ((1, 1, 0, -2, -1, -1, 0, 0, 1), (-1, -1, -1, 0, 0, 1, 0, 1, 0)),
    "H_{24,j}": ((-1, -1, 0, 2, 1, 1, 0, 0, -1), (1, 1, 1, 0, 0, -1, 0, -1, 0)),
    "H_{48,a}": ((0, 0, 1, 0, 1, 0, -1, 0, 0), (-1, 0, 0, 0, 0, -1, 0, -1, 0), (-1, 0, 0, 0, -1, 0, 0, 0, -1)),
    "H_{48,b}": ((0, -1, 0, 1, 1, 1, -1, 0, 0), (-1, -1, 0, 0, 1, 0, 0, 0, -1), (-1, 0, 0, 0, -1, 0, 0, 0, -1)),
    "H_{48,c}": ((1, 1, 0, -2, -1, -1, 0, 0, 1), (-1, -1, -1, 0, 0, 1, 0, 1, 0), (-1, 0, 0, 0, -1, 0, 0, 0, -1)),
}

ISO_LABELS: dict[str, str] = {
    "H_{2,a}": "C2",
    "H_{2,b}": "C2",
    "H_{2,c}": "C2",
    "H_{2,d}": "C2",
    "H_{2,e}": "C2",
    "H_{3,a}": "C3",
    "H_{3,b}": "C3",
    "H_{4,a}": "C4",
    "H_{4,b}": "C4",
    "H_{4,c}": "C4",
    "H_{4,d}": "C4",
    "H_{4,e}": "C2^2",
    "H_{4,f}": "C2^2",
    "H_{4,g}": "C2^2",
    "H_{4,h}": "C2^2",
    "H_{4,i}": "C2^2",
    "H_{4,j}": "C2^2",
    "H_{4,k}": "C2^2",
    "H_{4,l}": "C2^2",
    "H_{4,m}": "C2^2",
    "H_{4,n}": "C2^2",
    "H_{4,o}": "C2^2",
    "H_{6,a}": "C6",
    "H_{6,b}": "C6",
    "H_{6,c}": "C6",
    "H_{6,d}": "C6",
    "H_{6,e}": "S3",
    "H_{6,f}": "S3",
    "H_{6,g}": "S3",
    "H_{6,h}": "S3",
    "H_{6,i}": "S3",
    "H_{6,j}": "S3",
    "H_{8,a}": "C4xC2",
    "H_{8,b}": "C4xC2",
    "H_{8,c}": "C2^3",
    "H_{8,d}": "C2^3",
    "H_{8,e}": "C2^3",
    "H_{8,f}": "C2^3",
    "H_{8,g}": "D4",
    "H_{8,h}": "D4",
    "H_{8,i}": "D4",
    "H_{8,j}": "D4",
    "H_{8,k}": "D4",
    "H_{8,l}": "D4",
    "H_{8,m}": "D4",
    "H_{8,n}": "D4",
    "H_{12,a}": "C6xC2",
    "H_{12,b}": "D6",
    "H_{12,c}": "D6",
    "H_{12,d}": "D6",
    "H_{12,e}": "D6",
    "H_{12,f}": "D6",
    "H_{12,g}": "D6",
    "H_{12,h}": "D6",
    "H_{12,i}": "A4",
    "H_{12,j}": "A4",
    "H_{12,k}": "A4",
    "H_{16,a}": "D4xC2",
    "H_{16,b}": "D4xC2",
    "H_{24,a}": "A4xC2",
    "H_{24,b}": "A4xC2",
    "H_{24,c}": "A4xC2",
    "H_{24,d}": "D6xC2",
    "H_{24,e}": "S4",
    "H_{24,f}": "S4",
    "H_{24,g}": "S4",
    "H_{24,h}": "S4",
    "H_{24,i}": "S4",
    "H_{24,j}": "S4",
    "H_{48,a}": "S4xC2",
    "H_{48,b}": "S4xC2",
    "H_{48,c}": "S4xC2",
}

TRIVIAL_LABEL = "H_{1,a}"

CATALOG_LABELS: tuple[str, ...] = (TRIVIAL_LABEL, *sorted(GENERATORS, key=lambda s: (int(s[3:-1].split(",")[0]), s)))

