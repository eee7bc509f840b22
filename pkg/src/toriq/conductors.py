"""Per-family Artin conductor formulas over named subfield-discriminant roles.

Each catalog family evaluates its conductor as a monomial in the bound roles
(integer exponents, negative = division), or as the lcm of two such monomials.
Role names follow the subfield lattice of the family: D4p is D_4', D2pp is
D_2'', DM13 is D_{M_13}, and so on.
"""

from __future__ import annotations

from dataclasses import dataclass

Monomial = tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class ConductorExpression:
    label: str
    monomials: tuple[Monomial, ...]  # one entry = plain monomial, two = lcm

    def roles(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for mono in self.monomials:
            for role, _ in mono:
                seen[role] = None
        return tuple(seen)


def _mono(spec: str) -> Monomial:
    """Parse 'D6/(D2*D3)' or 'D1*D3^2' into ((role, exp), ...)."""
    num, _, den = spec.partition("/")
    den = den.strip("()")

    def parts(s: str, sgn: int):
        for piece in filter(None, (t.strip() for t in s.split("*"))):
            role, _, exp = piece.partition("^")
            yield role, sgn * (int(exp) if exp else 1)

    out: dict[str, int] = {}
    for role, e in (*parts(num, 1), *parts(den, -1)):
        out[role] = out.get(role, 0) + e
    return tuple(sorted(out.items()))


def _expr(label: str, *specs: str) -> ConductorExpression:
    return ConductorExpression(label, tuple(_mono(s) for s in specs))


_C2 = {"a": "DL^2", "b": "DL", "c": "DL^2", "d": "DL", "e": "DL^3"}
_C4 = {"a": "D4/D2", "b": "D4", "c": "D4/D2", "d": "D4"}
_V4 = {
    "e": "D1*D3^2",
    "f": "D1*D2*D3",
    "g": "D2*D3",
    "h": "D1*D2*D3",
    "i": "D2*D3",
    "j": "D1*D2",
    "k": "D1*D3^2",
    "l": "D1*D2*D3",
    "m": "D2*D3",
    "n": "D1*D2*D3",
    "o": "D2*D3",
}
_S3 = {"e": "D2*D3", "f": "D3", "g": "D2*D3", "h": "D3", "i": "D2*D3", "j": "D3"}
_D4 = {
    "g": "DK*DM2/DK2",
    "h": "DM2/DK2",
    "i": "DM2",
    "j": "DM1",
    "k": "DK*DM2/DK2",
    "l": "DM2/DK2",
    "m": "DM2",
    "n": "DM1",
}
_D6 = {
    "b": "D1*D7/(D4*D6)",
    "c": "D1/(D4*D6)",
    "d": "D4*D6",
    "e": "D4*D8",
    "f": "D1/D4",
    "g": "D1/D4",
    "h": "D1/D4",
}
_S4 = {
    "e": "D6pp/D3",
    "f": "D6/D3",
    "g": "D8/(D4*D2)",
    "h": "D4",
    "i": "D12/(D6*D4)",
    "j": "D12*D4*D2/(D8*D6)",
}

CONDUCTOR_EXPRESSIONS: dict[str, ConductorExpression] = {}


def _add(label: str, *specs: str):
    CONDUCTOR_EXPRESSIONS[label] = _expr(label, *specs)


for _x, _s in _C2.items():
    _add(f"H_{{2,{_x}}}", _s)
for _x in "ab":
    _add(f"H_{{3,{_x}}}", "DL")
for _x, _s in _C4.items():
    _add(f"H_{{4,{_x}}}", _s)
for _x, _s in _V4.items():
    _add(f"H_{{4,{_x}}}", _s)
_add("H_{6,a}", "D6/(D2*D3)")
_add("H_{6,b}", "D2*D3")
# the cyclic-sextic quotient D6/D3 as an lcm of conductor data, no D6 input needed
_add("H_{6,c}", "D2^3", "D2*D3")
_add("H_{6,d}", "D2^3", "D2*D3")
for _x, _s in _S3.items():
    _add(f"H_{{6,{_x}}}", _s)
_add("H_{8,a}", "D2*D4p/D2p")
_add("H_{8,b}", "D2*D4p/D2p")
for _x in "cdef":
    _add(f"H_{{8,{_x}}}", "DK*DK1*DK2")
for _x, _s in _D4.items():
    _add(f"H_{{8,{_x}}}", _s)
_add("H_{12,a}", "D2p*D6/(D3*D2)")
for _x, _s in _D6.items():
    _add(f"H_{{12,{_x}}}", _s)
for _x in "ijk":
    _add(f"H_{{12,{_x}}}", "D4")
_add("H_{16,a}", "D2pp*D4p/D2p")
_add("H_{16,b}", "D2pp*D4p/D2p")
_add("H_{24,a}", "D6/D3")
_add("H_{24,b}", "D8/(D4*D2)")
_add("H_{24,c}", "D12*D4*D2/(D8*D6p)")
_add("H_{24,d}", "D2p*D6/(D3*D2)")
for _x, _s in _S4.items():
    _add(f"H_{{24,{_x}}}", _s)
_add("H_{48,a}", "D6/D3")
_add("H_{48,b}", "D8/(D4*D2)")
_add("H_{48,c}", "D12*D4*D2p/(D8p*D6p)")
