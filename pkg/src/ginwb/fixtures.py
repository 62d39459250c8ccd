"""Parameterizations and syzygy systems used as fixed witnesses.

Forms are stored verbatim, including braces and glued factors such as
`t^{10}u`.  Two typos are fixed here and nowhere else: the first aux2 relation
names f5 where f4 is meant, and the aux3 form f4 writes `t^10u` for t^{10}u.
"""

from __future__ import annotations

from pathlib import Path

from .groebner import DEFAULT_MODULUS, PolyRing

AUX1_FORMS = (
    "t^{10}+t^9*u+t*u^9+u^{10}",
    "7*t^{10}+101*t^8*u^2+ 355*t^5*u^5+ 999*u^{10}",
    "29*t^{10}+ 99*t^3*u^7+ 67*t^2*u^8+ 83*u^{10}",
    "61*t^{10}+79*t^5*u^5+t^3*u^7+901*t*u^9+ 53*u^{10}",
    "741*t^{10}+t^8*u^2+ t^7*u^3+ t^6*u^4+ t^4*u^6+ t^2*u^8+ 9001*u^{10}",
)

AUX2_FORMS = (
    "-t^9u^2- t^8u^3+ t^6u^5+ 2t^5u^6- 2t^3u^8+ tu^{10}",
    "-t^8u^3+ 2t^7u^4- 3t^6u^5- t^5u^6+ 2t^4u^7+ 3t^3u^8+ t^2u^9- tu^{10}- u^{11}",
    "t^{11}+t^9u^2- 2t^8u^3+ 2t^7u^4- t^6u^5- 3t^4u^7- t^3u^8+ t^2u^9+ 2tu^{10}",
    "t^{11}- t^8u^3+ 2t^7u^4- t^6u^5- t^4u^7- 3t^3u^8- 2t^2u^9+ tu^{10}+ u^{11}",
    "-t^{10}u+ t^7u^4+ 3t^4u^7+ t^3u^8- t^2u^9- tu^{10}",
)

AUX3_FORMS = (
    "2t^{10}u-t^9u^2-4t^7u^4-t^6u^5+2t^5u^6-t^4u^7+3t^3u^8+t^2u^9-tu^{10}",
    "-2t^{11}+t^{10}u+2t^9u^2+3t^8u^3-2t^7u^4-t^6u^5-t^5u^6+t^4u^7+2t^3u^8-2t^2u^9-tu^{10}+u^{11}",
    "-2t^{10}u+t^9u^2+t^8u^3+t^7u^4+t^6u^5-t^5u^6-tu^{10}",
    "-t^8u^3-2t^7u^4-t^6u^5+t^5u^6+4t^4u^7+t^3u^8-2t^2u^9-tu^{10}",
    "2t^{10}u-t^9u^2+3t^8u^3-2t^7u^4-4t^6u^5-t^5u^6+2t^3u^8+t^2u^9",
)

# coefficient forms (c_0..c_4) of relations sum c_k f_k = 0
AUX2_RELATIONS = (
    ("t^4", "t^3u", "t^2u^2", "tu^3", "u^4"),
    ("u^3", "u^2t", "0", "ut^2", "t^3"),
    ("0", "ut", "u^2-t^2", "t^2", "u^2"),
    ("t^2", "t^2+tu+u^2", "tu", "u^2", "t^2-u^2"),
)

AUX3_RELATIONS = (
    ("t^4", "t^3u", "t^2u^2", "tu^3", "u^4"),
    ("u^4", "u^3t", "t^4+u^2t^2", "ut^3", "t^4"),
    ("0", "ut", "u^2-t^2", "t^2", "u^2"),
    ("t", "0", "t+u", "t-u", "u"),
)

AUX3_INITIAL_IDEAL = (
    "x0^2*x2, x0^3, x0*x1^2*x2, x0^2*x3^3, x2^3*x3, x1*x2^2*x3, x0*x2^2*x3, x1^2*x2*x3, "
    "x0*x1*x2*x3, x0*x1^2*x3, x0^2*x1*x3, x2^4, x1*x2^3, x0*x2^3, x1^2*x2^2, x0*x1*x2^2, "
    "x1^3*x2, x0*x1^3, x0^2*x1^2, x0*x1*x3^3, x1^3*x3^3"
)

AUX2_INITIAL_IDEAL = "Borel(x2^4, x1*x2^2*x3, x0^3)"

FIXTURES = {
    "aux1": {"forms": AUX1_FORMS, "degree": 10, "max_generator_degree": 4},
    "aux2": {
        "forms": AUX2_FORMS,
        "degree": 11,
        "relations": AUX2_RELATIONS,
        "initial_ideal": AUX2_INITIAL_IDEAL,
        "syzygy_degrees": (13, 13, 14, 15),
        "splitting": (4, 3, 2, 2),
        "max_generator_degree": 4,
    },
    "aux3": {
        "forms": AUX3_FORMS,
        "degree": 11,
        "relations": AUX3_RELATIONS,
        "initial_ideal": AUX3_INITIAL_IDEAL,
        "syzygy_degrees": (12, 13, 15, 15),
        "splitting": (4, 4, 2, 1),
        "genus": 1,
        "max_generator_degree": 6,
    },
}

BINARY = ("t", "u")


def binary_ring(modulus: int = DEFAULT_MODULUS) -> PolyRing:
    return PolyRing(BINARY, modulus=modulus)


def fixture_forms(name: str, modulus: int = DEFAULT_MODULUS) -> list:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}")
    ring = binary_ring(modulus)
    return [ring.parse(s) for s in FIXTURES[name]["forms"]]


def fixture_relations(name: str, modulus: int = DEFAULT_MODULUS) -> list:
    ring = binary_ring(modulus)
    return [tuple(ring.parse(c) for c in rel) for rel in FIXTURES[name]["relations"]]


def load_param_file(path, modulus: int = DEFAULT_MODULUS) -> list:
    """One form per line in t,u; blank lines and `#` comments skipped."""
    ring = binary_ring(modulus)
    forms = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            forms.append(ring.parse(line))
    if not forms:
        raise ValueError(f"{path}: no forms found")
    return forms


def write_param_file(path, name: str) -> None:
    Path(path).write_text("\n".join(FIXTURES[name]["forms"]) + "\n")
