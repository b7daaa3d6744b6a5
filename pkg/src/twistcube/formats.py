"""JSON and text renderings of polytopes, tableaux and characters."""

from __future__ import annotations

from fractions import Fraction

from .cube import TwistedCube
from .paths import path_to_json, rational_str
from .tableaux import TableauSet


def _rev(v, flip):
    return tuple(reversed(v)) if flip else tuple(v)


def polytope_to_json(cube: TwistedCube, opposite: bool = False) -> dict:
    ineqs = [
        {"coeffs": [rational_str(c) for c in _rev(coeffs, opposite)], "rhs": rational_str(rhs), "sense": "<="}
        for coeffs, rhs in cube.inequalities()
    ]
    verts = sorted(_rev(v, opposite) for v in cube.vertices())
    points = sorted(_rev(p, opposite) for p in cube.lattice_points())
    return {
        "n": cube.n,
        "coordinate_order": "opposite" if opposite else "standard",
        "inequalities": ineqs,
        "vertices": [[rational_str(c) for c in v] for v in verts],
        "lattice_points": [list(p) for p in points],
        "is_lattice": cube.is_lattice_polytope(),
        "condition_P": cube.condition_P(),
    }


def polytope_to_hrep(cube: TwistedCube, opposite: bool = False) -> str:
    """cdd-style H-representation: each row ``b -a_1 ... -a_n`` encodes ``a.x <= b``."""
    rows = cube.inequalities()
    lines = ["H-representation", "begin", f" {len(rows)} {cube.n + 1} rational"]
    for coeffs, rhs in rows:
        entries = [rhs] + [-c for c in _rev(coeffs, opposite)]
        lines.append(" " + " ".join(_cdd_num(e) for e in entries))
    lines.append("end")
    return "\n".join(lines) + "\n"


def _cdd_num(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def polytope_to_text(cube: TwistedCube, opposite: bool = False) -> str:
    names = [f"x{k}" for k in range(1, cube.n + 1)]
    if opposite:
        names = names[::-1]
    lines = [f"coordinates: ({', '.join(names)})", "inequalities:"]
    for coeffs, rhs in cube.inequalities():
        terms = [f"{_cdd_num(c)}*{nm}" for c, nm in zip(_rev(coeffs, opposite), names) if c]
        lines.append(f"  {' + '.join(terms)} <= {_cdd_num(rhs)}")
    lines.append("vertices:")
    for v in sorted(_rev(v, opposite) for v in cube.vertices()):
        lines.append("  (" + ", ".join(_cdd_num(c) for c in v) + ")")
    pts = sorted(_rev(p, opposite) for p in cube.lattice_points())
    lines.append(f"lattice points: {len(pts)}")
    for p in pts:
        lines.append("  (" + ", ".join(map(str, p)) + ")")
    lines.append(f"lattice polytope: {cube.is_lattice_polytope()}")
    lines.append(f"condition (P): {cube.condition_P()}")
    return "\n".join(lines) + "\n"


def tableaux_to_json(ts: TableauSet) -> list[dict]:
    out = []
    for p in ts.paths:
        item = path_to_json(p)
        item["weight"] = list(p.weight().to_ints())
        item["exponents"] = list(ts.exponents(p))
        out.append(item)
    return out


def tableaux_to_text(ts: TableauSet) -> str:
    lines = [f"{len(ts)} standard tableaux"]
    for p in ts.paths:
        lines.append(f"  exponents={list(ts.exponents(p))} weight={p.weight().to_ints()} {p!r}")
    return "\n".join(lines) + "\n"
