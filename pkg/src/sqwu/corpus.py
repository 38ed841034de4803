"""Bundled Poincare-duality algebras: point, spheres, projective spaces and a few products."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .pd import PDAlgebra, from_json, product
from .report import canonical_json

DATA = "data/corpus"


def point() -> PDAlgebra:
    return PDAlgebra("point", 0, [], spinc=True)


def sphere(n: int) -> PDAlgebra:
    return PDAlgebra(f"s{n}", n, [("s", n)], [("s*s", "0")], spinc=True)


def rp(n: int) -> PDAlgebra:
    return PDAlgebra(f"rp{n}", n, [("x", 1)], [(f"x^{n + 1}", "0")], {"x": {1: "x*x"}},
                     spinc=n % 2 == 1)


def cp(n: int) -> PDAlgebra:
    return PDAlgebra(f"cp{n}", 2 * n, [("c", 2)], [(f"c^{n + 1}", "0")], {"c": {2: "c*c"}},
                     spinc=True)


def hp2() -> PDAlgebra:
    return PDAlgebra("hp2", 8, [("u", 4)], [("u^3", "0")], {"u": {4: "u*u"}}, spinc=True)


def _with_torsion(a: PDAlgebra, degree: int, basis: list[str]) -> PDAlgebra:
    data = a.to_json()
    data["torsion"] = {"degree": degree, "basis": basis}
    return from_json(data)


def products() -> dict[str, PDAlgebra]:
    out = {}
    out["rp5xrp5"] = _with_torsion(product(rp(5), rp(5), "rp5xrp5", {"x": "y"}), 4,
                                   ["x^4", "x^2*y^2", "y^4"])
    out["rp9xrp9"] = _with_torsion(product(rp(9), rp(9), "rp9xrp9", {"x": "y"}), 8,
                                   ["x^8", "x^6*y^2", "x^4*y^4", "x^2*y^6", "y^8"])
    out["rp1xrp9"] = _with_torsion(product(rp(1), rp(9), "rp1xrp9", {"x": "y"}), 4, ["y^4"])
    out["cp5xhp2"] = _with_torsion(product(cp(5), hp2(), "cp5xhp2"), 8, [])
    out["cp4xcp5"] = _with_torsion(product(cp(4), cp(5), "cp4xcp5", {"c": "d"}), 8, [])
    cp33 = product(product(cp(3), cp(3), rename={"c": "d"}), cp(3), "cp3xcp3xcp3", {"c": "e"})
    out["cp3xcp3xcp3"] = _with_torsion(cp33, 8, [])
    return out


def generate() -> dict[str, PDAlgebra]:
    """Every corpus algebra built from its definition."""
    out = {"point": point()}
    out.update({f"s{n}": sphere(n) for n in range(1, 9)})
    out.update({f"rp{n}": rp(n) for n in range(1, 11)})
    out.update({f"cp{n}": cp(n) for n in range(1, 6)})
    out["hp2"] = hp2()
    out.update(products())
    return out


def write(directory: str | Path) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, a in generate().items():
        p = directory / f"{name}.json"
        p.write_text(canonical_json(a.to_json()))
        paths.append(p)
    return paths


def names() -> list[str]:
    root = resources.files("sqwu").joinpath(DATA)
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load(name: str) -> PDAlgebra:
    text = resources.files("sqwu").joinpath(DATA, f"{name}.json").read_text()
    return from_json(json.loads(text))


def resolve(path: str | Path) -> Path | None:
    """A bundled file for ``corpus/<name>.json``-style paths that do not exist locally."""
    p = Path(path)
    if p.exists():
        return p
    name = p.name[:-5] if p.name.endswith(".json") else p.name
    bundled = resources.files("sqwu").joinpath(DATA, f"{name}.json")
    return Path(str(bundled)) if bundled.is_file() else None


def load_all() -> dict[str, PDAlgebra]:
    return {n: load(n) for n in names()}


if __name__ == "__main__":
    import sys

    for p in write(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent / DATA):
        print(p)
