"""Named constructors for the small non-abelian groups studied here.

Each entry pairs a concrete generator recipe with the relations the
generators must satisfy and the commuting-graph shape and genus class the
group is known to realise. Dihedral groups follow the order convention:
``D2n`` has order 2n, so ``D6`` is S3 and ``D8`` the symmetries of a square.
"""

from __future__ import annotations

import json
import os
import re
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from .errors import UnknownGroupName
from .groups import (
    DEFAULT_CAP,
    FiniteGroup,
    Permutation,
    cyclic,
    direct_product,
    from_matrix_generators,
    from_permutation_generators,
    metacyclic,
)
from .words import relation_holds

GENUS_CLASSES = ("planar", "toroidal", "double-toroidal", "triple-toroidal")

Built = tuple[FiniteGroup, dict[str, int]]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    expected_order: int
    recipe: str
    builder: Callable[[], Built] = field(repr=False, compare=False)
    relations: tuple[str, ...]
    genus_class: str
    expected_shape: str | None = None
    expected_census: tuple[tuple[int, int], ...] | None = None
    center_size: int | None = None

    def as_json(self) -> dict:
        return {
            "name": self.name,
            "order": self.expected_order,
            "genus_class": self.genus_class,
            "expected_shape": self.expected_shape,
        }


# -- recipes ---------------------------------------------------------------------


def _perm_group(degree: int, named: dict[str, list[tuple[int, ...]]]) -> Built:
    perms = {k: Permutation.from_cycles(degree, *cycles) for k, cycles in named.items()}
    G = from_permutation_generators(list(perms.values()), cap=DEFAULT_CAP)
    return G, {k: G.index_of(p) for k, p in perms.items()}


def _matrix_group(p: int, named: dict[str, tuple]) -> Built:
    G = from_matrix_generators(p, list(named.values()))
    return G, {k: G.index_of(m) for k, m in named.items()}


def _dihedral(n: int) -> Built:
    """Symmetries of an n-gon: rotation r, reflection s."""
    refl = [(i, (-i) % n) for i in range(1, (n + 1) // 2)]
    return _perm_group(n, {"r": [tuple(range(n))], "s": refl})


def _metacyclic(m: int, k: int, r: int, t: int, names=("a", "x")) -> Built:
    G = metacyclic(m, k, r, t)
    return G, {names[0]: G.index_of((1, 0)), names[1]: G.index_of((0, 1))}


def _times_cyclic(base: Built, k: int, name: str) -> Built:
    G, gens = base
    C = cyclic(k)
    P = direct_product(G, C)
    out = {g: i * k for g, i in gens.items()}
    out[name] = C.index_of(1 % k)
    return P, out


def _affine_f3(named: dict[str, list[tuple[int, ...]]]) -> Built:
    # Points of F_3^2 numbered 3a + b.
    return _perm_group(9, named)


def _recipes() -> list[CatalogEntry]:
    E = CatalogEntry
    dihedral_rel = lambda n: (f"r^{n}", "s^2", "(sr)^2")
    dicyclic_rel = lambda n: (f"a^{2 * n}", f"x^2 = a^{n}", "a^x = a^-1")
    s3_rel = ("r^3", "s^2", "(sr)^2")
    entries = [
        # planar
        E("D6", 6, "dihedral permutations of a triangle", lambda: _dihedral(3),
          dihedral_rel(3), "planar", "K2 + 3*K1", ((3, 1), (2, 3)), 1),
        E("D8", 8, "dihedral permutations of a square", lambda: _dihedral(4),
          dihedral_rel(4), "planar", "3*K2", ((4, 3),), 2),
        E("Q8", 8, "pairs a^i x^e with x^2 = a^2", lambda: _metacyclic(4, 2, -1, 2),
          dicyclic_rel(2), "planar", "3*K2", ((4, 3),), 2),
        E("D10", 10, "dihedral permutations of a pentagon", lambda: _dihedral(5),
          dihedral_rel(5), "planar", "K4 + 5*K1", ((5, 1), (2, 5)), 1),
        E("D12", 12, "dihedral permutations of a hexagon", lambda: _dihedral(6),
          dihedral_rel(6), "planar", "K4 + 3*K2", ((6, 1), (4, 3)), 2),
        E("Q12", 12, "pairs a^i x^e with x^2 = a^3", lambda: _metacyclic(6, 2, -1, 3),
          dicyclic_rel(3), "planar", "K4 + 3*K2", ((6, 1), (4, 3)), 2),
        E("A4", 12, "even permutations of 4 points",
          lambda: _perm_group(4, {"a": [(0, 1, 2)], "b": [(0, 1), (2, 3)]}),
          ("a^3", "b^2", "(ab)^3"), "planar", "K3 + 4*K2", ((4, 1), (3, 4)), 1),
        E("S4", 24, "permutations of 4 points",
          lambda: _perm_group(4, {"a": [(0, 1, 2, 3)], "b": [(0, 1)]}),
          ("a^4", "b^2", "(ab)^3"), "planar", None, ((8, 3), (4, 6), (3, 4)), 1),
        E("A5", 60, "even permutations of 5 points",
          lambda: _perm_group(5, {"a": [(1, 3), (2, 4)], "b": [(0, 4, 3)]}),
          ("a^2", "b^3", "(ab)^5"), "planar", "6*K4 + 5*K3 + 10*K2",
          ((5, 6), (4, 5), (3, 10)), 1),
        E("Sz(2)", 20, "Z5 x| Z4 as pairs, y acting by squaring",
          lambda: _metacyclic(5, 4, 2, 0, names=("x", "y")),
          ("x^5", "y^4", "x^y = x^2"), "planar", "K4 + 5*K3", ((5, 1), (4, 5)), 1),
        E("SL(2,3)", 24, "2x2 matrices over Z3 of determinant 1",
          lambda: _matrix_group(3, {"s": ((1, 2), (1, 0)), "t": ((2, 1), (0, 2))}),
          ("s^6", "s^3 = t^3", "(st)^2 = s^3"), "planar", "4*K4 + 3*K2",
          ((6, 4), (4, 3)), 2),
        # toroidal
        E("D14", 14, "dihedral permutations of a heptagon", lambda: _dihedral(7),
          dihedral_rel(7), "toroidal", "K6 + 7*K1", ((7, 1), (2, 7)), 1),
        E("D16", 16, "dihedral permutations of an octagon", lambda: _dihedral(8),
          dihedral_rel(8), "toroidal", "K6 + 4*K2", ((8, 1), (4, 4)), 2),
        E("Q16", 16, "pairs a^i x^e with x^2 = a^4", lambda: _metacyclic(8, 2, -1, 4),
          dicyclic_rel(4), "toroidal", "K6 + 4*K2", ((8, 1), (4, 4)), 2),
        E("QD16", 16, "pairs a^i x^e with x acting as a -> a^3",
          lambda: _metacyclic(8, 2, 3, 0),
          ("a^8", "x^2", "a^x = a^3"), "toroidal", "K6 + 4*K2", ((8, 1), (4, 4)), 2),
        E("D6×Z3", 18, "D6 x Z3 as pairs", lambda: _times_cyclic(_dihedral(3), 3, "c"),
          s3_rel + ("c^3", "[r,c]", "[s,c]"), "toroidal", "K6 + 3*K3",
          ((9, 1), (6, 3)), 3),
        E("A4×Z2", 24, "A4 x Z2 as pairs",
          lambda: _times_cyclic(_perm_group(4, {"a": [(0, 1, 2)], "b": [(0, 1), (2, 3)]}), 2, "c"),
          ("a^3", "b^2", "(ab)^3", "c^2", "[a,c]", "[b,c]"), "toroidal", "K6 + 4*K4",
          ((8, 1), (6, 4)), 2),
        E("Z7⋊Z3", 21, "pairs a^i x^e with x acting as a -> a^2",
          lambda: _metacyclic(7, 3, 2, 0),
          ("a^7", "x^3", "a^x = a^2"), "toroidal", "K6 + 7*K2", ((7, 1), (3, 7)), 1),
        # double-toroidal
        E("D18", 18, "dihedral permutations of a 9-gon", lambda: _dihedral(9),
          dihedral_rel(9), "double-toroidal", "K8 + 9*K1", ((9, 1), (2, 9)), 1),
        E("D20", 20, "dihedral permutations of a 10-gon", lambda: _dihedral(10),
          dihedral_rel(10), "double-toroidal", "K8 + 5*K2", ((10, 1), (4, 5)), 2),
        E("Q20", 20, "pairs a^i x^e with x^2 = a^5", lambda: _metacyclic(10, 2, -1, 5),
          dicyclic_rel(5), "double-toroidal", "K8 + 5*K2", ((10, 1), (4, 5)), 2),
        E("S3×Z2×Z2", 24, "S3 x Z2 x Z2 as nested pairs",
          lambda: _times_cyclic(_times_cyclic(_dihedral(3), 2, "c"), 2, "d"),
          s3_rel + ("c^2", "d^2", "[r,c]", "[s,c]", "[r,d]", "[s,d]", "[c,d]"),
          "double-toroidal", "K8 + 3*K4", ((12, 1), (8, 3)), 4),
        E("S3×Z4", 24, "S3 x Z4 as pairs", lambda: _times_cyclic(_dihedral(3), 4, "c"),
          s3_rel + ("c^4", "[r,c]", "[s,c]"), "double-toroidal", "K8 + 3*K4",
          ((12, 1), (8, 3)), 4),
        E("Z3⋊Z8", 24, "pairs y^i x^e with x inverting y",
          lambda: _metacyclic(3, 8, -1, 0, names=("y", "x")),
          ("x^8", "y^3", "y^x = y^-1"), "double-toroidal", "K8 + 3*K4",
          ((12, 1), (8, 3)), 4),
        E("(Z3⋊Z4)×Z2", 24, "(Z3 x| Z4) x Z2 as nested pairs",
          lambda: _times_cyclic(_metacyclic(3, 4, -1, 0, names=("y", "x")), 2, "z"),
          ("x^4", "y^3", "z^2", "x y x^-1 = y^-1", "xz = zx", "yz = zy"),
          "double-toroidal", "K8 + 3*K4", ((12, 1), (8, 3)), 4),
        E("(Z3×Z3)⋊Z2", 18, "permutations of 6 points inverting two 3-cycles",
          lambda: _perm_group(6, {"x": [(0, 1, 2)], "y": [(3, 4, 5)], "z": [(1, 2), (4, 5)]}),
          ("x^3", "y^3", "z^2", "[x,y]", "x^z = x^-1", "y^z = y^-1"),
          "double-toroidal", "K8 + 9*K1", ((9, 1), (2, 9)), 1),
        E("(Z3×Z3)⋊Z4", 36, "affine maps of F3^2: translation y, order-4 linear part x",
          lambda: _affine_f3({"x": [(1, 6, 2, 3), (4, 7, 8, 5)],
                              "y": [(0, 3, 6), (1, 4, 7), (2, 5, 8)]}),
          ("x^4", "y^3", "(yx^2)^2", "[x^-1yx, y]"), "double-toroidal", "K8 + 9*K3",
          ((9, 1), (4, 9)), 1),
        E("(Z3×Z3)⋊Q8", 72, "affine maps of F3^2 with Q8 linear parts",
          lambda: _affine_f3({"x": [(1, 6, 2, 3), (4, 7, 8, 5)],
                              "y": [(1, 4, 2, 8), (3, 7, 6, 5)],
                              "z": [(0, 1, 2), (3, 4, 5), (6, 7, 8)]}),
          ("x^4", "y^4", "z^3", "y^x = y^-1", "z^{y^2} = z^-1", "z^{x^2} = z^-1",
           "x^-1 z x^-1 = (zy)^2"),
          "double-toroidal", "K8 + 9*F3", ((9, 1), (8, 9), (4, 27)), 1),
        # triple-toroidal
        E("GL(2,3)", 48, "invertible 2x2 matrices over Z3",
          lambda: _matrix_group(3, {"a": ((0, 1), (1, 1)), "b": ((1, 0), (0, 2))}),
          ("a^8", "b^2", "(ab)^3", "[a^4, b]"), "triple-toroidal",
          "3*K6 + 4*K4 + 6*K2", ((8, 3), (6, 4), (4, 6)), 2),
        E("SL(2,3)∘Z2", 48, "2x2 matrices over Z7 satisfying the defining presentation",
          lambda: _matrix_group(7, {"x": ((4, 4), (1, 3)), "y": ((0, 6), (1, 6)),
                                    "z": ((5, 2), (1, 2))}),
          ("y^3", "z^4", "x^2 = z^2", "y^x = y^-1", "y^-1 z y^-1 z^-1 y^-1 z",
           "x z^-1 x y^-1 z y"),
          "triple-toroidal", "3*K6 + 4*K4 + 6*K2", ((8, 3), (6, 4), (4, 6)), 2),
        E("D8×Z3", 24, "D8 x Z3 as pairs", lambda: _times_cyclic(_dihedral(4), 3, "c"),
          dihedral_rel(4) + ("c^3", "[r,c]", "[s,c]"), "triple-toroidal", "3*K6",
          ((12, 3),), 6),
        E("Q8×Z3", 24, "Q8 x Z3 as pairs",
          lambda: _times_cyclic(_metacyclic(4, 2, -1, 2), 3, "c"),
          dicyclic_rel(2) + ("c^3", "[a,c]", "[x,c]"), "triple-toroidal", "3*K6",
          ((12, 3),), 6),
    ]
    return entries


CATALOG: dict[str, CatalogEntry] = {e.name: e for e in _recipes()}

DOUBLE_TOROIDAL = tuple(n for n, e in CATALOG.items() if e.genus_class == "double-toroidal")
TRIPLE_TOROIDAL = tuple(n for n, e in CATALOG.items() if e.genus_class == "triple-toroidal")


def _normalize(name: str) -> str:
    s = name.replace(" ", "").upper()
    for a, b in (("×", "X"), ("⋊", ":"), ("∘", "O"), ("X|", ":"), ("*", "X")):
        s = s.replace(a, b)
    return s


_ALIASES = {_normalize(n): n for n in CATALOG}


def resolve(name: str) -> str:
    """Canonical catalog name; accepts ASCII spellings such as ``(Z3xZ3):Q8``."""
    if name in CATALOG:
        return name
    try:
        return _ALIASES[_normalize(name)]
    except KeyError:
        raise UnknownGroupName(name) from None


def entry(name: str) -> CatalogEntry:
    return CATALOG[resolve(name)]


_lock = threading.Lock()
_cache: dict[str, Built] = {}


def _slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "_", _normalize(name)).strip("_")


def _disk_path(name: str) -> Path | None:
    root = os.environ.get("CGL_CACHE_DIR")
    return Path(root) / f"{_slug(name)}.npz" if root else None


def _load(path: Path) -> Built | None:
    try:
        with np.load(path, allow_pickle=False) as z:
            G = FiniteGroup(z["table"].copy(), z["inverse"].copy(), tuple(z["labels"].tolist()))
            gens = json.loads(str(z["gens"]))
    except (OSError, KeyError, ValueError):
        return None
    return G, gens


def _store(path: Path, built: Built) -> None:
    G, gens = built
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp.npz")
    np.savez(tmp, table=G.table, inverse=G.inverse, labels=np.array(G.labels),
             gens=np.array(json.dumps(gens, sort_keys=True)))
    os.replace(tmp, path)


def build_with_generators(name: str) -> Built:
    """The group and the element index of each named generator."""
    key = resolve(name)
    with _lock:
        if key in _cache:
            return _cache[key]
        path = _disk_path(key)
        built = _load(path) if path is not None and path.exists() else None
        if built is None:
            built = CATALOG[key].builder()
            if path is not None:
                _store(path, built)
        _cache[key] = built
        return built


def build(name: str) -> FiniteGroup:
    return build_with_generators(name)[0]


def verify_relations(name: str) -> bool:
    G, gens = build_with_generators(name)
    return all(relation_holds(G, gens, r) for r in entry(name).relations)


def catalog_json() -> str:
    return json.dumps([e.as_json() for e in CATALOG.values()], indent=2, ensure_ascii=False)
