r"""The SL(2,Z) action on origamis: shears, quarter turn, orbits and cusps.

The generators act on the permutation pair by precomposition:

* ``T = [[1,1],[0,1]]`` (horizontal shear) sends (right, up) to
  (right, up∘right⁻¹) — on cylinder coordinates each twist gains the
  cylinder's height, modulo its width;
* ``S = [[0,1],[-1,0]]`` (quarter turn) sends (right, up) to (up, right⁻¹),
  exchanging the horizontal and vertical directions.

Orbits of the whole group are computed by breadth-first closure under T and
S on canonical keys.  The T-cycles of an orbit are its cusps; the cusp width
is the cycle length and their least common multiple is the level of the
stabiliser.  An arbitrary unimodular matrix acts through its Euclidean
factorisation into a word in T and S.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import lcm
from typing import NamedTuple

from .origami_core import (
    Origami,
    _inverse,
    canonical_key,
    is_primitive,
    key_from_text,
    key_to_text,
    origami_from_key,
)

ORBIT_SCHEMA_VERSION = 1


class MatrixZ(NamedTuple):
    """An element [[a, b], [c, d]] of SL(2,Z)."""

    a: int
    b: int
    c: int
    d: int

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "MatrixZ") -> "MatrixZ":
        return MatrixZ(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "MatrixZ":
        return MatrixZ(-self.a, -self.b, -self.c, -self.d)


IDENTITY = MatrixZ(1, 0, 0, 1)
T = MatrixZ(1, 1, 0, 1)
S = MatrixZ(0, 1, -1, 0)
V = MatrixZ(1, 0, 1, 1)


def t_power(k: int) -> MatrixZ:
    return MatrixZ(1, k, 0, 1)


def v_power(k: int) -> MatrixZ:
    return MatrixZ(1, 0, k, 1)


def apply_T(o: Origami) -> Origami:
    """The horizontal shear: (right, up) ↦ (right, up∘right⁻¹)."""
    rinv = _inverse(o.right)
    return Origami(o.right, tuple(o.up[j] for j in rinv), check=False)


def apply_T_inverse(o: Origami) -> Origami:
    return Origami(o.right, tuple(o.up[j] for j in o.right), check=False)


def apply_S(o: Origami) -> Origami:
    """The quarter turn: (right, up) ↦ (up, right⁻¹)."""
    return Origami(o.up, _inverse(o.right), check=False)


def apply_S_inverse(o: Origami) -> Origami:
    return Origami(_inverse(o.up), o.right, check=False)


def _perm_power(p: tuple, k: int) -> tuple:
    """p^k computed cycle by cycle (k may be negative)."""
    n = len(p)
    out = [0] * n
    seen = bytearray(n)
    for s in range(n):
        if seen[s]:
            continue
        cyc = [s]
        seen[s] = 1
        x = p[s]
        while x != s:
            cyc.append(x)
            seen[x] = 1
            x = p[x]
        m = len(cyc)
        shift = k % m
        for i, v in enumerate(cyc):
            out[v] = cyc[(i + shift) % m]
    return tuple(out)


def _apply_t_power(o: Origami, q: int) -> Origami:
    if q == 0:
        return o
    rq = _perm_power(o.right, -q)
    return Origami(o.right, tuple(o.up[j] for j in rq), check=False)


def _generator_word(m: MatrixZ) -> list:
    """m as a left-to-right word of ('T', q) and ('S', ±1) factors.

    Peels factors by the Euclidean algorithm on the first column: while
    c ≠ 0, m = T^q · S⁻¹ · (S·T^{−q}·m) with q = a // c strictly reducing
    |c|; the terminal upper-triangular matrix is T^b or S·S·T^{−b}.
    """
    a, b, c, d = m
    if a * d - b * c != 1:
        raise ValueError(f"matrix {tuple(m)} is not unimodular")
    word = []
    while c:
        q = a // c
        word.append(("T", q))
        word.append(("S", -1))
        a, b, c, d = c, d, q * c - a, q * d - b
    if a == 1:
        word.append(("T", b))
    else:
        word.append(("S", 1))
        word.append(("S", 1))
        word.append(("T", -b))
    return word


def apply_matrix(o: Origami, m: MatrixZ) -> Origami:
    """Act by an arbitrary unimodular matrix (left action)."""
    for op, v in reversed(_generator_word(MatrixZ(*m))):
        if op == "S":
            o = apply_S(o) if v > 0 else apply_S_inverse(o)
        else:
            o = _apply_t_power(o, v)
    return o


def u_orbit_width(o: Origami) -> int:
    """Least k ≥ 1 with T^k·o canonically equal to o: the cusp width at o."""
    base = canonical_key(o)
    cur = apply_T(o)
    k = 1
    limit = 4 * o.n * o.n
    while canonical_key(cur) != base:
        cur = apply_T(cur)
        k += 1
        if k > limit:
            raise RuntimeError("runaway shear orbit; surface is not in H(2)?")
    return k


def membership(o: Origami, m: MatrixZ) -> bool:
    """True iff m stabilises o up to relabelling."""
    return canonical_key(apply_matrix(o, m)) == canonical_key(o)


class CuspData(NamedTuple):
    """One T-cycle of an orbit: least key on the cycle and its length."""

    representative: bytes
    width: int


@dataclass(frozen=True)
class Orbit:
    """A full SL(2,Z) orbit with its T/S edge structure and cusp partition."""

    n: int
    base_key: bytes
    surfaces: tuple
    t_edge: dict
    s_edge: dict
    cusps: tuple
    width_at: dict = field(repr=False)

    @property
    def index(self) -> int:
        """The stabiliser's index in SL(2,Z): the orbit's cardinality."""
        return len(self.surfaces)

    def cusp_width(self, key: bytes) -> int:
        """Width of the cusp whose T-cycle passes through ``key``."""
        return self.width_at[key]


def _assemble_orbit(n: int, base_key: bytes, t_edge: dict, s_edge: dict) -> Orbit:
    surfaces = tuple(sorted(t_edge))
    cusps = []
    width_at = {}
    placed = set()
    for key in surfaces:
        if key in placed:
            continue
        cycle = [key]
        cur = t_edge[key]
        while cur != key:
            cycle.append(cur)
            cur = t_edge[cur]
        for k in cycle:
            placed.add(k)
            width_at[k] = len(cycle)
        cusps.append(CuspData(min(cycle), len(cycle)))
    cusps.sort()
    return Orbit(n, base_key, surfaces, t_edge, s_edge, tuple(cusps), width_at)


def orbit(o: Origami) -> Orbit:
    """Breadth-first closure of {o} under T and S, keyed canonically.

    Forward images suffice: T-cycles and the order-4 action of S close on
    themselves, so the forward closure is the full group orbit.
    """
    if not is_primitive(o):
        raise ValueError("orbit computation expects a primitive surface")
    base = canonical_key(o)
    t_edge = {}
    s_edge = {}
    frontier = [(base, o)]
    seen = {base}
    while frontier:
        frontier.sort(key=lambda item: item[0])
        nxt = []
        for key, surf in frontier:
            for edges, image in ((t_edge, apply_T(surf)), (s_edge, apply_S(surf))):
                ik = canonical_key(image)
                edges[key] = ik
                if ik not in seen:
                    seen.add(ik)
                    nxt.append((ik, image))
        frontier = nxt
    # the representative is the orbit minimum, not the seed, so the result
    # (and its serialization) is identical no matter which member launched it
    return _assemble_orbit(o.n, min(seen), t_edge, s_edge)


def level(orb: Orbit) -> int:
    """lcm of the cusp widths: the least ℓ with T^ℓ stabilising every cusp."""
    return lcm(*(c.width for c in orb.cusps))


def validate_orbit(orb: Orbit) -> None:
    """Check the orbit's structural invariants; raise ValueError on failure."""
    keyset = set(orb.surfaces)
    if len(orb.surfaces) != len(keyset):
        raise ValueError("duplicate surfaces")
    if orb.base_key != orb.surfaces[0]:
        raise ValueError("base key is not the orbit's canonical representative")
    for name, edges in (("t", orb.t_edge), ("s", orb.s_edge)):
        if set(edges) != keyset or set(edges.values()) != keyset:
            raise ValueError(f"{name}-edges are not a permutation of the orbit")
    if sum(c.width for c in orb.cusps) != len(orb.surfaces):
        raise ValueError("cusp widths do not add up to the orbit size")
    for cusp in orb.cusps:
        cur = cusp.representative
        for _ in range(cusp.width):
            cur = orb.t_edge[cur]
        if cur != cusp.representative:
            raise ValueError("cusp width does not match its T-cycle")
    if origami_from_key(orb.base_key).n != orb.n:
        raise ValueError("stored n disagrees with the keys")


def orbit_to_json(orb: Orbit) -> str:
    """Deterministic JSON form (stable ordering, no whitespace)."""
    doc = {
        "schema_version": ORBIT_SCHEMA_VERSION,
        "n": orb.n,
        "base_key": key_to_text(orb.base_key),
        "surfaces": [key_to_text(k) for k in orb.surfaces],
        "t_edges": [key_to_text(orb.t_edge[k]) for k in orb.surfaces],
        "s_edges": [key_to_text(orb.s_edge[k]) for k in orb.surfaces],
        "cusps": [
            {"rep": key_to_text(c.representative), "width": c.width} for c in orb.cusps
        ],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def orbit_from_json(text: str) -> Orbit:
    """Parse and fully re-validate an orbit document."""
    doc = json.loads(text)
    if doc.get("schema_version") != ORBIT_SCHEMA_VERSION:
        raise ValueError(f"unsupported orbit schema: {doc.get('schema_version')!r}")
    surfaces = [key_from_text(t) for t in doc["surfaces"]]
    if len(surfaces) != len(doc["t_edges"]) or len(surfaces) != len(doc["s_edges"]):
        raise ValueError("edge arrays do not match the surface list")
    t_edge = {k: key_from_text(t) for k, t in zip(surfaces, doc["t_edges"])}
    s_edge = {k: key_from_text(t) for k, t in zip(surfaces, doc["s_edges"])}
    keyset = set(surfaces)
    for name, edges in (("t", t_edge), ("s", s_edge)):
        if not set(edges.values()) <= keyset:
            raise ValueError(f"{name}-edges leave the stored surface list")
    orb = _assemble_orbit(int(doc["n"]), key_from_text(doc["base_key"]), t_edge, s_edge)
    stored = [(c["rep"], c["width"]) for c in doc["cusps"]]
    if stored != [(key_to_text(c.representative), c.width) for c in orb.cusps]:
        raise ValueError("stored cusps disagree with the edge structure")
    validate_orbit(orb)
    return orb
