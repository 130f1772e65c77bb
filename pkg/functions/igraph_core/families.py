from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Dict, List, Tuple

from .domination import GapMode, gap_profile, require_iset
from .errors import InvalidISetError, InvalidParameterError
from .graph_core import Graph, VertexSet, cycle, empty_graph, from_edge_list, path


def count_path_isets(n: int) -> int:
    if n < 1:
        raise InvalidParameterError(f"path needs n >= 1, got {n}")
    k, rem = divmod(n, 3)
    if rem == 0:
        return 1
    if rem == 1:
        return comb(k + 2, 2)
    return k + 2


def count_cycle_isets(n: int) -> int:
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}")
    k, rem = divmod(n, 3)
    if rem == 0:
        return 3
    if rem == 1:
        return k * (3 * k + 1) // 2
    return n


# Integer polynomials are coefficient lists, lowest degree first.
Poly = List[int]


def _poly_add(a: Poly, b: Poly) -> Poly:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _poly_mul(a: Poly, b: Poly) -> Poly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_pow(a: Poly, e: int) -> Poly:
    out: Poly = [1]
    for _ in range(e):
        out = _poly_mul(out, a)
    return out


def _monomial(c: int, degree: int) -> Poly:
    return [0] * degree + [c]


def _coefficient(p: Poly, r: int) -> int:
    return p[r] if 0 <= r < len(p) else 0


def gf_cycle_coefficient(t: int, r: int) -> int:
    """Coefficient of x^r in 2x^(t-1)(1+x)^(t-1) + x^t(1+x)^(t-2)."""
    if t < 2:
        raise InvalidParameterError(f"t must be >= 2, got {t}")
    one_plus_x = [1, 1]
    poly = _poly_add(
        _poly_mul(_monomial(2, t - 1), _poly_pow(one_plus_x, t - 1)),
        _poly_mul(_monomial(1, t), _poly_pow(one_plus_x, t - 2)),
    )
    return _coefficient(poly, r)


def cycle_gf_parameters(n: int) -> Tuple[int, int]:
    """(t, r) whose coefficient counts the i-sets of C_n."""
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}")
    k, rem = divmod(n, 3)
    if rem == 0:
        return k + 1, 2 * k
    if rem == 1:
        return k + 2, 2 * k
    return k + 2, 2 * k + 1


def path_gf_coefficient(t: int, r: int) -> int:
    """Coefficient of x^r in x^(t-2)(1+x)^t."""
    if t < 2:
        raise InvalidParameterError(f"t must be >= 2, got {t}")
    return _coefficient(_poly_mul(_monomial(1, t - 2), _poly_pow([1, 1], t)), r)


def path_gf_parameters(n: int) -> Tuple[int, int]:
    if n < 1:
        raise InvalidParameterError(f"path needs n >= 1, got {n}")
    i = -(-n // 3)
    return i + 1, n - i


@dataclass(frozen=True, order=True)
class LatticeLabel:
    """Positions (1-based) of the two small intervals of a P_{3k+1} i-set."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if not (1 <= self.i < self.j):
            raise InvalidParameterError(f"lattice label needs 1 <= i < j, got ({self.i},{self.j})")

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


def lattice_labels(k: int) -> List[LatticeLabel]:
    return [LatticeLabel(i, j) for i in range(1, k + 3) for j in range(i + 1, k + 3)]


def worn_lattice(k: int) -> Graph:
    if k < 1:
        raise InvalidParameterError(f"worn lattice needs k >= 1, got {k}")
    labels = lattice_labels(k)
    index = {(lab.i, lab.j): v for v, lab in enumerate(labels)}
    edges = []
    for (i, j), v in index.items():
        for other in ((i + 1, j), (i, j + 1)):
            u = index.get(other)
            if u is not None:
                edges.append((v, u))
    return from_edge_list(len(labels), edges, [str(lab) for lab in labels])


@dataclass(frozen=True, order=True)
class CycleISetLabel:
    """
    Unordered pair of the two doubly dominated vertices of a C_n i-set, n = 3k+1.

    Stored with j < ell as least residues; build through `CycleISetLabel.of`.
    """

    n: int
    j: int
    ell: int

    @classmethod
    def of(cls, n: int, a: int, b: int) -> "CycleISetLabel":
        if n < 4 or n % 3 != 1:
            raise InvalidParameterError(f"pair labels need n = 3k+1 >= 4, got {n}")
        a, b = a % n, b % n
        if a == b or ((b - a) % n) % 3 != 2:
            raise InvalidParameterError(f"<{a},{b}> is not a valid label mod {n}")
        return cls(n, min(a, b), max(a, b))

    @property
    def k(self) -> int:
        return (self.n - 1) // 3

    @property
    def s(self) -> int:
        """s with ell = j + 3s + 2 (mod n), for the stored orientation."""
        return ((self.ell - self.j) % self.n - 2) // 3

    def __str__(self) -> str:
        return f"{{{self.j},{self.ell}}}"


def is_valid_label(n: int, a: int, b: int) -> bool:
    try:
        CycleISetLabel.of(n, a, b)
    except InvalidParameterError:
        return False
    return True


class ISetType(str, Enum):
    TYPE1 = "Type1"
    TYPE2A = "Type2a"
    TYPE2B = "Type2b"


def iset_type(n: int, label: CycleISetLabel) -> ISetType:
    if label.n != n:
        raise InvalidParameterError(f"label {label} belongs to n={label.n}, not n={n}")
    d = (label.ell - label.j) % n
    if d in (2, n - 2):
        return ISetType.TYPE1
    if d in (5, n - 5):
        return ISetType.TYPE2A
    return ISetType.TYPE2B


def bracelet_labels(k: int) -> List[CycleISetLabel]:
    if k < 1:
        raise InvalidParameterError(f"bracelet needs k >= 1, got {k}")
    n = 3 * k + 1
    return sorted({CycleISetLabel.of(n, j, j + 3 * s + 2) for j in range(n) for s in range(k)})


def bracelet_neighbors(label: CycleISetLabel) -> List[CycleISetLabel]:
    """Neighbors in B_k; candidates that are not valid labels are dropped."""
    n, j, ell = label.n, label.j, label.ell
    d = (ell - j) % n
    if d in (2, n - 2):
        j0 = j if d == 2 else ell
        candidates = [(j0, j0 + 5), (j0 - 3, j0 + 2)]
    else:
        candidates = [(j, ell + 3), (j, ell - 3), (j + 3, ell), (j - 3, ell)]
    out = {CycleISetLabel.of(n, a, b) for a, b in candidates if is_valid_label(n, a, b)}
    out.discard(label)
    return sorted(out)


def bracelet(k: int) -> Graph:
    labels = bracelet_labels(k)
    index: Dict[CycleISetLabel, int] = {lab: v for v, lab in enumerate(labels)}
    edges = [(v, index[other]) for v, lab in enumerate(labels) for other in bracelet_neighbors(lab)]
    return from_edge_list(len(labels), edges, [str(lab) for lab in labels])


def predicted_path_igraph(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"path needs n >= 1, got {n}")
    k, rem = divmod(n, 3)
    if rem == 0:
        return empty_graph(1)
    if rem == 1:
        return worn_lattice(k) if k >= 1 else empty_graph(1, [str(LatticeLabel(1, 2))])
    return path(k + 2)


def predicted_cycle_igraph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}")
    k, rem = divmod(n, 3)
    if n == 3:
        return cycle(3)
    if rem == 0:
        return empty_graph(3)
    if rem == 1:
        return bracelet(k)
    return cycle(n)


def predicted_cycle_hamiltonicity(n: int) -> str:
    """Expected HamiltonReport status for the i-graph of C_n."""
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}")
    if n == 3 or n % 3 == 2 or n in (7, 13):
        return "hamiltonian"
    if n % 3 == 0 or n % 6 == 4:
        return "neither"
    return "traceable_only"


def _require_3k1(n: int) -> int:
    if n < 4 or n % 3 != 1:
        raise InvalidParameterError(f"pair labels need n = 3k+1 >= 4, got {n}")
    return (n - 1) // 3


def cycle_iset_label(n: int, s: VertexSet) -> CycleISetLabel:
    _require_3k1(n)
    require_iset(cycle(n), s)
    doubly = [v for v in range(n) if v not in s and (v - 1) % n in s and (v + 1) % n in s]
    if len(doubly) != 2:
        raise InvalidISetError(f"{list(s.members)} has {len(doubly)} doubly dominated vertices, expected 2")
    return CycleISetLabel.of(n, doubly[0], doubly[1])


def label_to_iset(n: int, label: CycleISetLabel) -> VertexSet:
    """Members j+1, j+4, ..., ell-1 and then ell+1, ell+4, ..., j-1 (mod n)."""
    k = _require_3k1(n)
    if label.n != n:
        raise InvalidParameterError(f"label {label} belongs to n={label.n}, not n={n}")
    j, ell, s = label.j, label.ell, label.s
    members = [(j + 1 + 3 * a) % n for a in range(s + 1)]
    members += [(ell + 1 + 3 * b) % n for b in range(k - s)]
    return VertexSet.of(members)


def path_iset_lattice_label(n: int, s: VertexSet) -> LatticeLabel:
    _require_path_3k1(n)
    positions = gap_profile(path(n), s, GapMode.LINEAR).small_positions()
    if len(positions) != 2:
        raise InvalidISetError(f"{list(s.members)} has {len(positions)} small intervals, expected 2")
    return LatticeLabel(positions[0], positions[1])


def lattice_label_to_iset(n: int, label: LatticeLabel) -> VertexSet:
    k = _require_path_3k1(n)
    t = k + 2
    if label.j > t:
        raise InvalidParameterError(f"lattice label {label} is out of range for n={n}")
    small = {label.i, label.j}
    gaps = {}
    for p in range(1, t + 1):
        end = p in (1, t)
        gaps[p] = (0 if end else 1) + (0 if p in small else 1)
    members = [gaps[1]]
    for p in range(2, t):
        members.append(members[-1] + gaps[p] + 1)
    return VertexSet(tuple(members))


def _require_path_3k1(n: int) -> int:
    if n < 1 or n % 3 != 1:
        raise InvalidParameterError(f"lattice labels need n = 3k+1 >= 1, got {n}")
    return (n - 1) // 3
