"""Quiver representation spaces and their discriminant divisors.

For a quiver with dimension vector d, the product of matrix spaces
Hom(C^{d_tail}, C^{d_head}) over the arrows carries the action of the
product of GL(d_node); a node generator E acts on an arrow block V as
E*V when the node is the head and as -V*E when it is the tail, so the
diagonal one-parameter subgroup of all identities acts trivially.  When
the group modulo that kernel has the same dimension as the space
(sum d^2 - sum d_tail*d_head = 1), dropping to traceless generators at
one designated node yields a square coefficient matrix whose determinant
cuts out the complement of the open orbit, and the generic machinery of
Saito's criterion applies to it.

The number of irreducible components of such a discriminant equals the
first Betti number of the symmetry algebra, which for a sincere dimension
vector must come out as (number of nodes) - 1; that count is exposed as
its own check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import DEFAULT_SEED, DEFAULT_TRIALS
from .liecoh import betti_number, structure_constants
from .logder import LFDReport, LinearVectorField, VectorFieldBasis, verify_lfd
from .mpoly import MPoly, PolyMatrix, poly_det


@dataclass(frozen=True)
class Quiver:
    """Finite connected directed multigraph; loops and parallel arrows allowed."""

    nodes: tuple[str, ...]
    arrows: tuple[tuple[str, str], ...]

    def __init__(self, nodes, arrows):
        nodes = tuple(str(n) for n in nodes)
        arrows = tuple((str(t), str(h)) for t, h in arrows)
        if not nodes:
            raise ValueError("quiver needs at least one node")
        if len(set(nodes)) != len(nodes):
            raise ValueError("node names must be distinct")
        known = set(nodes)
        for t, h in arrows:
            if t not in known or h not in known:
                raise ValueError(f"arrow ({t}, {h}) references unknown node")
        # connectivity of the underlying undirected graph
        seen = {nodes[0]}
        frontier = [nodes[0]]
        while frontier:
            cur = frontier.pop()
            for t, h in arrows:
                for a, b in ((t, h), (h, t)):
                    if a == cur and b not in seen:
                        seen.add(b)
                        frontier.append(b)
        if seen != known:
            raise ValueError("quiver is not connected")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "arrows", arrows)

    def to_json(self) -> dict:
        return {
            "nodes": list(self.nodes),
            "arrows": [{"tail": t, "head": h} for t, h in self.arrows],
        }


@dataclass(frozen=True)
class DimVector:
    dims: dict[str, int]

    def __init__(self, dims: dict):
        dims = {str(k): int(v) for k, v in dims.items()}
        if any(v < 1 for v in dims.values()):
            raise ValueError("dimension vector entries must be positive")
        object.__setattr__(self, "dims", dims)

    def check_against(self, q: Quiver) -> None:
        if set(self.dims) != set(q.nodes):
            raise ValueError("dimension vector does not match the node set")


def star_quiver(n: int) -> tuple[Quiver, DimVector]:
    """One sink of dimension n fed by n+1 sources of dimension 1."""
    nodes = ["sink"] + [f"s{i + 1}" for i in range(n + 1)]
    arrows = [(f"s{i + 1}", "sink") for i in range(n + 1)]
    dims = {"sink": n, **{f"s{i + 1}": 1 for i in range(n + 1)}}
    return Quiver(nodes, arrows), DimVector(dims)


class RepSpace:
    """Coordinates of the representation space: one variable per matrix slot.

    Variables are laid out arrow by arrow (in quiver order) and row-major
    within each block; arrow k (1-based) slot (r, c) is named ``x<k>_<r>_<c>``.
    """

    def __init__(self, quiver: Quiver, dims: DimVector):
        dims.check_against(quiver)
        self.quiver = quiver
        self.dims = dims
        names: list[str] = []
        self._offset: dict[int, int] = {}
        self._shape: dict[int, tuple[int, int]] = {}
        for k, (t, h) in enumerate(quiver.arrows):
            rows, cols = dims.dims[h], dims.dims[t]
            self._offset[k] = len(names)
            self._shape[k] = (rows, cols)
            for r in range(1, rows + 1):
                for c in range(1, cols + 1):
                    names.append(f"x{k + 1}_{r}_{c}")
        self.ring = tuple(names)

    def var_index(self, arrow: int, r: int, c: int) -> int:
        """Index of the (r, c) slot (1-based) of the given arrow block."""
        rows, cols = self._shape[arrow]
        if not (1 <= r <= rows and 1 <= c <= cols):
            raise ValueError("slot out of range")
        return self._offset[arrow] + (r - 1) * cols + (c - 1)

    def arrow_block(self, arrow: int) -> list[list[MPoly]]:
        """The generic matrix of an arrow as polynomial entries."""
        rows, cols = self._shape[arrow]
        return [
            [MPoly.variable(self.ring, self.var_index(arrow, r, c)) for c in range(1, cols + 1)]
            for r in range(1, rows + 1)
        ]


def tits_defect(q: Quiver, d: DimVector) -> int:
    """sum of d^2 over nodes minus sum of d_tail*d_head over arrows.

    Value 1 is necessary for the group modulo its one-dimensional kernel
    to have the same dimension as the representation space.
    """
    d.check_against(q)
    squares = sum(v * v for v in d.dims.values())
    edges = sum(d.dims[t] * d.dims[h] for t, h in q.arrows)
    return squares - edges


def _node_generator_field(space: RepSpace, node: str, r: int, s: int) -> LinearVectorField:
    """Infinitesimal action of E_rs at the node: E V on heads, -V E on tails."""
    n = len(space.ring)
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for k, (t, h) in enumerate(space.quiver.arrows):
        rows, cols = space._shape[k]
        if h == node:
            for c in range(1, cols + 1):
                # delta(x_{r,c}) += x_{s,c}
                matrix[space.var_index(k, s, c)][space.var_index(k, r, c)] += 1
        if t == node:
            for u in range(1, rows + 1):
                # delta(x_{u,s}) -= x_{u,r}
                matrix[space.var_index(k, u, r)][space.var_index(k, u, s)] -= 1
    return LinearVectorField(space.ring, matrix)


def action_vector_fields(q: Quiver, d: DimVector) -> list[LinearVectorField]:
    """One field per elementary generator of every node's full matrix algebra.

    Order: nodes in quiver order, slots (r, s) row-major.  The sum of the
    node-identity generators is the zero field (the one-dimensional kernel
    of the action).
    """
    space = RepSpace(q, d)
    fields = []
    for node in q.nodes:
        m = d.dims[node]
        for r in range(1, m + 1):
            for s in range(1, m + 1):
                fields.append(_node_generator_field(space, node, r, s))
    return fields


def selected_basis(q: Quiver, d: DimVector, root: str | None = None) -> VectorFieldBasis:
    """Basis of the action algebra modulo its kernel: traceless at the root.

    The root node's generators are replaced by the traceless set (off-
    diagonal E_rs plus consecutive diagonal differences), every other node
    keeps its full matrix algebra.  Defaults to the first node of maximal
    dimension.
    """
    if tits_defect(q, d) != 1:
        raise ValueError("group/space dimension defect is not 1: no square basis exists")
    if root is None:
        top = max(d.dims[n] for n in q.nodes)
        root = next(n for n in q.nodes if d.dims[n] == top)
    elif root not in q.nodes:
        raise ValueError(f"unknown root node {root!r}")
    space = RepSpace(q, d)
    fields: list[LinearVectorField] = []
    for node in q.nodes:
        m = d.dims[node]
        if node == root:
            for r in range(1, m + 1):
                for s in range(1, m + 1):
                    if r != s:
                        fields.append(_node_generator_field(space, node, r, s))
            for i in range(1, m):
                fields.append(
                    _node_generator_field(space, node, i, i)
                    - _node_generator_field(space, node, i + 1, i + 1)
                )
        else:
            for r in range(1, m + 1):
                for s in range(1, m + 1):
                    fields.append(_node_generator_field(space, node, r, s))
    return VectorFieldBasis(space.ring, fields)


def quiver_discriminant(q: Quiver, d: DimVector, root: str | None = None) -> MPoly:
    """Determinant of the selected basis' coefficient matrix."""
    basis = selected_basis(q, d, root)
    rows = [f.coefficients() for f in basis.fields]
    return poly_det(PolyMatrix.from_rows(rows))


def quiver_lfd_report(
    q: Quiver,
    d: DimVector,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    root: str | None = None,
) -> LFDReport:
    """Saito-criterion verification of the quiver discriminant."""
    return verify_lfd(selected_basis(q, d, root), trials, seed)


@dataclass(frozen=True)
class KacReport:
    h1_rank: int
    expected: int
    match: bool

    def to_json(self) -> dict:
        return {"h1_rank": self.h1_rank, "expected": self.expected, "match": self.match}


def kac_component_check(q: Quiver, d: DimVector, root: str | None = None) -> KacReport:
    """Component count of the discriminant against (node count - 1).

    The first Betti number of the symmetry algebra counts irreducible
    components of the complement's divisor; for a sincere dimension vector
    it must equal the number of nodes minus one.
    """
    d.check_against(q)
    if any(v < 1 for v in d.dims.values()):
        raise ValueError("dimension vector must be sincere (every node dimension positive)")
    basis = selected_basis(q, d, root)
    presentation = structure_constants(basis)
    h1 = betti_number(presentation, 1)
    expected = len(q.nodes) - 1
    return KacReport(h1_rank=h1, expected=expected, match=h1 == expected)


def quiver_from_json(data: dict) -> tuple[Quiver, DimVector, str | None]:
    q = Quiver(data["nodes"], [(a["tail"], a["head"]) for a in data["arrows"]])
    d = DimVector(data["dims"])
    return q, d, data.get("root")
