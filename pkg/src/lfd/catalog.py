"""Built-in catalogue of worked examples with their expected outcomes.

Every entry carries a machine-readable payload (the same JSON the CLI
accepts from files) plus the expected verdicts: divisor equation up to a
scalar, reductivity of the symmetry algebra, declared topological type of
the symmetry group, Betti numbers, component counts, and witness data for
the two nontrivial local quasihomogeneity certificates.

Entry families:
  * ``table88-row*``: the classification of linear free divisors in
    ambient dimension up to four (normal crossings, the cone-and-tangent
    family, the cone-times-line divisor, an irreducible quartic, and one
    solvable exotic).
  * ``star-*``, ``a2-1-1``, ``example44``: quiver discriminants.
  * ``table85/86/87-row*``, ``example47``: minor-collection families.
  * ``sym-2``, ``sym-3``: triangular action on symmetric matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .eulerhom import WitnessTerm
from .logder import LinearVectorField, VectorFieldBasis
from .minorfam import AuxQuiver
from .mpoly import MPoly, parse_poly
from .quiverrep import DimVector, Quiver, star_quiver


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    kind: str  # "basis" | "quiver" | "minor-family" | "sym-n"
    payload: dict
    expected: dict
    note: str = ""

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "payload": self.payload,
            "expected": self.expected,
            "note": self.note,
        }


def _basis_payload(variables: list[str], rows: list[list[str]]) -> dict:
    ring = tuple(variables)
    fields = [
        LinearVectorField.from_coefficients(ring, [parse_poly(t, ring) for t in row])
        for row in rows
    ]
    return VectorFieldBasis(ring, fields).to_json()


def load_basis(entry: CatalogEntry) -> VectorFieldBasis:
    if entry.kind != "basis":
        raise ValueError(f"entry {entry.id} is not a basis entry")
    return VectorFieldBasis.from_json(entry.payload)


def load_quiver(entry: CatalogEntry) -> tuple[Quiver, DimVector, str | None]:
    if entry.kind != "quiver":
        raise ValueError(f"entry {entry.id} is not a quiver entry")
    q = Quiver(entry.payload["nodes"], [(a["tail"], a["head"]) for a in entry.payload["arrows"]])
    return q, DimVector(entry.payload["dims"]), entry.payload.get("root")


def load_minor_family(entry: CatalogEntry) -> AuxQuiver:
    if entry.kind != "minor-family":
        raise ValueError(f"entry {entry.id} is not a minor-family entry")
    return AuxQuiver.from_json(entry.payload)


_DIAGONAL_ROWS = {
    1: [["x"]],
    2: [["x", "0"], ["0", "y"]],
    3: [["x", "0", "0"], ["0", "y", "0"], ["0", "0", "z"]],
    4: [
        ["x", "0", "0", "0"],
        ["0", "y", "0", "0"],
        ["0", "0", "z", "0"],
        ["0", "0", "0", "w"],
    ],
}

_VARS = {1: ["x"], 2: ["x", "y"], 3: ["x", "y", "z"], 4: ["x", "y", "z", "w"]}

# id -> (n, field rows, divisor equation, reductive?, group type, betti)
_TABLE88 = {
    "table88-row1": (1, _DIAGONAL_ROWS[1], "x", True, "T:1", [1, 1]),
    "table88-row2": (2, _DIAGONAL_ROWS[2], "x*y", True, "T:2", [1, 2, 1]),
    "table88-row3": (3, _DIAGONAL_ROWS[3], "x*y*z", True, "T:3", [1, 3, 3, 1]),
    "table88-row4": (
        3,
        [["x", "y", "z"], ["4*x", "y", "-2*z"], ["-2*y", "z", "0"]],
        "y^2*z + x*z^2",
        False,
        "B:2",
        [1, 2, 1, 0],
    ),
    "table88-row5": (4, _DIAGONAL_ROWS[4], "x*y*z*w", True, "T:4", [1, 4, 6, 4, 1]),
    "table88-row6": (
        4,
        [
            ["x", "y", "z", "0"],
            ["4*x", "y", "-2*z", "0"],
            ["-2*y", "z", "0", "0"],
            ["0", "0", "0", "w"],
        ],
        "y^2*z*w + x*z^2*w",
        False,
        "T:1,B:2",
        [1, 3, 3, 1, 0],
    ),
    "table88-row7": (
        4,
        [
            ["x", "0", "0", "-w"],
            ["0", "y", "0", "w"],
            ["0", "0", "z", "w"],
            ["z", "-w", "0", "0"],
        ],
        "y*z^2*w + x*z*w^2",
        False,
        "T:3",
        [1, 3, 3, 1, 0],
    ),
    "table88-row8": (
        4,
        [
            ["x", "y", "z", "w"],
            ["0", "y", "2*z", "3*w"],
            ["0", "x", "y", "z"],
            ["0", "0", "x", "y"],
        ],
        "x*y^3 - 3*x^2*y*z + 3*x^3*w",
        False,
        "T:2",
        [1, 2, 1, 0, 0],
    ),
    "table88-row9": (
        4,
        [
            ["3*x", "2*y", "z", "0"],
            ["0", "3*x", "2*y", "z"],
            ["y", "2*z", "3*w", "0"],
            ["0", "y", "2*z", "3*w"],
        ],
        "y^2*z^2 - 4*x*z^3 - 4*y^3*w + 18*x*y*z*w - 27*x^2*w^2",
        True,
        "GL:2",
        [1, 1, 0, 1, 1],
    ),
}

_TABLE88_NOTES = {
    "table88-row1": "coordinate hyperplane on the line",
    "table88-row2": "normal crossing of two lines",
    "table88-row3": "normal crossing of three planes",
    "table88-row4": "quadric cone plus a tangent plane (triangular symmetry)",
    "table88-row5": "normal crossing of four hyperplanes",
    "table88-row6": "cone-and-tangent-plane family times a line",
    "table88-row7": "cone over a quadric surface times two hyperplanes",
    "table88-row8": "irreducible-annihilator solvable case",
    "table88-row9": "discriminant of binary cubic forms (GL2 symmetry)",
}

# Column quivers for the five-column minor tables (m = 2 and m = 3 share them).
_FIVE_COLUMN_ARROWS = [
    [(3, 4), (3, 5)],
    [(2, 3), (4, 5)],
    [(3, 5), (4, 5)],
    [(1, 2), (2, 1)],
]

_TABLE85 = [
    (True, ["M12", "M13", "M23", "M34", "M35"]),
    (True, ["M12", "M14", "M23", "M24", "M45"]),
    (False, ["M12", "M13", "M14", "M23", "M24", "M34"]),
    (False, ["M12", "M34", "M35", "M45"]),
]

_TABLE86 = [
    (False, ["M123", "M134", "M135", "M234", "M235", "M345"]),
    (True, ["M123", "M124", "M145", "M234", "M245"]),
    (True, ["M123", "M124", "M134", "M234", "M345"]),
    (False, ["M123", "M124", "M125", "M345"]),
]

# Sixteen column quivers on six columns with four supplementary arrows.
_TABLE87 = [
    ([(1, 2), (1, 3), (1, 4), (1, 5)], False, 10),
    ([(2, 5), (3, 5), (1, 5), (4, 5)], False, 10),
    ([(1, 2), (1, 3), (4, 5), (4, 6)], True, 6),
    ([(1, 3), (2, 3), (4, 6), (5, 6)], True, 6),
    ([(1, 3), (2, 3), (6, 4), (6, 5)], False, 7),
    ([(1, 2), (3, 6), (4, 6), (5, 6)], False, 7),
    ([(1, 2), (3, 4), (3, 5), (3, 6)], False, 7),
    ([(1, 2), (3, 2), (3, 4), (5, 4)], True, 6),
    ([(1, 2), (1, 3), (4, 3), (4, 5)], True, 6),
    ([(1, 2), (3, 5), (3, 6), (4, 6)], True, 6),
    ([(1, 2), (3, 2), (3, 4), (3, 5)], False, 7),
    ([(1, 4), (1, 5), (2, 5), (3, 5)], False, 7),
    ([(1, 3), (1, 4), (2, 3), (2, 4)], True, 6),
    ([(1, 3), (1, 2), (2, 3), (4, 5)], True, 6),
    ([(1, 3), (1, 2), (2, 3), (4, 3)], False, 7),
    ([(1, 2), (1, 3), (1, 4), (2, 3)], False, 7),
]


def _build_catalog() -> dict[str, CatalogEntry]:
    entries: list[CatalogEntry] = []
    for entry_id, (n, rows, delta, reductive, group, betti) in _TABLE88.items():
        entries.append(
            CatalogEntry(
                id=entry_id,
                kind="basis",
                payload=_basis_payload(_VARS[n], rows),
                expected={
                    "is_lfd": True,
                    "delta": delta,
                    "reductive": reductive,
                    "group": group,
                    "betti": betti,
                    "glct_holds": True,
                    "strong_euler": True,
                },
                note=_TABLE88_NOTES[entry_id],
            )
        )

    for n, entry_id in ((2, "star-2-3"), (3, "star-3-4")):
        q, d = star_quiver(n)
        entries.append(
            CatalogEntry(
                id=entry_id,
                kind="quiver",
                payload={**q.to_json(), "dims": d.dims},
                expected={"is_lfd": True, "defect": 1, "kac_h1": len(q.nodes) - 1},
                note=f"star quiver: {n + 1} lines into a {n}-dimensional sink",
            )
        )
    a2 = Quiver(["1", "2"], [("1", "2")])
    entries.append(
        CatalogEntry(
            id="a2-1-1",
            kind="quiver",
            payload={**a2.to_json(), "dims": {"1": 1, "2": 1}},
            expected={"is_lfd": True, "defect": 1, "kac_h1": 1},
            note="two-node path with scalar spaces",
        )
    )
    m44 = Quiver(
        ["m", "a", "b", "c", "d"],
        [("m", "a"), ("b", "m"), ("c", "m"), ("d", "m")],
    )
    entries.append(
        CatalogEntry(
            id="example44",
            kind="quiver",
            payload={**m44.to_json(), "dims": {"m": 3, "a": 1, "b": 1, "c": 1, "d": 1}},
            expected={"is_lfd": False, "defect": 1, "reduced": "NotSquarefree"},
            note="reversed-arrow star: the discriminant acquires a squared factor",
        )
    )

    for row, (arrows, (verdict, minors)) in enumerate(zip(_FIVE_COLUMN_ARROWS, _TABLE85)):
        entries.append(
            CatalogEntry(
                id=f"table85-row{row + 1}",
                kind="minor-family",
                payload=AuxQuiver(2, 5, arrows).to_json(),
                expected={"verdict": verdict, "admissible": minors},
                note="2x5 minor collections",
            )
        )
    for row, (arrows, (verdict, minors)) in enumerate(zip(_FIVE_COLUMN_ARROWS, _TABLE86)):
        entries.append(
            CatalogEntry(
                id=f"table86-row{row + 1}",
                kind="minor-family",
                payload=AuxQuiver(3, 5, arrows).to_json(),
                expected={"verdict": verdict, "admissible": minors},
                note="3x5 minor collections",
            )
        )
    for row, (arrows, verdict, count) in enumerate(_TABLE87):
        entries.append(
            CatalogEntry(
                id=f"table87-row{row + 1}",
                kind="minor-family",
                payload=AuxQuiver(3, 6, arrows).to_json(),
                expected={"verdict": verdict, "admissible_count": count},
                note="3x6 minor collections",
            )
        )
    entries.append(
        CatalogEntry(
            id="example47",
            kind="minor-family",
            payload=AuxQuiver(3, 6, [(1, 2), (3, 2), (3, 4), (5, 4)]).to_json(),
            expected={
                "verdict": True,
                "admissible": ["M123", "M135", "M136", "M156", "M345", "M356"],
            },
            note="3x6 collection with six admissible minors",
        )
    )

    for n in (2, 3):
        entries.append(
            CatalogEntry(
                id=f"sym-{n}",
                kind="sym-n",
                payload={"n": n},
                expected={"passed": True, "group": f"B:{n}", "glct_holds": True},
                note=f"triangular action on symmetric {n}x{n} matrices",
            )
        )

    return {e.id: e for e in entries}


CATALOG: dict[str, CatalogEntry] = _build_catalog()


def get_entry(entry_id: str) -> CatalogEntry:
    if entry_id not in CATALOG:
        raise KeyError(f"no catalogue entry {entry_id!r}")
    return CATALOG[entry_id]


def entries(kind: str | None = None, match: str | None = None) -> list[CatalogEntry]:
    out = []
    for entry in CATALOG.values():
        if kind and entry.kind != kind:
            continue
        if match and match not in entry.id:
            continue
        out.append(entry)
    return sorted(out, key=lambda e: e.id)


# -- local quasihomogeneity witnesses ---------------------------------------


def witness_terms(entry_id: str, param: Fraction | int = 1):
    """Witness data (terms, point, eigenvalues) for the two exotic rows.

    ``param`` is the nonzero coordinate of the base point; the coefficient
    of the auxiliary field is (coordinate - 2*param)/param, so any nonzero
    rational parameter produces a valid witness.
    """
    param = Fraction(param)
    if param == 0:
        raise ValueError("witness parameter must be nonzero")
    ring = ("x", "y", "z", "w")
    chi = LinearVectorField.euler(ring)
    one = MPoly.constant(ring, 1)
    den = MPoly.constant(ring, param)
    if entry_id == "table88-row7":
        sigma = LinearVectorField.from_coefficients(
            ring, [parse_poly(t, ring) for t in ("2*x", "y", "0", "-w")]
        )
        terms = [
            WitnessTerm(field=chi, num=2 * one, den=one),
            WitnessTerm(
                field=sigma,
                num=parse_poly("x", ring) - MPoly.constant(ring, 2 * param),
                den=den,
            ),
        ]
        point = [param, 0, 0, 0]
        eigenvalues = [2, 1, 2, 3]
    elif entry_id == "table88-row8":
        sigma = LinearVectorField.from_coefficients(
            ring, [parse_poly(t, ring) for t in ("-3*x", "y", "5*z", "9*w")]
        )
        terms = [
            WitnessTerm(field=chi, num=9 * one, den=one),
            WitnessTerm(
                field=sigma,
                num=parse_poly("w", ring) - MPoly.constant(ring, 2 * param),
                den=den,
            ),
        ]
        point = [0, 0, 0, param]
        eigenvalues = [12, 8, 4, 9]
    else:
        raise KeyError(f"no witness data for entry {entry_id!r}")
    return terms, point, eigenvalues
