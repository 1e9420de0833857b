"""Row layouts of the published benchmark tables.

Table 1 lists -E in atomic units against 1/b for alpha in {0.75, 1.5} with
A = 2b, comparing the matched approximation (Case 1), the legacy unshifted
approximation, and a direct numerical integration.  Tables 2 and 3 list -E
in eV for the diatomic molecules HCl/CH and LiH/CO respectively, for
alpha in {0 or 1, 0.75, 1.5}, with b in picometers and A = 2*(b/pm).
"""

from __future__ import annotations

from dataclasses import dataclass

from .spectrum import QuantumState

_FULL = (0.025, 0.050, 0.075, 0.100)
_SHORT = (0.025, 0.050, 0.075)
_ONE = (0.025,)

#: Table 1 layout: (state label, inverse screening lengths)
TABLE1_LAYOUT: tuple[tuple[str, tuple[float, ...]], ...] = (
    ("2p", _FULL),
    ("3p", _FULL),
    ("3d", _SHORT),
    ("4p", _SHORT),
    ("4d", _SHORT),
    ("4f", _SHORT),
    ("5p", _ONE),
    ("5d", _ONE),
    ("5f", _ONE),
    ("5g", _ONE),
    ("6p", _ONE),
    ("6d", _ONE),
    ("6f", _ONE),
    ("6g", _ONE),
)

#: Tables 2 and 3 layout: 3d gains the 1/b = 0.100 row relative to Table 1
TABLE23_LAYOUT: tuple[tuple[str, tuple[float, ...]], ...] = (
    ("2p", _FULL),
    ("3p", _FULL),
    ("3d", _FULL),
    ("4p", _SHORT),
    ("4d", _SHORT),
    ("4f", _SHORT),
    ("5p", _ONE),
    ("5d", _ONE),
    ("5f", _ONE),
    ("5g", _ONE),
    ("6p", _ONE),
    ("6d", _ONE),
    ("6f", _ONE),
    ("6g", _ONE),
)

TABLE1_ALPHAS = (0.75, 1.5)

#: Tables 2/3 alpha columns; the first is the screened-Coulomb reduction
#: (alpha = 0 and alpha = 1 coincide) and is labelled "0,1" in output.
TABLE23_ALPHAS = (1.0, 0.75, 1.5)
TABLE23_ALPHA_LABELS = ("0,1", "0.75", "1.5")

TABLE_MOLECULES = {2: ("HCl", "CH"), 3: ("LiH", "CO")}

#: inverse screening lengths where the numerical-integration reference
#: column of Table 1 is populated
TABLE1_NUMERIC_INV_B = _SHORT


@dataclass(frozen=True)
class TableCell:
    """One (state, 1/b) position of a table layout."""

    state: QuantumState
    inv_b: float


def table_cells(which: int) -> list[TableCell]:
    """All (state, 1/b) positions of table `which` in printed row order."""
    if which == 1:
        layout = TABLE1_LAYOUT
    elif which in (2, 3):
        layout = TABLE23_LAYOUT
    else:
        raise ValueError(f"no such table: {which!r}")
    return [
        TableCell(state=QuantumState.from_label(label), inv_b=inv_b)
        for label, inv_bs in layout
        for inv_b in inv_bs
    ]
