"""Catalogued 2-bridge data for the 11-crossing alternating knots.

Each row records the knot name, the catalogued raw index fraction, the
all-even band list, and the shape of the Kakimizu complex.  Four rows
carry ``fraction_typo=True``: there the catalogued fraction contradicts
its own band list (the band list is what the drawn complex matches, and
evaluating it recovers the corrected fraction, which is what the shipped
CSV fixture uses).  Rows 11_166 and 11_192 carry the same fraction yet
different catalogued complexes; they are excluded from assertions and
reported instead.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class CatalogRow:
    name: str
    fraction: str          # raw index as catalogued (0 < p < q)
    cfe: tuple             # all-even band list
    shape: str             # shape literal of the complex
    fraction_typo: bool = False
    corrected_fraction: str = ""


ROWS = [
    CatalogRow("11_95", "33/73", (-2, -6, -4, -2), "path(2)"),
    CatalogRow("11_98", "18/47", (4, -4, -2, 2), "path(2)", True, "18/77"),
    CatalogRow("11_119", "64/109", (2, -4, -4, 2), "path(2)", True, "34/77"),
    CatalogRow("11_145", "22/83", (4, 4, -2, 2), "path(2)"),
    CatalogRow("11_154", "37/67", (-2, 4, -4, -2), "path(2)"),
    CatalogRow("11_186", "39/95", (-2, -4, -2, -2, -4, -2), "path(4)"),
    CatalogRow("11_191", "19/83", (-2, -2, -2, -4, -4, -2), "path(2)"),
    CatalogRow("11_210", "16/73", (4, -2, -4, -2), "path(3)", True, "12/55"),
    CatalogRow("11_226", "20/71", (4, 2, -4, 2), "path(3)"),
    CatalogRow("11_229", "55/71", (-4, 2, -4, -2), "path(3)"),
    CatalogRow("11_235", "49/71", (-4, -2, -2, -2, -4, -2), "path(5)"),
    CatalogRow("11_236", "29/99", (-2, -2, -4, -2, -4, -2), "path(3)"),
    CatalogRow("11_238", "53/65", (-6, -2, -4, -2), "path(3)"),
    CatalogRow("11_243", "49/69", (-4, -2, -6, -2), "path(3)"),
    CatalogRow("11_311", "61/79", (-4, 2, -2, -4), "path(4)"),
    CatalogRow("11_333", "14/65", (4, -2, -2, 4), "path(4)"),
    CatalogRow("11_335", "17/75", (-2, -2, -2, -4, -2, -4), "path(3)"),
    CatalogRow("11_336", "11/59", (-2, -2, -2, -2, -4, -4), "path(2)"),
    CatalogRow("11_337", "63/89", (-6, -2, 4, 2), "path(3)", True, "73/89"),
    CatalogRow("11_343", "27/31", (-8, -4), "path(2)"),
    CatalogRow("11_356", "55/79", (-4, -2, -2, -4, -2, -2), "path(4)"),
    CatalogRow("11_357", "27/91", (-2, -2, -4, -4, -2, -2), "path(2)"),
    CatalogRow("11_359", "43/53", (-6, -2, -2, -4), "path(4)"),
    CatalogRow("11_360", "47/57", (-6, -4, -2, -2), "path(2)"),
    CatalogRow("11_363", "29/35", (-6, -6), "path(2)"),
    CatalogRow("11_365", "35/51", (-4, -2, -2, -2, -2, -4), "path(6)"),
]

# the conflicting pair: one fraction, two different catalogued complexes
CONFLICT_FRACTION = "45/59"
CONFLICT_CFE = (-4, 4, -2, -2)
CONFLICT_NAMES = ("11_166", "11_192")
