"""Explicit non-commuting sets used as fixed reference data."""
from qupauli import PauliElement

# columns are the vectors (x_0, x_1, x_2, z_0, z_1, z_2) of a 13-element set on three qutrits
QUTRIT_13 = [
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 2],
    [0, 1, 1, 1, 1, 2, 2, 1, 1, 2, 1, 2, 1],
    [0, 0, 0, 1, 0, 1, 1, 0, 2, 1, 0, 1, 0],
    [0, 0, 1, 0, 0, 1, 2, 0, 1, 2, 1, 0, 1],
    [1, 0, 1, 2, 1, 2, 2, 2, 2, 1, 1, 1, 1],
]

# (a, b) for X^a Z^b: a 12-element non-commuting set on one d=6 qudit
SEXTIC_12 = [(0, 1), (1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (2, 1), (2, 3), (2, 5),
             (3, 1), (3, 2)]


def qutrit_13():
    return [PauliElement.from_vector(3, [row[c] for row in QUTRIT_13]) for c in range(13)]


def sextic_12():
    return [PauliElement(6, 1, 0, v) for v in SEXTIC_12]
