"""Dense exact matrices over the integers or over Z_d."""
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import (NotInvertible, NotSquare, OutOfRange, ParseError, RingMismatch,
                     ShapeMismatch)
from .zring import unit_inverse


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable row-major matrix.

    ``modulus`` is None for matrices over Z, otherwise every entry is a
    canonical residue in ``[0, modulus)``.
    """

    rows: int
    cols: int
    modulus: Optional[int]
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatch("negative shape")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        if self.modulus is not None:
            if self.modulus < 2:
                raise OutOfRange("modulus must be at least 2")
            if any(not 0 <= e < self.modulus for e in self.entries):
                raise OutOfRange("entries must be reduced residues")

    # construction

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], modulus: Optional[int] = None,
                  cols: Optional[int] = None) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ShapeMismatch("ragged rows")
        flat = [int(e) for r in rows for e in r]
        if modulus is not None:
            flat = [e % modulus for e in flat]
        return cls(len(rows), cols, modulus, tuple(flat))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], modulus: Optional[int] = None,
                     rows: Optional[int] = None) -> "ExactMatrix":
        columns = [list(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        data = [[c[i] for c in columns] for i in range(rows)]
        return cls.from_rows(data, modulus, cols=len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int, modulus: Optional[int] = None) -> "ExactMatrix":
        return cls(rows, cols, modulus, (0,) * (rows * cols))

    @classmethod
    def identity(cls, k: int, modulus: Optional[int] = None) -> "ExactMatrix":
        return cls.from_rows([[int(i == j) for j in range(k)] for i in range(k)], modulus, cols=k)

    # access

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_lists(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def ring(self) -> str:
        return "Z" if self.modulus is None else f"Z{self.modulus}"

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, self.modulus,
                           tuple(self.entries[i * self.cols + j]
                                 for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_alternating(self) -> bool:
        if not self.is_square:
            return False
        k, m = self.rows, self.modulus
        for i in range(k):
            if self[i, i] != 0:
                return False
            for j in range(i + 1, k):
                s = self[i, j] + self[j, i]
                if (s % m if m else s) != 0:
                    return False
        return True

    # ring changes

    def reduce(self, d: int) -> "ExactMatrix":
        return ExactMatrix.from_rows(self.to_lists(), d, cols=self.cols)

    def lift(self) -> "ExactMatrix":
        """Same entries viewed as integers."""
        return ExactMatrix(self.rows, self.cols, None, self.entries)

    def lift_alternating(self) -> "ExactMatrix":
        """Integer alternating lift of an alternating matrix over Z_d.

        The upper triangle keeps its canonical residues and the lower triangle
        is set to their negatives, so the lift is alternating over Z as well.
        """
        a = self.to_lists()
        for i in range(self.rows):
            for j in range(i):
                a[i][j] = -a[j][i]
        return ExactMatrix.from_rows(a, None, cols=self.cols)

    # arithmetic

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_mul(self, other)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        _check_ring(self, other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")
        flat = [a + b for a, b in zip(self.entries, other.entries)]
        if self.modulus:
            flat = [e % self.modulus for e in flat]
        return ExactMatrix(self.rows, self.cols, self.modulus, tuple(flat))

    def __neg__(self) -> "ExactMatrix":
        flat = [-e for e in self.entries]
        if self.modulus:
            flat = [e % self.modulus for e in flat]
        return ExactMatrix(self.rows, self.cols, self.modulus, tuple(flat))

    def apply(self, vector: Sequence[int]) -> Tuple[int, ...]:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise ShapeMismatch(f"vector of length {len(vector)} for {self.cols} columns")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            s = sum(a * b for a, b in zip(r, vector))
            out.append(s % self.modulus if self.modulus else s)
        return tuple(out)

    # serialization

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols} {self.ring}"]
        lines += [" ".join(str(e) for e in self.row(i)) for i in range(self.rows)]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "ring": self.ring,
                "entries": list(self.entries)}


def _check_ring(a: ExactMatrix, b: ExactMatrix) -> None:
    if a.modulus != b.modulus:
        raise RingMismatch(f"{a.ring} vs {b.ring}")


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    _check_ring(a, b)
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
    bcols = [b.column(j) for j in range(b.cols)]
    m = a.modulus
    out = []
    for i in range(a.rows):
        r = a.row(i)
        for c in bcols:
            s = sum(x * y for x, y in zip(r, c))
            out.append(s % m if m else s)
    return ExactMatrix(a.rows, b.cols, m, tuple(out))


def bareiss_det(rows: List[List[int]]) -> int:
    """Fraction-free determinant of a square integer matrix (list of lists)."""
    k = len(rows)
    if k == 0:
        return 1
    a = [list(r) for r in rows]
    sign, prev = 1, 1
    for c in range(k - 1):
        if a[c][c] == 0:
            for r in range(c + 1, k):
                if a[r][c] != 0:
                    a[c], a[r] = a[r], a[c]
                    sign = -sign
                    break
            else:
                return 0
        p = a[c][c]
        for i in range(c + 1, k):
            for j in range(c + 1, k):
                a[i][j] = (a[i][j] * p - a[i][c] * a[c][j]) // prev
        prev = p
    return sign * a[k - 1][k - 1]


def det(a: ExactMatrix) -> int:
    """Determinant; over Z_d it is computed on the integer lift and reduced."""
    if not a.is_square:
        raise NotSquare(f"{a.shape} matrix has no determinant")
    value = bareiss_det(a.to_lists())
    return value % a.modulus if a.modulus else value


def minors_gcd(a: ExactMatrix, j: int) -> int:
    """Gcd of all ``j``-by-``j`` minors of the integer matrix underlying ``a``."""
    if not 0 <= j <= min(a.rows, a.cols):
        raise OutOfRange(f"minor size {j} outside 0..{min(a.rows, a.cols)}")
    if j == 0:
        return 1
    rows = a.to_lists()
    g = 0
    for rs in combinations(range(a.rows), j):
        sub = [rows[r] for r in rs]
        for cs in combinations(range(a.cols), j):
            g = gcd(g, bareiss_det([[r[c] for c in cs] for r in sub]))
            if g == 1:
                return 1
    return g


def is_invertible(a: ExactMatrix) -> bool:
    if not a.is_square:
        raise NotSquare(f"{a.shape} matrix is not square")
    value = det(a)
    if a.modulus is None:
        return abs(value) == 1
    return gcd(value, a.modulus) == 1


def adjugate(a: ExactMatrix) -> ExactMatrix:
    """Integer adjugate of the lift of ``a``, reduced back into ``a``'s ring."""
    if not a.is_square:
        raise NotSquare(f"{a.shape} matrix is not square")
    k = a.rows
    rows = a.to_lists()
    if k == 0:
        return a
    if k == 1:
        return ExactMatrix.from_rows([[1]], a.modulus)
    value = bareiss_det(rows)
    if value != 0:
        inv = _rational_inverse(rows)
        adj = [[int(inv[i][j] * value) for j in range(k)] for i in range(k)]
    else:
        adj = [[0] * k for _ in range(k)]
        for i in range(k):
            for j in range(k):
                minor = [r[:i] + r[i + 1:] for t, r in enumerate(rows) if t != j]
                adj[i][j] = (-1) ** (i + j) * bareiss_det(minor)
    return ExactMatrix.from_rows(adj, a.modulus, cols=k)


def _rational_inverse(rows: List[List[int]]) -> List[List[Fraction]]:
    k = len(rows)
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(k)]
           for i, r in enumerate(rows)]
    for c in range(k):
        p = next(r for r in range(c, k) if aug[r][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        pivot = aug[c][c]
        aug[c] = [x / pivot for x in aug[c]]
        for r in range(k):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [r[k:] for r in aug]


def inverse(a: ExactMatrix) -> ExactMatrix:
    """Two-sided inverse over Z_d (adjugate times the inverse determinant),
    or over Z when the determinant is a sign."""
    if not is_invertible(a):
        raise NotInvertible("matrix is not invertible over its ring")
    adj = adjugate(a)
    value = det(a)
    if a.modulus is None:
        return ExactMatrix(a.rows, a.cols, None, tuple(e * value for e in adj.entries))
    s = unit_inverse(value, a.modulus)
    return ExactMatrix.from_rows([[e * s for e in r] for r in adj.to_lists()], a.modulus,
                                 cols=a.cols)


# text and JSON formats

_RING = re.compile(r"^Z(?:<?_?(\d+)>?)?$")


def parse_ring(token: str) -> Optional[int]:
    m = _RING.match(token)
    if not m:
        raise ValueError(f"unknown ring {token!r}")
    if m.group(1) is None:
        if token != "Z":
            raise ValueError(f"unknown ring {token!r}")
        return None
    d = int(m.group(1))
    if d < 2:
        raise ValueError("modulus must be at least 2")
    return d


def parse_matrix(text: str) -> ExactMatrix:
    """Parse the text format (header ``rows cols ring``) or the JSON form."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return matrix_from_json(_load_json(stripped))
    lines = text.splitlines()
    numbered = [(i + 1, ln) for i, ln in enumerate(lines) if ln.strip() and not ln.lstrip().startswith("#")]
    if not numbered:
        raise ParseError("empty matrix input", (1, 1))
    lineno, header = numbered[0]
    parts = header.split()
    if len(parts) != 3:
        raise ParseError("header must be 'rows cols ring'", (lineno, 1))
    rows = _parse_int(parts[0], lineno, header)
    cols = _parse_int(parts[1], lineno, header)
    if rows < 0 or cols < 0:
        raise ParseError("negative shape", (lineno, 1))
    try:
        modulus = parse_ring(parts[2])
    except ValueError as exc:
        raise ParseError(str(exc), (lineno, header.find(parts[2]) + 1)) from None
    body = numbered[1:]
    if len(body) != rows:
        at = body[rows][0] if len(body) > rows else (numbered[-1][0] + 1)
        raise ParseError(f"expected {rows} rows, found {len(body)}", (at, 1))
    data = []
    for lineno, ln in body:
        tokens = ln.split()
        if len(tokens) != cols:
            raise ParseError(f"expected {cols} entries, found {len(tokens)}", (lineno, 1))
        data.append([_parse_int(t, lineno, ln) for t in tokens])
    return ExactMatrix.from_rows(data, modulus, cols=cols)


def _parse_int(token: str, lineno: int, line: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"not an integer: {token!r}", (lineno, line.find(token) + 1)) from None


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, (exc.lineno, exc.colno)) from None


def matrix_from_json(obj: dict) -> ExactMatrix:
    try:
        rows, cols = int(obj["rows"]), int(obj["cols"])
        modulus = parse_ring(str(obj["ring"]))
        entries = [int(e) for e in obj["entries"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad matrix JSON: {exc}", (1, 1)) from None
    if len(entries) != rows * cols:
        raise ParseError("entries length does not match shape", (1, 1))
    if modulus is not None:
        entries = [e % modulus for e in entries]
    return ExactMatrix(rows, cols, modulus, tuple(entries))


def column_vector(values: Iterable[int], modulus: Optional[int] = None) -> ExactMatrix:
    values = list(values)
    return ExactMatrix.from_rows([[v] for v in values], modulus, cols=1)
