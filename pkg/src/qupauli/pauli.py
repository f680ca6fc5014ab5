"""Phase-tracked qudit Pauli operators.

An element is stored as ``(phase, vec)``: the operator ``w**phase * P(vec)``
where ``vec`` holds the n X-exponents followed by the n Z-exponents, all
residues modulo ``d``.
"""
import json
import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .errors import DimensionMismatch, ParseError
from .zmatrix import ExactMatrix


@dataclass(frozen=True, order=True)
class PauliElement:
    d: int
    n: int
    phase: int
    vec: Tuple[int, ...]

    def __post_init__(self):
        if self.d < 2 or self.n < 1:
            raise DimensionMismatch(f"bad dimensions d={self.d}, n={self.n}")
        if len(self.vec) != 2 * self.n:
            raise DimensionMismatch(f"vector of length {len(self.vec)} for n={self.n}")
        if not 0 <= self.phase < self.d or any(not 0 <= e < self.d for e in self.vec):
            raise DimensionMismatch("components must be reduced residues")

    @classmethod
    def make(cls, d: int, n: int, phase: int = 0, x: Sequence[int] = (), z: Sequence[int] = ()):
        x = list(x) or [0] * n
        z = list(z) or [0] * n
        return cls(d, n, phase % d, tuple(e % d for e in list(x) + list(z)))

    @classmethod
    def from_vector(cls, d: int, vec: Sequence[int], phase: int = 0) -> "PauliElement":
        return cls(d, len(vec) // 2, phase % d, tuple(e % d for e in vec))

    @classmethod
    def identity(cls, d: int, n: int) -> "PauliElement":
        return cls(d, n, 0, (0,) * (2 * n))

    @classmethod
    def phase_only(cls, d: int, n: int, j: int) -> "PauliElement":
        return cls(d, n, j % d, (0,) * (2 * n))

    @property
    def x(self) -> Tuple[int, ...]:
        return self.vec[:self.n]

    @property
    def z(self) -> Tuple[int, ...]:
        return self.vec[self.n:]

    @property
    def is_identity(self) -> bool:
        return self.phase == 0 and not any(self.vec)

    @property
    def is_phase(self) -> bool:
        """True for scalar multiples of the identity."""
        return not any(self.vec)

    def __mul__(self, other: "PauliElement") -> "PauliElement":
        return pmul(self, other)

    def __pow__(self, t: int) -> "PauliElement":
        return ppow(self, t)

    def __str__(self) -> str:
        return format_pauli(self)


def _check(p: PauliElement, q: PauliElement) -> None:
    if p.d != q.d or p.n != q.n:
        raise DimensionMismatch(f"(d={p.d}, n={p.n}) vs (d={q.d}, n={q.n})")


def pmul(p: PauliElement, q: PauliElement) -> PauliElement:
    _check(p, q)
    d, n = p.d, p.n
    cross = sum(a * b for a, b in zip(p.vec[n:], q.vec[:n]))
    return PauliElement(d, n, (p.phase + q.phase + cross) % d,
                        tuple((a + b) % d for a, b in zip(p.vec, q.vec)))


def ppow(p: PauliElement, t: int) -> PauliElement:
    """``p**t`` for ``t >= 0`` by the closed form."""
    if t < 0:
        raise ValueError("negative exponents are not supported; use inverse()")
    d, n = p.d, p.n
    zx = sum(a * b for a, b in zip(p.vec[n:], p.vec[:n]))
    phase = (t * p.phase + t * (t - 1) // 2 * zx) % d
    return PauliElement(d, n, phase, tuple(t * e % d for e in p.vec))


def inverse(p: PauliElement) -> PauliElement:
    return ppow(p, 2 * p.d - 1)


def comm_phase(p: PauliElement, q: PauliElement) -> int:
    """Exponent ``c`` with ``p q p^-1 q^-1 = w**c I``."""
    _check(p, q)
    n = p.n
    u, v = p.vec, q.vec
    s = sum(u[n + i] * v[i] - u[i] * v[n + i] for i in range(n))
    return s % p.d


def symplectic_form(u: Sequence[int], v: Sequence[int], d: int) -> int:
    n = len(u) // 2
    return sum(u[n + i] * v[i] - u[i] * v[n + i] for i in range(n)) % d


def pauli_order(p: PauliElement) -> int:
    for t in range(1, 2 * p.d + 1):
        if ppow(p, t).is_identity:
            return t
    raise ArithmeticError("order exceeds 2d")  # pragma: no cover


def common_space(S: Sequence[PauliElement]) -> Tuple[int, int]:
    """The shared ``(d, n)`` of a nonempty list."""
    if not S:
        raise ValueError("empty Pauli list")
    d, n = S[0].d, S[0].n
    for p in S:
        if p.d != d or p.n != n:
            raise DimensionMismatch("Pauli list mixes dimensions")
    return d, n


def commutation_matrix(S: Sequence[PauliElement]) -> ExactMatrix:
    d, _ = common_space(S)
    k = len(S)
    rows = [[comm_phase(S[i], S[j]) for j in range(k)] for i in range(k)]
    return ExactMatrix.from_rows(rows, d, cols=k)


def symplectic_matrix(S: Sequence[PauliElement], d: int = None, n: int = None) -> ExactMatrix:
    """The ``2n x k`` matrix whose columns are the vectors of ``S``."""
    if S:
        d, n = common_space(S)
    return ExactMatrix.from_columns([p.vec for p in S], d, rows=2 * n)


def product(S: Sequence[PauliElement], exponents: Sequence[int], d: int = None,
            n: int = None) -> PauliElement:
    """``prod_j S[j] ** exponents[j]`` in ascending index order."""
    if S:
        d, n = common_space(S)
    out = PauliElement.identity(d, n)
    for p, e in zip(S, exponents):
        e %= 2 * d
        if e:
            out = pmul(out, ppow(p, e))
    return out


def tensor(p: PauliElement, q: PauliElement) -> PauliElement:
    """``p`` on the first qudits, ``q`` on the following ones."""
    if p.d != q.d:
        raise DimensionMismatch("tensor factors need a common d")
    return PauliElement(p.d, p.n + q.n, (p.phase + q.phase) % p.d,
                        p.x + q.x + p.z + q.z)


# text and JSON formats

_PHASE = re.compile(r"w(\d+)$")
_FACTOR = re.compile(r"X(\d+)Z(\d+)$")


def parse_pauli(text: str, d: int, n: int, line: int = 1) -> PauliElement:
    """Parse ``w<j> X<a>Z<b> ...`` with exactly ``n`` factors."""
    tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", text)]
    if not tokens:
        raise ParseError("empty Pauli", (line, 1))
    tok, col = tokens[0]
    m = _PHASE.match(tok)
    if not m:
        raise ParseError(f"expected phase 'w<j>', got {tok!r}", (line, col))
    phase = int(m.group(1))
    if phase >= d:
        raise ParseError(f"phase {phase} not in [0,{d})", (line, col))
    if len(tokens) - 1 != n:
        where = tokens[min(len(tokens) - 1, n + 1)][1] if len(tokens) > n + 1 else len(text) + 1
        raise ParseError(f"expected {n} factors, found {len(tokens) - 1}", (line, where))
    x, z = [], []
    for tok, col in tokens[1:]:
        m = _FACTOR.match(tok)
        if not m:
            raise ParseError(f"expected factor 'X<a>Z<b>', got {tok!r}", (line, col))
        a, b = int(m.group(1)), int(m.group(2))
        if a >= d or b >= d:
            raise ParseError(f"exponent out of range in {tok!r}", (line, col))
        x.append(a)
        z.append(b)
    return PauliElement(d, n, phase, tuple(x + z))


def format_pauli(p: PauliElement) -> str:
    factors = " ".join(f"X{a}Z{b}" for a, b in zip(p.x, p.z))
    return f"w{p.phase} {factors}"


def pauli_to_json(p: PauliElement) -> dict:
    return {"d": p.d, "n": p.n, "phase": p.phase, "x": list(p.x), "z": list(p.z)}


def pauli_from_json(obj: dict) -> PauliElement:
    try:
        d, n = int(obj["d"]), int(obj["n"])
        x, z = [int(e) for e in obj["x"]], [int(e) for e in obj["z"]]
        phase = int(obj["phase"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad Pauli JSON: {exc}", (1, 1)) from None
    if len(x) != n or len(z) != n:
        raise ParseError("x/z length does not match n", (1, 1))
    return PauliElement.make(d, n, phase, x, z)


def parse_pauli_list(text: str, d: int = None, n: int = None) -> List[PauliElement]:
    """One element per line (blank lines and ``#`` comments ignored), or a JSON list."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, (exc.lineno, exc.colno)) from None
        return [pauli_from_json(o) for o in data]
    if d is None or n is None:
        raise ParseError("text Pauli input needs d and n", (1, 1))
    out = []
    for i, ln in enumerate(text.splitlines(), start=1):
        body = ln.split("#", 1)[0]
        if body.strip():
            out.append(parse_pauli(body, d, n, line=i))
    return out


def format_pauli_list(S: Iterable[PauliElement]) -> str:
    return "".join(format_pauli(p) + "\n" for p in S)
