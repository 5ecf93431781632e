"""Generators: Hadamard matrices and the finite-field array families.

Hadamard side: Sylvester doubling, Paley type I, Kronecker products,
normalization, and the order-(kappa) -> OA(kappa, kappa-1, 2, 2) map.
Field side: the projective-dot-product strength-2 family, the
polynomial-evaluation index-unity family, and its strength-3 extension for
power-of-two level counts.  A deterministic picker turns a target system
size N >= 6 into a Hadamard order whose derived states are 2-uniform.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import (
    BadOrder,
    NotNormalized,
    NotPowerOfTwo,
    ParameterViolation,
    Unsupported,
)
from .gf import field_new
from .oa import OrthogonalArray, remove_columns
from .states import PureState, state_from_oa

MAX_GRID = 1 << 14  # largest generated run count


@dataclass(frozen=True)
class HadamardMatrix:
    """A +/-1 matrix H of a given order with H @ H.T = order * I (exact)."""

    order: int
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        k = self.order
        grid = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", grid)
        if len(grid) != k or any(len(row) != k for row in grid):
            raise ParameterViolation(f"entries are not {k}x{k}")
        if any(v not in (1, -1) for row in grid for v in row):
            raise ParameterViolation("entries must be +1 or -1")
        m = np.asarray(grid, dtype=np.int64)
        if not np.array_equal(m @ m.T, k * np.eye(k, dtype=np.int64)):
            raise ParameterViolation("H @ H.T != order * I")

    @property
    def is_normalized(self) -> bool:
        return (all(v == 1 for v in self.entries[0])
                and all(row[0] == 1 for row in self.entries))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.entries, dtype=np.int64)


def sylvester(m: int) -> HadamardMatrix:
    """Order 2**m by iterated doubling [[H, H], [H, -H]] from [[1]]."""
    if not 1 <= m <= 16:
        raise ParameterViolation(f"m must be in 1..16, got {m}")
    h2 = np.array([[1, 1], [1, -1]], dtype=np.int64)
    cur = np.array([[1]], dtype=np.int64)
    for _ in range(m):
        cur = np.kron(h2, cur)
    return HadamardMatrix(2 ** m, tuple(map(tuple, cur.tolist())))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def paley_type1(q: int) -> HadamardMatrix:
    """Order q+1 from the quadratic-residue character mod q (q prime,
    q = 3 mod 4); returned in normalized form."""
    if q > 1000 or not _is_prime(q) or q % 4 != 3:
        raise BadOrder(f"need a prime q = 3 (mod 4), q <= 1000; got {q}")
    residues = {(x * x) % q for x in range(1, q)}

    def chi(a: int) -> int:
        a %= q
        if a == 0:
            return 0
        return 1 if a in residues else -1

    size = q + 1
    s = np.zeros((size, size), dtype=np.int64)
    s[0, 1:] = 1
    s[1:, 0] = -1
    for i in range(q):
        for j in range(q):
            s[1 + i, 1 + j] = chi(i - j)
    h = np.eye(size, dtype=np.int64) + s
    return normalize(HadamardMatrix(size, tuple(map(tuple, h.tolist()))))


def kron(h1: HadamardMatrix, h2: HadamardMatrix) -> HadamardMatrix:
    prod = np.kron(h1.as_array(), h2.as_array())
    return HadamardMatrix(h1.order * h2.order, tuple(map(tuple, prod.tolist())))


def normalize(h: HadamardMatrix) -> HadamardMatrix:
    """Negate rows with a leading -1, then columns with a leading -1."""
    m = h.as_array().copy()
    for i in range(h.order):
        if m[i, 0] == -1:
            m[i, :] *= -1
    for j in range(h.order):
        if m[0, j] == -1:
            m[:, j] *= -1
    return HadamardMatrix(h.order, tuple(map(tuple, m.tolist())))


def hadamard(order: int) -> HadamardMatrix:
    """A normalized Hadamard matrix of the requested order.

    Supported orders: 1, powers of two (Sylvester), 12 * 2**a (Paley q=11
    times Sylvester), and q+1 for primes q = 3 (mod 4) (Paley type I).
    """
    if order < 1:
        raise BadOrder(f"order must be positive, got {order}")
    if order == 1:
        return HadamardMatrix(1, ((1,),))
    if order & (order - 1) == 0:
        return sylvester(order.bit_length() - 1)
    base = order
    twos = 0
    while base % 2 == 0:
        base //= 2
        twos += 1
    if base == 3 and twos >= 2:  # order = 12 * 2**(twos-2)
        h12 = paley_type1(11)
        return h12 if twos == 2 else kron(h12, sylvester(twos - 2))
    if _is_prime(order - 1) and (order - 1) % 4 == 3:
        return paley_type1(order - 1)
    raise BadOrder(f"no supported construction of order {order}")


def hadamard_to_oa(h: HadamardMatrix) -> OrthogonalArray:
    """Drop the first column and map -1 -> 0, +1 -> 1; for a normalized
    matrix of order kappa >= 4 this is a verified OA(kappa, kappa-1, 2, 2)."""
    if h.order < 4:
        raise ParameterViolation(f"order must be >= 4, got {h.order}")
    if not h.is_normalized:
        raise NotNormalized("normalize the matrix first")
    rows = tuple(tuple(1 if v == 1 else 0 for v in row[1:]) for row in h.entries)
    return OrthogonalArray(rows, 2, 2)


# ---------------------------------------------------------------------------
# finite-field families
# ---------------------------------------------------------------------------

def rao_oa(d: int, n: int) -> OrthogonalArray:
    """OA(d**n, (d**n - 1)/(d - 1), d, 2) for a prime power d.

    Rows are the vectors of GF(d)**n in ascending code order (coordinate 0 is
    the least-significant base-d digit).  Columns are the nonzero vectors
    whose first nonzero coordinate is 1, in ascending code order; the cell is
    the GF(d) dot product of row vector and column vector.
    """
    if n < 2:
        raise ParameterViolation(f"n must be >= 2, got {n}")
    f = field_new(d)  # raises NotPrimePower when d is composite non-power
    if d ** n > MAX_GRID:
        raise ParameterViolation(f"d**n = {d ** n} exceeds {MAX_GRID}")

    def digits(code: int) -> Tuple[int, ...]:
        out = []
        for _ in range(n):
            out.append(code % d)
            code //= d
        return tuple(out)

    columns = []
    for code in range(1, d ** n):
        vec = digits(code)
        first = next(v for v in vec if v != 0)
        if first == 1:
            columns.append(vec)

    rows = []
    for code in range(d ** n):
        x = digits(code)
        row = []
        for c in columns:
            acc = 0
            for xi, ci in zip(x, c):
                acc = f.add_codes(acc, f.mul_codes(xi, ci))
            row.append(acc)
        rows.append(tuple(row))
    return OrthogonalArray(tuple(rows), d, 2)


def bush_oa(d: int, k: int) -> OrthogonalArray:
    """Index-unity OA(d**k, d+1, d, k) for a prime power d >= k-1 >= 0.

    Row for the polynomial phi(x) = c0 + c1 x + ... + c_{k-1} x^{k-1}
    (coefficients enumerated in ascending code order) is the leading
    coefficient c_{k-1} followed by the evaluations phi(e) over the field
    elements in encoding order.
    """
    if k < 1:
        raise ParameterViolation(f"k must be >= 1, got {k}")
    if d < k - 1:
        raise ParameterViolation(f"need d >= k-1, got d={d}, k={k}")
    f = field_new(d)
    if d ** k > MAX_GRID:
        raise ParameterViolation(f"d**k = {d ** k} exceeds {MAX_GRID}")

    rows = []
    for code in range(d ** k):
        coeffs = []
        c = code
        for _ in range(k):
            coeffs.append(c % d)
            c //= d
        evals = []
        for e in range(d):
            acc = 0
            power = 1
            for coef in coeffs:
                acc = f.add_codes(acc, f.mul_codes(coef, power))
                power = f.mul_codes(power, e)
            evals.append(acc)
        rows.append(tuple([coeffs[-1]] + evals))
    return OrthogonalArray(tuple(rows), d, k)


def bush_extended_oa(d: int) -> OrthogonalArray:
    """Index-unity OA(d**3, d+2, d, 3) for d = 2**m.

    Rows are indexed by (a, b, c) in GF(d)**3 -- c is the least-significant
    base-d digit of the row code -- and hold (a, b, a*e**2 + b*e + c for each
    field element e in encoding order).
    """
    allowed = {2 ** m for m in range(1, 15)}
    if d not in allowed:
        raise NotPowerOfTwo(f"need d = 2**m with m >= 1, got {d}")
    if d ** 3 > MAX_GRID:
        raise ParameterViolation(f"d**3 = {d ** 3} exceeds {MAX_GRID}")
    f = field_new(d)
    rows = []
    for code in range(d ** 3):
        c = code % d
        b = (code // d) % d
        a = code // (d * d)
        evals = [
            f.add_codes(
                f.add_codes(f.mul_codes(a, f.mul_codes(e, e)), f.mul_codes(b, e)), c)
            for e in range(d)
        ]
        rows.append(tuple([a, b] + evals))
    return OrthogonalArray(tuple(rows), d, 3)


# ---------------------------------------------------------------------------
# 2-uniform pipeline
# ---------------------------------------------------------------------------

def choose_hadamard_order(n: int) -> int:
    """Smallest supported Hadamard order kappa whose window
    kappa/2 + 2 <= N <= kappa - 1 admits N parties.

    Plain sizes use kappa = 2**v; sizes of the form 2**t or 2**t + 1 (t > 2)
    fall outside every power-of-two window and use kappa = 12 * 2**(v-3)
    with the window 3*2**(v-2) + 2 <= N <= 3*2**(v-1).
    """
    if n <= 5:
        raise Unsupported(f"no 2-uniform pipeline for n = {n} (need n >= 6)")
    exceptional = any(n == 2 ** t or n == 2 ** t + 1 for t in range(3, n.bit_length() + 1))
    if exceptional:
        v = 3
        while True:
            if 3 * 2 ** (v - 2) + 2 <= n <= 3 * 2 ** (v - 1):
                return 12 * 2 ** (v - 3)
            v += 1
    v = 3
    while True:
        if 2 ** (v - 1) + 2 <= n <= 2 ** v - 1:
            return 2 ** v
        v += 1


def hadamard_two_uniform_state(n: int) -> "PureState":
    """2-uniform n-party state for any n >= 6: normalize a Hadamard matrix of
    the chosen order, drop its first column, keep the first n remaining
    columns, map -1 -> 0, and read the rows as all-plus-phase terms."""
    if n <= 5:
        raise Unsupported(f"no 2-uniform pipeline for n = {n} (need n >= 6)")
    kappa = choose_hadamard_order(n)
    array = hadamard_to_oa(hadamard(kappa))
    if n < array.factors:
        array = remove_columns(array, range(n, array.factors))
    return state_from_oa(array)
