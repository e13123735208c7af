"""Functional multiplier and reduction engines with cycle accounting.

Every engine returns the exact product together with the cycle count of the
corresponding bit-serial hardware unit.  Products are computed in one of two
modes: INTEGER (partial products added with carries) or CARRYLESS (partial
products XOR-accumulated, i.e. multiplication in GF(2)[x]).  The cycle
formulas count shift-add iterations and are the same in both modes.

Split-based engines (Karatsuba, Toom-Cook) apply exactly one level of
splitting; their sub-products are evaluated by the same bit-serial kernel as
the schoolbook engine.  Non-divisible widths use ``ceil(m / k)``-bit limbs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .operand import Operand


class MultMode(Enum):
    INTEGER = "integer"
    CARRYLESS = "carryless"


class Method(Enum):
    SBM = "sbm"
    KM2 = "km2"
    TCM3 = "tcm3"
    TCM4 = "tcm4"
    NTT = "ntt"
    MONTGOMERY = "montgomery"
    SEGMENTED = "segmented"

    @classmethod
    def parse(cls, text: "str | Method") -> "Method":
        if isinstance(text, Method):
            return text
        key = text.strip().lower()
        for member in cls:
            if key in (member.value, member.name.lower()):
                return member
        raise ValueError(f"unknown multiplication method {text!r}")


@dataclass(frozen=True)
class MultResult:
    product: Operand
    cycles: int
    mode: MultMode


# Evaluation points for one-level Toom-Cook; None stands for the point at infinity.
TOOM3_POINTS = (0, 1, -1, 2, None)
TOOM4_POINTS = (0, 1, -1, 2, -2, 3, None)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _mask(bits: int) -> int:
    return (1 << bits) - 1


def multiply_cycles(method: "Method | str", m: int, **extra: int) -> int:
    """Closed-form cycle count of ``method`` for ``m``-bit operands.

    Extra parameters: ``digit_bits`` (SEGMENTED, required), ``points`` (NTT
    point count, defaults to ``m``).
    """
    method = Method.parse(method)
    if m < 1:
        raise ValueError("operand width must be >= 1")
    if method is Method.SBM:
        return m - 1
    if method is Method.KM2:
        return _ceil_div(m, 2) - 1
    if method is Method.TCM3:
        return _ceil_div(m, 3) - 1
    if method is Method.TCM4:
        return _ceil_div(m, 4) - 1
    if method is Method.MONTGOMERY:
        return 2 * m - 1
    if method is Method.NTT:
        points = extra.get("points", m)
        if points < 1:
            raise ValueError("NTT point count must be >= 1")
        return 2 * m + 2 * (points - 1).bit_length()
    if method is Method.SEGMENTED:
        if "digit_bits" not in extra:
            raise ValueError("SEGMENTED cycles need digit_bits")
        d = extra["digit_bits"]
        if d < 1:
            raise ValueError("digit_bits must be >= 1")
        return _ceil_div(m, d) ** 2
    raise AssertionError(method)


def _product_width(m: int, n: int, mode: MultMode) -> int:
    return m + n if mode is MultMode.INTEGER else m + n - 1


def _shift_add(x: int, y: int, mode: MultMode) -> int:
    """Bit-serial kernel: one shifted copy of ``x`` per set bit of ``y``."""
    acc = 0
    shifted = x
    if mode is MultMode.INTEGER:
        while y:
            if y & 1:
                acc += shifted
            y >>= 1
            shifted <<= 1
    else:
        while y:
            if y & 1:
                acc ^= shifted
            y >>= 1
            shifted <<= 1
    return acc


def _signed_kernel(x: int, y: int) -> int:
    sign = -1 if (x < 0) != (y < 0) else 1
    return sign * _shift_add(abs(x), abs(y), MultMode.INTEGER)


def _require_equal_widths(a: Operand, b: Operand) -> int:
    if a.width_bits != b.width_bits:
        raise ValueError(
            f"operands must have equal widths, got {a.width_bits} and {b.width_bits}"
        )
    return a.width_bits


def _result(value: int, m: int, n: int, cycles: int, mode: MultMode) -> MultResult:
    return MultResult(Operand(_product_width(m, n, mode), value), cycles, mode)


def sbm_multiply(a: Operand, b: Operand, mode: MultMode = MultMode.INTEGER) -> MultResult:
    """Schoolbook shift-and-add product; ``m - 1`` cycles with ``m = a.width_bits``."""
    value = _shift_add(a.value, b.value, mode)
    cycles = multiply_cycles(Method.SBM, a.width_bits)
    return _result(value, a.width_bits, b.width_bits, cycles, mode)


def karatsuba2_multiply(a: Operand, b: Operand, mode: MultMode = MultMode.INTEGER) -> MultResult:
    m = _require_equal_widths(a, b)
    h = _ceil_div(m, 2)
    a0, a1 = a.value & _mask(h), a.value >> h
    b0, b1 = b.value & _mask(h), b.value >> h
    low = _shift_add(a0, b0, mode)
    high = _shift_add(a1, b1, mode)
    if mode is MultMode.INTEGER:
        mid = _shift_add(a0 + a1, b0 + b1, mode) - low - high
        value = (high << (2 * h)) + (mid << h) + low
    else:
        mid = _shift_add(a0 ^ a1, b0 ^ b1, mode) ^ low ^ high
        value = (high << (2 * h)) ^ (mid << h) ^ low
    return _result(value, m, m, multiply_cycles(Method.KM2, m), mode)


@lru_cache(maxsize=None)
def _interpolation_matrix(points: tuple) -> tuple:
    """Inverse of the evaluation matrix for the given points, as Fractions."""
    size = len(points)
    rows = []
    for p in points:
        if p is None:
            rows.append([Fraction(0)] * (size - 1) + [Fraction(1)])
        else:
            rows.append([Fraction(p) ** k for k in range(size)])
    inv = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for col in range(size):
        pivot = next(r for r in range(col, size) if rows[r][col] != 0)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        scale = rows[col][col]
        rows[col] = [v / scale for v in rows[col]]
        inv[col] = [v / scale for v in inv[col]]
        for r in range(size):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
                inv[r] = [x - factor * y for x, y in zip(inv[r], inv[col])]
    return tuple(tuple(row) for row in inv)


def _limbs(value: int, ways: int, h: int) -> list[int]:
    return [(value >> (i * h)) & _mask(h) for i in range(ways)]


def _evaluate(limbs: list[int], point) -> int:
    if point is None:
        return limbs[-1]
    acc = 0
    for limb in reversed(limbs):
        acc = acc * point + limb
    return acc


def _toom_cook(a: Operand, b: Operand, ways: int, points: tuple, mode: MultMode) -> int:
    m = _require_equal_widths(a, b)
    h = _ceil_div(m, ways)
    a_limbs = _limbs(a.value, ways, h)
    b_limbs = _limbs(b.value, ways, h)
    if mode is MultMode.CARRYLESS:
        # Interpolation divides by 2 and 3, which is meaningless in characteristic 2.
        value = 0
        for i, x in enumerate(a_limbs):
            for j, y in enumerate(b_limbs):
                value ^= _shift_add(x, y, mode) << ((i + j) * h)
        return value
    pointwise = [_signed_kernel(_evaluate(a_limbs, p), _evaluate(b_limbs, p)) for p in points]
    inverse = _interpolation_matrix(points)
    value = 0
    for k, row in enumerate(inverse):
        coeff = sum(c * w for c, w in zip(row, pointwise))
        if coeff.denominator != 1:
            raise ArithmeticError("Toom-Cook interpolation produced a non-integer coefficient")
        value += int(coeff) << (k * h)
    return value


def toomcook3_multiply(a: Operand, b: Operand, mode: MultMode = MultMode.INTEGER) -> MultResult:
    value = _toom_cook(a, b, 3, TOOM3_POINTS, mode)
    m = a.width_bits
    return _result(value, m, m, multiply_cycles(Method.TCM3, m), mode)


def toomcook4_multiply(a: Operand, b: Operand, mode: MultMode = MultMode.INTEGER) -> MultResult:
    value = _toom_cook(a, b, 4, TOOM4_POINTS, mode)
    m = a.width_bits
    return _result(value, m, m, multiply_cycles(Method.TCM4, m), mode)


# Byte -> eight bytes with one bit each; used to turn GF(2) digit products into
# integer products whose per-byte sums hold the coefficient parities.
_SPREAD = [bytes((v >> i) & 1 for i in range(8)) for v in range(256)]
_PARITY = bytes(ord("0") + (v & 1) for v in range(256))


def _clmul_digit(x: int, y: int, d: int) -> int:
    if d > 255:
        return _shift_add(x, y, MultMode.CARRYLESS)
    nbytes = _ceil_div(d, 8)
    xs = int.from_bytes(b"".join(_SPREAD[v] for v in x.to_bytes(nbytes, "little")), "little")
    ys = int.from_bytes(b"".join(_SPREAD[v] for v in y.to_bytes(nbytes, "little")), "little")
    counts = (xs * ys).to_bytes(16 * nbytes, "little")
    return int(counts.translate(_PARITY)[::-1], 2)


def segmented_sbm_multiply(
    a: Operand, b: Operand, digit_bits: int, mode: MultMode = MultMode.INTEGER
) -> MultResult:
    """Digit-serial schoolbook: one ``digit_bits`` x ``digit_bits`` partial product per cycle.

    The digit multiplier itself is combinational, so each digit pair costs a
    single cycle and the schedule takes ``ceil(m / d) ** 2`` cycles.
    """
    m = _require_equal_widths(a, b)
    if digit_bits < 1:
        raise ValueError("digit_bits must be >= 1")
    if digit_bits > m:
        raise ValueError(f"digit_bits={digit_bits} exceeds operand width {m}")
    k = _ceil_div(m, digit_bits)
    a_digits = _limbs(a.value, k, digit_bits)
    b_digits = _limbs(b.value, k, digit_bits)
    value = 0
    if mode is MultMode.INTEGER:
        for j, y in enumerate(b_digits):
            if not y:
                continue
            for i, x in enumerate(a_digits):
                value += (x * y) << ((i + j) * digit_bits)
    else:
        for j, y in enumerate(b_digits):
            if not y:
                continue
            for i, x in enumerate(a_digits):
                if x:
                    value ^= _clmul_digit(x, y, digit_bits) << ((i + j) * digit_bits)
    cycles = multiply_cycles(Method.SEGMENTED, m, digit_bits=digit_bits)
    return _result(value, m, m, cycles, mode)


def xor_shift_reduce(s: Operand, m: int) -> tuple[Operand, int]:
    """Serial XOR-fold of ``s`` down to ``m`` bits, one high bit per cycle.

    The remainder starts as the low ``m`` bits of ``s``.  High bits are taken
    in increasing bit order; for each, the remainder is rotated left by one
    position (bit ``m-1`` wraps to bit 0) and the incoming bit is XORed into
    bit 0.  See docs/xor_shift_reduce.md for a worked example.
    """
    if m < 1:
        raise ValueError("reduction width m must be >= 1")
    if s.width_bits < m:
        raise ValueError(f"operand width {s.width_bits} is smaller than m={m}")
    full = _mask(m)
    r = s.value & full
    for i in range(m, s.width_bits):
        r = ((r << 1) | (r >> (m - 1))) & full
        r ^= (s.value >> i) & 1
    return Operand(m, r), s.width_bits - m


def unified_multiply_reduce(a: Operand, b: Operand) -> tuple[Operand, int]:
    """Carry-less SBM product folded back to ``m`` bits; ``2(m - 1)`` cycles."""
    m = _require_equal_widths(a, b)
    product = sbm_multiply(a, b, MultMode.CARRYLESS)
    reduced, fold_cycles = xor_shift_reduce(product.product, m)
    return reduced, product.cycles + fold_cycles


# -- Montgomery ---------------------------------------------------------------

def _check_montgomery(q: int, r_bits: int) -> None:
    if q < 1 or q % 2 == 0:
        raise ValueError(f"Montgomery modulus must be odd, got {q}")
    if r_bits < 1 or (1 << r_bits) <= q:
        raise ValueError(f"R = 2**{r_bits} must exceed q = {q}")


def to_montgomery(x: int, q: int, r_bits: int) -> int:
    _check_montgomery(q, r_bits)
    return (x << r_bits) % q


def from_montgomery(x: int, q: int, r_bits: int) -> int:
    _check_montgomery(q, r_bits)
    return x * pow(1 << r_bits, -1, q) % q


def montgomery_multiply(a: int, b: int, q: int, r_bits: int) -> tuple[int, int]:
    """Radix-2 bit-serial REDC(a * b) = a * b * 2**-r_bits mod q.

    Each of the ``r_bits`` iterations adds one partial product and halves the
    accumulator (adding ``q`` first when odd); the unit is charged ``2m - 1``
    cycles for ``m = r_bits``.
    """
    _check_montgomery(q, r_bits)
    if not (0 <= a < q and 0 <= b < q):
        raise ValueError("Montgomery inputs must be residues in [0, q)")
    acc = 0
    for i in range(r_bits):
        if (a >> i) & 1:
            acc += b
        if acc & 1:
            acc += q
        acc >>= 1
    if acc >= q:
        acc -= q
    return acc, multiply_cycles(Method.MONTGOMERY, r_bits)


ENGINES = {
    Method.SBM: sbm_multiply,
    Method.KM2: karatsuba2_multiply,
    Method.TCM3: toomcook3_multiply,
    Method.TCM4: toomcook4_multiply,
}

