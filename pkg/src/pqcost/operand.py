"""Fixed-width unsigned operands shared by every multiplier engine."""

from __future__ import annotations

import random
from dataclasses import dataclass


@dataclass(frozen=True)
class Operand:
    """An unsigned value with an explicit declared bit width."""

    width_bits: int
    value: int

    def __post_init__(self) -> None:
        if not isinstance(self.width_bits, int) or self.width_bits < 1:
            raise ValueError(f"width_bits must be a positive integer, got {self.width_bits!r}")
        if not isinstance(self.value, int) or self.value < 0:
            raise ValueError(f"value must be a non-negative integer, got {self.value!r}")
        if self.value >> self.width_bits:
            raise ValueError(
                f"value needs {self.value.bit_length()} bits, exceeds declared width {self.width_bits}"
            )

    def bit(self, i: int) -> int:
        return (self.value >> i) & 1

    def to_hex(self) -> str:
        return to_hex(self)


def make_operand(width_bits: int, value: int) -> Operand:
    return Operand(width_bits, value)


def random_operand(width_bits: int, seed: int) -> Operand:
    """Uniform operand in [0, 2**width_bits); a pure function of (width, seed)."""
    if width_bits < 1:
        raise ValueError("width_bits must be >= 1")
    rng = random.Random(f"operand:{width_bits}:{seed & 0xFFFFFFFFFFFFFFFF}")
    return Operand(width_bits, rng.getrandbits(width_bits))


def to_bit_sequence(op: Operand) -> list[int]:
    """Bits of ``op``, least-significant first, exactly ``width_bits`` long."""
    v = op.value
    return [(v >> i) & 1 for i in range(op.width_bits)]


def from_bit_sequence(bits: list[int]) -> Operand:
    if not bits:
        raise ValueError("empty bit sequence")
    value = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"bit {i} is {b!r}, expected 0 or 1")
        value |= b << i
    return Operand(len(bits), value)


def to_hex(op: Operand) -> str:
    """Lowercase hex, no prefix, most-significant nibble first, padded to the width."""
    return format(op.value, f"0{(op.width_bits + 3) // 4}x")


def from_hex(text: str, width_bits: int | None = None) -> Operand:
    text = text.strip().lower()
    if text.startswith("0x"):
        raise ValueError("hex operands are written without a 0x prefix")
    value = int(text, 16) if text else 0
    if width_bits is None:
        width_bits = max(4 * len(text), 1)
    return Operand(width_bits, value)
