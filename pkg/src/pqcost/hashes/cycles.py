"""Hash/XOF/cipher core parameters and their cycle-count model.

Each core reads the message 64 bits per cycle, then spends ``rounds`` cycles
per padded block.  XOF cores produce ``instance_output_bits`` per invocation;
a request larger than that costs one extra cycle block per further
invocation.  AES cores charge a fixed number of cycles per 128-bit block.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .aes import BLOCK_CYCLES
from .keccak import bytepad, encode_string


class HashFunction(Enum):
    SHA2_256 = "SHA2-256"
    SHA2_512 = "SHA2-512"
    SHA3_256 = "SHA3-256"
    SHA3_512 = "SHA3-512"
    SHAKE_128 = "SHAKE-128"
    SHAKE_256 = "SHAKE-256"
    CSHAKE_128 = "cSHAKE-128"
    CSHAKE_256 = "cSHAKE-256"
    AES_128 = "AES-128"
    AES_256 = "AES-256"

    @classmethod
    def parse(cls, text: "str | HashFunction") -> "HashFunction":
        if isinstance(text, HashFunction):
            return text
        key = text.strip().upper().replace("_", "-")
        for member in cls:
            if key in (member.value.upper(), member.name.replace("_", "-")):
                return member
        raise ValueError(f"unknown hash function {text!r}")

    @property
    def is_keccak(self) -> bool:
        return self.name.startswith(("SHA3", "SHAKE", "CSHAKE"))

    @property
    def is_xof(self) -> bool:
        return self.name.startswith(("SHAKE", "CSHAKE"))

    @property
    def is_aes(self) -> bool:
        return self.name.startswith("AES")


# function -> (rate/block bits, rounds per block, fixed output bits or None)
CORE_PARAMETERS: dict[HashFunction, tuple[int, int, int | None]] = {
    HashFunction.SHA2_256: (512, 64, 256),
    HashFunction.SHA2_512: (1024, 80, 512),
    HashFunction.SHA3_256: (1088, 24, 256),
    HashFunction.SHA3_512: (576, 24, 512),
    HashFunction.SHAKE_128: (1344, 24, None),
    HashFunction.SHAKE_256: (1088, 24, None),
    HashFunction.CSHAKE_128: (1344, 24, None),
    HashFunction.CSHAKE_256: (1088, 24, None),
    HashFunction.AES_128: (128, BLOCK_CYCLES[128], 128),
    HashFunction.AES_256: (128, BLOCK_CYCLES[256], 128),
}

# Minimum bits appended by padding: domain suffix plus pad10*1 for Keccak,
# the 0x80 marker plus length field for SHA2.
_PAD_OVERHEAD = {
    HashFunction.SHA2_256: 1 + 64,
    HashFunction.SHA2_512: 1 + 128,
    HashFunction.SHA3_256: 2 + 2,
    HashFunction.SHA3_512: 2 + 2,
    HashFunction.SHAKE_128: 4 + 2,
    HashFunction.SHAKE_256: 4 + 2,
    HashFunction.CSHAKE_128: 2 + 2,
    HashFunction.CSHAKE_256: 2 + 2,
}

READ_BITS_PER_CYCLE = 64


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class HashCoreSpec:
    function: HashFunction
    rate_bits: int
    rounds_per_block: int
    instance_output_bits: int
    N: bytes = field(default=b"")
    S: bytes = field(default=b"")

    def __post_init__(self) -> None:
        rate, rounds, fixed = CORE_PARAMETERS[self.function]
        if self.rate_bits != rate:
            raise ValueError(f"{self.function.value} has rate {rate} bits, not {self.rate_bits}")
        if self.rounds_per_block != rounds:
            raise ValueError(
                f"{self.function.value} needs {rounds} rounds per block, not {self.rounds_per_block}"
            )
        if self.instance_output_bits < 1:
            raise ValueError("instance_output_bits must be positive")
        if fixed is not None and self.instance_output_bits != fixed:
            raise ValueError(f"{self.function.value} always outputs {fixed} bits")
        if (self.N or self.S) and not self.function.name.startswith("CSHAKE"):
            raise ValueError("N and S only apply to cSHAKE cores")

    @classmethod
    def for_function(
        cls,
        function: "HashFunction | str",
        instance_output_bits: int | None = None,
        N: bytes = b"",
        S: bytes = b"",
    ) -> "HashCoreSpec":
        fn = HashFunction.parse(function)
        rate, rounds, fixed = CORE_PARAMETERS[fn]
        if instance_output_bits is None:
            if fixed is None:
                raise ValueError(f"{fn.value} is an XOF; instance_output_bits is required")
            instance_output_bits = fixed
        return cls(fn, rate, rounds, instance_output_bits, N, S)

    def prefix_bits(self) -> int:
        """Bits of the cSHAKE bytepad(encode_string(N) || encode_string(S)) prefix."""
        if not self.function.name.startswith("CSHAKE") or not (self.N or self.S):
            return 0
        return 8 * len(bytepad(encode_string(self.N) + encode_string(self.S), self.rate_bits // 8))


@dataclass(frozen=True)
class HashCycleBreakdown:
    read_cycles: int
    blocks: int
    round_cycles: int
    squeeze_invocations: int
    squeeze_cycles: int

    @property
    def total(self) -> int:
        return self.read_cycles + self.round_cycles + self.squeeze_cycles


def padded_blocks(spec: HashCoreSpec, message_bits: int) -> int:
    if spec.function.is_aes:
        return max(1, _ceil_div(message_bits, 128))
    fn = spec.function
    overhead = _PAD_OVERHEAD[fn]
    if fn.name.startswith("CSHAKE") and not (spec.N or spec.S):
        # Empty N and S: the core behaves exactly as SHAKE.
        overhead = _PAD_OVERHEAD[HashFunction.SHAKE_128]
    return _ceil_div(spec.prefix_bits() + message_bits + overhead, spec.rate_bits)


def hash_cycle_breakdown(
    spec: HashCoreSpec, message_bits: int, required_output_bits: int
) -> HashCycleBreakdown:
    if message_bits < 0:
        raise ValueError("message_bits must be non-negative")
    if required_output_bits < 1:
        raise ValueError("required_output_bits must be positive")
    if spec.function.is_aes:
        # CTR-style use: enough blocks to cover both the input and the requested output.
        blocks = max(1, _ceil_div(max(message_bits, required_output_bits), 128))
        return HashCycleBreakdown(0, blocks, spec.rounds_per_block * blocks, blocks, 0)
    read = _ceil_div(message_bits, READ_BITS_PER_CYCLE)
    blocks = padded_blocks(spec, message_bits)
    invocations = _ceil_div(required_output_bits, spec.instance_output_bits)
    return HashCycleBreakdown(
        read, blocks, spec.rounds_per_block * blocks, invocations, invocations - 1
    )


def hash_cycles(spec: HashCoreSpec, message_bits: int, required_output_bits: int) -> int:
    return hash_cycle_breakdown(spec, message_bits, required_output_bits).total


def squeeze_invocations(spec: HashCoreSpec, required_output_bits: int) -> int:
    return _ceil_div(required_output_bits, spec.instance_output_bits)
