"""Keccak-f[1600] and the SHA-3 / SHAKE / cSHAKE sponge functions.

All sponge variants run through the single :func:`keccak_f1600` below;
``permutation_calls()`` exposes how many times it has been invoked so tests
can check that no variant carries a private copy.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1

_ROUND_CONSTANTS = (
    0x0000000000000001, 0x0000000000008082, 0x800000000000808A, 0x8000000080008000,
    0x000000000000808B, 0x0000000080000001, 0x8000000080008081, 0x8000000000008009,
    0x000000000000008A, 0x0000000000000088, 0x0000000080008009, 0x000000008000000A,
    0x000000008000808B, 0x800000000000008B, 0x8000000000008089, 0x8000000000008003,
    0x8000000000008002, 0x8000000000000080, 0x000000000000800A, 0x800000008000000A,
    0x8000000080008081, 0x8000000000008080, 0x0000000080000001, 0x8000000080008008,
)

# Rotation offsets r[x][y].
_RHO = (
    (0, 36, 3, 41, 18),
    (1, 44, 10, 45, 2),
    (62, 6, 43, 15, 61),
    (28, 55, 25, 21, 56),
    (27, 20, 39, 8, 14),
)

ROUNDS = 24
STATE_BITS = 1600

_calls = 0


def permutation_calls() -> int:
    return _calls


def _rotl(v: int, r: int) -> int:
    return ((v << r) | (v >> (64 - r))) & _MASK64 if r else v


def keccak_f1600(state: list[int]) -> list[int]:
    """Apply the 24-round permutation to 25 lanes indexed ``x + 5 * y``."""
    global _calls
    if len(state) != 25:
        raise ValueError(f"Keccak state needs 25 lanes, got {len(state)}")
    _calls += 1
    a = list(state)
    for rc in _ROUND_CONSTANTS:
        c = [a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20] for x in range(5)]
        d = [c[(x - 1) % 5] ^ _rotl(c[(x + 1) % 5], 1) for x in range(5)]
        a = [a[i] ^ d[i % 5] for i in range(25)]
        b = [0] * 25
        for x in range(5):
            for y in range(5):
                b[y + 5 * ((2 * x + 3 * y) % 5)] = _rotl(a[x + 5 * y], _RHO[x][y])
        a = [
            b[i] ^ (~b[(i % 5 + 1) % 5 + 5 * (i // 5)] & b[(i % 5 + 2) % 5 + 5 * (i // 5)])
            for i in range(25)
        ]
        a[0] ^= rc
    return a


def sponge(rate_bytes: int, message: bytes, suffix: int, out_len: int) -> bytes:
    """Keccak sponge with pad10*1; ``suffix`` holds the domain bits plus the first pad bit."""
    if not 0 < rate_bytes < 200:
        raise ValueError("rate must be between 1 and 199 bytes")
    state = [0] * 25
    padded = bytearray(message)
    padded.append(suffix)
    padded.extend(b"\x00" * (-len(padded) % rate_bytes))
    padded[-1] |= 0x80
    for off in range(0, len(padded), rate_bytes):
        block = padded[off:off + rate_bytes]
        for i in range(0, rate_bytes, 8):
            lane = int.from_bytes(block[i:i + 8], "little")
            state[i // 8] ^= lane
        state = keccak_f1600(state)
    out = bytearray()
    while True:
        raw = b"".join(lane.to_bytes(8, "little") for lane in state)[:rate_bytes]
        out.extend(raw)
        if len(out) >= out_len:
            return bytes(out[:out_len])
        state = keccak_f1600(state)


_SHA3_RATES = {224: 144, 256: 136, 384: 104, 512: 72}
_SHAKE_RATES = {128: 168, 256: 136}


def _out_bytes(d_bits: int) -> int:
    if d_bits < 8 or d_bits % 8:
        raise ValueError(f"output length must be a positive multiple of 8 bits, got {d_bits}")
    return d_bits // 8


def sha3(msg: bytes, variant: int = 256) -> bytes:
    if variant not in _SHA3_RATES:
        raise ValueError(f"unsupported SHA3 variant {variant}")
    return sponge(_SHA3_RATES[variant], msg, 0x06, variant // 8)


def shake(msg: bytes, variant: int, d_bits: int) -> bytes:
    if variant not in _SHAKE_RATES:
        raise ValueError(f"unsupported SHAKE variant {variant}")
    return sponge(_SHAKE_RATES[variant], msg, 0x1F, _out_bytes(d_bits))


def left_encode(x: int) -> bytes:
    body = x.to_bytes(max(1, (x.bit_length() + 7) // 8), "big")
    return bytes([len(body)]) + body


def right_encode(x: int) -> bytes:
    body = x.to_bytes(max(1, (x.bit_length() + 7) // 8), "big")
    return body + bytes([len(body)])


def encode_string(s: bytes) -> bytes:
    return left_encode(8 * len(s)) + s


def bytepad(x: bytes, w: int) -> bytes:
    z = left_encode(w) + x
    return z + b"\x00" * (-len(z) % w)


def cshake(msg: bytes, variant: int, d_bits: int, N: bytes = b"", S: bytes = b"") -> bytes:
    """Customizable SHAKE; identical to SHAKE when both N and S are empty."""
    if variant not in _SHAKE_RATES:
        raise ValueError(f"unsupported cSHAKE variant {variant}")
    if not N and not S:
        return shake(msg, variant, d_bits)
    rate = _SHAKE_RATES[variant]
    prefix = bytepad(encode_string(N) + encode_string(S), rate)
    return sponge(rate, prefix + msg, 0x04, _out_bytes(d_bits))


THREEBEARS_CUSTOMIZATION = b"ThreeBears"


def threebears_hash(purpose: int, data: bytes, d_bits: int = 256, pblock: bytes = b"") -> bytes:
    """Domain-separated cSHAKE-256 in the ThreeBears framing.

    Input is ``pblock || 0x00 || purpose || data`` with S = "ThreeBears" and
    an empty function name; ``pblock`` is the caller's parameter block.
    This layout is a documented choice pinned by golden outputs.
    """
    if not 0 <= purpose < 256:
        raise ValueError("purpose must fit in one byte")
    framed = pblock + bytes([0, purpose]) + data
    return cshake(framed, 256, d_bits, b"", THREEBEARS_CUSTOMIZATION)
