"""AES-128 / AES-256 block encryption (FIPS-197), encrypt direction only."""

from __future__ import annotations


def _xtime(b: int) -> int:
    b <<= 1
    return (b ^ 0x1B) & 0xFF if b & 0x100 else b


def _gmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a = _xtime(a)
        b >>= 1
    return out


def _build_sbox() -> bytes:
    # Multiplicative inverse in GF(2^8) followed by the affine transform.
    inverse = [0] * 256
    for x in range(1, 256):
        for y in range(1, 256):
            if _gmul(x, y) == 1:
                inverse[x] = y
                break
    box = bytearray(256)
    for x in range(256):
        v = inverse[x]
        s = v
        for shift in range(1, 5):
            s ^= ((v << shift) | (v >> (8 - shift))) & 0xFF
        box[x] = s ^ 0x63
    return bytes(box)


SBOX = _build_sbox()

_ROUNDS = {16: 10, 32: 14}
# Cycle cost of the reference cores for one block.
BLOCK_CYCLES = {128: 12, 256: 46}


def _expand_key(key: bytes) -> list[bytes]:
    nk = len(key) // 4
    rounds = _ROUNDS[len(key)]
    words = [key[4 * i:4 * i + 4] for i in range(nk)]
    rcon = 1
    for i in range(nk, 4 * (rounds + 1)):
        t = bytearray(words[i - 1])
        if i % nk == 0:
            t = bytearray(SBOX[b] for b in t[1:] + t[:1])
            t[0] ^= rcon
            rcon = _xtime(rcon)
        elif nk > 6 and i % nk == 4:
            t = bytearray(SBOX[b] for b in t)
        words.append(bytes(x ^ y for x, y in zip(words[i - nk], t)))
    return [b"".join(words[4 * r:4 * r + 4]) for r in range(rounds + 1)]


def _mix_column(col: bytes) -> bytes:
    a0, a1, a2, a3 = col
    return bytes((
        _gmul(a0, 2) ^ _gmul(a1, 3) ^ a2 ^ a3,
        a0 ^ _gmul(a1, 2) ^ _gmul(a2, 3) ^ a3,
        a0 ^ a1 ^ _gmul(a2, 2) ^ _gmul(a3, 3),
        _gmul(a0, 3) ^ a1 ^ a2 ^ _gmul(a3, 2),
    ))


def aes_encrypt_block(key: bytes, block: bytes) -> bytes:
    """Encrypt one 16-byte block under a 16- or 32-byte key."""
    if len(key) not in _ROUNDS:
        raise ValueError(f"AES key must be 16 or 32 bytes, got {len(key)}")
    if len(block) != 16:
        raise ValueError(f"AES block must be 16 bytes, got {len(block)}")
    round_keys = _expand_key(key)
    # State is column-major: byte index 4 * column + row.
    state = bytes(x ^ y for x, y in zip(block, round_keys[0]))
    last = len(round_keys) - 1
    for r in range(1, last + 1):
        sub = [SBOX[b] for b in state]
        shifted = bytes(sub[4 * ((c + row) % 4) + row] for c in range(4) for row in range(4))
        if r != last:
            shifted = b"".join(_mix_column(shifted[4 * c:4 * c + 4]) for c in range(4))
        state = bytes(x ^ y for x, y in zip(shifted, round_keys[r]))
    return state


def aes_ctr_keystream(key: bytes, nonce: bytes, n_bytes: int) -> bytes:
    """Keystream of AES in CTR mode with a 16-byte big-endian counter block."""
    if len(nonce) != 16:
        raise ValueError("CTR initial counter block must be 16 bytes")
    counter = int.from_bytes(nonce, "big")
    out = bytearray()
    while len(out) < n_bytes:
        out.extend(aes_encrypt_block(key, counter.to_bytes(16, "big")))
        counter = (counter + 1) % (1 << 128)
    return bytes(out[:n_bytes])
