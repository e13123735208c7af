"""SHA-256 and SHA-512 (FIPS 180-4)."""

from __future__ import annotations


def _first_primes(count: int) -> list[int]:
    primes: list[int] = []
    n = 2
    while len(primes) < count:
        if all(n % p for p in primes if p * p <= n):
            primes.append(n)
        n += 1
    return primes


def _frac_root_bits(p: int, root: int, bits: int) -> int:
    """First ``bits`` bits of the fractional part of p**(1/root), exactly."""
    scaled = p << (root * bits)
    # Integer Newton from an over-estimate decreases monotonically to the floor root.
    x = 1 << (scaled.bit_length() // root + 1)
    while True:
        y = ((root - 1) * x + scaled // x ** (root - 1)) // root
        if y >= x:
            break
        x = y
    return x & ((1 << bits) - 1)


_PRIMES = _first_primes(80)
_K256 = tuple(_frac_root_bits(p, 3, 32) for p in _PRIMES[:64])
_H256 = tuple(_frac_root_bits(p, 2, 32) for p in _PRIMES[:8])
_K512 = tuple(_frac_root_bits(p, 3, 64) for p in _PRIMES)
_H512 = tuple(_frac_root_bits(p, 2, 64) for p in _PRIMES[:8])

# (word bits, rounds, Sigma0, Sigma1, sigma0, sigma1) where sigma shifts end with a plain shift.
_PARAMS = {
    256: (32, 64, (2, 13, 22), (6, 11, 25), (7, 18, 3), (17, 19, 10)),
    512: (64, 80, (28, 34, 39), (14, 18, 41), (1, 8, 7), (19, 61, 6)),
}


def _pad(msg: bytes, block_bytes: int, length_bytes: int) -> bytes:
    padded = bytearray(msg) + b"\x80"
    padded.extend(b"\x00" * (-(len(padded) + length_bytes) % block_bytes))
    padded.extend((8 * len(msg)).to_bytes(length_bytes, "big"))
    return bytes(padded)


def sha2(msg: bytes, variant: int = 256) -> bytes:
    if variant not in _PARAMS:
        raise ValueError(f"unsupported SHA2 variant {variant}")
    w_bits, rounds, big0, big1, small0, small1 = _PARAMS[variant]
    k, h = (_K256, list(_H256)) if variant == 256 else (_K512, list(_H512))
    mask = (1 << w_bits) - 1
    wb = w_bits // 8

    def rotr(x: int, r: int) -> int:
        return ((x >> r) | (x << (w_bits - r))) & mask

    block = 16 * wb
    data = _pad(msg, block, 2 * wb)
    for off in range(0, len(data), block):
        w = [int.from_bytes(data[off + i * wb:off + (i + 1) * wb], "big") for i in range(16)]
        for t in range(16, rounds):
            s0 = rotr(w[t - 15], small0[0]) ^ rotr(w[t - 15], small0[1]) ^ (w[t - 15] >> small0[2])
            s1 = rotr(w[t - 2], small1[0]) ^ rotr(w[t - 2], small1[1]) ^ (w[t - 2] >> small1[2])
            w.append((w[t - 16] + s0 + w[t - 7] + s1) & mask)
        a, b, c, d, e, f, g, hh = h
        for t in range(rounds):
            t1 = (hh + (rotr(e, big1[0]) ^ rotr(e, big1[1]) ^ rotr(e, big1[2]))
                  + ((e & f) ^ (~e & g)) + k[t] + w[t]) & mask
            t2 = ((rotr(a, big0[0]) ^ rotr(a, big0[1]) ^ rotr(a, big0[2]))
                  + ((a & b) ^ (a & c) ^ (b & c))) & mask
            a, b, c, d, e, f, g, hh = (t1 + t2) & mask, a, b, c, (d + t1) & mask, e, f, g
        h = [(x + y) & mask for x, y in zip(h, (a, b, c, d, e, f, g, hh))]
    return b"".join(x.to_bytes(wb, "big") for x in h)

