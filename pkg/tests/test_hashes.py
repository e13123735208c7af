import hashlib
import random

import pytest
from Crypto.Hash import cSHAKE128, cSHAKE256
from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes
from hypothesis import given
from hypothesis import strategies as st

from pqcost.hashes import (
    aes_ctr_keystream, aes_encrypt_block, bytepad, cshake, encode_string, keccak_f1600, left_encode,
    permutation_calls, right_encode, sha2, sha3, shake, threebears_hash,
)
from pqcost.hashes.aes import SBOX

# Published values, pinned literally.
SHA3_256_EMPTY = "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a"
SHAKE128_EMPTY_PREFIX = "7f9c2ba4e88f827d616045507605853e"
SHA256_EMPTY = "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
SHA512_EMPTY = ("cf83e1357eefb8bdf1542850d66d8007d620e4050b5715dc83f4a921d36ce9ce"
                "47d0d13c5d85f2b0ff8318d2877eec2f63b931bd47417a81a538327af927da3e")
SHA256_ABC = "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
KECCAK_ZERO_LANES = (0xF1258F7940E1DDE7, 0x84D5CCF933C0478A, 0xD598261EA65AA9EE, 0xBD1547306F80494D)
AES128_C1 = ("000102030405060708090a0b0c0d0e0f", "00112233445566778899aabbccddeeff",
             "69c4e0d86a7b0430d8cdb78070b4c55a")
AES256_C3 = ("000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f",
             "00112233445566778899aabbccddeeff", "8ea2b7ca516745bfeafc49904b496089")
CSHAKE128_SAMPLE = "c1c36925b6409a04f1b504fcbca9d82b4017277cb5ed2b2065fc1d3814d5aaf5"
CSHAKE256_SAMPLE = ("d008828e2b80ac9d2218ffee1d070c48b8e4c87bff32c9699d5b6896eee0edd1"
                    "64020e2be0560858d9c00c037e34a96937c561a74c412bb4c746469527281c8c")
# Repo-local goldens for the ThreeBears framing.
THREEBEARS_GOLDEN = {
    (0, b"", 256, b""): "95466d2dc60b7628fce304886f78f44803a126bf0d63c89674d6aa9a437e3f4d",
    (2, b"abc", 512, b"\x01\x02"): (
        "09c8a8669bece36b7c7ded6ce80a485896e17894d5ca582d030fc5e9caf63ca9"
        "9209d6e40ff4f7d9a5a6eee939ba98364efeb2c82ddb09378e13056350f3f8dc"),
}

messages = st.binary(max_size=400)


def test_keccak_zero_state_lanes():
    out = keccak_f1600([0] * 25)
    assert tuple(out[:4]) == KECCAK_ZERO_LANES


def test_keccak_is_not_an_involution_and_is_pure():
    once = keccak_f1600([0] * 25)
    assert keccak_f1600(once) != [0] * 25
    assert keccak_f1600([0] * 25) == once
    with pytest.raises(ValueError):
        keccak_f1600([0] * 24)


def test_pinned_digests():
    assert sha3(b"", 256).hex() == SHA3_256_EMPTY
    assert shake(b"", 128, 256).hex()[:32] == SHAKE128_EMPTY_PREFIX
    assert sha2(b"", 256).hex() == SHA256_EMPTY
    assert sha2(b"", 512).hex() == SHA512_EMPTY
    assert sha2(b"abc", 256).hex() == SHA256_ABC


def test_sha2_sensitivity():
    assert sha2(b"a", 256) != sha2(b"ab", 256)
    assert sha2(b"a", 512) != sha2(b"ab", 512)


def test_cshake_sample_vectors():
    msg = bytes.fromhex("00010203")
    assert cshake(msg, 128, 256, b"", b"Email Signature").hex() == CSHAKE128_SAMPLE
    assert cshake(msg, 256, 512, b"", b"Email Signature").hex() == CSHAKE256_SAMPLE


def test_cshake_empty_strings_is_shake():
    assert cshake(b"", 256, 256) == shake(b"", 256, 256)
    rng = random.Random("cshake-eq")
    for _ in range(50):
        msg = bytes(rng.getrandbits(8) for _ in range(rng.randrange(300)))
        variant = rng.choice((128, 256))
        assert cshake(msg, variant, 512, b"", b"") == shake(msg, variant, 512)


def test_encodings():
    assert left_encode(0) == b"\x01\x00"
    assert right_encode(0) == b"\x00\x01"
    assert left_encode(256) == b"\x02\x01\x00"
    assert encode_string(b"") == b"\x01\x00"
    assert len(bytepad(b"abc", 136)) == 136


@given(messages, st.sampled_from([256, 512]))
def test_sha3_and_sha2_match_hashlib(msg, variant):
    assert sha3(msg, variant) == hashlib.new(f"sha3_{variant}", msg).digest()
    assert sha2(msg, variant) == hashlib.new(f"sha{variant}", msg).digest()


@given(messages, st.sampled_from([128, 256]), st.integers(1, 400))
def test_shake_matches_hashlib(msg, variant, out_bytes):
    assert shake(msg, variant, 8 * out_bytes) == hashlib.new(f"shake_{variant}", msg).digest(out_bytes)


@given(messages, st.binary(max_size=40), st.binary(max_size=40), st.sampled_from([128, 256]))
def test_cshake_matches_pycryptodome(msg, n, s, variant):
    impl = cSHAKE128 if variant == 128 else cSHAKE256
    if n:
        # pycryptodome's public constructor fixes N to empty.
        return
    assert cshake(msg, variant, 256, n, s) == impl.new(data=msg, custom=s).read(32)


def test_threebears_goldens_and_cross_check():
    for (purpose, data, bits, pblock), expected in THREEBEARS_GOLDEN.items():
        out = threebears_hash(purpose, data, bits, pblock)
        assert out.hex() == expected
        framed = pblock + bytes([0, purpose]) + data
        assert out == cSHAKE256.new(data=framed, custom=b"ThreeBears").read(bits // 8)
    with pytest.raises(ValueError):
        threebears_hash(256, b"")


def test_keccak_functions_share_one_permutation():
    before = permutation_calls()
    sha3(b"x" * 200, 256)  # 200 bytes at rate 136: two absorbs
    shake(b"", 128, 8 * 168 * 3)  # three squeezed blocks
    cshake(b"", 256, 256, b"", b"S")  # prefix block + message block
    assert permutation_calls() - before == 2 + 3 + 2


def test_aes_fips197_appendix():
    for key, pt, ct in (AES128_C1, AES256_C3):
        assert aes_encrypt_block(bytes.fromhex(key), bytes.fromhex(pt)).hex() == ct


def test_aes_sbox_fixed_points():
    assert (SBOX[0x00], SBOX[0x01], SBOX[0x53]) == (0x63, 0x7C, 0xED)


def test_aes_distinct_blocks_distinct_outputs():
    key = bytes(16)
    assert aes_encrypt_block(key, bytes(16)) != aes_encrypt_block(key, b"\x01" + bytes(15))
    with pytest.raises(ValueError):
        aes_encrypt_block(bytes(24), bytes(16))


@given(st.sampled_from([16, 32]).flatmap(lambda k: st.binary(min_size=k, max_size=k)),
       st.binary(min_size=16, max_size=16))
def test_aes_matches_cryptography(key, block):
    enc = Cipher(algorithms.AES(key), modes.ECB()).encryptor()
    assert aes_encrypt_block(key, block) == enc.update(block) + enc.finalize()


@given(st.binary(min_size=32, max_size=32), st.binary(min_size=16, max_size=16), st.integers(0, 100))
def test_aes_ctr_matches_cryptography(key, nonce, n):
    enc = Cipher(algorithms.AES(key), modes.CTR(nonce)).encryptor()
    assert aes_ctr_keystream(key, nonce, n) == enc.update(bytes(n))
