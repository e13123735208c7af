import pytest
from hypothesis import given
from hypothesis import strategies as st

from pqcost.hashes import (
    HashCoreSpec, HashFunction, cshake, hash_cycle_breakdown, hash_cycles, permutation_calls, sha2, sha3,
    shake, squeeze_invocations,
)
from pqcost.hashes.cycles import padded_blocks


def spec(name, out=None, **kw):
    return HashCoreSpec.for_function(name, out, **kw)


def test_rates_and_rounds():
    assert spec("SHAKE-128", 256).rate_bits == 1344
    assert spec("SHAKE-256", 256).rate_bits == spec("cSHAKE-256", 256).rate_bits == 1088
    assert spec("SHA3-256").rate_bits == 1088 and spec("SHA3-512").rate_bits == 576
    assert spec("SHA3-256").rounds_per_block == 24
    assert spec("SHA2-256").rounds_per_block == 64 and spec("SHA2-512").rounds_per_block == 80


def test_spec_validation():
    with pytest.raises(ValueError):
        HashCoreSpec(HashFunction.SHAKE_128, 1088, 24, 256)
    with pytest.raises(ValueError):
        spec("SHAKE-256")
    with pytest.raises(ValueError):
        spec("SHA3-256", 512)
    with pytest.raises(ValueError):
        spec("SHAKE-256", 256, S=b"x")
    with pytest.raises(ValueError):
        HashFunction.parse("MD5")


def test_frodo_squeeze_ratio():
    s = spec("SHAKE-256", 1024)
    assert squeeze_invocations(s, 344064) == 336
    assert hash_cycle_breakdown(s, 256, 344064).squeeze_invocations == 336


def test_empty_sha3_cycles():
    b = hash_cycle_breakdown(spec("SHA3-256"), 0, 256)
    assert (b.read_cycles, b.blocks, b.round_cycles, b.squeeze_cycles, b.total) == (0, 1, 24, 0, 24)


def test_aes_block_cycles():
    assert hash_cycles(spec("AES-128"), 128, 128) == 12
    assert hash_cycles(spec("AES-256"), 0, 128) == 46
    assert hash_cycles(spec("AES-256"), 0, 256) == 92


def test_sha2_padding_boundary():
    s = spec("SHA2-256")
    assert padded_blocks(s, 447) == 1 and padded_blocks(s, 448) == 2


def test_cshake_prefix_adds_a_block():
    plain = spec("cSHAKE-128", 256)
    custom = spec("cSHAKE-128", 256, S=b"ThreeBears")
    assert padded_blocks(custom, 0) == padded_blocks(plain, 0) + 1


def test_bad_arguments():
    with pytest.raises(ValueError):
        hash_cycles(spec("SHA3-256"), -1, 256)
    with pytest.raises(ValueError):
        hash_cycles(spec("SHA3-256"), 0, 0)


@given(st.binary(max_size=700), st.sampled_from(["SHA3-256", "SHA3-512", "SHAKE-128", "SHAKE-256"]))
def test_block_count_matches_permutation_calls(msg, name):
    """Padded-block model agrees with the absorb count of the real sponge."""
    s = spec(name, 8 if name.startswith("SHAKE") else None)
    before = permutation_calls()
    if name.startswith("SHA3"):
        sha3(msg, int(name[-3:]))
    else:
        shake(msg, int(name[-3:]), 8)
    assert permutation_calls() - before == padded_blocks(s, 8 * len(msg))


@given(st.binary(max_size=400), st.binary(min_size=1, max_size=30))
def test_cshake_block_count_matches_permutation_calls(msg, custom):
    s = spec("cSHAKE-256", 8, S=custom)
    before = permutation_calls()
    cshake(msg, 256, 8, b"", custom)
    assert permutation_calls() - before == padded_blocks(s, 8 * len(msg))


@given(st.integers(0, 300))
def test_sha2_block_count_matches_real_padding(n_bytes):
    assert padded_blocks(spec("SHA2-256"), 8 * n_bytes) == (n_bytes + 9 + 63) // 64
    assert padded_blocks(spec("SHA2-512"), 8 * n_bytes) == (n_bytes + 17 + 127) // 128
    assert len(sha2(bytes(n_bytes), 256)) == 32


@given(st.sampled_from(list(HashFunction)), st.integers(0, 5000), st.integers(0, 5000),
       st.integers(1, 5000), st.integers(0, 5000))
def test_cycles_monotone(fn, msg, dmsg, out, dout):
    s = spec(fn, 512 if fn.is_xof else None)
    assert hash_cycles(s, msg + dmsg, out) >= hash_cycles(s, msg, out)
    assert hash_cycles(s, msg, out + dout) >= hash_cycles(s, msg, out)
