"""Hash, XOF and block-cipher cores with their cycle models."""

from .aes import aes_ctr_keystream, aes_encrypt_block
from .cycles import (
    CORE_PARAMETERS,
    HashCoreSpec,
    HashCycleBreakdown,
    HashFunction,
    hash_cycle_breakdown,
    hash_cycles,
    squeeze_invocations,
)
from .keccak import (
    bytepad,
    cshake,
    encode_string,
    keccak_f1600,
    left_encode,
    permutation_calls,
    right_encode,
    sha3,
    shake,
    sponge,
    threebears_hash,
)
from .sha2 import sha2

__all__ = [
    "CORE_PARAMETERS",
    "HashCoreSpec",
    "HashCycleBreakdown",
    "HashFunction",
    "aes_ctr_keystream",
    "aes_encrypt_block",
    "bytepad",
    "cshake",
    "encode_string",
    "hash_cycle_breakdown",
    "hash_cycles",
    "keccak_f1600",
    "left_encode",
    "permutation_calls",
    "right_encode",
    "sha2",
    "sha3",
    "shake",
    "sponge",
    "squeeze_invocations",
    "threebears_hash",
]
