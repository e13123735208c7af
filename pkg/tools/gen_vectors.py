"""Regenerate the bundled ``.rsp`` vector files from independent implementations.

Digests come from CPython's hashlib, cSHAKE from pycryptodome and AES from
the ``cryptography`` package, never from the code under test.  The FIPS-197
appendix inputs and the cSHAKE sample inputs come first in their files; the
unit tests pin their published outputs independently.

    python tools/gen_vectors.py src/pqcost/data/vectors
"""

from __future__ import annotations

import hashlib
import random
import sys
from pathlib import Path

from Crypto.Hash import cSHAKE128, cSHAKE256
from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes

# Lengths straddle every rate and block boundary used by the cores.
MSG_LENGTHS = [0, 1, 3, 55, 56, 63, 64, 65, 71, 72, 73, 103, 104, 111, 112, 127,
               128, 129, 135, 136, 137, 167, 168, 169, 200, 255, 300]
XOF_OUTPUT_BITS = [8, 128, 256, 768, 1344, 1600, 2496]


def messages(tag: str) -> list[bytes]:
    rng = random.Random(f"vectors:{tag}")
    return [bytes(rng.getrandbits(8) for _ in range(n)) for n in MSG_LENGTHS] + [b"abc"]


def msg_lines(msg: bytes) -> list[str]:
    return [f"Len = {8 * len(msg)}", f"Msg = {msg.hex() if msg else '00'}"]


def header(title: str, source: str) -> list[str]:
    return [f"#  {title}", f"#  Expected values computed with {source}", ""]


def digest_file(title: str, name: str, bits: int) -> str:
    lines = header(title, f"hashlib.{name}") + [f"[L = {bits // 8}]", ""]
    for msg in messages(name):
        lines += msg_lines(msg) + [f"MD = {hashlib.new(name, msg).hexdigest()}", ""]
    return "\n".join(lines)


def shake_file(title: str, name: str) -> str:
    lines = header(title, f"hashlib.{name}")
    for count, msg in enumerate(messages(name)):
        bits = XOF_OUTPUT_BITS[count % len(XOF_OUTPUT_BITS)] if count else 256
        out = hashlib.new(name, msg).hexdigest(bits // 8)
        lines += [f"COUNT = {count}", f"Outputlen = {bits}"] + msg_lines(msg) + [f"Output = {out}", ""]
    return "\n".join(lines)


def cshake_file(title: str, variant: int) -> str:
    impl = cSHAKE128 if variant == 128 else cSHAKE256
    lines = header(title, f"Crypto.Hash.cSHAKE{variant} (N is empty throughout)")
    # NIST SP 800-185 sample vectors.
    sample_msgs = [bytes.fromhex("00010203"), bytes(range(200))]
    customs = [b"", b"Email Signature", b"ThreeBears", b"\x00\x01purpose"]
    count = 0
    for msg in sample_msgs + messages(f"cshake{variant}")[::3]:
        for s in customs:
            bits = 256 if variant == 128 else 512
            out = impl.new(data=msg, custom=s).read(bits // 8).hex()
            lines += [f"COUNT = {count}", f"Outputlen = {bits}"] + msg_lines(msg)
            lines += ["N = ", f"S = {s.hex()}", f"Output = {out}", ""]
            count += 1
    return "\n".join(lines)


def aes_file(title: str, key_bytes: int) -> str:
    lines = header(title, "cryptography (AES-ECB single block)") + ["[ENCRYPT]", ""]
    pt = bytes.fromhex("00112233445566778899aabbccddeeff")
    pairs = [(bytes(range(key_bytes)), pt)]
    rng = random.Random(f"aes{key_bytes}")
    for _ in range(24):
        pairs.append((bytes(rng.getrandbits(8) for _ in range(key_bytes)),
                      bytes(rng.getrandbits(8) for _ in range(16))))
    pairs.append((bytes(key_bytes), bytes(16)))
    for count, (key, block) in enumerate(pairs):
        enc = Cipher(algorithms.AES(key), modes.ECB()).encryptor()
        ct = enc.update(block) + enc.finalize()
        lines += [f"COUNT = {count}", f"KEY = {key.hex()}", f"PLAINTEXT = {block.hex()}",
                  f"CIPHERTEXT = {ct.hex()}", ""]
    return "\n".join(lines)


def main(out_dir: str) -> None:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files = {
        "SHA256.rsp": digest_file("SHA-256 byte-oriented messages", "sha256", 256),
        "SHA512.rsp": digest_file("SHA-512 byte-oriented messages", "sha512", 512),
        "SHA3_256.rsp": digest_file("SHA3-256 byte-oriented messages", "sha3_256", 256),
        "SHA3_512.rsp": digest_file("SHA3-512 byte-oriented messages", "sha3_512", 512),
        "SHAKE128.rsp": shake_file("SHAKE128 variable output", "shake_128"),
        "SHAKE256.rsp": shake_file("SHAKE256 variable output", "shake_256"),
        "cSHAKE128.rsp": cshake_file("cSHAKE128 with customization strings", 128),
        "cSHAKE256.rsp": cshake_file("cSHAKE256 with customization strings", 256),
        "AES128.rsp": aes_file("AES-128 encrypt, FIPS-197 C.1 first", 16),
        "AES256.rsp": aes_file("AES-256 encrypt, FIPS-197 C.3 first", 32),
    }
    for name, text in files.items():
        (out / name).write_text(text)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/pqcost/data/vectors")
