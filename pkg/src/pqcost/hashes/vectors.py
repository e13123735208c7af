"""Parser and runner for NIST response-file (``.rsp``) style test vectors.

Records are ``KEY = value`` lines separated by blank lines.  Bracketed lines
such as ``[L = 32]`` set context that applies to every following record.
Lines starting with ``#`` are comments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .aes import aes_encrypt_block
from .cycles import HashFunction
from .keccak import cshake, sha3, shake
from .sha2 import sha2


class VectorFormatError(ValueError):
    pass


def parse_rsp(text: str, source: str = "<string>") -> list[dict[str, str]]:
    records: list[dict[str, str]] = []
    context: dict[str, str] = {}
    current: dict[str, str] = {}

    def flush() -> None:
        nonlocal current
        if current:
            records.append({**context, **current})
            current = {}

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            flush()
            continue
        if line.startswith("#"):
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise VectorFormatError(f"{source}:{lineno}: unterminated header {line!r}")
            flush()
            body = line[1:-1]
            if "=" in body:
                key, value = (part.strip() for part in body.split("=", 1))
                context[key] = value
            else:
                context["section"] = body.strip()
            continue
        if "=" not in line:
            raise VectorFormatError(f"{source}:{lineno}: expected 'KEY = value', got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        current[key] = value
    flush()
    return records


def _hex(record: dict[str, str], key: str, source: str) -> bytes:
    if key not in record:
        raise VectorFormatError(f"{source}: record is missing {key}")
    try:
        return bytes.fromhex(record[key])
    except ValueError as exc:
        raise VectorFormatError(f"{source}: {key} is not hex: {record[key][:40]!r}") from exc


def _message(record: dict[str, str], source: str) -> bytes:
    msg = _hex(record, "Msg", source)
    length = int(record.get("Len", 8 * len(msg)))
    if length % 8:
        raise VectorFormatError(f"{source}: bit-granular Len={length} is not supported")
    # NIST writes the empty message as "Msg = 00" with Len = 0.
    return msg[: length // 8]


def _output_bits(record: dict[str, str], source: str) -> int:
    for key in ("Outputlen", "L"):
        if key in record:
            return int(record[key])
    raise VectorFormatError(f"{source}: record has no Outputlen")


def evaluate_record(function: HashFunction, record: dict[str, str], source: str) -> tuple[bytes, bytes]:
    """Return (expected, computed) for one record."""
    if function.is_aes:
        key = _hex(record, "KEY", source)
        want = (128 if function is HashFunction.AES_128 else 256) // 8
        if len(key) != want:
            raise VectorFormatError(f"{source}: {function.value} key must be {want} bytes")
        return _hex(record, "CIPHERTEXT", source), aes_encrypt_block(key, _hex(record, "PLAINTEXT", source))
    msg = _message(record, source)
    if function in (HashFunction.SHA2_256, HashFunction.SHA2_512):
        return _hex(record, "MD", source), sha2(msg, 256 if function is HashFunction.SHA2_256 else 512)
    if function in (HashFunction.SHA3_256, HashFunction.SHA3_512):
        return _hex(record, "MD", source), sha3(msg, 256 if function is HashFunction.SHA3_256 else 512)
    variant = 128 if function.name.endswith("128") else 256
    bits = _output_bits(record, source)
    expected = _hex(record, "Output", source)
    if function.name.startswith("SHAKE"):
        return expected, shake(msg, variant, bits)
    n = _hex(record, "N", source) if "N" in record else b""
    s = _hex(record, "S", source) if "S" in record else b""
    return expected, cshake(msg, variant, bits, n, s)


@dataclass
class VectorReport:
    path: str
    function: HashFunction
    total: int = 0
    failures: list[str] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.total > 0 and not self.failures and not self.errors


def run_vector_file(path: "str | Path", function: "HashFunction | str") -> VectorReport:
    path = Path(path)
    fn = HashFunction.parse(function)
    report = VectorReport(str(path), fn)
    try:
        records = parse_rsp(path.read_text(), path.name)
    except (OSError, UnicodeDecodeError, VectorFormatError) as exc:
        report.errors.append(f"{path}: {exc}")
        return report
    for index, record in enumerate(records):
        source = f"{path.name}#{record.get('COUNT', index)}"
        try:
            expected, computed = evaluate_record(fn, record, source)
        except (VectorFormatError, ValueError) as exc:
            report.errors.append(str(exc))
            continue
        report.total += 1
        if expected != computed:
            report.failures.append(f"{source}: expected {expected.hex()[:32]}..., got {computed.hex()[:32]}...")
    if not records:
        report.errors.append(f"{path}: no test records found")
    return report


# Bundled vector files and the function each one exercises.
VECTOR_FILES: dict[str, HashFunction] = {
    "SHA256.rsp": HashFunction.SHA2_256,
    "SHA512.rsp": HashFunction.SHA2_512,
    "SHA3_256.rsp": HashFunction.SHA3_256,
    "SHA3_512.rsp": HashFunction.SHA3_512,
    "SHAKE128.rsp": HashFunction.SHAKE_128,
    "SHAKE256.rsp": HashFunction.SHAKE_256,
    "cSHAKE128.rsp": HashFunction.CSHAKE_128,
    "cSHAKE256.rsp": HashFunction.CSHAKE_256,
    "AES128.rsp": HashFunction.AES_128,
    "AES256.rsp": HashFunction.AES_256,
}


def run_vector_suite(directory: "str | Path") -> list[VectorReport]:
    directory = Path(directory)
    reports = []
    for name, fn in VECTOR_FILES.items():
        path = directory / name
        if not path.exists():
            report = VectorReport(str(path), fn)
            report.errors.append(f"missing vector file {path}")
            reports.append(report)
            continue
        reports.append(run_vector_file(path, fn))
    return reports
