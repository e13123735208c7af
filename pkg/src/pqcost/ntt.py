"""Negacyclic number-theoretic transform over Z_q[x] / (x^n + 1)."""

from __future__ import annotations

from dataclasses import dataclass

from .multipliers import Method, multiply_cycles


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class NttParams:
    """``root`` is a primitive 2n-th root of unity mod the prime ``q``."""

    n: int
    q: int
    root: int

    def __post_init__(self) -> None:
        n, q, root = self.n, self.q, self.root
        if n < 1 or n & (n - 1):
            raise ValueError(f"n must be a power of two, got {n}")
        if not is_prime(q):
            raise ValueError(f"q={q} is not prime")
        if (q - 1) % (2 * n):
            raise ValueError(f"q={q} is not NTT-friendly for n={n}: need q = 1 mod {2 * n}")
        if not 0 < root < q or pow(root, n, q) != q - 1:
            raise ValueError(f"root={root} is not a primitive {2 * n}-th root of unity mod {q}")

    @property
    def log_n(self) -> int:
        return self.n.bit_length() - 1


def find_ntt_params(n: int, q: int) -> NttParams:
    """Smallest primitive 2n-th root of unity mod ``q``."""
    if n < 1 or n & (n - 1):
        raise ValueError(f"n must be a power of two, got {n}")
    if not is_prime(q) or (q - 1) % (2 * n):
        raise ValueError(f"q={q} is not an NTT-friendly prime for n={n}")
    exponent = (q - 1) // (2 * n)
    for g in range(2, q):
        psi = pow(g, exponent, q)
        if pow(psi, n, q) == q - 1:
            return NttParams(n, q, psi)
    raise ValueError(f"no primitive {2 * n}-th root of unity mod {q}")


def _bit_reverse(values: list[int], log_n: int) -> list[int]:
    out = [0] * len(values)
    for i, v in enumerate(values):
        out[int(format(i, f"0{log_n}b")[::-1], 2) if log_n else 0] = v
    return out


def _cyclic_ntt(values: list[int], omega: int, q: int, log_n: int) -> list[int]:
    a = _bit_reverse(values, log_n)
    n = len(a)
    length = 2
    while length <= n:
        w_len = pow(omega, n // length, q)
        half = length // 2
        for start in range(0, n, length):
            w = 1
            for j in range(start, start + half):
                u, v = a[j], a[j + half] * w % q
                a[j] = (u + v) % q
                a[j + half] = (u - v) % q
                w = w * w_len % q
        length *= 2
    return a


def _check(values: list[int], params: NttParams, label: str) -> None:
    if len(values) != params.n:
        raise ValueError(f"{label} has length {len(values)}, expected n={params.n}")
    for i, v in enumerate(values):
        if not 0 <= v < params.q:
            raise ValueError(f"{label}[{i}]={v} is not a residue mod {params.q}")


def ntt_forward(coeffs: list[int], params: NttParams) -> list[int]:
    """Evaluations of the polynomial at root**(2k+1), k = 0..n-1, in natural order."""
    _check(coeffs, params, "coeffs")
    q, psi = params.q, params.root
    twisted = [c * pow(psi, i, q) % q for i, c in enumerate(coeffs)]
    return _cyclic_ntt(twisted, psi * psi % q, q, params.log_n)


def ntt_inverse(points: list[int], params: NttParams) -> list[int]:
    _check(points, params, "points")
    q, n = params.q, params.n
    psi_inv = pow(params.root, -1, q)
    values = _cyclic_ntt(list(points), psi_inv * psi_inv % q, q, params.log_n)
    n_inv = pow(n, -1, q)
    return [v * n_inv % q * pow(psi_inv, i, q) % q for i, v in enumerate(values)]


def ntt_polynomial_multiply(
    a_coeffs: list[int], b_coeffs: list[int], params: NttParams, m: int | None = None
) -> tuple[list[int], int]:
    """Negacyclic product a * b mod (x^n + 1, q) and its cycle charge.

    ``m`` in the ``2m + 2 log2(n)`` cycle formula defaults to the coefficient
    count ``n``; pass it explicitly to use a bit width instead.
    """
    a_hat = ntt_forward(a_coeffs, params)
    b_hat = ntt_forward(b_coeffs, params)
    q = params.q
    product = ntt_inverse([x * y % q for x, y in zip(a_hat, b_hat)], params)
    cycles = multiply_cycles(Method.NTT, params.n if m is None else m, points=params.n)
    return product, cycles
