"""Counter-based deterministic randomness.

Every draw is a pure function of (seed, purpose label, integer/tuple indices),
so any single value — a payload symbol, a precoder retry, one combination
coefficient — can be regenerated in isolation and in any order.  Draws are
hashes, not a stream: interleaving or parallelising consumers cannot shift
anyone else's values.
"""

import hashlib


def _encode(parts):
    out = []
    for p in parts:
        if isinstance(p, tuple):
            out.append("(" + ",".join(str(x) for x in p) + ")")
        else:
            out.append(str(p))
    return "|".join(out).encode("ascii")


class CounterRng:
    """Keyed generator of field elements over GF(prime).

    Values come from 128-bit BLAKE2b digests reduced mod prime; for the
    default 61-bit prime the reduction bias is < 2^-67.
    """

    def __init__(self, seed: int, prime: int):
        self.seed = seed
        self.prime = prime

    def field(self, purpose: str, *indices) -> int:
        """Uniform element of [0, prime)."""
        digest = hashlib.blake2b(
            _encode((self.seed, purpose) + indices), digest_size=16
        ).digest()
        return int.from_bytes(digest, "big") % self.prime

    def nonzero(self, purpose: str, *indices) -> int:
        """Uniform element of [1, prime)."""
        bump = 0
        while True:
            v = self.field(purpose, *indices, bump)
            if v != 0:
                return v
            bump += 1

    def vector(self, purpose: str, n: int, *indices):
        return [self.field(purpose, *indices, i) for i in range(n)]

    def matrix(self, purpose: str, rows: int, cols: int, *indices):
        return [
            [self.field(purpose, *indices, i, j) for j in range(cols)]
            for i in range(rows)
        ]
