"""Reproducible rank-deficient test matrices.

Random numbers come from xoshiro256** seeded through splitmix64, written
out here in full so a given seed yields the same stream on every platform.
A uniform double in [-1, 1) is ``2 * (x >> 11) * 2**-53 - 1`` for each
64-bit output ``x``.

A family member is ``G = B C / max|B C|`` where ``B`` (m x rank) and
``C`` (rank x n) are filled row by row from one stream, ``B`` first.
"""

from dataclasses import dataclass

import numpy as np

from . import dense
from .exceptions import SpecError

__all__ = [
    "Xoshiro256",
    "uniform_stream",
    "uniform_array",
    "MatrixFamilySpec",
    "random_rank_deficient",
    "null_space_vectors",
]

_MASK = 0xFFFFFFFFFFFFFFFF
_TWO_53 = 1.0 / 9007199254740992.0


def _splitmix64(state):
    state = (state + 0x9E3779B97F4A7C15) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return state, z ^ (z >> 31)


class Xoshiro256:
    """xoshiro256** generator. Not thread-safe; use one per thread."""

    def __init__(self, seed):
        if not isinstance(seed, int) or not 0 <= seed <= _MASK:
            raise SpecError(f"seed must be an unsigned 64-bit integer, got {seed!r}")
        sm = seed
        s = []
        for _ in range(4):
            sm, word = _splitmix64(sm)
            s.append(word)
        self._s = s

    def next_u64(self):
        s0, s1, s2, s3 = self._s
        x = (s1 * 5) & _MASK
        result = ((((x << 7) | (x >> 57)) & _MASK) * 9) & _MASK
        t = (s1 << 17) & _MASK
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = ((s3 << 45) | (s3 >> 19)) & _MASK
        self._s = [s0, s1, s2, s3]
        return result

    def uniform(self):
        """Next value in [-1, 1)."""
        return 2.0 * ((self.next_u64() >> 11) * _TWO_53) - 1.0

    def fill(self, count):
        # Inlined copy of next_u64/uniform; this loop dominates matrix generation.
        s0, s1, s2, s3 = self._s
        out = [0.0] * count
        mask = _MASK
        for k in range(count):
            x = (s1 * 5) & mask
            r = ((((x << 7) | (x >> 57)) & mask) * 9) & mask
            t = (s1 << 17) & mask
            s2 ^= s0
            s3 ^= s1
            s1 ^= s2
            s0 ^= s3
            s2 ^= t
            s3 = ((s3 << 45) | (s3 >> 19)) & mask
            out[k] = 2.0 * ((r >> 11) * _TWO_53) - 1.0
        self._s = [s0, s1, s2, s3]
        return np.array(out)


def uniform_stream(seed):
    """Endless iterator of uniforms in [-1, 1) for ``seed``."""
    rng = Xoshiro256(seed)
    while True:
        yield rng.uniform()


def uniform_array(seed, count):
    """The first ``count`` values of ``uniform_stream(seed)`` as an array."""
    return Xoshiro256(seed).fill(count)


@dataclass(frozen=True)
class MatrixFamilySpec:
    """Size, rank and seed of one test matrix.

    ``m`` defaults to ``2n`` and ``rank`` to ``7n // 8`` (at least 1).
    """

    n: int
    m: int | None = None
    rank: int | None = None
    seed: int = 0

    def __post_init__(self):
        for name in ("n", "m", "rank", "seed"):
            value = getattr(self, name)
            if value is not None and (isinstance(value, bool) or not isinstance(value, (int, np.integer))):
                raise SpecError(f"{name} must be an integer, got {value!r}")
        if self.n < 1:
            raise SpecError(f"n must be >= 1, got {self.n}")
        if self.m is None:
            object.__setattr__(self, "m", 2 * self.n)
        if self.rank is None:
            object.__setattr__(self, "rank", max(1, 7 * self.n // 8))
        if self.m < 1:
            raise SpecError(f"m must be >= 1, got {self.m}")
        if not 1 <= self.rank <= min(self.m, self.n):
            raise SpecError(
                f"rank must lie in [1, min(m, n)] = [1, {min(self.m, self.n)}], got {self.rank}"
            )
        if not 0 <= self.seed <= _MASK:
            raise SpecError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


def random_rank_deficient(spec):
    """Return ``(g, b, c)`` with ``g = b @ c / max|b @ c|`` of rank ``spec.rank``.

    ``b`` and ``c`` are returned unscaled; any ``z`` with ``c @ z = 0`` is a
    null vector of ``g``.
    """
    m, n, r = spec.m, spec.n, spec.rank
    values = uniform_array(int(spec.seed), m * r + r * n)
    b = values[: m * r].reshape(m, r)
    c = values[m * r:].reshape(r, n)
    g = b @ c
    g /= dense.max_abs(g)
    return g, b, c


def null_space_vectors(c, count, seed=0):
    """``count`` vectors spanning part of the kernel of full-row-rank ``c``.

    Random vectors are projected with ``I - C' (C C')^-1 C``.  Returned as the
    columns of an ``n x count`` matrix.
    """
    c = np.asarray(c, dtype=np.float64)
    r, n = c.shape
    if r >= n:
        raise SpecError(f"c of shape {c.shape} has a trivial kernel")
    z = uniform_array(seed, n * count).reshape(n, count)
    inner = dense.spd_inverse(dense.gram(c, "right"))
    z = z - c.T @ (inner @ (c @ z))
    # second projection pass mops up rounding left by the first
    z = z - c.T @ (inner @ (c @ z))
    return z
