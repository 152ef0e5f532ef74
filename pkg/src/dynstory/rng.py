"""Deterministic counter-based random number generator.

Every random quantity in the package flows through :class:`SeededRng`.  The
generator is a pure function of (seed, counter), so a stream can be resumed
exactly by storing the counter, and per-sample streams can be forked without
touching the parent.  The integer stream is bit-exact across platforms: it is
plain 64-bit modular arithmetic (splitmix64 finalizer over seed + i * gamma).
"""

from __future__ import annotations

import math

import numpy as np

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_FORK_SALT = 0xB5297A4D3C2A7E41

# float64 has 53 mantissa bits; top 53 bits of a u64 give a uniform in [0, 1)
_INV_2_53 = 1.0 / (1 << 53)

_U64_GAMMA = np.uint64(_GAMMA)
_U64_C1 = np.uint64(0xBF58476D1CE4E5B9)
_U64_C2 = np.uint64(0x94D049BB133111EB)


def _mix64(x: int) -> int:
    """splitmix64 finalizer on a python int (always reduced mod 2^64)."""
    x &= _MASK64
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    x = (x ^ (x >> 27)) * 0x94D049BB133111EB & _MASK64
    return x ^ (x >> 31)


def _mix64_block(x: np.ndarray) -> np.ndarray:
    """Vectorized splitmix64 finalizer; x is a uint64 array (wraps mod 2^64)."""
    with np.errstate(over="ignore"):
        x = (x ^ (x >> np.uint64(30))) * _U64_C1
        x = (x ^ (x >> np.uint64(27))) * _U64_C2
        return x ^ (x >> np.uint64(31))


class SeededRng:
    """Counter-based generator: output(i) = mix(seed + (i + 1) * gamma).

    Identical (seed, counter) always reproduce the identical stream, whether
    values are drawn one at a time or in vectorized blocks.
    """

    def __init__(self, seed: int, counter: int = 0):
        self.seed = seed & _MASK64
        self.counter = counter

    def __repr__(self):
        return f"SeededRng(seed={self.seed:#x}, counter={self.counter})"

    def fork(self, tag: int | str) -> "SeededRng":
        """Derive an independent stream; does not advance this one."""
        if isinstance(tag, str):
            tag = int.from_bytes(tag.encode("utf-8")[:8].ljust(8, b"\0"), "little")
        return SeededRng(_mix64(self.seed ^ _mix64((tag ^ _FORK_SALT) & _MASK64)))

    # integer stream ------------------------------------------------------

    def next_u64(self) -> int:
        v = _mix64((self.seed + (self.counter + 1) * _GAMMA) & _MASK64)
        self.counter += 1
        return v

    def u64_block(self, n: int) -> np.ndarray:
        """n consecutive stream values as uint64; advances the counter by n."""
        idx = np.arange(self.counter + 1, self.counter + n + 1, dtype=np.uint64)
        with np.errstate(over="ignore"):
            state = np.uint64(self.seed) + idx * _U64_GAMMA
        self.counter += n
        return _mix64_block(state)

    def randint(self, bound: int) -> int:
        """Integer in [0, bound) via multiply-shift (bias < bound / 2^64)."""
        if bound <= 0:
            raise ValueError(f"randint bound must be positive, got {bound}")
        return (self.next_u64() * bound) >> 64

    def randint_block(self, bound: int, n: int) -> np.ndarray:
        if bound <= 0:
            raise ValueError(f"randint bound must be positive, got {bound}")
        vals = self.u64_block(n)
        # multiply-shift in object space to avoid 128-bit overflow
        return np.array([(int(v) * bound) >> 64 for v in vals], dtype=np.int64)

    def permutation(self, n: int) -> np.ndarray:
        """Fisher-Yates shuffle of range(n)."""
        out = np.arange(n)
        for i in range(n - 1, 0, -1):
            j = self.randint(i + 1)
            out[i], out[j] = out[j], out[i]
        return out

    # float streams -------------------------------------------------------

    def uniform(self, shape=None, lo: float = 0.0, hi: float = 1.0):
        """Uniform floats in [lo, hi); scalar when shape is None."""
        if shape is None:
            u = (self.next_u64() >> 11) * _INV_2_53
            return lo + (hi - lo) * u
        n = int(np.prod(shape))
        u = (self.u64_block(n) >> np.uint64(11)).astype(np.float64) * _INV_2_53
        return (lo + (hi - lo) * u).reshape(shape)

    def normal(self, shape=None):
        """Standard normals via Box-Muller (cosine branch only)."""
        if shape is None:
            return float(self.normal((1,))[0])
        n = int(np.prod(shape))
        u1 = np.maximum(self.uniform((n,)), 1e-300)
        u2 = self.uniform((n,))
        z = np.sqrt(-2.0 * np.log(u1)) * np.cos(2.0 * math.pi * u2)
        return z.reshape(shape)

    def gumbel(self, shape=None):
        """Standard Gumbel draws z = -log(-log(u)), u clamped into (0, 1)."""
        if shape is None:
            return float(self.gumbel((1,))[0])
        u = np.clip(self.uniform(shape), 1e-12, 1.0 - 1e-12)
        return -np.log(-np.log(u))
