"""Deterministic 64-bit RNG used by every sampler in the package.

splitmix64 is small enough to restate in a numba kernel, which keeps the
compiled and pure-Python samplers bit-identical draw for draw.  NumPy's
Generator objects cannot be handed into nopython kernels, hence no
numpy.random here.

Stream derivation: a stream is an independent-looking sequence addressed by
(seed, stream).  The initial state is

    state0 = mix64(mix64(seed) + GOLDEN * stream)   (mod 2**64)

and successive outputs are mix64(state0 + k * GOLDEN) for k = 1, 2, ...
Two streams with the same seed walk the same additive orbit but start at
mix64-separated points, which is the usual splitmix64 sequence-splitting
recipe.
"""

from __future__ import annotations

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """splitmix64 finalizer: a bijective scramble of 64-bit words."""
    z &= MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


class RandomStream:
    """Stateful splitmix64 sequence addressed by (seed, stream)."""

    __slots__ = ("seed", "stream", "_state")

    def __init__(self, seed: int, stream: int = 0):
        self.seed = seed & MASK
        self.stream = stream & MASK
        self._state = mix64((mix64(self.seed) + GOLDEN * self.stream) & MASK)

    def u64(self) -> int:
        """Next raw 64-bit output."""
        self._state = (self._state + GOLDEN) & MASK
        return mix64(self._state)

    def getstate(self) -> int:
        """Raw generator state, for handing a sequence to a compiled kernel."""
        return self._state

    def setstate(self, state: int) -> None:
        self._state = state & MASK

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), by rejection; no modulo bias."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        threshold = ((1 << 64) - bound) % bound
        while True:
            x = self.u64()
            if x >= threshold:
                return x % bound

    def __repr__(self):
        return f"RandomStream(seed={self.seed}, stream={self.stream})"
