"""Seeded pseudorandom streams.

Every random decision in the package is drawn from a :class:`Stream`. A stream
is the raw 64-bit output of numpy's PCG64 bit generator, seeded through
``SeedSequence(master_seed, spawn_key=(stream_id,))``. Stream id 0 belongs to
the coordinator, stream id ``i`` to worker ``i``.

Derived values:

* ``below(m)``  -> ``u64 % m`` (one draw; bias below ``m / 2**64``)
* ``uniform()`` -> ``(u64 >> 11) * 2**-53`` in ``[0, 1)`` (one draw)
* ``pair(n)``   -> two distinct cells: ``a = below(n)``, ``b = below(n - 1)``,
  ``b += 1`` if ``b >= a`` (two draws)
* ``choice(seq)`` draws only when ``len(seq) > 1``.

Changing any of this is a breaking change: tests and fixtures pin seeds.
"""
from __future__ import annotations

import numpy as np

STREAM_VERSION = "blmp-stream-v1"
COORDINATOR = 0

_BLOCK = 1 << 14
_TWO_M53 = 2.0 ** -53


class Stream:
    """Buffered raw PCG64 stream.

    Refills grow geometrically; because consecutive ``random_raw`` calls
    concatenate, the sequence does not depend on how it is consumed.
    """

    def __init__(self, seed: int, stream_id: int = 0):
        self.seed = int(seed)
        self.stream_id = int(stream_id)
        ss = np.random.SeedSequence(self.seed & ((1 << 64) - 1), spawn_key=(self.stream_id,))
        self._bitgen = np.random.PCG64(ss)
        self.buf = np.empty(0, dtype=np.uint64)
        self.pos = 0
        self._fill = 256

    def reserve(self, count: int) -> None:
        """Make at least ``count`` unread values available in ``buf[pos:]``."""
        avail = len(self.buf) - self.pos
        if avail >= count:
            return
        size = max(count - avail, self._fill)
        self._fill = min(2 * self._fill, _BLOCK)
        fresh = self._bitgen.random_raw(size).astype(np.uint64)
        self.buf = np.concatenate([self.buf[self.pos:], fresh])
        self.pos = 0

    def next_u64(self) -> int:
        if self.pos >= len(self.buf):
            self.reserve(1)
        v = int(self.buf[self.pos])
        self.pos += 1
        return v

    def below(self, m: int) -> int:
        if m <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next_u64() % m

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * _TWO_M53

    def pair(self, n: int) -> tuple[int, int]:
        a = self.below(n)
        b = self.below(n - 1)
        if b >= a:
            b += 1
        return a, b

    def choice(self, seq):
        if len(seq) == 1:
            return seq[0]
        return seq[self.below(len(seq))]

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates, high index first."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
