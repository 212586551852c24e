"""Multisets of the form {1^k1, 2^k2, ..., n^kn}.

A multiset is described by its tuple of multiplicities ``(k1, ..., kn)``;
every value from 1 to n must occur at least once.  The empty multiset is
allowed and has n = K = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError


@dataclass(frozen=True, slots=True)
class Multiset:
    """The multiset {1^k1, ..., n^kn}, stored as its multiplicity vector."""

    mults: tuple[int, ...] = ()

    def __post_init__(self):
        if not all(isinstance(k, int) and k >= 1 for k in self.mults):
            raise ParseError(f"multiplicities must be positive integers, got {self.mults!r}")

    @property
    def n(self) -> int:
        """Number of distinct values."""
        return len(self.mults)

    @property
    def K(self) -> int:
        """Total number of elements, counted with multiplicity."""
        return sum(self.mults)

    def multiplicity(self, value: int) -> int:
        if not 1 <= value <= self.n:
            raise KeyError(value)
        return self.mults[value - 1]

    def is_uniform(self, k: int) -> bool:
        """True when every value has multiplicity exactly ``k`` (and n >= 1)."""
        return self.n >= 1 and all(m == k for m in self.mults)

    def spec(self) -> str:
        """Render as a comma-separated multiplicity list, e.g. ``"2,2"``."""
        return ",".join(str(k) for k in self.mults)

    @classmethod
    def parse(cls, text: str) -> Multiset:
        """Parse a comma-separated multiplicity list.

        ``"2,2"`` means {1^2, 2^2}; the empty string denotes the empty multiset.
        """
        text = text.strip()
        if not text:
            return cls(())
        parts = [p.strip() for p in text.split(",")]
        try:
            mults = tuple(int(p) for p in parts)
        except ValueError as exc:
            raise ParseError(f"bad multiset spec {text!r}: {exc}") from None
        if any(k < 1 for k in mults):
            raise ParseError(f"bad multiset spec {text!r}: multiplicities must be >= 1")
        return cls(mults)

    @classmethod
    def uniform(cls, n: int, k: int) -> Multiset:
        """The multiset {1^k, ..., n^k}."""
        return cls((k,) * n)

    def __str__(self) -> str:
        return self.spec()
