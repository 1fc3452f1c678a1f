"""Arithmetic modulo a prime and root-of-unity phases.

Protocol phases use ``omega = exp(2 pi i / d)`` for odd primes. For ``d = 2``
the base is replaced by the imaginary unit, so exponents are carried
modulo 4 there.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .config import MAX_DIM

_I_POWERS = (1 + 0j, 1j, -1 + 0j, -1j)


def is_prime(n: int) -> bool:
    if n < 0:
        raise ValueError(f"is_prime expects n >= 0, got {n}")
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for f in range(3, math.isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


@dataclass(frozen=True)
class PrimeDim:
    """A prime Hilbert-space dimension ``2 <= d <= max_dim``."""

    d: int
    max_dim: int = MAX_DIM

    def __post_init__(self):
        if isinstance(self.d, bool) or not isinstance(self.d, (int, np.integer)):
            raise TypeError(f"dimension must be an integer, got {self.d!r}")
        object.__setattr__(self, "d", int(self.d))
        if not is_prime(self.d):
            raise ValueError(f"dimension must be prime, got {self.d}")
        if self.d > self.max_dim:
            raise ValueError(f"dimension {self.d} exceeds the configured bound {self.max_dim}")

    def __int__(self):
        return self.d

    def __index__(self):
        return self.d

    @property
    def phase_modulus(self) -> int:
        return 4 if self.d == 2 else self.d

    def residues(self) -> list["Residue"]:
        return [Residue(v, self.d) for v in range(self.d)]


def as_dim(d) -> int:
    """Validate ``d`` (int or PrimeDim) and return it as a plain int."""
    if isinstance(d, PrimeDim):
        return d.d
    return PrimeDim(d).d


@dataclass(frozen=True)
class Residue:
    """Integer modulo a prime ``dim``; always stored reduced."""

    value: int
    dim: int

    def __post_init__(self):
        dim = int(self.dim)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "value", int(self.value) % dim)

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.dim != self.dim:
                raise ValueError(f"residues modulo {self.dim} and {other.dim} cannot be combined")
            return other.value
        return int(other)

    def __add__(self, other):
        return Residue(self.value + self._coerce(other), self.dim)

    __radd__ = __add__

    def __sub__(self, other):
        return Residue(self.value - self._coerce(other), self.dim)

    def __rsub__(self, other):
        return Residue(self._coerce(other) - self.value, self.dim)

    def __mul__(self, other):
        return Residue(self.value * self._coerce(other), self.dim)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.dim)

    def __truediv__(self, other):
        if not isinstance(other, Residue):
            other = Residue(other, self.dim)
        return self * mod_inv(other)

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value


def mod_inv(a, d: int | None = None) -> Residue | int:
    """Multiplicative inverse modulo a prime.

    ``a`` is either a :class:`Residue` (returns a Residue) or a plain int
    together with the modulus ``d`` (returns an int).
    """
    if isinstance(a, Residue):
        if a.value == 0:
            raise ValueError("mod_inv: operand a is zero modulo %d and has no inverse" % a.dim)
        return Residue(_egcd_inverse(a.value, a.dim), a.dim)
    if d is None:
        raise TypeError("mod_inv of a plain integer needs the modulus d")
    if a % d == 0:
        raise ValueError("mod_inv: operand a=%d is zero modulo %d and has no inverse" % (a, d))
    return _egcd_inverse(a % d, d)


def _egcd_inverse(a: int, m: int) -> int:
    old_r, r = a, m
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    return old_s % m


@dataclass(frozen=True)
class PhaseExponent:
    """Exponent of the protocol phase base, reduced modulo its period."""

    e: int
    d: int

    def __post_init__(self):
        object.__setattr__(self, "e", int(self.e) % phase_modulus(self.d))

    @property
    def modulus(self) -> int:
        return phase_modulus(self.d)

    def __complex__(self):
        return phase(self.d, self.e)


def phase_modulus(d: int) -> int:
    return 4 if int(d) == 2 else int(d)


def phase(d, e: int) -> complex:
    """``omega**e`` with ``omega = exp(2 pi i / d)``; ``1j**e`` when ``d == 2``."""
    d = int(d)
    if d == 2:
        return _I_POWERS[int(e) % 4]
    k = int(e) % d
    if k == 0:
        return 1 + 0j
    return cmath.exp(2j * math.pi * k / d)


def phases(d, e) -> np.ndarray:
    """Vectorised :func:`phase` over an integer array of exponents."""
    d = int(d)
    e = np.asarray(e, dtype=np.int64)
    if d == 2:
        return np.asarray(_I_POWERS, dtype=complex)[e % 4]
    table = np.exp(2j * np.pi * np.arange(d) / d)
    table[0] = 1.0
    return table[e % d]


def clock_phase(d, e: int) -> complex:
    """``exp(2 pi i e / d)`` for every prime, including ``d == 2`` (gives -1)."""
    d = int(d)
    k = int(e) % d
    if k == 0:
        return 1 + 0j
    if 2 * k == d:
        return -1 + 0j
    return cmath.exp(2j * math.pi * k / d)
