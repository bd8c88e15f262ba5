"""Exact arithmetic in Z[zeta_p].

A :class:`CycInt` is stored in the basis 1, z, ..., z^(p-2) with z = zeta_p.
Every value has a unique coordinate vector because z^(p-1) is rewritten as
-(1 + z + ... + z^(p-2)).
"""

from __future__ import annotations

import cmath
import statistics


class ConductorMismatch(ValueError):
    pass


class CycInt:
    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) > p - 1:
            coeffs = _reduce_cyclic(coeffs, p)
        self.p = p
        self.coeffs = tuple(coeffs) + (0,) * (p - 1 - len(coeffs))

    @classmethod
    def from_cyclic(cls, p: int, coeffs) -> CycInt:
        """Build from coefficients of 1, z, z^2, ... with exponents taken mod p."""
        return cls(p, _reduce_cyclic(list(coeffs), p))

    @classmethod
    def integer(cls, p: int, n: int) -> CycInt:
        return cls(p, (n,))

    @classmethod
    def zeta_power(cls, p: int, k: int) -> CycInt:
        k %= p
        if k == p - 1:
            return cls(p, (-1,) * (p - 1))
        c = [0] * (p - 1)
        c[k] = 1
        return cls(p, c)

    def _coerce(self, other) -> CycInt:
        if isinstance(other, int):
            return CycInt.integer(self.p, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        if other.p != self.p:
            raise ConductorMismatch(f"conductors {self.p} and {other.p} differ")
        return other

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycInt.integer(self.p, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.p, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.p, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.p, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        prod = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[(i + j) % p] += a * b
        return CycInt(p, _fold(prod))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined in Z[zeta_p]")
        result = CycInt.integer(self.p, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, n: int) -> CycInt:
        """Divide by a rational integer, which must divide every coordinate."""
        if any(c % n for c in self.coeffs):
            raise ArithmeticError(f"{self} is not divisible by {n}")
        return CycInt(self.p, [c // n for c in self.coeffs])

    def galois(self, k: int) -> CycInt:
        """Image under the automorphism z -> z^k, gcd(k, p) = 1."""
        p = self.p
        if k % p == 0:
            raise ValueError("k must be coprime to p")
        out = [0] * p
        for i, c in enumerate(self.coeffs):
            out[i * k % p] += c
        return CycInt(p, _fold(out))

    def conjugate(self) -> CycInt:
        return self.galois(self.p - 1)

    def to_int(self) -> int | None:
        """The rational integer equal to self, or None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.p)
        return sum(c * z**i for i, c in enumerate(self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"CycInt({self.p}, {self.coeffs})"

    def __str__(self):
        return render(self)


def _reduce_cyclic(coeffs, p):
    out = [0] * p
    for i, c in enumerate(coeffs):
        out[i % p] += c
    return _fold(out)


def _fold(cyc):
    # length-p cyclic vector -> basis coordinates, using sum of all z^i = 0
    top = cyc[-1]
    return [c - top for c in cyc[:-1]]


def is_rational_integer(x: CycInt) -> int | None:
    return x.to_int()


def render(x: CycInt, var: str = "z") -> str:
    """Human-readable form such as ``"z - z^2"``.

    Among the representations sum c_i z^i over i < p (defined up to adding a
    constant to every c_i) the one with smallest total |c_i| is printed; it is
    unique because p is odd.
    """
    cyc = list(x.coeffs) + [0]
    shift = statistics.median_low(cyc)
    cyc = [c - shift for c in cyc]
    terms = []
    for i, c in enumerate(cyc):
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
