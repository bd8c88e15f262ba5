"""Arithmetic in the finite fields F_p and F_q = F_{p^m} for odd primes p.

Elements are stored in the polynomial basis 1, alpha, ..., alpha^(m-1) where
alpha is a root of a fixed monic irreducible modulus.  A coordinate vector
(c_0, ..., c_{m-1}) stands for c_0 + c_1 alpha + ... + c_{m-1} alpha^(m-1).

The canonical element order is the lexicographic order on coordinate tuples
(c_0 compared first), which is also the order of :meth:`FieldSpec.elements`.
"""

from __future__ import annotations

import itertools
import os
from functools import cached_property

import numpy as np

DEFAULT_SIZE_LIMIT = 2**32
SIZE_LIMIT_ENV = "FEWWEIGHT_SIZE_LIMIT"


class FieldError(ValueError):
    """Invalid field parameters or an operation outside the field's domain."""


class SizeLimitError(FieldError):
    pass


def default_size_limit():
    value = os.environ.get(SIZE_LIMIT_ENV)
    return int(value) if value else DEFAULT_SIZE_LIMIT


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


# Polynomials over F_p as coefficient lists, lowest degree first, no trailing zeros.

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _ptrim([(x - y) % p for x, y in zip(a, b)])


def _pmulmod(a, b, f, p):
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _pmod([c % p for c in prod], f, p)


def _pmod(a, f, p):
    a = _ptrim(list(a))
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _ptrim(a)
    return a


def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(f, p: int) -> bool:
    """Rabin-style test: f of degree m is irreducible iff gcd(f, X^(p^i) - X) = 1 for i <= m/2."""
    f = _ptrim(list(f))
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    xp = x
    for _ in range(m // 2):
        # xp <- xp^p mod f
        result = [1]
        base = xp
        e = p
        while e:
            if e & 1:
                result = _pmulmod(result, base, f, p)
            base = _pmulmod(base, base, f, p)
            e >>= 1
        xp = result
        if len(_pgcd(f, _psub(xp, x, p), p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple:
    """Lexicographically smallest monic irreducible of degree m (low-degree coefficients first)."""
    for low in itertools.product(range(p), repeat=m):
        f = list(low) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {m} over F_{p}")  # pragma: no cover


class FieldSpec:
    """The field F_q, q = p^m, realized modulo a monic irreducible polynomial.

    ``modulus`` is a coefficient vector of length m+1, lowest degree first.
    When omitted, the lexicographically smallest monic irreducible is used.
    ``size_limit`` bounds p^(2m), the number of pairs in F_q^2.
    """

    def __init__(self, p: int, m: int, modulus=None, size_limit: int | None = None):
        if not isinstance(p, int) or not is_prime(p):
            raise FieldError(f"p={p} is not prime")
        if p == 2:
            raise FieldError("characteristic 2 is not supported")
        if not isinstance(m, int) or m < 1:
            raise FieldError(f"m={m} must be a positive integer")
        limit = default_size_limit() if size_limit is None else size_limit
        if p ** (2 * m) > limit:
            raise SizeLimitError(f"p^(2m) = {p}^{2 * m} exceeds the size limit {limit}")
        if modulus is None:
            modulus = smallest_irreducible(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree m")
            if not is_irreducible(modulus, p):
                raise FieldError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        self.size_limit = limit

    def __repr__(self):
        return f"FieldSpec(p={self.p}, m={self.m}, modulus={self.modulus})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    @property
    def s(self) -> int:
        if self.m % 2:
            raise FieldError("s = m/2 is only defined for even m")
        return self.m // 2

    def __call__(self, value) -> FieldElement:
        """Coerce an int (an F_p constant), a coordinate sequence or an element."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, (int(value) % self.p,) + (0,) * (self.m - 1))
        coords = tuple(int(c) for c in value)
        if len(coords) != self.m:
            raise FieldError(f"expected {self.m} coordinates, got {len(coords)}")
        if any(not 0 <= c < self.p for c in coords):
            raise FieldError(f"coordinates {coords} out of range [0, {self.p})")
        return FieldElement(self, coords)

    @cached_property
    def zero(self) -> FieldElement:
        return self(0)

    @cached_property
    def one(self) -> FieldElement:
        return self(1)

    @cached_property
    def basis(self) -> list[FieldElement]:
        """The polynomial basis 1, alpha, ..., alpha^(m-1)."""
        out = []
        for i in range(self.m):
            c = [0] * self.m
            c[i] = 1
            out.append(FieldElement(self, tuple(c)))
        return out

    def element_at(self, index: int) -> FieldElement:
        """Inverse of :attr:`FieldElement.index`."""
        if not 0 <= index < self.q:
            raise FieldError(f"index {index} out of range")
        coords = []
        for _ in range(self.m):
            index, r = divmod(index, self.p)
            coords.append(r)
        return FieldElement(self, tuple(reversed(coords)))

    def elements(self):
        """All q elements, in lexicographic coordinate order starting at 0."""
        for coords in itertools.product(range(self.p), repeat=self.m):
            yield FieldElement(self, coords)

    def prime_subfield(self) -> list[FieldElement]:
        return [self(c) for c in range(self.p)]

    @cached_property
    def tables(self) -> _LogTables:
        return _LogTables(self)

    @cached_property
    def coords_array(self) -> np.ndarray:
        """(q, m) array; row i holds the coordinates of ``element_at(i)``."""
        grid = np.array(list(itertools.product(range(self.p), repeat=self.m)), dtype=np.int64)
        return grid.reshape(self.q, self.m)

    @cached_property
    def trace_vector(self) -> tuple:
        """Tr(alpha^i) for each basis element; Tr(x) = <coords(x), trace_vector> mod p."""
        return tuple(b.trace() for b in self.basis)


class FieldElement:
    __slots__ = ("field", "coords")

    def __init__(self, field: FieldSpec, coords: tuple):
        self.field = field
        self.coords = coords

    def __repr__(self):
        return f"FieldElement({self.coords})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c:
                mono = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
                terms.append(str(c) if not mono else (mono if c == 1 else f"{c}{mono}"))
        return " + ".join(terms) or "0"

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, int):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __lt__(self, other):
        return self.coords < self._check(other).coords

    def __bool__(self):
        return any(self.coords)

    @property
    def index(self) -> int:
        """Position of this element in :meth:`FieldSpec.elements`."""
        n = 0
        for c in self.coords:
            n = n * self.field.p + c
        return n

    def _check(self, other) -> FieldElement:
        if isinstance(other, int):
            return self.field(other)
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.field != self.field:
            raise FieldError("operands belong to different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple((x + y) % p for x, y in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple(-x % p for x in self.coords))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        if not self or not other:
            return self.field.zero
        t = self.field.tables
        return t.exp[(t.log[self.coords] + t.log[other.coords]) % t.order]

    __rmul__ = __mul__

    def poly_mul(self, other) -> FieldElement:
        """Schoolbook product modulo the modulus; the reference for the table product."""
        other = self._check(other)
        f = self.field
        prod = _pmulmod(list(self.coords), list(other.coords), list(f.modulus), f.p)
        return FieldElement(f, tuple(prod) + (0,) * (f.m - len(prod)))

    def __pow__(self, e: int):
        if not self:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return self.field.one if e == 0 else self
        t = self.field.tables
        return t.exp[t.log[self.coords] * e % t.order]

    def inv(self) -> FieldElement:
        if not self:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self ** -1

    def __truediv__(self, other):
        return self * self._check(other).inv()

    def __rtruediv__(self, other):
        return self._check(other) * self.inv()

    def frobenius(self, k: int = 1) -> FieldElement:
        """x^(p^k); k is reduced mod m."""
        x = self
        for _ in range(k % self.field.m):
            x = x ** self.field.p
        return x

    def trace(self) -> int:
        """Absolute trace Tr(x) = sum of x^(p^i), i < m, as a residue mod p."""
        total = self
        x = self
        for _ in range(self.field.m - 1):
            x = x ** self.field.p
            total = total + x
        if any(total.coords[1:]):
            raise FieldError(f"trace of {self!r} is not in F_p")  # pragma: no cover
        return total.coords[0]

    def eta(self) -> int:
        """Quadratic character: +1 on squares of F_q^*, -1 on non-squares."""
        if not self:
            raise FieldError("quadratic character is undefined at 0")
        r = self ** ((self.field.q - 1) // 2)
        if r == 1:
            return 1
        if r == -1:
            return -1
        raise FieldError("x^((q-1)/2) is not +-1; modulus is not irreducible")  # pragma: no cover

    def is_prime_field(self) -> bool:
        """True if the element lies in the prime subfield F_p."""
        return not any(self.coords[1:])


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _poly_pow(x: FieldElement, e: int) -> FieldElement:
    result = x.field.one
    while e:
        if e & 1:
            result = result.poly_mul(x)
        x = x.poly_mul(x)
        e >>= 1
    return result


class _LogTables:
    """Exponential and logarithm tables to base a primitive element.

    Built with the schoolbook product only, so the table product agrees
    with :meth:`FieldElement.poly_mul` by construction.
    """

    def __init__(self, spec: FieldSpec):
        order = spec.q - 1
        primes = _prime_factors(order)
        one = FieldElement(spec, (1,) + (0,) * (spec.m - 1))
        for g in itertools.islice(spec.elements(), 1, None):
            if all(_poly_pow(g, order // r) != one for r in primes):
                break
        exp = [one]
        for _ in range(order - 1):
            exp.append(exp[-1].poly_mul(g))
        self.order = order
        self.generator = g
        self.exp = exp
        self.log = {x.coords: i for i, x in enumerate(exp)}
        if len(self.log) != order:
            raise FieldError("modulus does not define a field")  # pragma: no cover


def eta_p(t: int, p: int) -> int:
    """Quadratic character of F_p (Euler's criterion)."""
    t %= p
    if t == 0:
        raise FieldError("quadratic character is undefined at 0")
    return 1 if pow(t, (p - 1) // 2, p) == 1 else -1


def field_new(p: int, m: int, size_limit: int | None = None) -> FieldSpec:
    return FieldSpec(p, m, size_limit=size_limit)


# F_p linear algebra on lists of int lists.

def row_reduce(rows, p: int, column_order=None):
    """Reduced row echelon form of an augmented-free matrix over F_p.

    Returns ``(reduced, pivots)`` where ``pivots`` lists ``(row, column)``.
    Columns are scanned in ``column_order`` (default left to right).
    """
    a = [[x % p for x in r] for r in rows]
    if not a:
        return a, []
    ncols = len(a[0])
    order = range(ncols) if column_order is None else column_order
    pivots = []
    r = 0
    for c in order:
        pr = next((i for i in range(r, len(a)) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                t = a[i][c]
                a[i] = [(x - t * y) % p for x, y in zip(a[i], a[r])]
        pivots.append((r, c))
        r += 1
        if r == len(a):
            break
    return a, pivots


def rank_mod_p(rows, p: int) -> int:
    return len(row_reduce(rows, p)[1])
