"""Trace codes C_D = {(Tr(ax + by))_{(x,y) in D} : a, b in F_q} and their weights.

Two independent routes produce a weight distribution:

* :func:`weight_distribution_bruteforce` multiplies every message (a, b)
  through the generator matrix and counts nonzero coordinates.
* :func:`weight_distribution_charsum` counts, for each (a, b), the zeros
  N(a, b) of the codeword through the character-sum expansion of the
  indicator of D, evaluated with the closed-form Weil and quadratic sums.
"""

from __future__ import annotations

import itertools
import logging
import warnings
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .charsums import WeilParams, quad_closed, weil_closed
from .cyclo import CycInt
from .gf import FieldElement, FieldSpec, rank_mod_p

logger = logging.getLogger(__name__)

D1 = "D1"
D2 = "D2"
CUSTOM = "custom"
PUNCTURED = "punctured"


class DegenerateCodeError(ValueError):
    """The defining set is empty, so the code has length 0."""


class DefiningSetError(ValueError):
    pass


@dataclass(frozen=True)
class DefiningSet:
    spec: FieldSpec
    pairs: tuple
    family: str = CUSTOM
    u: int | None = None

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    @cached_property
    def index_pairs(self) -> np.ndarray:
        """(n, 2) array of element indices."""
        return np.array([(x.index, y.index) for x, y in self.pairs], dtype=np.int64).reshape(-1, 2)


@dataclass
class WeightDistribution:
    n: int
    k: int
    dist: dict = field(default_factory=dict)

    def __post_init__(self):
        self.dist = {int(w): int(a) for w, a in sorted(self.dist.items()) if a}

    @property
    def d(self) -> int | None:
        nonzero = [w for w in self.dist if w > 0]
        return min(nonzero) if nonzero else None

    @property
    def nonzero_weights(self) -> list[int]:
        return [w for w in self.dist if w > 0]

    def params(self) -> tuple:
        return (self.n, self.k, self.d)

    def enumerator(self) -> str:
        """Weight enumerator as ``"1 + A z^w + ..."`` in ascending weight order."""
        terms = []
        for w, a in self.dist.items():
            terms.append(str(a) if w == 0 else f"{a}z^{w}")
        return " + ".join(terms)

    def __str__(self):
        return f"[{self.n},{self.k},{self.d}] {self.enumerator()}"

    def pless_moments(self, p: int, dual_a1: int = 0) -> tuple[bool, bool]:
        """Check the first two Pless power moments, given A_1 of the dual code."""
        first = sum(self.dist.values()) == p**self.k
        second = sum(w * a for w, a in self.dist.items()) == p ** (self.k - 1) * (p * self.n - self.n - dual_a1)
        return first, second

    def divided(self, c: int) -> WeightDistribution:
        """Distribution with every weight and the length divided by c."""
        if self.n % c or any(w % c for w in self.dist):
            raise ValueError(f"weights are not all divisible by {c}")
        return WeightDistribution(self.n // c, self.k, {w // c: a for w, a in self.dist.items()})

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "dist": [{"w": w, "A": a} for w, a in self.dist.items()],
        }


def _sorted_pairs(pairs):
    return tuple(sorted(pairs, key=lambda xy: (xy[0].index, xy[1].index)))


def _traces_of_powers(spec: FieldSpec, params: WeilParams) -> list[int]:
    return [params.power(y).trace() for y in spec.elements()]


def build_d1(spec: FieldSpec, u: int) -> DefiningSet:
    """All (x, y) != (0, 0) with Tr(x + y^(p^u+1)) = 0."""
    params = WeilParams(spec, u)
    elems = list(spec.elements())
    tx = [x.trace() for x in elems]
    ty = _traces_of_powers(spec, params)
    pairs = [
        (x, y)
        for x, sx in zip(elems, tx)
        for y, sy in zip(elems, ty)
        if (sx + sy) % spec.p == 0 and (x or y)
    ]
    return DefiningSet(spec, tuple(pairs), D1, u)


def build_d2(spec: FieldSpec, u: int) -> DefiningSet:
    """All (x, y) != (0, 0) with Tr(x^2 + y^(p^u+1)) = 0.

    Raises DegenerateCodeError when the set is empty (p = 3 mod 4, m = 1).
    """
    params = WeilParams(spec, u)
    elems = list(spec.elements())
    tx = [(x * x).trace() for x in elems]
    ty = _traces_of_powers(spec, params)
    pairs = [
        (x, y)
        for x, sx in zip(elems, tx)
        for y, sy in zip(elems, ty)
        if (sx + sy) % spec.p == 0 and (x or y)
    ]
    if not pairs:
        raise DegenerateCodeError(f"D2 is empty for p={spec.p}, m={spec.m}")
    return DefiningSet(spec, tuple(pairs), D2, u)


def build_custom(spec: FieldSpec, pairs, drop_zero: bool = False, strict: bool = False) -> DefiningSet:
    """Canonicalize user-supplied pairs.

    Pairs may be given as FieldElements or coordinate sequences.  The pair
    (0, 0) is rejected unless ``drop_zero``; duplicates are merged unless
    ``strict``.
    """
    seen = set()
    out = []
    for x, y in pairs:
        x, y = spec(x), spec(y)
        if not x and not y:
            if drop_zero:
                continue
            raise DefiningSetError("(0, 0) is not allowed in a defining set")
        if (x, y) in seen:
            if strict:
                raise DefiningSetError(f"duplicate pair ({x}, {y})")
            continue
        seen.add((x, y))
        out.append((x, y))
    return DefiningSet(spec, _sorted_pairs(out), CUSTOM)


def codeword(a: FieldElement, b: FieldElement, D: DefiningSet) -> list[int]:
    return [(a * x + b * y).trace() for x, y in D.pairs]


def generator_matrix(D: DefiningSet) -> np.ndarray:
    """(2m, n) matrix whose rows are the codewords c(alpha^i, 0) and c(0, alpha^i)."""
    spec = D.spec
    cache = {}

    def row_traces(x):
        key = x.index
        if key not in cache:
            cache[key] = [(b * x).trace() for b in spec.basis]
        return cache[key]

    n = len(D)
    g = np.zeros((2 * spec.m, n), dtype=np.int64)
    for j, (x, y) in enumerate(D.pairs):
        g[: spec.m, j] = row_traces(x)
        g[spec.m :, j] = row_traces(y)
    return g


def _messages(p: int, k: int, chunk: int):
    it = itertools.product(range(p), repeat=k)
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            return
        yield np.array(block, dtype=np.int64)


def weight_distribution_bruteforce(D: DefiningSet, chunk_size: int = 2048) -> WeightDistribution:
    """Weights of all q^2 codewords c(a, b), without storing the code."""
    n = len(D)
    if n == 0:
        raise DegenerateCodeError("defining set is empty")
    spec = D.spec
    p = spec.p
    g = generator_matrix(D)
    counts = np.zeros(n + 1, dtype=np.int64)
    for msgs in _messages(p, 2 * spec.m, chunk_size):
        words = (msgs @ g) % p
        counts += np.bincount(np.count_nonzero(words, axis=1), minlength=n + 1)
    k = rank_mod_p(g.tolist(), p)
    return _collapse(counts_to_dict(counts), n, k, 2 * spec.m, p)


def counts_to_dict(counts) -> dict:
    return {w: int(c) for w, c in enumerate(counts) if c}


def _collapse(counts: dict, n: int, k: int, message_dim: int, p: int) -> WeightDistribution:
    # each codeword is hit by p^(message_dim - k) messages
    rep = p ** (message_dim - k)
    if any(c % rep for c in counts.values()):
        raise ArithmeticError("message counts are inconsistent with the code dimension")  # pragma: no cover
    return WeightDistribution(n, k, {w: c // rep for w, c in counts.items()})


class _SumTables:
    """Closed-form S_u(z, c) and Q(z, c) for z in F_p^*, evaluated on demand."""

    def __init__(self, params: WeilParams):
        self.params = params
        self.spec = params.spec
        self.z = [self.spec(t) for t in range(self.spec.p)]
        self._weil = {}
        self._quad = {}

    def weil(self, z: int, c: FieldElement) -> CycInt:
        key = (z, c.coords)
        if key not in self._weil:
            self._weil[key] = weil_closed(self.z[z], c, self.params)
        return self._weil[key]

    def quad(self, z: int, c: FieldElement) -> CycInt:
        key = (z, c.coords)
        if key not in self._quad:
            self._quad[key] = quad_closed(self.z[z], c)
        return self._quad[key]


def _scale(x: FieldElement, t: int) -> FieldElement:
    p = x.field.p
    return FieldElement(x.field, tuple(c * t % p for c in x.coords))


def _zeros_d1(a: FieldElement, b: FieldElement, tables: _SumTables) -> int:
    # N1(a,b) + 1 = p^-2 * sum_{z1,z2 in F_p} [sum_x chi((z1 + z2 a) x)] [sum_y chi(z1 y^e + z2 b y)]
    spec = tables.spec
    p, q = spec.p, spec.q
    total = CycInt.integer(p, q * q)  # z1 = z2 = 0
    if a.is_prime_field():
        a0 = a.coords[0]
        for z2 in range(1, p):
            z1 = -z2 * a0 % p  # the only z1 for which the x-sum is nonzero
            if z1:
                total = total + tables.weil(z1, _scale(b, z2)) * q
            elif not b:  # pragma: no cover - excluded since (a, b) != (0, 0)
                total = total + q * q
    return _exact_count(total, p) - 1


def _zeros_d2(a: FieldElement, b: FieldElement, tables: _SumTables) -> int:
    # N2(a,b) + 1 = p^-2 * sum_{z1,z2 in F_p} Q'(z1, z2 a) S'(z1, z2 b), where the z1 = 0
    # factors reduce to q [z2 a = 0] and q [z2 b = 0]
    spec = tables.spec
    p, q = spec.p, spec.q
    total = CycInt.integer(p, q * q)
    for z1 in range(1, p):
        for z2 in range(p):
            total = total + tables.quad(z1, _scale(a, z2)) * tables.weil(z1, _scale(b, z2))
    return _exact_count(total, p) - 1


def _exact_count(total: CycInt, p: int) -> int:
    value = total.to_int()
    if value is None or value % (p * p):
        raise ArithmeticError(f"character-sum count {total} is not an integer multiple of p^2")
    return value // (p * p)


def weight_distribution_charsum(D: DefiningSet) -> WeightDistribution:
    """Weight distribution of C_D for D = D1 or D2 via closed-form character sums.

    Each weight is n - N(a, b); no codeword is formed.  Other defining sets
    fall back to the brute-force route with a warning.
    """
    if D.family not in (D1, D2):
        warnings.warn(f"no character-sum route for family {D.family!r}; using brute force", stacklevel=2)
        return weight_distribution_bruteforce(D)
    spec = D.spec
    n = len(D)
    tables = _SumTables(WeilParams(spec, D.u))
    zeros = _zeros_d1 if D.family == D1 else _zeros_d2
    counts = Counter()
    elems = list(spec.elements())
    for a in elems:
        for b in elems:
            if not a and not b:
                counts[0] += 1
                continue
            counts[n - zeros(a, b, tables)] += 1
    # codewords of weight zero come from the kernel of (a, b) -> c(a, b)
    zero_msgs = counts[0]
    k = 2 * spec.m - _exact_log(zero_msgs, spec.p)
    return _collapse(dict(counts), n, k, 2 * spec.m, spec.p)


def _exact_log(n: int, p: int) -> int:
    e = 0
    while n > 1:
        n, r = divmod(n, p)
        if r:
            raise ArithmeticError(f"{n} is not a power of {p}")  # pragma: no cover
        e += 1
    return e


def _pair_key(xy):
    return (xy[0].index, xy[1].index)


def puncture_by_scaling(D: DefiningSet, representative=min) -> DefiningSet:
    """Keep one pair per orbit of (x, y) -> (t x, t y), t in F_p^*.

    ``representative`` picks the kept pair from each orbit (a list ordered
    by t = 1, ..., p-1) using the canonical pair ordering.
    """
    p = D.spec.p
    members = set(D.pairs)
    done = set()
    reps = []
    for xy in D.pairs:
        if xy in done:
            continue
        orbit = [(_scale(xy[0], t), _scale(xy[1], t)) for t in range(1, p)]
        if len(set(orbit)) != p - 1:
            raise DefiningSetError("orbit of unexpected size under F_p^* scaling")  # pragma: no cover
        for other in orbit:
            if other not in members:
                raise DefiningSetError("defining set is not closed under F_p^* scaling")
        done.update(orbit)
        reps.append(representative(orbit, key=_pair_key))
    return DefiningSet(D.spec, _sorted_pairs(reps), PUNCTURED, D.u)


def _parse_element(text: str, spec: FieldSpec) -> FieldElement:
    digits = [int(t) for t in text.split(",")]
    return spec(digits)


def read_defining_set(path, spec: FieldSpec, **kwargs) -> DefiningSet:
    """Read pairs from a text file: ``x0,x1,...;y0,y1,...`` per line, ``#`` comments."""
    pairs = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                xs, ys = line.split(";")
                pairs.append((_parse_element(xs.strip(), spec), _parse_element(ys.strip(), spec)))
            except ValueError as exc:
                raise DefiningSetError(f"{path}:{lineno}: {exc}") from exc
    return build_custom(spec, pairs, **kwargs)


def write_defining_set(D: DefiningSet, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"# defining set over GF({D.spec.p}^{D.spec.m}), family {D.family}\n")
        for x, y in D.pairs:
            fh.write(",".join(map(str, x.coords)) + ";" + ",".join(map(str, y.coords)) + "\n")
