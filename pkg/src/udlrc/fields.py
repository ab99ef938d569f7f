"""Exact arithmetic in prime fields and their polynomial-basis extensions.

Field contexts own the arithmetic; elements are plain data.  An element of
F_q is an int in [0, q), an element of F_{q^t} is a length-t tuple of ints
holding the coordinates in the polynomial basis (1, alpha, ..., alpha^(t-1)),
constant term first.  Tuples are hashable and double as the coordinate
vectors used for rank computations over the base field.  Everything is
exact: no floats, no tolerances, and comparisons are plain equality.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

ExtElem = tuple[int, ...]


def is_prime(n: int) -> bool:
    """Trial-division primality check, ample for desk-scale moduli."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The field of integers modulo a prime q."""

    def __init__(self, q: int) -> None:
        if not is_prime(q):
            raise ValueError(f"field size must be prime, got {q}")
        self.q = q
        self.zero = 0
        self.one = 1

    def element(self, value: int) -> int:
        return value % self.q

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def neg(self, a: int) -> int:
        return -a % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return pow(a, -1, self.q)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    def random_element(self, rng) -> int:
        return rng.randrange(self.q)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("PrimeField", self.q))

    def __repr__(self) -> str:
        return f"PrimeField({self.q})"


# ---------------------------------------------------------------------------
# Polynomial helpers over F_q.  Coefficient lists, index = degree.

def _poly_trim(c: list[int]) -> list[int]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _poly_eval(c: Sequence[int], x: int, q: int) -> int:
    acc = 0
    for coef in reversed(c):
        acc = (acc * x + coef) % q
    return acc


def _poly_mod(a: Sequence[int], m: Sequence[int], q: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m."""
    a = [v % q for v in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % q
    del a[dm:]
    return _poly_trim(a or [0])


def _poly_mulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], q: int) -> list[int]:
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] += ai * bj
    return _poly_mod(res, m, q)


def _poly_powmod(base: Sequence[int], e: int, m: Sequence[int], q: int) -> list[int]:
    result = [1]
    acc = _poly_mod(list(base), m, q)
    while e:
        if e & 1:
            result = _poly_mulmod(result, acc, m, q)
        acc = _poly_mulmod(acc, acc, m, q)
        e >>= 1
    return result


def _poly_gcd(a: Sequence[int], b: Sequence[int], q: int) -> list[int]:
    a = _poly_trim([v % q for v in a])
    b = _poly_trim([v % q for v in b])
    while b != [0]:
        inv = pow(b[-1], -1, q)
        monic_b = [(v * inv) % q for v in b]
        a, b = b, _poly_mod(a, monic_b, q)
    return a


def _is_irreducible(coeffs: Sequence[int], q: int) -> bool:
    """Monic-polynomial irreducibility over F_q.

    A reducible polynomial of degree t has an irreducible factor of degree
    d <= t/2, and x^(q^d) - x is the product of all irreducibles of degree
    dividing d, so it suffices to check roots (d = 1) and then gcds against
    x^(q^d) - x for d up to t/2.
    """
    t = len(coeffs) - 1
    if t < 1 or coeffs[-1] % q != 1:
        return False
    if t == 1:
        return True
    if any(_poly_eval(coeffs, x, q) == 0 for x in range(q)):
        return False
    if t <= 3:
        return True
    f = [v % q for v in coeffs]
    h: Sequence[int] = [0, 1]
    for _ in range(t // 2):
        h = _poly_powmod(h, q, f, q)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % q
        if len(_poly_trim(_poly_gcd(f, diff, q))) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def find_irreducible(q: int, t: int) -> tuple[int, ...]:
    """First monic irreducible of degree t over F_q, low coefficients first.

    Candidates are scanned in increasing order of sum(c_i * q^i), so every
    (q, t) deterministically names one modulus and one field representation.
    Returned as a coefficient tuple of length t + 1 with leading 1.
    """
    if not is_prime(q):
        raise ValueError(f"base field size must be prime, got {q}")
    if t < 1:
        raise ValueError(f"degree must be >= 1, got {t}")
    for code in range(q**t):
        coeffs = []
        c = code
        for _ in range(t):
            coeffs.append(c % q)
            c //= q
        coeffs.append(1)
        if _is_irreducible(coeffs, q):
            return tuple(coeffs)
    raise RuntimeError("unreachable: an irreducible of every degree exists")


class ExtField:
    """F_{q^t} as polynomials over a prime field modulo a monic irreducible.

    Elements are length-t coordinate tuples.  The default modulus is the
    deterministic one from find_irreducible, so coordinates are reproducible
    across runs and machines.
    """

    def __init__(self, base: PrimeField, t: int, modulus: Sequence[int] | None = None) -> None:
        if t < 1:
            raise ValueError(f"extension degree must be >= 1, got {t}")
        self.base = base
        self.q = base.q
        self.t = t
        if modulus is None:
            modulus = find_irreducible(self.q, t)
        modulus = tuple(v % self.q for v in modulus)
        if len(modulus) != t + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree t")
        if not _is_irreducible(modulus, self.q):
            raise ValueError("modulus is reducible over the base field")
        self.modulus = modulus
        self.zero: ExtElem = (0,) * t
        self.one: ExtElem = ((1,) + (0,) * (t - 1))
        # x^(t+j) mod modulus for j = 0..t-2: the reduction rows used by mul.
        x_to_t = tuple(-modulus[i] % self.q for i in range(t))
        red = [x_to_t]
        for _ in range(t - 2):
            prev = red[-1]
            carry = prev[-1]
            shifted = [0] + list(prev[:-1])
            if carry:
                shifted = [(s + carry * f) % self.q for s, f in zip(shifted, x_to_t)]
            red.append(tuple(v % self.q for v in shifted))
        self._red = red
        self.alpha: ExtElem = x_to_t if t == 1 else ((0, 1) + (0,) * (t - 2))
        self._inv_exp = self.q**t - 2

    @property
    def order(self) -> int:
        return self.q**self.t

    def element(self, coords: Sequence[int]) -> ExtElem:
        if len(coords) != self.t:
            raise ValueError(f"element needs {self.t} coordinates, got {len(coords)}")
        return tuple(v % self.q for v in coords)

    def embed(self, c: int) -> ExtElem:
        """The base-field scalar c as an extension element."""
        return ((c % self.q,) + (0,) * (self.t - 1))

    def add(self, a: ExtElem, b: ExtElem) -> ExtElem:
        q = self.q
        return tuple((x + y) % q for x, y in zip(a, b))

    def sub(self, a: ExtElem, b: ExtElem) -> ExtElem:
        q = self.q
        return tuple((x - y) % q for x, y in zip(a, b))

    def neg(self, a: ExtElem) -> ExtElem:
        q = self.q
        return tuple(-x % q for x in a)

    def scale(self, c: int, a: ExtElem) -> ExtElem:
        """Multiply by a base-field scalar, coordinate by coordinate."""
        q = self.q
        c %= q
        return tuple((c * x) % q for x in a)

    def mul(self, a: ExtElem, b: ExtElem) -> ExtElem:
        t = self.t
        q = self.q
        if t == 1:
            return ((a[0] * b[0]) % q,)
        conv = [0] * (2 * t - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        for idx in range(2 * t - 2, t - 1, -1):
            c = conv[idx] % q
            if c:
                red = self._red[idx - t]
                for i in range(t):
                    conv[i] += c * red[i]
        return tuple(v % q for v in conv[:t])

    def pow(self, a: ExtElem, e: int) -> ExtElem:
        if e < 0:
            raise ValueError("negative exponents not supported; use inv")
        result = self.one
        acc = a
        while e:
            if e & 1:
                result = self.mul(result, acc)
            acc = self.mul(acc, acc)
            e >>= 1
        return result

    def inv(self, a: ExtElem) -> ExtElem:
        if a == self.zero:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self.pow(a, self._inv_exp)

    def div(self, a: ExtElem, b: ExtElem) -> ExtElem:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: ExtElem, i: int = 1) -> ExtElem:
        """a^(q^i), by i applications of the q-power map."""
        if i < 0:
            raise ValueError("frobenius exponent must be >= 0")
        for _ in range(i):
            a = self.pow(a, self.q)
        return a

    def elements(self) -> Iterator[ExtElem]:
        """All q^t elements, deterministic order. Only for tiny fields."""
        from itertools import product

        for coords in product(range(self.q), repeat=self.t):
            yield coords

    def random_element(self, rng) -> ExtElem:
        return tuple(rng.randrange(self.q) for _ in range(self.t))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ExtField)
            and other.q == self.q
            and other.t == self.t
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash(("ExtField", self.q, self.t, self.modulus))

    def __repr__(self) -> str:
        return f"ExtField(q={self.q}, t={self.t})"
