"""Dense univariate polynomial arithmetic over F_p.

Coefficients are stored low degree first with no trailing zeros.  The
Laurent-normal form used by ideal components is monic with a nonzero
constant term: the units of K[x, x^-1] are the nonzero monomials, so a
generator is normalized by stripping its x-power factor and scaling
monic.

Factorization is squarefree decomposition, then distinct-degree
splitting, then Cantor-Zassenhaus equal-degree splitting driven by a
pseudorandom stream seeded from the input, so results are identical
across runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InputError, PreconditionError


def _is_prime(n: int) -> bool:
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


@dataclass(frozen=True)
class FieldSpec:
    """The prime field F_p."""

    p: int

    def __post_init__(self):
        if not (2 <= self.p < 2 ** 31):
            raise InputError(f"field modulus out of range: {self.p}")
        if not _is_prime(self.p):
            raise InputError(f"field modulus is not prime: {self.p}")

    def inv(self, a: int) -> int:
        return pow(a % self.p, self.p - 2, self.p)

    def __str__(self):
        return f"F_{self.p}"


@dataclass(frozen=True, order=True)
class FieldPoly:
    """Polynomial over F_p; ``coeffs`` is low degree first, no trailing zeros."""

    field: FieldSpec
    coeffs: tuple[int, ...]

    @staticmethod
    def make(field: FieldSpec, coeffs) -> "FieldPoly":
        cs = [c % field.p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return FieldPoly(field, tuple(cs))

    @staticmethod
    def zero(field: FieldSpec) -> "FieldPoly":
        return FieldPoly(field, ())

    @staticmethod
    def one(field: FieldSpec) -> "FieldPoly":
        return FieldPoly(field, (1,))

    @staticmethod
    def x(field: FieldSpec) -> "FieldPoly":
        return FieldPoly(field, (0, 1))

    # -- queries ---------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_laurent_normal(self) -> bool:
        return self.is_monic() and self.degree >= 1 and self.coeffs[0] != 0

    def _require_same_field(self, other: "FieldPoly") -> None:
        if self.field != other.field:
            raise PreconditionError(
                f"mixed fields: {self.field} vs {other.field}")

    # -- ring operations ---------------------------------------------------------

    def __add__(self, other: "FieldPoly") -> "FieldPoly":
        self._require_same_field(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return FieldPoly.make(self.field,
                              [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                               for i in range(n)])

    def __sub__(self, other: "FieldPoly") -> "FieldPoly":
        self._require_same_field(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return FieldPoly.make(self.field,
                              [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
                               for i in range(n)])

    def __mul__(self, other: "FieldPoly") -> "FieldPoly":
        self._require_same_field(other)
        if self.is_zero() or other.is_zero():
            return FieldPoly.zero(self.field)
        p = self.field.p
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + a * b) % p
        return FieldPoly.make(self.field, out)

    def scale(self, k: int) -> "FieldPoly":
        p = self.field.p
        return FieldPoly.make(self.field, [c * k % p for c in self.coeffs])

    def monic(self) -> "FieldPoly":
        if self.is_zero():
            raise PreconditionError("zero polynomial has no monic associate")
        return self.scale(self.field.inv(self.coeffs[-1]))

    def __divmod__(self, other: "FieldPoly"):
        self._require_same_field(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.field.p
        rem = list(self.coeffs)
        dv = other.coeffs
        inv_lead = self.field.inv(dv[-1])
        quo = [0] * max(len(rem) - len(dv) + 1, 0)
        for i in range(len(rem) - len(dv), -1, -1):
            factor = rem[i + len(dv) - 1] * inv_lead % p
            if factor:
                quo[i] = factor
                for j, d in enumerate(dv):
                    rem[i + j] = (rem[i + j] - factor * d) % p
        return FieldPoly.make(self.field, quo), FieldPoly.make(self.field, rem)

    def __floordiv__(self, other: "FieldPoly") -> "FieldPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "FieldPoly") -> "FieldPoly":
        return divmod(self, other)[1]

    def divides(self, other: "FieldPoly") -> bool:
        return (other % self).is_zero()

    def __pow__(self, n: int) -> "FieldPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = FieldPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def powmod(self, n: int, modulus: "FieldPoly") -> "FieldPoly":
        result = FieldPoly.one(self.field) % modulus
        base = self % modulus
        while n:
            if n & 1:
                result = result * base % modulus
            base = base * base % modulus
            n >>= 1
        return result

    def derivative(self) -> "FieldPoly":
        return FieldPoly.make(self.field,
                              [i * c for i, c in enumerate(self.coeffs)][1:])

    def __str__(self):
        return format_poly(self)


# -- normalization and gcd ----------------------------------------------------


def laurent_normalize(f: FieldPoly) -> FieldPoly:
    """Strip the largest x-power factor and scale monic.

    The result is Laurent-normal, or the constant 1 when f is a unit of
    K[x, x^-1] (a nonzero monomial).
    """
    if f.is_zero():
        raise PreconditionError("cannot Laurent-normalize the zero polynomial")
    k = 0
    while f.coeffs[k] == 0:
        k += 1
    return FieldPoly(f.field, f.coeffs[k:]).monic()


def poly_gcd(f: FieldPoly, g: FieldPoly) -> FieldPoly:
    """Monic gcd via Euclid's algorithm."""
    if f.is_zero() and g.is_zero():
        raise PreconditionError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(f: FieldPoly, g: FieldPoly) -> FieldPoly:
    if f.is_zero() or g.is_zero():
        raise PreconditionError("lcm requires nonzero inputs")
    return ((f * g) // poly_gcd(f, g)).monic()


def _require_normal(f: FieldPoly) -> None:
    if not f.is_laurent_normal():
        raise PreconditionError(f"polynomial {f} is not Laurent-normalized")


# -- factorization -------------------------------------------------------------


def _pth_root(f: FieldPoly) -> FieldPoly:
    # f is a polynomial in x^p; over F_p the coefficient Frobenius is identity.
    p = f.field.p
    return FieldPoly.make(f.field, f.coeffs[::p])


def _squarefree_decomposition(f: FieldPoly) -> list[tuple[FieldPoly, int]]:
    """Monic f as a list of (squarefree monic factor, multiplicity)."""
    p = f.field.p
    out: dict[int, FieldPoly] = {}

    def accumulate(g: FieldPoly, scale: int):
        # Yun's algorithm, with the derivative-zero tail recursing on the
        # p-th root at multiplicity scale*p.
        if g.is_one():
            return
        d = g.derivative()
        if d.is_zero():
            accumulate(_pth_root(g), scale * p)
            return
        w = poly_gcd(g, d)
        rest = g // w
        i = 1
        while not rest.is_one():
            y = poly_gcd(rest, w)
            factor = rest // y
            if not factor.is_one():
                key = i * scale
                out[key] = out.get(key, FieldPoly.one(f.field)) * factor
            rest = y
            w = w // y
            i += 1
        # what is left of w collects the factors whose multiplicity is a
        # multiple of p; it is a polynomial in x^p, so the derivative-zero
        # branch takes over (the scale must not be multiplied here)
        accumulate(w, scale)

    accumulate(f.monic(), 1)
    return sorted(out.items())  # pairs (multiplicity, product of factors)


def _distinct_degree(f: FieldPoly) -> list[tuple[int, FieldPoly]]:
    """Split squarefree monic f into (degree d, product of irreducibles of degree d)."""
    field = f.field
    out = []
    x = FieldPoly.x(field)
    h = x % f
    rest = f
    d = 0
    while rest.degree > 2 * (d + 1) - 1 and rest.degree > 0:
        d += 1
        h = h.powmod(field.p, rest)
        g = poly_gcd(rest, h - x)
        if not g.is_one():
            out.append((d, g))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        out.append((rest.degree, rest))
    return out


def _poly_seed(f: FieldPoly) -> int:
    seed = f.field.p
    for c in f.coeffs:
        seed = seed * 0x1F123BB5 + c + 1 & 0xFFFFFFFFFFFFFFFF
    return seed


def _equal_degree_split(f: FieldPoly, d: int, rng: random.Random) -> list[FieldPoly]:
    """Cantor-Zassenhaus: f squarefree monic, all irreducible factors of degree d."""
    field = f.field
    if f.degree == d:
        return [f]
    p = field.p
    one = FieldPoly.one(field)
    while True:
        a = FieldPoly.make(field, [rng.randrange(p) for _ in range(f.degree)])
        if a.degree < 1:
            continue
        g = poly_gcd(f, a) if not a.is_zero() else f
        if not g.is_one() and g.degree < f.degree:
            pass  # lucky split via a common factor
        elif p == 2:
            # trace map: a + a^2 + a^4 + ... (d terms)
            t = a % f
            acc = t
            for _ in range(d - 1):
                t = t * t % f
                acc = (acc + t) % f
            g = poly_gcd(f, acc)
        else:
            b = a.powmod((p ** d - 1) // 2, f)
            g = poly_gcd(f, b - one)
        if g.is_one() or g.degree == f.degree:
            continue
        return (_equal_degree_split(g.monic(), d, rng)
                + _equal_degree_split((f // g).monic(), d, rng))


def factor(f: FieldPoly) -> list[tuple[FieldPoly, int]]:
    """Complete factorization of a Laurent-normalized f into monic irreducibles.

    The product of the factors with multiplicities reproduces f exactly;
    the list is sorted by (degree, coefficients).
    """
    _require_normal(f)
    rng = random.Random(_poly_seed(f))
    out: list[tuple[FieldPoly, int]] = []
    for mult, squarefree in _squarefree_decomposition(f):
        for d, block in _distinct_degree(squarefree):
            for q in _equal_degree_split(block.monic(), d, rng):
                out.append((q, mult))
    out.sort(key=lambda pair: (pair[0].degree, pair[0].coeffs, pair[1]))
    prod = FieldPoly.one(f.field)
    for q, m in out:
        prod = prod * q ** m
    if prod != f:
        raise AssertionError(f"factorization of {f} does not remultiply")
    return out


def is_irreducible(f: FieldPoly) -> bool:
    _require_normal(f)
    fac = factor(f)
    return len(fac) == 1 and fac[0][1] == 1


def squarefree_part(f: FieldPoly) -> FieldPoly:
    """Product of the distinct monic irreducible factors of f."""
    _require_normal(f)
    out = FieldPoly.one(f.field)
    for q, _ in factor(f):
        out = out * q
    return out


def irreducibles(field: FieldSpec, max_degree: int) -> list[FieldPoly]:
    """All monic irreducible Laurent-normal polynomials up to max_degree.

    Restricted to nonzero constant term, matching what ideal components
    can carry; enumeration is by brute-force trial division.
    """
    out: list[FieldPoly] = []
    p = field.p
    for deg in range(1, max_degree + 1):
        for code in range(p ** deg):
            coeffs = []
            c = code
            for _ in range(deg):
                coeffs.append(c % p)
                c //= p
            coeffs.append(1)
            cand = FieldPoly.make(field, coeffs)
            if cand.coeffs[0] == 0:
                continue
            if not _has_small_factor(cand):
                out.append(cand)
    return out


def _has_small_factor(f: FieldPoly) -> bool:
    p = f.field.p
    half = f.degree // 2
    for deg in range(1, half + 1):
        for code in range(p ** deg):
            coeffs = []
            c = code
            for _ in range(deg):
                coeffs.append(c % p)
                c //= p
            coeffs.append(1)
            if FieldPoly.make(f.field, coeffs).divides(f):
                return True
    return False


def monic_divisors(f: FieldPoly) -> list[FieldPoly]:
    """All monic divisors of a Laurent-normalized f, the constant 1 included."""
    _require_normal(f)
    divisors = [FieldPoly.one(f.field)]
    for q, mult in factor(f):
        divisors = [d * q ** e for d in divisors for e in range(mult + 1)]
    return sorted(set(divisors))


# -- text form -----------------------------------------------------------------


def format_poly(f: FieldPoly) -> str:
    if f.is_zero():
        return "0"
    terms = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            xpow = "x" if k == 1 else f"x^{k}"
            terms.append(xpow if c == 1 else f"{c}{xpow}")
    return "+".join(terms)


class _PolyParser:
    """Recursive-descent parser for polynomial text.

    Accepts sums of terms like ``3x^2``, ``x``, ``4``, plus parenthesized
    factors with powers and implicit multiplication, e.g. ``(x+1)^2(x+2)``.
    """

    def __init__(self, text: str, field: FieldSpec):
        self.text = text
        self.pos = 0
        self.field = field

    def error(self, msg: str):
        raise InputError(f"polynomial syntax error at column {self.pos + 1}: {msg} "
                         f"in {self.text!r}")

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> FieldPoly:
        result = self.sum()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return result

    def sum(self) -> FieldPoly:
        if self.peek() == "-":
            self.pos += 1
            result = FieldPoly.zero(self.field) - self.product()
        else:
            result = self.product()
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            term = self.product()
            result = result + term if op == "+" else result - term
        return result

    def product(self) -> FieldPoly:
        result = self.power()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                result = result * self.power()
            elif ch == "(" or ch == "x" or ch.isdigit():
                result = result * self.power()
            else:
                return result

    def power(self) -> FieldPoly:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            return base ** self.integer()
        return base

    def atom(self) -> FieldPoly:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.sum()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return inner
        if ch == "x":
            self.pos += 1
            return FieldPoly.x(self.field)
        if ch.isdigit():
            return FieldPoly.make(self.field, [self.integer()])
        self.error("expected a term")

    def integer(self) -> int:
        ch = self.peek()
        if not ch.isdigit():
            self.error("expected an integer")
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return int(self.text[start:self.pos])


def parse_poly(text: str, field: FieldSpec) -> FieldPoly:
    """Parse polynomial text, reducing coefficients mod p."""
    return _PolyParser(text, field).parse()
