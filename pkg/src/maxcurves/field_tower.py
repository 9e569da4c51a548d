"""Arithmetic in a tower of finite fields F_p < F_q < F_{q^2} < F_{q^4}.

All four fields live inside the single ambient field F_{p^(4a)} with
q = p^a; the intermediate levels are recovered as fixed sets of the
appropriate Frobenius powers.  An element is a plain int in
[0, p^(4a)) encoding the coefficient vector of its residue polynomial
in base p, least significant digit = constant term.  The modulus and
the distinguished generator of F_{q^2}* are both chosen as the
lexicographically first candidates, so two towers built from the same
(p, a) are identical object for object.
"""

from __future__ import annotations

import itertools

DEFAULT_AMBIENT_BUDGET = 1 << 20

LEVELS = (1, 2, 4)


class BudgetError(RuntimeError):
    """A requested computation exceeds its enumeration budget."""


class PrecisionError(RuntimeError):
    """A series computation could not be resolved within the precision cap."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p, little-endian coefficient lists
# ---------------------------------------------------------------------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    # f need not be monic; divide through by its leading coefficient
    a = _trim(a[:])
    df = len(f) - 1
    linv = pow(f[-1], -1, p)
    while len(a) - 1 >= df and a:
        c = (a[-1] * linv) % p
        shift = len(a) - 1 - df
        if c:
            for i, fi in enumerate(f):
                a[shift + i] = (a[shift + i] - c * fi) % p
        _trim(a)
    return a


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(a[:]), _trim(b[:])
    while b:
        a, b = b, _poly_mod(a, b, p)
    if a:
        linv = pow(a[-1], -1, p)
        a = [(c * linv) % p for c in a]
    return a


def _poly_powmod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    r = [1]
    b = _poly_mod(base, f, p)
    while e:
        if e & 1:
            r = _poly_mod(_poly_mul(r, b, p), f, p)
        b = _poly_mod(_poly_mul(b, b, p), f, p)
        e >>= 1
    return r


def _is_irreducible_generic(f: list[int], p: int) -> bool:
    # a monic degree-n polynomial with no irreducible factor of degree
    # <= n // 2 is irreducible; such factors divide T^(p^i) - T
    n = len(f) - 1
    r = [0, 1]
    for _ in range(n // 2):
        r = _poly_powmod(r, p, f, p)
        g = _poly_gcd([(c - t) % p for c, t in itertools.zip_longest(r, [0, 1], fillvalue=0)], f, p)
        if len(g) - 1 > 0:
            return False
    return True


# bitmask fast path for p = 2: bit i of the mask is the coefficient of T^i

def _gf2_mod(a: int, f: int) -> int:
    df = f.bit_length() - 1
    while a.bit_length() - 1 >= df and a:
        a ^= f << (a.bit_length() - 1 - df)
    return a


def _gf2_mulmod(x: int, y: int, f: int, n: int) -> int:
    r = 0
    top = 1 << n
    while y:
        if y & 1:
            r ^= x
        y >>= 1
        x <<= 1
        if x & top:
            x ^= f
    return r


def _gf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _gf2_mod(a, b)
    return a


def _is_irreducible_gf2(f: int, n: int) -> bool:
    r = 2  # the polynomial T
    for _ in range(n // 2):
        r = _gf2_mulmod(r, r, f, n)
        if _gf2_gcd(r ^ 2, f) != 1:
            return False
    return True


class FieldTower:
    """The tower F_p < F_q < F_{q^2} < F_{q^4} inside F_{p^(4a)}.

    Levels are named by the exponent of q: level 1 is F_q, level 2 is
    F_{q^2} (the base field k of the curves), level 4 is F_{q^4},
    which coincides with the ambient field.
    """

    def __init__(self, p: int, a: int, *, budget: int = DEFAULT_AMBIENT_BUDGET,
                 use_tables: bool | None = None):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if a < 1:
            raise ValueError("extension exponent a must be >= 1")
        self.p = p
        self.a = a
        self.q = p ** a
        self.q2 = self.q ** 2
        self.q4 = self.q ** 4
        self.degree = 4 * a
        self.order = self.q4
        if self.order > budget:
            raise BudgetError(
                f"ambient order p^(4a) = {self.order} exceeds budget {budget}")
        self.budget = budget
        self.modulus = self._find_modulus()
        self._fmask = None
        if p == 2:
            self._fmask = sum(c << i for i, c in enumerate(self.modulus))
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if use_tables is None:
            use_tables = self.order <= DEFAULT_AMBIENT_BUDGET
        if use_tables:
            self._build_tables()
        self.xi = self._find_k_generator()
        self._level_cache: dict[int, tuple[int, ...]] = {}

    # -- construction ------------------------------------------------------

    def _find_modulus(self) -> tuple[int, ...]:
        p, n = self.p, self.degree
        for tail in itertools.product(range(p), repeat=n):
            f = list(tail) + [1]
            if p == 2:
                mask = sum(c << i for i, c in enumerate(f))
                ok = _is_irreducible_gf2(mask, n)
            else:
                ok = _is_irreducible_generic(f, p)
            if ok:
                return tuple(f)
        raise RuntimeError("no irreducible modulus found")  # unreachable

    def _mul_raw(self, x: int, y: int) -> int:
        """Product without tables, straight from the residue polynomials."""
        if self.p == 2:
            return _gf2_mulmod(x, y, self._fmask, self.degree)
        ax, ay = self.coeffs(x), self.coeffs(y)
        prod = _poly_mul(list(ax), list(ay), self.p)
        return self.element(_poly_mod(prod, list(self.modulus), self.p))

    def _pow_raw(self, x: int, e: int) -> int:
        if e < 0:
            x = self._pow_raw(x, self.order - 2)
            e = -e
        r, b = 1, x
        while e:
            if e & 1:
                r = self._mul_raw(r, b)
            b = self._mul_raw(b, b)
            e >>= 1
        return r

    def _build_tables(self) -> None:
        n1 = self.order - 1
        fac = prime_factors(n1)
        gen = None
        for cand in range(2, self.order):
            if self._pow_raw(cand, n1) != 1:
                continue  # defensive; every unit satisfies this
            if all(self._pow_raw(cand, n1 // f) != 1 for f in fac):
                gen = cand
                break
        if gen is None:
            raise RuntimeError("no generator of the ambient unit group")
        exp = [0] * n1
        log = [0] * self.order
        acc = 1
        for i in range(n1):
            exp[i] = acc
            log[acc] = i
            acc = self._mul_raw(acc, gen)
        if acc != 1:
            raise RuntimeError("generator order mismatch")
        self._exp, self._log = exp, log

    def _find_k_generator(self) -> int:
        target = self.q2 - 1
        fac = prime_factors(target)
        for tail in itertools.product(range(self.p), repeat=self.degree):
            x = self.element(tail)
            if x == 0:
                continue
            if self.pow(x, target) != 1:
                continue
            if all(self.pow(x, target // f) != 1 for f in fac):
                return x
        raise RuntimeError("no generator of F_{q^2}* found")  # unreachable

    # -- encoding ----------------------------------------------------------

    def element(self, coeffs) -> int:
        """Encode a residue-coefficient sequence (constant term first)."""
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + (c % self.p)
        return code

    def coeffs(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.degree):
            x, r = divmod(x, self.p)
            out.append(r)
        return tuple(out)

    def lex_key(self, x: int) -> tuple[int, ...]:
        return self.coeffs(x)

    # -- ring operations ---------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        p = self.p
        code, mult = 0, 1
        for _ in range(self.degree):
            x, rx = divmod(x, p)
            y, ry = divmod(y, p)
            code += ((rx + ry) % p) * mult
            mult *= p
        return code

    def neg(self, x: int) -> int:
        if self.p == 2:
            return x
        p = self.p
        code, mult = 0, 1
        for _ in range(self.degree):
            x, rx = divmod(x, p)
            code += (-rx % p) * mult
            mult *= p
        return code

    def sub(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[x] + self._log[y]) % (self.order - 1)]
        return self._mul_raw(x, y)

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            return self._exp[(-self._log[x]) % (self.order - 1)]
        return self._pow_raw(x, self.order - 2)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        if self._exp is not None:
            return self._exp[(self._log[x] * e) % (self.order - 1)]
        return self._pow_raw(x, e)

    # -- tower structure ----------------------------------------------------

    def level_order(self, level: int) -> int:
        if level not in LEVELS:
            raise ValueError(f"level must be one of {LEVELS}")
        return self.q ** level

    def in_level(self, x: int, level: int) -> bool:
        return self.pow(x, self.level_order(level)) == x

    def subfield_level(self, x: int) -> int:
        """Smallest level of the tower containing x (level 4 = ambient)."""
        for level in LEVELS:
            if self.in_level(x, level):
                return level
        raise RuntimeError("element outside ambient field")  # unreachable

    def elements(self, level: int) -> tuple[int, ...]:
        """All elements of the given level, sorted lexicographically."""
        if level in self._level_cache:
            return self._level_cache[level]
        size = self.level_order(level)
        if self._exp is not None:
            step = (self.order - 1) // (size - 1)
            elems = [0] + [self._exp[k * step] for k in range(size - 1)]
        else:
            elems = [x for x in range(self.order) if self.in_level(x, level)]
        elems.sort(key=self.lex_key)
        out = tuple(elems)
        self._level_cache[level] = out
        return out

    def trace(self, x: int, from_level: int, to_level: int) -> int:
        self._check_levels(x, from_level, to_level)
        s = self.level_order(to_level)
        acc, t = 0, x
        for _ in range(from_level // to_level):
            acc = self.add(acc, t)
            t = self.pow(t, s)
        return acc

    def norm(self, x: int, from_level: int, to_level: int) -> int:
        self._check_levels(x, from_level, to_level)
        s = self.level_order(to_level)
        acc, t = 1, x
        for _ in range(from_level // to_level):
            acc = self.mul(acc, t)
            t = self.pow(t, s)
        return acc

    def _check_levels(self, x: int, from_level: int, to_level: int) -> None:
        if from_level not in LEVELS or to_level not in LEVELS:
            raise ValueError(f"levels must be among {LEVELS}")
        if from_level % to_level:
            raise ValueError(f"level {to_level} is not a subfield of level {from_level}")
        if not self.in_level(x, from_level):
            raise ValueError(f"element {x} is not in level {from_level}")

    def frobenius_k(self, x: int) -> int:
        """The q^2-power map, the arithmetic Frobenius over level 2."""
        return self.pow(x, self.q2)

    # -- reporting -----------------------------------------------------------

    def report(self) -> dict:
        return {
            "p": self.p,
            "a": self.a,
            "q": self.q,
            "modulus": list(self.modulus),
            "xi": list(self.coeffs(self.xi)),
        }

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, a={self.a}, q={self.q})"


def build_tower(p: int, a: int, *, budget: int = DEFAULT_AMBIENT_BUDGET) -> FieldTower:
    """Construct the deterministic tower for q = p^a."""
    return FieldTower(p, a, budget=budget)
