"""Exact cyclotomic field arithmetic and linear algebra.

A CycNumber is a residue modulo the n-th cyclotomic polynomial with
Fraction coefficients; every operation is exact.  Same-order values have a
unique reduced form, so equality and hashing are reliable within one field
order; mixed-order operands are promoted to the lcm order first.  The
linear solver is plain Gauss-Jordan over the field, returning a particular
solution and a kernel basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

_F0 = Fraction(0)
_F1 = Fraction(1)


def _poly_trim(p):
    i = len(p)
    while i > 0 and p[i - 1] == 0:
        i -= 1
    return tuple(p[:i])


def _poly_mul(p, q):
    if not p or not q:
        return ()
    out = [_F0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _poly_trim(out)


def _poly_sub(p, q):
    n = max(len(p), len(q))
    p = list(p) + [_F0] * (n - len(p))
    q = list(q) + [_F0] * (n - len(q))
    return _poly_trim([a - b for a, b in zip(p, q)])


def _poly_divmod(p, q):
    """Exact division with remainder by a monic-leading polynomial q."""
    p = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quot = [_F0] * max(len(p) - dq, 0)
    for i in range(len(p) - 1, dq - 1, -1):
        c = p[i] / lead
        if c != 0:
            quot[i - dq] = c
            for j in range(dq + 1):
                p[i - dq + j] -= c * q[j]
    return _poly_trim(quot), _poly_trim(p)


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int):
    """Coefficients of the n-th cyclotomic polynomial, low degree first."""
    if n < 1:
        raise ValueError("order must be positive")
    num = [_F0] * (n + 1)
    num[0], num[n] = Fraction(-1), _F1
    num = tuple(num)
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(num, cyclotomic_poly(d))
            if r:
                raise AssertionError("cyclotomic division left a remainder")
            num = q
    return num


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


def _reduce(coeffs, n):
    phi = euler_phi(n)
    if len(coeffs) >= phi + 1:
        _, coeffs = _poly_divmod(coeffs, cyclotomic_poly(n))
    return tuple(coeffs) + (_F0,) * (phi - len(coeffs))


class CycNumber:
    """An element of the n-th cyclotomic field, in reduced canonical form."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        object.__setattr__(self, "order", int(order))
        object.__setattr__(self, "coeffs",
                           _reduce(tuple(Fraction(c) for c in coeffs), self.order))

    def __setattr__(self, *args):
        raise AttributeError("CycNumber is immutable")

    @staticmethod
    def from_rational(order, value) -> "CycNumber":
        return CycNumber(order, (Fraction(value),))

    def promote(self, order: int) -> "CycNumber":
        if order == self.order:
            return self
        if order % self.order != 0:
            raise ValueError(f"cannot embed order {self.order} into {order}")
        k = order // self.order
        out = [_F0] * ((len(self.coeffs) - 1) * k + 1 or 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] += c
        return CycNumber(order, out)

    def _match(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNumber.from_rational(self.order, other)
        if not isinstance(other, CycNumber):
            return None, None
        if self.order == other.order:
            return self, other
        lcm = self.order * other.order // gcd(self.order, other.order)
        return self.promote(lcm), other.promote(lcm)

    def __add__(self, other):
        a, b = self._match(other)
        if a is None:
            return NotImplemented
        return CycNumber(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        a, b = self._match(other)
        if a is None:
            return NotImplemented
        return CycNumber(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._match(other)
        if a is None:
            return NotImplemented
        return CycNumber(a.order, _poly_mul(a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # extended euclid against Phi_n, keeping r_k = s_k * self (mod Phi_n)
        r0, s0 = cyclotomic_poly(self.order), ()
        r1, s1 = _poly_trim(self.coeffs), (_F1,)
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("element shares a factor with the modulus")
        c = r1[0]
        return CycNumber(self.order, tuple(x / c for x in s1))

    def __truediv__(self, other):
        a, b = self._match(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycNumber.from_rational(self.order, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "CycNumber":
        """Complex conjugation: the field automorphism sending zeta to zeta^-1."""
        n = self.order
        out = [_F0] * n
        out[0] = self.coeffs[0]
        for i in range(1, len(self.coeffs)):
            c = self.coeffs[i]
            if c != 0:
                out[(n - i) % n] += c
        return CycNumber(n, out)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycNumber):
            return NotImplemented
        a, b = self._match(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def serialize(self):
        return [self.order, [[c.numerator, c.denominator] for c in self.coeffs]]

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                terms.append(f"{c}*z{self.order}^{i}" if i > 1 else f"{c}*z{self.order}")
        return "Cyc(" + (" + ".join(terms) if terms else "0") + ")"


def cyc_zero(n: int) -> CycNumber:
    return CycNumber.from_rational(n, 0)


def cyc_one(n: int) -> CycNumber:
    return CycNumber.from_rational(n, 1)


def zeta(n: int, k: int = 1) -> CycNumber:
    k %= n
    return CycNumber(n, (_F0,) * k + (_F1,))


def roots_of_unity(n: int):
    """All n-th roots of unity as elements of the order-n field."""
    return tuple(zeta(n, k) for k in range(n))


def multiplicative_order(x: CycNumber):
    """The order of x in the unit group, or None if x is not a root of unity.

    Roots of unity in the order-n field all have order dividing lcm(2, n),
    so the search is finite.
    """
    if x.is_zero():
        return None
    bound = x.order if x.order % 2 == 0 else 2 * x.order
    acc = x
    for k in range(1, bound + 1):
        if acc.is_one():
            return k
        acc = acc * x
    return None


# -- matrices (tuples of tuples, row-major) -------------------------------


def mat_id(n, order):
    one, zero = cyc_one(order), cyc_zero(order)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def mat_zero(rows, cols, order):
    zero = cyc_zero(order)
    return tuple((zero,) * cols for _ in range(rows))


def mat_mul(A, B):
    if not A or not B:
        return ()
    cols = len(B[0])
    inner = len(B)
    out = []
    for row in A:
        acc = []
        for j in range(cols):
            s = row[0] * B[0][j]
            for k in range(1, inner):
                s = s + row[k] * B[k][j]
            acc.append(s)
        out.append(tuple(acc))
    return tuple(out)


def mat_scale(s, A):
    return tuple(tuple(s * x for x in row) for row in A)


def mat_vec(A, v):
    out = []
    for row in A:
        s = row[0] * v[0]
        for k in range(1, len(v)):
            s = s + row[k] * v[k]
        out.append(s)
    return tuple(out)


def kron(A, B):
    """Kronecker product; empty factors give the empty matrix."""
    if not A or not B:
        return ()
    out = []
    for arow in A:
        for brow in B:
            out.append(tuple(a * b for a in arow for b in brow))
    return tuple(out)


def mat_eq(A, B):
    return len(A) == len(B) and all(ra == rb for ra, rb in zip(A, B))


def transpose(A):
    if not A:
        return ()
    return tuple(tuple(A[i][j] for i in range(len(A))) for j in range(len(A[0])))


def mat_trace(A):
    s = A[0][0]
    for i in range(1, len(A)):
        s = s + A[i][i]
    return s


@dataclass
class LinSolve:
    consistent: bool
    particular: tuple | None
    kernel: tuple
    rank: int
    pivots: tuple


def solve_linear(M, b=None) -> LinSolve:
    """Solve M x = b exactly; b = None means the homogeneous system.

    Returns a particular solution (None when inconsistent), a kernel basis
    in canonical form (one vector per free column, free coordinate 1), the
    rank, and the pivot columns.
    """
    rows = [list(r) for r in M]
    m = len(rows)
    n = len(rows[0]) if m else 0
    order = None
    for r in rows:
        for x in r:
            if isinstance(x, CycNumber):
                order = x.order
                break
        if order:
            break
    if order is None:
        order = 1
    zero, one = cyc_zero(order), cyc_one(order)
    rows = [[x if isinstance(x, CycNumber) else CycNumber.from_rational(order, x)
             for x in r] for r in rows]
    if b is None:
        rhs = [zero] * m
    else:
        rhs = [x if isinstance(x, CycNumber) else CycNumber.from_rational(order, x)
               for x in b]
    pivots = []
    r = 0
    for col in range(n):
        sel = None
        for i in range(r, m):
            if not rows[i][col].is_zero():
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        rhs[r], rhs[sel] = rhs[sel], rhs[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv for x in rows[r]]
        rhs[r] = rhs[r] * inv
        for i in range(m):
            if i != r and not rows[i][col].is_zero():
                c = rows[i][col]
                rows[i] = [x - c * y for x, y in zip(rows[i], rows[r])]
                rhs[i] = rhs[i] - c * rhs[r]
        pivots.append(col)
        r += 1
        if r == m:
            break
    consistent = all(rhs[i].is_zero() for i in range(r, m))
    particular = None
    if consistent:
        sol = [zero] * n
        for i, col in enumerate(pivots):
            sol[col] = rhs[i]
        particular = tuple(sol)
    kernel = []
    pivot_set = set(pivots)
    for free in range(n):
        if free in pivot_set:
            continue
        vec = [zero] * n
        vec[free] = one
        for i, col in enumerate(pivots):
            vec[col] = -rows[i][free]
        kernel.append(tuple(vec))
    return LinSolve(consistent, particular, tuple(kernel), len(pivots), tuple(pivots))


def mat_inv(A):
    """Exact inverse; raises ValueError when A is singular."""
    n = len(A)
    if n == 0:
        return ()
    order = A[0][0].order
    cols = []
    ident = mat_id(n, order)
    for j in range(n):
        sol = solve_linear(A, [ident[i][j] for i in range(n)])
        if not sol.consistent or sol.kernel:
            raise ValueError("matrix is singular")
        cols.append(sol.particular)
    return transpose(tuple(cols))


def rref(vectors):
    """Reduced row echelon form of a list of vectors; canonical basis of
    their span.  Returns (rows, pivots)."""
    rows = [list(v) for v in vectors]
    if not rows:
        return (), ()
    n = len(rows[0])
    out = []
    pivots = []
    for vec in rows:
        v = list(vec)
        for prow, pcol in zip(out, pivots):
            if not v[pcol].is_zero():
                c = v[pcol]
                v = [x - c * y for x, y in zip(v, prow)]
        lead = next((j for j in range(n) if not v[j].is_zero()), None)
        if lead is None:
            continue
        inv = v[lead].inverse()
        v = [x * inv for x in v]
        out.append(v)
        pivots.append(lead)
        for i, (prow, pcol) in enumerate(zip(out[:-1], pivots[:-1])):
            if not prow[lead].is_zero():
                c = prow[lead]
                out[i] = [x - c * y for x, y in zip(prow, v)]
    order = sorted(range(len(out)), key=lambda i: pivots[i])
    return (tuple(tuple(out[i]) for i in order), tuple(pivots[i] for i in order))
