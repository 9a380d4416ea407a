"""Arithmetic side: the 2-parameter degree-9 polynomial family, exact
discriminants by resultants, factorization types over prime fields, Frobenius
cycle-type scans against a target permutation group, hyperelliptic point
counts, and L-polynomials with the mod-2 parity cross-check.

All polynomial arithmetic is exact; randomized equal-degree splitting is
seeded and reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .gf2 import BitMatrix, gf2_charpoly, rank_nullspace
from .intlinalg import IntMatrix, det_exact
from .perms import Partition, PermGroup, class_rep_for
from .symplectic import build_space, embed_permutation

# ZPoly: list of ints, ascending degree, no trailing zeros.
ZPoly = list


def zp_trim(f: ZPoly) -> ZPoly:
    while f and f[-1] == 0:
        f.pop()
    return f


def zp_degree(f: ZPoly) -> int:
    return len(f) - 1


def zp_deriv(f: ZPoly) -> ZPoly:
    return zp_trim([i * c for i, c in enumerate(f)][1:])


def zp_eval(f: ZPoly, x: int) -> int:
    v = 0
    for c in reversed(f):
        v = v * x + c
    return v


# ---------------------------------------------------------------------------
# The degree-9 family g_{a,t} and its auxiliary form r(a, t)
# ---------------------------------------------------------------------------

def malle_g(a: int, t: int) -> ZPoly:
    """The 2-parameter degree-9 family, ascending coefficients."""
    return [
        a**6,
        -3 * a**6 + 6 * a**5 + 18 * a**4 - 36 * a**3,
        3 * a**6 - 12 * a**5 - 57 * a**4 + 282 * a**3 - 324 * a**2 - 3 * t,
        -(a**6) + 6 * a**5 + 81 * a**4 - 604 * a**3 + 1350 * a**2 - 972 * a + t,
        -51 * a**4 + 516 * a**3 - 1773 * a**2 + 2430 * a - 972,
        9 * a**4 - 168 * a**3 + 903 * a**2 - 1890 * a + 1296,
        18 * a**3 - 195 * a**2 + 648 * a - 675,
        15 * a**2 - 102 * a + 171,
        6 * a - 21,
        1,
    ]


def malle_r(a: int, t: int) -> int:
    return (
        a**12 - 12 * a**11 + 96 * a**10 - 520 * a**9 + 2166 * a**8 - 6960 * a**7
        - 2 * a**6 * t + 17524 * a**6 + 12 * a**5 * t - 34200 * a**5
        + 48 * a**4 * t + 49329 * a**4 - 272 * a**3 * t - 49572 * a**3
        + 342 * a**2 * t + 26244 * a**2 - 108 * a * t + t**2 + 108 * t
    )


def malle_disc_formula(a: int, t: int) -> int:
    """disc(g_{a,t}) in closed form: -2^8 3^9 t^4 a^6 r(a,t)^3."""
    return -(2**8) * 3**9 * t**4 * a**6 * malle_r(a, t) ** 3


def malle_is_squarefree_specialization(a: int, t: int) -> bool:
    """True iff the specialization has nonzero discriminant (a, t, r all
    nonzero), i.e. defines a squarefree degree-9 polynomial."""
    return a != 0 and t != 0 and malle_r(a, t) != 0


def resultant(f: ZPoly, g: ZPoly) -> int:
    """Res(f, g) by a fraction-free determinant of the Sylvester matrix."""
    m, n = zp_degree(f), zp_degree(g)
    if m < 0 or n < 0:
        return 0
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    rows = []
    fr = list(reversed(f))  # descending
    gr = list(reversed(g))
    for i in range(n):
        rows.append([0] * i + fr + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gr + [0] * (size - n - 1 - i))
    return det_exact(IntMatrix(rows))


def disc_resultant(f: ZPoly) -> int:
    """(-1)^{d(d-1)/2} Res(f, f') / lc(f), exact."""
    d = zp_degree(f)
    if d < 2:
        raise ValueError("discriminant needs degree >= 2")
    res = resultant(f, zp_deriv(f))
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    q, r = divmod(sign * res, f[-1])
    assert r == 0
    return q


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


def primes_up_to(n: int) -> list[int]:
    sieve = bytearray([1]) * (n + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(2, n + 1) if sieve[p]]


def bad_primes(f: ZPoly, limit: int | None = None) -> list[int]:
    """Primes dividing disc(f) or the leading coefficient.

    With a limit, only primes up to the limit are tested (divisibility only);
    without one the product is factored completely by trial division.
    """
    d = abs(disc_resultant(f) * f[-1])
    if limit is not None:
        return [p for p in primes_up_to(limit) if d % p == 0]
    out = set()
    for p in [2, 3]:
        while d % p == 0:
            out.add(p)
            d //= p
    p = 5
    while p * p <= d:
        if d % p == 0:
            out.add(p)
            while d % p == 0:
                d //= p
        p += 2
    if d > 1:
        out.add(d)
    return sorted(out)


# ---------------------------------------------------------------------------
# F_p[x] (p an odd word-size prime)
# ---------------------------------------------------------------------------

def fp_trim(f, p):
    while f and f[-1] % p == 0:
        f.pop()
    return [c % p for c in f]


def fp_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return fp_trim(out, p)


def fp_divmod(f, g, p):
    f = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    q = [0] * max(0, len(f) - dg)
    while len(f) - 1 >= dg and f:
        c = f[-1] * inv % p
        s = len(f) - 1 - dg
        q[s] = c
        for i, b in enumerate(g):
            f[s + i] = (f[s + i] - c * b) % p
        f = fp_trim(f, p)
        if not f:
            break
    return fp_trim(q, p), f


def fp_mod(f, g, p):
    return fp_divmod(f, g, p)[1]


def fp_gcd(f, g, p):
    f, g = fp_trim(list(f), p), fp_trim(list(g), p)
    while g:
        f, g = g, fp_mod(f, g, p)
    if f:
        inv = pow(f[-1], -1, p)
        f = [c * inv % p for c in f]
    return f


def fp_powmod(base, e: int, mod, p):
    result = [1]
    base = fp_mod(base, mod, p)
    while e:
        if e & 1:
            result = fp_mod(fp_mul(result, base, p), mod, p)
        base = fp_mod(fp_mul(base, base, p), mod, p)
        e >>= 1
    return result


def fp_monic(f, p):
    if not f:
        return f
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


@dataclass(frozen=True)
class FactorizationType:
    """Multiset of irreducible-factor degrees of f mod p."""

    p: int
    degrees: tuple[int, ...]
    squarefree: bool

    @property
    def cycle_type(self) -> Partition:
        if not self.squarefree:
            raise ValueError("cycle type only meaningful for squarefree reduction")
        return Partition(tuple(sorted(self.degrees, reverse=True)))

    def to_payload(self) -> dict:
        return {"p": self.p, "degrees": list(self.degrees), "squarefree": self.squarefree}


def _equal_degree_split(f, d: int, p: int, rng: random.Random):
    """Cantor-Zassenhaus split of a product of degree-d irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)] + [1]
        a = fp_trim(a, p)
        g = fp_gcd(f, a, p)
        if 0 < len(g) - 1 < n:
            pieces = [g, fp_divmod(f, g, p)[0]]
        else:
            b = fp_powmod(a, (p**d - 1) // 2, f, p)
            b = list(b)
            if b:
                b[0] = (b[0] - 1) % p
            else:
                b = [p - 1]
            g = fp_gcd(f, fp_trim(b, p), p)
            if not (0 < len(g) - 1 < n):
                continue
            pieces = [g, fp_divmod(f, g, p)[0]]
        out = []
        for piece in pieces:
            out.extend(_equal_degree_split(fp_monic(piece, p), d, p, rng))
        return out


def factor_mod_p(f: ZPoly, p: int, seed: int = 0xC0FFEE) -> FactorizationType:
    """Squarefree test, then distinct-degree + equal-degree factorization."""
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    if f[-1] % p == 0:
        raise ValueError("p divides the leading coefficient")
    fp = fp_monic(fp_trim([c % p for c in f], p), p)
    n = len(fp) - 1
    if fp_gcd(fp, fp_trim([i * c % p for i, c in enumerate(fp)][1:], p), p) != [1]:
        return FactorizationType(p, (), squarefree=False)
    rng = random.Random((seed, p, tuple(f)).__hash__())
    degrees = []
    factors = []
    h = [0, 1]  # x
    v = list(fp)
    d = 0
    while len(v) - 1 > 0:
        d += 1
        if 2 * d > len(v) - 1:
            degrees.append(len(v) - 1)
            factors.append(v)
            break
        h = fp_powmod(h, p, v, p)
        g = fp_gcd(v, _sub_x(h, p), p)
        if len(g) - 1 > 0:
            for piece in _equal_degree_split(fp_monic(g, p), d, p, rng):
                degrees.append(d)
                factors.append(piece)
            v = fp_monic(fp_divmod(v, g, p)[0], p)
            h = fp_mod(h, v, p)
    prod = [1]
    for q in factors:
        prod = fp_mul(prod, q, p)
    assert prod == fp, "product of factors must reproduce f mod p"
    assert sum(degrees) == n
    return FactorizationType(p, tuple(sorted(degrees)), squarefree=True)


def _sub_x(h, p):
    h = list(h)
    while len(h) < 2:
        h.append(0)
    h[1] = (h[1] - 1) % p
    return fp_trim(h, p)


# ---------------------------------------------------------------------------
# Frobenius scan
# ---------------------------------------------------------------------------

@dataclass
class FrobeniusRecord:
    p: int
    degrees: tuple[int, ...]
    eig1_nullity: int
    type_in_group: bool

    @property
    def has_eigenvalue_one(self) -> bool:
        return self.eig1_nullity >= 1

    def to_payload(self) -> dict:
        return {
            "p": self.p,
            "cycle_type": list(self.degrees),
            "eig1_nullity": self.eig1_nullity,
            "has_eigenvalue_one": self.has_eigenvalue_one,
            "type_in_group": self.type_in_group,
        }


@dataclass
class FrobeniusScan:
    f: ZPoly
    pmax: int
    group_name: str
    bad_primes: list[int]
    records: list[FrobeniusRecord]

    @property
    def all_eig1(self) -> bool:
        return all(r.has_eigenvalue_one for r in self.records)

    @property
    def all_types_in_group(self) -> bool:
        return all(r.type_in_group for r in self.records)

    def to_payload(self) -> dict:
        return {
            "poly": [str(c) for c in self.f],
            "pmax": self.pmax,
            "group": self.group_name,
            "bad_primes": self.bad_primes,
            "all_have_eigenvalue_one": self.all_eig1,
            "all_types_in_group": self.all_types_in_group,
            "eig1_offender_primes": [r.p for r in self.records if not r.has_eigenvalue_one],
            "type_offender_primes": [r.p for r in self.records if not r.type_in_group],
            "records": [r.to_payload() for r in self.records],
        }


def _scan_prime_worker(work: tuple) -> tuple[int, tuple[int, ...]]:
    f, p, seed = work
    ft = factor_mod_p(list(f), p, seed)
    assert ft.squarefree, f"p={p} should be a good prime"
    return p, ft.degrees


def frobenius_scan(
    f: ZPoly, pmax: int, group: PermGroup, seed: int = 0xC0FFEE, jobs: int = 1
) -> FrobeniusScan:
    """For each good odd prime p <= pmax: factorization type of f mod p, the
    eigenvalue-1 nullity of an embedded permutation of that cycle type, and
    whether the type occurs among the group's class cycle types.

    A clean scan is statistical consistency with the target group being the
    Galois image, never a proof.  Per-prime work runs on `jobs` processes;
    output order is ascending p regardless."""
    d = zp_degree(f)
    bad = set(bad_primes(f, pmax))
    space = build_space(d)
    group_types = group.cycle_types()
    listed_bad = []
    good = []
    for p in primes_up_to(pmax):
        if p == 2 or p in bad:
            listed_bad.append(p)
        else:
            good.append(p)
    work = [(tuple(f), p, seed) for p in good]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            raw = list(pool.map(_scan_prime_worker, work, chunksize=64))
    else:
        raw = [_scan_prime_worker(w) for w in work]
    raw.sort()
    nullity_cache: dict[tuple[int, ...], int] = {}
    records = []
    for p, degrees in raw:
        ct = tuple(sorted(degrees, reverse=True))
        if ct not in nullity_cache:
            M = embed_permutation(class_rep_for(Partition(ct)), space)
            rank, _ = rank_nullspace(M + BitMatrix.identity(space.dim))
            nullity_cache[ct] = space.dim - rank
        records.append(FrobeniusRecord(p, degrees, nullity_cache[ct], ct in group_types))
    return FrobeniusScan(f, pmax, group.name, listed_bad, records)


# ---------------------------------------------------------------------------
# F_{p^k} and hyperelliptic point counts
# ---------------------------------------------------------------------------

POINT_BUDGET = 10**7


@lru_cache(maxsize=None)
def field_modulus(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree k over F_p
    (ordered by the coefficient tuple (c_0..c_{k-1}))."""
    if k == 1:
        return (0, 1)

    def irreducible(coeffs) -> bool:
        f = list(coeffs) + [1]
        x = [0, 1]
        h = x
        for _ in range(k // 2):
            h = fp_powmod(h, p, f, p)
            if len(fp_gcd(f, _sub_x(h, p), p)) - 1 != 0:
                return False
        h = fp_powmod(x, p**k, f, p)
        return _sub_x(h, p) == []

    import itertools as it

    for coeffs in it.product(range(p), repeat=k):
        if irreducible(coeffs):
            return tuple(coeffs) + (1,)
    raise AssertionError("no irreducible found")


class Fq:
    """F_{p^k} with elements as integers encoding base-p coefficient vectors."""

    def __init__(self, p: int, k: int):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = list(field_modulus(p, k))

    def decode(self, x: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(x % self.p)
            x //= self.p
        return out

    def encode(self, coeffs) -> int:
        x = 0
        for c in reversed(list(coeffs)):
            x = x * self.p + c % self.p
        return x

    def add(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        fa = self.decode(a)
        fb = self.decode(b)
        prod = fp_mul(fa, fb, self.p)
        rem = fp_mod(prod, self.modulus, self.p)
        return self.encode(rem + [0] * (self.k - len(rem)))

    def elements(self):
        return range(self.q)

    def squares(self) -> set[int]:
        return {self.mul(x, x) for x in self.elements()}


def curve_count(f: ZPoly, p: int, k: int) -> int:
    """Number of points of y^2 = f(x) over F_{p^k}, deg f odd (one point at
    infinity); naive enumeration with a precomputed square table."""
    d = zp_degree(f)
    if d % 2 == 0:
        raise ValueError("only odd-degree models here")
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    if p**k > POINT_BUDGET:
        raise ValueError(f"p^k = {p**k} exceeds the enumeration budget {POINT_BUDGET}")
    disc = disc_resultant(f)
    if disc % p == 0 or f[-1] % p == 0:
        raise ValueError(f"bad prime {p}")
    F = Fq(p, k)
    sq = F.squares()
    fp = [c % p for c in f]
    count = 1  # point at infinity (odd degree)
    for x in F.elements():
        # Horner in F_q
        v = 0
        for c in reversed(fp):
            v = F.add(F.mul(v, x), c)
        if v == 0:
            count += 1
        elif v in sq:
            count += 2
    g = (d - 1) // 2
    q = p**k
    assert (count - (q + 1)) ** 2 <= 4 * g * g * q, "Weil bound violated"
    return count


@dataclass
class LPolynomial:
    """Numerator of the zeta function of a genus-g curve over F_p, degree 2g,
    c_0 = 1, with the functional equation c_{2g-i} = p^{g-i} c_i."""

    p: int
    coeffs: list[int]

    @property
    def genus(self) -> int:
        return len(self.coeffs) // 2

    def jacobian_order(self) -> int:
        return sum(self.coeffs)

    def reversed_mod2(self) -> int:
        """x^{2g} P(1/x) reduced mod 2, as a GF(2) bit-poly: the charpoly of
        Frobenius on the 2-torsion."""
        out = 0
        deg = len(self.coeffs) - 1
        for i, c in enumerate(self.coeffs):
            if c % 2:
                out |= 1 << (deg - i)
        return out

    def to_payload(self) -> dict:
        return {"p": self.p, "coeffs": [str(c) for c in self.coeffs]}


def lpoly_from_counts(f: ZPoly, p: int) -> LPolynomial:
    """L-polynomial of y^2 = f(x) (deg f = 9, genus 4) over F_p from point
    counts over F_{p^k}, k = 1..4, via Newton's identities plus the
    functional equation."""
    d = zp_degree(f)
    if d != 9:
        raise ValueError("genus-4 odd model expected (degree 9)")
    g = 4
    s = []
    for k in range(1, g + 1):
        s.append(p**k + 1 - curve_count(f, p, k))
    # Newton: e_k = (1/k) * sum_{i=1..k} (-1)^(i-1) e_{k-i} s_i;  c_i = (-1)^i e_i
    e = [1]
    for k in range(1, g + 1):
        acc = 0
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * s[i - 1]
        q, r = divmod(acc, k)
        assert r == 0, "Newton identity division must be exact"
        e.append(q)
    c = [(-1) ** i * e[i] for i in range(g + 1)]
    full = c + [0] * g
    for i in range(g):
        full[2 * g - i] = p ** (g - i) * c[i]
    # coefficient bound check: |c_i| <= C(2g, i) p^{i/2}
    from math import comb

    for i, ci in enumerate(full):
        assert ci * ci <= comb(2 * g, i) ** 2 * p**i, "Weil coefficient bound violated"
    return LPolynomial(p, full)


def frobenius_charpoly_gf2(f: ZPoly, p: int, seed: int = 0xC0FFEE) -> int:
    """GF(2) characteristic polynomial of the embedded Frobenius permutation
    for f at a good prime p (well-defined up to conjugacy)."""
    ft = factor_mod_p(f, p, seed)
    if not ft.squarefree:
        raise ValueError(f"bad prime {p}")
    space = build_space(zp_degree(f))
    M = embed_permutation(class_rep_for(ft.cycle_type), space)
    return gf2_charpoly(M)
