"""Bit-packed linear algebra over GF(2), plus GF(2)[x] polynomial utilities.

A matrix row is a Python int with bit j = entry in column j.  Serialized hex
rows follow a fixed word convention: 64-bit words, column index little-endian
within a word, and the word covering the lowest column indices printed in the
most significant position of the hex string.

GF(2) polynomials are plain ints with bit i = coefficient of x^i.
"""

from __future__ import annotations

from dataclasses import dataclass

WORD = 64


class BitMatrix:
    """Rectangular matrix over GF(2); immutable after construction."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols: int):
        rows = tuple(int(r) for r in rows)
        mask = (1 << ncols) - 1
        if any(r & ~mask for r in rows):
            raise ValueError("row has bits beyond ncols")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls([1 << i for i in range(n)], n)

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "BitMatrix":
        m = n if m is None else m
        return cls([0] * n, m)

    @classmethod
    def from_entries(cls, entries) -> "BitMatrix":
        rows = []
        ncols = len(entries[0]) if entries else 0
        for r in entries:
            v = 0
            for j, e in enumerate(r):
                if e % 2:
                    v |= 1 << j
            rows.append(v)
        return cls(rows, ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def get(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def __eq__(self, other):
        return (
            isinstance(other, BitMatrix)
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ncols, self.rows))

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return BitMatrix([a ^ b for a, b in zip(self.rows, other.rows)], self.ncols)

    def __mul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        brows = other.rows
        out = []
        for r in self.rows:
            acc = 0
            rr = r
            while rr:
                low = rr & -rr
                acc ^= brows[low.bit_length() - 1]
                rr ^= low
            out.append(acc)
        return BitMatrix(out, other.ncols)

    def transpose(self) -> "BitMatrix":
        out = [0] * self.ncols
        for i, r in enumerate(self.rows):
            bit = 1 << i
            rr = r
            while rr:
                low = rr & -rr
                out[low.bit_length() - 1] |= bit
                rr ^= low
        return BitMatrix(out, self.nrows)

    def apply(self, v: int) -> int:
        """Matrix times column vector (v an int over column indices)."""
        out = 0
        for i, r in enumerate(self.rows):
            if (r & v).bit_count() & 1:
                out |= 1 << i
        return out

    def row_apply(self, v: int) -> int:
        """Row vector times matrix."""
        acc = 0
        vv = v
        while vv:
            low = vv & -vv
            acc ^= self.rows[low.bit_length() - 1]
            vv ^= low
        return acc

    def to_int_entries(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def to_hex_rows(self) -> list[str]:
        nwords = max(1, -(-self.ncols // WORD))
        out = []
        for r in self.rows:
            v = 0
            for w in range(nwords):
                word = (r >> (WORD * w)) & ((1 << WORD) - 1)
                v |= word << (WORD * (nwords - 1 - w))
            out.append(format(v, f"0{16 * nwords}x"))
        return out

    @classmethod
    def from_hex_rows(cls, hex_rows: list[str], ncols: int) -> "BitMatrix":
        nwords = max(1, -(-ncols // WORD))
        rows = []
        for h in hex_rows:
            v = int(h, 16)
            r = 0
            for w in range(nwords):
                word = (v >> (WORD * (nwords - 1 - w))) & ((1 << WORD) - 1)
                r |= word << (WORD * w)
            rows.append(r)
        return cls(rows, ncols)

    def __repr__(self):
        return f"BitMatrix({self.nrows}x{self.ncols})"


def rank_nullspace(M: BitMatrix) -> tuple[int, list[int]]:
    """Rank and a basis of {v : M v = 0} (v ints over column indices)."""
    rows = list(M.rows)
    n, m = M.nrows, M.ncols
    pivots = {}  # column -> reduced row
    for r in rows:
        for c, pr in pivots.items():
            if (r >> c) & 1:
                r ^= pr
        if r:
            c = r.bit_length() - 1
            # back-substitute into existing rows to reach RREF
            for c2 in list(pivots):
                if (pivots[c2] >> c) & 1:
                    pivots[c2] ^= r
            pivots[c] = r
    rank = len(pivots)
    free_cols = [c for c in range(m) if c not in pivots]
    basis = []
    for f in free_cols:
        v = 1 << f
        for c, pr in pivots.items():
            if (pr >> f) & 1:
                v |= 1 << c
        basis.append(v)
    assert rank + len(basis) == m
    return rank, basis


def gf2_rank(M: BitMatrix) -> int:
    rank, _ = rank_nullspace(M)
    return rank


def gf2_det(M: BitMatrix) -> int:
    """Determinant over GF(2): 1 iff square and full rank."""
    if not M.is_square:
        raise ValueError("determinant of non-square matrix")
    return 1 if gf2_rank(M) == M.nrows else 0


def is_invertible(M: BitMatrix) -> bool:
    return M.is_square and gf2_rank(M) == M.nrows


def gf2_charpoly(M: BitMatrix) -> int:
    """Characteristic polynomial det(xI - M) over GF(2), as a bit-poly int.

    Hessenberg reduction by similarity transforms, then the standard
    Hessenberg determinant recurrence.
    """
    if not M.is_square:
        raise ValueError("characteristic polynomial of non-square matrix")
    n = M.nrows
    if n == 0:
        return 1
    H = list(M.rows)

    def swap(i, k):
        H[i], H[k] = H[k], H[i]
        bi, bk = 1 << i, 1 << k
        for r in range(n):
            hi = (H[r] >> i) & 1
            hk = (H[r] >> k) & 1
            if hi != hk:
                H[r] ^= bi | bk

    for j in range(n - 2):
        piv = None
        for i in range(j + 1, n):
            if (H[i] >> j) & 1:
                piv = i
                break
        if piv is None:
            continue
        if piv != j + 1:
            swap(piv, j + 1)
        for i in range(j + 2, n):
            if (H[i] >> j) & 1:
                H[i] ^= H[j + 1]  # row op; compensate with column op below
                bit = 1 << (j + 1)
                for r in range(n):
                    if (H[r] >> i) & 1:
                        H[r] ^= bit
    # p[k] = charpoly of leading k x k block, as bit-poly
    p = [1] * (n + 1)
    for k in range(1, n + 1):
        val = (p[k - 1] << 1) ^ (p[k - 1] if (H[k - 1] >> (k - 1)) & 1 else 0)
        prod = 1
        for j in range(k - 1, 0, -1):
            prod &= (H[j] >> (j - 1)) & 1  # subdiagonal h_{j+1,j}
            if not prod:
                break
            if (H[j - 1] >> (k - 1)) & 1:  # h_{j,k}
                val ^= p[j - 1]
        p[k] = val
    return p[n]


def preserves_form(M: BitMatrix, J: BitMatrix) -> bool:
    """True iff M^T J M = J."""
    if not (M.is_square and J.is_square and M.nrows == J.nrows):
        raise ValueError("dimension mismatch")
    return M.transpose() * J * M == J


class ClosureOverflow(RuntimeError):
    pass


def matrix_group_closure(generators: list[BitMatrix], bound: int = 10**6) -> list[BitMatrix]:
    """Exact breadth-first closure of a matrix generator list over GF(2)."""
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].ncols
    if any(g.ncols != n or g.nrows != n for g in generators):
        raise ValueError("generators must be square of a common dimension")
    ident = BitMatrix.identity(n)
    seen = {ident.rows: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in generators:
                prod = m * g
                if prod.rows not in seen:
                    seen[prod.rows] = prod
                    if len(seen) > bound:
                        raise ClosureOverflow(f"matrix closure exceeded bound {bound}")
                    nxt.append(prod)
        frontier = nxt
    return [seen[k] for k in sorted(seen)]


@dataclass
class GF2Module:
    """A module over GF(2) given by the generator action matrices."""

    dim: int
    gens: list[BitMatrix]

    def __post_init__(self):
        for g in self.gens:
            if not (g.is_square and g.nrows == self.dim):
                raise ValueError("generator dimension mismatch")
            if not is_invertible(g):
                raise ValueError("generators must be invertible over GF(2)")


# ---------------------------------------------------------------------------
# GF(2)[x] polynomials as ints (bit i = coefficient of x^i)
# ---------------------------------------------------------------------------

def pdeg(f: int) -> int:
    return f.bit_length() - 1


def pmul(a: int, b: int) -> int:
    out = 0
    aa = a
    shift = 0
    while aa:
        if aa & 1:
            out ^= b << shift
        aa >>= 1
        shift += 1
    return out


def pmod(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("poly mod by zero")
    db = pdeg(b)
    while pdeg(a) >= db:
        a ^= b << (pdeg(a) - db)
    return a


def pdiv(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("poly div by zero")
    db = pdeg(b)
    q = 0
    while pdeg(a) >= db:
        s = pdeg(a) - db
        q ^= 1 << s
        a ^= b << s
    return q


def pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, pmod(a, b)
    return a


def pderiv(f: int) -> int:
    # derivative in characteristic 2: keep odd-exponent terms, shift down one
    out = 0
    for i in range(1, f.bit_length(), 2):
        if (f >> i) & 1:
            out |= 1 << (i - 1)
    return out


def psqrt(f: int) -> int:
    """Square root of f when f = g(x)^2 (all exponents even)."""
    out = 0
    i = 0
    while (f >> (2 * i)) != 0:
        if (f >> (2 * i)) & 1:
            out |= 1 << i
        i += 1
    return out


def peval1(f: int) -> int:
    """f(1) over GF(2) = parity of the number of terms."""
    return f.bit_count() & 1


def poly_to_hex(f: int) -> str:
    return format(f, "x")


def poly_from_hex(s: str) -> int:
    return int(s, 16)


def _berlekamp_squarefree(f: int) -> list[int]:
    """Distinct irreducible factors of a squarefree f over GF(2)."""
    d = pdeg(f)
    if d <= 1:
        return [f]
    # rows of the Frobenius matrix: x^{2i} mod f
    rows = []
    cur = 1  # x^0
    xsq = pmod(0b100, f)
    for _ in range(d):
        rows.append(cur)
        cur = pmod(pmul(cur, xsq), f)
    R = BitMatrix(rows, d)
    # fixed space of Frobenius: a with a.R = a, i.e. (R^T + I) a = 0
    RtI = R.transpose() + BitMatrix.identity(d)
    _, basis = rank_nullspace(RtI)
    if len(basis) == 1:
        return [f]
    h = next(b for b in basis if pdeg(b) >= 1)  # non-constant subalgebra element
    g1 = pgcd(f, h)
    g2 = pgcd(f, h ^ 1)
    assert 0 < pdeg(g1) < d and 0 < pdeg(g2) < d
    return _berlekamp_squarefree(g1) + _berlekamp_squarefree(g2)


def poly_factor(f: int) -> dict[int, int]:
    """Full factorization over GF(2): {irreducible: multiplicity}."""
    if f == 0:
        raise ValueError("cannot factor the zero polynomial")
    out: dict[int, int] = {}
    if f == 1:
        return out

    def add(p, m):
        out[p] = out.get(p, 0) + m

    def decompose(g: int, mult: int):
        if pdeg(g) <= 0:
            return
        d = pderiv(g)
        if d == 0:
            decompose(psqrt(g), 2 * mult)
            return
        c = pgcd(g, d)
        w = pdiv(g, c)
        i = 1
        while pdeg(w) > 0:
            y = pgcd(w, c)
            z = pdiv(w, y)
            if pdeg(z) > 0:
                for p in _berlekamp_squarefree(z):
                    add(p, i * mult)
            w = y
            c = pdiv(c, y)
            i += 1
        if pdeg(c) > 0:
            decompose(c, mult)

    decompose(f, 1)
    return out


def poly_is_irreducible(f: int) -> bool:
    if pdeg(f) <= 0:
        return False
    fac = poly_factor(f)
    return len(fac) == 1 and next(iter(fac.values())) == 1


def eval_poly_at_matrix(f: int, M: BitMatrix) -> BitMatrix:
    """f(M) over GF(2), by Horner's rule."""
    n = M.nrows
    acc = BitMatrix.zeros(n)
    ident = BitMatrix.identity(n)
    for i in range(pdeg(f), -1, -1):
        acc = acc * M
        if (f >> i) & 1:
            acc = acc + ident
    return acc
