"""Tableau combinatorics and exact Specht-module construction.

The integral representation matrices are computed on the basis of standard
polytabloids, ordered lexicographically by column reading word.  Coordinates
of an arbitrary module element (a sparse integer combination of tabloids) are
found by reduction against the leading tabloids of the standard polytabloids,
which are maximal in tabloid dominance order; a Garnir rewriting engine at the
tableau level is provided as well and the two routes are cross-checked in the
test suite.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .gf2 import BitMatrix, GF2Module
from .intlinalg import IntMatrix
from .perms import Partition, Permutation


@dataclass(frozen=True)
class Tableau:
    """A bijective filling of a Young diagram by 1..n."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = sorted(x for row in self.rows for x in row)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("tableau entries must be a bijection onto 1..n")
        lens = [len(r) for r in self.rows]
        if any(lens[i] < lens[i + 1] for i in range(len(lens) - 1)):
            raise ValueError("row lengths must be weakly decreasing")

    @classmethod
    def of(cls, rows) -> "Tableau":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def columns(self) -> list[list[int]]:
        ncols = len(self.rows[0]) if self.rows else 0
        return [
            [row[j] for row in self.rows if len(row) > j]
            for j in range(ncols)
        ]

    def column_word(self) -> tuple[int, ...]:
        return tuple(x for col in self.columns() for x in col)

    def is_standard(self) -> bool:
        for row in self.rows:
            if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                return False
        for col in self.columns():
            if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
                return False
        return True

    def apply(self, sigma: Permutation) -> "Tableau":
        if sigma.degree != self.n:
            raise ValueError("degree mismatch")
        return Tableau(tuple(tuple(sigma.apply(x) for x in row) for row in self.rows))

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __repr__(self):
        return f"Tableau({self.to_lists()})"


# A tabloid is the row-equivalence class of a tableau: each row sorted
# ascending, rows kept in shape order.
Tabloid = tuple[tuple[int, ...], ...]


def tabloid_of(t: Tableau) -> Tabloid:
    return tuple(tuple(sorted(row)) for row in t.rows)


def perm_tabloid(sigma: Permutation, T: Tabloid) -> Tabloid:
    return tuple(tuple(sorted(sigma.apply(x) for x in row)) for row in T)


_DOM_KEYS: dict[Tabloid, tuple[int, ...]] = {}


def _dominance_key(T: Tabloid) -> tuple[int, ...]:
    """Injective key compatible with tabloid dominance order (bigger = more
    dominant): cumulative counts of entries <= m in the first r rows."""
    key = _DOM_KEYS.get(T)
    if key is None:
        n = sum(len(r) for r in T)
        counts = []
        for m in range(1, n + 1):
            acc = 0
            for row in T:
                acc += sum(1 for x in row if x <= m)
                counts.append(acc)
        key = tuple(counts)
        _DOM_KEYS[T] = key
    return key


def _perm_sign(order: tuple[int, ...]) -> int:
    """Sign of the permutation sending position i to order[i]."""
    inv = 0
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            if order[i] > order[j]:
                inv += 1
    return -1 if inv & 1 else 1


def polytabloid_expand(t: Tableau) -> dict[Tabloid, int]:
    """Alternating sum of tabloids over the column group of t."""
    cols = t.columns()
    shape = [len(r) for r in t.rows]
    out: dict[Tabloid, int] = {}
    col_perms = [list(itertools.permutations(range(len(c)))) for c in cols]
    for assignment in itertools.product(*col_perms):
        sign = 1
        rows = [[0] * ln for ln in shape]
        for j, (col, pi) in enumerate(zip(cols, assignment)):
            sign *= _perm_sign(pi)
            for i, pos in enumerate(pi):
                rows[i][j] = col[pos]
        T = tuple(tuple(sorted(r)) for r in rows)
        out[T] = out.get(T, 0) + sign
        if out[T] == 0:
            del out[T]
    return out


def tv_add_scaled(acc: dict[Tabloid, int], v: dict[Tabloid, int], c: int) -> None:
    for T, a in v.items():
        nv = acc.get(T, 0) + c * a
        if nv:
            acc[T] = nv
        elif T in acc:
            del acc[T]


def tv_apply_perm(sigma: Permutation, v: dict[Tabloid, int]) -> dict[Tabloid, int]:
    out: dict[Tabloid, int] = {}
    for T, c in v.items():
        S = perm_tabloid(sigma, T)
        nv = out.get(S, 0) + c
        if nv:
            out[S] = nv
        elif S in out:
            del out[S]
    return out


def _gen_standard(shape: tuple[int, ...]) -> list[Tableau]:
    n = sum(shape)
    rows = [[0] * ln for ln in shape]
    out = []

    def place(k: int):
        if k > n:
            out.append(Tableau.of(rows))
            return
        for i, ln in enumerate(shape):
            j = next((jj for jj in range(ln) if rows[i][jj] == 0), None)
            if j is None:
                continue
            if i > 0 and (len(rows[i - 1]) <= j or rows[i - 1][j] == 0):
                continue
            rows[i][j] = k
            place(k + 1)
            rows[i][j] = 0

    place(1)
    return out


@lru_cache(maxsize=None)
def standard_tableaux(shape_parts: tuple[int, ...]) -> tuple[Tableau, ...]:
    """All standard tableaux of a shape, ordered by column reading word."""
    tabs = _gen_standard(shape_parts)
    tabs.sort(key=lambda t: t.column_word())
    return tuple(tabs)


def hook_length_count(shape: Partition) -> int:
    conj = shape.conjugate()
    d = factorial(shape.n)
    for i, ln in enumerate(shape.parts):
        for j in range(ln):
            hook = (ln - j - 1) + (conj.parts[j] - i - 1) + 1
            assert d % hook == 0
            d //= hook
    return d


class NotInSpechtModule(ValueError):
    pass


class _SpechtBasis:
    """Per-shape data: ordered standard basis, expansions, leader lookup."""

    def __init__(self, shape_parts: tuple[int, ...]):
        self.shape = Partition(shape_parts)
        self.tableaux = standard_tableaux(shape_parts)
        self.dim = len(self.tableaux)
        self.expansions = [polytabloid_expand(t) for t in self.tableaux]
        self.leader_index = {tabloid_of(t): i for i, t in enumerate(self.tableaux)}
        assert len(self.leader_index) == self.dim


@lru_cache(maxsize=None)
def _basis(shape_parts: tuple[int, ...]) -> _SpechtBasis:
    return _SpechtBasis(shape_parts)


def straighten(v: dict[Tabloid, int], shape: Partition) -> list[int]:
    """Exact coordinates of v on the standard-polytabloid basis.

    Reduces the dominance-maximal tabloid of v against the unique standard
    polytabloid led by it; the maximum strictly decreases, so this terminates.
    Raises NotInSpechtModule if v is not an integer combination of
    polytabloids of the given shape.
    """
    B = _basis(shape.parts)
    coords = [0] * B.dim
    if not v:
        return coords
    work = dict(v)
    heap = [(tuple(-x for x in _dominance_key(T)), T) for T in work]
    heapq.heapify(heap)
    while heap:
        _, T = heapq.heappop(heap)
        c = work.get(T, 0)
        if c == 0:
            continue
        idx = B.leader_index.get(T)
        if idx is None:
            raise NotInSpechtModule(f"tabloid {T} is not the leader of any standard polytabloid")
        coords[idx] += c
        for S, a in B.expansions[idx].items():
            nv = work.get(S, 0) - c * a
            if nv:
                if S not in work:
                    heapq.heappush(heap, (tuple(-x for x in _dominance_key(S)), S))
                work[S] = nv
            elif S in work:
                del work[S]
    if work:
        raise NotInSpechtModule("reduction left a nonzero remainder")
    return coords


def expand_coords(coords: list[int], shape: Partition) -> dict[Tabloid, int]:
    """Inverse of straighten: tabloid expansion of a coordinate vector."""
    B = _basis(shape.parts)
    out: dict[Tabloid, int] = {}
    for c, exp in zip(coords, B.expansions):
        if c:
            tv_add_scaled(out, exp, c)
    return out


# ---------------------------------------------------------------------------
# Garnir rewriting at the tableau level
# ---------------------------------------------------------------------------

def _sort_columns(t: Tableau) -> tuple[Tableau, int]:
    cols = t.columns()
    sign = 1
    sorted_cols = []
    for col in cols:
        order = sorted(range(len(col)), key=lambda i: col[i])
        sign *= _perm_sign(tuple(order))
        sorted_cols.append([col[i] for i in order])
    shape = [len(r) for r in t.rows]
    rows = [[sorted_cols[j][i] for j in range(ln)] for i, ln in enumerate(shape)]
    return Tableau.of(rows), sign


def _find_row_violation(t: Tableau) -> tuple[int, int] | None:
    """Leftmost adjacent column pair with a descent, topmost row: (row, col)."""
    for j in range(len(t.rows[0]) - 1):
        for i, row in enumerate(t.rows):
            if len(row) > j + 1 and row[j] > row[j + 1]:
                return i, j
    return None


def garnir_expand(t: Tableau) -> dict[Tableau, int]:
    """e_t as an integer combination of standard polytabloids, by the Garnir
    relation at the leftmost column-descent violation, topmost row."""
    return dict(_garnir_expand_cached(t))


@lru_cache(maxsize=200000)
def _garnir_expand_cached(t: Tableau) -> tuple[tuple[Tableau, int], ...]:
    u, sign = _sort_columns(t)
    viol = _find_row_violation(u)
    if viol is None:
        return ((u, sign),)
    i, j = viol
    colA = u.columns()[j]
    colB = u.columns()[j + 1]
    A = colA[i:]
    B = colB[: i + 1]
    union = sorted(A + B)
    cells = [(r, j) for r in range(i, len(colA))] + [(r, j + 1) for r in range(i + 1)]
    old_vals = A + B
    out: dict[Tableau, int] = {}
    for sel in itertools.combinations(union, len(A)):
        if list(sel) == sorted(A):
            continue  # identity shuffle
        rest = sorted(set(union) - set(sel))
        new_vals = list(sel) + rest
        # sign of the rearrangement of the involved values
        pos = {v: k for k, v in enumerate(old_vals)}
        sign_shuffle = _perm_sign(tuple(pos[v] for v in new_vals))
        rows = [list(r) for r in u.rows]
        for (r, c), v in zip(cells, new_vals):
            rows[r][c] = v
        for sub_t, sub_c in _garnir_expand_cached(Tableau.of(rows)):
            nv = out.get(sub_t, 0) - sign_shuffle * sub_c
            if nv:
                out[sub_t] = nv
            elif sub_t in out:
                del out[sub_t]
    return tuple((k, sign * v) for k, v in out.items())


def garnir_coords(t: Tableau) -> list[int]:
    """Coordinates of e_t on the standard basis via Garnir rewriting."""
    B = _basis(t.shape.parts)
    index = {tab: i for i, tab in enumerate(B.tableaux)}
    coords = [0] * B.dim
    for s, c in garnir_expand(t).items():
        coords[index[s]] += c
    return coords


# ---------------------------------------------------------------------------
# Representation matrices
# ---------------------------------------------------------------------------

_MATRIX_CACHE: dict[tuple[tuple[int, ...], tuple[int, ...]], IntMatrix] = {}


def action_matrix(sigma: Permutation, shape: Partition) -> IntMatrix:
    """Matrix of sigma on the Specht module, columns = images of basis vectors."""
    if sigma.degree != shape.n:
        raise ValueError("degree mismatch")
    n = shape.n
    # 1-dimensional shapes: avoid the n!-term column-group expansion
    if shape.parts == (n,):
        return IntMatrix([[1]])
    if shape.parts == tuple([1] * n):
        return IntMatrix([[1 if sigma.is_even() else -1]])
    key = (shape.parts, sigma.images)
    M = _MATRIX_CACHE.get(key)
    if M is not None:
        return M
    B = _basis(shape.parts)
    cols = []
    for exp in B.expansions:
        cols.append(straighten(tv_apply_perm(sigma, exp), shape))
    M = IntMatrix([[cols[j][i] for j in range(B.dim)] for i in range(B.dim)])
    _MATRIX_CACHE[key] = M
    return M


def twisted_action_matrix(sigma: Permutation, shape: Partition) -> IntMatrix:
    """Matrix of sigma on the conjugate module: sign-twist of the action."""
    M = action_matrix(sigma, shape)
    return M if sigma.is_even() else -M


@dataclass
class SpechtRep:
    """Ordered standard basis of a shape plus matrices of requested elements."""

    shape: Partition

    @property
    def basis(self) -> tuple[Tableau, ...]:
        return _basis(self.shape.parts).tableaux

    @property
    def dim(self) -> int:
        return _basis(self.shape.parts).dim

    def matrix(self, sigma: Permutation, twisted: bool = False) -> IntMatrix:
        return twisted_action_matrix(sigma, self.shape) if twisted else action_matrix(sigma, self.shape)

    def generator_matrices(self, twisted: bool = False) -> list[IntMatrix]:
        n = self.shape.n
        gens = [Permutation.from_cycles(n, [(1, 2)])]
        if n > 2:
            gens.append(Permutation.from_cycles(n, [tuple(range(1, n + 1))]))
        return [self.matrix(g, twisted) for g in gens]

    def to_payload(self) -> dict:
        return {
            "shape": list(self.shape.parts),
            "dim": self.dim,
            "basis": [t.to_lists() for t in self.basis],
        }


def rep_mod2(mats: list[IntMatrix]) -> GF2Module:
    """Reduce integer representation matrices mod 2."""
    if not mats:
        raise ValueError("need at least one matrix")
    dim = mats[0].nrows
    return GF2Module(dim, [BitMatrix.from_entries(M.rows) for M in mats])


def specht_mod2_module(n: int, shape: Partition) -> GF2Module:
    rep = SpechtRep(shape)
    return rep_mod2(rep.generator_matrices())


# ---------------------------------------------------------------------------
# Permutation (tabloid) modules, for cross-checks
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def tabloids_of_shape(shape_parts: tuple[int, ...]) -> tuple[Tabloid, ...]:
    n = sum(shape_parts)

    def split(remaining: tuple[int, ...], parts: tuple[int, ...]):
        if not parts:
            yield ()
            return
        k = parts[0]
        for chosen in itertools.combinations(remaining, k):
            rest = tuple(x for x in remaining if x not in set(chosen))
            for tail in split(rest, parts[1:]):
                yield (chosen,) + tail

    return tuple(sorted(split(tuple(range(1, n + 1)), shape_parts)))


def tabloid_action_matrix(sigma: Permutation, shape: Partition) -> IntMatrix:
    """Permutation matrix of sigma on the tabloid basis of the shape."""
    tabs = tabloids_of_shape(shape.parts)
    index = {T: i for i, T in enumerate(tabs)}
    m = len(tabs)
    M = [[0] * m for _ in range(m)]
    for j, T in enumerate(tabs):
        M[index[perm_tabloid(sigma, T)]][j] = 1
    return IntMatrix(M)


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama character oracle (via beta-sets)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def character_mn(shape_parts: tuple[int, ...], type_parts: tuple[int, ...]) -> int:
    """Character of the Specht module of the given shape on the given class."""
    if sum(shape_parts) != sum(type_parts):
        raise ValueError("shape and cycle type must partition the same n")
    if not type_parts:
        return 1
    m = type_parts[0]
    rest = type_parts[1:]
    k = len(shape_parts)
    betas = [shape_parts[i] + (k - 1 - i) for i in range(k)]
    bset = set(betas)
    total = 0
    for b in betas:
        nb = b - m
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in betas if nb < c < b)
        new_betas = sorted((bb if bb != b else nb) for bb in betas)
        parts = tuple(
            sorted((bb - i for i, bb in enumerate(new_betas)), reverse=True)
        )
        parts = tuple(p for p in parts if p > 0)
        sign = -1 if height & 1 else 1
        total += sign * character_mn(parts, rest)
    return total


def fixed_space_dim_via_characters(shape: Partition, sigma_type: Partition) -> int:
    """Dimension of the fixed space of a class element, as the average of the
    character over the cyclic group it generates."""
    order = 1
    for ln in sigma_type.parts:
        order = order * ln // _gcd(order, ln)
    total = 0
    for j in range(order):
        powered = _power_cycle_type(sigma_type, j)
        total += character_mn(shape.parts, powered.parts)
    assert total % order == 0
    return total // order


def _power_cycle_type(ct: Partition, j: int) -> Partition:
    out = []
    for ln in ct.parts:
        g = _gcd(ln, j % ln) if j % ln else ln
        out.extend([ln // g] * g)
    return Partition(tuple(sorted(out, reverse=True)))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
