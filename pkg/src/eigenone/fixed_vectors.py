"""Explicit eigenvector-1 witnesses: for a permutation sigma and one of the
two audited shapes, a tableau t whose orbit sum E = sum_j e_{sigma^j t} is a
nonzero fixed vector of sigma.

Case selection: permutations with enough fixed points (3 for the hook shape,
4 for the two-row shape) get a directly fixed polytabloid; otherwise the
tableau is chosen by the size of the smallest cycle.  Every returned vector
is verified nonzero (straighten + rank) and verified fixed (action matrix);
a zero result raises, it is never silently returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intlinalg import IntMatrix, rank_exact
from .perms import Partition, Permutation
from .specht import (
    Tableau,
    Tabloid,
    action_matrix,
    polytabloid_expand,
    straighten,
    tv_add_scaled,
    tv_apply_perm,
)

FAMILY_HOOK = "(n-2,1,1)"
FAMILY_TWO = "(n-2,2)"


class FixedVectorError(RuntimeError):
    """The case analysis produced a zero vector: an implementation bug or a
    genuine gap in the case table."""


def fixed_vector_sum(sigma: Permutation, t: Tableau) -> dict[Tabloid, int]:
    """E = sum of e_{sigma^j t} over 0 <= j < order(sigma); always fixed by
    sigma, not guaranteed nonzero (an n-cycle on the (n-1,1) shape gives 0)."""
    if sigma.degree != t.n:
        raise ValueError("degree mismatch")
    acc: dict[Tabloid, int] = {}
    cur = t
    for _ in range(sigma.order()):
        tv_add_scaled(acc, polytabloid_expand(cur), 1)
        cur = cur.apply(sigma)
    return acc


def _cycles_sorted(sigma: Permutation):
    return sorted(sigma.cycles(), key=lambda c: (len(c), c))


def _hook_column(sigma: Permutation) -> tuple[tuple[int, int, int], bool]:
    """(column entries, direct) for the (n-2,1,1) shape; direct means
    sigma e_t = e_t so E is just a multiple of e_t."""
    fixed = sorted(sigma.fixed_points())
    cycles = _cycles_sorted(sigma)
    if len(fixed) >= 3:
        return (fixed[0], fixed[1], fixed[2]), True
    c0 = cycles[0]
    others = cycles[1:]
    k = len(c0)
    if len(fixed) == 2:
        if k == 3:
            return (c0[0], c0[1], c0[2]), True
        if len(cycles) == 1 and k >= 4:
            return (c0[0], fixed[0], fixed[1]), False
        return (fixed[0], fixed[1], c0[0]), False
    if len(fixed) == 1:
        f = fixed[0]
        if k == 2:
            return (f, others[0][0], c0[1]), False
        if k == 3:
            return (c0[0], c0[1], c0[2]), True
        if len(cycles) == 1:
            return (c0[0], c0[-1], f), False
        return (f, c0[-2], c0[-1]), False
    # fixed-point-free
    if len(cycles) == 1:
        return (c0[0], c0[-2], c0[-1]), False
    if k == 2:
        q = next((c for c in others if len(c) >= 3), None)
        if q is not None:
            return (q[0], q[1], q[2]), False
        return (c0[0], others[-1][-1], c0[1]), False
    if k == 3:
        return (c0[0], c0[1], c0[2]), True
    return (c0[0], c0[-2], c0[-1]), False


def _two_row_block(sigma: Permutation) -> tuple[tuple[int, int, int, int], bool]:
    """(2x2 block entries (p, q, r, s), direct) for the (n-2,2) shape; rows of
    the block are (p, q) and (r, s)."""
    fixed = sorted(sigma.fixed_points())
    cycles = _cycles_sorted(sigma)
    if len(fixed) >= 4:
        return (fixed[0], fixed[1], fixed[2], fixed[3]), True
    c0 = cycles[0]
    others = cycles[1:]
    k = len(c0)
    if len(fixed) == 3:
        return (fixed[0], fixed[1], fixed[2], c0[0]), False
    if len(fixed) == 2:
        return (fixed[0], fixed[1], c0[0], c0[1]), False
    if len(fixed) == 1:
        f = fixed[0]
        if len(cycles) == 1 or k >= 4:
            return (f, c0[2], c0[0], c0[1]), False
        return (f, c0[0], others[0][0], others[0][1]), False
    if len(cycles) == 1:
        return (c0[0], c0[1], c0[-2], c0[-1]), False
    q = others[-1]
    return (c0[0], c0[1], q[0], q[1]), False


def witness_tableau(sigma: Permutation, family: str) -> tuple[Tableau, bool]:
    """The tableau of the case analysis, plus whether e_t itself is fixed."""
    n = sigma.degree
    if n < 5:
        raise ValueError("need n >= 5")
    if family == FAMILY_HOOK:
        col, direct = _hook_column(sigma)
        rest = sorted(set(range(1, n + 1)) - set(col))
        return Tableau.of([[col[0]] + rest, [col[1]], [col[2]]]), direct
    if family == FAMILY_TWO:
        block, direct = _two_row_block(sigma)
        rest = sorted(set(range(1, n + 1)) - set(block))
        return Tableau.of([[block[0], block[1]] + rest, [block[2], block[3]]]), direct
    raise ValueError(f"unknown family {family!r}")


@dataclass
class FixedVector:
    sigma: Permutation
    family: str
    tableau: Tableau
    vector: dict[Tabloid, int]
    coords: list[int]

    def to_payload(self) -> dict:
        return {
            "sigma": self.sigma.cycle_string(),
            "family": self.family,
            "tableau": self.tableau.to_lists(),
            "coords": [str(c) for c in self.coords],
            "nonzero": any(self.coords),
        }


def build_fixed_vector(sigma: Permutation, family: str) -> FixedVector:
    """Select the witness tableau for sigma, form E, and verify it: nonzero
    (straighten, then rank of the coordinate row) and fixed (action matrix
    times coordinates reproduces them).  Raises FixedVectorError on zero."""
    n = sigma.degree
    shape = Partition((n - 2, 1, 1)) if family == FAMILY_HOOK else Partition((n - 2, 2))
    t, direct = witness_tableau(sigma, family)
    vec = polytabloid_expand(t) if direct else fixed_vector_sum(sigma, t)
    coords = straighten(vec, shape)
    if rank_exact(IntMatrix([coords])) != 1:
        raise FixedVectorError(
            f"case analysis produced the zero vector for {sigma.cycle_string()} on {family}"
        )
    if tv_apply_perm(sigma, vec) != vec:
        raise FixedVectorError(
            f"vector for {sigma.cycle_string()} on {family} is not fixed (tabloid level)"
        )
    M = action_matrix(sigma, shape)
    if M.apply(coords) != coords:
        raise FixedVectorError(
            f"vector for {sigma.cycle_string()} on {family} is not fixed (matrix level)"
        )
    return FixedVector(sigma, family, t, vec, coords)
