"""Eigenvalue-1 audits: check det(I - M) = 0 on every conjugacy class of a
representation, over the integers or over GF(2), and scan 2-generated
subgroups of a GF(2) matrix group for irreducibility and the same property.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import meataxe
from .gf2 import (
    BitMatrix,
    GF2Module,
    gf2_charpoly,
    pdiv,
    peval1,
    rank_nullspace,
)
from .intlinalg import IntMatrix, rank_exact, _bareiss
from .perms import Partition, PermGroup, class_reps_symmetric
from .specht import action_matrix, twisted_action_matrix
from .symplectic import build_space, embed_permutation

FAMILY_HOOK = "(n-2,1,1)"
FAMILY_TWO = "(n-2,2)"
FAMILY_TWO_CONJ = "(n-2,2)'"
FAMILIES = (FAMILY_HOOK, FAMILY_TWO, FAMILY_TWO_CONJ)


@dataclass
class ClassRecord:
    label: str
    size: int
    element_order: int
    det_one_minus: int  # det(I - M); over GF(2) this is 0 or 1
    alg_mult: int
    geo_mult: int

    @property
    def has_eigenvalue_one(self) -> bool:
        return self.det_one_minus == 0

    def to_payload(self) -> dict:
        return {
            "class": self.label,
            "size": self.size,
            "element_order": self.element_order,
            "det_one_minus": str(self.det_one_minus),
            "eig1_algebraic": self.alg_mult,
            "eig1_geometric": self.geo_mult,
            "has_eigenvalue_one": self.has_eigenvalue_one,
        }


@dataclass
class AuditReport:
    rep_id: str
    dim: int
    ring: str  # "ZZ" | "GF2"
    records: list[ClassRecord]
    irreducible: bool | None = None
    absolutely_irreducible: bool | None = None

    @property
    def unisingular(self) -> bool:
        return all(r.has_eigenvalue_one for r in self.records)

    @property
    def offenders(self) -> list[str]:
        return [r.label for r in self.records if not r.has_eigenvalue_one]

    def to_payload(self) -> dict:
        out = {
            "representation": self.rep_id,
            "dim": self.dim,
            "ring": self.ring,
            "unisingular": self.unisingular,
            "offenders": self.offenders,
            "classes": [r.to_payload() for r in self.records],
        }
        if self.irreducible is not None:
            out["irreducible"] = self.irreducible
        if self.absolutely_irreducible is not None:
            out["absolutely_irreducible"] = self.absolutely_irreducible
        return out


def _int_class_record(label: str, size: int, order: int, M: IntMatrix) -> ClassRecord:
    n = M.nrows
    B = IntMatrix.identity(n) - M
    rows = [list(r) for r in B.rows]
    rank, det = _bareiss(rows)
    geo = n - rank
    if det != 0:
        assert geo == 0
        return ClassRecord(label, size, order, det, 0, 0)
    # algebraic multiplicity: dim - rank((M-I)^k) once the rank stabilizes;
    # equals the charpoly route, cross-checked in the tests
    N = M - IntMatrix.identity(n)
    P = N
    r_prev = rank
    while True:
        P = P * N
        r_next = rank_exact(P)
        if r_next == r_prev:
            return ClassRecord(label, size, order, 0, n - r_prev, geo)
        r_prev = r_next


def _gf2_class_record(label: str, size: int, order: int, M: BitMatrix) -> ClassRecord:
    n = M.nrows
    MI = M + BitMatrix.identity(n)
    rank, _ = rank_nullspace(MI)
    geo = n - rank
    det = 0 if geo else 1
    cp = gf2_charpoly(M)
    alg = 0
    while peval1(cp) == 0:
        cp = pdiv(cp, 0b11)  # exact division by (x + 1)
        alg += 1
    return ClassRecord(label, size, order, det, alg, geo)


def audit_int_classes(rep_id: str, classes: list[tuple[str, int, int, IntMatrix]]) -> AuditReport:
    """classes: (label, class size, element order, matrix), one per class."""
    if not classes:
        raise ValueError("no classes to audit")
    dim = classes[0][3].nrows
    records = [_int_class_record(*c) for c in classes]
    return AuditReport(rep_id, dim, "ZZ", records)


def audit_gf2_classes(
    rep_id: str,
    classes: list[tuple[str, int, int, BitMatrix]],
    module: GF2Module | None = None,
    seed: int = meataxe.DEFAULT_SEED,
) -> AuditReport:
    if not classes:
        raise ValueError("no classes to audit")
    dim = classes[0][3].nrows
    records = [_gf2_class_record(*c) for c in classes]
    report = AuditReport(rep_id, dim, "GF2", records)
    if module is not None:
        report.irreducible = meataxe.is_irreducible(module, seed)
        if report.irreducible:
            report.absolutely_irreducible = meataxe.is_absolutely_irreducible(module, seed)
        else:
            report.absolutely_irreducible = False
    return report


# ---------------------------------------------------------------------------
# Specht audits
# ---------------------------------------------------------------------------

def audit_specht(n: int, family: str, group: str = "s_n", extended: bool = False) -> AuditReport:
    """Audit a Specht-family representation over the integers, one matrix per
    conjugacy class (det(I - M) is a class function).

    family: "(n-2,1,1)", "(n-2,2)" or "(n-2,2)'"; group: "s_n" or "a_n".
    Default range is 5 <= n <= 13; extended=True raises the cap to 17 (the
    class count grows as p(n), so expect minutes there).  For a_n only even
    classes are audited (every element of A_n lies in an even S_n class and
    det(I - M) is constant on S_n classes); reported sizes are S_n class
    sizes.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if group not in ("s_n", "a_n"):
        raise ValueError(f"unknown group {group!r}")
    bound = 17 if extended else 13
    if not 5 <= n <= bound:
        raise ValueError(f"n={n} outside supported range 5..{bound}")
    shape = Partition((n - 2, 1, 1)) if family == FAMILY_HOOK else Partition((n - 2, 2))
    twisted = family == FAMILY_TWO_CONJ
    classes = []
    for ct, rep in class_reps_symmetric(n):
        if group == "a_n" and not ct.is_even_class():
            continue
        M = twisted_action_matrix(rep, shape) if twisted else action_matrix(rep, shape)
        classes.append((str(ct), ct.sn_class_size(), rep.order(), M))
    rep_id = f"specht:{family}:n={n}:{group}"
    return audit_int_classes(rep_id, classes)


def conjecture_table(ns: list[int]) -> list[dict]:
    """det(I - M) for the sign-twisted two-row module on the class of an
    (n-2)-cycle times a transposition, with the closed form 2^(k-1)(2k-1)."""
    rows = []
    for n in ns:
        if n < 5 or n % 2 == 0:
            raise ValueError("table rows need odd n >= 5")
        shape = Partition((n - 2, 2))
        ct = Partition((n - 2, 2))
        from .perms import class_rep_for

        rep = class_rep_for(ct)
        M = twisted_action_matrix(rep, shape)
        rows_ = [list(r) for r in (IntMatrix.identity(M.nrows) - M).rows]
        _, det = _bareiss(rows_)
        k = (n - 1) // 2
        rows.append(
            {
                "n": n,
                "dim": M.nrows,
                "class": str(ct),
                "det_one_minus": str(det),
                "closed_form": str(2 ** (k - 1) * (2 * k - 1)),
                "matches": det == 2 ** (k - 1) * (2 * k - 1),
            }
        )
    return rows


# ---------------------------------------------------------------------------
# Embedded permutation-group audits
# ---------------------------------------------------------------------------

def audit_embedded_group(G: PermGroup, seed: int = meataxe.DEFAULT_SEED) -> AuditReport:
    """Embed a permutation group symplectically and audit its classes over GF(2)."""
    space = build_space(G.degree)
    from .symplectic import embed_group

    module = embed_group(G, space)
    classes = []
    for size, rep, order in G.conjugacy_classes():
        label = str(rep.cycle_type())
        classes.append((label, size, order, embed_permutation(rep, space)))
    return audit_gf2_classes(f"embed:{G.name}:d={G.degree}", classes, module, seed)


def audit_gf2_module_elements(rep_id: str, module: GF2Module, bound: int = 10**6,
                              seed: int = meataxe.DEFAULT_SEED) -> AuditReport:
    """Audit a matrix group by closing it and computing its own classes."""
    from .gf2 import matrix_group_closure

    els = matrix_group_closure(module.gens, bound)
    classes = _matrix_conjugacy_classes(els, module.gens)
    recs = [
        (f"c{i}", size, order, rep)
        for i, (size, rep, order) in enumerate(classes)
    ]
    return audit_gf2_classes(rep_id, recs, module, seed)


def _matrix_order(M: BitMatrix) -> int:
    ident = BitMatrix.identity(M.nrows)
    P = M
    o = 1
    while P != ident:
        P = P * M
        o += 1
        assert o <= 10**7
    return o


def _matrix_conjugacy_classes(els: list[BitMatrix], gens: list[BitMatrix]):
    """(size, rep, order) via conjugation orbits under the generators."""
    gen_invs = [_matrix_inverse(g) for g in gens]
    unseen = {m.rows: m for m in els}
    out = []
    while unseen:
        key = min(unseen)
        rep = unseen[key]
        orbit = {key}
        frontier = [rep]
        while frontier:
            nxt = []
            for x in frontier:
                for g, gi in zip(gens, gen_invs):
                    y = g * x * gi
                    if y.rows not in orbit:
                        orbit.add(y.rows)
                        nxt.append(y)
            frontier = nxt
        for k in orbit:
            unseen.pop(k, None)
        out.append((len(orbit), rep, _matrix_order(rep)))
    out.sort(key=lambda rec: (rec[2], rec[0], rec[1].rows))
    return out


def _matrix_inverse(M: BitMatrix) -> BitMatrix:
    n = M.nrows
    aug = [(r << n) | (1 << i) for i, r in enumerate(M.rows)]
    pivots = {}
    for v in aug:
        for c, pr in pivots.items():
            if (v >> (c + n)) & 1:
                v ^= pr
        if v >> n:
            c = (v >> n).bit_length() - 1
            for c2 in list(pivots):
                if (pivots[c2] >> (c + n)) & 1:
                    pivots[c2] ^= v
            pivots[c] = v
    if len(pivots) != n:
        raise ValueError("matrix is singular")
    mask = (1 << n) - 1
    return BitMatrix([pivots[i] & mask for i in range(n)], n)


# ---------------------------------------------------------------------------
# 2-generated subgroup census
# ---------------------------------------------------------------------------

@dataclass
class CensusEntry:
    order: int
    irreducible: bool
    unisingular: bool
    count: int
    class_size_fingerprints: list[tuple[int, ...]] = field(default_factory=list)

    def to_payload(self) -> dict:
        return {
            "order": self.order,
            "irreducible": self.irreducible,
            "unisingular": self.unisingular,
            "count": self.count,
            "class_size_fingerprints": [list(f) for f in self.class_size_fingerprints],
        }


def subgroup_census(elements: list[BitMatrix], seed: int = meataxe.DEFAULT_SEED) -> list[CensusEntry]:
    """Scan every unordered generator pair from `elements`, close the
    subgroup, and record (order, irreducible?, unisingular?) per distinct
    subgroup.  Class-size fingerprints are attached to irreducible subgroups.

    Finds all 2-generated subgroups; makes no claim of finding subgroups that
    need three or more generators.
    """
    if len(elements) > 2000:
        raise ValueError("census input capped at 2000 elements")
    n = len(elements)
    dim = elements[0].nrows
    index = {m.rows: i for i, m in enumerate(elements)}
    if len(index) != n:
        raise ValueError("duplicate elements in census input")
    # Cayley table over element indices (the input must be a closed group)
    table = []
    for a in elements:
        row = []
        for b in elements:
            key = (a * b).rows
            if key not in index:
                raise ValueError("census input is not closed under multiplication")
            row.append(index[key])
        table.append(row)
    ident = index[BitMatrix.identity(dim).rows]
    # per-element eigenvalue-1 flag
    eig1 = [
        rank_nullspace(m + BitMatrix.identity(dim))[0] < dim for m in elements
    ]

    def close_pair(i: int, j: int) -> frozenset[int]:
        seen = {ident, i, j}
        frontier = [ident, i, j]
        while frontier:
            nxt = []
            for x in frontier:
                for g in (i, j):
                    y = table[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    subgroups: dict[frozenset[int], tuple[int, int]] = {}
    for i in range(n):
        for j in range(i, n):
            H = close_pair(i, j)
            if H not in subgroups:
                subgroups[H] = (i, j)

    def class_sizes(H: frozenset[int], gens: tuple[int, int]) -> tuple[int, ...]:
        ginv = [next(h for h in H if table[g][h] == ident) for g in gens]
        unseen = set(H)
        sizes = []
        while unseen:
            x0 = min(unseen)
            orbit = {x0}
            frontier = [x0]
            while frontier:
                nxt = []
                for x in frontier:
                    for g, gi in zip(gens, ginv):
                        y = table[table[g][x]][gi]
                        if y not in orbit:
                            orbit.add(y)
                            nxt.append(y)
                frontier = nxt
            unseen -= orbit
            sizes.append(len(orbit))
        return tuple(sorted(sizes))

    agg: dict[tuple[int, bool, bool], list] = {}
    for H, gens in sorted(subgroups.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))):
        mod = GF2Module(dim, [elements[gens[0]], elements[gens[1]]])
        irr = meataxe.is_irreducible(mod, seed)
        uni = all(eig1[x] for x in H)
        key = (len(H), irr, uni)
        rec = agg.setdefault(key, [0, []])
        rec[0] += 1
        if irr:
            fp = class_sizes(H, gens)
            if fp not in rec[1]:
                rec[1].append(fp)
    out = [
        CensusEntry(order, irr, uni, count, fps)
        for (order, irr, uni), (count, fps) in sorted(agg.items())
    ]
    return out


def irreducible_orders(census: list[CensusEntry]) -> set[int]:
    return {e.order for e in census if e.irreducible}
