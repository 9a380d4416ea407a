"""Permutations, partitions, permutation groups, and exact conjugacy classes.

Points are 1-based in all external interfaces (cycle strings, apply) and
0-based internally.  Composition is right-to-left throughout the package:
(p * q)(x) = p(q(x)).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import factorial

CLOSURE_BOUND = 10**6


class ClosureOverflow(RuntimeError):
    """Group closure exceeded the configured element bound."""


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"partition parts must be positive: {self.parts}")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        cols = self.parts[0]
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(cols)))

    def is_even_class(self) -> bool:
        """Parity of the S_n class with this cycle type: even iff n - #parts is even."""
        return (self.n - len(self.parts)) % 2 == 0

    def sn_class_size(self) -> int:
        """Size of the S_n conjugacy class with this cycle type: n!/prod(i^m_i m_i!)."""
        cent = 1
        for length in set(self.parts):
            m = self.parts.count(length)
            cent *= length**m * factorial(m)
        return factorial(self.n) // cent

    def __str__(self):
        return ",".join(str(p) for p in self.parts)


def partitions_of(n: int):
    """All partitions of n in descending lexicographic order."""

    def gen(remaining, maxpart):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, maxpart), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    for parts in gen(n, n):
        yield Partition(parts)


class Permutation:
    """A bijection of {1..d}, stored as a 0-based image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("images must be a bijection of 0..d-1")
        object.__setattr__(self, "images", images)

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(range(d))

    @classmethod
    def from_cycles(cls, d: int, cycles) -> "Permutation":
        """Build from 1-based cycles, e.g. from_cycles(9, [(1,2),(3,4,5,6,7,8,9)])."""
        images = list(range(d))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
                if not (1 <= a <= d):
                    raise ValueError(f"point {a} out of range for degree {d}")
                images[a - 1] = b - 1
        p = cls(images)
        return p

    @classmethod
    def from_cycle_string(cls, d: int, s: str) -> "Permutation":
        s = s.strip()
        if s in ("()", ""):
            return cls.identity(d)
        cycles = []
        for part in s.replace(")(", ")|(").split("|"):
            part = part.strip()
            if not (part.startswith("(") and part.endswith(")")):
                raise ValueError(f"bad cycle string: {s!r}")
            cycles.append(tuple(int(x) for x in part[1:-1].split(",")))
        return cls.from_cycles(d, cycles)

    def apply(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.images[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Right-to-left composition: (p*q)(x) = p(q(x))."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        s = self.images
        return Permutation(tuple(s[i] for i in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def conjugate_by(self, g: "Permutation") -> "Permutation":
        """g * self * g^-1."""
        return g * self * g.inverse()

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles as 1-based tuples, each starting at its minimum."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x + 1)
                x = self.images[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        lengths = sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True)
        return Partition(tuple(lengths))

    def fixed_points(self) -> list[int]:
        return [i + 1 for i in range(self.degree) if self.images[i] == i]

    def order(self) -> int:
        o = 1
        for c in self.cycles():
            o = o * len(c) // _gcd(o, len(c))
        return o

    def is_even(self) -> bool:
        return self.cycle_type().is_even_class()

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycs)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.cycle_string()}, d={self.degree})"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def class_rep_for(ct: Partition) -> Permutation:
    """Canonical S_n representative of a cycle type: cycles filled consecutively."""
    cycles = []
    next_pt = 1
    for length in ct.parts:
        cycles.append(tuple(range(next_pt, next_pt + length)))
        next_pt += length
    return Permutation.from_cycles(ct.n, [c for c in cycles if len(c) > 1])


def class_reps_symmetric(n: int) -> list[tuple[Partition, Permutation]]:
    """One canonical representative per partition of n."""
    return [(ct, class_rep_for(ct)) for ct in partitions_of(n)]


def closure(generators, bound: int = CLOSURE_BOUND) -> list[Permutation]:
    """Exact breadth-first closure of a generator list.

    Raises ClosureOverflow if more than `bound` elements are found.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    d = gens[0].degree
    if any(g.degree != d for g in gens):
        raise ValueError("generators must share a degree")
    gen_images = [g.images for g in gens]
    ident = tuple(range(d))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for t in frontier:
            for gi in gen_images:
                prod = tuple(gi[i] for i in t)
                if prod not in seen:
                    seen.add(prod)
                    if len(seen) > bound:
                        raise ClosureOverflow(f"closure exceeded bound {bound}")
                    nxt.append(prod)
        frontier = nxt
    return [Permutation(t) for t in sorted(seen)]


@dataclass
class PermGroup:
    """A permutation group given by generators, with cached exact closure."""

    generators: list[Permutation]
    name: str = "group"
    closure_bound: int = CLOSURE_BOUND
    _elements: list[Permutation] | None = field(default=None, repr=False)

    @property
    def degree(self) -> int:
        return self.generators[0].degree

    def elements(self) -> list[Permutation]:
        if self._elements is None:
            self._elements = closure(self.generators, self.closure_bound)
        return self._elements

    def order(self) -> int:
        return len(self.elements())

    def __contains__(self, p: Permutation) -> bool:
        return p in set(self.elements())

    def is_transitive(self) -> bool:
        d = self.degree
        reached = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.generators:
                    y = g.images[x]
                    if y not in reached:
                        reached.add(y)
                        nxt.append(y)
            frontier = nxt
        return len(reached) == d

    def conjugacy_classes(self) -> list[tuple[int, Permutation, int]]:
        """Exact classes as (class size, representative, element order).

        Each class is the conjugation orbit of its first-found element under
        the generators; sizes sum to the group order.  Deterministic order:
        sorted by (element order, class size, representative images).
        """
        els = self.elements()
        gens = self.generators
        ginvs = [g.inverse() for g in gens]
        unseen = {e.images for e in els}
        out = []
        while unseen:
            rep_images = min(unseen)
            rep = Permutation(rep_images)
            orbit = {rep_images}
            frontier = [rep]
            while frontier:
                nxt = []
                for x in frontier:
                    for g, gi in zip(gens, ginvs):
                        y = g * x * gi
                        if y.images not in orbit:
                            orbit.add(y.images)
                            nxt.append(y)
                frontier = nxt
            unseen -= orbit
            out.append((len(orbit), rep, rep.order()))
        out.sort(key=lambda rec: (rec[2], rec[0], rec[1].images))
        assert sum(sz for sz, _, _ in out) == len(els)
        return out

    def cycle_types(self) -> set[tuple[int, ...]]:
        """Cycle types present in the group (from its conjugacy classes)."""
        return {rep.cycle_type().parts for _, rep, _ in self.conjugacy_classes()}

    def random_element(self, rng: random.Random) -> Permutation:
        els = self.elements()
        return els[rng.randrange(len(els))]

    def to_payload(self) -> dict:
        return {
            "name": self.name,
            "degree": self.degree,
            "generators": [g.cycle_string() for g in self.generators],
        }


# ---------------------------------------------------------------------------
# Built-in groups
# ---------------------------------------------------------------------------

def _f9_elements():
    # F9 = F3[i] with i^2 = -1; elements as (a, b) meaning a + b*i.
    return [(a, b) for a in range(3) for b in range(3)]


def _f9_mul(x, y):
    return ((x[0] * y[0] - x[1] * y[1]) % 3, (x[0] * y[1] + x[1] * y[0]) % 3)


def _f9_add(x, y):
    return ((x[0] + y[0]) % 3, (x[1] + y[1]) % 3)


def _perm_from_point_map(points, fn) -> Permutation:
    idx = {p: i for i, p in enumerate(points)}
    return Permutation(tuple(idx[fn(p)] for p in points))


def _affine_f3_square(linear_gens, include_translations=True):
    pts = [(i, j) for i in range(3) for j in range(3)]
    gens = []
    if include_translations:
        for b in ((1, 0), (0, 1)):
            gens.append(_perm_from_point_map(pts, lambda p, b=b: ((p[0] + b[0]) % 3, (p[1] + b[1]) % 3)))
    for A in linear_gens:
        gens.append(
            _perm_from_point_map(
                pts,
                lambda p, A=A: (
                    (A[0][0] * p[0] + A[0][1] * p[1]) % 3,
                    (A[1][0] * p[0] + A[1][1] * p[1]) % 3,
                ),
            )
        )
    return gens


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _primitive_root(q: int) -> int:
    phi = q - 1
    factors = set()
    m = phi
    i = 2
    while i * i <= m:
        while m % i == 0:
            factors.add(i)
            m //= i
        i += 1
    if m > 1:
        factors.add(m)
    for g in range(2, q):
        if all(pow(g, phi // f, q) != 1 for f in factors):
            return g
    raise AssertionError("no primitive root found")


def _pgl2_gens(q: int) -> list[Permutation]:
    # Moebius action on P^1(F_q) = {0..q-1, infinity=index q}.
    points = list(range(q + 1))
    inf = q

    def mob(a, b, c, d):
        images = []
        for x in range(q):
            num, den = (a * x + b) % q, (c * x + d) % q
            images.append(inf if den == 0 else (num * pow(den, -1, q)) % q)
        images.append(inf if c % q == 0 else (a % q) * pow(c, -1, q) % q)
        return Permutation(images)

    g = _primitive_root(q)
    return [mob(1, 1, 0, 1), mob(g, 0, 0, 1), mob(0, 1, 1, 0)]


def _l3_2_flag_gens() -> list[Permutation]:
    # GL_3(2) on the 21 incident (point, line) flags of the projective plane
    # over F2: points are nonzero vectors, lines nonzero covectors, incidence
    # l(p) = 0.  g sends (p, l) to (g p, l g^-1).
    vecs = [v for v in itertools.product(range(2), repeat=3) if any(v)]
    flags = [(p, l) for p in vecs for l in vecs if sum(a * b for a, b in zip(p, l)) % 2 == 0]

    def matmul(A, B):
        return tuple(
            tuple(sum(A[i][k] * B[k][j] for k in range(3)) % 2 for j in range(3)) for i in range(3)
        )

    def matvec(A, v):
        return tuple(sum(A[i][j] * v[j] for j in range(3)) % 2 for i in range(3))

    def inv3(A):
        # brute force over the 168 invertibles is overkill; square-and-multiply
        # on order: |GL_3(2)| elements have order dividing 84, so A^-1 = A^83... simpler:
        # search small powers (all elementary matrices here have order 2).
        ident = tuple(tuple(1 if i == j else 0 for j in range(3)) for i in range(3))
        P = A
        prev = ident
        for _ in range(200):
            if P == ident:
                return prev
            prev, P = P, matmul(P, A)
        raise AssertionError("inverse not found")

    gens = []
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            E = [[1 if r == c else 0 for c in range(3)] for r in range(3)]
            E[i][j] = 1
            E = tuple(tuple(r) for r in E)
            Einv = inv3(E)
            EinvT = tuple(tuple(Einv[j2][i2] for j2 in range(3)) for i2 in range(3))
            gens.append(
                _perm_from_point_map(flags, lambda f, E=E, T=EinvT: (matvec(E, f[0]), matvec(T, f[1])))
            )
    return gens


def builtin_group(name: str, **params) -> PermGroup:
    """Constructors for the explicitly named groups.

    Supported names: agl2_3, asl2_3, agl1_9, agammal1_9, pgl2 (param q, odd
    prime), l3_2_flags, s_n (param n), a_n (param n).
    """
    if name == "agl2_3":
        sl2_gens = [[[1, 1], [0, 1]], [[1, 0], [1, 1]]]
        gens = _affine_f3_square(sl2_gens + [[[2, 0], [0, 1]]])
        return PermGroup(gens, name="agl2_3")
    if name == "asl2_3":
        gens = _affine_f3_square([[[1, 1], [0, 1]], [[1, 0], [1, 1]]])
        return PermGroup(gens, name="asl2_3")
    if name in ("agl1_9", "agammal1_9"):
        els = _f9_elements()
        g9 = (1, 1)  # generator of F9*, order 8
        mul_g = _perm_from_point_map(els, lambda x: _f9_mul(g9, x))
        add_1 = _perm_from_point_map(els, lambda x: _f9_add(x, (1, 0)))
        gens = [mul_g, add_1]
        if name == "agammal1_9":
            frob = _perm_from_point_map(els, lambda x: _f9_mul(_f9_mul(x, x), x))
            gens.append(frob)
        return PermGroup(gens, name=name)
    if name == "pgl2":
        q = params["q"]
        if not _is_prime(q) or q == 2:
            raise ValueError(f"pgl2 requires an odd prime q, got {q}")
        return PermGroup(_pgl2_gens(q), name=f"pgl2_{q}")
    if name == "l3_2_flags":
        return PermGroup(_l3_2_flag_gens(), name="l3_2_flags")
    if name == "s_n":
        n = params["n"]
        if n == 1:
            return PermGroup([Permutation.identity(1)], name="s_1")
        gens = [Permutation.from_cycles(n, [(1, 2)])]
        if n > 2:
            gens.append(Permutation.from_cycles(n, [tuple(range(1, n + 1))]))
        return PermGroup(gens, name=f"s_{n}")
    if name == "a_n":
        n = params["n"]
        if n <= 2:
            return PermGroup([Permutation.identity(max(n, 1))], name=f"a_{n}")
        if n == 3:
            return PermGroup([Permutation.from_cycles(3, [(1, 2, 3)])], name="a_3")
        gens = [Permutation.from_cycles(n, [(1, 2, 3)])]
        if n % 2 == 1:
            gens.append(Permutation.from_cycles(n, [tuple(range(1, n + 1))]))
        else:
            gens.append(Permutation.from_cycles(n, [tuple(range(2, n + 1))]))
        return PermGroup(gens, name=f"a_{n}")
    raise ValueError(f"unsupported builtin group: {name}")


BUILTIN_ORDERS = {
    "agl2_3": 432,
    "asl2_3": 216,
    "agl1_9": 72,
    "agammal1_9": 144,
    "l3_2_flags": 168,
}
