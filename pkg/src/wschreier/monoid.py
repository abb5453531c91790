"""Finite monoids as Cayley tables.

Elements of a monoid of size n are the indices 0..n-1 and the table stores
products as table[a][b] = a*b.  Labels, when present, are display names only:
they never take part in equality or hashing.  Constructors validate shapes
(raising FormatError); algebraic laws are checked by the check_* functions,
which return a Verdict carrying either the validated value or a list of
violated laws with witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

__all__ = [
    "FormatError",
    "ConsistencyError",
    "PreconditionError",
    "BoundExceeded",
    "Violation",
    "Verdict",
    "FiniteMonoid",
    "MonoidHom",
    "InverseStructure",
    "Congruence",
    "check_monoid",
    "idempotents",
    "center",
    "inverse_structure",
    "check_hom",
    "identity_hom",
    "zero_hom",
    "compose",
    "congruence_closure",
    "is_congruence",
    "quotient",
    "submonoid",
    "kernel",
    "image",
    "is_cokernel",
    "direct_product",
    "are_isomorphic",
    "canonical_form",
]


class FormatError(ValueError):
    """Malformed raw data: wrong shapes, out-of-range indices, bad references."""


class ConsistencyError(RuntimeError):
    """A property that should hold by construction failed; never silent."""


class PreconditionError(ValueError):
    """An operation was invoked on input violating its stated precondition."""


class BoundExceeded(RuntimeError):
    """An enumeration refused to run because it would exceed its bound."""

    def __init__(self, message: str, estimate: int):
        super().__init__(message)
        self.estimate = estimate


@dataclass(frozen=True)
class Violation:
    """A broken law together with the witnessing elements."""

    law: str
    witness: tuple = ()

    def __str__(self):
        if not self.witness:
            return self.law
        return "%s: %s" % (self.law, " ".join(str(w) for w in self.witness))


@dataclass(frozen=True)
class Verdict:
    """Outcome of a law check: a validated value or the violations found."""

    value: object = None
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def expect(self, what: str = "check"):
        """Return the value, raising PreconditionError if the check failed."""
        if self.violations:
            raise PreconditionError(
                "%s failed: %s" % (what, "; ".join(str(v) for v in self.violations))
            )
        return self.value


def _as_table(table) -> tuple:
    rows = tuple(tuple(row) for row in table)
    n = len(rows)
    if n == 0:
        raise FormatError("empty table")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise FormatError("row %d has %d entries, expected %d" % (i, len(row), n))
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise FormatError("entry (%d,%d) = %r out of range 0..%d" % (i, j, v, n - 1))
    return rows


@dataclass(frozen=True, eq=False)
class FiniteMonoid:
    """A monoid on indices 0..size-1 given by its Cayley table."""

    size: int
    identity: int
    table: tuple
    labels: tuple | None = None

    def __post_init__(self):
        rows = _as_table(self.table)
        object.__setattr__(self, "table", rows)
        object.__setattr__(self, "size", len(rows))
        if not 0 <= self.identity < self.size:
            raise FormatError("identity index %r out of range" % (self.identity,))
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.size:
                raise FormatError("expected %d labels, got %d" % (self.size, len(labels)))
            object.__setattr__(self, "labels", labels)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def label(self, a: int) -> str:
        if self.labels is not None:
            return self.labels[a]
        return str(a)

    @property
    def elements(self) -> range:
        return range(self.size)

    def __eq__(self, other):
        if not isinstance(other, FiniteMonoid):
            return NotImplemented
        return (
            self.size == other.size
            and self.identity == other.identity
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.size, self.identity, self.table))

    def __repr__(self):
        return "FiniteMonoid(size=%d, identity=%d)" % (self.size, self.identity)


def check_monoid(table, identity: int | None = None, labels=None) -> Verdict:
    """Validate a raw Cayley table.

    When identity is None a two-sided identity is searched for.  Returns a
    Verdict whose value is the FiniteMonoid; every violated law is reported
    with a witness (identity failures as (a,), associativity as (a, b, c)).
    Shape problems raise FormatError instead of being reported as violations.
    """
    rows = _as_table(table)
    n = len(rows)
    if identity is not None and not 0 <= identity < n:
        raise FormatError("identity index %r out of range" % (identity,))
    violations = []
    e = identity
    if e is None:
        for cand in range(n):
            if all(rows[cand][a] == a and rows[a][cand] == a for a in range(n)):
                e = cand
                break
        if e is None:
            violations.append(Violation("identity"))
    else:
        for a in range(n):
            if rows[e][a] != a or rows[a][e] != a:
                violations.append(Violation("identity", (a,)))
    for a in range(n):
        ra = rows[a]
        for b in range(n):
            ab = ra[b]
            rab = rows[ab]
            rb = rows[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    violations.append(Violation("associativity", (a, b, c)))
    if violations:
        return Verdict(None, tuple(violations))
    return Verdict(FiniteMonoid(n, e, rows, labels))


def idempotents(M: FiniteMonoid) -> tuple:
    return tuple(a for a in M.elements if M.table[a][a] == a)


def center(M: FiniteMonoid) -> tuple:
    t = M.table
    return tuple(a for a in M.elements if all(t[a][b] == t[b][a] for b in M.elements))


@dataclass(frozen=True)
class InverseStructure:
    """A monoid in which every element has a unique generalized inverse."""

    base: FiniteMonoid
    inv: tuple

    def inv_of(self, a: int) -> int:
        return self.inv[a]


def inverse_structure(M: FiniteMonoid) -> Verdict:
    """Compute the unique-generalized-inverse table, or witnesses against it.

    b is a generalized inverse of a when aba = a and bab = b.  Failures are
    reported as ("regular", (a,)) for an element with no inverse,
    ("unique-inverse", (a, b1, b2)) for one with several, and, when inverses
    exist but are ambiguous, ("idempotents-commute", (e, f)) pinpoints a
    non-commuting idempotent pair if there is one.
    """
    t = M.table
    violations = []
    inv = []
    for a in M.elements:
        cands = [b for b in M.elements if t[t[a][b]][a] == a and t[t[b][a]][b] == b]
        if not cands:
            violations.append(Violation("regular", (a,)))
            inv.append(a)
        elif len(cands) > 1:
            violations.append(Violation("unique-inverse", (a, cands[0], cands[1])))
            inv.append(cands[0])
        else:
            inv.append(cands[0])
    if violations:
        idem = idempotents(M)
        for e in idem:
            for f in idem:
                if t[e][f] != t[f][e]:
                    violations.append(Violation("idempotents-commute", (e, f)))
                    break
            else:
                continue
            break
        return Verdict(None, tuple(violations))
    return Verdict(InverseStructure(M, tuple(inv)))


@dataclass(frozen=True)
class MonoidHom:
    """A map between monoids, stored as an index array over the source."""

    source: FiniteMonoid
    target: FiniteMonoid
    map: tuple

    def __post_init__(self):
        m = tuple(self.map)
        if len(m) != self.source.size:
            raise FormatError("hom map has %d entries, expected %d" % (len(m), self.source.size))
        for i, v in enumerate(m):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.target.size:
                raise FormatError("hom image of %d is %r, out of range" % (i, v))
        object.__setattr__(self, "map", m)

    def __call__(self, a: int) -> int:
        return self.map[a]


def check_hom(source: FiniteMonoid, target: FiniteMonoid, map_) -> Verdict:
    """Check identity and multiplication preservation of a candidate hom."""
    f = MonoidHom(source, target, tuple(map_))
    m = f.map
    if m[source.identity] != target.identity:
        return Verdict(None, (Violation("hom-identity", (source.identity,)),))
    ts, tt = source.table, target.table
    for a in source.elements:
        ma, ra = m[a], ts[a]
        row = tt[ma]
        for b in source.elements:
            if m[ra[b]] != row[m[b]]:
                return Verdict(None, (Violation("hom-mul", (a, b)),))
    return Verdict(f)


def identity_hom(M: FiniteMonoid) -> MonoidHom:
    return MonoidHom(M, M, tuple(M.elements))


def zero_hom(source: FiniteMonoid, target: FiniteMonoid) -> MonoidHom:
    return MonoidHom(source, target, (target.identity,) * source.size)


def compose(f: MonoidHom, g: MonoidHom) -> MonoidHom:
    """g after f: the composite source of f -> target of g."""
    if f.target != g.source:
        raise FormatError("composite of non-composable homs")
    return MonoidHom(f.source, g.target, tuple(g.map[x] for x in f.map))


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        p = self.parent
        root = a
        while p[root] != root:
            root = p[root]
        while p[a] != root:
            p[a], a = root, p[a]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def _normalize_classes(ids) -> tuple:
    # renumber class ids by order of first occurrence
    seen = {}
    out = []
    for c in ids:
        if c not in seen:
            seen[c] = len(seen)
        out.append(seen[c])
    return tuple(out)


@dataclass(frozen=True)
class Congruence:
    """A multiplication-stable partition, stored as class ids per element."""

    base: FiniteMonoid
    class_id: tuple

    def __post_init__(self):
        ids = tuple(self.class_id)
        if len(ids) != self.base.size:
            raise FormatError("congruence over wrong carrier size")
        object.__setattr__(self, "class_id", _normalize_classes(ids))

    @property
    def num_classes(self) -> int:
        return max(self.class_id) + 1

    def related(self, a: int, b: int) -> bool:
        return self.class_id[a] == self.class_id[b]


def congruence_closure(M: FiniteMonoid, pairs) -> Congruence:
    """Smallest congruence relating every pair in pairs.

    Worklist fixpoint: whenever two classes merge through (a, b), the
    translates (xa, xb) and (ax, bx) are queued for every x.
    """
    n = M.size
    t = M.table
    uf = _UnionFind(n)
    work = [(int(a), int(b)) for a, b in pairs]
    for a, b in work:
        if not 0 <= a < n or not 0 <= b < n:
            raise FormatError("congruence generator (%d,%d) out of range" % (a, b))
    while work:
        a, b = work.pop()
        if not uf.union(a, b):
            continue
        for x in range(n):
            work.append((t[x][a], t[x][b]))
            work.append((t[a][x], t[b][x]))
    return Congruence(M, tuple(uf.find(a) for a in range(n)))


def is_congruence(M: FiniteMonoid, class_id) -> bool:
    ids = tuple(class_id)
    if len(ids) != M.size:
        return False
    t = M.table
    for a in M.elements:
        for b in M.elements:
            if ids[a] != ids[b]:
                continue
            for x in M.elements:
                if ids[t[x][a]] != ids[t[x][b]] or ids[t[a][x]] != ids[t[b][x]]:
                    return False
    return True


def quotient(M: FiniteMonoid, c: Congruence):
    """Quotient monoid and projection hom.  c must be a congruence on M."""
    if c.base != M:
        raise FormatError("congruence belongs to a different monoid")
    if not is_congruence(M, c.class_id):
        raise PreconditionError("partition is not a congruence")
    ids = c.class_id
    k = c.num_classes
    reps = [None] * k
    for a in M.elements:
        if reps[ids[a]] is None:
            reps[ids[a]] = a
    table = [[ids[M.table[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    labels = tuple("[%s]" % M.label(reps[i]) for i in range(k))
    Q = FiniteMonoid(k, ids[M.identity], tuple(map(tuple, table)), labels)
    return Q, MonoidHom(M, Q, ids)


def submonoid(M: FiniteMonoid, elements):
    """Restrict M to a subset (which must contain 1 and be product-closed)."""
    subset = sorted(set(int(a) for a in elements))
    for a in subset:
        if not 0 <= a < M.size:
            raise FormatError("subset element %d out of range" % a)
    if M.identity not in subset:
        raise FormatError("subset does not contain the identity")
    index = {a: i for i, a in enumerate(subset)}
    t = M.table
    for a in subset:
        for b in subset:
            if t[a][b] not in index:
                raise FormatError("subset not closed: %d*%d escapes" % (a, b))
    table = tuple(tuple(index[t[a][b]] for b in subset) for a in subset)
    labels = tuple(M.label(a) for a in subset)
    S = FiniteMonoid(len(subset), index[M.identity], table, labels)
    return S, MonoidHom(S, M, tuple(subset))


def kernel(f: MonoidHom):
    """The full preimage of the target identity, with its embedding."""
    ids = [a for a in f.source.elements if f.map[a] == f.target.identity]
    return submonoid(f.source, ids)


def image(f: MonoidHom) -> tuple:
    return tuple(sorted(set(f.map)))


def is_cokernel(k: MonoidHom, e: MonoidHom) -> bool:
    """e is the cokernel of k: e is surjective and the congruence it induces
    equals the congruence generated by identifying the image of k with 1."""
    if k.target != e.source:
        raise FormatError("k and e are not composable")
    G = e.source
    if len(set(e.map)) != e.target.size:
        return False
    induced = _normalize_classes(e.map)
    generated = congruence_closure(G, [(k.map[n], G.identity) for n in k.source.elements])
    return induced == generated.class_id


def direct_product(A: FiniteMonoid, B: FiniteMonoid) -> FiniteMonoid:
    """Componentwise product on pairs ordered lexicographically."""
    pairs = [(a, b) for a in A.elements for b in B.elements]
    index = {p: i for i, p in enumerate(pairs)}
    table = tuple(
        tuple(index[(A.table[a1][a2], B.table[b1][b2])] for (a2, b2) in pairs)
        for (a1, b1) in pairs
    )
    labels = tuple("(%s,%s)" % (A.label(a), B.label(b)) for (a, b) in pairs)
    return FiniteMonoid(len(pairs), index[(A.identity, B.identity)], table, labels)


def _element_fingerprint(M: FiniteMonoid, x: int) -> tuple:
    t = M.table
    # iterate powers of x until the sequence cycles
    seen = {}
    p = M.identity
    tail = 0
    while p not in seen:
        seen[p] = tail
        tail += 1
        p = t[p][x]
    return (
        x == M.identity,
        t[x][x] == x,
        len(set(t[x])),
        len(set(row[x] for row in t)),
        tail,
        tail - seen[p],
    )


def _definition_order(M: FiniteMonoid):
    """Order elements as identity, then alternately forced products of known
    elements and fresh least-index generators."""
    how = {M.identity: "identity"}
    order = [M.identity]
    while len(order) < M.size:
        progressed = True
        while progressed:
            progressed = False
            for a in list(order):
                for b in list(order):
                    c = M.table[a][b]
                    if c not in how:
                        how[c] = (a, b)
                        order.append(c)
                        progressed = True
        if len(order) == M.size:
            break
        g = min(x for x in M.elements if x not in how)
        how[g] = None
        order.append(g)
    return order, how


def are_isomorphic(A: FiniteMonoid, B: FiniteMonoid) -> bool:
    """Backtracking isomorphism test over generator images.

    Generator candidates are pruned by cheap invariants; forced products are
    propagated and a full table check runs at each completed assignment.
    Practical for sizes into the low tens.
    """
    if A.size != B.size:
        return False
    fpa = [_element_fingerprint(A, x) for x in A.elements]
    fpb = [_element_fingerprint(B, x) for x in B.elements]
    if sorted(fpa) != sorted(fpb):
        return False
    order, how = _definition_order(A)
    ta, tb = A.table, B.table
    img = {A.identity: B.identity}
    used = {B.identity}

    def place(i):
        if i == len(order):
            return all(
                img[ta[a][b]] == tb[img[a]][img[b]] for a in A.elements for b in A.elements
            )
        x = order[i]
        rule = how[x]
        if rule == "identity":
            return place(i + 1)
        if rule is None:
            for y in B.elements:
                if y in used or fpb[y] != fpa[x]:
                    continue
                img[x] = y
                used.add(y)
                if place(i + 1):
                    return True
                del img[x]
                used.discard(y)
            return False
        a, b = rule
        y = tb[img[a]][img[b]]
        if y in used:
            return False
        img[x] = y
        used.add(y)
        if place(i + 1):
            return True
        del img[x]
        used.discard(y)
        return False

    return place(0)


def canonical_form(M: FiniteMonoid) -> tuple:
    """Least relabelled table over all bijections sending the identity to 0.

    Factorial in size-1; meant for deduplicating catalogs of small monoids.
    """
    rest = [x for x in M.elements if x != M.identity]
    t = M.table
    best = None
    for perm in permutations(range(1, M.size)):
        relabel = [0] * M.size
        relabel[M.identity] = 0
        for old, new in zip(rest, perm):
            relabel[old] = new
        inverse = [0] * M.size
        for old, new in enumerate(relabel):
            inverse[new] = old
        cand = tuple(
            tuple(relabel[t[inverse[i]][inverse[j]]] for j in range(M.size))
            for i in range(M.size)
        )
        if best is None or cand < best:
            best = cand
    return (M.size, best)
