"""Lambda semidirect products of inverse monoids.

An action of an inverse monoid H on an inverse monoid N (h, n) -> h.n must
satisfy h.(n n') = (h.n)(h.n'), (h h').n = h.(h'.n) and 1.n = n; h.1 = 1 is
not required.  The lambda semidirect product lives on the carrier
{(n, h) : (h h^-1).n = n} with

    (n, h) (n', h') = ( ((h h')(h h')^-1 . n) (h . n'),  h h' )

and is a weakly Schreier extension of H by N via k(n) = (n, 1), e = second
projection, s(h) = ((h h^-1).1, h), with the first projection as a Schreier
retraction.  Artin-like actions h.n = f(h) n, for f a hom into the central
idempotents of N, carry binary joins: the pointwise product of f and g is
the join of the induced extensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .monoid import (
    BoundExceeded,
    ConsistencyError,
    FiniteMonoid,
    FormatError,
    InverseStructure,
    MonoidHom,
    PreconditionError,
    Verdict,
    Violation,
    center,
    check_hom,
    check_monoid,
    idempotents,
    inverse_structure,
)
from .extension import SchreierRetraction, SplitExtension, verify_split_extension
from .waction import ActionTable, AdmissibleRelation, WActPair

__all__ = [
    "InverseAction",
    "LambdaProduct",
    "check_inverse_action",
    "lambda_product",
    "canonicalize",
    "canonical_multiplication",
    "lambda_action_leq",
    "waction_of",
    "artin_like_action",
    "join_hom",
    "artin_join",
    "semigroup_endomorphisms",
    "enumerate_inverse_actions",
]


@dataclass(frozen=True)
class InverseAction:
    """An action table act[h][n] over inverse structures for N and H."""

    N: InverseStructure
    H: InverseStructure
    act: tuple

    def __post_init__(self):
        act = tuple(tuple(row) for row in self.act)
        if len(act) != self.H.base.size:
            raise FormatError("expected one action row per element of H")
        for row in act:
            if len(row) != self.N.base.size:
                raise FormatError("action rows must cover N")
            for v in row:
                if not 0 <= v < self.N.base.size:
                    raise FormatError("action value %r out of range" % (v,))
        object.__setattr__(self, "act", act)

    def __call__(self, h: int, n: int) -> int:
        return self.act[h][n]

    def table(self) -> ActionTable:
        return ActionTable(self.N.base, self.H.base, self.act)

    def idem(self, h: int) -> int:
        """The idempotent h * h^-1."""
        return self.H.base.table[h][self.H.inv[h]]


def check_inverse_action(N: InverseStructure, H: InverseStructure, act) -> Verdict:
    """The three action laws; h.1 = 1 is deliberately not one of them."""
    a = InverseAction(N, H, act)
    tn, th = N.base.table, H.base.table
    rows = a.act
    for n in N.base.elements:
        if rows[H.base.identity][n] != n:
            return Verdict(None, (Violation("act-identity", (n,)),))
    for h in H.base.elements:
        row = rows[h]
        for n in N.base.elements:
            for n2 in N.base.elements:
                if row[tn[n][n2]] != tn[row[n]][row[n2]]:
                    return Verdict(None, (Violation("act-mul", (h, n, n2)),))
    for h in H.base.elements:
        for h2 in H.base.elements:
            comp = rows[th[h][h2]]
            row, row2 = rows[h], rows[h2]
            for n in N.base.elements:
                if comp[n] != row[row2[n]]:
                    return Verdict(None, (Violation("act-compose", (h, h2, n)),))
    return Verdict(a)


@dataclass(frozen=True)
class LambdaProduct:
    """The lambda semidirect product bundle: carrier pairs in (n, h) index
    form, the split extension over them, and the first-projection
    retraction."""

    action: InverseAction
    carrier: tuple
    extension: SplitExtension
    retraction: SchreierRetraction

    @property
    def monoid(self) -> FiniteMonoid:
        return self.extension.G

    def index(self, pair) -> int:
        return self.carrier.index(pair)


def _lambda_entry(a: InverseAction, n1, h1, n2, h2):
    tn, th = a.N.base.table, a.H.base.table
    rows = a.act
    h = th[h1][h2]
    return tn[rows[a.idem(h)][n1]][rows[h1][n2]], h


def lambda_product(a: InverseAction) -> LambdaProduct:
    """Build and verify the lambda semidirect product of a valid action.

    The action is validated first (PreconditionError if not).  Closure of
    the product on the carrier, the monoid laws of the carrier, the
    split-extension laws and weak Schreier-ness are all checked; any failure
    is a ConsistencyError since each is a theorem for a valid action.
    """
    check_inverse_action(a.N, a.H, a.act).expect("check_inverse_action")
    N, H = a.N.base, a.H.base
    rows = a.act
    carrier = [
        (n, h) for h in H.elements for n in N.elements if rows[a.idem(h)][n] == n
    ]
    index = {p: i for i, p in enumerate(carrier)}
    table = []
    for n1, h1 in carrier:
        row = []
        for n2, h2 in carrier:
            p = _lambda_entry(a, n1, h1, n2, h2)
            if p not in index:
                raise ConsistencyError("product %r escapes the carrier" % (p,))
            row.append(index[p])
        table.append(tuple(row))
    labels = tuple("(%s,%s)" % (N.label(n), H.label(h)) for n, h in carrier)
    identity = index[(N.identity, H.identity)]
    laws = check_monoid(tuple(table), identity, labels)
    if not laws.ok:
        raise ConsistencyError("carrier fails monoid laws: %s" % (laws.violations[0],))
    G = laws.value
    k = MonoidHom(N, G, tuple(index[(n, H.identity)] for n in N.elements))
    e = MonoidHom(G, H, tuple(h for _, h in carrier))
    s = MonoidHom(H, G, tuple(index[(rows[a.idem(h)][N.identity], h)] for h in H.elements))
    ext = SplitExtension(N, G, H, k, e, s)
    verdict = verify_split_extension(ext)
    if not verdict.ok:
        raise ConsistencyError(
            "lambda product fails extension laws: %s" % (verdict.violations[0],)
        )
    ext = verdict.value
    retraction = SchreierRetraction(ext, tuple(n for n, _ in carrier), unique=False)
    unique = all(
        sum(1 for n2 in N.elements if G.table[k.map[n2]][s.map[h]] == index[(n, h)]) == 1
        for n, h in carrier
    )
    if unique:
        retraction = SchreierRetraction(ext, retraction.q, unique=True)
    return LambdaProduct(a, tuple(carrier), ext, retraction)


def canonicalize(a: InverseAction, n: int, h: int):
    """Send (n, h) to its carrier representative ((h h^-1).n, h)."""
    return a.act[a.idem(h)][n], h


def canonical_multiplication(a: InverseAction, p1, p2):
    """Product of two carrier pairs directly on representatives:

    (n1, h1)(n2, h2) = ( ((h1 h2)(h1 h2)^-1 . n1) (h1 . (h2 h2^-1 . n2)),
                         h1 h2 )

    Both inputs must lie on the carrier (PreconditionError otherwise); the
    value then equals canonicalize of the raw product and the lambda-product
    table entry.
    """
    for n, h in (p1, p2):
        if a.act[a.idem(h)][n] != n:
            raise PreconditionError("(%d, %d) is not a carrier pair" % (n, h))
    (n1, h1), (n2, h2) = p1, p2
    tn = a.N.base.table
    h = a.H.base.table[h1][h2]
    return tn[a.act[a.idem(h)][n1]][a.act[h1][a.act[a.idem(h2)][n2]]], h


def lambda_action_leq(a: InverseAction, b: InverseAction) -> bool:
    """a <= b iff b(h h^-1, a(h, n)) = b(h, n) for all h, n."""
    if a.N != b.N or a.H != b.H:
        raise FormatError("actions do not share the same N and H")
    for h in a.H.base.elements:
        eh = a.idem(h)
        for n in a.N.base.elements:
            if b.act[eh][a.act[h][n]] != b.act[h][n]:
                return False
    return True


def waction_of(a: InverseAction) -> WActPair:
    """The admissible-relation/compatible-action pair of the lambda product:
    n1 ~ n2 in fiber h iff (h h^-1).n1 = (h h^-1).n2, with the action table
    unchanged."""
    N, H = a.N.base, a.H.base
    fibers = tuple(tuple(a.act[a.idem(h)][n] for n in N.elements) for h in H.elements)
    E = AdmissibleRelation(N, H, fibers)
    return WActPair(E, ActionTable(N, H, a.act))


def artin_like_action(f: MonoidHom) -> InverseAction:
    """The action h.n = f(h) * n of a hom f: H -> N landing in central
    idempotents of N.  Rejects (PreconditionError, with witness) homs whose
    image strays, non-homs, and non-inverse N or H."""
    H, N = f.source, f.target
    check_hom(H, N, f.map).expect("check_hom")
    allowed = set(idempotents(N)) & set(center(N))
    for h in H.elements:
        if f.map[h] not in allowed:
            raise PreconditionError(
                "f(%d) = %d is not a central idempotent" % (h, f.map[h])
            )
    n_inv = inverse_structure(N).expect("inverse_structure(N)")
    h_inv = inverse_structure(H).expect("inverse_structure(H)")
    act = tuple(tuple(N.table[f.map[h]][n] for n in N.elements) for h in H.elements)
    return check_inverse_action(n_inv, h_inv, act).expect("check_inverse_action")


def join_hom(f: MonoidHom, g: MonoidHom) -> MonoidHom:
    """Pointwise product of two parallel homs into central idempotents."""
    if f.source != g.source or f.target != g.target:
        raise FormatError("homs are not parallel")
    m = tuple(f.target.table[f.map[h]][g.map[h]] for h in f.source.elements)
    return check_hom(f.source, f.target, m).expect("join_hom")


def artin_join(f: MonoidHom, g: MonoidHom) -> InverseAction:
    """The Artin-like action of the pointwise product, the join of the two
    induced extensions."""
    artin_like_action(f)
    artin_like_action(g)
    return artin_like_action(join_hom(f, g))


def semigroup_endomorphisms(M: FiniteMonoid) -> tuple:
    """All maps M -> M with f(a b) = f(a) f(b); f(1) = 1 is not required.
    Sorted; the identity map is always present."""
    t = M.table
    n = M.size
    out = []
    for f in product(range(n), repeat=n):
        ok = True
        for a in range(n):
            fa = f[a]
            for b in range(n):
                if f[t[a][b]] != t[fa][f[b]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(f)
    return tuple(sorted(out))


def _generating_plan(M: FiniteMonoid):
    """Greedy least-index generators and a product plan covering M."""
    how = {M.identity: ("one",)}
    order = [M.identity]
    gens = []
    while len(order) < M.size:
        progressed = True
        while progressed:
            progressed = False
            for a in list(order):
                for b in list(order):
                    c = M.table[a][b]
                    if c not in how:
                        how[c] = ("mul", a, b)
                        order.append(c)
                        progressed = True
        if len(order) == M.size:
            break
        g = min(x for x in M.elements if x not in how)
        how[g] = ("gen", len(gens))
        gens.append(g)
        order.append(g)
    return gens, [(x, how[x]) for x in order]


def enumerate_inverse_actions(
    N: InverseStructure, H: InverseStructure, max_candidates: int = 10**7
):
    """All inverse-monoid actions of H on N, sorted by action table.

    An action is exactly a monoid hom from H into the semigroup
    endomorphisms of N under composition, so candidates assign endomorphisms
    to a greedy generating set of H and extend multiplicatively; the full
    hom law is then checked.  Refuses with BoundExceeded when the assignment
    count |End(N)|^#generators exceeds max_candidates.
    """
    endos = semigroup_endomorphisms(N.base)
    gens, plan = _generating_plan(H.base)
    estimate = len(endos) ** len(gens)
    if estimate > max_candidates:
        raise BoundExceeded(
            "%d candidate assignments exceed cap %d" % (estimate, max_candidates),
            estimate,
        )
    tn = N.base.size
    th = H.base.table
    identity_endo = tuple(range(tn))
    found = []
    for assignment in product(endos, repeat=len(gens)):
        phi = {}
        for x, rule in plan:
            if rule[0] == "one":
                phi[x] = identity_endo
            elif rule[0] == "gen":
                phi[x] = assignment[rule[1]]
            else:
                a, b = rule[1], rule[2]
                fa, fb = phi[a], phi[b]
                phi[x] = tuple(fa[fb[i]] for i in range(tn))
        ok = True
        for a in H.base.elements:
            fa = phi[a]
            for b in H.base.elements:
                fb = phi[b]
                if phi[th[a][b]] != tuple(fa[fb[i]] for i in range(tn)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(tuple(phi[h] for h in H.base.elements))
    found.sort()
    return tuple(InverseAction(N, H, act) for act in found)
