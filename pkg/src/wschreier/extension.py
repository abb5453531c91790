"""Split extensions of finite monoids and the weakly Schreier condition.

A split extension is a diagram N -k-> G <-e/s-> H where k, e, s are monoid
homs, e o s = id, k is the kernel of e and e is the cokernel of k.  It is
weakly Schreier when every g factors as k(n) * s(e(g)) for some n; any map q
picking such an n is a Schreier retraction.  q is a bare index map with no
hom laws of its own.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import product

from .monoid import (
    FiniteMonoid,
    FormatError,
    MonoidHom,
    PreconditionError,
    Verdict,
    Violation,
    check_hom,
    is_cokernel,
)

__all__ = [
    "SplitExtension",
    "SchreierRetraction",
    "verify_split_extension",
    "find_retraction",
    "retraction_candidates",
    "all_retractions",
    "extension_morphism",
    "extensions_equivalent",
    "direct_product_extension",
]


@dataclass(frozen=True)
class SplitExtension:
    """Bundle (N, G, H, k, e, s); verified is set by verify_split_extension."""

    N: FiniteMonoid
    G: FiniteMonoid
    H: FiniteMonoid
    k: MonoidHom
    e: MonoidHom
    s: MonoidHom
    verified: bool = False

    def __post_init__(self):
        if self.k.source != self.N or self.k.target != self.G:
            raise FormatError("k must map N into G")
        if self.e.source != self.G or self.e.target != self.H:
            raise FormatError("e must map G onto H")
        if self.s.source != self.H or self.s.target != self.G:
            raise FormatError("s must map H into G")


@dataclass(frozen=True)
class SchreierRetraction:
    """A map q: G -> N with k(q(g)) * s(e(g)) = g for every g.

    unique records whether q is the only such map (the Schreier case).
    """

    ext: SplitExtension
    q: tuple
    unique: bool = False

    def __post_init__(self):
        ext = self.ext
        q = tuple(self.q)
        if len(q) != ext.G.size:
            raise FormatError("retraction has %d entries, expected %d" % (len(q), ext.G.size))
        t = ext.G.table
        for g in ext.G.elements:
            n = q[g]
            if not 0 <= n < ext.N.size:
                raise FormatError("retraction value %r out of range" % (n,))
            if t[ext.k.map[n]][ext.s.map[ext.e.map[g]]] != g:
                raise FormatError("q(%d) = %d does not factor g" % (g, n))
        object.__setattr__(self, "q", q)

    def __call__(self, g: int) -> int:
        return self.q[g]


def verify_split_extension(ext: SplitExtension) -> Verdict:
    """Check the split-extension laws, reporting the first failure.

    Laws: k, e, s are homs; e o s = id; k is injective with image exactly
    the e-preimage of the identity; e is the cokernel of k.  On success the
    value is the extension with verified=True.
    """
    for name, f in (("k", ext.k), ("e", ext.e), ("s", ext.s)):
        v = check_hom(f.source, f.target, f.map)
        if not v.ok:
            bad = v.violations[0]
            return Verdict(None, (Violation("%s-%s" % (name, bad.law), bad.witness),))
    for h in ext.H.elements:
        if ext.e.map[ext.s.map[h]] != h:
            return Verdict(None, (Violation("section", (h,)),))
    kimg = {}
    for n in ext.N.elements:
        g = ext.k.map[n]
        if g in kimg:
            return Verdict(None, (Violation("kernel-injective", (kimg[g], n)),))
        kimg[g] = n
    fiber = set(g for g in ext.G.elements if ext.e.map[g] == ext.H.identity)
    if set(kimg) != fiber:
        g = min(set(kimg) ^ fiber)
        return Verdict(None, (Violation("kernel-image", (g,)),))
    if not is_cokernel(ext.k, ext.e):
        return Verdict(None, (Violation("cokernel"),))
    return Verdict(replace(ext, verified=True))


def retraction_candidates(ext: SplitExtension) -> tuple:
    """For each g, the sorted tuple of n with k(n) * s(e(g)) = g."""
    t = ext.G.table
    k, e, s = ext.k.map, ext.e.map, ext.s.map
    out = []
    for g in ext.G.elements:
        sg = s[e[g]]
        out.append(tuple(n for n in ext.N.elements if t[k[n]][sg] == g))
    return tuple(out)


def find_retraction(ext: SplitExtension) -> Verdict:
    """Least-index Schreier retraction, or a witness g with no factorization."""
    cands = retraction_candidates(ext)
    for g, options in enumerate(cands):
        if not options:
            return Verdict(None, (Violation("weakly-schreier", (g,)),))
    q = tuple(options[0] for options in cands)
    unique = all(len(options) == 1 for options in cands)
    return Verdict(SchreierRetraction(ext, q, unique))


def all_retractions(ext: SplitExtension, limit: int = 64) -> tuple:
    """Every Schreier retraction.  The count is the product of the
    per-element candidate counts; refuse (ValueError) beyond limit."""
    cands = retraction_candidates(ext)
    total = 1
    for options in cands:
        if not options:
            return ()
        total *= len(options)
    if total > limit:
        raise ValueError("%d retractions exceed limit %d" % (total, limit))
    return tuple(
        SchreierRetraction(ext, qs, unique=(total == 1))
        for qs in product(*cands)
    )


def _require_comparable(a: SplitExtension, b: SplitExtension):
    if a.N != b.N or a.H != b.H:
        raise FormatError("extensions do not share the same N and H")


def extension_morphism(a: SplitExtension, b: SplitExtension) -> MonoidHom | None:
    """The unique morphism of extensions a -> b if one exists, else None.

    A morphism is a hom f: G_a -> G_b with f o k_a = k_b, e_b o f = e_a and
    f o s_a = s_b.  Both extensions must be weakly Schreier; every g then
    factors as k_a(n) * s_a(h), all candidate images k_b(n) * s_b(h) must
    agree, and the resulting map must be a hom.  Uniqueness is forced by the
    construction.
    """
    _require_comparable(a, b)
    for ext in (a, b):
        if not find_retraction(ext).ok:
            raise PreconditionError("extension is not weakly Schreier")
    ta, tb = a.G.table, b.G.table
    ka, sa, ea = a.k.map, a.s.map, a.e.map
    kb, sb = b.k.map, b.s.map
    fmap = []
    for g in a.G.elements:
        h = ea[g]
        sag, sbg = sa[h], sb[h]
        images = {tb[kb[n]][sbg] for n in a.N.elements if ta[ka[n]][sag] == g}
        if len(images) != 1:
            return None
        fmap.append(images.pop())
    verdict = check_hom(a.G, b.G, tuple(fmap))
    if not verdict.ok:
        return None
    f = verdict.value
    # the three squares hold by construction; keep the cheap assertion honest
    for n in a.N.elements:
        if f.map[ka[n]] != kb[n]:
            return None
    for g in a.G.elements:
        if b.e.map[f.map[g]] != ea[g]:
            return None
    for h in a.H.elements:
        if f.map[sa[h]] != sb[h]:
            return None
    return f


def extensions_equivalent(a: SplitExtension, b: SplitExtension) -> bool:
    """Morphisms in both directions (the preorder's equivalence)."""
    return extension_morphism(a, b) is not None and extension_morphism(b, a) is not None


def direct_product_extension(N: FiniteMonoid, H: FiniteMonoid) -> SplitExtension:
    """N x H with k(n) = (n, 1), e the second projection, s(h) = (1, h)."""
    from .monoid import direct_product

    G = direct_product(N, H)
    idx = {(n, h): n * H.size + h for n in N.elements for h in H.elements}
    k = MonoidHom(N, G, tuple(idx[(n, H.identity)] for n in N.elements))
    e = MonoidHom(G, H, tuple(h for n in N.elements for h in H.elements))
    s = MonoidHom(H, G, tuple(idx[(N.identity, h)] for h in H.elements))
    return SplitExtension(N, G, H, k, e, s)
