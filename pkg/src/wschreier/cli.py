"""Command line interface.

Verbs:

    wschreier check <m.mon> [--as-frame]
    wschreier inverse <m.mon>
    wschreier lambda <a.act> [--emit <out.ext>]
    wschreier glue <f.map> [--emit <out.ext>]
    wschreier extract <e.ext>
    wschreier compare <a.{act,ext,wact}> <b.{act,ext,wact}>
    wschreier join <f.map> <g.map>
    wschreier enumerate <N.mon> <H.mon> [--actions | --wactions] [--limit K]
    wschreier poset <N.mon> <H.mon> --dot <out.dot>

Exit codes: 0 on success, 1 on mathematical failure (law violation, missing
morphism input, not weakly Schreier), 2 on input or format errors.  Output
is deterministic: identical invocations produce identical bytes.  The
enumeration bound defaults to 9 and can be overridden through the
WSCHREIER_BOUND environment variable.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys

from .monoid import (
    BoundExceeded,
    FormatError,
    PreconditionError,
    center,
    check_monoid,
    idempotents,
    inverse_structure,
)
from .extension import find_retraction, extension_morphism, verify_split_extension
from .waction import DEFAULT_BOUND, enumerate_wactions, waction_leq
from .lambda_product import (
    artin_like_action,
    check_inverse_action,
    enumerate_inverse_actions,
    join_hom,
    lambda_product,
    waction_of,
)
from .frames import check_frame
from . import io as wio

__all__ = ["main", "run", "emit_dot"]


def _bound() -> int:
    raw = os.environ.get("WSCHREIER_BOUND", "")
    if raw.strip() == "":
        return DEFAULT_BOUND
    try:
        return int(raw)
    except ValueError:
        raise FormatError("WSCHREIER_BOUND must be an integer, got %r" % raw)


def _classify(M) -> str:
    t = M.table
    if all(
        any(t[a][b] == M.identity and t[b][a] == M.identity for b in M.elements)
        for a in M.elements
    ):
        return " (group)"
    if all(t[a][a] == a for a in M.elements) and all(
        t[a][b] == t[b][a] for a in M.elements for b in M.elements
    ):
        return " (semilattice)"
    return ""


def cmd_check(args) -> int:
    M = wio.load_monoid(args.monoid, validate=False)
    verdict = check_monoid(M.table, M.identity, M.labels)
    if not verdict.ok:
        print("monoid: invalid")
        for v in verdict.violations:
            print("violation %s" % v)
        return 1
    M = verdict.value
    print("monoid: valid")
    inv = inverse_structure(M)
    if inv.ok:
        print("inverse: yes%s" % _classify(M))
    else:
        print("inverse: no%s" % _classify(M))
    failed = False
    if args.as_frame:
        fr = check_frame(M)
        if fr.ok:
            print("frame: yes")
            print("bottom: %s" % M.label(fr.value.bottom))
        else:
            print("frame: no")
            print("violation %s" % fr.violations[0])
            failed = True
    return 1 if failed else 0


def cmd_inverse(args) -> int:
    M = wio.load_monoid(args.monoid)
    verdict = inverse_structure(M)
    if verdict.ok:
        print("inverse: yes%s" % _classify(M))
        print("inv: %s" % " ".join(str(v) for v in verdict.value.inv))
        return 0
    print("inverse: no")
    for v in verdict.violations:
        print("violation %s" % v)
    return 1


def _inverse_pair(N, H):
    """Inverse structures for both monoids, or a report line and None."""
    out = []
    for name, M in (("N", N), ("H", H)):
        verdict = inverse_structure(M)
        if not verdict.ok:
            print("inverse %s: no" % name)
            print("violation %s" % verdict.violations[0])
            return None
        out.append(verdict.value)
    return out


def _emit_extension(ext, out_path, name):
    """Write the extension and its three monoids next to out_path."""
    stem = out_path[:-4] if out_path.endswith(".ext") else out_path
    base = os.path.basename(stem)
    paths = {}
    for role, M in (("N", ext.N), ("G", ext.G), ("H", ext.H)):
        mon_path = "%s.%s.mon" % (stem, role)
        with open(mon_path, "w", encoding="utf-8") as fh:
            fh.write(wio.serialize_monoid(M, "%s_%s" % (name, role)))
        paths[role] = "%s.%s.mon" % (base, role)
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(
            wio.serialize_extension(ext, paths["N"], paths["G"], paths["H"], name)
        )
    print("emitted: %s" % out_path)


def cmd_lambda(args) -> int:
    table = wio.load_action(args.action)
    pair = _inverse_pair(table.N, table.H)
    if pair is None:
        return 1
    n_inv, h_inv = pair
    verdict = check_inverse_action(n_inv, h_inv, table.act)
    if not verdict.ok:
        print("action: invalid")
        print("violation %s" % verdict.violations[0])
        return 1
    print("action: valid")
    lam = lambda_product(verdict.value)
    print("carrier: %d" % lam.monoid.size)
    print("weakly-schreier: yes")
    print("schreier: %s" % ("yes" if lam.retraction.unique else "no"))
    if args.emit:
        _emit_extension(lam.extension, args.emit, "lambda")
    return 0


def cmd_glue(args) -> int:
    f = wio.load_hom(args.map, validate=False)
    for name, M in (("source", f.source), ("target", f.target)):
        fr = check_frame(M)
        if not fr.ok:
            print("frame %s: no" % name)
            print("violation %s" % fr.violations[0])
            return 1
    print("frames: yes")
    from .monoid import check_hom

    hv = check_hom(f.source, f.target, f.map)
    if not hv.ok:
        print("meet-hom: no")
        print("violation %s" % hv.violations[0])
        return 1
    print("meet-hom: yes")
    from .frames import artin_glueing

    _, ext = artin_glueing(f)
    print("carrier: %d" % ext.G.size)
    print("weakly-schreier: yes")
    if args.emit:
        _emit_extension(ext, args.emit, "glueing")
    return 0


def _monoid_refs(path):
    """The N and H reference strings recorded in an extension file."""
    n_ref = h_ref = None
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            stripped = line.split("#", 1)[0].strip()
            if stripped.startswith("N "):
                n_ref = stripped[2:].strip()
            elif stripped.startswith("H "):
                h_ref = stripped[2:].strip()
    return n_ref or "N", h_ref or "H"


def cmd_extract(args) -> int:
    ext = wio.load_extension(args.extension)
    verdict = verify_split_extension(ext)
    if not verdict.ok:
        print("extension: invalid")
        print("violation %s" % verdict.violations[0])
        return 1
    print("extension: valid")
    ret = find_retraction(verdict.value)
    if not ret.ok:
        print("weakly-schreier: no")
        print("violation %s" % ret.violations[0])
        return 1
    print("weakly-schreier: yes")
    print("schreier: %s" % ("yes" if ret.value.unique else "no"))
    from .waction import extract_waction

    pair = extract_waction(verdict.value, ret.value)
    n_ref, h_ref = _monoid_refs(args.extension)
    sys.stdout.write(wio.serialize_wact_pair(pair, n_ref, h_ref, "extracted"))
    return 0


def _load_comparand(path):
    """An extension from an .act, .ext or .wact file, or (line, None) on
    mathematical failure."""
    if path.endswith(".act"):
        table = wio.load_action(path)
        n_inv = inverse_structure(table.N)
        h_inv = inverse_structure(table.H)
        if not n_inv.ok or not h_inv.ok:
            return "inverse: no (%s)" % path, None
        verdict = check_inverse_action(n_inv.value, h_inv.value, table.act)
        if not verdict.ok:
            return "action: invalid (%s)" % path, None
        return None, lambda_product(verdict.value).extension
    if path.endswith(".wact"):
        from .waction import build_extension, check_admissible, check_compatible_action

        pair = wio.load_wact_pair(path)
        if not check_admissible(pair.E).ok:
            return "admissible: no (%s)" % path, None
        if not check_compatible_action(pair.E, pair.alpha).ok:
            return "compatible: no (%s)" % path, None
        return None, build_extension(pair)
    ext = wio.load_extension(path)
    verdict = verify_split_extension(ext)
    if not verdict.ok:
        return "extension: invalid (%s)" % path, None
    if not find_retraction(verdict.value).ok:
        return "weakly-schreier: no (%s)" % path, None
    return None, verdict.value


def cmd_compare(args) -> int:
    exts = []
    for path in (args.a, args.b):
        line, ext = _load_comparand(path)
        if ext is None:
            print(line)
            return 1
        exts.append(ext)
    a, b = exts
    ab = extension_morphism(a, b) is not None
    ba = extension_morphism(b, a) is not None
    print("a<=b: %s" % ("yes" if ab else "no"))
    print("b<=a: %s" % ("yes" if ba else "no"))
    print("equivalent: %s" % ("yes" if ab and ba else "no"))
    return 0


def cmd_join(args) -> int:
    from .monoid import check_hom

    f = wio.load_hom(args.f, validate=False)
    g = wio.load_hom(args.g, validate=False)
    if f.source != g.source or f.target != g.target:
        raise FormatError("join requires parallel maps")
    allowed = set(idempotents(f.target)) & set(center(f.target))
    for name, m in (("f", f), ("g", g)):
        hv = check_hom(m.source, m.target, m.map)
        if not hv.ok:
            print("hom %s: no" % name)
            print("violation %s" % hv.violations[0])
            return 1
        bad = [h for h in m.source.elements if m.map[h] not in allowed]
        if bad:
            print("central-idempotent %s: no" % name)
            print("violation image: %s" % bad[0])
            return 1
    joined = join_hom(f, g)
    print("join: valid")
    print("map: %s" % " ".join(str(v) for v in joined.map))
    action = artin_like_action(joined)
    for h in joined.source.elements:
        for n in joined.target.elements:
            print("act %d %d -> %d" % (h, n, action.act[h][n]))
    return 0


def cmd_enumerate(args) -> int:
    N = wio.load_monoid(args.N)
    H = wio.load_monoid(args.H)
    limit = args.limit
    if args.actions:
        pair = _inverse_pair(N, H)
        if pair is None:
            return 1
        actions = enumerate_inverse_actions(*pair)
        shown = 0
        for i, a in enumerate(actions):
            if limit is not None and shown >= limit:
                break
            print("action %d:" % i)
            for h in H.elements:
                for n in N.elements:
                    print("act %d %d -> %d" % (h, n, a.act[h][n]))
            shown += 1
        print("count: %d" % len(actions))
        return 0
    pairs = list(enumerate_wactions(N, H, bound=_bound()))
    shown = 0
    for i, p in enumerate(pairs):
        if limit is not None and shown >= limit:
            break
        print("pair %d:" % i)
        for h in H.elements:
            blocks = " ".join("{%s}" % " ".join(str(n) for n in b) for b in p.E.blocks(h))
            print("fiber %d: %s" % (h, blocks))
        for h in H.elements:
            for n in N.elements:
                print("action %d %d -> %d" % (h, n, p.alpha.act[h][n]))
        shown += 1
    print("count: %d" % len(pairs))
    return 0


def _fingerprint(p) -> str:
    body = repr((p.E.fibers, p.alpha.act)).encode()
    return hashlib.sha1(body).hexdigest()[:8]


def emit_dot(pairs, leq) -> str:
    """DOT text of the poset reflection of a preorder on pairs.

    Mutually comparable pairs collapse into one node labelled by class size
    and the fingerprint of its first member; edges are the covers of the
    quotient (transitive reduction), drawn upward.
    """
    n = len(pairs)
    below = [[i == j or leq(pairs[i], pairs[j]) for j in range(n)] for i in range(n)]
    klass = [-1] * n
    reps = []
    for i in range(n):
        if klass[i] >= 0:
            continue
        klass[i] = len(reps)
        for j in range(i + 1, n):
            if klass[j] < 0 and below[i][j] and below[j][i]:
                klass[j] = len(reps)
        reps.append(i)
    k = len(reps)
    order = [[below[reps[i]][reps[j]] for j in range(k)] for i in range(k)]
    edges = []
    for i in range(k):
        for j in range(k):
            if i == j or not order[i][j]:
                continue
            if any(m != i and m != j and order[i][m] and order[m][j] for m in range(k)):
                continue
            edges.append((i, j))
    sizes = [sum(1 for c in klass if c == ci) for ci in range(k)]
    out = ["digraph wact_poset {", "  rankdir=BT;"]
    for ci in range(k):
        out.append(
            '  n%d [label="size=%d fp=%s"];' % (ci, sizes[ci], _fingerprint(pairs[reps[ci]]))
        )
    for i, j in sorted(edges):
        out.append("  n%d -> n%d;" % (i, j))
    out.append("}")
    return "\n".join(out) + "\n"


def cmd_poset(args) -> int:
    N = wio.load_monoid(args.N)
    H = wio.load_monoid(args.H)
    pairs = list(enumerate_wactions(N, H, bound=_bound()))
    dot = emit_dot(pairs, waction_leq)
    with open(args.dot, "w", encoding="utf-8") as fh:
        fh.write(dot)
    nodes = sum(1 for line in dot.splitlines() if "[label=" in line)
    edges = sum(1 for line in dot.splitlines() if "->" in line)
    print("pairs: %d" % len(pairs))
    print("nodes: %d" % nodes)
    print("edges: %d" % edges)
    print("dot: %s" % args.dot)
    return 0


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wschreier", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("check", help="validate a monoid file")
    c.add_argument("monoid")
    c.add_argument("--as-frame", action="store_true")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("inverse", help="inverse structure of a monoid")
    c.add_argument("monoid")
    c.set_defaults(func=cmd_inverse)

    c = sub.add_parser("lambda", help="lambda semidirect product of an action")
    c.add_argument("action")
    c.add_argument("--emit", metavar="OUT")
    c.set_defaults(func=cmd_lambda)

    c = sub.add_parser("glue", help="Artin glueing of a meet-preserving map")
    c.add_argument("map")
    c.add_argument("--emit", metavar="OUT")
    c.set_defaults(func=cmd_glue)

    c = sub.add_parser("extract", help="admissible relation and action of an extension")
    c.add_argument("extension")
    c.set_defaults(func=cmd_extract)

    c = sub.add_parser("compare", help="order two extensions")
    c.add_argument("a")
    c.add_argument("b")
    c.set_defaults(func=cmd_compare)

    c = sub.add_parser("join", help="pointwise join of two central-idempotent maps")
    c.add_argument("f")
    c.add_argument("g")
    c.set_defaults(func=cmd_join)

    c = sub.add_parser("enumerate", help="stream actions or relation/action pairs")
    c.add_argument("N")
    c.add_argument("H")
    group = c.add_mutually_exclusive_group()
    group.add_argument("--actions", action="store_true")
    group.add_argument("--wactions", action="store_true")
    c.add_argument("--limit", type=int, default=None)
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("poset", help="DOT Hasse diagram of the extension poset")
    c.add_argument("N")
    c.add_argument("H")
    c.add_argument("--dot", required=True)
    c.set_defaults(func=cmd_poset)

    return p


def run(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except wio.ParseError as exc:
        print("error: %s" % exc)
        return 2
    except BoundExceeded as exc:
        print("error: %s" % exc)
        return 2
    except FormatError as exc:
        print("error: %s" % exc)
        return 2
    except PreconditionError as exc:
        print("error: %s" % exc)
        return 1
    except OSError as exc:
        print("error: %s" % exc)
        return 2


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
