"""Shared fixtures and independent brute-force oracles.

The oracle functions below restate the defining conditions directly from
first principles, without reusing the library's checkers, so that library
results can be compared against an independent implementation.
"""

from __future__ import annotations

import itertools

import pytest

from wschreier.catalog import chain_lattice, cyclic_group, trivial_monoid
from wschreier.monoid import FiniteMonoid, inverse_structure
from wschreier.lambda_product import InverseAction


# ---------------------------------------------------------------------------
# fixture monoids


@pytest.fixture(scope="session")
def t1():
    return trivial_monoid()


@pytest.fixture(scope="session")
def c2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def sl2():
    return chain_lattice(2)


@pytest.fixture(scope="session")
def sl3():
    return chain_lattice(3)


def make_inverse_action(N: FiniteMonoid, H: FiniteMonoid, act) -> InverseAction:
    n_inv = inverse_structure(N).expect("N is inverse")
    h_inv = inverse_structure(H).expect("H is inverse")
    return InverseAction(n_inv, h_inv, tuple(tuple(row) for row in act))


@pytest.fixture(scope="session")
def alpha_a(sl3, sl2):
    """Action of the 2-chain on the 3-chain that collapses everything to a
    away from the identity."""
    return make_inverse_action(sl3, sl2, ((0, 1, 2), (1, 1, 1)))


@pytest.fixture(scope="session")
def alpha_0(sl3, sl2):
    """Action of the 2-chain on the 3-chain that collapses everything to
    bottom away from the identity."""
    return make_inverse_action(sl3, sl2, ((0, 1, 2), (2, 2, 2)))


# ---------------------------------------------------------------------------
# naive oracles


def naive_is_monoid(table, identity) -> bool:
    n = len(table)
    if not 0 <= identity < n:
        return False
    for a in range(n):
        if table[identity][a] != a or table[a][identity] != a:
            return False
    for a in range(n):
        for b in range(n):
            if not 0 <= table[a][b] < n:
                return False
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    return False
    return True


def naive_is_hom(source: FiniteMonoid, target: FiniteMonoid, map_) -> bool:
    if map_[source.identity] != target.identity:
        return False
    return all(
        map_[source.mul(a, b)] == target.mul(map_[a], map_[b])
        for a in source.elements
        for b in source.elements
    )


def set_partitions(items):
    """All partitions of a list, as tuples of tuples."""
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for partial in set_partitions(rest):
        for i, block in enumerate(partial):
            yield partial[:i] + ((first,) + block,) + partial[i + 1 :]
        yield ((first,),) + partial


def blocks_to_classes(n, blocks):
    out = [0] * n
    for i, block in enumerate(blocks):
        for x in block:
            out[x] = i
    return tuple(out)


def naive_admissible(N: FiniteMonoid, H: FiniteMonoid, fibers) -> bool:
    """Fibers as per-h class-id tuples over N."""

    def related(h, a, b):
        return fibers[h][a] == fibers[h][b]

    for n1 in N.elements:
        for n2 in N.elements:
            if related(H.identity, n1, n2) and n1 != n2:
                return False
    for h in H.elements:
        for n1 in N.elements:
            for n2 in N.elements:
                if not related(h, n1, n2):
                    continue
                for x in N.elements:
                    if not related(h, N.mul(x, n1), N.mul(x, n2)):
                        return False
                for y in H.elements:
                    if not related(H.mul(h, y), n1, n2):
                        return False
    return True


def naive_compatible(N: FiniteMonoid, H: FiniteMonoid, fibers, act) -> bool:
    """The six compatibility conditions, stated directly."""

    def related(h, a, b):
        return fibers[h][a] == fibers[h][b]

    one_n, one_h = N.identity, H.identity
    for h in H.elements:
        if not related(h, act[h][one_n], one_n):
            return False
    for n in N.elements:
        if act[one_h][n] != n:
            return False
    for h in H.elements:
        for n1 in N.elements:
            for n2 in N.elements:
                lhs = N.mul(act[h][n1], act[h][n2])
                if not related(h, act[h][N.mul(n1, n2)], lhs):
                    return False
    for h1 in H.elements:
        for h2 in H.elements:
            for n in N.elements:
                lhs = act[H.mul(h1, h2)][n]
                if not related(H.mul(h1, h2), lhs, act[h1][act[h2][n]]):
                    return False
    for h in H.elements:
        for n1 in N.elements:
            for n2 in N.elements:
                if not related(h, n1, n2):
                    continue
                for n in N.elements:
                    if not related(h, N.mul(n1, n), N.mul(n2, n)):
                        return False
    for h1 in H.elements:
        for n1 in N.elements:
            for n2 in N.elements:
                if not related(h1, n1, n2):
                    continue
                for h2 in H.elements:
                    prod = H.mul(h2, h1)
                    if not related(prod, act[h2][n1], act[h2][n2]):
                        return False
    return True


def naive_wschreier_pairs(N: FiniteMonoid, H: FiniteMonoid):
    """Every admissible-relation/compatible-action pair, deduplicated by the
    class pattern of the action; returns a set of canonical keys."""
    per_h = []
    for h in H.elements:
        if h == H.identity:
            per_h.append([tuple(range(N.size))])
        else:
            per_h.append(
                [
                    blocks_to_classes(N.size, blocks)
                    for blocks in set_partitions(range(N.size))
                ]
            )
    keys = set()
    all_acts = itertools.product(
        *[
            [tuple(range(N.size))] if h == H.identity else
            list(itertools.product(N.elements, repeat=N.size))
            for h in H.elements
        ]
    )
    all_acts = list(all_acts)
    for fibers in itertools.product(*per_h):
        if not naive_admissible(N, H, fibers):
            continue
        norm = tuple(normalize_classes(f) for f in fibers)
        for act in all_acts:
            if not naive_compatible(N, H, norm, act):
                continue
            signature = tuple(
                norm[h][act[h][n]] for h in H.elements for n in N.elements
            )
            keys.add((norm, signature))
    return keys


def normalize_classes(class_id):
    seen = {}
    out = []
    for c in class_id:
        if c not in seen:
            seen[c] = len(seen)
        out.append(seen[c])
    return tuple(out)


def naive_inverse_actions(N: FiniteMonoid, H: FiniteMonoid):
    """All action tables satisfying the three inverse-action laws, found by
    filtering every function H x N -> N."""
    found = []
    for flat in itertools.product(N.elements, repeat=N.size * H.size):
        act = tuple(
            flat[h * N.size : (h + 1) * N.size] for h in H.elements
        )
        if any(act[H.identity][n] != n for n in N.elements):
            continue
        ok = all(
            act[h][N.mul(n1, n2)] == N.mul(act[h][n1], act[h][n2])
            for h in H.elements
            for n1 in N.elements
            for n2 in N.elements
        ) and all(
            act[H.mul(h1, h2)][n] == act[h1][act[h2][n]]
            for h1 in H.elements
            for h2 in H.elements
            for n in N.elements
        )
        if ok:
            found.append(act)
    return found


def naive_weakly_schreier(ext) -> bool:
    t = ext.G.table
    return all(
        any(
            t[ext.k.map[n]][ext.s.map[ext.e.map[g]]] == g
            for n in ext.N.elements
        )
        for g in ext.G.elements
    )


# ---------------------------------------------------------------------------
# DOT inspection helpers


def parse_dot(text):
    """Node names and directed edges of an emitted DOT graph."""
    nodes, edges = [], []
    for line in text.splitlines():
        line = line.strip()
        if "[label=" in line:
            nodes.append(line.split(" ")[0])
        elif "->" in line:
            a, b = line.rstrip(";").split(" -> ")
            edges.append((a.strip(), b.strip()))
    return nodes, edges


def assert_dag_transitively_reduced(text):
    """The graph must be acyclic and contain no edge implied by a longer
    path."""
    nodes, edges = parse_dot(text)
    adjacency = {n: [] for n in nodes}
    for a, b in edges:
        adjacency[a].append(b)

    def reachable(start, goal):
        stack = list(adjacency[start])
        seen = set()
        while stack:
            x = stack.pop()
            if x == goal:
                return True
            if x in seen:
                continue
            seen.add(x)
            stack.extend(adjacency[x])
        return False

    for n in nodes:
        assert not reachable(n, n), "cycle through %s" % n
    for a, b in edges:
        assert not any(m != b and reachable(m, b) for m in adjacency[a]), (
            "edge %s -> %s is transitively implied" % (a, b)
        )


# ---------------------------------------------------------------------------
# cached enumerations shared across test modules


class _EnumerationCache:
    def __init__(self):
        self._wact = {}
        self._inv = {}

    def wactions(self, N: FiniteMonoid, H: FiniteMonoid):
        from wschreier.waction import enumerate_wactions

        key = (N, H)
        if key not in self._wact:
            self._wact[key] = enumerate_wactions(N, H)
        return self._wact[key]

    def inverse_actions(self, N: FiniteMonoid, H: FiniteMonoid):
        from wschreier.lambda_product import enumerate_inverse_actions

        key = (N, H)
        if key not in self._inv:
            n_inv = inverse_structure(N).expect("N is inverse")
            h_inv = inverse_structure(H).expect("H is inverse")
            self._inv[key] = enumerate_inverse_actions(n_inv, h_inv)
        return self._inv[key]


@pytest.fixture(scope="session")
def enum_cache():
    return _EnumerationCache()
