"""Finite groups as multiplication tables, with subgroups, quotients and
conjugation machinery.

Elements are integer indices into a Cayley table.  Everything downstream
(group algebras, gradings, transversals) works with these indices, so group
construction fixes a canonical, deterministic element order once and for all:
permutation groups are ordered by sorted image tuples, table groups are
reordered identity-first then by label, and derived objects (subgroups,
quotients) inherit the parent's order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import ValidationError

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "QuotientGroup",
    "ConjugationMap",
    "ButterflyGroupData",
    "load_group",
    "group_from_table",
    "group_from_permutations",
    "cyclic_group",
    "symmetric_group",
    "direct_product",
    "subgroup",
    "generated_subgroup",
    "trivial_subgroup",
    "full_subgroup",
    "is_normal",
    "centralizer_in_group",
    "center_subgroup",
    "quotient",
    "conjugation_map",
    "product_subgroup",
    "coset_transversal",
    "butterfly_group_data",
]

MAX_GROUP_ORDER = 10000
_FULL_ASSOC_CHECK_ORDER = 64
_ASSOC_SAMPLE = 20000


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its Cayley table.

    table[i, j] is the index of the product of elements i and j.  The table is
    validated on construction: Latin square, two-sided identity, two-sided
    inverses, and associativity (all triples for order <= 64, a fixed
    deterministic sample above that).
    """

    order: int
    table: np.ndarray
    labels: tuple[str, ...]
    identity: int
    inverses: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        table = np.asarray(self.table, dtype=np.int64)
        object.__setattr__(self, "table", table)
        n = self.order
        if n < 1 or n > MAX_GROUP_ORDER:
            raise ValidationError(f"group order {n} outside [1, {MAX_GROUP_ORDER}]")
        if table.shape != (n, n):
            raise ValidationError("multiplication table shape does not match order")
        if len(self.labels) != n or len(set(self.labels)) != n:
            raise ValidationError("labels must be distinct and match the order")
        idx = np.arange(n)
        if not (np.all(np.sort(table, axis=1) == idx) and np.all(np.sort(table, axis=0) == idx[:, None])):
            raise ValidationError("multiplication table is not a Latin square")
        e = self.identity
        if not (np.all(table[e] == idx) and np.all(table[:, e] == idx)):
            raise ValidationError(f"element {e} is not a two-sided identity")
        inv = np.argmax(table == e, axis=1)
        if not (np.all(table[idx, inv] == e) and np.all(table[inv, idx] == e)):
            raise ValidationError("some element has no two-sided inverse")
        object.__setattr__(self, "inverses", inv)
        self._check_associativity()

    def _check_associativity(self):
        n = self.order
        t = self.table
        if n <= _FULL_ASSOC_CHECK_ORDER:
            i, j, k = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
            i, j, k = i.ravel(), j.ravel(), k.ravel()
        else:
            rng = np.random.default_rng(0)
            i, j, k = rng.integers(0, n, size=(3, _ASSOC_SAMPLE))
        if not np.all(t[t[i, j], k] == t[i, t[j, k]]):
            raise ValidationError("multiplication table is not associative")

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return int(self.table[self.table[g, x], self.inverses[g]])

    def elements(self) -> range:
        return range(self.order)

    def __eq__(self, other) -> bool:
        return self is other or (
            isinstance(other, FiniteGroup)
            and self.order == other.order
            and self.identity == other.identity
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self) -> int:
        return hash((self.order, self.identity, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of `parent`, stored as a sorted tuple of element indices."""

    parent: FiniteGroup
    elements: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(sorted(int(x) for x in self.elements))
        object.__setattr__(self, "elements", elems)
        if len(set(elems)) != len(elems):
            raise ValidationError("subgroup elements repeat")
        if self.parent.identity not in set(elems):
            raise ValidationError("subgroup does not contain the identity")
        arr = np.array(elems, dtype=np.int64)
        if not np.all(np.isin(self.parent.inverses[arr], arr)):
            raise ValidationError("subgroup not closed under inversion")
        if not np.all(np.isin(self.parent.table[np.ix_(arr, arr)], arr)):
            raise ValidationError("subgroup not closed under products")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return int(x) in set(self.elements)

    def position(self, x: int) -> int:
        """Position of parent element x within this subgroup's element list."""
        return self.elements.index(int(x))

    def as_group(self) -> FiniteGroup:
        """This subgroup as a FiniteGroup in its own right.

        Elements keep the parent's relative order (ascending parent index), so
        the identity comes first and coordinates of derived algebras line up
        with the parent's.
        """
        pos = {g: i for i, g in enumerate(self.elements)}
        n = len(self.elements)
        table = np.zeros((n, n), dtype=np.int64)
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                table[i, j] = pos[self.parent.mul(a, b)]
        labels = tuple(self.parent.labels[g] for g in self.elements)
        return FiniteGroup(order=n, table=table, labels=labels, identity=pos[self.parent.identity])


@dataclass(frozen=True)
class QuotientGroup:
    """G/N with its coset partition and projection map."""

    parent: FiniteGroup
    kernel: Subgroup
    cosets: tuple[tuple[int, ...], ...]
    quotient: FiniteGroup
    projection: np.ndarray
    representatives: tuple[int, ...]

    def rep(self, q: int) -> int:
        """Canonical parent representative of quotient element q."""
        return self.representatives[q]

    def degree_of(self, g: int) -> int:
        """Quotient element containing parent element g."""
        return int(self.projection[g])


@dataclass(frozen=True)
class ConjugationMap:
    """The conjugation homomorphism G -> Aut(N), images as permutations of N's positions."""

    source: FiniteGroup
    target_normal: Subgroup
    images: np.ndarray  # shape (|G|, |N|): images[g][i] = position of g n_i g^-1
    kernel: Subgroup

    def image_set(self) -> set[tuple[int, ...]]:
        return {tuple(int(x) for x in row) for row in self.images}

    def image_set_of(self, elements: Iterable[int]) -> set[tuple[int, ...]]:
        return {tuple(int(x) for x in self.images[g]) for g in elements}


def group_from_table(table: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> FiniteGroup:
    """Build and canonicalize a group from an explicit multiplication table.

    Elements are reordered identity-first, then sorted by label, so all outputs
    are deterministic regardless of the input row order.
    """
    table = np.asarray(table, dtype=np.int64)
    n = table.shape[0]
    if table.ndim != 2 or table.shape != (n, n):
        raise ValidationError("table must be square")
    if labels is None:
        width = len(str(n - 1))
        labels = tuple(f"g{i:0{width}d}" for i in range(n))
    else:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise ValidationError("labels length does not match table")
    identity = None
    idx = np.arange(n)
    for e in range(n):
        if np.all(table[e] == idx) and np.all(table[:, e] == idx):
            identity = e
            break
    if identity is None:
        raise ValidationError("table has no two-sided identity")
    order = sorted(range(n), key=lambda i: (i != identity, labels[i]))
    pos = {old: new for new, old in enumerate(order)}
    new_table = np.zeros_like(table)
    for i, a in enumerate(order):
        for j, b in enumerate(order):
            new_table[i, j] = pos[int(table[a, b])]
    return FiniteGroup(
        order=n,
        table=new_table,
        labels=tuple(labels[a] for a in order),
        identity=0,
    )


def _perm_compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # (a*b)(x) = a(b(x))
    return tuple(a[x] for x in b)


def group_from_permutations(degree: int, generators: Sequence[Sequence[int]], max_order: int = MAX_GROUP_ORDER) -> FiniteGroup:
    """The permutation group generated by image arrays on {0..degree-1}.

    Elements are enumerated by closure and ordered by sorted image tuples,
    which puts the identity first.
    """
    gens: list[tuple[int, ...]] = []
    for g in generators:
        t = tuple(int(x) for x in g)
        if sorted(t) != list(range(degree)):
            raise ValidationError(f"generator {g} is not a permutation of 0..{degree - 1}")
        gens.append(t)
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _perm_compose(g, x)
                if y not in seen:
                    if len(seen) >= max_order:
                        raise ValidationError(f"generated group exceeds the order bound {max_order}")
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    elems = sorted(seen)
    pos = {x: i for i, x in enumerate(elems)}
    n = len(elems)
    table = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            table[i, j] = pos[_perm_compose(a, b)]
    labels = tuple("(" + ",".join(map(str, x)) + ")" for x in elems)
    return FiniteGroup(order=n, table=table, labels=labels, identity=pos[identity])


def load_group(spec: dict) -> FiniteGroup:
    """Build a group from a specification record.

    Accepted forms:
      {"kind": "table", "table": [[...]], "labels": [...]}   (labels optional)
      {"kind": "perm", "degree": n, "generators": [[...], ...]}
    """
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ValidationError("group spec must be a dict with a 'kind' field")
    kind = spec["kind"]
    if kind == "table":
        return group_from_table(spec["table"], spec.get("labels"))
    if kind == "perm":
        return group_from_permutations(int(spec["degree"]), spec["generators"])
    raise ValidationError(f"unknown group spec kind {kind!r}")


def cyclic_group(n: int) -> FiniteGroup:
    if n == 1:
        return group_from_table([[0]], ["1"])
    return group_from_permutations(n, [tuple((i + 1) % n for i in range(n))])


def symmetric_group(n: int) -> FiniteGroup:
    if n == 1:
        return group_from_table([[0]], ["1"])
    cycle = tuple((i + 1) % n for i in range(n))
    swap = (1, 0) + tuple(range(2, n))
    return group_from_permutations(n, [cycle, swap])


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """G x H with element (a, b) at index a*|H| + b."""
    ng, nh = g.order, h.order
    n = ng * nh
    if n > MAX_GROUP_ORDER:
        raise ValidationError(f"product order {n} exceeds {MAX_GROUP_ORDER}")
    a = np.arange(n) // nh
    b = np.arange(n) % nh
    table = g.table[np.ix_(a, a)] * nh + h.table[np.ix_(b, b)]
    labels = tuple(f"({g.labels[i]}|{h.labels[j]})" for i in range(ng) for j in range(nh))
    return FiniteGroup(order=n, table=table, labels=labels, identity=g.identity * nh + h.identity)


def subgroup(g: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    return Subgroup(parent=g, elements=tuple(elements))


def generated_subgroup(g: FiniteGroup, generators: Iterable[int]) -> Subgroup:
    gens = [int(x) for x in generators]
    seen = {g.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = g.mul(s, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(parent=g, elements=tuple(seen))


def trivial_subgroup(g: FiniteGroup) -> Subgroup:
    return Subgroup(parent=g, elements=(g.identity,))


def full_subgroup(g: FiniteGroup) -> Subgroup:
    return Subgroup(parent=g, elements=tuple(range(g.order)))


def _require_subgroup_of(g: FiniteGroup, n: Subgroup, name: str = "subgroup"):
    if n.parent is not g and n.parent != g:
        raise ValidationError(f"{name} does not live in the given group")


def is_normal(g: FiniteGroup, n: Subgroup) -> bool:
    _require_subgroup_of(g, n)
    eset = set(n.elements)
    return all(g.conj(x, h) in eset for x in g.elements() for h in n.elements)


def centralizer_in_group(g: FiniteGroup, n: Subgroup) -> Subgroup:
    """C_G(N) = {x in G : x h = h x for all h in N}."""
    _require_subgroup_of(g, n)
    cent = [x for x in g.elements() if all(g.mul(x, h) == g.mul(h, x) for h in n.elements)]
    return Subgroup(parent=g, elements=tuple(cent))


def center_subgroup(g: FiniteGroup, n: Subgroup) -> Subgroup:
    """Z(N) computed inside the parent: elements of N centralizing N."""
    cz = [x for x in n.elements if all(g.mul(x, h) == g.mul(h, x) for h in n.elements)]
    return Subgroup(parent=g, elements=tuple(cz))


def quotient(g: FiniteGroup, n: Subgroup) -> QuotientGroup:
    """The factor group G/N for N normal in G."""
    if not is_normal(g, n):
        raise ValidationError("kernel is not normal, quotient undefined")
    seen: dict[int, int] = {}
    cosets: list[tuple[int, ...]] = []
    for x in g.elements():
        if x in seen:
            continue
        coset = tuple(sorted(g.mul(h, x) for h in n.elements))
        for y in coset:
            seen[y] = len(cosets)
        cosets.append(coset)
    reps = [c[0] for c in cosets]
    # order classes identity-coset first, then by representative label
    order = sorted(range(len(cosets)), key=lambda i: (reps[i] != g.identity, g.labels[reps[i]]))
    pos = {old: new for new, old in enumerate(order)}
    cosets = [cosets[i] for i in order]
    reps = [reps[i] for i in order]
    projection = np.zeros(g.order, dtype=np.int64)
    for q, coset in enumerate(cosets):
        for y in coset:
            projection[y] = q
    m = len(cosets)
    table = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            table[i, j] = projection[g.mul(reps[i], reps[j])]
    labels = tuple(f"[{g.labels[r]}]" for r in reps)
    quot = FiniteGroup(order=m, table=table, labels=labels, identity=0)
    # surjective homomorphism with the stated kernel, by construction; verify anyway
    if not np.array_equal(projection[g.table], quot.table[np.ix_(projection, projection)]):
        raise ValidationError("projection is not a homomorphism")
    if tuple(sorted(int(x) for x in np.nonzero(projection == 0)[0])) != n.elements:
        raise ValidationError("projection kernel differs from the stated kernel")
    return QuotientGroup(
        parent=g,
        kernel=n,
        cosets=tuple(cosets),
        quotient=quot,
        projection=projection,
        representatives=tuple(reps),
    )


def _automorphism_ok(n_group: Subgroup, perm: np.ndarray) -> bool:
    g = n_group.parent
    elems = n_group.elements
    pos = {x: i for i, x in enumerate(elems)}
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            if perm[pos[g.mul(a, b)]] != pos[g.mul(elems[perm[i]], elems[perm[j]])]:
                return False
    return True


def conjugation_map(g: FiniteGroup, n: Subgroup) -> ConjugationMap:
    """The homomorphism g -> (x -> g x g^-1) restricted to N, for N normal in G."""
    if not is_normal(g, n):
        raise ValidationError("conjugation map needs a normal subgroup")
    pos = {x: i for i, x in enumerate(n.elements)}
    images = np.zeros((g.order, n.order), dtype=np.int64)
    for x in g.elements():
        for i, h in enumerate(n.elements):
            images[x, i] = pos[g.conj(x, h)]
    for x in g.elements():
        if not _automorphism_ok(n, images[x]):
            raise ValidationError(f"conjugation by {x} is not an automorphism of N")
    lhs = images[g.table]
    rhs = images[np.arange(g.order)[:, None, None], images[None, :, :]]
    if not np.array_equal(lhs, rhs):
        raise ValidationError("conjugation images do not form a homomorphism")
    identity_perm = np.arange(n.order)
    kernel_elems = tuple(x for x in g.elements() if np.array_equal(images[x], identity_perm))
    kernel = Subgroup(parent=g, elements=kernel_elems)
    if kernel.elements != centralizer_in_group(g, n).elements:
        raise ValidationError("conjugation kernel differs from the centralizer")
    return ConjugationMap(source=g, target_normal=n, images=images, kernel=kernel)


def product_subgroup(g: FiniteGroup, a: Subgroup, b: Subgroup) -> Subgroup:
    """The product set A*B, required to be a subgroup."""
    elems = {g.mul(x, y) for x in a.elements for y in b.elements}
    return Subgroup(parent=g, elements=tuple(elems))


def coset_transversal(g: FiniteGroup, k: Subgroup, h: Subgroup) -> tuple[int, ...]:
    """Canonical representatives (smallest index per coset) of the cosets of K in H."""
    kset = set(k.elements)
    if not kset <= set(h.elements):
        raise ValidationError("transversal needs K contained in H")
    seen: set[int] = set()
    reps: list[int] = []
    for x in h.elements:
        if x in seen:
            continue
        coset = {g.mul(y, x) for y in kset}
        seen |= coset
        reps.append(min(coset))
    return tuple(sorted(reps))


def _covers_cosets_once(g: FiniteGroup, k: Subgroup, h: Subgroup, reps: Sequence[int]) -> bool:
    if len(reps) * k.order != h.order:
        return False
    covered = set()
    for t in reps:
        covered |= {g.mul(y, t) for y in k.elements}
    return covered == set(h.elements)


@dataclass(frozen=True)
class ButterflyGroupData:
    """Matched group-theoretic data for the butterfly hypotheses.

    `t` and `that` are matched transversals: t[i] represents a coset of
    N'C_G(N) in G', that[i] a coset of N'C_Ghat(N) in Ghat', and conjugation by
    t[i] on N equals conjugation by that[i] through the stated embedding.
    """

    g: FiniteGroup
    n: Subgroup
    g_prime: Subgroup
    n_prime: Subgroup
    ghat: FiniteGroup
    embedding: tuple[int, ...]
    ghat_prime: Subgroup
    n_hat: Subgroup
    n_prime_hat: Subgroup
    c_g_n: Subgroup
    c_ghat_n: Subgroup
    t: tuple[int, ...]
    that: tuple[int, ...]
    eps: ConjugationMap
    eps_hat_images: np.ndarray


def _validate_embedding(g: FiniteGroup, n: Subgroup, ghat: FiniteGroup, embedding: Sequence[int]) -> Subgroup:
    emb = [int(x) for x in embedding]
    if len(emb) != n.order or len(set(emb)) != n.order:
        raise ValidationError("embedding must be injective on N")
    for i, a in enumerate(n.elements):
        for j, b in enumerate(n.elements):
            prod_pos = n.position(g.mul(a, b))
            if ghat.mul(emb[i], emb[j]) != emb[prod_pos]:
                raise ValidationError("embedding of N into Ghat is not a homomorphism")
    image = Subgroup(parent=ghat, elements=tuple(emb))
    if not is_normal(ghat, image):
        raise ValidationError("embedded copy of N is not normal in Ghat")
    return image


def _eps_hat_on_n_positions(ghat: FiniteGroup, n: Subgroup, embedding: Sequence[int]) -> np.ndarray:
    emb = [int(x) for x in embedding]
    where = {e: i for i, e in enumerate(emb)}
    images = np.zeros((ghat.order, n.order), dtype=np.int64)
    for x in ghat.elements():
        for i, e in enumerate(emb):
            c = ghat.conj(x, e)
            if c not in where:
                raise ValidationError("conjugation in Ghat leaves the embedded N")
            images[x, i] = where[c]
    return images


def butterfly_group_data(
    g: FiniteGroup,
    n: Subgroup,
    g_prime: Subgroup,
    ghat: FiniteGroup,
    embedding: Sequence[int],
) -> ButterflyGroupData:
    """Verify the butterfly group hypotheses and build matched transversals.

    Requires: N normal in G and (via `embedding`) in Ghat, C_G(N) <= G',
    G = G'N, and equal conjugation images eps(G) = epshat(Ghat) inside Aut(N).
    Returns Ghat' = epshat^-1(eps(G')) together with transversals T of
    N'C_G(N) in G' and That of N'C_Ghat(N) in Ghat' matched so that
    eps(t) = epshat(that) pairwise.
    """
    if not is_normal(g, n):
        raise ValidationError("butterfly hypothesis failed: N is not normal in G")
    n_hat = _validate_embedding(g, n, ghat, embedding)
    eps = conjugation_map(g, n)
    eps_hat = _eps_hat_on_n_positions(ghat, n, embedding)

    c_g_n = eps.kernel
    if not set(c_g_n.elements) <= set(g_prime.elements):
        raise ValidationError("butterfly hypothesis failed: C_G(N) is not contained in G'")
    if {g.mul(x, y) for x in g_prime.elements for y in n.elements} != set(g.elements()):
        raise ValidationError("butterfly hypothesis failed: G != G'N")
    eps_g = eps.image_set()
    eps_ghat = {tuple(int(v) for v in eps_hat[x]) for x in ghat.elements()}
    if eps_g != eps_ghat:
        raise ValidationError("butterfly hypothesis failed: eps(G) != epshat(Ghat)")

    eps_gprime = eps.image_set_of(g_prime.elements)
    ghat_prime = Subgroup(
        parent=ghat,
        elements=tuple(x for x in ghat.elements() if tuple(int(v) for v in eps_hat[x]) in eps_gprime),
    )

    identity_perm = tuple(range(n.order))
    c_ghat_n = Subgroup(
        parent=ghat,
        elements=tuple(x for x in ghat.elements() if tuple(int(v) for v in eps_hat[x]) == identity_perm),
    )
    # facts derived in the source result; asserted, not assumed
    if not set(c_ghat_n.elements) <= set(ghat_prime.elements):
        raise ValidationError("derived fact failed: C_Ghat(N) is not contained in Ghat'")
    if {ghat.mul(x, y) for x in n_hat.elements for y in ghat_prime.elements} != set(ghat.elements()):
        raise ValidationError("derived fact failed: Ghat != N Ghat'")
    n_prime = Subgroup(parent=g, elements=tuple(set(g_prime.elements) & set(n.elements)))
    emb = [int(x) for x in embedding]
    n_prime_hat = Subgroup(parent=ghat, elements=tuple(emb[n.position(x)] for x in n_prime.elements))
    if set(n_prime_hat.elements) != set(n_hat.elements) & set(ghat_prime.elements):
        raise ValidationError("derived fact failed: N' != N intersect Ghat'")

    k = product_subgroup(g, n_prime, c_g_n)
    t = coset_transversal(g, k, g_prime)
    nc_g = product_subgroup(g, n, c_g_n)
    if not _covers_cosets_once(g, nc_g, full_subgroup(g), t):
        raise ValidationError("transversal of N'C_G(N) in G' does not cover G/NC_G(N) exactly once")

    khat = product_subgroup(ghat, n_prime_hat, c_ghat_n)
    that: list[int] = []
    for rep in t:
        target = tuple(int(v) for v in eps.images[rep])
        match = next((x for x in ghat_prime.elements if tuple(int(v) for v in eps_hat[x]) == target), None)
        if match is None:
            raise ValidationError(f"no element of Ghat' matches the conjugation action of t={rep}; eps(G) and epshat(Ghat) are inconsistent")
        that.append(match)
    if not _covers_cosets_once(ghat, khat, ghat_prime, that):
        raise ValidationError("matched transversal does not cover Ghat'/N'C_Ghat(N) exactly once")
    nc_ghat = product_subgroup(ghat, n_hat, c_ghat_n)
    if not _covers_cosets_once(ghat, nc_ghat, full_subgroup(ghat), that):
        raise ValidationError("matched transversal does not cover Ghat/NC_Ghat(N) exactly once")

    return ButterflyGroupData(
        g=g,
        n=n,
        g_prime=g_prime,
        n_prime=n_prime,
        ghat=ghat,
        embedding=tuple(emb),
        ghat_prime=ghat_prime,
        n_hat=n_hat,
        n_prime_hat=n_prime_hat,
        c_g_n=c_g_n,
        c_ghat_n=c_ghat_n,
        t=tuple(t),
        that=tuple(that),
        eps=eps,
        eps_hat_images=eps_hat,
    )
