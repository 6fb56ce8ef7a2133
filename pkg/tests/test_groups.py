import numpy as np
import pytest

from gmorita.errors import ValidationError
from gmorita.groups import (
    butterfly_group_data,
    center_subgroup,
    centralizer_in_group,
    conjugation_map,
    coset_transversal,
    cyclic_group,
    direct_product,
    full_subgroup,
    generated_subgroup,
    group_from_permutations,
    group_from_table,
    is_normal,
    load_group,
    product_subgroup,
    quotient,
    subgroup,
    symmetric_group,
    trivial_subgroup,
)


def brute_force_closure(degree, generators):
    """Oracle: saturate the generating set by pairwise products until stable."""
    elems = {tuple(range(degree))} | {tuple(g) for g in generators}
    while True:
        new = {tuple(a[x] for x in b) for a in elems for b in elems}
        if new <= elems:
            return elems
        elems |= new


def test_load_group_trivial_table():
    g = load_group({"kind": "table", "table": [[0]]})
    assert g.order == 1 and g.identity == 0


def test_load_group_s3_from_generators():
    gens = [[1, 2, 0], [1, 0, 2]]
    assert len(brute_force_closure(3, gens)) == 6  # oracle
    g = load_group({"kind": "perm", "degree": 3, "generators": gens})
    assert g.order == 6
    assert g.identity == 0  # sorted image tuples put the identity first


def test_load_group_c3_from_generators():
    gens = [[1, 2, 0]]
    assert len(brute_force_closure(3, gens)) == 3  # oracle
    g = load_group({"kind": "perm", "degree": 3, "generators": gens})
    assert g.order == 3


def test_load_group_rejects_bad_tables():
    with pytest.raises(ValidationError):
        load_group({"kind": "table", "table": [[0, 0], [1, 1]]})  # not Latin
    # Latin square with identity but not associative: exists at order 5
    t = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(ValidationError):
        load_group({"kind": "table", "table": t})


def test_load_group_order_bound():
    with pytest.raises(ValidationError):
        group_from_permutations(12, [list(range(1, 12)) + [0]], max_order=10)


def test_table_group_canonical_order():
    # C2 presented with the identity second; constructor reorders it first
    g = group_from_table([[1, 0], [0, 1]], labels=["x", "e"])
    assert g.identity == 0
    assert g.labels == ("e", "x")


def test_centralizer_s3_in_s3_is_center():
    s3 = symmetric_group(3)
    # oracle: exhaustive commuting test
    expected = [
        x
        for x in s3.elements()
        if all(s3.mul(x, y) == s3.mul(y, x) for y in s3.elements())
    ]
    assert expected == [s3.identity]
    got = centralizer_in_group(s3, full_subgroup(s3))
    assert got.elements == (s3.identity,)


def test_centralizer_in_product():
    s3, c3 = symmetric_group(3), cyclic_group(3)
    g = direct_product(s3, c3)
    n = subgroup(g, [a * 3 for a in range(6)])  # S3 x 1
    got = centralizer_in_group(g, n)
    assert got.elements == (0, 1, 2)  # 1 x C3


def test_centralizer_of_trivial_is_everything():
    s3 = symmetric_group(3)
    assert centralizer_in_group(s3, trivial_subgroup(s3)).order == 6


def test_center_subgroup():
    s3 = symmetric_group(3)
    assert center_subgroup(s3, full_subgroup(s3)).elements == (s3.identity,)


def test_quotient_s3_by_a3():
    s3 = symmetric_group(3)
    a3 = generated_subgroup(s3, [3])  # a 3-cycle
    assert a3.order == 3
    q = quotient(s3, a3)
    assert q.quotient.order == 2
    # coset enumeration oracle: two cosets of size 3
    assert sorted(len(c) for c in q.cosets) == [3, 3]
    assert q.degree_of(s3.identity) == 0


def test_quotient_by_whole_group():
    s3 = symmetric_group(3)
    q = quotient(s3, full_subgroup(s3))
    assert q.quotient.order == 1


def test_quotient_product_by_factor():
    s3, c3 = symmetric_group(3), cyclic_group(3)
    g = direct_product(s3, c3)
    n = subgroup(g, [a * 3 for a in range(6)])
    q = quotient(g, n)
    assert q.quotient.order == 3
    # the quotient is cyclic of order 3
    x = 1 if q.quotient.identity != 1 else 2
    assert q.quotient.mul(x, q.quotient.mul(x, x)) == q.quotient.identity


def test_quotient_requires_normal():
    s3 = symmetric_group(3)
    c2 = generated_subgroup(s3, [1])
    assert not is_normal(s3, c2)
    with pytest.raises(ValidationError):
        quotient(s3, c2)


def test_conjugation_abelian_is_trivial():
    c3 = cyclic_group(3)
    cm = conjugation_map(c3, full_subgroup(c3))
    assert len(cm.image_set()) == 1
    assert cm.kernel.order == 3


def test_conjugation_s3_on_a3():
    s3 = symmetric_group(3)
    a3 = generated_subgroup(s3, [3])
    cm = conjugation_map(s3, a3)
    # oracle: direct conjugation puts transpositions in the inverting class
    images = {tuple(int(v) for v in cm.images[x]) for x in s3.elements()}
    assert len(images) == 2
    assert cm.kernel.elements == a3.elements


def test_conjugation_product_on_s3_factor():
    s3, c3 = symmetric_group(3), cyclic_group(3)
    g = direct_product(s3, c3)
    n = subgroup(g, [a * 3 for a in range(6)])
    cm = conjugation_map(g, n)
    assert len(cm.image_set()) == 6  # Inn(S3) = S3
    assert cm.kernel.elements == (0, 1, 2)


def test_conjugation_kernel_equals_centralizer():
    s3, c3 = symmetric_group(3), cyclic_group(3)
    g = direct_product(s3, c3)
    for n in (subgroup(g, [a * 3 for a in range(6)]), trivial_subgroup(g), full_subgroup(g)):
        if not is_normal(g, n):
            continue
        cm = conjugation_map(g, n)
        assert cm.kernel.elements == centralizer_in_group(g, n).elements


def test_product_subgroup_and_transversal():
    s3, c3 = symmetric_group(3), cyclic_group(3)
    g = direct_product(s3, c3)
    n = subgroup(g, [a * 3 for a in range(6)])
    cgn = centralizer_in_group(g, n)
    ncgn = product_subgroup(g, n, cgn)
    assert ncgn.order == 18  # NC_G(N) is everything here
    reps = coset_transversal(g, n, full_subgroup(g))
    assert len(reps) == 3


def _fixture_groups():
    s3, c3 = symmetric_group(3), cyclic_group(3)
    g = direct_product(s3, c3)
    n = subgroup(g, [a * 3 for a in range(6)])
    gp = subgroup(g, [0, 1, 2])
    return g, n, gp


def test_butterfly_group_data_identity_ambient():
    g, n, gp = _fixture_groups()
    emb = [n.position(x) * 0 + x for x in n.elements]  # identity embedding
    data = butterfly_group_data(g, n, gp, g, emb)
    assert data.ghat_prime.elements == gp.elements
    assert data.t == data.that
    assert data.t == (0,)


def test_butterfly_group_data_smaller_ambient():
    g, n, gp = _fixture_groups()
    s3 = symmetric_group(3)
    # N's elements are (sigma|1) at parent index 3*sigma; embed back onto S3
    emb = [x // 3 for x in n.elements]
    data = butterfly_group_data(g, n, gp, s3, emb)
    assert data.ghat_prime.elements == (s3.identity,)
    assert len(data.t) == 1
    # matched conjugation actions agree pairwise
    for t, that in zip(data.t, data.that):
        assert np.array_equal(data.eps.images[t], data.eps_hat_images[that])


def test_butterfly_group_data_c2_ambient():
    g, n, gp = _fixture_groups()
    s3, c2 = symmetric_group(3), cyclic_group(2)
    ghat = direct_product(s3, c2)
    emb = [(x // 3) * 2 for x in n.elements]  # sigma -> (sigma|1)
    data = butterfly_group_data(g, n, gp, ghat, emb)
    assert data.ghat_prime.elements == (0, 1)  # 1 x C2
    assert data.n_prime_hat.elements == (ghat.identity,)
    assert len(data.t) == 1


def test_butterfly_group_data_rejects_bad_hypotheses():
    g, n, gp = _fixture_groups()
    s3 = symmetric_group(3)
    emb = [x // 3 for x in n.elements]
    # C_G(N) = 1xC3 not contained in G' = N
    with pytest.raises(ValidationError, match="C_G"):
        butterfly_group_data(g, n, n, s3, emb)
    # G != G'N when G' is trivial
    with pytest.raises(ValidationError, match="G'N"):
        butterfly_group_data(g, n, trivial_subgroup(g), s3, emb)
    # eps(G) != epshat(Ghat) when Ghat is abelian but G acts nontrivially
    c6 = cyclic_group(6)
    with pytest.raises(ValidationError):
        butterfly_group_data(g, n, gp, c6, list(range(6)))


def test_subgroup_validation():
    s3 = symmetric_group(3)
    with pytest.raises(ValidationError):
        subgroup(s3, [0, 1, 3])  # not closed
    with pytest.raises(ValidationError):
        subgroup(s3, [1, 2])  # no identity


def test_as_group_keeps_parent_order():
    s3, c3 = symmetric_group(3), cyclic_group(3)
    g = direct_product(s3, c3)
    n = subgroup(g, [a * 3 for a in range(6)])
    h = n.as_group()
    assert h.order == 6
    assert h.identity == 0
    assert h.labels[0] == g.labels[0]
