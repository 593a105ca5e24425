import random

import numpy as np
import pytest

from singquandles import corpus
from singquandles.core import (
    FiniteSingquandle,
    derive_bar,
    find_isomorphism,
    table_singquandle,
    validate_tables,
)
from singquandles.errors import (
    EmptySeedError,
    MalformedTableError,
    NotABijectionError,
    NotAQuandleError,
    NotASingquandleError,
    NotRightInvertibleError,
    UnknownLabelError,
)
from singquandles.formulas import affine_singquandle

from oracles import naive_closure, profile_of, quandle_ok, shift_singquandle, sing_ok

ALL_SQ = ("X-Z4", "Y-Z4", "X-Z8-a", "X-Z8-b")


@pytest.mark.parametrize("cid", ALL_SQ)
def test_corpus_structures_validate(cid, backend):
    q = corpus.load(cid)
    report = validate_tables(q.star, q.r1, q.r2)
    assert report.ok
    assert report.violations == ()


def test_validation_agrees_with_oracle_on_affine(backend):
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randrange(3, 9)
        t = rng.choice([t for t in range(1, n) if np.gcd(t, n) == 1])
        s = rng.randrange(n)
        q = affine_singquandle(n, t, s)
        star = q.star.tolist()
        assert quandle_ok(star)
        assert sing_ok(star, q.bar.tolist(), q.r1.tolist(), q.r2.tolist())
        assert validate_tables(q.star, q.r1, q.r2).ok


def test_validation_catches_random_corruption(backend):
    rng = random.Random(11)
    for _ in range(30):
        q = affine_singquandle(8, rng.choice([1, 3, 5, 7]), rng.randrange(8))
        star, r1, r2 = q.star.copy(), q.r1.copy(), q.r2.copy()
        which = rng.choice(["star", "r1", "r2"])
        table = {"star": star, "r1": r1, "r2": r2}[which]
        i, j = rng.randrange(8), rng.randrange(8)
        table[i, j] = (table[i, j] + 1 + rng.randrange(7)) % 8
        report = validate_tables(star, r1, r2)
        bar_ok = True
        try:
            bar = derive_bar(star).tolist()
        except NotRightInvertibleError:
            bar_ok = False
        oracle_ok = (quandle_ok(star.tolist()) and bar_ok
                     and sing_ok(star.tolist(), bar, r1.tolist(), r2.tolist()))
        assert report.ok == oracle_ok
        # a single-cell edit can only break things, never fix them
        assert not report.ok


def test_violation_witnesses_are_real():
    q = affine_singquandle(6, 5, 2)
    star = q.star.copy()
    star[2, 2] = 3
    report = validate_tables(star, q.r1, q.r2)
    assert not report.ok
    axioms = {v.axiom for v in report.violations}
    assert "idempotence" in axioms
    for v in report.violations:
        if v.axiom == "idempotence":
            assert v.witness == (2,)


def test_derive_bar_roundtrip():
    for cid in ALL_SQ:
        q = corpus.load(cid)
        bar = derive_bar(q.star)
        n = q.order
        a = np.arange(n)[:, None]
        assert np.array_equal(bar[q.star, np.arange(n)[None, :]], np.broadcast_to(a, (n, n)))
        assert np.array_equal(q.star[bar, np.arange(n)[None, :]], np.broadcast_to(a, (n, n)))


def test_derive_bar_rejects_bad_column():
    star = np.zeros((3, 3), dtype=np.int64)  # column 0 is constant
    with pytest.raises(NotRightInvertibleError) as exc:
        derive_bar(star)
    assert exc.value.column == 0


@pytest.mark.parametrize("bad", [
    np.zeros((2, 3), dtype=np.int64),
    np.array([[0.0, 1.0], [1.0, 0.0]]),
    np.array([[0, 5], [1, 0]]),
    np.array([[0, -1], [1, 0]]),
])
def test_malformed_tables_rejected(bad):
    ok = np.array([[0, 0], [1, 1]])
    with pytest.raises(MalformedTableError):
        validate_tables(bad, ok, ok)


def test_table_singquandle_error_kinds():
    # broken quandle axiom -> NotAQuandleError
    with pytest.raises(NotAQuandleError):
        table_singquandle(2, [[1, 0], [0, 1]], [[0, 1], [0, 1]], [[0, 0], [1, 1]])
    # valid quandle, broken compatibility -> NotASingquandleError
    q = corpus.load("X-Z4")
    r1 = q.r1.copy()
    r1[0, 1] = (r1[0, 1] + 1) % 4
    with pytest.raises(NotASingquandleError) as exc:
        table_singquandle(4, q.star, r1, q.r2)
    assert not exc.value.report.ok


def test_profiles_match_oracle():
    for cid in ALL_SQ:
        q = corpus.load(cid)
        profs = q.profiles()
        for x in range(q.order):
            assert tuple(profs[x]) == profile_of(q, x)
            assert tuple(q.profile(x)) == profile_of(q, x)


def test_profile_known_values(xz4, yz4):
    assert tuple(xz4.profile(0)) == (2, 2, 1, 1, 4, 4)
    assert {tuple(p) for p in yz4.profiles()} == {(2, 4, 0, 0, 1, 1), (4, 2, 2, 2, 1, 1)}


def test_closure_matches_oracle():
    rng = random.Random(3)
    for cid in ALL_SQ:
        q = corpus.load(cid)
        for _ in range(10):
            seed = rng.sample(range(q.order), rng.randrange(1, q.order + 1))
            assert q.closure(seed) == naive_closure(q, seed)


def test_closure_empty_seed(xz4):
    with pytest.raises(EmptySeedError):
        xz4.closure([])


def test_subsingquandle_detection(xz4):
    assert xz4.is_subsingquandle([1, 3])
    assert xz4.is_subsingquandle(range(4))
    assert xz4.is_subsingquandle([1])  # R1(1,1)=5=1 mod 4, so singletons close
    assert not xz4.is_subsingquandle([])
    # in the shift structure R1(x,x)=x+1 escapes any singleton
    q = shift_singquandle(4, 1)
    assert not q.is_subsingquandle([0])
    assert q.is_subsingquandle(range(4))


def test_labels_and_lookup():
    q = table_singquandle(2, [[0, 0], [1, 1]], [[0, 1], [0, 1]], [[0, 0], [1, 1]],
                          labels=("a", "b"))
    assert q.index_of("b") == 1
    with pytest.raises(UnknownLabelError):
        q.index_of("c")
    with pytest.raises(MalformedTableError):
        table_singquandle(2, [[0, 0], [1, 1]], [[0, 1], [0, 1]], [[0, 0], [1, 1]],
                          labels=("a", "a"))


def test_relabel_conjugates_tables(xz4):
    perm = [2, 0, 3, 1]
    p = xz4.relabel(perm)
    for a in range(4):
        for b in range(4):
            assert p.star[perm[a], perm[b]] == perm[xz4.star[a, b]]
            assert p.r1[perm[a], perm[b]] == perm[xz4.r1[a, b]]
            assert p.r2[perm[a], perm[b]] == perm[xz4.r2[a, b]]
    assert p.labels[perm[0]] == xz4.labels[0]


def test_relabel_requires_bijection(xz4):
    with pytest.raises(NotABijectionError):
        xz4.relabel([0, 0, 1, 2])
    with pytest.raises(NotABijectionError):
        xz4.relabel([0, 1, 2])


def test_equality_and_hash(xz4):
    twin = table_singquandle(4, xz4.star, xz4.r1, xz4.r2)
    assert twin == xz4
    assert hash(twin) == hash(xz4)
    assert xz4.relabel([1, 0, 2, 3]) != xz4


def test_tables_are_frozen(xz4):
    with pytest.raises(ValueError):
        xz4.star[0, 0] = 1


def test_iso_identity_and_relabel(xz4):
    assert find_isomorphism(xz4, xz4).mapping == (0, 1, 2, 3)
    perm = (3, 1, 0, 2)
    result = find_isomorphism(xz4, xz4.relabel(perm))
    assert result
    # any witness must transport all three operations
    m = result.mapping
    other = xz4.relabel(perm)
    for a in range(4):
        for b in range(4):
            assert other.star[m[a], m[b]] == m[xz4.star[a, b]]
            assert other.r1[m[a], m[b]] == m[xz4.r1[a, b]]
            assert other.r2[m[a], m[b]] == m[xz4.r2[a, b]]


def test_iso_separates_by_sqp(xz4, yz4):
    result = find_isomorphism(xz4, yz4)
    assert not result
    assert result.reason == "sqp-mismatch"
    assert result.mapping is None


def test_iso_order_mismatch(xz4, xz8a):
    assert find_isomorphism(xz4, xz8a).reason == "sqp-mismatch"


def test_iso_exhausted_same_profiles():
    # +1 and +2 shifts over Z4 share every profile but have different cycle
    # structure, so the search must fail only after trying everything
    a = shift_singquandle(4, 1)
    b = shift_singquandle(4, 2)
    result = find_isomorphism(a, b)
    assert not result
    assert result.reason == "exhausted"


def test_iso_shift_conjugate():
    # +1 and +3 are conjugate 4-cycles, so these are isomorphic
    result = find_isomorphism(shift_singquandle(4, 1), shift_singquandle(4, 3))
    assert result


def test_report_describe_mentions_axiom():
    q = affine_singquandle(4, 3, 2)
    star = q.star.copy()
    star[1, 1] = 2
    text = validate_tables(star, q.r1, q.r2).describe()
    assert "idempotence" in text
    assert "invalid" in text


def test_validate_order_cross_check(xz4):
    report = validate_tables(xz4.star, xz4.r1, xz4.r2, order=4)
    assert report.ok
    with pytest.raises(MalformedTableError):
        validate_tables(xz4.star, xz4.r1, xz4.r2, order=5)
