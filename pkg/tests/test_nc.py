import pytest

from pi2.nc import (
    BACertificate,
    Kernel,
    NCTuple,
    SearchLimitReached,
    Twin,
    all_kernels,
    ba_certificate,
    boundary_letter_invariant,
    certify_kernel,
    check_nc_tuple,
    find_twins,
    is_indecomposable,
    is_minimal,
    is_reduced,
    nc_tuples_exhaustive,
    prove_no_one_sided_nc,
    search_nc_over_kernel,
)
from pi2.presentation import example1_presentation
from pi2.rewrite import ClassIndex, Witness, replay_witness

THREE_KERNELS = [("23", "32"), ("31", "13"), ("12", "21")]
KNOWN_TUPLES = {("23", "32"): [("1", ""), ("", "123")],
                ("31", "13"): [("123", ""), ("", "2")],
                ("12", "21"): [("13", ""), ("", "32")]}


def nc(p, a, b, c, d):
    return check_nc_tuple(p, p.word(a), p.word(b), p.word(c), p.word(d))


def test_check_nc_tuple_three_lines(threelines):
    p = threelines
    t = nc(p, "1", "23", "32", "")
    assert t is not None and len(t.relation_witness) == 1 and t.verify(p)
    t = nc(p, "", "23", "32", "123")
    assert t is not None and len(t.relation_witness) == 5 and t.verify(p)
    assert nc(p, "", "23", "32", "") is None
    assert nc(p, "2", "23", "32", "") is None
    assert nc(p, "1", "23", "23", "") is None  # equal kernel words are not a kernel


def test_check_nc_tuple_a3(a3):
    t = nc(a3, "", "14", "41", "235")
    assert t is not None and t.verify(a3)
    assert len(t.relation_witness) == 2
    middle = replay_witness(a3, Witness(t.relation_witness.start, t.relation_witness.steps[:1]))
    assert middle == a3.word("12345")


def test_kernel_certificate(threelines):
    p = threelines
    k = certify_kernel(p, p.word("23"), p.word("32"))
    assert k.inequivalence == (p.word("23"),)
    assert certify_kernel(p, p.word("123"), p.word("132")) is None


@pytest.mark.parametrize("kernel", THREE_KERNELS)
def test_search_contains_known_tuples(threelines, kernel):
    p = threelines
    k = certify_kernel(p, p.word(kernel[0]), p.word(kernel[1]))
    found = {(p.format(t.a), p.format(t.d)) for t in search_nc_over_kernel(p, k, 3).tuples}
    for a, d in KNOWN_TUPLES[kernel]:
        assert (p.format(p.word(a)), p.format(p.word(d))) in found


def test_search_order_and_empty_flanks(threelines, a3):
    p = threelines
    k = certify_kernel(p, p.word("23"), p.word("32"))
    ts = search_nc_over_kernel(p, k, 3).tuples
    keys = [(len(t.a) + len(t.d), len(t.a), t.a, t.d) for t in ts]
    assert keys == sorted(keys)
    k = certify_kernel(a3, a3.word("14"), a3.word("41"))
    assert search_nc_over_kernel(a3, k, 0).tuples == []


def test_reduced(threelines):
    p = threelines
    assert is_reduced(p, nc(p, "1", "23", "32", "")).yes
    assert is_reduced(p, nc(p, "", "23", "32", "123")).yes
    v = is_reduced(p, nc(p, "11", "23", "32", ""))
    assert v.no and v.counterexample.a == p.word("1") and v.counterexample.d == ()


def test_minimal(threelines, a3):
    p = threelines
    for kernel, tuples in KNOWN_TUPLES.items():
        for a, d in tuples:
            assert is_minimal(p, nc(p, a, *kernel, d)).yes
    # (1, 2) over (23, 32) gives (1, ε) over (232, 322), whose sides share the right divisor 2
    t = nc(p, "1", "232", "322", "")
    assert t is not None
    v = is_minimal(p, t)
    assert v.no and v.counterexample == {"side": "right", "divisor": p.word("2")}
    assert is_minimal(a3, nc(a3, "", "14", "41", "235")).yes
    assert is_minimal(a3, nc(a3, "134", "25", "52", "")).yes


def test_indecomposable(threelines, doubled):
    p = threelines
    for kernel, tuples in KNOWN_TUPLES.items():
        for a, d in tuples:
            assert is_indecomposable(p, nc(p, a, *kernel, d)).yes
    q = doubled
    big = nc(q, "14", "2356", "3265", "")
    assert big is not None
    v = is_indecomposable(q, big)
    assert v.no
    first, second = v.counterexample
    assert {first.describe(q), second.describe(q)} == {"(1, ε) in NC(23, 32)", "(4, ε) in NC(56, 65)"}
    assert is_indecomposable(q, nc(q, "1", "23", "32", "")).yes


def test_indecomposable_not_applicable_without_homogeneity():
    p = example1_presentation(1)
    # classes are infinite here, so a kernel can never be certified
    with pytest.raises(SearchLimitReached):
        check_nc_tuple(p, (), p.word("a"), p.word("b"), ())
    fake = NCTuple((), (0,), (1,), (), Witness((0,)), Kernel((0,), (1,), ((0,),)))
    assert is_indecomposable(p, fake).status == "unknown"


def test_twins_three_lines(threelines):
    p = threelines
    kernels = [(p.word(b), p.word(c)) for b, c in THREE_KERNELS]
    res = find_twins(p, kernels, 3)
    assert not res.unknown
    pairs = {frozenset([(t.first.a, t.first.d), (t.second.a, t.second.d)]) for t in res.twins}
    for kernel, ((a1, d1), (a2, d2)) in KNOWN_TUPLES.items():
        assert frozenset([(p.word(a1), p.word(d1)), (p.word(a2), p.word(d2))]) in pairs
        reduced = res.reduced[(p.word(kernel[0]), p.word(kernel[1]))]
        assert {(t.a, t.d) for t in reduced} >= {(p.word(a1), p.word(d1)), (p.word(a2), p.word(d2))}


def test_twins_a3_and_commutative(a3, commutative3):
    res = find_twins(a3, [(a3.word("14"), a3.word("41")), (a3.word("25"), a3.word("52"))], 3)
    assert res.twins == [] and not res.unknown
    q = commutative3
    res = find_twins(q, all_kernels(q, 2), 2)
    assert res.twins == [] and sum(len(s.tuples) for s in res.searches) == 0


def test_all_kernels(threelines):
    p = threelines
    ks = all_kernels(p, 1)
    assert len(ks) == 6  # classes ε, 1, 2, 3 give six unordered pairs
    idx = ClassIndex(p)
    assert all(idx.equivalent(b, c) is False for b, c in all_kernels(p, 2, index=idx))


def test_boundary_letters(a3, threelines, free2):
    r = boundary_letter_invariant(a3)
    sym = lambda s: {a3.alphabet[i].symbol for i in s}
    assert sym(r.end_letters) == {"2", "3", "5"} and sym(r.preserved_end) == {"1", "4"}
    assert sym(r.start_letters) == {"1", "3", "4"} and sym(r.preserved_start) == {"2", "5"}
    r = boundary_letter_invariant(threelines)
    assert not r.preserved_end and not r.preserved_start
    r = boundary_letter_invariant(free2)
    assert r.preserved_end == r.preserved_start == frozenset({0, 1})


def test_one_sided(a3, threelines):
    assert prove_no_one_sided_nc(a3, (a3.word("14"), a3.word("41")), "right").yes
    assert prove_no_one_sided_nc(a3, (a3.word("25"), a3.word("52")), "left").yes
    assert prove_no_one_sided_nc(threelines, (threelines.word("23"), threelines.word("32")), "right").status == "unknown"
    with pytest.raises(ValueError):
        prove_no_one_sided_nc(a3, (a3.word("14"), a3.word("41")), "up")


def test_exhaustive_negative_controls(commutative3):
    found, undecided = nc_tuples_exhaustive(commutative3, 2, 2)
    assert found == [] and undecided == []


def test_ba_certificate(threelines):
    p = threelines
    twin = Twin(nc(p, "1", "23", "32", ""), nc(p, "", "23", "32", "123"))
    cert = ba_certificate(p, twin)
    first_b = cert.simplices[0]
    assert first_b["entries"] == [["1"], ["2", "3"]] and first_b["dim"] == 2
    second_b = cert.simplices[2]
    assert second_b["entries"] == [["2", "3"], ["1", "2", "3"]]
    assert [s["orientation"] for s in cert.simplices] == [1, -1, 1, -1]
    assert BACertificate.from_document(cert.to_document()).to_document() == cert.to_document()


def test_ba_certificate_full_simplices(threelines):
    p = threelines
    t1 = nc(p, "11", "23", "32", "1")
    t2 = nc(p, "11", "23", "32", "2")
    assert t1 is not None and t2 is not None
    cert = ba_certificate(p, Twin(t1, t2))
    assert [s["dim"] for s in cert.simplices] == [3, 3, 3, 3]
