from pi2.bounded import bounded_components, example1_normal_forms, example1_sweep, word_value
from pi2.presentation import example1_presentation


def test_bounded_components_example1():
    p = example1_presentation(1)
    comp = bounded_components(p, 5)
    assert comp[p.word("ab")] == comp[p.word("ba")]
    assert comp[p.word("aba")] == comp[()]
    assert comp[p.word("a")] != comp[p.word("b")]


def test_word_value():
    assert word_value((0, 1, 0), (1, -2)) == 0
    assert word_value((), (1, -2)) == 0


def test_normal_form_values_distinct():
    for m in (1, 2, 3):
        forms = example1_normal_forms(m, 6)
        values = [a * m - b * (m + 1) for a, b in forms]
        assert len(values) == len(set(values))
        assert (0, 0) in forms


def test_sweep():
    for m in (1, 2):
        rep = example1_sweep(m, 6)
        assert rep.commute_witness is not None
        assert rep.consistent
        assert not rep.value_violations
        assert rep.connected_equal_value_pairs == rep.equal_value_pairs
        assert rep.normal_forms_reached == rep.normal_forms
        doc = rep.to_document(example1_presentation(m))
        assert doc["consistent"] is True and doc["ab_ba_witness"]["start"] == ["a", "b"]


def test_example1_relation_word_is_unit():
    from pi2.rewrite import SearchLimits, decide_equivalent
    p = example1_presentation(1)
    assert word_value(p.word("aba"), (1, -2)) == 0
    v = decide_equivalent(p, p.word("aba"), (), SearchLimits(max_word_length=6))
    assert v.equivalent and v.distance == 1
