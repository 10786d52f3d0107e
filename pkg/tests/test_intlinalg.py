from pi2.intlinalg import apply_columns, integer_kernel, lattice_contains, solve_integer


def test_kernel_of_simple_relation():
    # columns (2), (4): kernel spanned by (2, -1)
    cols = [{0: 2}, {0: 4}]
    (k,) = integer_kernel(cols)
    assert apply_columns(cols, k) == {}
    assert abs(k[0]) == 2 and abs(k[1]) == 1


def test_kernel_rank():
    cols = [{0: 1, 1: 1}, {0: 1}, {1: 1}, {0: 2, 1: 2}]
    basis = integer_kernel(cols)
    assert len(basis) == 2
    for v in basis:
        assert apply_columns(cols, v) == {}


def test_kernel_is_saturated():
    # columns 2 and 3 in one row: kernel generated by (3, -2), not a multiple of it
    (k,) = integer_kernel([{0: 2}, {0: 3}])
    assert sorted(map(abs, k.values())) == [2, 3]


def test_solve_integer():
    cols = [{0: 2}, {0: 3}]
    sol = solve_integer(cols, {0: 1})
    assert apply_columns(cols, sol) == {0: 1}
    assert solve_integer([{0: 2}, {0: 4}], {0: 1}) is None
    assert lattice_contains([{0: 2, 1: 0}], {0: 4})
    assert not lattice_contains([{0: 1, 1: 1}], {0: 1})
    assert solve_integer(cols, {}) == {}
