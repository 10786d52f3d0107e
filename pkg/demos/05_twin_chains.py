"""Chains of twins in the abelian cover and the box-kernel cross-check."""

from pi2.chains import box_generator_check, box_kernel_basis, is_cycle, twin_chain, unit_equal
from pi2.nc import ba_certificate, find_twins
from pi2.presentation import load_corpus

p = load_corpus("threelines")
chains = []
for b, c in (("23", "32"), ("31", "13"), ("12", "21")):
    twin = find_twins(p, [(p.word(b), p.word(c))], 3).twins[0]
    ch = twin_chain(p, twin)
    chains.append(ch)
    print(f"({b}, {c}): {ch.render()}   cycle={is_cycle(p, ch)}")

# All three agree up to a signed monomial.
for i, c1 in enumerate(chains):
    for j, c2 in enumerate(chains):
        if i < j:
            u = unit_equal(c1, c2)
            print(f"chain {i} = {u.sign:+d} * x^{u.monomial} * chain {j}")

# Independent check: every integer 2-cycle supported in a box of radius 2 is a
# combination of monomial translates of the first chain.
basis = box_kernel_basis(p, 2)
rep = box_generator_check(p, chains[0], 2, basis)
print(f"\nbox radius 2: kernel rank {rep.kernel_rank}, translates {rep.translate_count}, generates={rep.generates}")

twin = find_twins(p, [(p.word("23"), p.word("32"))], 3).twins[0]
for simplex in ba_certificate(p, twin).simplices:
    print("simplex", simplex)
