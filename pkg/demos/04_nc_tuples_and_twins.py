"""Non-cancellative tuples, their classification, and twins."""

from pi2.nc import (
    boundary_letter_invariant,
    certify_kernel,
    find_twins,
    is_indecomposable,
    is_minimal,
    is_reduced,
    prove_no_one_sided_nc,
    search_nc_over_kernel,
)
from pi2.presentation import load_corpus

p = load_corpus("threelines")
kernels = [(p.word(b), p.word(c)) for b, c in (("23", "32"), ("31", "13"), ("12", "21"))]
result = find_twins(p, kernels, 3)
for (b, c), tuples in result.reduced.items():
    print(f"reduced tuples over ({p.format(b)}, {p.format(c)}):")
    for t in tuples[:4]:
        verdicts = [is_reduced(p, t).status, is_minimal(p, t).status, is_indecomposable(p, t).status]
        print(f"  ({p.format(t.a)}, {p.format(t.d)})  witness length {len(t.relation_witness)}  "
              f"reduced/minimal/indecomposable = {'/'.join(verdicts)}")
print(len(result.twins), "twins with flanks up to length 3")

# The A3 arrangement: letters that never end (or start) a relation side are
# class invariants, which rules out one-sided tuples over two kernels.
a3 = load_corpus("a3")
rep = boundary_letter_invariant(a3)
print("\nA3 boundary report:", rep.to_document(a3))
for kernel, side in ((("14", "41"), "right"), (("25", "52"), "left")):
    k = certify_kernel(a3, a3.word(kernel[0]), a3.word(kernel[1]))
    verdict = prove_no_one_sided_nc(a3, k, side)
    found = search_nc_over_kernel(a3, k, 3).tuples
    print(f"kernel {kernel}: no one-sided tuple on the {side} -> {verdict.status}; "
          f"first tuple found: {found[0].describe(a3)}")
print("A3 twins:", len(find_twins(a3, [(a3.word("14"), a3.word("41")), (a3.word("25"), a3.word("52"))], 3).twins))
