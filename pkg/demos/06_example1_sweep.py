"""The monoid {a, b | (ab)^m a = 1} is the integers; check it on all short words."""

from pi2.bounded import example1_sweep
from pi2.presentation import example1_presentation

for m in (1, 2):
    p = example1_presentation(m)
    rep = example1_sweep(m, max_length=8, p=p)
    print(f"m={m}: ab ~ ba via {[str(s) for s in rep.commute_witness.steps]}")
    print(f"  {rep.words} words up to length 8, graph explored to length {rep.graph_length}")
    print(f"  equal-value pairs connected: {rep.connected_equal_value_pairs}/{rep.equal_value_pairs}")
    print(f"  normal forms with distinct values: {rep.normal_form_values_distinct}, "
          f"reached {rep.normal_forms_reached}/{rep.normal_forms}")
