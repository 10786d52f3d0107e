"""Monoid presentations: the bundled corpus, arrangement presentations, classification."""

from pi2.presentation import classify_presentation, corpus_names, load_corpus, yoshinaga_presentation

# Every bundled presentation, with its positivity and homogeneity flags.
for name in corpus_names():
    p = load_corpus(name)
    cls = classify_presentation(p)
    rels = ", ".join(f"{r.label}: {p.format(r.lhs)} = {p.format(r.rhs)}" for r in p.relations)
    print(f"{name:13s} positive={cls.positive!s:5s} homogeneous={cls.homogeneous!s:5s} {rels}")

# Three generic lines: the relations come from three chamber permutations.
p = yoshinaga_presentation(3, [(1, 3, 2), (3, 1, 2), (2, 3, 1)], labels="ABC", symbols="123")
print("\nthree lines from permutations equals the corpus entry:", p == load_corpus("threelines"))

# Default naming gives generators g1..gn and labels R1, R2, ...
q = yoshinaga_presentation(2, [(2, 1)])
print("two lines:", [(r.label, q.format(r.lhs), q.format(r.rhs)) for r in q.relations])
