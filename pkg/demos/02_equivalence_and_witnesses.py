"""Deciding word equivalence with replayable certificates."""

from pi2.presentation import example1_presentation, load_corpus
from pi2.rewrite import SearchLimits, decide_equivalent, embed_witness, invert_witness, replay_witness, witness_path

p = load_corpus("threelines")

# A positive answer carries a shortest witness: a start word plus elementary steps.
v = decide_equivalent(p, p.word("23123"), p.word("32123"))
print("23123 ~ 32123:", v.outcome, "in", v.distance, "steps")
for word, step in zip(witness_path(p, v.witness), v.witness.steps):
    print(f"  {p.format(word)}  --{step}-->")
print(" ", p.format(replay_witness(p, v.witness)))

# A negative answer carries the whole class, which anyone can check is closed.
v = decide_equivalent(p, p.word("23"), p.word("32"))
print("\n23 vs 32:", v.outcome, "class of 23 =", [p.format(w) for w in v.class_certificate])

# Witnesses can be inverted and placed inside a context.
w = decide_equivalent(p, p.word("123"), p.word("132")).witness
print("\ninverse of 123 -> 132:", invert_witness(p, w).steps)
print("embedded as 23|123|ε:", embed_witness(p, p.word("23"), w, ()).steps)

# Non-homogeneous presentations have infinite classes, so only bounded searches are possible.
q = example1_presentation(1)
v = decide_equivalent(q, q.word("ab"), q.word("ba"), SearchLimits(max_word_length=6))
print("\n(ab)a = 1: ab ~ ba via", [str(s) for s in v.witness.steps])
v = decide_equivalent(q, q.word("a"), q.word("b"), SearchLimits(max_word_length=6))
print("a vs b:", v.outcome, "-", v.bound_hit)
