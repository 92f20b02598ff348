"""Exercises the bindings end to end. Run after installing the extension."""

import json

import nelson_forge as nf

antichain = nf.Relation(3, [(0, 1), (0, 2)])
assert antichain.closed_points == [1, 2]
assert antichain.is_effective
assert antichain.lower([1, 2]) == [1, 2]
assert antichain.upper([1]) == [0, 1]
assert nf.Relation.parse(antichain.to_text()) == antichain

irs = nf.build_irs(antichain)
assert len(irs) == 6
assert irs.carrier == [
    ([], []),
    ([], [0]),
    ([1], [0, 1]),
    ([2], [0, 2]),
    ([1, 2], [0, 1, 2]),
    ([0, 1, 2], [0, 1, 2]),
]
assert irs.is_effective and not irs.is_semi_simple
x = irs.index_of([1], [0, 1])
assert irs.t(irs.index_of([], [0])) == irs.zero
assert irs.t(x) == x
assert irs.strong_negation(irs.strong_negation(x)) == x

drs = nf.build_drs(antichain)
assert len(drs) == 6 and drs.representation == "disjoint"
assert all(nf.effectiveness(antichain).values())

report = nf.check_relation(antichain)
assert report["passed"] and report["effective"], report
classes = nf.check_relation(nf.Relation(3, [(0, 1), (1, 0)]))
assert classes["passed"] and classes["semi_simple"] and not classes["effective"]

assert len(nf.enumerate(3)) == 29
assert len(nf.enumerate(3, "posets")) == 19

back = nf.Algebra.from_json(irs.to_json())
assert back.carrier == irs.carrier
assert json.loads(irs.to_json())["representation"] == "increasing"
assert irs.hasse_dot().count(" -> ") == 6

corrupted = nf.Algebra.from_json(irs.to_json().replace('"implication":[[5', '"implication":[[4', 1))
failures = [r for r in nf.check_algebra(corrupted) if not r["passed"]]
assert failures, "corrupted table passed"

lem = nf.Formula("p | ~p")
assert str(lem) == "p | ~p" and lem.atoms == ["p"]
assert nf.classical_validity(lem)
assert nf.refute(lem, irs) is not None
assert nf.refute(nf.Formula("p -> p"), irs) is None
assert nf.evaluate(nf.Formula("~p"), irs, {"p": irs.zero}) == irs.one

cm = nf.countermodel(lem, max_size=2)
assert cm is not None and len(cm.algebra) == 3, cm
assert cm.relation == nf.Relation(2, [(0, 1), (1, 0)])
assert nf.countermodel(nf.Formula("p -> p"), max_size=3) is None

try:
    nf.Formula("p &")
except nf.NelsonForgeError as e:
    assert "syntax" in str(e)
else:
    raise AssertionError("parse error not raised")

try:
    nf.Relation(3, [(0, 1), (1, 2)])
except nf.NelsonForgeError:
    pass
else:
    raise AssertionError("non-transitive input accepted")

print("smoke test passed")
