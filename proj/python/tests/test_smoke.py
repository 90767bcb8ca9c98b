import json

import pytest

import cuntz_index as ci

EXPECTED = {
    "id": ("inn", 1),
    "(12)": ("irr", 2),
    "(13)": ("irr", 2),
    "(34)": ("irr", 2),
    "(142)": ("irr", 4),
    "(1324)": ("irr", 2),
    "(23)": ("red", 4),
    "(12)(34)": ("out", 1),
    "(13)(24)": ("out", 1),
    "(14)(23)": ("inn", 1),
}


@pytest.mark.parametrize("perm", sorted(EXPECTED))
def test_classify(perm):
    c = ci.classify(perm)
    assert (c["property"], c["index"]) == EXPECTED[perm]


def test_permutation_object():
    p = ci.Permutation("(142)")
    assert p.one_line() == "4132"
    assert p.inverse().compose(p).is_identity()
    assert ci.classify(p)["index"] == 4
    assert len(set(ci.table_order())) == 24


def test_generator_images():
    assert ci.generator_images("(12)") == ("s_{12,1} + s_{11,2}", "s_{2}")


def test_xi_examples():
    assert len(ci.xi("(12)")["basis"]) == 2
    assert len(ci.xi("(13)")["basis"]) == 2
    r = ci.xi("(142)")
    assert r["index"] == 4 and r["square_closed"] and r["condition_a"] and r["condition_b"]


def test_automorphisms():
    assert ci.automorphism_order("(12)(34)") == 2
    assert ci.automorphism_order("(12)") is None
    assert ci.inner_witness("(14)(23)") == "(13)(24)"
    assert ci.inner_witness("(12)(34)") is None


def test_equivalence_classes():
    classes = ci.equivalence_classes()
    assert len(classes) == 16
    assert sum(len(c) for c in classes) == 24


def test_diagonal():
    assert ci.diagonal("(12)")["verdict"] == "automorphism"
    assert ci.diagonal("(23)")["verdict"] == "not-automorphism"


def test_table_json_roundtrip():
    text = ci.table(format="json", details=True)
    assert ci.roundtrip_json(text) == text
    doc = json.loads(text)
    assert len(doc["rows"]) == 24
    assert sorted(r["index"] for r in doc["rows"]).count(4) == 12


def test_verify_and_identities():
    assert all(passed for _, passed, _ in ci.verify())
    ids = ci.identities()
    assert len(ids) == 7
    assert all(holds and lhs == prod for _, holds, lhs, prod in ids)


def test_normalize_merges_siblings():
    assert ci.normalize("s_{1,1} + s_{2,2}") == "1"


def test_errors_carry_kind():
    with pytest.raises(ci.CuntzError) as info:
        ci.classify("(15)")
    assert info.value.kind == "InvalidPermutation"
    with pytest.raises(ValueError):
        ci.table(format="yaml")


def test_sweep_rank2_counts():
    counts = ci.sweep(rank=2)
    assert sum(counts.values()) == 24
    assert counts["automorphism"] == 4
