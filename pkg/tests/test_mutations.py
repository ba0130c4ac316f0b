import pytest

from mutation_harness import KIND_FIXTURES, documents, oracle_valid, scan, simplicial_valid

from helpers import catalog, inverse, simplicial_fixtures


def test_oracle_accepts_the_unmutated_documents():
    import json
    for kind, stems in KIND_FIXTURES.items():
        if kind in ("square", "cube"):
            continue
        for stem in stems:
            if stem == "cone_commutator_s3":
                continue  # its inverse construction is too large to materialize
            assert oracle_valid(kind, json.loads(documents()[stem])), stem


def test_simplicial_oracle_on_shipped_groups():
    for T in simplicial_fixtures().values():
        assert simplicial_valid(T)
    for name in catalog():
        assert simplicial_valid(inverse(name).simplicial)


@pytest.mark.parametrize("kind", sorted(KIND_FIXTURES))
def test_every_non_equivalent_mutant_is_detected(kind):
    total, detected, equivalent, missed = scan(kind)
    print(f"{kind}: {total} mutants, {detected} detected, {equivalent} equivalent, "
          f"{len(missed)} missed")
    assert total - equivalent >= 20
    assert missed == []
