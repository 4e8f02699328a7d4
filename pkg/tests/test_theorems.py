import json

import pytest

from selfcent import theorems
from selfcent.errors import InputError
from selfcent.families import from_descriptor
from selfcent.membership import IN_A, is_A
from selfcent.theorems import CLAIMS, REGISTRY, build_corpus, normalize_spec, verify


def test_registry_covers_every_claim():
    assert theorems.registry_covers_claims()
    assert len(CLAIMS) == 12
    assert all(REGISTRY[c].statement for c in CLAIMS)


def test_metacyclic_claim_is_verified_on_the_king_grid():
    rep = verify("metacyclic-in-A", {"p": [2, 3, 5], "max_order": 625})
    assert rep.verdict == "verified"
    assert rep.tested >= 30 and not rep.counterexamples and not rep.incomplete


def test_small_order_claim_at_order_16():
    rep = verify("small-order", {"p": [2], "order": 16})
    assert rep.verdict == "verified"
    assert rep.tested >= 8
    assert rep.directions["p^4: in-A => condition"].tested > 0
    assert rep.directions["p^4: condition => in-A"].tested > 0


def test_maxclass_p1_at_p3_is_vacuous_and_says_so():
    rep = verify("maxclass-p1", {"p": [3], "n": 4})
    assert rep.verdict == "vacuous"
    assert set(rep.vacuous_directions) == {"P1 abelian => in-A", "P1 non-abelian => not-in-A"}
    assert rep.tested > 0  # the corpus was built, the scope filter emptied it


def test_maxclass_p1_at_p5_exercises_both_directions():
    rep = verify("maxclass-p1", {"p": [5], "n": 5})
    assert rep.verdict == "verified"
    assert all(d.tested > 0 for d in rep.directions.values())


def test_unknown_theorem():
    with pytest.raises(InputError, match="unknown theorem"):
        verify("no-such-claim")


def test_bad_corpus_spec():
    with pytest.raises(InputError):
        normalize_spec({"colour": "red"})
    with pytest.raises(InputError):
        build_corpus({"families": ["nope"]})


def test_corpus_is_deterministic_and_replayable():
    spec = {"families": ["order16", "mixed"], "max_order": 32}
    a, b = build_corpus(spec), build_corpus(spec)
    assert [e.descriptor for e in a] == [e.descriptor for e in b]
    assert len({json.dumps(e.descriptor, sort_keys=True) for e in a}) == len(a)
    for e in a:
        replayed = from_descriptor(json.loads(json.dumps(e.descriptor)))
        assert (replayed.table == e.build().table).all()


def test_order16_corpus_has_all_fourteen_groups():
    corpus = build_corpus({"families": ["order16"], "max_order": 16})
    assert len(corpus) == 14
    assert all(e.build().order == 16 for e in corpus)


def test_order81_corpus_size():
    corpus = build_corpus({"families": ["order81"], "max_order": 81})
    assert len(corpus) >= 5 and all(e.build().order == 81 for e in corpus)


def test_report_json_shape():
    rep = verify("maxclass-23", {"p": [2], "max_order": 32})
    data = json.loads(json.dumps(rep.to_json()))
    assert {"id", "corpus", "tested", "verdict", "counterexamples", "directions", "millis", "scope"} <= set(data)
    assert data["scope"] == "constructible corpus"
    assert data["directions"]["main"]["verdict"] == "verified"


def test_refutation_path_reports_replayable_counterexamples(monkeypatch):
    # pretend every group fails the membership test
    monkeypatch.setattr(theorems, "_in_A", lambda g: False)
    rep = verify("maxclass-23", {"p": [2], "max_order": 16})
    assert rep.verdict == "refuted"
    assert rep.counterexamples
    for ce in rep.counterexamples:
        # replaying the descriptor with the real test shows the forced verdict was false
        assert is_A(from_descriptor(ce["group"])).verdict == IN_A


def test_parallel_and_serial_runs_agree():
    spec = {"families": ["order16"], "max_order": 16}
    a = verify("z-in-frattini", spec)
    b = verify("z-in-frattini", spec, jobs=2)
    assert a.to_json() | {"millis": 0} == b.to_json() | {"millis": 0}


@pytest.mark.parametrize("tid", ["z-in-frattini", "inverting", "minnonab-classification", "outside-frattini-abelian-centralizer"])
def test_property_claims_on_a_small_corpus(tid):
    rep = verify(tid, {"max_order": 64})
    assert rep.verdict == "verified", rep.counterexamples[:1]
