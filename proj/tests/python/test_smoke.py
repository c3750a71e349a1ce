import json

import pytest

import nottingham as nt


def test_character_round_trip():
    chi = nt.Character("5:1,15:2", p=2)
    assert str(chi) == "p=2; 5:1,15:2"
    assert chi.type == (5, 15)
    assert chi.is_reduced()
    assert nt.Character.from_json(chi.to_json()) == chi
    assert nt.Character("p=2; 5:1,15:2") == chi
    assert 3 * chi == nt.Character("5:3,15:2", p=2)


def test_parse_errors():
    with pytest.raises(nt.ParseError):
        nt.Character("4:1", p=2)
    with pytest.raises(ValueError):
        nt.Character("5:4", p=2)


def test_reduce():
    out = nt.reduce(nt.Character("1:1,2:3,4:3", p=3))
    assert out["reduced"] == nt.Character("1:1,4:3", p=3)
    assert out["witness"]["u"] == "t*(1+t^2)^1*(1+t^4)^2"
    assert out["verified"]


def test_action_and_evaluation():
    chi = nt.Character("5:1,15:2", p=2)
    assert nt.act("t*(1+t^3+t^4)", chi).coeff(11) == 2
    assert nt.evaluate(chi, "1+t^10") == 2


def test_merged_reduced_forms():
    chi = nt.Character("5:1,15:2", p=2)
    psi = nt.Character("5:1,11:2,15:2", p=2)
    w = nt.strict_search(chi, psi)
    assert w is not None
    assert nt.verify_witness(chi, psi, w["u"]) == "ok"
    assert nt.count_classes(2, 5, 15) < 4


def test_counts_and_bound():
    assert nt.bound(2, 5, 15) == (4, 2, 2)
    assert nt.count_classes(3, 2, 7, method="canonical") == 12
    report = json.loads(nt.classify(3, 1, 4))
    assert report["class_count"] == 4
    assert len(nt.reduced_forms(3, 1, 4)) == 4


def test_budget_refusal():
    chi = nt.Character("5:1,15:2", p=2)
    with pytest.raises(nt.BudgetExceeded):
        nt.strict_search(chi, chi, budget=100)


def test_power_conjugacy():
    assert not nt.power_conjugacy_predicate(2, 3, 6, 3)
    chi = nt.Character("1:1,4:3", p=3)
    assert nt.power_conjugacy_oracle(chi, 4)["conjugate"]
    assert not nt.power_conjugacy_oracle(chi, 2)["conjugate"]
