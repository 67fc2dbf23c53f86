import json
import random
from fractions import Fraction

import pytest

from nilcomplex import catalogue
from nilcomplex.acs import is_integrable
from nilcomplex.catalogue import (DomainViolation, JFamily, ParamSpec,
                                  SamplingExhausted, UnknownAlgebra)


def test_get_and_aliases():
    assert catalogue.get("G6,3") is catalogue.get("M3")
    assert catalogue.get("g6_3") is catalogue.get("G6,3")
    assert catalogue.get("M14+1") is catalogue.get("m14_1")
    entry = catalogue.get("M5")
    assert entry.algebra.table[(2, 3)] == {6: Fraction(-1)}


def test_unknown_algebra():
    with pytest.raises(UnknownAlgebra):
        catalogue.get("M14-1")
    with pytest.raises(UnknownAlgebra):
        catalogue.get("M2")


def test_eleven_entries():
    assert len(catalogue.names()) == 11


def test_sample_family_g67():
    e = catalogue.get("G6,7")
    fam = e.families[0]
    values = {p: Fraction(0) for p in fam.param_names()}
    values.update({"j12": Fraction(1), "j34": Fraction(2)})
    J = catalogue.sample_family(fam, values)
    assert is_integrable(e.algebra, J)


def test_rep_domain_violation():
    e = catalogue.get("G6,7")
    rep = e.representative("J_alpha")
    with pytest.raises(DomainViolation):
        rep.instantiate({"alpha": Fraction(1)})
    with pytest.raises(DomainViolation):
        rep.instantiate({"alpha": Fraction(0)})


def test_family_domain_violation_named():
    e = catalogue.get("M10")
    fam = e.family("case-1")
    values = {p: Fraction(1, 2) for p in fam.param_names()}
    values["j43"] = values["j21"]
    with pytest.raises(DomainViolation) as err:
        fam.instantiate(values)
    assert "j21" in str(err.value)


def test_random_admissible_predicates():
    rng = random.Random(1)
    fam = catalogue.get("G6,3").family("case-xi16")
    values = fam.random_admissible(rng)
    assert values["j16"] != 0
    assert values["j46"] * values["j26"] + values["j45"] * values["j16"] != 0


def test_random_admissible_unit_interval():
    rng = random.Random(2)
    rep = catalogue.get("M5").representative("J_abelian")
    for _ in range(20):
        v = rep.random_admissible(rng)
        assert 0 < v["beta"] <= 1


def test_sampling_exhausted():
    fam = JFamily(name="impossible", params=(ParamSpec("t"),),
                  entries=tuple(tuple("0" for _ in range(6)) for _ in range(6)),
                  conditions=("t - t",))
    with pytest.raises(SamplingExhausted):
        fam.random_admissible(random.Random(0), attempts=50)


def test_metadata_only_family():
    fam = catalogue.get("M5").family("case-xi21-xi24")
    assert not fam.samplable
    with pytest.raises(SamplingExhausted):
        fam.random_admissible(random.Random(0))


def test_pm_one_kind():
    rng = random.Random(3)
    fam = catalogue.get("M14+1").families[0]
    for _ in range(10):
        assert fam.random_admissible(rng)["j21"] in (1, -1)


def test_json_dump_load_round_trip():
    doc = json.loads(json.dumps(catalogue.dump_json()))
    rebuilt = catalogue.load_json(doc)
    assert [e.name for e in rebuilt] == catalogue.names()
    rng = random.Random(4)
    for entry in rebuilt:
        orig = catalogue.get(entry.name)
        for fam in entry.families:
            if not fam.samplable:
                continue
            values = fam.random_admissible(rng)
            assert fam.instantiate(values) == orig.family(fam.name).instantiate(values)
        break


def test_nonexistence_spotcheck():
    for name in ("M14-1", "M18-1"):
        rep = catalogue.nonexistence_spotcheck(name, samples=6, seed=0)
        assert rep["all_fail"]
        assert len(rep["samples"]) == 6
    # and the same structures pass on the +1 twins (consistency)
    rng = random.Random(0)
    fam = catalogue.get("M14+1").families[0]
    L = catalogue.get("M14+1").algebra
    for _ in range(6):
        J = fam.instantiate(fam.random_admissible(rng))
        assert is_integrable(L, J)
