import pytest

import phonokey


def test_surname_keys():
    assert phonokey.surname_key("Шевченко") == "шевчI"
    assert phonokey.surname_key("Грицько") == "гри3о"
    assert phonokey.surname_key("Кравець") == phonokey.surname_key("Кравец") == "кравец"


def test_clean_surname():
    assert phonokey.clean_surname("Мел'ник ") == ("мелник", False)
    assert phonokey.clean_surname("ШЕВЧЕНКО--БОЙКО-") == ("шевченко-бойко", True)
    with pytest.raises(ValueError):
        phonokey.clean_surname("")


def test_trace_ends_at_key():
    key, steps = phonokey.surname_key_trace("Грицько")
    assert key == "гри3о"
    assert steps[0][1] == "грицько"
    assert steps[-1][2] == key


def test_medicine_keys():
    assert phonokey.medicine_keys("Энтеросгель") == ["ентеросгел"]
    assert phonokey.medicine_keys("Анальгін") == phonokey.medicine_keys("анальгин")
    assert phonokey.medicine_keys("Но-Шпа®") == []


def test_index_roundtrip_and_lookup():
    index, rejects = phonokey.Index.build(["Шевченко", "Шевченка", "Бойко", "!"], "surname")
    assert rejects == [(4, "empty-after-clean")]
    assert index.records == 3
    assert index.bucket("шевчI") == [("шевченка", 1), ("шевченко", 1)]
    hits = index.lookup("Шевченко", "edit-distance")
    assert [(form, dist) for form, _, dist in hits] == [("шевченко", 0), ("шевченка", 1)]
    assert phonokey.Index.parse(index.serialize()) == index
    assert index.dedup()[0][0] == "шевчI"


def test_coefficients():
    assert phonokey.format_percent(phonokey.optimization_coefficient(434495, 547825)) == "20.7"
    assert phonokey.format_percent(phonokey.optimization_coefficient(16049, 23198)) == "30.8"
    assert phonokey.edit_distance("кіт", "кит") == 1
