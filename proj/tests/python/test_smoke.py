import json

import pytest

import qjunta


def test_relevant_variables_and_junta_check():
    f = qjunta.BooleanFunction.parity(6, [2, 5])
    assert qjunta.relevant_variables(f) == [2, 5]
    assert qjunta.is_k_junta(f, 2)
    assert not qjunta.is_k_junta(f, 1)
    assert f("010010") is False
    assert f("010000") is True


def test_and_spectrum():
    f = qjunta.BooleanFunction(2, [0, 0, 0, 1])
    spectrum = qjunta.restricted_spectrum(f, "00", "11")
    assert sorted(abs(c) for c in spectrum["coefficients"].values()) == [0.5] * 4
    assert spectrum["squared_sum"] == 1.0


def test_fourier_sample_on_parity_cube():
    f = qjunta.BooleanFunction.parity(5, [1, 3])
    draws = qjunta.fourier_sample(f, "00000", "10100", draws=50, seed=3)
    assert draws == [[1, 3]] * 50


def test_distance_and_distributions():
    f = qjunta.BooleanFunction.parity(6, [1, 2, 3])
    assert qjunta.distance_to_k_junta(f, qjunta.Distribution.uniform(6), 2)["distance"] == 0.5
    d = qjunta.Distribution(6, {"000000": 1.0, "100000": 3.0})
    assert d.probability("100000") == pytest.approx(0.75)
    cert = qjunta.distance_to_k_junta(f, d, 2)
    assert cert["distance"] == 0.0


def test_tester_accepts_a_junta_and_is_deterministic():
    f = qjunta.BooleanFunction.from_junta(8, [2, 7], [0, 1, 1, 0])
    d = qjunta.Distribution.uniform(8)
    for variant in ("classical", "amplified"):
        a = qjunta.run_tester(f, d, 2, 0.1, seed=11, variant=variant)
        assert a["decision"] == "accept"
        assert a == qjunta.run_tester(f, d, 2, 0.1, seed=11, variant=variant)


def test_run_trials_on_parity():
    config = {"n": 10, "k": 2, "eps": 0.25, "trials": 200, "master_seed": 4,
              "fixture": {"family": "parity"}}
    report = qjunta.run_trials(config)
    assert report["rejection_rate"] >= 0.5 - 3 * (0.25 / 200) ** 0.5
    assert report["certified_distance"] == 0.5


def test_errors_and_wilson():
    with pytest.raises(qjunta.ValidationError):
        qjunta.BooleanFunction(2, [0, 1])
    with pytest.raises(qjunta.ValidationError):
        qjunta.BooleanFunction.from_json("{ not json")
    with pytest.raises(qjunta.CertificationError):
        qjunta.run_trials({"n": 8, "k": 2, "eps": 0.7, "trials": 5, "master_seed": 1,
                           "fixture": {"family": "parity"}})
    lo, hi = qjunta.wilson_interval(0, 10)
    assert lo == 0.0 and hi == pytest.approx(0.3988858710287997)


def test_json_round_trip():
    f = qjunta.BooleanFunction.dictator(4, 3)
    assert qjunta.BooleanFunction.from_json(f.to_json()) == f
    d = qjunta.Distribution.point_mass("0110")
    assert json.loads(d.to_json())["support"][0]["x"] == "0110"
