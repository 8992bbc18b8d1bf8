import json
import math
from fractions import Fraction

import pytest

import chanent


def test_weingarten_two_copies():
    table = chanent.weingarten(2, 7)
    assert table[(1, 1)] == Fraction(1, 48)
    assert table[(2,)] == Fraction(-1, 7 * 48)
    assert chanent.moebius([3]) == 2


def test_closed_forms_are_exact():
    u = chanent.hanging_u(6, 3, Fraction(1, 10))
    assert u == [Fraction(1, 3 ** (2 * k)) for k in range(7)]
    assert chanent.z_bb_large_t(8, 2, "1/2") == Fraction(1, 256)
    assert chanent.attached_w(4, 2, "1/2") == (1 - Fraction(1, 16)) / 16


def test_stabilizer_bell_pair():
    state = chanent.StabilizerState.product_state(2, 2)
    # Random two-qubit Cliffords; some seed produces an entangled pair.
    entangled = False
    for seed in range(20):
        s = chanent.StabilizerState.product_state(2, 2)
        s.apply_random_clifford([0, 1], seed)
        if s.entropy([0]) == 1:
            assert s.mutual_information([0], [1]) == 2
            assert s.operator_entanglement([0]) == 2
            assert s.log_negativity([0]) == pytest.approx(1.0)
            entangled = True
            break
    assert entangled
    state.apply_trace([0])
    assert state.total_entropy() == 1


def test_simulate_is_deterministic():
    a = chanent.simulate(L=16, p=0.1, t_max=5, n_traj=4, seed=9, partitions=[8])
    b = chanent.simulate(L=16, p=0.1, t_max=5, n_traj=4, seed=9, partitions=[8], workers=2)
    assert a == b
    assert a["times"] == list(range(6))
    assert a["series"]["mutual:A=8"]["mean"][0] == 0.0


def test_twirl_page_value():
    d = 3
    value = chanent.two_copy_twirl_average(2, 1, d, "0", "ba", [0])
    assert value == pytest.approx(2 * d / (d * d + 1), abs=1e-12)


def test_toy_and_domainwall():
    assert chanent.vn_channel_setup(5, 1.0, 1) == pytest.approx(math.log(5))
    quenched, annealed = chanent.trajectory_setup_entropies(2, 0.3, 2)
    assert quenched != pytest.approx(annealed)
    assert chanent.thermalization_time(2, 0.1) == pytest.approx(math.log(2) / -math.log(0.9))


def test_runner_rejects_unknown_keys(tmp_path):
    with pytest.raises(chanent.ConfigError):
        chanent.run_config(json.dumps({"kind": "clifford1d", "bogus": 1}))
    report = chanent.run_config(json.dumps({"kind": "toy", "t_max": 4, "output": str(tmp_path / "toy")}))
    assert "toy.csv" in report["files"]
