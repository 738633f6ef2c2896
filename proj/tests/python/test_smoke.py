import math

import contra


def test_life_blinker_and_glider():
    assert contra.life_step([(0, 1), (1, 1), (2, 1)]) == [(1, 0), (1, 1), (1, 2)]
    glider = contra.parse_pattern(".O.\n..O\nOOO")
    after = contra.run(glider, 4)[-1]
    assert sorted(after) == sorted((x + 1, y + 1) for x, y in glider)
    assert contra.write_pattern(glider) == ".O.\n..O\nOOO\n"


def test_glider_block_scene():
    scene = contra.glider_block_scene()
    assert len(scene) == 9
    pairs = contra.observe_glider_trace(scene, 19)
    assert all(e is not None for e, _ in pairs[:15])
    assert all(e is None for e, _ in pairs[15:])
    (episode,) = contra.extract_entities(pairs)
    assert episode["intelligence"] == 14
    assert episode["terminated"]


def test_contradiction_and_duality():
    assert contra.is_contradictory(0, ["A", "B", "A", "C"], ["X"] * 4) == (0, 2)
    assert contra.is_contradictory(0, ["A", "B", "A", "B"], ["X"] * 4, (None, "X")) == (1, 3)
    assert contra.is_deterministic_env(0, ["A"] * 4, ["X", "Y", "X", "Z"]) == (0, 2)
    dual = contra.dual_view(0, ["A"] * 4, ["X", "Y", "X", "Z"])
    assert contra.is_contradictory(0, dual["ent"], dual["env"]) == (0, 2)


def test_proposition():
    verdict = contra.check_proposition(0, ["A", "B"] * 4, ["X"] * 8, (None, "X"), ["A", "B"], ["X", "Y"])
    assert verdict["premises_hold"]
    assert verdict["contradictory"]
    assert not verdict["violation"]
    traces, hits, violations = contra.exhaustive_proposition_violations(1, 2, 8)
    assert traces == sum(4**k for k in range(1, 9))
    assert hits > 0
    assert violations == 0


def test_updown():
    assert contra.victories_dp("UD") == (2, 6)
    assert contra.victories_bruteforce("UU") == (1, 6)
    assert contra.max_victories(10) == ("UDUDUDUDU", 50521, 3628800)
    wins, total = contra.victories_dp("U" * 24)
    assert wins == 1 and total == math.factorial(25)


def test_experiments():
    p = contra.flip_probability_for_even_odds(20)
    assert abs(p - (1 - 2 ** (-1 / 20))) < 1e-12
    coop = contra.run_coop_experiment(p=p, reps=10)
    assert coop["contradictory_winner_percent"] >= 90
    assert contra.run_coop_experiment(p=p, reps=10) == coop
    market = contra.run_market_experiment(tests=20)
    assert market["count_a_gt_b"] + market["count_b_gt_a"] + market["count_tie"] == 20
    assert market["feasibility_violations"] == 0
    assert market["conservation_violations"] == 0
    assert contra.DEFAULT_SEED == 20260415
