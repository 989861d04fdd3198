import numpy as np
import pytest

from driftscan.synth import (
    NEW_CATEGORY,
    DriftScenario,
    DriftSpec,
    build_schema,
    generate,
)


def test_schema_layout():
    schema = build_schema(DriftScenario(numeric_features=12, categorical_features=8))
    assert len(schema.features) == 20
    engineered = [f.name for f in schema.features if f.attributes["origin"] == "engineered"]
    assert engineered == ["eng_00", "eng_01"]
    assert set(schema.lineage) == {
        ("num_00", "eng_00"),
        ("num_01", "eng_00"),
        ("num_02", "eng_01"),
        ("num_03", "eng_01"),
    }


def test_generate_deterministic(small_scenario):
    a_ref, a_eval, _ = generate(small_scenario)
    b_ref, b_eval, _ = generate(small_scenario)
    assert a_ref.df.equals(b_ref.df)
    assert a_eval.df.equals(b_eval.df)


def test_periods_are_contiguous(small_data, small_scenario):
    reference, evaluation, _ = small_data
    ref_last = reference.timestamps.iloc[-1]
    eval_first = evaluation.timestamps.iloc[0]
    assert eval_first > ref_last
    assert (eval_first - reference.timestamps.iloc[0]).days == small_scenario.days


def test_engineered_is_sum_of_parents(small_data):
    _, evaluation, schema = small_data
    parents = [p for p, c in schema.lineage if c == "eng_00"]
    expected = sum(evaluation.df[p] for p in parents)
    assert np.allclose(evaluation.df["eng_00"], expected)


def test_sudden_shift_moves_mean():
    sc = DriftScenario(
        numeric_features=3,
        categorical_features=0,
        days=10,
        rows_per_day=200,
        seed=2,
        drifts=(DriftSpec("num_01", 5, "sudden_shift", 4.0),),
    )
    _, evaluation, _ = generate(sc)
    day = (evaluation.timestamps - evaluation.timestamps.iloc[0]).dt.days
    before = evaluation.df.loc[day < 5, "num_01"].mean()
    after = evaluation.df.loc[day >= 5, "num_01"].mean()
    assert after - before > 3.5


def test_nan_spike_fraction():
    sc = DriftScenario(
        numeric_features=3,
        categorical_features=0,
        days=10,
        rows_per_day=500,
        seed=2,
        drifts=(DriftSpec("num_00", 5, "nan_spike", 0.3),),
    )
    _, evaluation, _ = generate(sc)
    day = (evaluation.timestamps - evaluation.timestamps.iloc[0]).dt.days
    frac = evaluation.df.loc[day >= 5, "num_00"].isna().mean()
    assert frac == pytest.approx(0.3, abs=0.05)
    assert evaluation.df.loc[day < 5, "num_00"].notna().all()


def test_new_category_appears_after_onset():
    sc = DriftScenario(
        numeric_features=0,
        categorical_features=2,
        days=10,
        rows_per_day=500,
        seed=2,
        drifts=(DriftSpec("cat_00", 5, "new_category", 0.3),),
    )
    reference, evaluation, _ = generate(sc)
    assert NEW_CATEGORY not in set(reference.df["cat_00"])
    day = (evaluation.timestamps - evaluation.timestamps.iloc[0]).dt.days
    frac = (evaluation.df.loc[day >= 5, "cat_00"] == NEW_CATEGORY).mean()
    assert frac == pytest.approx(0.3, abs=0.05)


def test_gradual_shift_ramps():
    sc = DriftScenario(
        numeric_features=3,
        categorical_features=0,
        days=20,
        rows_per_day=300,
        seed=4,
        drifts=(DriftSpec("num_01", 10, "gradual_shift", 3.0),),
    )
    _, evaluation, _ = generate(sc)
    day = (evaluation.timestamps - evaluation.timestamps.iloc[0]).dt.days
    means = evaluation.df.groupby(day)["num_01"].mean()
    assert abs(means.loc[10]) < 0.5  # ramp starts at zero
    assert means.loc[19] > 2.5
    assert (means.diff().loc[11:] > -0.5).all()


@pytest.mark.parametrize(
    "drift",
    [
        DriftSpec("nope", 1, "sudden_shift", 1.0),
        DriftSpec("num_00", 99, "sudden_shift", 1.0),
        DriftSpec("num_00", 1, "sudden_shift", -1.0),
        DriftSpec("num_00", 1, "weird", 1.0),
        DriftSpec("num_00", 1, "new_category", 0.5),
        DriftSpec("cat_00", 1, "sudden_shift", 1.0),
        DriftSpec("eng_00", 1, "sudden_shift", 1.0),
    ],
)
def test_invalid_drift_specs_rejected(drift):
    sc = DriftScenario(
        numeric_features=6, categorical_features=1, days=10, rows_per_day=10, drifts=(drift,)
    )
    with pytest.raises((ValueError, KeyError)):
        generate(sc)


def test_scenario_dict_roundtrip(small_scenario):
    assert DriftScenario.from_dict(small_scenario.to_dict()) == small_scenario
