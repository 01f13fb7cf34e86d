import pytest

from mapoly.preferences import Preferences, PREFS_MAX_DEGREE_DEFAULT, PREFS_TRIALS_DEFAULT


def test_defaults():
    prefs = Preferences.load()
    assert prefs.max_degree == PREFS_MAX_DEGREE_DEFAULT == 4
    assert prefs.trials == PREFS_TRIALS_DEFAULT == 20
    assert prefs.seed == 1
    assert prefs.symbolic_max_dim == 3
    assert prefs.box == 4
    assert prefs.simplex_max_degree(3) == 8


def test_load(tmp_path):
    path = tmp_path / 'mapoly.ini'
    path.write_text('[obstruct]\nmax_degree = 6\n\n[verify]\ntrials = 40\nseed = 0\n', encoding='utf-8')
    prefs = Preferences.load(path)
    assert prefs.max_degree == 6
    assert prefs.trials == 40
    assert prefs.seed == 0
    assert prefs.box == 4


def test_invalid_values_are_ignored(tmp_path, caplog):
    path = tmp_path / 'mapoly.ini'
    path.write_text('[obstruct]\nmax_degree = many\n\n[verify]\ntrials = 0\n', encoding='utf-8')
    prefs = Preferences.load(path)
    assert prefs.max_degree == 4
    assert prefs.trials == 20
    assert 'not an integer' in caplog.text
    assert 'below 1' in caplog.text


def test_missing_file(tmp_path):
    with pytest.raises(ValueError):
        Preferences.load(tmp_path / 'missing.ini')


def test_save_and_load(tmp_path):
    prefs = Preferences()
    prefs.max_degree = 5
    prefs.box = 3
    path = prefs.save(tmp_path / 'saved.ini')
    again = Preferences.load(path)
    assert str(again) == str(prefs)
