import pytest

from gpends.config import Config


class TestConfig:

    def test_defaults_are_valid(self):
        assert Config.validate()

    def test_rejects_small_cap(self, monkeypatch):
        monkeypatch.setattr(Config, 'BALL_CAP', 0)
        with pytest.raises(ValueError, match='GPENDS_BALL_CAP'):
            Config.validate()

    def test_rejects_small_radius(self, monkeypatch):
        monkeypatch.setattr(Config, 'ORACLE_RMAX', 1)
        with pytest.raises(ValueError, match='GPENDS_ORACLE_RMAX'):
            Config.validate()

    def test_rejects_large_crosscheck_bound(self, monkeypatch):
        monkeypatch.setattr(Config, 'CROSSCHECK_MAX_VERTICES', 9)
        with pytest.raises(ValueError, match='GPENDS_CROSSCHECK_MAX_VERTICES'):
            Config.validate()

    def test_log_path(self, monkeypatch, tmp_path):
        monkeypatch.setattr(Config, 'LOG_FILE', '')
        assert Config.log_path() is None
        monkeypatch.setattr(Config, 'LOG_FILE', str(tmp_path / 'gp_ends.log'))
        assert Config.log_path() == tmp_path / 'gp_ends.log'
        assert Config.validate()

    def test_missing_log_directory(self, monkeypatch, tmp_path):
        monkeypatch.setattr(Config, 'LOG_FILE', str(tmp_path / 'missing' / 'gp_ends.log'))
        with pytest.raises(ValueError, match='Log directory'):
            Config.validate()

    def test_rejects_zero_separator_budget(self, monkeypatch):
        monkeypatch.setattr(Config, 'SEPARATOR_BUDGET', 0)
        with pytest.raises(ValueError, match='GPENDS_SEPARATOR_BUDGET'):
            Config.validate()

    def test_crosscheck_radii_defaults(self):
        assert Config.CROSSCHECK_RMAX >= 4
        assert Config.CROSSCHECK_MARGIN >= 3
