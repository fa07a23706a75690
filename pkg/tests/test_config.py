from pathlib import Path

from tropdelpezzo.config import DEFAULT_ORBIT_CAP, load_settings


def test_defaults(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    for name in ("TROPDELPEZZO_CACHE_DIR", "TROPDELPEZZO_ORBIT_CAP", "TROPDELPEZZO_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    settings = load_settings()
    assert settings.orbit_cap == DEFAULT_ORBIT_CAP
    assert settings.log_level == "WARNING"
    assert settings.cache_dir == Path.home() / ".cache" / "tropdelpezzo"


def test_environment_overrides(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("TROPDELPEZZO_CACHE_DIR", str(tmp_path / "cache"))
    monkeypatch.setenv("TROPDELPEZZO_ORBIT_CAP", "12")
    monkeypatch.setenv("TROPDELPEZZO_LOG_LEVEL", "debug")
    settings = load_settings()
    assert settings.cache_dir == tmp_path / "cache"
    assert settings.orbit_cap == 12
    assert settings.log_level == "DEBUG"
