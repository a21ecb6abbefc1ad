import pytest
from rich.logging import RichHandler

from monowidth.utils.custom_logging import FILE_FORMAT, log_handlers, log_level


class TestLogLevel:
    def test_follows_debug_flag(self, make_config):
        assert log_level(make_config("rankwidth")) == "INFO"
        assert log_level(make_config("rankwidth", debug=True)) == "DEBUG"

    def test_explicit_level_wins(self, make_config):
        assert log_level(make_config("rankwidth", debug=True, logging__level="warning")) == "WARNING"

    def test_unknown_level(self, make_config):
        with pytest.raises(ValueError):
            log_level(make_config("rankwidth", logging__level="loud"))


class TestLogHandlers:
    def test_stderr_and_file(self, make_config, tmp_path):
        log_file = str(tmp_path / "monowidth-rankwidth.log")
        handlers = log_handlers(make_config("rankwidth", logging__level="error"), log_file)
        assert len(handlers) == 2
        assert isinstance(handlers[0]["sink"], RichHandler)
        assert handlers[1] == {"sink": log_file, "format": FILE_FORMAT, "level": "ERROR"}

    def test_without_file(self, make_config):
        handlers = log_handlers(make_config("rankwidth", logging__file=False), None)
        assert [handler["level"] for handler in handlers] == ["INFO"]

    def test_default_mutes_pydot(self, make_config):
        assert list(make_config("rankwidth").logging.muted) == ["pydot"]
