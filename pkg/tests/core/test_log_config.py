"""Tests for loguru configuration and run binding."""

from contextvars import copy_context

from app.core.log_config import bind_run, configure_logging, get_logger, run_id_ctx
from loguru import logger


class TestLogConfig:
    """Test layer tags, run ids and sink routing."""

    def test_get_logger_binds_layer(self):
        """Test that records carry the layer tag."""
        records = []
        logger.add(lambda message: records.append(message.record["extra"]), level="DEBUG")
        get_logger("service.verify").debug("checked")
        assert records[0]["layer"] == "service.verify"

    def test_bind_run_sets_context(self):
        """Test that the run id lives in the current context only."""
        ctx = copy_context()
        ctx.run(bind_run, "abc123")
        assert ctx[run_id_ctx] == "abc123"
        assert run_id_ctx.get() == "no-run"

    def test_logs_go_to_stderr(self, capsys, monkeypatch):
        """Test that stdout stays free for reports."""
        monkeypatch.setenv("LOG_LEVEL", "INFO")
        monkeypatch.setenv("LOG_TO_FILE", "false")
        configure_logging()
        get_logger("test").info("visible on stderr")
        captured = capsys.readouterr()
        assert "visible on stderr" in captured.err
        assert captured.out == ""

    def test_level_override(self, capsys, monkeypatch):
        """Test that an explicit level beats LOG_LEVEL."""
        monkeypatch.setenv("LOG_LEVEL", "ERROR")
        monkeypatch.setenv("LOG_TO_FILE", "false")
        configure_logging(level="DEBUG")
        get_logger("test").debug("debug line")
        assert "debug line" in capsys.readouterr().err

    def test_module_logger_records_carry_run_id(self, monkeypatch):
        """Test that a logger bound before the run still reports the run id."""
        monkeypatch.setenv("LOG_TO_FILE", "false")
        configure_logging(level="DEBUG")
        service_logger = get_logger("service.verify")
        records = []
        logger.add(lambda message: records.append(message.record["extra"]["run_id"]), level="DEBUG")

        def run():
            bind_run("abc123")
            service_logger.warning("inside the run")

        copy_context().run(run)
        service_logger.warning("outside the run")
        assert records == ["abc123", "no-run"]
