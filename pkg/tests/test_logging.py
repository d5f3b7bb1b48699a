"""Test structured logging"""
import json
import logging

from dcsparse.config import DcSparseSettings
from dcsparse.logging import (
    JSONFormatter,
    ReplicateLoggerAdapter,
    get_logger,
    setup_logging,
    setup_logging_from_settings,
)


def make_record(**extra):
    record = logging.LogRecord("dcsparse.solver", logging.WARNING, __file__, 10, "Fit hit the cap", None, None)
    for key, value in extra.items():
        setattr(record, key, value)
    return record


def test_json_formatter_fields():
    payload = json.loads(JSONFormatter().format(make_record()))
    assert payload["level"] == "WARNING"
    assert payload["logger"] == "dcsparse.solver"
    assert payload["message"] == "Fit hit the cap"
    assert "replicate" not in payload


def test_json_formatter_includes_replicate_and_extra_data():
    record = make_record(replicate=3, seed=42, extra_data={"outer_iters": 100})
    payload = json.loads(JSONFormatter().format(record))
    assert payload["replicate"] == 3
    assert payload["seed"] == 42
    assert payload["outer_iters"] == 100


def test_replicate_adapter_adds_context(caplog):
    adapter = ReplicateLoggerAdapter(get_logger("dcsparse.test"), {"replicate": 5, "seed": 9})
    with caplog.at_level(logging.INFO):
        adapter.info("Replicate finished")
    record = caplog.records[-1]
    assert record.replicate == 5
    assert record.seed == 9


def test_file_logging_writes_json(tmp_path):
    log_file = tmp_path / "logs" / "dcsparse.log"
    setup_logging(log_level="INFO", log_to_file=True, log_file_path=str(log_file))
    get_logger("dcsparse.test").info("Fit finished", extra={"extra_data": {"nonzeros": 4}})

    lines = log_file.read_text().splitlines()
    payload = json.loads(lines[-1])
    assert payload["message"] == "Fit finished"
    assert payload["nonzeros"] == 4


def test_logging_can_be_disabled(tmp_path):
    log_file = tmp_path / "disabled.log"
    setup_logging(logging_enabled=False, log_to_file=True, log_file_path=str(log_file))
    get_logger("dcsparse.test").critical("dropped")
    assert not log_file.exists()


def test_setup_from_settings():
    settings = DcSparseSettings(_env_file=None, LOG_LEVEL="ERROR", DEBUG=True)
    setup_logging_from_settings(settings)
    root = logging.getLogger()
    assert root.level == logging.ERROR
    assert len(root.handlers) == 1
