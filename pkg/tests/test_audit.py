"""Tests for the audit log."""

from unittest.mock import patch

import pytest

from core.audit import log_action


class TestAudit:
    """log_action severity routing."""

    def test_error_routed(self):
        with patch("core.audit.audit_file_logger") as mock_logger:
            log_action("harness", "verify_violation", {"violations": 2}, severity="error")
        msg = mock_logger.error.call_args.args[0]
        assert msg.startswith("[ERROR] [harness] verify_violation")
        assert "'violations': 2" in msg

    def test_info_without_detail(self):
        with patch("core.audit.audit_file_logger") as mock_logger:
            log_action("oracle", "classify_completed")
        mock_logger.info.assert_called_once_with("[INFO] [oracle] classify_completed")

    def test_unknown_severity(self):
        with pytest.raises(ValueError):
            log_action("harness", "x", severity="critical")
