"""
Audit logging for SpectralBounds.
Records command outcomes (reports, verification sweeps, golden checks) to an append-only log file.
"""

import logging

from config.settings import LOG_DIR

# Set up file-based audit logger (append-only)
audit_file_logger = logging.getLogger("audit")
audit_file_logger.setLevel(logging.INFO)
audit_file_logger.propagate = False
if not audit_file_logger.handlers:
    _handler = logging.FileHandler(LOG_DIR / "audit.log", encoding="utf-8")
    _handler.setFormatter(logging.Formatter("%(asctime)s | %(message)s"))
    audit_file_logger.addHandler(_handler)

SEVERITIES = ("info", "warning", "error")


def log_action(
    module: str,
    action: str,
    detail: dict = None,
    severity: str = "info",
):
    """
    Record an audit event to the audit log file.

    Args:
        module: Which module performed the action (e.g., "harness", "oracle")
        action: What happened (e.g., "report_written", "verify_violation")
        detail: Additional context as a dict
        severity: "info", "warning", or "error"
    """
    if severity not in SEVERITIES:
        raise ValueError(f"Unknown audit severity: {severity}")

    msg = f"[{severity.upper()}] [{module}] {action}"
    if detail:
        msg += f" | {detail}"
    if severity == "error":
        audit_file_logger.error(msg)
    elif severity == "warning":
        audit_file_logger.warning(msg)
    else:
        audit_file_logger.info(msg)
