import os

DEFAULT_MAX_WORK = 10**9
MAX_WORK_ENV = "COINSTACK_MAX_WORK"


def max_work() -> int:
    """Work bound in elementary big-integer operations.

    Read on every call so the environment variable can be changed at runtime.
    """
    raw = os.environ.get(MAX_WORK_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_MAX_WORK
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_WORK_ENV} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{MAX_WORK_ENV} must be positive, got {value}")
    return value
