import os
from concurrent.futures import ThreadPoolExecutor


def thread_count():
    """Worker cap from ``ASSINF_THREADS`` (default 1, i.e. serial)."""
    raw = os.environ.get("ASSINF_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def ordered_map(fn, items):
    """``list(map(fn, items))``, spread over threads when allowed; order preserved."""
    items = list(items)
    workers = min(thread_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
