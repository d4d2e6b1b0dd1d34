#!/usr/bin/env python3

"""
Exhaustive search of the largest number of 2-cycles ``eta_n`` over every
symmetric system ``[K_n, g, id]``.

Truth tables are scanned as integers ``0 .. 2^(2^n) - 1`` in chunks; inside a
chunk every table is simulated at once with numpy, only from the states whose
first coordinate is 0 (each 2-cycle of such a system is ``{x, inv(x)}``).
Chunks reduce with ``(largest count, smallest table)``, which does not depend
on the order in which they are evaluated.
"""

import os
import json
import time
import logging
import itertools
from collections import deque
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from ..errors import BudgetExceeded, DimensionError
from ..utils import setting, natural_delta
from .prescription import SymmetricUpdateFunction

logger = logging.getLogger(__name__)


def _run_symmetric(n, tables, states):
    """Apply ``[K_n, g, id]`` to ``states`` for every table ``g`` at once."""
    for i in range(1, n + 1):
        shift = np.uint64(n - i)
        bits = (tables >> states) & np.uint64(1)
        states = (states & ~(np.uint64(1) << shift)) | (bits << shift)
    return states


def chunk_two_cycles(n, lo, hi):
    """Number of 2-cycles of ``[K_n, g, id]`` for every table ``lo <= g < hi``."""
    tables = np.arange(lo, hi, dtype=np.uint64)
    full = (1 << n) - 1
    counts = np.zeros(tables.size, dtype=np.int64)
    for x in range(1 << (n - 1)):
        start = np.full(tables.size, x, dtype=np.uint64)
        image = _run_symmetric(n, tables, start)
        hit = image == np.uint64(x ^ full)
        back = _run_symmetric(n, tables, image)
        counts += hit & (back == np.uint64(x))
    return counts


def _chunk_best(n, lo, hi):
    counts = chunk_two_cycles(n, lo, hi)
    k = int(np.argmax(counts))
    return int(counts[k]), lo + k, hi


def _parallel_results(n, bounds, workers):
    """Yield chunk results in order, with at most ``2 * workers`` chunks in flight.

    Closing the generator cancels the chunks not yet started.
    """
    pool = ProcessPoolExecutor(max_workers=workers)
    todo = iter(bounds)
    pending = deque(pool.submit(_chunk_best, n, lo, hi)
                    for lo, hi in itertools.islice(todo, 2 * workers))
    try:
        while pending:
            result = pending.popleft().result()
            for lo, hi in itertools.islice(todo, 1):
                pending.append(pool.submit(_chunk_best, n, lo, hi))
            yield result
    finally:
        pool.shutdown(wait=True, cancel_futures=True)


def _better(a, b):
    """Reduce two ``(eta, table)`` pairs: larger eta, then smaller table."""
    if b[0] > a[0] or (b[0] == a[0] and b[1] < a[1]):
        return b
    return a


def _load_checkpoint(path, n):
    if not path or not os.path.isfile(path):
        return None
    with open(path, "r") as fp:
        state = json.load(fp)
    if state.get("n") != n:
        logger.warning("checkpoint '%s' is for n=%s, ignored", path, state.get("n"))
        return None
    return state


def _save_checkpoint(path, n, next_table, best):
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fp:
        json.dump({"n": n, "next": next_table, "eta": best[0], "table": best[1]}, fp)
    os.replace(tmp, path)


def brute_force_eta(n, force=False, start=0, stop=None, workers=1, checkpoint=None,
                    chunk_size=None, max_seconds=0):
    """Largest number of 2-cycles of ``[K_n, g, id]`` over all ``g``.

    Args:
        n           (int): number of vertices.
        force       (bool): allow ``n`` up to ``oracle.forced_max_n``.
        start       (int): first table to scan.
        stop        (int, optional): scan tables below ``stop`` only.
        workers     (int): processes evaluating chunks in parallel.
        checkpoint  (str, optional): JSON file recording the progress after
            each chunk; an existing file for the same ``n`` is resumed.
        chunk_size  (int, optional): tables per chunk, ``oracle.chunk_size``
            setting by default.
        max_seconds (float): time budget, 0 means unlimited.

    Returns:
        :obj:`tuple`: ``(eta, witness)`` where the witness is the smallest
        maximizing table as a ``SymmetricUpdateFunction``.

    Raises:
        BudgetExceeded: ``n`` above the cap or time budget exhausted; the
            ``resume`` attribute holds the next table and the best so far.
    """
    max_n = int(setting("oracle.max_n", 4))
    forced_max_n = int(setting("oracle.forced_max_n", 5))
    if n < 1:
        raise DimensionError(f"brute force needs n >= 1, got {n}")
    if n > (forced_max_n if force else max_n):
        raise BudgetExceeded(f"brute force over 2^(2^{n}) functions exceeds the cap "
                             f"n <= {max_n} (n <= {forced_max_n} when forced)")
    chunk_size = int(chunk_size or setting("oracle.chunk_size", 65536))
    total = 1 << (1 << n)
    stop = total if stop is None else min(stop, total)
    best = (-1, 0)
    resumed = _load_checkpoint(checkpoint, n)
    if resumed:
        start = max(start, resumed["next"])
        best = (resumed["eta"], resumed["table"])
        logger.info("resuming brute force n=%d at table %d (eta so far %d)", n, start, best[0])
    bounds = [(lo, min(lo + chunk_size, stop)) for lo in range(start, stop, chunk_size)]
    begin = time.time()

    def consume(results):
        nonlocal best
        for done, (eta, table, hi) in enumerate(results, start=1):
            best = _better(best, (eta, table))
            if checkpoint:
                _save_checkpoint(checkpoint, n, hi, best)
            elapsed = time.time() - begin
            if done % 64 == 0 or hi == stop:
                logger.info("brute force n=%d: %d/%d chunks, eta >= %d, elapsed %s",
                            n, done, len(bounds), best[0], natural_delta(elapsed))
            if max_seconds and elapsed >= max_seconds and hi < stop:
                raise BudgetExceeded(
                    f"brute force n={n} stopped at table {hi} after {natural_delta(elapsed)}",
                    resume={"next": hi, "eta": best[0], "table": best[1]})

    if workers > 1 and len(bounds) > 1:
        results = _parallel_results(n, bounds, workers)
        try:
            consume(results)
        finally:
            results.close()
    else:
        consume(_chunk_best(n, lo, hi) for lo, hi in bounds)
    if best[0] < 0:
        raise DimensionError(f"empty table range [{start}, {stop})")
    logger.info("eta_%d = %d, witness table %d, found in %s",
                n, best[0], best[1], natural_delta(time.time() - begin))
    return best[0], SymmetricUpdateFunction(n, best[1])
