# app/infrastructure/workers.py
from multiprocessing.pool import Pool
from typing import Callable, Iterable, List, Optional, TypeVar

from app.logg import logger

T = TypeVar("T")
R = TypeVar("R")


class WorkerPool:
    """
    Context manager for the process pool that runs campaign work items.

    With one worker everything runs in-process, which keeps debugging and
    tests simple; results come back in submission order either way.

    Usage:
        with WorkerPool(4) as pool:
            results = pool.map(run_chunk, items)
    """

    def __init__(self, workers: int = 1):
        if workers < 1:
            raise ValueError("workers must be >= 1")
        self.workers = workers
        self.pool: Optional[Pool] = None

    def __enter__(self) -> "WorkerPool":
        """Enter the context - start worker processes if needed."""
        if self.workers > 1:
            logger.info(f"🔧 Starting {self.workers} worker processes...")
            try:
                self.pool = Pool(processes=self.workers)
            except Exception as e:
                logger.error(f"❌ Failed to start worker pool: {e}")
                raise
        return self

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
        items = list(items)
        if self.pool is None:
            return [fn(item) for item in items]
        return self.pool.map(fn, items)

    def __exit__(self, exc_type, exc_val, exc_tb):
        """Exit the context - stop the worker processes."""
        if self.pool is not None:
            try:
                if exc_type is None:
                    self.pool.close()
                else:
                    self.pool.terminate()
                self.pool.join()
                logger.info("✅ Worker pool closed")
            except Exception as e:
                logger.error(f"⚠️  Error closing worker pool: {e}")
            finally:
                self.pool = None

        # Don't suppress exceptions
        return False
