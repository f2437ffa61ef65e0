import logging
from multiprocessing import Pool
from typing import Callable, Iterable, Sequence

from tqdm import tqdm

from ..config import Config

logger = logging.getLogger(__name__)


def run_tasks(func: Callable, tasks: Iterable, workers: int = 1, initializer: Callable = None,
              initargs: tuple = (), desc: str = None) -> list:
    """
    Run func over tasks and return the results in task order.

    With workers > 1 the tasks go to a process pool whose workers are set up by
    initializer(*initargs); otherwise everything runs in this process after
    calling the initializer once. Either way the result list is ordered by task,
    so reductions over it do not depend on scheduling.
    """
    tasks = list(tasks)
    show = Config.SHOW_PROGRESS and desc is not None
    if workers <= 1 or len(tasks) <= 1:
        if initializer is not None:
            initializer(*initargs)
        return [func(task) for task in tqdm(tasks, desc=desc, disable=not show, leave=False)]

    logger.debug(f"Dispatching {len(tasks)} tasks to {workers} workers")
    with Pool(processes=workers, initializer=initializer, initargs=initargs) as pool:
        return list(tqdm(pool.imap(func, tasks, chunksize=1), total=len(tasks),
                         desc=desc, disable=not show, leave=False))


def sum_vectors(vectors: Iterable[Sequence[int]], size: int) -> list:
    total = [0] * size
    for vec in vectors:
        for i, value in enumerate(vec):
            total[i] += value
    return total
