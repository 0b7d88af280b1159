# Copyright(C) 2024 Torus Cones Developers
# Licensed under the MIT License

from multiprocessing import Pool

from tqdm import tqdm

from torus_cones import parameters as _params
from torus_cones.logging import debug


def parallel_map(worker, tasks, parameters=None, desc=None) -> list:
    """Apply a top-level worker to each task, preserving task order.

    Uses a process pool when more than one worker is allowed; results are
    always assembled in the calling process.
    """
    tasks = list(tasks)
    workers = min(_params.worker_count(parameters), max(1, len(tasks)))
    debug(f"{desc or 'map'}: {len(tasks)} tasks on {workers} worker(s)")
    if workers == 1:
        return [worker(task) for task in tqdm(tasks, desc=desc, disable=None)]
    with Pool(processes=workers) as pool:
        return list(tqdm(pool.imap(worker, tasks), total=len(tasks), desc=desc, disable=None))
