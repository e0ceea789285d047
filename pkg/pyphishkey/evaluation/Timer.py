"""
PyPhishKey
"""
import time
from typing import Callable, Tuple, TypeVar

T = TypeVar('T')


class Timer:
    """
    Wall clock timing of actions with a monotonic clock.
    """

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def timed(action: Callable[[], T]) -> Tuple[T, float]:
        """
        Runs an action and returns its result and its duration in seconds. Errors of the action are propagated.

        :param callable action: The action.

        :rtype: (T,float)
        """
        start = time.perf_counter()
        result = action()
        duration = time.perf_counter() - start

        return result, max(duration, 0.0)

# ----------------------------------------------------------------------------------------------------------------------
