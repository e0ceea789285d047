"""
PyPhishKey
"""
from typing import Tuple

import numpy as np

from pyphishkey.classifier.RbfKernel import RbfKernel


class SmoSolver:
    """
    Solves the dual of the soft margin SVM

        min 1/2 a'Qa - e'a  subject to  0 <= a_i <= C, y'a = 0,  with Q_ij = y_i y_j K_ij,

    by sequential minimal optimization with second order working set selection, as libsvm does. Iteration stops when the
    maximal violation m(a) - M(a) drops below tol, or after max_iter iterations.
    """
    TAU = 1e-12

    # ------------------------------------------------------------------------------------------------------------------
    def __init__(self, kernel: RbfKernel, y: np.ndarray, c: float, tol: float = 1e-3, max_iter: int = 1000000):
        """
        Object constructor.

        :param RbfKernel kernel: The kernel over the training rows.
        :param numpy.ndarray y: The labels, +1 or -1.
        :param float c: The box constraint.
        :param float tol: The stopping tolerance.
        :param int max_iter: The maximum number of iterations.
        """
        self.__kernel: RbfKernel = kernel
        self.__y: np.ndarray = np.asarray(y, dtype=np.float64)
        self.__c: float = float(c)
        self.__tol: float = float(tol)
        self.__max_iter: int = max_iter

        self.iterations: int = 0
        """
        The number of iterations of the last solve.
        """

        self.converged: bool = False
        """
        Whether the last solve met the stopping tolerance.
        """

    # ------------------------------------------------------------------------------------------------------------------
    def solve(self) -> Tuple[np.ndarray, float]:
        """
        Returns the optimal multipliers and the offset rho (the decision function is sum_i a_i y_i K(x_i, x) - rho).

        :rtype: (numpy.ndarray,float)
        """
        y = self.__y
        c = self.__c
        alpha = np.zeros(y.size, dtype=np.float64)
        gradient = -np.ones(y.size, dtype=np.float64)

        self.iterations = 0
        self.converged = False
        while self.iterations < self.__max_iter:
            selected = self.__select_working_set(alpha, gradient)
            if selected is None:
                self.converged = True
                break
            i, j = selected
            self.iterations += 1

            k_i = self.__kernel.row(i)
            k_j = self.__kernel.row(j)
            old_i = alpha[i]
            old_j = alpha[j]
            quad = max(k_i[i] + k_j[j] - 2.0 * k_i[j], SmoSolver.TAU)

            if y[i] != y[j]:
                delta = (-gradient[i] - gradient[j]) / quad
                diff = alpha[i] - alpha[j]
                alpha[i] += delta
                alpha[j] += delta
                if diff > 0.0:
                    if alpha[j] < 0.0:
                        alpha[j] = 0.0
                        alpha[i] = diff
                elif alpha[i] < 0.0:
                    alpha[i] = 0.0
                    alpha[j] = -diff
                if diff > 0.0:
                    if alpha[i] > c:
                        alpha[i] = c
                        alpha[j] = c - diff
                elif alpha[j] > c:
                    alpha[j] = c
                    alpha[i] = c + diff
            else:
                delta = (gradient[i] - gradient[j]) / quad
                total = alpha[i] + alpha[j]
                alpha[i] -= delta
                alpha[j] += delta
                if total > c:
                    if alpha[i] > c:
                        alpha[i] = c
                        alpha[j] = total - c
                elif alpha[j] < 0.0:
                    alpha[j] = 0.0
                    alpha[i] = total
                if total > c:
                    if alpha[j] > c:
                        alpha[j] = c
                        alpha[i] = total - c
                elif alpha[i] < 0.0:
                    alpha[i] = 0.0
                    alpha[j] = total

            # G += Q_i (a_i - old a_i) + Q_j (a_j - old a_j)
            gradient += y * (y[i] * (alpha[i] - old_i) * k_i + y[j] * (alpha[j] - old_j) * k_j)

        return alpha, self.__rho(alpha, gradient)

    # ------------------------------------------------------------------------------------------------------------------
    def __masks(self, alpha: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """
        Returns the masks of the index sets I_up and I_low.

        :param numpy.ndarray alpha: The multipliers.

        :rtype: (numpy.ndarray,numpy.ndarray)
        """
        positive = self.__y > 0.0
        below_c = alpha < self.__c
        above_0 = alpha > 0.0
        up = (positive & below_c) | (~positive & above_0)
        low = (positive & above_0) | (~positive & below_c)

        return up, low

    # ------------------------------------------------------------------------------------------------------------------
    def __select_working_set(self, alpha: np.ndarray, gradient: np.ndarray):
        """
        Returns the working pair (i, j), or None when the maximal violation is below the tolerance.

        :param numpy.ndarray alpha: The multipliers.
        :param numpy.ndarray gradient: The gradient of the dual objective.
        """
        y = self.__y
        up, low = self.__masks(alpha)
        if not up.any() or not low.any():
            return None

        score = -y * gradient
        up_score = np.where(up, score, -np.inf)
        i = int(np.argmax(up_score))
        g_max = up_score[i]
        g_min = float(np.min(score[low]))
        if g_max - g_min < self.__tol:
            return None

        k_i = self.__kernel.row(i)
        grad_diff = g_max - score
        quad = np.maximum(k_i[i] + 1.0 - 2.0 * k_i, SmoSolver.TAU)
        candidates = low & (grad_diff > 0.0)
        if not candidates.any():
            return None
        objective = np.where(candidates, -(grad_diff * grad_diff) / quad, np.inf)

        return i, int(np.argmin(objective))

    # ------------------------------------------------------------------------------------------------------------------
    def __rho(self, alpha: np.ndarray, gradient: np.ndarray) -> float:
        """
        Returns the offset rho: the mean of y_i G_i over free multipliers, or the midpoint of the feasible interval when
        no multiplier is free.

        :param numpy.ndarray alpha: The multipliers.
        :param numpy.ndarray gradient: The gradient of the dual objective.

        :rtype: float
        """
        y = self.__y
        y_gradient = y * gradient
        free = (alpha > 0.0) & (alpha < self.__c)
        if free.any():
            return float(y_gradient[free].mean())

        at_upper = alpha >= self.__c
        positive = y > 0.0
        upper_bound_set = (at_upper & ~positive) | (~at_upper & positive)
        lower_bound_set = (at_upper & positive) | (~at_upper & ~positive)
        upper = float(y_gradient[upper_bound_set].min()) if upper_bound_set.any() else np.inf
        lower = float(y_gradient[lower_bound_set].max()) if lower_bound_set.any() else -np.inf
        if not np.isfinite(upper):
            return lower
        if not np.isfinite(lower):
            return upper

        return (upper + lower) / 2.0

# ----------------------------------------------------------------------------------------------------------------------
