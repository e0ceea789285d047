"""
PyPhishKey
"""
import numpy as np


class Activation:
    """
    Numerically stable activation and loss functions.
    """

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def sigmoid(z: np.ndarray) -> np.ndarray:
        """
        Returns the logistic sigmoid of z. sigmoid(0) is exactly 0.5.

        :param numpy.ndarray z: The input.

        :rtype: numpy.ndarray
        """
        z = np.asarray(z, dtype=np.float64)
        out = np.empty_like(z)
        positive = z >= 0.0
        out[positive] = 1.0 / (1.0 + np.exp(-z[positive]))
        exp_z = np.exp(z[~positive])
        out[~positive] = exp_z / (1.0 + exp_z)

        return out

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def relu(z: np.ndarray) -> np.ndarray:
        """
        Returns the rectified linear unit of z.

        :param numpy.ndarray z: The input.

        :rtype: numpy.ndarray
        """
        return np.maximum(z, 0.0)

    # ------------------------------------------------------------------------------------------------------------------
    @staticmethod
    def log_loss(z: np.ndarray, y: np.ndarray) -> float:
        """
        Returns the mean binary cross entropy of logits z against labels y in {0, 1}.

        :param numpy.ndarray z: The logits.
        :param numpy.ndarray y: The labels.

        :rtype: float
        """
        z = np.asarray(z, dtype=np.float64)

        return float(np.mean(np.logaddexp(0.0, z) - y * z))

# ----------------------------------------------------------------------------------------------------------------------
