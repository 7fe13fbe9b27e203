"""Continuous benchmark functions behind the discretized surrogates.

Functions accept a single point (shape ``(n,)``) or a batch of points
(shape ``(k, n)``) and reduce over the last axis.
"""

import numpy as np
import numpy.typing as npt

from ..exceptions import ObjectiveError

ArrayLike = npt.ArrayLike


def ackley(x: ArrayLike) -> float | npt.NDArray[np.float64]:
    """Ackley function, global minimum 0 at the origin.

    f(x) = -20 exp(-0.2 sqrt(mean(x^2))) - exp(mean(cos(2 pi x))) + 20 + e
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape[-1] < 1:
        raise ObjectiveError("ackley needs at least one variable")

    a, b, c = 20.0, 0.2, 2.0 * np.pi
    value = (
        -a * np.exp(-b * np.sqrt(np.mean(x**2, axis=-1)))
        - np.exp(np.mean(np.cos(c * x), axis=-1))
        + a
        + np.e
    )
    return float(value) if np.ndim(value) == 0 else value


def eggholder2(x: ArrayLike, y: ArrayLike) -> float | npt.NDArray[np.float64]:
    """Two-dimensional Eggholder function."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    shifted = y + 47.0
    value = -shifted * np.sin(np.sqrt(np.abs(x / 2.0 + shifted))) - x * np.sin(
        np.sqrt(np.abs(x - shifted))
    )
    return float(value) if np.ndim(value) == 0 else value


def eggholder_nd(x: ArrayLike) -> float | npt.NDArray[np.float64]:
    """Eggholder summed over consecutive coordinate pairs.

    Raises:
        ObjectiveError: If fewer than two coordinates are given
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape[-1] < 2:
        raise ObjectiveError(
            f"eggholder_nd needs at least 2 variables, got {x.shape[-1]}"
        )
    pairs = eggholder2(x[..., :-1], x[..., 1:])
    value = np.sum(pairs, axis=-1)
    return float(value) if np.ndim(value) == 0 else value
