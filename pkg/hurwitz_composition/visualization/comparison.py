import logging
from typing import Dict, List, Optional

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.figure import Figure

from hurwitz_composition.composition.config import CompositionConfig, resolve_config
from hurwitz_composition.composition.constructions import doubling_ladder, extended_double
from hurwitz_composition.composition.generators import classical
from hurwitz_composition.composition.rho import rho
from hurwitz_composition.composition.system import HurwitzSystem
from hurwitz_composition.errors import DomainError, SizeCapExceeded

logger = logging.getLogger(__name__)

# classical(8) is the starting point of both series
_BASE_EXPONENT = 3


class SizeComparisonGraph:
    """Compare how many squares each route reaches at ``n = 2^m``.

    Three series over ``m = 3 .. max_exponent``:

    - ``doubling``  – repeated doubling from ``[8, 8, 8]``
    - ``extended``  – ``extended_double(classical(8), m - 3)``
    - ``rho``       – the Hurwitz-Radon bound ``rho(2^m)``

    The first two are read off systems that are actually built, so the
    exponent is limited by the configured size cap.

    Example::

        from hurwitz_composition.visualization import SizeComparisonGraph

        SizeComparisonGraph(8).line(show=True)
    """

    def __init__(self, max_exponent: int, config: Optional[CompositionConfig] = None):
        if max_exponent < _BASE_EXPONENT:
            raise DomainError(f"max_exponent must be at least {_BASE_EXPONENT}, got {max_exponent}")
        self.max_exponent = max_exponent
        self.config = resolve_config(config)

    def series(self) -> Dict[str, List[int]]:
        """``r`` per exponent for each route, plus the exponents themselves."""
        base = classical(8)
        steps = self.max_exponent - _BASE_EXPONENT

        try:
            ladder = [base] + doubling_ladder(base, steps, config=self.config)
            extended = [base] + [extended_double(base, k, config=self.config) for k in range(1, steps + 1)]
        except SizeCapExceeded:
            logger.error("Exponent %d is above the size cap %d", self.max_exponent, self.config.size_cap)
            raise

        exponents = list(range(_BASE_EXPONENT, self.max_exponent + 1))
        return {
            "exponent": exponents,
            "doubling": [system.r for system in ladder],
            "extended": [system.r for system in extended],
            "rho": [rho(1 << m) for m in exponents],
        }

    def line(self, show: bool = False) -> Figure:
        """Line chart of ``r`` against ``m`` for every route."""
        data = self.series()
        fig, ax = plt.subplots(figsize=(8, 5))
        for name, marker in (("doubling", "o"), ("extended", "s"), ("rho", "x")):
            ax.plot(data["exponent"], data[name], marker=marker, label=name)

        ax.set_xlabel("m  (n = 2^m)")
        ax.set_ylabel("r")
        ax.set_title("Squares reached per construction")
        ax.set_xticks(data["exponent"])
        ax.legend(fontsize="small")
        fig.tight_layout()
        if show:
            plt.show()
        return fig


class SystemHeatmap:
    """Sign pattern of every matrix of a system, one panel per matrix.

    Example::

        SystemHeatmap(classical(8)).heatmap(show=True)
    """

    def __init__(self, system: HurwitzSystem):
        self.system = system

    def heatmap(self, show: bool = False, columns: int = 4) -> Figure:
        """Draw ``A_1 .. A_r`` with -1, 0, 1 as three colours.

        Args:
            show: Call ``plt.show()`` before returning.
            columns: Panels per row.
        """
        count = len(self.system)
        columns = max(1, min(columns, count))
        rows = (count + columns - 1) // columns
        fig, axes = plt.subplots(rows, columns, figsize=(3 * columns, 3 * rows), squeeze=False)

        image = None
        for index, ax in enumerate(axes.flat):
            if index >= count:
                ax.axis("off")
                continue
            data = np.clip(self.system.matrices[index].entries, -1, 1)
            image = ax.imshow(data, cmap="bwr", vmin=-1, vmax=1, interpolation="nearest")
            ax.set_title(f"A{index + 1}", fontsize=9)
            ax.set_xticks([])
            ax.set_yticks([])

        fig.suptitle(f"Hurwitz system {self.system.size}")
        if image is not None:
            fig.colorbar(image, ax=axes.ravel().tolist(), ticks=[-1, 0, 1])
        if show:
            plt.show()
        return fig
