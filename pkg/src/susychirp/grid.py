"""Uniform evaluation grids."""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class Grid:
    """Uniform grid of `count` points on the closed interval [t_min, t_max]."""

    t_min: float
    t_max: float
    count: int

    def __post_init__(self):
        if not (self.t_min < self.t_max):
            raise DomainError("grid needs t_min < t_max, got [%g, %g]" % (self.t_min, self.t_max))
        if self.count < 3:
            raise DomainError("grid needs at least 3 points, got %d" % self.count)

    @property
    def h(self):
        return (self.t_max - self.t_min) / (self.count - 1)

    def points(self):
        return np.linspace(self.t_min, self.t_max, self.count)

    def interior(self):
        """Grid points with the two endpoints dropped."""
        return self.points()[1:-1]
