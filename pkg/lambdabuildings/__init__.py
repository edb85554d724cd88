__all__ = [
    '__author__', '__description__', '__license__', '__maintainer__',
    '__packagename__', '__version__',
    'PuiseuxElement', 'PDPoint', 'BuildingPoint', 'Trajectory'
]

from .info import (
    __author__,
    __description__,
    __license__,
    __maintainer__,
    __packagename__,
    __version__,
)

from .exact_fields import PuiseuxElement
from .symmetric_space import PDPoint
from .building import BuildingPoint
from .cone import Trajectory
