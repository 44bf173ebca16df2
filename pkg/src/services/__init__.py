from .coding_service import CodingService
from .bounds_service import BoundsService
from .curve_service import CurveService
from .modular_service import ModularService

__all__ = ['CodingService', 'BoundsService', 'CurveService', 'ModularService']
