from .field import FieldSpec, FieldElement, field_build
from .linear_code import LinearCode
from .elliptic import WeierstrassCurve, Affine, INFINITY
from .agcode import OnePointDivisor, ProjectiveLine, EvalConfig

__all__ = [
    'FieldSpec',
    'FieldElement',
    'field_build',
    'LinearCode',
    'WeierstrassCurve',
    'Affine',
    'INFINITY',
    'OnePointDivisor',
    'ProjectiveLine',
    'EvalConfig'
]
