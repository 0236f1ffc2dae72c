"""Multi-component lifted MRD codes over finite fields."""

from .errors import LiftMrdError
from .galois import FieldElement, FieldSpec, field_create, field_of_size
from .kernels import BACKEND_NAME

__all__ = ["BACKEND_NAME", "FieldElement", "FieldSpec", "LiftMrdError", "field_create", "field_of_size"]
__version__ = "0.1.0"
