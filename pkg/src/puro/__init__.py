"""Pure O-sequences, monomial order ideals and monomial level algebras."""
from .macaulay import binom, expand, is_o_sequence, shift
from .monomials import OrderIdeal, closure, h_vector
from .purity import PurityVerdict, Status, decide_pure, enumerate_pure, is_pure
from .search import SearchBudget
from .sequences import shape

__all__ = [
    "OrderIdeal", "PurityVerdict", "SearchBudget", "Status", "binom", "closure", "decide_pure",
    "enumerate_pure", "expand", "h_vector", "is_o_sequence", "is_pure", "shape", "shift",
]
__version__ = "0.1.0"
