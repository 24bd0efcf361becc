from .base import BOTTOM, TOP, NodeBudgetExceeded, NodeRef, WidthProfile
from .tdd import SignedEdgeSet, TddStore, TddStoreException
from .zdd import ZddStore, ZddStoreException
