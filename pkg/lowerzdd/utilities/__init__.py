from .state_serializer import StateSerializer, StateSerializerException
from .union_find import UnionFind
