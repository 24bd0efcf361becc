from typing import Any

import msgpack


def extended_encoder(obj):
    # Sets have no msgpack type; a sorted list keeps the encoding canonical.
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)

    raise TypeError(f"{type(obj)} cannot be part of a search state")


class StateSerializerException(Exception):
    ...


class StateSerializer:
    """
    Encodes search states into bytes so that equal states get equal keys.

    States are built from ints, bools, None, tuples, lists and sets. Tuples come
    back as lists after a round trip, which is all the merge tables need.
    """

    def encode_state(self, state: Any) -> bytes:
        is_compatible_type = isinstance(
            state, (tuple, list, int, bool, frozenset, set, type(None))
        )
        if not is_compatible_type:
            msg = f"{type(state)} is not a supported search state type"
            raise StateSerializerException(msg)

        try:
            return msgpack.packb(state, default=extended_encoder)
        except (TypeError, ValueError, OverflowError) as e:
            raise StateSerializerException(f"Unable to encode {state!r}: {e}") from e

    def decode_state(self, data: bytes) -> Any:
        return msgpack.unpackb(data, raw=False)
