"""Isomorphism-class registry assigning ids in discovery order."""

import threading
from typing import Callable, Dict, Generic, Hashable, List, Optional, TypeVar
from weakref import WeakKeyDictionary


T = TypeVar("T")


class IsoRegistry(Generic[T]):
    """Single-writer store of class representatives, bucketed by an invariant."""

    def __init__(self, bucket_key: Callable[[T], Hashable], equivalent: Callable[[T, T], bool]) -> None:
        self._bucket_key = bucket_key
        self._equivalent = equivalent
        self._lock = threading.RLock()
        self._buckets: Dict[Hashable, List[int]] = {}
        self._representatives: List[T] = []

    def __len__(self) -> int:
        return len(self._representatives)

    def classify(self, item: T) -> int:
        key = self._bucket_key(item)
        with self._lock:
            bucket = self._buckets.setdefault(key, [])
            for class_id in bucket:
                if self._equivalent(item, self._representatives[class_id]):
                    return class_id
            class_id = len(self._representatives)
            self._representatives.append(item)
            bucket.append(class_id)
            return class_id

    def lookup(self, item: T) -> Optional[int]:
        key = self._bucket_key(item)
        with self._lock:
            for class_id in self._buckets.get(key, ()):
                if self._equivalent(item, self._representatives[class_id]):
                    return class_id
        return None

    def representative(self, class_id: int) -> T:
        return self._representatives[class_id]


_REGISTRIES: "WeakKeyDictionary[object, IsoRegistry]" = WeakKeyDictionary()
_REGISTRIES_LOCK = threading.Lock()


def registry_for(owner: object, bucket_key: Callable[[T], Hashable], equivalent: Callable[[T, T], bool]) -> IsoRegistry[T]:
    with _REGISTRIES_LOCK:
        registry = _REGISTRIES.get(owner)
        if registry is None:
            registry = IsoRegistry(bucket_key, equivalent)
            _REGISTRIES[owner] = registry
        return registry
