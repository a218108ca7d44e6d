"""Bound quiver presentations and paths."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from stable_tau.common import InputError
from stable_tau.config import DEFAULT_NILPOTENCY_BOUND


@dataclass(frozen=True)
class Arrow:
    label: str
    source: str
    target: str


@dataclass(frozen=True)
class Relation:
    # Each term is (coefficient, arrow labels in traversal order).
    terms: Tuple[Tuple[Fraction, Tuple[str, ...]], ...]


@dataclass(frozen=True, order=True)
class Path:
    """A path written by its source vertex index and arrow indices in traversal order."""

    source: int
    arrows: Tuple[int, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)


@dataclass(frozen=True)
class QuiverPresentation:
    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...] = ()
    relations: Tuple[Relation, ...] = ()
    nilpotency_bound: int = DEFAULT_NILPOTENCY_BOUND
    _arrow_index: Dict[str, int] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.vertices:
            raise InputError("A quiver needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("Vertex labels must be unique")
        labels = [arrow.label for arrow in self.arrows]
        if len(set(labels)) != len(labels):
            raise InputError("Arrow labels must be unique")
        if set(labels) & set(self.vertices):
            raise InputError("Arrow labels must differ from vertex labels")
        for arrow in self.arrows:
            if arrow.source not in self.vertices or arrow.target not in self.vertices:
                raise InputError(f"Arrow {arrow.label} has an unknown endpoint")
        if self.nilpotency_bound <= 0:
            raise InputError("nilpotency_bound must be greater than zero")
        self._arrow_index.update({label: index for index, label in enumerate(labels)})
        for relation in self.relations:
            self._check_relation(relation)

    def _check_relation(self, relation: Relation) -> None:
        if not relation.terms:
            raise InputError("A relation needs at least one term")
        endpoints = set()
        for _, labels in relation.terms:
            if len(labels) < 2:
                raise InputError(f"Relation term {'.'.join(labels) or '<empty>'} must have length at least 2")
            path = self.path_from_labels(labels)
            endpoints.add((path.source, self.target(path)))
        if len(endpoints) != 1:
            raise InputError("Relation terms must be parallel paths")

    def vertex_index(self, label: str) -> int:
        try:
            return self.vertices.index(label)
        except ValueError as error:
            raise InputError(f"Unknown vertex {label!r}") from error

    def arrow_index(self, label: str) -> int:
        try:
            return self._arrow_index[label]
        except KeyError as error:
            raise InputError(f"Unknown arrow {label!r}") from error

    def arrow_source(self, index: int) -> int:
        return self.vertices.index(self.arrows[index].source)

    def arrow_target(self, index: int) -> int:
        return self.vertices.index(self.arrows[index].target)

    def target(self, path: Path) -> int:
        return self.arrow_target(path.arrows[-1]) if path.arrows else path.source

    def path_from_labels(self, labels: Sequence[str]) -> Path:
        indices = tuple(self.arrow_index(label) for label in labels)
        for first, second in zip(indices, indices[1:]):
            if self.arrow_target(first) != self.arrow_source(second):
                raise InputError(f"Path {'.'.join(labels)} is not composable")
        return Path(self.arrow_source(indices[0]), indices)

    def concatenate(self, first: Path, second: Path) -> Optional[Path]:
        """The path ``first`` followed by ``second``, or None when they do not meet."""
        if self.target(first) != second.source:
            return None
        return Path(first.source, first.arrows + second.arrows)

    def paths_of_length(self, length: int) -> List[Path]:
        if length == 0:
            return [Path(vertex) for vertex in range(len(self.vertices))]
        paths: List[Path] = []
        for shorter in self.paths_of_length(length - 1):
            end = self.target(shorter)
            for index in range(len(self.arrows)):
                if self.arrow_source(index) == end:
                    paths.append(Path(shorter.source, shorter.arrows + (index,)))
        return paths

    def path_label(self, path: Path) -> str:
        if not path.arrows:
            return f"e{self.vertices[path.source]}"
        # Written in composition order, last arrow first.
        return "*".join(self.arrows[index].label for index in reversed(path.arrows))

    def sort_key(self, path: Path) -> Tuple[int, Tuple[str, ...], int]:
        return path.length, tuple(self.arrows[index].label for index in path.arrows), path.source
