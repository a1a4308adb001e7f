"""
Represent bijections of finite label sets.

Author: Tilings developers
"""


from typing import Hashable, Iterable, Mapping

from tilings.labels import format_label, label_key, sort_labels


class Permutation:
    """Bijection of a finite set of hashable labels onto itself."""

    __slots__ = ('_mapping', '_hash')

    def __init__(self, mapping: Mapping[Hashable, Hashable]):
        """
        Initialize an instance.

        :param mapping:
            image of every element of the domain
        :return:
            freshly created instance of `Permutation` class
        """
        mapping = dict(mapping)
        if set(mapping.values()) != set(mapping):
            raise ValueError(f"Mapping is not a bijection of its domain: {mapping}")
        self._mapping = mapping
        self._hash = None

    @classmethod
    def identity(cls, domain: Iterable[Hashable]) -> 'Permutation':
        """Create identity permutation of `domain`."""
        return cls({x: x for x in domain})

    @classmethod
    def from_cycles(
            cls, domain: Iterable[Hashable], cycles: Iterable[Iterable[Hashable]]
    ) -> 'Permutation':
        """
        Create permutation from disjoint cycles.

        :param domain:
            full domain; elements outside of cycles are fixed
        :param cycles:
            disjoint cycles, each listing elements in order of mapping
        :return:
            permutation
        """
        mapping = {x: x for x in domain}
        for cycle in cycles:
            cycle = list(cycle)
            for i, x in enumerate(cycle):
                if x not in mapping:
                    raise ValueError(f"Cycle element {x!r} is outside of domain.")
                mapping[x] = cycle[(i + 1) % len(cycle)]
        return cls(mapping)

    @property
    def domain(self) -> frozenset:
        """Return set on which the permutation acts."""
        return frozenset(self._mapping)

    def __call__(self, x: Hashable) -> Hashable:
        try:
            return self._mapping[x]
        except KeyError:
            raise ValueError(f"{x!r} is outside of permutation domain.") from None

    def __contains__(self, x: Hashable) -> bool:
        return x in self._mapping

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        # (p * q)(x) = p(q(x))
        if self.domain != other.domain:
            raise ValueError("Permutations act on different domains.")
        return Permutation({x: self._mapping[y] for x, y in other._mapping.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._mapping == other._mapping

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._mapping.items()))
        return self._hash

    def __repr__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return 'Permutation(id)'
        text = ''.join(
            '(' + ' '.join(format_label(x) for x in cycle) + ')' for cycle in cycles
        )
        return f'Permutation{text}'

    def items(self) -> list[tuple[Hashable, Hashable]]:
        """Return (element, image) pairs in label order."""
        return [(x, self._mapping[x]) for x in sort_labels(self._mapping)]

    def as_dict(self) -> dict:
        """Return copy of underlying mapping."""
        return dict(self._mapping)

    def inverse(self) -> 'Permutation':
        """Return inverse permutation."""
        return Permutation({y: x for x, y in self._mapping.items()})

    def is_identity(self) -> bool:
        """Check that every element is fixed."""
        return all(x == y for x, y in self._mapping.items())

    def support(self) -> frozenset:
        """Return set of moved elements."""
        return frozenset(x for x, y in self._mapping.items() if x != y)

    def restrict(self, subset: Iterable[Hashable]) -> 'Permutation':
        """
        Restrict permutation to an invariant subset.

        :param subset:
            subset of the domain mapped onto itself
        :return:
            restricted permutation
        """
        subset = set(subset)
        restricted = {x: self(x) for x in subset}
        if set(restricted.values()) != subset:
            raise ValueError("Subset is not invariant under permutation.")
        return Permutation(restricted)

    def cycles(self) -> list[tuple]:
        """
        Return nontrivial cycles in canonical form.

        :return:
            cycles starting from their least element, sorted by that element
        """
        seen = set()
        cycles = []
        for start in sort_labels(self._mapping):
            if start in seen or self._mapping[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            current = self._mapping[start]
            while current != start:
                cycle.append(current)
                seen.add(current)
                current = self._mapping[current]
            cycles.append(tuple(cycle))
        return sorted(cycles, key=lambda cycle: label_key(cycle[0]))
