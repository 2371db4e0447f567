from collections.abc import Mapping


class Multiset:
    """A finite bag of hashable elements.

    Built from an iterable of elements or from a mapping ``element ->
    multiplicity``.  Iteration, :meth:`support` and :meth:`elements` follow
    first-insertion order so every derived matrix is reproducible; equality
    ignores order.
    """

    __slots__ = ("_counts", "_size", "_hash")

    def __init__(self, items=()):
        counts = {}
        if isinstance(items, Multiset):
            counts = dict(items._counts)
        elif isinstance(items, Mapping):
            for x, k in items.items():
                if int(k) != k or k < 1:
                    raise ValueError(f"multiplicity of {x!r} must be a positive integer, got {k!r}")
                counts[x] = int(k)
        else:
            for x in items:
                counts[x] = counts.get(x, 0) + 1
        self._counts = counts
        self._size = sum(counts.values())
        self._hash = None

    def __len__(self):
        return self._size

    def __iter__(self):
        for x, k in self._counts.items():
            for _ in range(k):
                yield x

    def __contains__(self, x):
        return x in self._counts

    def __eq__(self, other):
        if not isinstance(other, Multiset):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._counts.items()))
        return self._hash

    def __repr__(self):
        return f"Multiset({list(self)!r})"

    def multiplicity(self, x):
        return self._counts.get(x, 0)

    def support(self):
        return tuple(self._counts)

    def items(self):
        return self._counts.items()

    def elements(self):
        """Expanded element list; slot ``k`` of a matching refers to entry ``k``."""
        return list(self)
