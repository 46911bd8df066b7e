"""Contraction partition of a fixed ground set {0, ..., n-1}.

Classes carry stable integer labels (the label of the class that absorbed
the others survives a join) and remember their members in join order, so a
class's member list is the concatenation history of everything contracted
into it.
"""


class Partition:
    def __init__(self, n):
        if n < 1:
            raise ValueError("ground set must be nonempty")
        self.n = n
        self._members = {v: [v] for v in range(n)}
        self._class_of = list(range(n))

    @property
    def class_count(self):
        return len(self._members)

    def __contains__(self, label):
        return label in self._members

    def classes(self):
        """Live class labels in ascending order."""
        return sorted(self._members)

    def class_of(self, element):
        return self._class_of[element]

    def members(self, label):
        """Members of a class, in the order they were contracted in."""
        return list(self._members[label])

    def member_set(self, label):
        return frozenset(self._members[label])

    def blocks(self):
        """Snapshot of all classes as {label: frozenset of members}."""
        return {c: frozenset(ms) for c, ms in self._members.items()}

    def join(self, dst, src):
        """Merge class `src` into class `dst`, appending its members."""
        if dst == src:
            raise ValueError("cannot join a class with itself")
        if dst not in self._members or src not in self._members:
            raise ValueError("unknown class label")
        block = self._members.pop(src)
        self._members[dst].extend(block)
        for v in block:
            self._class_of[v] = dst
