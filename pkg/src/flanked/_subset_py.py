"""Pure-Python subset construction kernel (arbitrary state counts)."""
from __future__ import annotations

from typing import Sequence

from .errors import ResourceError


def explore(initial: int, succ: Sequence[Sequence[int]], nsym: int, max_classes: int):
    """Breadth-first subset construction over bitmask classes.

    ``succ[q][s]`` is the successor mask of state ``q`` on symbol index ``s``.
    Returns ``(classes, delta, parent, parent_sym)`` where ``delta`` is a flat
    list of length ``len(classes) * nsym`` holding the successor class id or
    ``-1`` when the successor set is empty.  ``parent``/``parent_sym`` give the
    BFS tree edge that first discovered each class (``-1`` for the root).
    """
    if initial == 0:
        return [], [], [], []
    classes = [initial]
    index = {initial: 0}
    parent = [-1]
    parent_sym = [-1]
    delta: list[int] = []
    i = 0
    while i < len(classes):
        cls = classes[i]
        members = []
        m = cls
        while m:
            low = m & -m
            members.append(succ[low.bit_length() - 1])
            m ^= low
        for s in range(nsym):
            target = 0
            for row in members:
                target |= row[s]
            if not target:
                delta.append(-1)
                continue
            j = index.get(target)
            if j is None:
                if len(classes) >= max_classes:
                    raise ResourceError(f"powerset construction exceeded {max_classes} classes")
                j = len(classes)
                index[target] = j
                classes.append(target)
                parent.append(i)
                parent_sym.append(s)
            delta.append(j)
        i += 1
    return classes, delta, parent, parent_sym
