# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset construction kernel for automata with at most 64 states."""
from libc.stdint cimport uint64_t, int64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from cython.operator cimport dereference as deref

from flanked.errors import ResourceError

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

MAX_STATES = 64


def explore(initial, succ, int nsym, Py_ssize_t max_classes):
    """Same contract as ``flanked._subset_py.explore``; requires <= 64 states."""
    cdef Py_ssize_t nstates = len(succ)
    if nstates > 64:
        raise ValueError("compiled kernel supports at most 64 states")
    if initial == 0:
        return [], [], [], []

    cdef vector[uint64_t] table
    table.resize(nstates * nsym)
    cdef Py_ssize_t q, s
    for q in range(nstates):
        row = succ[q]
        for s in range(nsym):
            table[q * nsym + s] = <uint64_t>row[s]

    cdef vector[uint64_t] classes
    cdef vector[int64_t] delta
    cdef vector[int64_t] parent
    cdef vector[int64_t] parent_sym
    cdef unordered_map[uint64_t, int64_t] index
    cdef uint64_t start = <uint64_t>initial
    cdef uint64_t cls, m, target
    cdef int bit
    cdef Py_ssize_t i = 0
    cdef int64_t j
    cdef bint overflow = False
    cdef unordered_map[uint64_t, int64_t].iterator it

    classes.push_back(start)
    parent.push_back(-1)
    parent_sym.push_back(-1)
    index[start] = 0

    with nogil:
        while i < <Py_ssize_t>classes.size():
            cls = classes[i]
            for s in range(nsym):
                target = 0
                m = cls
                while m:
                    bit = __builtin_ctzll(m)
                    target |= table[bit * nsym + s]
                    m &= m - 1
                if target == 0:
                    delta.push_back(-1)
                    continue
                it = index.find(target)
                if it == index.end():
                    if <Py_ssize_t>classes.size() >= max_classes:
                        overflow = True
                        break
                    j = <int64_t>classes.size()
                    index[target] = j
                    classes.push_back(target)
                    parent.push_back(i)
                    parent_sym.push_back(s)
                else:
                    j = deref(it).second
                delta.push_back(j)
            if overflow:
                break
            i += 1

    if overflow:
        raise ResourceError(f"powerset construction exceeded {max_classes} classes")
    return list(classes), list(delta), list(parent), list(parent_sym)
