# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; same API as ``rectcap._pykernels``."""
from libc.stdlib cimport malloc, free, calloc


cdef long _rc(long *w, long n, long r, long s) nogil:
    cdef long i, j, m, h, total = 0
    for i in range(n - s + 1):
        m = w[i]
        for j in range(i + 1, i + s):
            if w[j] < m:
                m = w[j]
        h = m - r + 1
        if h > 0:
            total += h
    return total


def rc(w, long r, long s):
    cdef long n = len(w)
    cdef long *buf = <long *> malloc((n + 1) * sizeof(long))
    cdef long i
    try:
        for i in range(n):
            buf[i] = w[i]
        return _rc(buf, n, r, s)
    finally:
        free(buf)


cdef list _trim(long long *h, long size):
    cdef long top = size - 1
    while top >= 0 and h[top] == 0:
        top -= 1
    return [h[i] for i in range(top + 1)]


def hist_words(long n, long lo, long hi, long r, long s, prefix=()):
    cdef long L = len(prefix)
    cdef long i, p
    if L > n:
        return []
    for c in prefix:
        if c < lo or c > hi:
            return []
    cdef long hmax = hi - r + 1
    if hmax < 0:
        hmax = 0
    cdef long width = n - s + 1
    if width < 0:
        width = 0
    cdef long size = width * hmax + 1
    cdef long long *h = <long long *> calloc(size, sizeof(long long))
    cdef long *w = <long *> malloc((n + 1) * sizeof(long))
    try:
        for i in range(L):
            w[i] = prefix[i]
        for i in range(L, n):
            w[i] = lo
        with nogil:
            while True:
                h[_rc(w, n, r, s)] += 1
                p = n - 1
                while p >= L and w[p] == hi:
                    p -= 1
                if p < L:
                    break
                w[p] += 1
                for i in range(p + 1, n):
                    w[i] = lo
        return _trim(h, size)
    finally:
        free(h)
        free(w)


def hist_catalan(long n, long r, long s, prefix=()):
    cdef long L = len(prefix)
    cdef long i, p, last
    if n == 0:
        return [[1] if L == 0 else []]
    empty = [[] for _ in range(n + 1)]
    if L > n:
        return empty
    if L:
        if prefix[0] != 1:
            return empty
        for i in range(1, L):
            if prefix[i] < 1 or prefix[i] > prefix[i - 1] + 1:
                return empty
    cdef long fixed = L if L > 0 else 1
    cdef long hmax = n - r + 1
    if hmax < 0:
        hmax = 0
    cdef long width = n - s + 1
    if width < 0:
        width = 0
    cdef long size = width * hmax + 1
    cdef long long *h = <long long *> calloc(size * (n + 1), sizeof(long long))
    cdef long *w = <long *> malloc((n + 1) * sizeof(long))
    try:
        for i in range(L):
            w[i] = prefix[i]
        w[0] = 1
        for i in range(fixed, n):
            w[i] = 1
        with nogil:
            while True:
                last = w[n - 1]
                h[last * size + _rc(w, n, r, s)] += 1
                p = n - 1
                while p >= fixed and w[p] == w[p - 1] + 1:
                    p -= 1
                if p < fixed:
                    break
                w[p] += 1
                for i in range(p + 1, n):
                    w[i] = 1
        return [_trim(h + i * size, size) for i in range(n + 1)]
    finally:
        free(h)
        free(w)


def hist_perms(long n, long r, long s):
    cdef long i, j, k, tmp
    cdef long width = n - s + 1
    if width < 0:
        width = 0
    cdef long hmax = n - r + 1
    if hmax < 0:
        hmax = 0
    cdef long size = width * hmax + 1
    cdef long long *h = <long long *> calloc(size, sizeof(long long))
    cdef long *w = <long *> malloc((n + 1) * sizeof(long))
    try:
        for i in range(n):
            w[i] = i + 1
        with nogil:
            while True:
                h[_rc(w, n, r, s)] += 1
                # next permutation in lexicographic order
                i = n - 2
                while i >= 0 and w[i] > w[i + 1]:
                    i -= 1
                if i < 0:
                    break
                j = n - 1
                while w[j] < w[i]:
                    j -= 1
                tmp = w[i]; w[i] = w[j]; w[j] = tmp
                j = i + 1
                k = n - 1
                while j < k:
                    tmp = w[j]; w[j] = w[k]; w[k] = tmp
                    j += 1
                    k -= 1
        return _trim(h, size)
    finally:
        free(h)
        free(w)
