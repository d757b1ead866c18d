# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled binomial completion kernel.

Same algorithm, order conventions and statistics as ``_pykernel``; see that
module for the meaning of the arguments.  Limited to 64 variables so that a
monomial's support fits in one machine word.
"""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy
from libc.stdint cimport uint64_t, int32_t

import time

DEF LEX = 0
DEF DEGREVLEX = 1
DEF ELIM = 2
DEF TIME_CHECK_EVERY = 64

cdef int OK = 0, DEGREE_LIMIT = 1, PAIR_LIMIT = 2, TIME_LIMIT = 3


cdef inline uint64_t mono_mask(int32_t* m, int nv) noexcept nogil:
    cdef uint64_t out = 0
    cdef int i
    for i in range(nv):
        if m[i]:
            out |= (<uint64_t>1) << i
    return out


cdef inline bint divides(int32_t* a, int32_t* b, int nv) noexcept nogil:
    cdef int i
    for i in range(nv):
        if a[i] > b[i]:
            return False
    return True


cdef inline int msum(int32_t* a, int lo, int hi) noexcept nogil:
    cdef int i, s = 0
    for i in range(lo, hi):
        s += a[i]
    return s


cdef inline int cmp_revlex(int32_t* a, int32_t* b, int lo, int hi) noexcept nogil:
    cdef int sa = msum(a, lo, hi), sb = msum(b, lo, hi), i
    if sa != sb:
        return 1 if sa > sb else -1
    i = hi - 1
    while i >= lo:
        if a[i] != b[i]:
            return 1 if a[i] < b[i] else -1
        i -= 1
    return 0


cdef inline int cmp_mono(int32_t* a, int32_t* b, int nv, int kind, int block) noexcept nogil:
    cdef int i, c
    if kind == LEX:
        for i in range(nv):
            if a[i] != b[i]:
                return 1 if a[i] > b[i] else -1
        return 0
    if kind == DEGREVLEX:
        return cmp_revlex(a, b, 0, nv)
    c = cmp_revlex(a, b, 0, block)
    if c:
        return c
    return cmp_revlex(a, b, block, nv)


cdef inline bint lcm_eq(int32_t* a, int32_t* b, int32_t* l, int nv) noexcept nogil:
    cdef int i, m
    for i in range(nv):
        m = a[i] if a[i] > b[i] else b[i]
        if m != l[i]:
            return False
    return True


cdef class _Engine:
    cdef int nv, kind, block
    # basis
    cdef int n_el, cap_el
    cdef int32_t* leads
    cdef int32_t* tails
    cdef uint64_t* masks
    cdef int* active
    cdef int n_active
    # pairs
    cdef int n_pairs, cap_pairs
    cdef int* p_i
    cdef int* p_j
    cdef int* p_deg
    cdef int32_t* p_lcm
    cdef uint64_t* p_mask
    cdef char* p_dead
    cdef int* heap
    cdef int n_heap
    # scratch
    cdef int32_t* cand_lcm
    cdef uint64_t* cand_mask
    cdef int* cand_idx
    cdef char* cand_coprime
    cdef char* cand_kept
    cdef int cap_cand
    # stats
    cdef public long pairs_created, pairs_reduced, zero_reductions
    cdef public long criterion_skips, reduction_steps, max_basis

    def __cinit__(self, int nv, int kind, int block):
        self.nv = nv
        self.kind = kind
        self.block = block
        self.cap_el = 64
        self.leads = <int32_t*> malloc(self.cap_el * max(nv, 1) * sizeof(int32_t))
        self.tails = <int32_t*> malloc(self.cap_el * max(nv, 1) * sizeof(int32_t))
        self.masks = <uint64_t*> malloc(self.cap_el * sizeof(uint64_t))
        self.active = <int*> malloc(self.cap_el * sizeof(int))
        self.cap_pairs = 1024
        self.p_i = <int*> malloc(self.cap_pairs * sizeof(int))
        self.p_j = <int*> malloc(self.cap_pairs * sizeof(int))
        self.p_deg = <int*> malloc(self.cap_pairs * sizeof(int))
        self.p_lcm = <int32_t*> malloc(self.cap_pairs * max(nv, 1) * sizeof(int32_t))
        self.p_mask = <uint64_t*> malloc(self.cap_pairs * sizeof(uint64_t))
        self.p_dead = <char*> malloc(self.cap_pairs * sizeof(char))
        self.heap = <int*> malloc(self.cap_pairs * sizeof(int))
        self.cap_cand = 64
        self.cand_lcm = <int32_t*> malloc(self.cap_cand * max(nv, 1) * sizeof(int32_t))
        self.cand_mask = <uint64_t*> malloc(self.cap_cand * sizeof(uint64_t))
        self.cand_idx = <int*> malloc(self.cap_cand * sizeof(int))
        self.cand_coprime = <char*> malloc(self.cap_cand * sizeof(char))
        self.cand_kept = <char*> malloc(self.cap_cand * sizeof(char))
        if (not self.leads or not self.tails or not self.masks or not self.active
                or not self.p_i or not self.p_j or not self.p_deg or not self.p_lcm
                or not self.p_mask or not self.p_dead or not self.heap or not self.cand_lcm
                or not self.cand_mask or not self.cand_idx or not self.cand_coprime
                or not self.cand_kept):
            raise MemoryError()

    def __dealloc__(self):
        free(self.leads); free(self.tails); free(self.masks); free(self.active)
        free(self.p_i); free(self.p_j); free(self.p_deg); free(self.p_lcm)
        free(self.p_mask); free(self.p_dead); free(self.heap)
        free(self.cand_lcm); free(self.cand_mask); free(self.cand_idx)
        free(self.cand_coprime); free(self.cand_kept)

    cdef void _grow_elements(self) except *:
        cdef int cap = self.cap_el * 2
        cdef int nv = max(self.nv, 1)
        self.leads = <int32_t*> realloc(self.leads, cap * nv * sizeof(int32_t))
        self.tails = <int32_t*> realloc(self.tails, cap * nv * sizeof(int32_t))
        self.masks = <uint64_t*> realloc(self.masks, cap * sizeof(uint64_t))
        self.active = <int*> realloc(self.active, cap * sizeof(int))
        if not self.leads or not self.tails or not self.masks or not self.active:
            raise MemoryError()
        self.cap_el = cap

    cdef void _grow_pairs(self) except *:
        cdef int cap = self.cap_pairs * 2
        cdef int nv = max(self.nv, 1)
        self.p_i = <int*> realloc(self.p_i, cap * sizeof(int))
        self.p_j = <int*> realloc(self.p_j, cap * sizeof(int))
        self.p_deg = <int*> realloc(self.p_deg, cap * sizeof(int))
        self.p_lcm = <int32_t*> realloc(self.p_lcm, cap * nv * sizeof(int32_t))
        self.p_mask = <uint64_t*> realloc(self.p_mask, cap * sizeof(uint64_t))
        self.p_dead = <char*> realloc(self.p_dead, cap * sizeof(char))
        self.heap = <int*> realloc(self.heap, cap * sizeof(int))
        if (not self.p_i or not self.p_j or not self.p_deg or not self.p_lcm
                or not self.p_mask or not self.p_dead or not self.heap):
            raise MemoryError()
        self.cap_pairs = cap

    cdef void _grow_cand(self, int need) except *:
        cdef int cap = self.cap_cand
        cdef int nv = max(self.nv, 1)
        while cap < need:
            cap *= 2
        if cap == self.cap_cand:
            return
        self.cand_lcm = <int32_t*> realloc(self.cand_lcm, cap * nv * sizeof(int32_t))
        self.cand_mask = <uint64_t*> realloc(self.cand_mask, cap * sizeof(uint64_t))
        self.cand_idx = <int*> realloc(self.cand_idx, cap * sizeof(int))
        self.cand_coprime = <char*> realloc(self.cand_coprime, cap * sizeof(char))
        self.cand_kept = <char*> realloc(self.cand_kept, cap * sizeof(char))
        if (not self.cand_lcm or not self.cand_mask or not self.cand_idx
                or not self.cand_coprime or not self.cand_kept):
            raise MemoryError()
        self.cap_cand = cap

    # -- heap keyed by (degree, pair id) --
    cdef inline bint _less(self, int a, int b) noexcept nogil:
        if self.p_deg[a] != self.p_deg[b]:
            return self.p_deg[a] < self.p_deg[b]
        return a < b

    cdef void _push(self, int pid) noexcept nogil:
        cdef int k = self.n_heap, parent
        self.heap[k] = pid
        self.n_heap += 1
        while k > 0:
            parent = (k - 1) >> 1
            if self._less(self.heap[k], self.heap[parent]):
                self.heap[k], self.heap[parent] = self.heap[parent], self.heap[k]
                k = parent
            else:
                break

    cdef int _pop(self) noexcept nogil:
        cdef int top = self.heap[0], k = 0, c, n
        self.n_heap -= 1
        n = self.n_heap
        if n > 0:
            self.heap[0] = self.heap[n]
            while True:
                c = 2 * k + 1
                if c >= n:
                    break
                if c + 1 < n and self._less(self.heap[c + 1], self.heap[c]):
                    c += 1
                if self._less(self.heap[c], self.heap[k]):
                    self.heap[k], self.heap[c] = self.heap[c], self.heap[k]
                    k = c
                else:
                    break
        return top

    # -- reduction --
    cdef int _nf(self, int32_t* m) noexcept nogil:
        """Rewrite ``m`` in place to normal form; returns the number of steps."""
        cdef int nv = self.nv, steps = 0, k, idx, i
        cdef uint64_t mm
        cdef int32_t* l
        cdef int32_t* t
        cdef bint hit
        while True:
            mm = mono_mask(m, nv)
            hit = False
            for k in range(self.n_active):
                idx = self.active[k]
                if self.masks[idx] & ~mm:
                    continue
                l = self.leads + idx * nv
                if divides(l, m, nv):
                    t = self.tails + idx * nv
                    for i in range(nv):
                        m[i] = m[i] - l[i] + t[i]
                    steps += 1
                    hit = True
                    break
            if not hit:
                return steps

    cdef void _add(self, int32_t* lead, int32_t* tail) except *:
        cdef int nv = self.nv, h, k, c, o, i, idx, pid, na
        cdef uint64_t lmask, lm
        cdef int32_t* li
        cdef int32_t* lj
        cdef int32_t* lcm
        cdef bint dominated
        if self.n_el == self.cap_el:
            self._grow_elements()
        h = self.n_el
        memcpy(self.leads + h * nv, lead, nv * sizeof(int32_t))
        memcpy(self.tails + h * nv, tail, nv * sizeof(int32_t))
        lead = self.leads + h * nv
        lmask = mono_mask(lead, nv)
        self.masks[h] = lmask
        self.n_el += 1

        na = self.n_active
        self._grow_cand(na + 1)
        for c in range(na):
            idx = self.active[c]
            li = self.leads + idx * nv
            lcm = self.cand_lcm + c * nv
            for i in range(nv):
                lcm[i] = li[i] if li[i] > lead[i] else lead[i]
            self.cand_idx[c] = idx
            self.cand_mask[c] = self.masks[idx] | lmask
            self.cand_coprime[c] = (self.masks[idx] & lmask) == 0
            self.cand_kept[c] = 0
        for c in range(na):
            if not self.cand_coprime[c]:
                lm = self.cand_mask[c]
                lcm = self.cand_lcm + c * nv
                dominated = False
                for o in range(c + 1, na):
                    if not (self.cand_mask[o] & ~lm) and divides(self.cand_lcm + o * nv, lcm, nv):
                        dominated = True
                        break
                if not dominated:
                    for o in range(c):
                        if self.cand_kept[o] and not (self.cand_mask[o] & ~lm) \
                                and divides(self.cand_lcm + o * nv, lcm, nv):
                            dominated = True
                            break
                if dominated:
                    self.criterion_skips += 1
                    continue
            self.cand_kept[c] = 1

        for k in range(self.n_heap):
            pid = self.heap[k]
            if self.p_dead[pid]:
                continue
            lcm = self.p_lcm + pid * nv
            if (lmask & ~self.p_mask[pid]) or not divides(lead, lcm, nv):
                continue
            li = self.leads + self.p_i[pid] * nv
            lj = self.leads + self.p_j[pid] * nv
            if lcm_eq(li, lead, lcm, nv) or lcm_eq(lj, lead, lcm, nv):
                continue
            self.p_dead[pid] = 1
            self.criterion_skips += 1

        k = 0
        for c in range(na):
            idx = self.active[c]
            if (lmask & ~self.masks[idx]) or not divides(lead, self.leads + idx * nv, nv):
                self.active[k] = idx
                k += 1
        self.active[k] = h
        self.n_active = k + 1
        if self.n_active > self.max_basis:
            self.max_basis = self.n_active

        for c in range(na):
            if not self.cand_kept[c]:
                continue
            if self.cand_coprime[c]:
                self.criterion_skips += 1
                continue
            if self.n_pairs == self.cap_pairs:
                self._grow_pairs()
            pid = self.n_pairs
            self.n_pairs += 1
            self.p_i[pid] = self.cand_idx[c]
            self.p_j[pid] = h
            memcpy(self.p_lcm + pid * nv, self.cand_lcm + c * nv, nv * sizeof(int32_t))
            self.p_deg[pid] = msum(self.cand_lcm + c * nv, 0, nv)
            self.p_mask[pid] = self.cand_mask[c]
            self.p_dead[pid] = 0
            self._push(pid)
            self.pairs_created += 1

    cdef bint _orient_add(self, int32_t* a, int32_t* b, int max_degree) except -1:
        cdef int nv = self.nv
        cdef int32_t* lead
        cdef int32_t* tail
        if cmp_mono(a, b, nv, self.kind, self.block) > 0:
            lead, tail = a, b
        else:
            lead, tail = b, a
        if max_degree and max(msum(lead, 0, nv), msum(tail, 0, nv)) > max_degree:
            return False
        self._add(lead, tail)
        return True

    def run(self, gens, int max_degree, long max_pairs, double deadline):
        cdef int nv = self.nv, i, j, k, idx, pid, status = OK
        cdef long processed = 0
        cdef int32_t* a = <int32_t*> malloc(max(nv, 1) * sizeof(int32_t))
        cdef int32_t* b = <int32_t*> malloc(max(nv, 1) * sizeof(int32_t))
        cdef int32_t* lcm
        cdef int32_t* li
        cdef int32_t* ti
        cdef int32_t* lj
        cdef int32_t* tj
        cdef bint same
        if not a or not b:
            free(a); free(b)
            raise MemoryError()
        try:
            for u, v in gens:
                for i in range(nv):
                    a[i] = u[i]
                    b[i] = v[i]
                self.reduction_steps += self._nf(a) + self._nf(b)
                same = True
                for i in range(nv):
                    if a[i] != b[i]:
                        same = False
                        break
                if same:
                    continue
                if not self._orient_add(a, b, max_degree):
                    status = DEGREE_LIMIT
                    break

            while status == OK and self.n_heap > 0:
                pid = self._pop()
                if self.p_dead[pid]:
                    continue
                processed += 1
                if max_pairs and processed > max_pairs:
                    status = PAIR_LIMIT
                    break
                if deadline and processed % TIME_CHECK_EVERY == 0 and time.monotonic() > deadline:
                    status = TIME_LIMIT
                    break
                lcm = self.p_lcm + pid * nv
                li = self.leads + self.p_i[pid] * nv
                ti = self.tails + self.p_i[pid] * nv
                lj = self.leads + self.p_j[pid] * nv
                tj = self.tails + self.p_j[pid] * nv
                for i in range(nv):
                    a[i] = lcm[i] - li[i] + ti[i]
                    b[i] = lcm[i] - lj[i] + tj[i]
                self.reduction_steps += self._nf(a) + self._nf(b)
                self.pairs_reduced += 1
                same = True
                for i in range(nv):
                    if a[i] != b[i]:
                        same = False
                        break
                if same:
                    self.zero_reductions += 1
                    continue
                if not self._orient_add(a, b, max_degree):
                    status = DEGREE_LIMIT
                    break

            basis = []
            for k in range(self.n_active):
                idx = self.active[k]
                if status == OK:
                    memcpy(a, self.tails + idx * nv, nv * sizeof(int32_t))
                    self.reduction_steps += self._nf(a)
                    tail = tuple([a[i] for i in range(nv)])
                else:
                    tail = tuple([self.tails[idx * nv + i] for i in range(nv)])
                basis.append((tuple([self.leads[idx * nv + i] for i in range(nv)]), tail))
            return status, basis
        finally:
            free(a)
            free(b)

    cdef void load(self, leads, tails) except *:
        cdef int nv = self.nv, i, k
        for k in range(len(leads)):
            if self.n_el == self.cap_el:
                self._grow_elements()
            for i in range(nv):
                self.leads[self.n_el * nv + i] = leads[k][i]
                self.tails[self.n_el * nv + i] = tails[k][i]
            self.masks[self.n_el] = mono_mask(self.leads + self.n_el * nv, nv)
            self.active[self.n_active] = self.n_el
            self.n_active += 1
            self.n_el += 1

    def reduce(self, mono):
        cdef int nv = self.nv, i
        cdef int32_t* a = <int32_t*> malloc(max(nv, 1) * sizeof(int32_t))
        if not a:
            raise MemoryError()
        try:
            for i in range(nv):
                a[i] = mono[i]
            self._nf(a)
            return tuple([a[i] for i in range(nv)])
        finally:
            free(a)


def _check_nvars(int nvars):
    if nvars > 64:
        raise ValueError("compiled kernel supports at most 64 variables")


def complete(gens, int nvars, int kind, int block=0, int max_degree=0, long max_pairs=0,
             double deadline=0.0):
    _check_nvars(nvars)
    cdef _Engine eng = _Engine(nvars, kind, block)
    status, basis = eng.run(gens, max_degree, max_pairs, deadline)
    stats = dict(pairs_created=eng.pairs_created, pairs_reduced=eng.pairs_reduced,
                 zero_reductions=eng.zero_reductions, criterion_skips=eng.criterion_skips,
                 reduction_steps=eng.reduction_steps, max_basis=eng.max_basis)
    return status, basis, stats


def normal_form(leads, tails, mono):
    cdef int nvars = len(mono)
    _check_nvars(nvars)
    cdef _Engine eng = _Engine(nvars, LEX, 0)
    eng.load(leads, tails)
    return eng.reduce(mono)
