"""Pure-Python binomial completion kernel.

This is the fallback used when the compiled ``_ckernel`` extension is not
available.  Both kernels implement the same algorithm step for step, so the
reduced basis *and* the reported statistics agree between them.

Monomials are exponent tuples given in *order coordinates*: position 0 is the
largest variable of the term order.  Three order kinds are understood:

* ``LEX``       plain lexicographic comparison of the tuples;
* ``DEGREVLEX`` total degree, ties broken by the last differing position
  (smaller exponent wins);
* ``ELIM``      block order: degrevlex on positions ``[0, block)``, then
  degrevlex on the remaining positions.
"""

import heapq
import time

LEX, DEGREVLEX, ELIM = 0, 1, 2

OK, DEGREE_LIMIT, PAIR_LIMIT, TIME_LIMIT = 0, 1, 2, 3

_TIME_CHECK_EVERY = 64


def _revkey(mono):
    return (sum(mono), tuple(-x for x in reversed(mono)))


def order_key(kind, block=0):
    if kind == LEX:
        return tuple
    if kind == DEGREVLEX:
        return _revkey
    if kind == ELIM:
        def key(mono):
            return _revkey(mono[:block]) + _revkey(mono[block:])
        return key
    raise ValueError(f"unknown order kind {kind!r}")


def _mask(mono):
    m = 0
    for i, x in enumerate(mono):
        if x:
            m |= 1 << i
    return m


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


class _Store:
    """Basis elements plus the list of currently active (non-redundant) ones."""

    def __init__(self):
        self.leads = []
        self.tails = []
        self.masks = []
        self.active = []

    def reducer(self, mono, mmask):
        leads, masks = self.leads, self.masks
        for idx in self.active:
            if masks[idx] & ~mmask:
                continue
            if _divides(leads[idx], mono):
                return idx
        return -1

    def nf(self, mono):
        steps = 0
        while True:
            idx = self.reducer(mono, _mask(mono))
            if idx < 0:
                return mono, steps
            lead, tail = self.leads[idx], self.tails[idx]
            mono = tuple(m - a + t for m, a, t in zip(mono, lead, tail))
            steps += 1


def normal_form(leads, tails, mono):
    """Rewrite ``mono`` with the rules ``lead -> tail`` until irreducible."""
    store = _Store()
    store.leads = [tuple(x) for x in leads]
    store.tails = [tuple(x) for x in tails]
    store.masks = [_mask(x) for x in store.leads]
    store.active = list(range(len(store.leads)))
    return store.nf(tuple(mono))[0]


def complete(gens, nvars, kind, block=0, max_degree=0, max_pairs=0, deadline=0.0):
    """Buchberger completion of a list of binomials ``(u, v)`` meaning ``x^u - x^v``.

    Returns ``(status, basis, stats)`` where ``basis`` is the reduced basis as
    ``(lead, tail)`` pairs in creation order.  A nonzero status means a budget
    was hit; the basis is then the partial (non-reduced) state.
    """
    key = order_key(kind, block)
    store = _Store()
    leads, tails, masks = store.leads, store.tails, store.masks

    # pair records indexed by pair id
    p_i, p_j, p_lcm, p_mask, p_dead = [], [], [], [], []
    heap = []
    stats = dict(pairs_created=0, pairs_reduced=0, zero_reductions=0,
                 criterion_skips=0, reduction_steps=0, max_basis=0)
    status = OK

    def add(lead, tail):
        h = len(leads)
        lmask = _mask(lead)
        leads.append(lead)
        tails.append(tail)
        masks.append(lmask)

        # Gebauer-Moeller update.
        cand = []
        for i in store.active:
            li = leads[i]
            lcm = tuple(a if a > b else b for a, b in zip(li, lead))
            cand.append((i, lcm, masks[i] | lmask, (masks[i] & lmask) == 0))
        kept = []
        for c in range(len(cand)):
            i, lcm, lm, coprime = cand[c]
            if not coprime:
                dominated = False
                for other in cand[c + 1:]:
                    if not (other[2] & ~lm) and _divides(other[1], lcm):
                        dominated = True
                        break
                if not dominated:
                    for other in kept:
                        if not (other[2] & ~lm) and _divides(other[1], lcm):
                            dominated = True
                            break
                if dominated:
                    stats["criterion_skips"] += 1
                    continue
            kept.append(cand[c])

        for pid in heap_ids():
            if p_dead[pid]:
                continue
            lcm = p_lcm[pid]
            if (lmask & ~p_mask[pid]) or not _divides(lead, lcm):
                continue
            li, lj = leads[p_i[pid]], leads[p_j[pid]]
            if _lcm_eq(li, lead, lcm) or _lcm_eq(lj, lead, lcm):
                continue
            p_dead[pid] = True
            stats["criterion_skips"] += 1

        store.active = [i for i in store.active
                        if (lmask & ~masks[i]) or not _divides(lead, leads[i])]
        store.active.append(h)
        if len(store.active) > stats["max_basis"]:
            stats["max_basis"] = len(store.active)

        for i, lcm, lm, coprime in kept:
            if coprime:
                stats["criterion_skips"] += 1
                continue
            pid = len(p_i)
            p_i.append(i)
            p_j.append(h)
            p_lcm.append(lcm)
            p_mask.append(lm)
            p_dead.append(False)
            heapq.heappush(heap, (sum(lcm), pid))
            stats["pairs_created"] += 1

    def heap_ids():
        return [pid for _, pid in heap]

    def orient_and_add(a, b):
        # returns False when a degree budget is violated
        if key(a) > key(b):
            lead, tail = a, b
        else:
            lead, tail = b, a
        if max_degree and max(sum(lead), sum(tail)) > max_degree:
            return False
        add(lead, tail)
        return True

    for u, v in gens:
        u, v = tuple(u), tuple(v)
        a, sa = store.nf(u)
        b, sb = store.nf(v)
        stats["reduction_steps"] += sa + sb
        if a == b:
            continue
        if not orient_and_add(a, b):
            status = DEGREE_LIMIT
            break

    processed = 0
    while status == OK and heap:
        _, pid = heapq.heappop(heap)
        if p_dead[pid]:
            continue
        processed += 1
        if max_pairs and processed > max_pairs:
            status = PAIR_LIMIT
            break
        if deadline and processed % _TIME_CHECK_EVERY == 0 and time.monotonic() > deadline:
            status = TIME_LIMIT
            break
        i, j, lcm = p_i[pid], p_j[pid], p_lcm[pid]
        li, ti, lj, tj = leads[i], tails[i], leads[j], tails[j]
        a = tuple(m - x + t for m, x, t in zip(lcm, li, ti))
        b = tuple(m - x + t for m, x, t in zip(lcm, lj, tj))
        a, sa = store.nf(a)
        b, sb = store.nf(b)
        stats["reduction_steps"] += sa + sb
        stats["pairs_reduced"] += 1
        if a == b:
            stats["zero_reductions"] += 1
            continue
        if not orient_and_add(a, b):
            status = DEGREE_LIMIT
            break

    if status != OK:
        basis = [(leads[i], tails[i]) for i in store.active]
        return status, basis, stats

    basis = []
    for i in store.active:
        t, steps = store.nf(tails[i])
        stats["reduction_steps"] += steps
        basis.append((leads[i], t))
    return status, basis, stats


def _lcm_eq(a, b, lcm):
    for x, y, m in zip(a, b, lcm):
        if (x if x > y else y) != m:
            return False
    return True
