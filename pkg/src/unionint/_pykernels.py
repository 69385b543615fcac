"""Pure-Python search kernel (fallback when the compiled extension is missing).

Must stay behaviourally identical to ``_ckernels.pyx``: same node counts,
same optimum, same witness bits for the same arguments.
"""

PRED_ST = 0
PRED_UNION_L = 1
PRED_LINT = 2

FORCE_NONE = -1


def _popcount(x):
    return x.bit_count()


class _Search:
    def __init__(self, n, cands, upset, pred, p1, p2, sub_kill, bad, filter_alive, bound_prune,
                 prefix_len, prefix_bits, shared, slot):
        self.n = n
        self.full = (1 << n) - 1
        self.cands = cands
        self.ncand = len(cands)
        self.upset = upset
        self.pred = pred
        self.p1 = p1
        self.p2 = p2
        self.sub_kill = sub_kill
        self.bad = bad
        self.filter_alive = filter_alive
        self.bound_prune = bound_prune
        self.prefix_len = prefix_len
        self.prefix_bits = prefix_bits
        self.shared = shared
        self.slot = slot
        self.members = []
        self.counts = [0] * (1 << n)
        self.has_empty = 0
        self.ucount = [0] * (1 << n) if pred == PRED_UNION_L else None
        self.present = 0
        self.best = -1
        self.best_bits = 0
        self.nodes = 0

    # -- predicate state -----------------------------------------------------

    def _st_viol(self, u):
        c = self.counts
        a = c[u]
        b = c[self.full ^ u]
        s, t = self.p1, self.p2
        return (a >= s and b >= t and a + b - self.has_empty >= s + t) or \
               (b >= s and a >= t and a + b - self.has_empty >= s + t)

    def add(self, m):
        """Insert m; return True when the family stays admissible. Always pair with remove()."""
        pred = self.pred
        if pred == PRED_ST:
            c = self.counts
            free = self.full & ~m
            sub = free
            while True:
                c[m | sub] += 1
                if sub == 0:
                    break
                sub = (sub - 1) & free
            if m == 0:
                self.has_empty += 1
            ok = True
            sub = free
            while True:
                if self._st_viol(m | sub):
                    ok = False
                    break
                if sub == 0:
                    break
                sub = (sub - 1) & free
            self.members.append(m)
            return ok
        if pred == PRED_UNION_L:
            uc = self.ucount
            bad = self.bad
            new = 0
            for x in self.members:
                w = m | x
                uc[w] += 1
                if uc[w] == 1:
                    new |= 1 << w
            self.present |= new
            self.members.append(m)
            present = self.present
            while new:
                low = new & -new
                w = low.bit_length() - 1
                if present & bad[w]:
                    return False
                new ^= low
            return True
        # PRED_LINT
        l = self.p1
        self.members.append(m)
        if _popcount(m) < l:
            return False
        for x in self.members[:-1]:
            if _popcount(m & x) < l:
                return False
        return True

    def remove(self):
        m = self.members.pop()
        pred = self.pred
        if pred == PRED_ST:
            c = self.counts
            free = self.full & ~m
            sub = free
            while True:
                c[m | sub] -= 1
                if sub == 0:
                    break
                sub = (sub - 1) & free
            if m == 0:
                self.has_empty -= 1
        elif pred == PRED_UNION_L:
            uc = self.ucount
            for x in self.members:
                w = m | x
                uc[w] -= 1
                if uc[w] == 0:
                    self.present &= ~(1 << w)

    # -- search ----------------------------------------------------------------

    def _shared_best(self):
        shared = self.shared
        if shared is None:
            return -1
        return max(shared)

    def _filter(self, alive, start):
        rest = alive >> start << start
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            ok = self.add(self.cands[j])
            self.remove()
            if not ok:
                alive &= ~low
            rest ^= low
        return alive

    def dfs(self, idx, alive, chosen, size):
        self.nodes += 1
        if idx == self.ncand:
            if size > self.best:
                self.best = size
                self.best_bits = chosen
                if self.shared is not None and size > self.shared[self.slot]:
                    self.shared[self.slot] = size
            return
        if self.bound_prune:
            optimistic = size + _popcount(alive >> idx)
            if optimistic <= self.best or optimistic < self._shared_best():
                return
        bit = 1 << idx
        force = FORCE_NONE
        if idx < self.prefix_len:
            force = (self.prefix_bits >> idx) & 1
        if alive & bit and force != 0:
            if self.add(self.cands[idx]):
                nxt = alive
                if self.filter_alive:
                    nxt = self._filter(alive, idx + 1)
                self.dfs(idx + 1, nxt, chosen | bit, size + 1)
            self.remove()
        if force != 1:
            nxt = alive & ~bit
            if self.upset:
                nxt &= ~self.sub_kill[idx]
            self.dfs(idx + 1, nxt, chosen, size)


def run_search(n, cands, upset, pred, p1, p2, sub_kill, bad, filter_alive, bound_prune,
               prefix_len=0, prefix_bits=0, shared=None, slot=0):
    """Depth-first branch and bound over include/exclude decisions on ``cands``.

    Returns ``(best, best_bits, nodes)`` where bit i of ``best_bits`` marks
    candidate i as chosen; ``best`` is -1 when the forced prefix is infeasible.
    """
    s = _Search(n, cands, upset, pred, p1, p2, sub_kill, bad, filter_alive, bound_prune,
                prefix_len, prefix_bits, shared, slot)
    alive = (1 << len(cands)) - 1
    s.dfs(0, alive, 0, 0)
    return s.best, s.best_bits, s.nodes
