'''Block-vectorized subalgebra closure over integer coded cubes.

Cubes are rows of an int64 array, one column per vertex. Operations are
applied vertex-wise to blocks of argument tuples at a time. New levels are
computed semi-naively: every tuple evaluated at a level has at least one
argument from the previous level's frontier.
'''
from concurrent.futures import ThreadPoolExecutor
import logging
import numpy as np

from .elements import FreeMark
from .utils import check_cap, vertex_weights

log = logging.getLogger(__name__)


class TableEvaluator(object):
    '''Evaluates the operations of a finite algebra by table lookup. Codes
    are carrier indices. Pure numpy, so safe to call from worker threads.

    '''
    threadsafe = True

    def __init__(self, algebra):
        self.algebra = algebra
        self.arities = [op.arity for op in algebra.operations]

    def evaluate(self, o, stacked):
        table = self.algebra.operations[o].table
        if stacked.shape[1] == 0:
            return np.full((stacked.shape[0], stacked.shape[2]), int(table), dtype=np.int64)
        return table[tuple(stacked[:, d, :] for d in range(stacked.shape[1]))].astype(np.int64)


class CodeBook(object):
    '''Interns the elements of a computable algebra as integer codes and
    memoizes operation values on code tuples.

    '''
    threadsafe = False

    def __init__(self, algebra):
        self.algebra = algebra
        self.symbols = [s for s, _ in algebra.signature]
        self.arities = [k for _, k in algebra.signature]
        self.elements = []
        self._codes = {}
        self._free = []
        self._memo = {}

    def __len__(self):
        return len(self.elements)

    def code(self, e):
        c = self._codes.get(e)
        if c is None:
            c = self._codes[e] = len(self.elements)
            self.elements.append(e)
            self._free.append(bool(self.algebra.is_free(e)))
        return c

    def codes(self, elements):
        return np.array([self.code(e) for e in elements], dtype=np.int64)

    def element(self, c):
        return self.elements[int(c)]

    def free_mask(self):
        return np.array(self._free, dtype=bool)

    def mask(self, predicate):
        '''Boolean array over codes, True where predicate(element) holds.'''
        return np.array([bool(predicate(e)) for e in self.elements], dtype=bool)

    def mark_codes(self, count):
        return self.codes([FreeMark(k) for k in range(count)])

    def apply_rows(self, o, rows):
        symbol = self.symbols[o]
        out = np.empty(rows.shape[0], dtype=np.int64)
        for r, row in enumerate(rows.tolist()):
            key = (o,) + tuple(row)
            c = self._memo.get(key)
            if c is None:
                value = self.algebra.apply(symbol, tuple(self.elements[x] for x in row))
                c = self._memo[key] = self.code(value)
            out[r] = c
        return out

    def evaluate(self, o, stacked):
        B, k, V = stacked.shape
        if k == 0:
            value = self.apply_rows(o, np.zeros((1, 0), dtype=np.int64))[0]
            return np.full((B, V), value, dtype=np.int64)
        flat = stacked.transpose(0, 2, 1).reshape(-1, k)
        uniq, inverse = np.unique(flat, axis=0, return_inverse=True)
        values = self.apply_rows(o, uniq)
        return values[inverse.reshape(-1)].reshape(B, V)


def collapse_rows(rows, codebook):
    '''Relabel the free values of each row as g[0], g[1], ... in order of
    first occurrence. Rows that agree up to a renaming of free values
    become identical.

    '''
    if rows.size == 0:
        return rows
    V = rows.shape[1]
    free = codebook.free_mask()[rows]
    if not free.any():
        return rows
    marks = codebook.mark_codes(V)
    # first[r, v]: first vertex holding the same value as vertex v
    eq = rows[:, :, None] == rows[:, None, :]
    first = eq.argmax(axis=2)
    starts = (first == np.arange(V)) & free
    rank = np.cumsum(starts, axis=1) - 1
    label = np.take_along_axis(rank, first, axis=1)
    return np.where(free, marks[np.clip(label, 0, V - 1)], rows)


class CodeStore(object):
    '''Deduplicates cubes of a finite algebra by their integer code.'''
    def __init__(self, size, nverts):
        self.weights = vertex_weights(size, nverts)
        self.seen = np.zeros(size ** nverts, dtype=bool)
        self.count = 0

    def insert(self, rows):
        codes = rows @ self.weights
        fresh = np.flatnonzero(~self.seen[codes])
        _, first = np.unique(codes[fresh], return_index=True)
        take = fresh[np.sort(first)]
        self.seen[codes[take]] = True
        self.count += take.size
        return take

    def lookup(self, row):
        return bool(self.seen[int(np.asarray(row) @ self.weights)])


class RowStore(object):
    '''Deduplicates cubes of a computable algebra by their row bytes.'''
    def __init__(self):
        self.index = {}
        self.count = 0

    def insert(self, rows):
        rows = np.ascontiguousarray(rows, dtype=np.int64)
        if rows.shape[0] == 0:
            return np.zeros(0, dtype=np.intp)
        _, first = np.unique(rows, axis=0, return_index=True)
        take = []
        for k in np.sort(first):
            key = rows[k].tobytes()
            if key not in self.index:
                self.index[key] = self.count
                self.count += 1
                take.append(k)
        return np.array(take, dtype=np.intp)

    def lookup(self, row):
        return np.ascontiguousarray(row, dtype=np.int64).tobytes() in self.index


class Closure(object):
    """Level by level closure of a set of cubes under vertex-wise operations.

    Args:
        evaluator: TableEvaluator or CodeBook.
        store: CodeStore or RowStore.
        nverts (int): vertices per cube.
        collapse (bool): canonically relabel free values (CodeBook only).
        chunk (int): tuples per evaluation block.
        workers (int): threads for block evaluation (thread-safe evaluators).
        tuple_cap (int): max operation applications overall.
        cube_cap (int): max stored cubes.
    """
    def __init__(self, evaluator, store, nverts, collapse=False, chunk=2**16,
                 workers=1, tuple_cap=10**8, cube_cap=10**6):
        self.evaluator = evaluator
        self.store = store
        self.nverts = nverts
        self.collapse = collapse
        self.chunk = chunk
        self.workers = workers if evaluator.threadsafe else 1
        self.tuple_cap = tuple_cap
        self.cube_cap = cube_cap
        maxk = max(evaluator.arities, default=0)
        self.cubes = np.zeros((0, nverts), dtype=np.int64)
        self.level = np.zeros(0, dtype=np.intp)
        self.op = np.zeros(0, dtype=np.intp)
        self.args = np.zeros((0, maxk), dtype=np.intp)
        self.depth = 0
        self.frontier = 0
        self.evaluations = 0
        self.instances = 0
        self.full = False
        self.limit = None

    def __len__(self):
        return self.cubes.shape[0]

    def _normalize(self, rows):
        if self.collapse:
            rows = collapse_rows(rows, self.evaluator)
        return rows

    def _append(self, rows, op, args):
        take = self.store.insert(rows)
        if take.size == 0:
            return 0
        check_cap('cube_cap', len(self) + take.size, self.cube_cap, depth=self.depth)
        self.cubes = np.concatenate([self.cubes, rows[take]])
        self.level = np.concatenate([self.level, np.full(take.size, self.depth, dtype=np.intp)])
        self.op = np.concatenate([self.op, op[take]])
        pad = np.full((take.size, self.args.shape[1]), -1, dtype=np.intp)
        pad[:, :args.shape[1]] = args[take]
        self.args = np.concatenate([self.args, pad])
        if self.limit is not None and len(self) >= self.limit:
            self.full = True
        return take.size

    def seed(self, rows, keep=None):
        '''Add generator cubes at level 0.'''
        rows = self._normalize(np.asarray(rows, dtype=np.int64).reshape(-1, self.nverts))
        if keep is not None:
            rows = rows[keep(rows)]
        n = rows.shape[0]
        self._append(rows, np.full(n, -1, dtype=np.intp), np.zeros((n, 0), dtype=np.intp))
        self.frontier = 0
        return self

    def _blocks(self, lists):
        sizes = [l.size for l in lists]
        total = int(np.prod(sizes, dtype=np.int64)) if sizes else 1
        for start in range(0, total, self.chunk):
            yield lists, sizes, start, min(start + self.chunk, total)

    def _evaluate_block(self, o, cubes, spec):
        lists, sizes, start, stop = spec
        if not sizes:
            stacked = np.zeros((1, 0, self.nverts), dtype=np.int64)
            args = np.zeros((1, 0), dtype=np.intp)
        else:
            idx = np.unravel_index(np.arange(start, stop), sizes)
            args = np.stack([lists[q][idx[q]] for q in range(len(lists))], axis=1)
            stacked = cubes[args]
        return self.evaluator.evaluate(o, stacked), args

    def step(self, argument_filter=None, keep=None, on_block=None):
        '''Compute the next level.

        Args:
            argument_filter: optional ``f(position, rows) -> bool mask``
                restricting which cubes may fill an argument position.
            keep: optional ``f(rows) -> bool mask`` restricting which new
                cubes are stored.
            on_block: optional ``f(rows)`` called with every evaluated block
                after normalization and before keep.

        Returns:
            int: number of new cubes.
        '''
        cubes = self.cubes
        n_all = cubes.shape[0]
        start_new = self.frontier
        self.depth += 1
        added = 0
        all_idx = np.arange(n_all, dtype=np.intp)
        for o, k in enumerate(self.evaluator.arities):
            if self.full:
                break
            if k == 0:
                if self.depth == 1:
                    specs = [([], [], 0, 1)]
                else:
                    continue
                parts = [specs]
            else:
                cand = []
                for p in range(k):
                    mask = np.ones(n_all, dtype=bool) if argument_filter is None \
                        else np.asarray(argument_filter(p, cubes), dtype=bool)
                    cand.append(all_idx[mask])
                old = [c[c < start_new] for c in cand]
                new = [c[c >= start_new] for c in cand]
                parts = []
                for p0 in range(k):
                    lists = old[:p0] + [new[p0]] + cand[p0 + 1:]
                    parts.append(self._blocks(lists))
            for specs in parts:
                added += self._run(o, cubes, specs, keep, on_block)
                if self.full:
                    break
        self.frontier = n_all
        log.debug('level %d: %d new cubes, %d total, %d evaluations',
                  self.depth, added, len(self), self.evaluations)
        return added

    def _run(self, o, cubes, specs, keep, on_block):
        added = 0
        if self.workers > 1:
            pool = ThreadPoolExecutor(max_workers=self.workers)
            window = []
            def results():
                for spec in specs:
                    window.append(pool.submit(self._evaluate_block, o, cubes, spec))
                    if len(window) >= 2 * self.workers:
                        yield window.pop(0).result()
                while window:
                    yield window.pop(0).result()
        else:
            pool = None
            def results():
                for spec in specs:
                    yield self._evaluate_block(o, cubes, spec)
        try:
            for out, args in results():
                check_cap('tuple_cap', self.evaluations + out.shape[0], self.tuple_cap,
                          depth=self.depth - 1)
                self.evaluations += out.shape[0]
                out = self._normalize(out)
                if on_block is not None:
                    on_block(out)
                if keep is not None:
                    mask = keep(out)
                    out, args = out[mask], args[mask]
                added += self._append(out, np.full(out.shape[0], o, dtype=np.intp), args)
                if self.full:
                    break
        finally:
            if pool is not None:
                pool.shutdown(wait=True, cancel_futures=True)
        return added

    def run(self, depth=None, **kwargs):
        '''Step until nothing new appears, or depth levels were computed.'''
        while depth is None or self.depth < depth:
            if self.full:
                break
            if self.step(**kwargs) == 0:
                break
        return self
