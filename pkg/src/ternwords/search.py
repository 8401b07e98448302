"""Backtracking search for k-Brinkhuis triple-pairs.

Shift-symmetric mode (the default) assigns the letters of U0, then the
letters of V0, in lexicographic order, and derives U1, U2, V1, V2 as the
letterwise shifts of U0 and V0 by 1 and 2.  The relaxed mode assigns all
six words interleaved position by position, in the order U0, V0, U1, V1,
U2, V2.

Cuts applied while a candidate grows (each is sound: a cut implies no
completion can satisfy the definition):

* a prefix of any constituent word ends with a square;
* two prefixes of length r >= ceil(k/2) that the distinctness condition
  forces apart coincide (in symmetric mode, against the shifted heads and
  tails of the completed U0);
* in symmetric mode, a square appears in a growing cross concatenation
  U0 . shift(V0-prefix, d), or the completed U0 fails its own
  concatenation and head/tail conditions.

Complete assignments get the full certificate check from the triplepair
module, and only pairs whose certificate passes are emitted.

Letters are packed two bits each into ints, so a suffix-square test is a
shift, an xor and a mask per period.  Parallel runs shard the space by
fixed-depth prefixes of the assignment sequence and merge shard results in
lexicographic shard order, which keeps the emitted pair set independent of
the shard count.
"""

import multiprocessing
from dataclasses import dataclass, replace

from .words import Word, is_square_free, parse_word, shift
from .triplepair import TriplePair, make_triple_pair, verify

__all__ = ["SearchConfig", "SearchOutcome", "find_pairs", "prune_check", "canonicalize"]


@dataclass
class SearchConfig:
    """Search space description; defaults match the classic 18-pair hunt."""

    k: int
    shift_symmetry: bool = True
    palindrome_constraint: bool = False
    first_letter: "int | None" = 2
    max_results: "int | None" = None
    node_budget: "int | None" = None
    parallel_shards: int = 1
    canonical: bool = True

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"k must be >= 2, got {self.k}")
        if self.palindrome_constraint and not self.shift_symmetry:
            raise ValueError("palindrome_constraint requires shift_symmetry")
        if self.first_letter not in (None, 0, 1, 2):
            raise ValueError(f"first_letter must be None, 0, 1 or 2, got {self.first_letter!r}")
        if self.max_results is not None and self.max_results < 1:
            raise ValueError("max_results must be >= 1 or None")
        if self.node_budget is not None and self.node_budget < 0:
            raise ValueError("node_budget must be >= 0 or None")
        if self.parallel_shards < 1:
            raise ValueError("parallel_shards must be >= 1")


@dataclass
class SearchOutcome:
    pairs_found: list
    nodes_expanded: int
    exhausted: bool


def canonicalize(tp: TriplePair) -> TriplePair:
    """Least orbit representative under the verdict-preserving symmetries.

    The orbit combines the three global letter shifts with the matching
    index rotation and the eight per-index U/V swaps; the representative
    minimizes the letter sequence U0 V0 U1 V1 U2 V2.
    """
    best = None
    best_key = None
    for c in (0, 1, 2):
        u = [shift(tp.u[(i - c) % 3], c) for i in range(3)]
        v = [shift(tp.v[(i - c) % 3], c) for i in range(3)]
        for mask in range(8):
            uu = list(u)
            vv = list(v)
            for i in range(3):
                if (mask >> i) & 1:
                    uu[i], vv[i] = vv[i], uu[i]
            key = (
                uu[0].letters + vv[0].letters
                + uu[1].letters + vv[1].letters
                + uu[2].letters + vv[2].letters
            )
            if best_key is None or key < best_key:
                best_key = key
                best = (tuple(uu), tuple(vv))
    return TriplePair(u=best[0], v=best[1])


def prune_check(config: SearchConfig, letters) -> bool:
    """Feasibility screen for a partial assignment, mandatory cuts only.

    ``letters`` lists the letters placed so far, in the assignment order
    find_pairs uses for ``config``.  Returns False only when no completion
    of the assignment can pass verify: some placed prefix already contains
    a square, or two prefixes of length r >= ceil(k/2) that the
    distinctness condition forces apart already coincide.  The search
    itself applies further cuts; they stay sound for the same reason.
    """
    k = config.k
    seq = tuple(letters)
    for pos, a in enumerate(seq):
        if not isinstance(a, int) or a not in (0, 1, 2):
            raise ValueError(f"invalid letter {a!r} at position {pos}")
    if config.shift_symmetry:
        if len(seq) > 2 * k:
            raise ValueError("assignment longer than the search space")
        words = [seq[:k], seq[k:]]
    else:
        if len(seq) > 6 * k:
            raise ValueError("assignment longer than the search space")
        words = [seq[i::6] for i in range(6)]
    for w in words:
        if not is_square_free(Word(w)):
            return False
    for r in range((k + 1) // 2, k):
        heads = [w[:r] for w in words if len(w) >= r]
        if config.shift_symmetry:
            if len(heads) == 2:
                u0h, v0h = heads
                # implied heads are the letterwise shifts; distinct shifts
                # of one word never collide, so three comparisons remain
                for d in (0, 1, 2):
                    if u0h == tuple((a + d) % 3 for a in v0h):
                        return False
        elif len(set(heads)) != len(heads):
            return False
    return True


def _pack(letters) -> int:
    acc = 0
    for a in letters:
        acc = (acc << 2) | a
    return acc


def _suffix_square(buf: int, length: int, masks) -> bool:
    """Does a square end at the last letter of the packed buffer?"""
    for p in range(1, length // 2 + 1):
        if ((buf ^ (buf >> (p << 1))) & masks[p]) == 0:
            return True
    return False


def _square_ending_in(buf: int, length: int, lo: int, masks) -> bool:
    """Does a square end at any position in (lo, length] of the packed buffer?"""
    for end in range(lo + 1, length + 1):
        pref = buf >> ((length - end) << 1)
        for p in range(1, end // 2 + 1):
            if ((pref ^ (pref >> (p << 1))) & masks[p]) == 0:
                return True
    return False


class _Stop(Exception):
    """Internal: node budget exhausted or result limit reached."""


class _SearcherBase:
    def __init__(self, cfg: SearchConfig, prefix=(), stop_depth=None, collector=None, cut_log=None):
        self.cfg = cfg
        self.k = cfg.k
        self.half = (cfg.k + 1) // 2
        self.masks = [(1 << (2 * p)) - 1 for p in range(2 * cfg.k + 2)]
        self.prefix = tuple(prefix)
        self.stop_depth = stop_depth
        self.collector = collector
        self.cut_log = cut_log
        self.seq = []  # every placed letter, in assignment order
        self.nodes = 0
        self.results = []
        self._seen_keys = set()
        self.exhausted = True

    def run(self):
        try:
            self._extend(0)
        except _Stop:
            self.exhausted = False
        return self

    def _attempt(self):
        budget = self.cfg.node_budget
        if budget is not None and self.nodes >= budget:
            raise _Stop
        self.nodes += 1

    def _cut(self, reason: str):
        if self.cut_log is not None:
            self.cut_log.append((reason, tuple(self.seq)))

    def _record(self, pair: TriplePair):
        if self.cfg.canonical:
            pair = canonicalize(pair)
            key = tuple(w.letters for w in pair.words_in_file_order())
            if key in self._seen_keys:
                return
            self._seen_keys.add(key)
            if not verify(pair).verdict:
                raise AssertionError("canonicalization broke a passing certificate")
        self.results.append(pair)
        limit = self.cfg.max_results
        if limit is not None and len(self.results) >= limit:
            raise _Stop


class _ShiftSearcher(_SearcherBase):
    """Assign U0 then V0; the other four words are shifts.

    Conditions on the derived words reduce to conditions on U0 and V0: the
    24 concatenations collapse to the eight words X . shift(Y, d) for
    X, Y in {U0, V0} and d in {1, 2}, and head/tail collisions collapse to
    comparisons against the three shifts of U0's and V0's heads and tails.
    """

    def __init__(self, cfg, **kw):
        super().__init__(cfg, **kw)
        self.u = []
        self.v = []
        self.pu = 0
        self.pv = 0
        self.pb1 = 0  # packed U0 . shift(v, 1)
        self.pb2 = 0  # packed U0 . shift(v, 2)
        self.forbid = {}

    def _candidates(self, depth: int):
        k = self.k
        cfg = self.cfg
        if depth < k:
            pos = depth
            if pos == 0 and cfg.first_letter is not None:
                return (cfg.first_letter,)
            if cfg.palindrome_constraint and pos >= self.half:
                return (self.u[k - 1 - pos],)
        else:
            pos = depth - k
            if cfg.palindrome_constraint and pos >= self.half:
                return (self.v[k - 1 - pos],)
        return (0, 1, 2)

    def _extend(self, depth: int):
        if depth == self.stop_depth:
            self.collector(tuple(self.seq))
            return
        k = self.k
        if depth == 2 * k:
            self._leaf()
            return
        if depth == k:
            if not self._u_complete_ok():
                return
            self._v_setup()
        if depth < len(self.prefix):
            cands = (self.prefix[depth],)
        else:
            cands = self._candidates(depth)
        in_u = depth < k
        pos = depth if in_u else depth - k
        for x in cands:
            self._attempt()
            if in_u:
                if not self._place_u(pos, x):
                    continue
            else:
                if not self._place_v(pos, x):
                    continue
            self._extend(depth + 1)
            if in_u:
                self.u.pop()
                self.pu >>= 2
            else:
                self.v.pop()
                self.pv >>= 2
                self.pb1 >>= 2
                self.pb2 >>= 2
            self.seq.pop()

    def _place_u(self, pos: int, x: int) -> bool:
        npu = (self.pu << 2) | x
        if _suffix_square(npu, pos + 1, self.masks):
            self.seq.append(x)
            self._cut("square-u")
            self.seq.pop()
            return False
        self.pu = npu
        self.u.append(x)
        self.seq.append(x)
        return True

    def _u_complete_ok(self) -> bool:
        k = self.k
        masks = self.masks
        pu = self.pu
        p1 = _pack((a + 1) % 3 for a in self.u)
        p2 = _pack((a + 2) % 3 for a in self.u)
        # U0 . shift(U0, d) square-free; squares ending inside the first
        # half would be squares of U0 itself, already excluded.
        for shifted in (p1, p2):
            buf = (pu << (2 * k)) | shifted
            if _square_ending_in(buf, 2 * k, k, masks):
                self._cut("u-self-concat")
                return False
        # heads of U0, U1, U2 against tails of U0, U1, U2: the shifted
        # comparisons collapse to head(U0) against all three shifts of
        # tail(U0).  Head against head and tail against tail are distinct
        # automatically for distinct shifts.
        for r in range(self.half, k):
            head = pu >> ((k - r) << 1)
            mr = masks[r]
            if head == (pu & mr) or head == (p1 & mr) or head == (p2 & mr):
                self._cut("u-self-headtail")
                return False
        self._pu_shifts = (pu, p1, p2)
        return True

    def _v_setup(self):
        k = self.k
        masks = self.masks
        pu, p1, p2 = self._pu_shifts
        self.pb1 = pu
        self.pb2 = pu
        forbid = {}
        for r in range(self.half, k):
            shift_bits = (k - r) << 1
            mr = masks[r]
            forbid[r] = frozenset(
                (pu >> shift_bits, p1 >> shift_bits, p2 >> shift_bits,
                 pu & mr, p1 & mr, p2 & mr)
            )
        self.forbid = forbid

    def _place_v(self, pos: int, x: int) -> bool:
        masks = self.masks
        npv = (self.pv << 2) | x
        if _suffix_square(npv, pos + 1, masks):
            self.seq.append(x)
            self._cut("square-v")
            self.seq.pop()
            return False
        length = self.k + pos + 1
        nb1 = (self.pb1 << 2) | ((x + 1) % 3)
        if _suffix_square(nb1, length, masks):
            self.seq.append(x)
            self._cut("cross-concat-1")
            self.seq.pop()
            return False
        nb2 = (self.pb2 << 2) | ((x + 2) % 3)
        if _suffix_square(nb2, length, masks):
            self.seq.append(x)
            self._cut("cross-concat-2")
            self.seq.pop()
            return False
        r = pos + 1
        if r in self.forbid and npv in self.forbid[r]:
            self.seq.append(x)
            self._cut("head-collision")
            self.seq.pop()
            return False
        self.pv = npv
        self.pb1 = nb1
        self.pb2 = nb2
        self.v.append(x)
        self.seq.append(x)
        return True

    def _leaf(self):
        u0 = Word(self.u)
        v0 = Word(self.v)
        pair = TriplePair(
            u=(u0, shift(u0, 1), shift(u0, 2)),
            v=(v0, shift(v0, 1), shift(v0, 2)),
        )
        if verify(pair).verdict:
            self._record(pair)


class _FullSearcher(_SearcherBase):
    """Assign all six words interleaved, position by position."""

    WORDS = 6

    def __init__(self, cfg, **kw):
        super().__init__(cfg, **kw)
        self.letters = [[] for _ in range(self.WORDS)]
        self.packs = [0] * self.WORDS

    def _extend(self, depth: int):
        if depth == self.stop_depth:
            self.collector(tuple(self.seq))
            return
        if depth == self.WORDS * self.k:
            self._leaf()
            return
        if depth < len(self.prefix):
            cands = (self.prefix[depth],)
        elif depth == 0 and self.cfg.first_letter is not None:
            cands = (self.cfg.first_letter,)
        else:
            cands = (0, 1, 2)
        w = depth % self.WORDS
        pos = depth // self.WORDS
        for x in cands:
            self._attempt()
            if not self._place(w, pos, x):
                continue
            self._extend(depth + 1)
            self.letters[w].pop()
            self.packs[w] >>= 2
            self.seq.pop()

    def _place(self, w: int, pos: int, x: int) -> bool:
        nb = (self.packs[w] << 2) | x
        if _suffix_square(nb, pos + 1, self.masks):
            self.seq.append(x)
            self._cut("square")
            self.seq.pop()
            return False
        r = pos + 1
        if self.half <= r < self.k:
            # words earlier in the round already have length r
            for w2 in range(w):
                if nb == self.packs[w2]:
                    self.seq.append(x)
                    self._cut("head-collision")
                    self.seq.pop()
                    return False
        self.packs[w] = nb
        self.letters[w].append(x)
        self.seq.append(x)
        return True

    def _leaf(self):
        words = [Word(ls) for ls in self.letters]  # file order U0,V0,U1,V1,U2,V2
        pair = make_triple_pair(words)
        if verify(pair).verdict:
            self._record(pair)


def _new_searcher(cfg: SearchConfig, **kw) -> _SearcherBase:
    if cfg.shift_symmetry:
        return _ShiftSearcher(cfg, **kw)
    return _FullSearcher(cfg, **kw)


def _run_single(cfg: SearchConfig, prefix=(), cut_log=None) -> SearchOutcome:
    s = _new_searcher(cfg, prefix=prefix, cut_log=cut_log)
    s.run()
    return SearchOutcome(pairs_found=s.results, nodes_expanded=s.nodes, exhausted=s.exhausted)


def _shard_worker(task):
    cfg, prefix = task
    out = _run_single(cfg, prefix=prefix)
    digit_rows = [
        tuple(str(w) for w in pair.words_in_file_order()) for pair in out.pairs_found
    ]
    return digit_rows, out.nodes_expanded, out.exhausted


def _shard_prefixes(cfg: SearchConfig):
    """Prefixes of the assignment sequence at the shallowest depth that
    yields enough disjoint shards, in lexicographic order."""
    target = cfg.parallel_shards * 4
    total_depth = 2 * cfg.k if cfg.shift_symmetry else 6 * cfg.k
    scan_cfg = replace(cfg, node_budget=None)
    depth = 1
    while True:
        found = []
        s = _new_searcher(scan_cfg, stop_depth=depth, collector=found.append)
        s.run()
        if len(found) >= target or depth >= total_depth or not found:
            return found, s.nodes
        depth += 1


def find_pairs(config: SearchConfig) -> SearchOutcome:
    """Run the configured search.

    The outcome lists every emitted pair (canonical representatives unless
    config.canonical is false), the number of letter placement attempts,
    and whether the whole configured space was covered.  A node budget or a
    result limit that stops the run early reports exhausted=False.
    """
    if config.parallel_shards == 1:
        return _run_single(config)

    prefixes, setup_nodes = _shard_prefixes(config)
    if len(prefixes) <= 1:
        out = _run_single(config)
        out.nodes_expanded += setup_nodes
        return out

    results = []
    seen = set()
    nodes = setup_nodes
    exhausted = True
    truncated = False
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:  # pragma: no cover
        ctx = multiprocessing.get_context()
    consumed = 0
    with ctx.Pool(processes=min(config.parallel_shards, len(prefixes))) as pool:
        stream = pool.imap(_shard_worker, [(config, p) for p in prefixes])
        for digit_rows, shard_nodes, shard_exhausted in stream:
            consumed += 1
            nodes += shard_nodes
            if not shard_exhausted:
                exhausted = False
            for row in digit_rows:
                if config.canonical:
                    if row in seen:
                        continue
                    seen.add(row)
                results.append(make_triple_pair([parse_word(t) for t in row]))
                limit = config.max_results
                if limit is not None and len(results) >= limit:
                    truncated = True
                    break
            if truncated:
                break
    if truncated:
        exhausted = False
    return SearchOutcome(pairs_found=results, nodes_expanded=nodes, exhausted=exhausted)
