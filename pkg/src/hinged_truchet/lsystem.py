"""Words over {L, R, h, v} and the two hinge rewriting rules.

A word alternates turn letters (L, R) with crossing letters (h, v), and the
crossings themselves alternate h, v.  Operation 0 and operation 1 rewrite
every crossing into three symbols and leave turns alone.
"""
from dataclasses import dataclass

TURNS = "LR"
CROSSINGS = "hv"
SYMBOLS = TURNS + CROSSINGS

RULES = {
    0: {"h": "hLv", "v": "hRv"},
    1: {"h": "hRv", "v": "hLv"},
}
_TABLES = {op: str.maketrans(r) for op, r in RULES.items()}

# 2**24 segments is the largest curve we agree to build
MAX_SEGMENTS = 1 << 24


class WordError(ValueError):
    pass


class DepthLimitError(ValueError):
    pass


def _check(symbols, closed):
    if not symbols:
        raise WordError("empty word")
    bad = set(symbols) - set(SYMBOLS)
    if bad:
        raise WordError("illegal character(s): %s" % "".join(sorted(bad)))
    for i in range(1, len(symbols)):
        if (symbols[i] in TURNS) == (symbols[i - 1] in TURNS):
            raise WordError("turns and crossings must alternate (position %d)" % i)
    cr = [c for c in symbols if c in CROSSINGS]
    for i in range(1, len(cr)):
        if cr[i] == cr[i - 1]:
            raise WordError("crossings must alternate h/v")
    if closed:
        if len(symbols) % 2:
            raise WordError("closed word must have even length")
        if (symbols[0] in TURNS) == (symbols[-1] in TURNS):
            raise WordError("closed word must alternate cyclically")
        if len(cr) % 2:
            raise WordError("closed word needs an even number of crossings")


@dataclass(frozen=True, eq=False)
class Word:
    symbols: str
    closed: bool = False

    def __post_init__(self):
        _check(self.symbols, self.closed)

    def __str__(self):
        return self.symbols

    def __repr__(self):
        return "Word(%r%s)" % (self.symbols, ", closed" if self.closed else "")

    def __len__(self):
        return len(self.symbols)

    def __eq__(self, other):
        # plain strings compare by symbols so tests can write apply_op("v", 0) == "hRv"
        if isinstance(other, str):
            return self.symbols == other
        if isinstance(other, Word):
            return self.symbols == other.symbols and self.closed == other.closed
        return NotImplemented

    def __hash__(self):
        return hash((self.symbols, self.closed))

    @property
    def crossings(self):
        return self.symbols.count("h") + self.symbols.count("v")

    @property
    def turns(self):
        return len(self.symbols) - self.crossings


def as_word(w, closed=False):
    if isinstance(w, Word):
        return w
    return Word(str(w), closed)


def expand_turns(turns):
    """Interleave crossings into a closed turn-only seed: t1 v t2 h t3 v ..."""
    if not turns or set(turns) - set(TURNS):
        raise WordError("expected a nonempty string of L/R")
    if len(turns) % 2:
        raise WordError("odd number of turn letters cannot close up")
    out = []
    for i, t in enumerate(turns):
        out.append(t)
        out.append("v" if i % 2 == 0 else "h")
    return Word("".join(out), closed=True)


def parse_ops(bits):
    if isinstance(bits, str):
        if set(bits) - set("01"):
            raise WordError("operation string must be over 0/1: %r" % bits)
        return tuple(int(c) for c in bits)
    out = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in out):
        raise WordError("operations must be 0 or 1")
    return out


def ops_prefix(B, k):
    """First k bits of the periodic sequence B repeated forever."""
    B = parse_ops(B)
    if k and not B:
        raise WordError("need a nonempty period")
    return tuple(B[i % len(B)] for i in range(k))


def mirror(B):
    return tuple(1 - b for b in parse_ops(B))


def apply_op(w, op):
    w = as_word(w)
    if op not in RULES:
        raise WordError("operation must be 0 or 1")
    return Word(w.symbols.translate(_TABLES[op]), w.closed)


def apply_ops(w, B, limit=MAX_SEGMENTS):
    w = as_word(w)
    B = parse_ops(B)
    if w.crossings << len(B) > limit:
        raise DepthLimitError("%d segments exceeds the limit of %d"
                              % (w.crossings << len(B), limit))
    s = w.symbols
    for op in B:
        s = s.translate(_TABLES[op])
    # rewriting preserves validity, skip the O(n) recheck
    out = object.__new__(Word)
    object.__setattr__(out, "symbols", s)
    object.__setattr__(out, "closed", w.closed)
    return out


@dataclass(frozen=True)
class Script:
    ops: tuple
    seed: Word

    @property
    def closed(self):
        return self.seed.closed

    def word(self, limit=MAX_SEGMENTS):
        return apply_ops(self.seed, self.ops, limit)


def parse_script(text):
    if not isinstance(text, str) or not text:
        raise WordError("empty script")
    if any(c.isspace() for c in text):
        raise WordError("whitespace is not allowed in scripts")
    bad = set(text) - set("01" + SYMBOLS)
    if bad:
        raise WordError("illegal character(s): %s" % "".join(sorted(bad)))
    i = 0
    while i < len(text) and text[i] in "01":
        i += 1
    ops, rest = text[:i], text[i:]
    if not rest:
        raise WordError("script has no seed word")
    if set(rest) - set(SYMBOLS):
        raise WordError("digits after the seed word")
    if set(rest) <= set(TURNS):
        seed = expand_turns(rest)
    else:
        seed = Word(rest, closed=False)
    return Script(parse_ops(ops), seed)


def render_script(script):
    ops = "".join(str(b) for b in script.ops)
    s = script.seed.symbols
    if script.seed.closed:
        # closed seeds came from turn letters; drop the interleaved crossings
        if expand_turns(s[0::2]).symbols != s:
            raise WordError("closed seed has no turn-letter spelling")
        return ops + s[0::2]
    return ops + s
