"""Generator/relation presentations and their realization as concrete groups.

The surface syntax accepts comma-separated relations over single-letter
generators, e.g. ``"x^4=y^2=e, yx=x^3y"``.  A presentation is realized as a
``CayleyTable`` by coset enumeration over the trivial subgroup (HLT
strategy), which doubles as a finiteness check under a coset budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

from .core import CayleyTable, GroupError, trivial_group

DEFAULT_MAX_COSETS = 4096

_KEYWORDS = ("abelian", "central")


class PresentationError(GroupError):
    """Base class for presentation parsing and enumeration failures."""


class PresentationSyntaxError(PresentationError):
    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} (at offset {offset})")


class UndeclaredGeneratorError(PresentationError):
    def __init__(self, letter: str, offset: int):
        self.letter = letter
        self.offset = offset
        super().__init__(f"generator {letter!r} not declared (at offset {offset})")


class CosetBudgetExceededError(PresentationError):
    """Enumeration outgrew its budget: the group is larger than it, or infinite."""

    def __init__(self, max_cosets: int, defined: int):
        self.max_cosets = max_cosets
        self.defined = defined
        super().__init__(
            f"coset budget {max_cosets} exceeded after defining {defined} cosets"
        )


class OrderMismatchError(PresentationError):
    def __init__(self, found: int, expected: int):
        self.found = found
        self.expected = expected
        super().__init__(f"enumerated order {found}, expected {expected}")


@dataclass(frozen=True)
class Word:
    """A word in the generators: factors (generator index, nonzero exponent).

    Normalized so that adjacent factors use distinct generators and no
    exponent is zero; the empty tuple is the identity word.
    """

    factors: tuple[tuple[int, int], ...]

    @classmethod
    def from_factors(cls, factors: Sequence[tuple[int, int]]) -> "Word":
        stack: list[list[int]] = []
        for gen, exp in factors:
            if exp == 0:
                continue
            if stack and stack[-1][0] == gen:
                stack[-1][1] += exp
                if stack[-1][1] == 0:
                    stack.pop()
            else:
                stack.append([gen, exp])
        return cls(tuple((g, e) for g, e in stack))

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.factors)))

    def concat(self, other: "Word") -> "Word":
        return Word.from_factors(self.factors + other.factors)

    def letters(self) -> tuple[int, ...]:
        """Expand to signed letters: generator g is +(g+1), its inverse -(g+1)."""
        out: list[int] = []
        for g, e in self.factors:
            letter = g + 1 if e > 0 else -(g + 1)
            out.extend([letter] * abs(e))
        return tuple(out)

    @property
    def is_empty(self) -> bool:
        return not self.factors


@dataclass(frozen=True)
class Relation:
    """An equation lhs = rhs between two words."""

    lhs: Word
    rhs: Word

    def relator(self) -> Word:
        return self.lhs.concat(self.rhs.inverse())


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relations: tuple[Relation, ...]
    expected_order: int | None = None
    max_cosets: int = DEFAULT_MAX_COSETS

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be distinct")
        for name in self.generators:
            if len(name) != 1 or not name.islower() or name == "e":
                raise ValueError(f"bad generator name {name!r}")
        k = len(self.generators)
        for rel in self.relations:
            for word in (rel.lhs, rel.rhs):
                for g, _ in word.factors:
                    if not 0 <= g < k:
                        raise ValueError(f"relation uses undeclared generator index {g}")
        if self.expected_order is not None and self.expected_order < 1:
            raise ValueError("expected_order must be at least 1")


def format_word(word: Word, generators: Sequence[str]) -> str:
    if word.is_empty:
        return "e"
    parts = []
    for g, e in word.factors:
        parts.append(generators[g] if e == 1 else f"{generators[g]}^{e}")
    return "".join(parts)


def format_presentation(p: Presentation) -> str:
    """Render back to the surface syntax; parsing the result reproduces ``p``.

    The generator header is emitted only when it cannot be inferred from the
    relations (unused generator, or declaration order differing from first
    use).
    """
    rels = ", ".join(
        f"{format_word(r.lhs, p.generators)}={format_word(r.rhs, p.generators)}"
        for r in p.relations
    )
    if not rels:
        rels = "e=e"
    inferred: list[str] = []
    for r in p.relations:
        for word in (r.lhs, r.rhs):
            for g, _ in word.factors:
                name = p.generators[g]
                if name not in inferred:
                    inferred.append(name)
    if tuple(inferred) == p.generators:
        return rels
    return ", ".join(p.generators) + "; " + rels


# --- parsing ---------------------------------------------------------------


@dataclass
class _Scanner:
    text: str
    pos: int = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch


@dataclass
class _WordNode:
    factors: list[tuple[str, int, int]] = field(default_factory=list)  # letter, exp, offset


def _scan_int(s: _Scanner) -> int:
    start = s.pos
    if s.peek() == "-":
        s.take()
    if not s.peek().isdigit():
        raise PresentationSyntaxError("expected an integer exponent", s.pos)
    while s.peek().isdigit():
        s.take()
    return int(s.text[start : s.pos])


def _parse_word(s: _Scanner, stop: str) -> _WordNode:
    node = _WordNode()
    saw_token = False
    while True:
        s.skip_ws()
        ch = s.peek()
        if ch == "" or ch in stop:
            if not saw_token:
                raise PresentationSyntaxError("expected a word", s.pos)
            return node
        if not ch.isalpha():
            raise PresentationSyntaxError(f"unexpected character {ch!r}", s.pos)
        offset = s.pos
        s.take()
        saw_token = True
        if ch == "e":
            if s.peek() == "^":
                raise PresentationSyntaxError("identity cannot take an exponent", s.pos)
            continue
        if not ch.islower():
            raise PresentationSyntaxError(f"generators are lowercase letters, got {ch!r}", offset)
        exp = 1
        s.skip_ws()
        if s.peek() == "^":
            s.take()
            s.skip_ws()
            exp = _scan_int(s)
        node.factors.append((ch, exp, offset))


def parse_presentation(text: str, max_cosets: int = DEFAULT_MAX_COSETS) -> Presentation:
    """Parse the relation language into a Presentation.

    Grammar: relations separated by commas; a relation is a chain
    ``w1=w2=...=wk`` expanded pairwise; a word juxtaposes ``gen`` or
    ``gen^exp`` factors; ``e`` is the empty word.  The pseudo-relation
    ``abelian`` imposes commutativity of all generator pairs, and
    ``central(w)`` makes the word w commute with every generator.  An
    optional header ``a, b; ...`` declares the generators explicitly;
    without it they are inferred in order of first appearance.
    """
    if not text.strip():
        raise PresentationSyntaxError("empty input", 0)

    declared: list[str] | None = None
    s = _Scanner(text)
    if ";" in text:
        head = text[: text.index(";")]
        declared = []
        hs = _Scanner(head)
        while True:
            hs.skip_ws()
            if hs.peek() == "":
                break
            ch = hs.take()
            if not (ch.isalpha() and ch.islower() and ch != "e"):
                raise PresentationSyntaxError(
                    f"bad generator declaration {ch!r}", hs.pos - 1
                )
            if ch in declared:
                raise PresentationSyntaxError(f"duplicate generator {ch!r}", hs.pos - 1)
            declared.append(ch)
            hs.skip_ws()
            if hs.peek() == ",":
                hs.take()
        s = _Scanner(text)
        s.pos = text.index(";") + 1

    # First pass: collect chains and pseudo-relations without resolving
    # generator indices (``abelian`` needs the full generator set).
    chains: list[list[_WordNode]] = []
    pseudos: list[tuple[str, _WordNode | None, int]] = []
    while True:
        s.skip_ws()
        if s.peek() == "":
            break
        offset = s.pos
        run_end = s.pos
        while run_end < len(s.text) and s.text[run_end].isalpha():
            run_end += 1
        run = s.text[s.pos : run_end]
        if run in _KEYWORDS:
            s.pos = run_end
            if run == "central":
                s.skip_ws()
                if s.peek() != "(":
                    raise PresentationSyntaxError("central needs a parenthesized word", s.pos)
                s.take()
                w = _parse_word(s, ")")
                if s.peek() != ")":
                    raise PresentationSyntaxError("unclosed central(...)", s.pos)
                s.take()
                pseudos.append(("central", w, offset))
            else:
                pseudos.append(("abelian", None, offset))
        else:
            chain = [_parse_word(s, "=,")]
            if s.peek() != "=":
                raise PresentationSyntaxError("a relation needs at least one '='", s.pos)
            while s.peek() == "=":
                s.take()
                chain.append(_parse_word(s, "=,"))
            chains.append(chain)
        s.skip_ws()
        if s.peek() == ",":
            s.take()
        elif s.peek() != "":
            raise PresentationSyntaxError(f"unexpected character {s.peek()!r}", s.pos)

    # Resolve the generator set.
    order_seen: list[str] = []
    all_nodes = [w for chain in chains for w in chain]
    all_nodes += [w for _, w, _ in pseudos if w is not None]
    for node in all_nodes:
        for letter, _, offset in node.factors:
            if declared is not None and letter not in declared:
                raise UndeclaredGeneratorError(letter, offset)
            if letter not in order_seen:
                order_seen.append(letter)
    generators = tuple(declared) if declared is not None else tuple(order_seen)
    index = {name: i for i, name in enumerate(generators)}

    def to_word(node: _WordNode) -> Word:
        return Word.from_factors([(index[l], e) for l, e, _ in node.factors])

    relations: list[Relation] = []

    def add(lhs: Word, rhs: Word):
        rel = Relation(lhs, rhs)
        if not rel.relator().is_empty:
            relations.append(rel)

    for chain in chains:
        words = [to_word(w) for w in chain]
        for lhs, rhs in zip(words, words[1:]):
            add(lhs, rhs)
    for kind, node, _ in pseudos:
        if kind == "abelian":
            for i in range(len(generators)):
                for j in range(i + 1, len(generators)):
                    gi = Word.from_factors([(i, 1)])
                    gj = Word.from_factors([(j, 1)])
                    add(gi.concat(gj), gj.concat(gi))
        else:
            w = to_word(node)
            for i in range(len(generators)):
                gi = Word.from_factors([(i, 1)])
                add(w.concat(gi), gi.concat(w))

    return Presentation(generators, tuple(relations), None, max_cosets)


def with_expected_order(p: Presentation, expected_order: int | None) -> Presentation:
    return replace(p, expected_order=expected_order)


# --- coset enumeration -----------------------------------------------------


def coset_enumerate(p: Presentation) -> CayleyTable:
    """Realize a presentation as a group via HLT coset enumeration.

    Cosets of the trivial subgroup are the group elements; new cosets are
    numbered in definition order and relators are scanned in declaration
    order, so the output is fully deterministic.  Raises
    CosetBudgetExceededError when more than ``max_cosets`` cosets get
    defined, and OrderMismatchError when ``expected_order`` is set and
    differs from the result.
    """
    return realize_presentation(p)[0]


def realize_presentation(p: Presentation) -> tuple[CayleyTable, dict[str, int]]:
    """Enumerate a presentation and also report each generator's element id."""
    k = len(p.generators)
    if k == 0:
        if p.expected_order not in (None, 1):
            raise OrderMismatchError(1, p.expected_order)
        return trivial_group(), {}

    nletters = 2 * k  # letter 2i is generator i, letter 2i+1 its inverse

    def to_letters(word: Word) -> tuple[int, ...]:
        return tuple(
            2 * (abs(l) - 1) + (0 if l > 0 else 1) for l in word.letters()
        )

    relators = [to_letters(rel.relator()) for rel in p.relations]

    table: list[list[int | None]] = [[None] * nletters]
    rep: list[int] = [0]
    pending: list[int] = []

    def find(c: int) -> int:
        r = c
        while rep[r] != r:
            r = rep[r]
        while rep[c] != r:
            rep[c], c = r, rep[c]
        return r

    def define(a: int, x: int):
        if len(table) >= p.max_cosets:
            raise CosetBudgetExceededError(p.max_cosets, len(table))
        b = len(table)
        table.append([None] * nletters)
        rep.append(b)
        table[a][x] = b
        table[b][x ^ 1] = a

    def merge(a: int, b: int):
        a, b = find(a), find(b)
        if a != b:
            lo, hi = (a, b) if a < b else (b, a)
            rep[hi] = lo
            pending.append(hi)

    def coincidence(a: int, b: int):
        merge(a, b)
        while pending:
            dead = pending.pop(0)
            for x in range(nletters):
                d = table[dead][x]
                if d is None:
                    continue
                table[d][x ^ 1] = None
                mu, nu = find(dead), find(d)
                if table[mu][x] is not None:
                    merge(nu, table[mu][x])
                elif table[nu][x ^ 1] is not None:
                    merge(mu, table[nu][x ^ 1])
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def scan_and_fill(a: int, w: tuple[int, ...]):
        f, i = a, 0
        b, j = a, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] is not None:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][w[j] ^ 1] is not None:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return
            define(f, w[i])

    alpha = 0
    while alpha < len(table):
        if find(alpha) == alpha:
            for w in relators:
                if not w:
                    continue
                scan_and_fill(alpha, w)
                if find(alpha) != alpha:
                    break
            if find(alpha) == alpha:
                for x in range(nletters):
                    if table[alpha][x] is None:
                        define(alpha, x)
        alpha += 1

    alive = [c for c in range(len(table)) if find(c) == c]
    renum = {c: i for i, c in enumerate(alive)}
    n = len(alive)
    act = [[renum[find(table[c][x])] for x in range(nletters)] for c in alive]

    if p.expected_order is not None and n != p.expected_order:
        raise OrderMismatchError(n, p.expected_order)

    # Shortest positive words for each element, by breadth-first search in
    # generator declaration order; these give labels and the full table.
    words: list[tuple[int, ...] | None] = [None] * n
    words[0] = ()
    queue = [0]
    while queue:
        cur = queue.pop(0)
        for gi in range(k):
            nxt = act[cur][2 * gi]
            if words[nxt] is None:
                words[nxt] = words[cur] + (gi,)
                queue.append(nxt)

    def word_label(ws: tuple[int, ...]) -> str:
        if not ws:
            return "e"
        runs: list[list[int]] = []
        for gi in ws:
            if runs and runs[-1][0] == gi:
                runs[-1][1] += 1
            else:
                runs.append([gi, 1])
        return "".join(
            p.generators[g] if c == 1 else f"{p.generators[g]}^{c}" for g, c in runs
        )

    labels = tuple(word_label(w) for w in words)
    rows = []
    for a in range(n):
        row = []
        for b in range(n):
            cur = a
            for gi in words[b]:
                cur = act[cur][2 * gi]
            row.append(cur)
        rows.append(tuple(row))
    group = CayleyTable(n, tuple(rows), labels)
    images = {p.generators[i]: act[0][2 * i] for i in range(k)}
    return group, images


def evaluate_word(
    g: CayleyTable,
    assignment: Mapping[str, int],
    word: Word,
    generators: Sequence[str],
) -> int:
    """Fold a word through the group under a generator-to-element assignment."""
    acc = 0
    for gi, exp in word.factors:
        name = generators[gi]
        if name not in assignment:
            raise KeyError(f"assignment missing generator {name!r}")
        acc = g.mul(acc, g.power(assignment[name], exp))
    return acc


def satisfies_relations(
    g: CayleyTable, assignment: Mapping[str, int], p: Presentation
) -> bool:
    """True iff every relator evaluates to the identity under the assignment."""
    return all(
        evaluate_word(g, assignment, rel.relator(), p.generators) == 0
        for rel in p.relations
    )
