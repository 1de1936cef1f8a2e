"""Rooted trees with unordered children, canonical forms, and enumerators.

Labels are ints (enumerative contexts), alphanumeric strings (parsed
literals, plus the reserved pointer label "*"), or sorted tuples of ints
(color multisets and subset decorations).  Children are stored sorted by a
fixed total order on canonical encodings, so structural equality of
canonical trees is exactly the intended equality: labelled-tree equality
when labels are distinct, iso-class equality for colored trees.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from .errors import (
    DuplicateLabelError,
    ResourceLimitError,
    TreeParseError,
)

Label = int | str | tuple

STAR = "*"


def label_key(label: Label) -> tuple:
    """Total order on labels: ints, then tuples, then strings, then "*"."""
    if isinstance(label, int):
        return (0, label, "")
    if isinstance(label, tuple):
        return (1, label, "")
    if label == STAR:
        return (3, 0, "")
    return (2, 0, label)


@dataclass(frozen=True)
class RootedTree:
    label: Label
    children: tuple[RootedTree, ...] = ()

    @cached_property
    def sort_key(self) -> tuple:
        return (label_key(self.label), tuple(c.sort_key for c in self.children))

    @cached_property
    def size(self) -> int:
        return 1 + sum(c.size for c in self.children)

    @cached_property
    def weight(self) -> int:
        """Total size counting a tuple label as its length (multiset size)."""
        w = len(self.label) if isinstance(self.label, tuple) else 1
        return w + sum(c.weight for c in self.children)

    def labels(self) -> set[Label]:
        out = {self.label}
        for c in self.children:
            out |= c.labels()
        return out

    def vertices(self) -> list[Label]:
        """Vertex labels in canonical preorder."""
        out = [self.label]
        for c in self.children:
            out.extend(c.vertices())
        return out

    def __str__(self) -> str:
        return format_tree(self)


def tree(label: Label, children: Iterable[RootedTree] = ()) -> RootedTree:
    """Canonical constructor: children get sorted into canonical order."""
    kids = tuple(sorted(children, key=lambda c: c.sort_key))
    return RootedTree(label, kids)


def leaf(label: Label) -> RootedTree:
    return RootedTree(label, ())


def relabel(t: RootedTree, mapping: Mapping[Label, Label]) -> RootedTree:
    return tree(mapping[t.label], (relabel(c, mapping) for c in t.children))


def _label_str(label: Label) -> str:
    if isinstance(label, tuple):
        return "{" + ",".join(str(x) for x in label) + "}"
    return str(label)


def format_tree(t: RootedTree) -> str:
    if not t.children:
        return _label_str(t.label)
    return _label_str(t.label) + "(" + ",".join(format_tree(c) for c in t.children) + ")"


def parse_tree(text: str, allow_repeats: bool = False) -> RootedTree:
    """Parse ``LABEL`` or ``LABEL(tree,...)``; whitespace is insignificant.

    All-digit labels become ints so parsed literals compare equal to
    enumerated trees.  Repeated labels are rejected unless
    ``allow_repeats`` (colored mode) is set.
    """
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def read_label() -> Label:
        nonlocal pos
        skip_ws()
        if pos < len(text) and text[pos] == STAR:
            pos += 1
            return STAR
        start = pos
        while pos < len(text) and text[pos].isalnum():
            pos += 1
        if pos == start:
            raise TreeParseError("expected a label", pos)
        token = text[start:pos]
        return int(token) if token.isdigit() else token

    def read_tree() -> RootedTree:
        nonlocal pos
        lbl = read_label()
        skip_ws()
        kids = []
        if pos < len(text) and text[pos] == "(":
            pos += 1
            kids.append(read_tree())
            skip_ws()
            while pos < len(text) and text[pos] == ",":
                pos += 1
                kids.append(read_tree())
                skip_ws()
            if pos >= len(text) or text[pos] != ")":
                raise TreeParseError("expected ',' or ')'", pos)
            pos += 1
        return tree(lbl, kids)

    result = read_tree()
    skip_ws()
    if pos != len(text):
        raise TreeParseError("trailing input after tree", pos)
    if not allow_repeats:
        seen: set[Label] = set()
        for lbl in result.vertices():
            if lbl in seen:
                raise DuplicateLabelError(f"label {lbl!r} occurs twice")
            seen.add(lbl)
    return result


@dataclass
class Limits:
    """Resource bounds; defaults keep every enumeration under ~10^6 objects."""

    max_labelled: int = 8
    max_colored_weight: int = 12


DEFAULT_LIMITS = Limits()


def _acyclic(parents: tuple[int, ...], n: int) -> bool:
    # parents[i] is the parent of vertex i+1; vertex 0 is the root.
    for start in range(1, n):
        v = start
        steps = 0
        while v != 0:
            v = parents[v - 1]
            steps += 1
            if steps > n:
                return False
    return True


def _trees_from_parents(
    labels: tuple, parents: tuple[int, ...], n: int
) -> RootedTree:
    kids: list[list[int]] = [[] for _ in range(n)]
    for i, p in enumerate(parents):
        kids[p].append(i + 1)

    def build(v: int) -> RootedTree:
        return tree(labels[v], (build(w) for w in kids[v]))

    return build(0)


def enumerate_labelled_on(labels: Iterable[Label]) -> Iterator[RootedTree]:
    """All rooted trees on the given distinct labels, each exactly once.

    Runs over every root choice and every parent map from the non-root
    vertices, keeping the acyclic ones; the total count is n^(n-1).
    """
    lbls = tuple(labels)
    n = len(lbls)
    if n == 0:
        return
    if n == 1:
        yield leaf(lbls[0])
        return
    for root in range(n):
        order = (lbls[root],) + lbls[:root] + lbls[root + 1 :]
        for parents in itertools.product(range(n), repeat=n - 1):
            if _acyclic(parents, n):
                yield _trees_from_parents(order, parents, n)


def enumerate_labelled(n: int, limits: Limits = DEFAULT_LIMITS) -> list[RootedTree]:
    """All rooted trees on labels {1..n}, canonical, count n^(n-1)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > limits.max_labelled:
        raise ResourceLimitError(
            f"n={n} exceeds the labelled-tree bound {limits.max_labelled}"
        )
    return list(enumerate_labelled_on(range(1, n + 1)))


def has_no_single_child(t: RootedTree) -> bool:
    """True iff every vertex has either zero or at least two children."""
    if len(t.children) == 1:
        return False
    return all(has_no_single_child(c) for c in t.children)


def count_rt_ne1(n: int, limits: Limits = DEFAULT_LIMITS) -> int:
    """Number of labelled rooted trees on {1..n} with no single-child vertex.

    Brute force over parent maps.  The root may be fixed and the count
    multiplied by n, because relabelling swaps the root label without
    touching child counts.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > limits.max_labelled:
        raise ResourceLimitError(
            f"n={n} exceeds the labelled-tree bound {limits.max_labelled}"
        )
    if n == 1:
        return 1
    found = 0
    rng = range(n)
    for parents in itertools.product(rng, repeat=n - 1):
        counts = [0] * n
        for p in parents:
            counts[p] += 1
        if 1 in counts:
            continue
        if _acyclic(parents, n):
            found += 1
    return n * found


def rt_ne1_series_brute(order: int, limits: Limits = DEFAULT_LIMITS):
    """EGF of no-single-child labelled trees, counts from brute force.

    Counts beyond ``limits.max_labelled`` come from the functional equation
    t = x(e^t - t) instead (series module); the two routes are checked
    against each other in the tests on their common range.
    """
    from .series import PowerSeries, no_single_child_tree_series

    fixed_point = no_single_child_tree_series(order).counts()
    counts = [0]
    for n in range(1, order + 1):
        if n <= limits.max_labelled:
            counts.append(count_rt_ne1(n, limits))
        else:
            counts.append(fixed_point[n])
    return PowerSeries.from_counts(counts)


def _colored_trees(
    m: int, k: int, no_single_child: bool, multiset: bool
) -> list[RootedTree]:
    key = (m, k, no_single_child, multiset)
    cache = _colored_trees.cache
    if key in cache:
        return cache[key]

    smaller: list[RootedTree] = []
    for j in range(1, k):
        smaller.extend(_colored_trees(m, j, no_single_child, multiset))
    smaller.sort(key=lambda t: t.sort_key)

    def child_multisets(budget: int, start: int) -> Iterator[tuple[RootedTree, ...]]:
        if budget == 0:
            yield ()
            return
        for i in range(start, len(smaller)):
            t = smaller[i]
            if t.weight > budget:
                continue
            for rest in child_multisets(budget - t.weight, i):
                yield (t,) + rest

    out = []
    if multiset:
        root_labels = [
            (s, lab)
            for s in range(1, k + 1)
            for lab in itertools.combinations_with_replacement(range(1, m + 1), s)
        ]
    else:
        root_labels = [(1, c) for c in range(1, m + 1)]
    for s, lab in root_labels:
        for kids in child_multisets(k - s, 0):
            if no_single_child and len(kids) == 1:
                continue
            out.append(tree(lab, kids))
    cache[key] = out
    return out


_colored_trees.cache = {}


def enumerate_colored_iso(
    m: int,
    k: int,
    no_single_child: bool = False,
    multiset: bool = False,
    limits: Limits = DEFAULT_LIMITS,
) -> list[RootedTree]:
    """Iso-classes of rooted trees with k vertices colored from {1..m}.

    In multiset mode every vertex carries a nonempty sorted multiset of
    colors and k is the total multiset size (the weight of the monomial).
    The optional filter keeps only trees where no vertex has exactly one
    child.
    """
    if m < 1 or k < 1:
        raise ValueError("m and k must be positive")
    if k > limits.max_colored_weight:
        raise ResourceLimitError(
            f"k={k} exceeds the colored-tree bound {limits.max_colored_weight}"
        )
    found = _colored_trees(m, k, no_single_child, multiset)
    return sorted(found, key=lambda t: t.sort_key)


def frame(t: RootedTree) -> list[Label]:
    """Initial root path of single-child vertices plus its terminator.

    The walk from the root follows single children and stops at (and
    includes) the first vertex with at least two children or a leaf.
    """
    out = [t.label]
    node = t
    while len(node.children) == 1:
        node = node.children[0]
        out.append(node.label)
    return out


class TreeCombination:
    """Formal linear combination of canonical trees over exact rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[RootedTree, Fraction | int] | None = None):
        clean: dict[RootedTree, Fraction] = {}
        if terms:
            for t, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    clean[t] = c
        self.terms = clean

    @classmethod
    def of(cls, t: RootedTree, coeff: Fraction | int = 1) -> TreeCombination:
        return cls({t: Fraction(coeff)})

    @classmethod
    def zero(cls) -> TreeCombination:
        return cls()

    def __eq__(self, other) -> bool:
        return isinstance(other, TreeCombination) and self.terms == other.terms

    def __add__(self, other: TreeCombination) -> TreeCombination:
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, Fraction(0)) + c
        return TreeCombination(out)

    def __sub__(self, other: TreeCombination) -> TreeCombination:
        return self + other.scale(-1)

    def scale(self, factor: Fraction | int) -> TreeCombination:
        f = Fraction(factor)
        return TreeCombination({t: f * c for t, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda tc: tc[0].sort_key))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for t, c in self:
            prefix = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            bits.append(prefix + format_tree(t))
        return " + ".join(bits).replace("+ -", "- ")
