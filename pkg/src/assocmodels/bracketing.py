"""Bracketings of a word: sets of non-crossing letter intervals.

A bracket is a pair (l, r) of 1-indexed letter positions with
l < r and (l, r) != (1, n); the trivial full bracket is excluded.
The canonical text form writes letters a1..aN with parentheses,
e.g. "a1(a2a3)a4".
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property


class BracketingError(ValueError):
    pass


def _crossing(b1, b2):
    (l1, r1), (l2, r2) = sorted((b1, b2))
    return l1 < l2 <= r1 < r2


@dataclass(frozen=True)
class Bracketing:
    """A face of the associahedron on an n-letter word."""

    n: int
    brackets: frozenset

    def __post_init__(self):
        if self.n < 2:
            raise BracketingError("word needs at least 2 letters")
        object.__setattr__(self, "brackets", frozenset(map(tuple, self.brackets)))
        for l, r in self.brackets:
            if not (1 <= l < r <= self.n):
                raise BracketingError(f"bad bracket ({l},{r}) for n={self.n}")
            if (l, r) == (1, self.n):
                raise BracketingError("trivial full bracket is excluded")
        bs = sorted(self.brackets)
        for i, b1 in enumerate(bs):
            for b2 in bs[i + 1:]:
                if _crossing(b1, b2):
                    raise BracketingError(f"crossing brackets {b1} and {b2}")

    @property
    def dimension(self):
        return self.n - 2 - len(self.brackets)

    @cached_property
    def text(self):
        opens = {i: 0 for i in range(1, self.n + 1)}
        closes = {i: 0 for i in range(1, self.n + 1)}
        for l, r in self.brackets:
            opens[l] += 1
            closes[r] += 1
        out = []
        for i in range(1, self.n + 1):
            out.append("(" * opens[i] + f"a{i}" + ")" * closes[i])
        return "".join(out)

    def __str__(self):
        return self.text

    def to_json(self):
        return json.dumps({"n": self.n, "brackets": sorted(map(list, self.brackets))})

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls(data["n"], frozenset(map(tuple, data["brackets"])))

    @classmethod
    def from_text(cls, text):
        """Parse the canonical "a1(a2a3)a4" form."""
        tokens = re.findall(r"\(|\)|a\d+", text)
        if "".join(tokens) != text:
            raise BracketingError(f"cannot parse {text!r}")
        stack = []
        brackets = set()
        pos = 0
        for tok in tokens:
            if tok == "(":
                stack.append(pos + 1)
            elif tok == ")":
                if not stack:
                    raise BracketingError("unbalanced parentheses")
                brackets.add((stack.pop(), pos))
            else:
                pos += 1
                if tok != f"a{pos}":
                    raise BracketingError(f"expected a{pos}, got {tok}")
        if stack:
            raise BracketingError("unbalanced parentheses")
        return cls(pos, frozenset(brackets))

    def remove(self, bracket):
        return Bracketing(self.n, self.brackets - {tuple(bracket)})
