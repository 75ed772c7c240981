"""Evaluate group words such as ``(y x^2)^2`` or ``[x^-1 y x, y] = 1``.

Generators are single letters; juxtaposition or ``*`` multiplies,
``a^k`` is a power, ``a^b`` is the conjugate ``b^-1 a b`` and ``[a, b]`` is
the commutator ``a^-1 b^-1 a b``. A relation ``u = v`` holds when both sides
evaluate to the same element; a bare word must evaluate to the identity.
"""

from __future__ import annotations

import re
from typing import Mapping

from .errors import MalformedExpression
from .groups import FiniteGroup

_TOK = re.compile(r"\s*(?:([a-z])|(-?\d+)|([()\[\],=^*{}]))")


def _tokens(text: str) -> list[str]:
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        mt = _TOK.match(text, pos)
        if not mt or mt.end() == pos:
            raise MalformedExpression(f"cannot parse {text!r} at {pos}")
        out.append(mt.group(mt.lastindex))
        pos = mt.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Eval:
    def __init__(self, G: FiniteGroup, gens: Mapping[str, int], text: str):
        self.G, self.gens, self.text = G, gens, text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise MalformedExpression(f"expected {expected or 'token'} in {self.text!r}")
        self.i += 1
        return tok

    def relation(self) -> tuple[int, int]:
        lhs = self.word()
        rhs = self.G.identity
        if self.peek() == "=":
            self.take("=")
            rhs = self.word()
        if self.peek() is not None:
            raise MalformedExpression(f"trailing input in {self.text!r}")
        return lhs, rhs

    def word(self) -> int:
        acc = self.term()
        while self.peek() is not None and self.peek() not in {")", "]", ",", "=", "}"}:
            if self.peek() == "*":
                self.take("*")
            acc = self.G.mul(acc, self.term())
        return acc

    def term(self) -> int:
        x = self.base()
        while self.peek() == "^":
            self.take("^")
            if self.peek() == "{":
                self.take("{")
                if self.peek().lstrip("-").isdigit():
                    x = self.G.power(x, int(self.take()))
                else:
                    b = self.word()
                    x = self.G.product(int(self.G.inverse[b]), x, b)
                self.take("}")
                continue
            tok = self.take()
            if tok.isalpha():
                b = self._gen(tok)
                x = self.G.product(int(self.G.inverse[b]), x, b)
            else:
                x = self.G.power(x, int(tok))
        return x

    def base(self) -> int:
        tok = self.take()
        if tok == "(":
            x = self.word()
            self.take(")")
            return x
        if tok == "[":
            a = self.word()
            self.take(",")
            b = self.word()
            self.take("]")
            inv = self.G.inverse
            return self.G.product(int(inv[a]), int(inv[b]), a, b)
        if tok.isalpha():
            return self._gen(tok)
        if tok == "1":
            return self.G.identity
        raise MalformedExpression(f"unexpected {tok!r} in {self.text!r}")

    def _gen(self, name: str) -> int:
        try:
            return self.gens[name]
        except KeyError:
            raise MalformedExpression(f"unknown generator {name!r} in {self.text!r}") from None


def evaluate(G: FiniteGroup, gens: Mapping[str, int], word: str) -> int:
    ev = _Eval(G, gens, word)
    x = ev.word()
    if ev.peek() is not None:
        raise MalformedExpression(f"trailing input in {word!r}")
    return x


def relation_holds(G: FiniteGroup, gens: Mapping[str, int], relation: str) -> bool:
    lhs, rhs = _Eval(G, gens, relation).relation()
    return lhs == rhs
