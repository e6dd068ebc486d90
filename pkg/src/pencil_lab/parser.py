"""Recursive-descent parser for polynomial expressions in two variables.

Grammar (whitespace-insensitive, no implicit multiplication):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' nat)?
    base   := nat | nat '/' nat | var | '(' expr ')' | '-' base

Errors carry the byte offset of the offending token.
"""

from fractions import Fraction

from .kernel.bipoly import BivariatePolynomial
from .kernel.fields import QQ


class ParseError(ValueError):
    def __init__(self, message, offset):
        super().__init__("%s (at offset %d)" % (message, offset))
        self.offset = offset


class UnknownVariableError(ParseError):
    pass


# AST nodes: ("num", Fraction) | ("var", name) | ("neg", node)
#            | ("+"|"-"|"*", left, right) | ("^", node, nat)


def tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("nat", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError("unexpected character %r" % ch, i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens, varnames):
        self.tokens = tokens
        self.pos = 0
        self.varnames = varnames

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError("expected %s, found %r" % (kind, tok[1]), tok[2])
        self.pos += 1
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError("trailing input %r" % tok[1], tok[2])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            node = (op, node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "*":
            self.take()
            rhs = self.factor()
            node = ("*", node, rhs)
        return node

    def factor(self):
        node = self.base()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("nat")
            node = ("^", node, tok[1])
        return node

    def base(self):
        tok = self.peek()
        if tok[0] == "nat":
            self.take()
            if self.peek()[0] == "/":
                self.take()
                den = self.take("nat")
                if den[1] == 0:
                    raise ParseError("zero denominator", den[2])
                return ("num", Fraction(tok[1], den[1]))
            return ("num", Fraction(tok[1]))
        if tok[0] == "name":
            self.take()
            if tok[1] not in self.varnames:
                raise UnknownVariableError(
                    "unknown variable %r (declared: %s)"
                    % (tok[1], ", ".join(self.varnames)),
                    tok[2],
                )
            return ("var", tok[1])
        if tok[0] == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if tok[0] == "-":
            self.take()
            return ("neg", self.base())
        raise ParseError("expected a number, variable, or group", tok[2])


def parse_expression(text, varnames=("X", "Y")):
    return _Parser(tokenize(text), tuple(varnames)).parse()


def lower(node, varnames=("X", "Y"), field=QQ):
    """AST to BivariatePolynomial."""
    kind = node[0]
    if kind == "num":
        return BivariatePolynomial.constant(
            field.from_fraction(node[1]), field, varnames
        )
    if kind == "var":
        which = 0 if node[1] == varnames[0] else 1
        return BivariatePolynomial.variable(which, field, varnames)
    if kind == "neg":
        return -lower(node[1], varnames, field)
    if kind == "^":
        return lower(node[1], varnames, field) ** node[2]
    a = lower(node[1], varnames, field)
    b = lower(node[2], varnames, field)
    if kind == "+":
        return a + b
    if kind == "-":
        return a - b
    if kind == "*":
        return a * b
    raise AssertionError("unreachable node %r" % (kind,))


def parse_polynomial(text, varnames=("X", "Y")):
    """Exact polynomial from an expression string."""
    return lower(parse_expression(text, varnames), tuple(varnames))


def unparse(poly):
    """Canonical expression string that parses back to the same polynomial."""
    if poly.is_zero():
        return "0"
    vx, vy = poly.vars
    bits = []
    for (a, b) in sorted(poly.terms, key=lambda e: (-(e[0] + e[1]), -e[1], -e[0])):
        c = poly.terms[(a, b)]
        mono = []
        if a == 1:
            mono.append(vx)
        elif a > 1:
            mono.append("%s^%d" % (vx, a))
        if b == 1:
            mono.append(vy)
        elif b > 1:
            mono.append("%s^%d" % (vy, b))
        cs = _coef_str(c)
        # negative coefficients stay explicit: a bare minus would bind to
        # the first base before its exponent under this grammar
        if mono and cs == "1":
            term = "*".join(mono)
        elif mono:
            term = cs + "*" + "*".join(mono)
        else:
            term = cs
        bits.append(term)
    out = bits[0]
    for t in bits[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def _coef_str(c):
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    if c.numerator < 0:
        return "-%d/%d" % (-c.numerator, c.denominator)
    return "%d/%d" % (c.numerator, c.denominator)
