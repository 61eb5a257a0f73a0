"""OpenQASM 2.0 subset reader/writer.

Accepted subset: the version header, ``include "qelib1.inc";`` (ignored),
exactly one ``qreg``, inline ``gate`` definitions that expand to supported
gates, and applications of the gates in the name table below.  Everything
else (creg, measure, reset, barrier, if, opaque) is an UnsupportedStatement.

Dialect note: ``fsim(theta, phi)``, ``sy`` and ``sw`` are treated as
primitive gate names (they have no qelib1 definition); the emitter writes
them bare and the parser reads them back, so round-trips are exact.
Floats are emitted with 17 significant digits.
"""
from __future__ import annotations

import math
import re

from .circuit import Circuit, GateKind, GateOp, validate_circuit
from .errors import QasmSyntaxError, UnknownGate, UnsupportedStatement

__all__ = ["parse_qasm", "emit_qasm"]

# name -> kind; aliases normalize to one canonical kind
_GATE_TABLE: dict[str, GateKind] = {k.value: k for k in GateKind}
_GATE_TABLE.update({"u1": GateKind.P, "phase": GateKind.P,
                    "cu1": GateKind.CP, "CX": GateKind.CX})

_UNSUPPORTED = ("creg", "measure", "reset", "barrier", "if", "opaque")


# --- tokenizer --------------------------------------------------------------

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+|//[^\n]*)
  | (?P<real>(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?)
  | (?P<id>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<str>"[^"]*")
  | (?P<op>->|[{}()\[\];,+\-*/^])
""", re.VERBOSE)


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind, self.text, self.line, self.col = kind, text, line, col


def _tokenize(text: str) -> list[_Token]:
    toks, pos, line, line_start = [], 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise QasmSyntaxError(
                f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind != "ws":
            toks.append(_Token(kind, m.group(), line, m.start() - line_start + 1))
        nl = text.count("\n", pos, m.end())
        if nl:
            line += nl
            line_start = text.rfind("\n", pos, m.end()) + 1
        pos = m.end()
    toks.append(_Token("eof", "", line, 1))
    return toks


# --- expression evaluation --------------------------------------------------

_FUNCS = {"sin": math.sin, "cos": math.cos, "tan": math.tan,
          "exp": math.exp, "ln": math.log, "sqrt": math.sqrt}


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0
        self.gate_defs: dict[str, tuple[list[str], list[str], list]] = {}

    def peek(self) -> _Token:
        return self.toks[self.i]

    def next(self) -> _Token:
        t = self.toks[self.i]
        if t.kind != "eof":
            self.i += 1
        return t

    def expect(self, text: str) -> _Token:
        t = self.next()
        if t.text != text:
            raise QasmSyntaxError(f"expected {text!r}, got {t.text!r}",
                                  t.line, t.col)
        return t

    def fail(self, msg: str):
        t = self.peek()
        raise QasmSyntaxError(msg, t.line, t.col)

    # expression grammar: expr -> term (('+'|'-') term)*
    #                     term -> unary (('*'|'/') unary)*
    #                     unary -> '-' unary | pow
    #                     pow -> atom ('^' unary)?
    def expr(self, env: dict[str, float]) -> float:
        v = self.term(env)
        while self.peek().text in ("+", "-"):
            if self.next().text == "+":
                v += self.term(env)
            else:
                v -= self.term(env)
        return v

    def term(self, env) -> float:
        v = self.unary(env)
        while self.peek().text in ("*", "/"):
            if self.next().text == "*":
                v *= self.unary(env)
            else:
                v /= self.unary(env)
        return v

    def unary(self, env) -> float:
        if self.peek().text == "-":
            self.next()
            return -self.unary(env)
        return self.power(env)

    def power(self, env) -> float:
        v = self.atom(env)
        if self.peek().text == "^":
            self.next()
            v = v ** self.unary(env)
        return v

    def atom(self, env) -> float:
        t = self.next()
        if t.kind == "real":
            return float(t.text)
        if t.text == "pi":
            return math.pi
        if t.text in _FUNCS:
            self.expect("(")
            v = self.expr(env)
            self.expect(")")
            return _FUNCS[t.text](v)
        if t.kind == "id" and t.text in env:
            return env[t.text]
        if t.text == "(":
            v = self.expr(env)
            self.expect(")")
            return v
        raise QasmSyntaxError(f"bad expression token {t.text!r}", t.line, t.col)

    # --- statements ---------------------------------------------------------

    def parse(self) -> Circuit:
        t = self.next()
        if t.text != "OPENQASM":
            raise QasmSyntaxError("file must start with OPENQASM 2.0",
                                  t.line, t.col)
        v = self.next()
        if v.text != "2.0":
            raise UnsupportedStatement(f"OPENQASM version {v.text}",
                                       v.line, v.col)
        self.expect(";")
        qreg_name, n = None, 0
        ops: list[GateOp] = []
        while True:
            t = self.peek()
            if t.kind == "eof":
                break
            if t.text == "include":
                self.next()
                inc = self.next()
                if inc.text != '"qelib1.inc"':
                    raise UnsupportedStatement(f"include {inc.text}",
                                               inc.line, inc.col)
                self.expect(";")
            elif t.text == "qreg":
                self.next()
                if qreg_name is not None:
                    raise UnsupportedStatement("second qreg", t.line, t.col)
                name = self.next()
                self.expect("[")
                size = self.next()
                self.expect("]")
                self.expect(";")
                qreg_name, n = name.text, int(size.text)
            elif t.text == "gate":
                self.gate_definition()
            elif t.text in _UNSUPPORTED:
                raise UnsupportedStatement(t.text, t.line, t.col)
            elif t.kind == "id":
                if qreg_name is None:
                    raise QasmSyntaxError("gate before qreg declaration",
                                          t.line, t.col)
                ops.extend(self.gate_call(qreg_name, n))
            else:
                self.fail(f"unexpected token {t.text!r}")
        if qreg_name is None:
            t = self.peek()
            raise QasmSyntaxError("no qreg declared", t.line, t.col)
        c = Circuit(n, ops)
        validate_circuit(c)
        return c

    def gate_definition(self) -> None:
        self.expect("gate")
        name = self.next().text
        params: list[str] = []
        if self.peek().text == "(":
            self.next()
            while self.peek().text != ")":
                params.append(self.next().text)
                if self.peek().text == ",":
                    self.next()
            self.next()
        args: list[str] = [self.next().text]
        while self.peek().text == ",":
            self.next()
            args.append(self.next().text)
        self.expect("{")
        # record body token span; expand lazily at each call site
        start = self.i
        depth = 1
        while depth:
            t = self.next()
            if t.kind == "eof":
                raise QasmSyntaxError("unterminated gate body", t.line, t.col)
            if t.text == "{":
                depth += 1
            elif t.text == "}":
                depth -= 1
        self.gate_defs[name] = (params, args, self.toks[start:self.i - 1])

    def gate_call(self, qreg: str, n: int) -> list[GateOp]:
        name_tok = self.next()
        name = name_tok.text
        pvals: list[float] = []
        if self.peek().text == "(":
            self.next()
            while True:
                pvals.append(self.expr({}))
                if self.peek().text != ",":
                    break
                self.next()
            self.expect(")")
        qubits: list[int] = []
        while True:
            reg = self.next()
            if reg.text != qreg:
                raise QasmSyntaxError(
                    f"unknown register {reg.text!r}", reg.line, reg.col)
            if self.peek().text != "[":
                raise UnsupportedStatement("register broadcast",
                                           reg.line, reg.col)
            self.expect("[")
            idx = self.next()
            self.expect("]")
            qubits.append(int(idx.text))
            if self.peek().text != ",":
                break
            self.next()
        self.expect(";")
        return self.expand(name, pvals, qubits, name_tok)

    def expand(self, name: str, pvals: list[float], qubits: list[int],
               where: _Token) -> list[GateOp]:
        if name in self.gate_defs:
            return self.expand_macro(name, pvals, qubits, where)
        kind = _GATE_TABLE.get(name)
        if kind is None:
            raise UnknownGate(name, where.line, where.col)
        return [GateOp(kind, tuple(pvals), tuple(qubits))]

    def expand_macro(self, name, pvals, qubits, where) -> list[GateOp]:
        params, args, body = self.gate_defs[name]
        if len(pvals) != len(params) or len(qubits) != len(args):
            raise QasmSyntaxError(
                f"gate {name} arity mismatch", where.line, where.col)
        env = dict(zip(params, pvals))
        qmap = dict(zip(args, qubits))
        sub = _Parser.__new__(_Parser)
        sub.toks = body + [_Token("eof", "", where.line, where.col)]
        sub.i = 0
        sub.gate_defs = self.gate_defs
        ops: list[GateOp] = []
        while sub.peek().kind != "eof":
            t = sub.next()
            if t.kind != "id":
                raise QasmSyntaxError(f"bad gate body token {t.text!r}",
                                      t.line, t.col)
            ps: list[float] = []
            if sub.peek().text == "(":
                sub.next()
                while True:
                    ps.append(sub.expr(env))
                    if sub.peek().text != ",":
                        break
                    sub.next()
                sub.expect(")")
            qs: list[int] = []
            while True:
                a = sub.next()
                if a.text not in qmap:
                    raise QasmSyntaxError(f"unknown gate argument {a.text!r}",
                                          a.line, a.col)
                qs.append(qmap[a.text])
                if sub.peek().text != ",":
                    break
                sub.next()
            sub.expect(";")
            ops.extend(self.expand(t.text, ps, qs, t))
        return ops


def parse_qasm(text: str) -> Circuit:
    return _Parser(text).parse()


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def emit_qasm(c: Circuit) -> str:
    validate_circuit(c)
    lines = ['OPENQASM 2.0;', 'include "qelib1.inc";', f"qreg q[{c.num_qubits}];"]
    for g in c.ops:
        p = f"({', '.join(_fmt(x) for x in g.params)})" if g.params else ""
        q = ", ".join(f"q[{i}]" for i in g.qubits)
        lines.append(f"{g.kind.value}{p} {q};")
    return "\n".join(lines) + "\n"
