"""Ideal documents (text grammar) and JSON rendering of results.

Document grammar, one statement per line, ``#`` starts a comment::

    vars a b c d e f
    ideal a^3*b^2*e, b*c^3*d, b^4*d*e^2*f, a*b^2*c*f^3
    prime a,b,c,e,f

``vars`` must come first and appear once; ``ideal`` at most once; ``prime``
any number of times.  A term is ``factor ('*' factor)*`` with
``factor = name ('^' exponent)?``; repeated variables in a term multiply.
The literal ``1`` is accepted as a term for the unit ideal.
"""

from dataclasses import dataclass
from functools import singledispatch
import json
import re

from .constructor import ConstructionTrace, DistributionReport, LemmaReport
from .core import EXP_MAX, Ambient, MonomialIdeal, MonomialPrime
from .decomposition import Decomposition, IrreducibleComponent, PrimaryComponent
from .stable import MembershipReport, StabilizationConfig, StabilizationReport


class ParseError(ValueError):
    def __init__(self, message, line, col):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class IdealDocument:
    ambient: Ambient
    ideal: object = None  # MonomialIdeal or None
    primes: tuple = ()


_TOKEN_RE = re.compile(r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<op>[\^*,;-])|(?P<bad>\S))")


def _tokenize(text, lineno, offset):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:  # trailing whitespace
            break
        kind = m.lastgroup
        col = offset + m.start(kind) + 1
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", lineno, col)
        tokens.append((kind, m.group(kind), col))
        pos = m.end()
    return tokens


class _Cursor:
    def __init__(self, tokens, lineno, end_col):
        self.tokens = tokens
        self.i = 0
        self.lineno = lineno
        self.end_col = end_col

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def col(self):
        tok = self.peek()
        return tok[2] if tok else self.end_col

    def error(self, message, col=None):
        return ParseError(message, self.lineno, self.col() if col is None else col)

    def expect(self, kind, value=None, what=None):
        tok = self.peek()
        if tok is None or tok[0] != kind or (value is not None and tok[1] != value):
            raise self.error(f"expected {what or value or kind}")
        return self.next()


def _parse_exponent(cur):
    tok = cur.peek()
    if tok is not None and tok[1] == "-":
        raise cur.error("exponent must be >= 1")
    _, text, col = cur.expect("int", what="exponent")
    e = int(text)
    if e < 1:
        raise cur.error("exponent must be >= 1", col)
    if e > EXP_MAX:
        raise cur.error("exponent too large", col)
    return e


def _parse_term(cur, ambient):
    exps = [0] * ambient.n
    tok = cur.peek()
    if tok is not None and tok[0] == "int" and tok[1] == "1":
        cur.next()
        return exps
    while True:
        _, name, col = cur.expect("name", what="variable name")
        if name not in ambient.vars:
            raise cur.error(f"unknown variable {name!r}", col)
        e = 1
        if cur.peek() is not None and cur.peek()[1] == "^":
            cur.next()
            e = _parse_exponent(cur)
        i = ambient.index(name)
        exps[i] += e
        if exps[i] > EXP_MAX:
            raise cur.error("exponent too large", col)
        if cur.peek() is None or cur.peek()[1] != "*":
            return exps
        cur.next()


def _parse_ideal(cur, ambient):
    if cur.peek() is None:
        raise cur.error("empty generator list")
    rows = [_parse_term(cur, ambient)]
    while cur.peek() is not None:
        cur.expect("op", ",", what="','")
        rows.append(_parse_term(cur, ambient))
    return MonomialIdeal(ambient, rows)


def _parse_prime_names(cur, ambient, sep=","):
    if cur.peek() is None:
        raise cur.error("empty prime")
    idx = []
    while True:
        _, name, col = cur.expect("name", what="variable name")
        if name not in ambient.vars:
            raise cur.error(f"unknown variable {name!r}", col)
        idx.append(ambient.index(name))
        if cur.peek() is None:
            break
        cur.expect("op", sep, what=repr(sep))
    return MonomialPrime(ambient, idx)


def parse_document(text):
    ambient = None
    ideal = None
    primes = []
    vars_line = ideal_line = None
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0]
        stripped = body.lstrip()
        if not stripped.strip():
            continue
        offset = len(body) - len(stripped)
        cur = _Cursor(_tokenize(stripped, lineno, offset), lineno, len(body.rstrip()) + 1)
        kind, keyword, col = cur.next()
        if kind != "name" or keyword not in ("vars", "ideal", "prime"):
            raise ParseError(f"expected 'vars', 'ideal' or 'prime', got {keyword!r}", lineno, col)
        if keyword == "vars":
            if vars_line is not None:
                raise ParseError(f"duplicate vars line (first on line {vars_line})", lineno, col)
            vars_line = lineno
            names = []
            while cur.peek() is not None:
                tok = cur.next()
                if tok[1] == ",":
                    continue
                if tok[0] != "name":
                    raise cur.error("expected variable name", tok[2])
                if tok[1] in names:
                    raise cur.error(f"duplicate variable {tok[1]!r}", tok[2])
                names.append(tok[1])
            if not names:
                raise cur.error("vars line declares no variables")
            ambient = Ambient(tuple(names))
            continue
        if ambient is None:
            raise ParseError(f"'{keyword}' before the vars line", lineno, col)
        if keyword == "ideal":
            if ideal_line is not None:
                raise ParseError(f"duplicate ideal line (first on line {ideal_line})", lineno, col)
            ideal_line = lineno
            ideal = _parse_ideal(cur, ambient)
        else:
            primes.append(_parse_prime_names(cur, ambient))
    if ambient is None:
        raise ParseError("missing vars line", len(lines) + 1, 1)
    return IdealDocument(ambient, ideal, tuple(primes))


def parse_prime(text, ambient):
    """Parse ``"a,b,c"`` into a prime over ``ambient``."""
    cur = _Cursor(_tokenize(text, 1, 0), 1, len(text) + 1)
    prime = _parse_prime_names(cur, ambient)
    return prime


def parse_prime_list(text, ambient):
    """Parse ``"x1; x1,x2"`` into a list of primes."""
    chunks = text.split(";")
    out = []
    offset = 0
    for chunk in chunks:
        if chunk.strip():
            cur = _Cursor(_tokenize(chunk, 1, offset), 1, offset + len(chunk) + 1)
            out.append(_parse_prime_names(cur, ambient))
        offset += len(chunk) + 1
    if not out:
        raise ParseError("empty prime list", 1, 1)
    return out


def render_document(doc):
    lines = ["vars " + " ".join(doc.ambient.vars)]
    if doc.ideal is not None:
        if doc.ideal.is_zero():
            raise ValueError("the zero ideal has no document form")
        lines.append("ideal " + ", ".join(str(g) for g in doc.ideal.gens))
    for P in doc.primes:
        lines.append("prime " + ",".join(P.names))
    return "\n".join(lines) + "\n"


# -- JSON --------------------------------------------------------------------


def _ideal_obj(I):
    return [str(g) for g in I.gens]


def _primes_obj(primes):
    return [list(P.names) for P in primes]


def _config_obj(cfg):
    return {"window": cfg.window, "s_floor": cfg.s_floor, "s_max": cfg.s_max}


@singledispatch
def to_jsonable(obj):
    raise TypeError(f"no JSON form for {type(obj).__name__}")


@to_jsonable.register
def _(obj: dict):
    return obj


@to_jsonable.register
def _(obj: MonomialPrime):
    return list(obj.names)


@to_jsonable.register
def _(obj: MonomialIdeal):
    return {"ideal": _ideal_obj(obj)}


@to_jsonable.register
def _(obj: StabilizationConfig):
    return _config_obj(obj)


@to_jsonable.register
def _(r: MembershipReport):
    return {
        "prime": list(r.prime.names),
        "member": r.member,
        "certified": r.certified,
        "stabilized": r.stabilized,
        "stabilized_at": r.stabilized_at,
        "history": [[s, obs] for s, obs in r.history],
        "config": _config_obj(r.config),
    }


@to_jsonable.register
def _(r: StabilizationReport):
    return {
        "stable_set": _primes_obj(r.stable_set),
        "certified": r.certified,
        "stabilized": r.stabilized,
        "stabilized_at": r.stabilized_at,
        "history": [{"s": s, "primes": _primes_obj(ps)} for s, ps in r.history],
        "config": _config_obj(r.config),
    }


def _component_obj(c):
    return {"generators": _ideal_obj(c.as_ideal()), "radical": list(c.radical.names)}


@to_jsonable.register
def _(d: Decomposition):
    return {
        "irredundant": d.irredundant,
        "components": [_component_obj(c) for c in d.components],
    }


@to_jsonable.register
def _(r: DistributionReport):
    return {
        "factors": [{"prime": list(P.names), "exponent": e} for P, e in r.factors],
        "holds": r.holds,
        "checks": [{"s": s, "holds": ok} for s, ok in r.checks],
    }


@to_jsonable.register
def _(t: ConstructionTrace):
    return {
        "primes": _primes_obj(t.primes),
        "ks": list(t.ks),
        "d": t.d,
        "empirical": t.empirical,
        "intermediates": [_ideal_obj(J) for J in t.intermediates],
        "result": _ideal_obj(t.result),
        "distribution": to_jsonable(t.d_search) if t.d_search is not None else None,
    }


@to_jsonable.register
def _(r: LemmaReport):
    return {
        "applicable": r.applicable,
        "holds": r.holds,
        "lhs": _primes_obj(r.lhs),
        "rhs": _primes_obj(r.rhs),
    }


def primes_json(primes, **extra):
    """JSON object for a plain set of primes, e.g. the answer of ``ass``."""
    return {**extra, "primes": _primes_obj(primes)}


def render_json(obj):
    """Compact JSON with a fixed key order; identical inputs give identical bytes."""
    return json.dumps(to_jsonable(obj), separators=(",", ":"), ensure_ascii=True)
