"""Scenario description format: states, probes and partitions as text.

A scenario file is a sequence of `key = value` lines (# starts a
comment).  Values are expressions in a small language mirroring the two
quantum notations: creation monomials `adag(<label>)` applied to
`|vac>` for second quantization, and `ket(...)` tensors with `(x)` and
the explicit projectors `S[...]` / `A[...]` for first quantization.
Complex scalars are written `a+bi`; `sqrt(...)`, `/` and parentheses
work as expected.  Operators come from `id`, `proj(<ket>)`,
`outer(<ket>,<ket>)`, products, sums, `(x)`, and the two-particle
symmetrized product `sym(O1,O2)`.

States are auto-normalized with the factor recorded, since source
material freely writes non-normalized states.  Parsing is
deterministic and round-trips through `print_scenario`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from .algebra import ModeBipartition, OperatorExpr, SectorLocal
from .config import EPS_DROP
from .firstq import (
    FirstQTensor,
    SingleParticleBasis,
    apply_each,
    symmetrize,
    to_fock,
)
from .fock import ModeCatalog, StateVector, Statistics, vacuum

AST = Tuple


class ScenarioError(ValueError):
    """Parse or evaluation failure, with line/column when available."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line = line
        self.col = col
        where = f" (line {line}, column {col})" if line else ""
        super().__init__(message + where)


# --- tokenizer ---------------------------------------------------------------

_PUNCT = ("(x)", "|vac>", "+", "-", "*", "/", "(", ")", "[", "]", ",")


def _tokenize(text: str, line: int):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        matched = False
        for p in _PUNCT:
            if text.startswith(p, i):
                tokens.append((p, line, i + 1))
                i += len(p)
                matched = True
                break
        if matched:
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and text[i + 1].isdigit()):
            j = i
            while j < n and (text[j].isdigit() or text[j] == "."):
                j += 1
            if j < n and text[j] in "eE" and j + 1 < n and (text[j + 1].isdigit() or text[j + 1] in "+-"):
                j += 2
                while j < n and text[j].isdigit():
                    j += 1
            if j < n and text[j] == "i":
                tokens.append(("IMAG", line, i + 1, float(text[i:j])))
                j += 1
            else:
                tokens.append(("NUM", line, i + 1, float(text[i:j])))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_"):
                j += 1
            tokens.append(("NAME", line, i + 1, text[i:j]))
            i = j
            continue
        raise ScenarioError(f"unexpected character {ch!r}", line, i + 1)
    tokens.append(("END", line, n + 1))
    return tokens


# --- parser -------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ScenarioError(f"expected {kind!r}, found {tok[0]!r}", tok[1], tok[2])
        return tok

    def fail(self, message):
        tok = self.peek()
        raise ScenarioError(message, tok[1], tok[2])

    # expr := product (('+'|'-') product)*
    def parse_expr(self) -> AST:
        node = self.parse_product()
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            rhs = self.parse_product()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    # product := postfix (('*'|'/'|'(x)') postfix)*
    def parse_product(self) -> AST:
        node = self.parse_postfix()
        while self.peek()[0] in ("*", "/", "(x)"):
            op = self.next()[0]
            rhs = self.parse_postfix()
            kind = {"*": "mul", "/": "div", "(x)": "tensor"}[op]
            node = (kind, node, rhs)
        return node

    # postfix := atom ['|vac>']
    def parse_postfix(self) -> AST:
        node = self.parse_atom()
        if self.peek()[0] == "|vac>":
            self.next()
            node = ("vac", node)
        return node

    def parse_atom(self) -> AST:
        tok = self.peek()
        kind = tok[0]
        if kind == "NUM":
            self.next()
            return ("num", complex(tok[3]))
        if kind == "IMAG":
            self.next()
            return ("num", complex(0.0, tok[3]))
        if kind == "-":
            self.next()
            return ("neg", self.parse_atom())
        if kind == "(":
            self.next()
            node = self.parse_expr()
            self.expect(")")
            return node
        if kind == "NAME":
            name = tok[3]
            self.next()
            if name == "i":
                return ("num", 1j)
            if name == "id":
                return ("id",)
            if name in ("adag", "a", "ket"):
                label = self._parse_label()
                return (name, label)
            if name == "sqrt":
                self.expect("(")
                node = self.parse_expr()
                self.expect(")")
                return ("sqrt", node)
            if name == "proj":
                self.expect("(")
                node = self.parse_expr()
                self.expect(")")
                return ("proj", node)
            if name in ("outer", "sym"):
                self.expect("(")
                first = self.parse_expr()
                self.expect(",")
                second = self.parse_expr()
                self.expect(")")
                return (name, first, second)
            if name in ("S", "A"):
                self.expect("[")
                node = self.parse_expr()
                self.expect("]")
                return ("sym_proj" if name == "S" else "asym_proj", node)
            raise ScenarioError(f"unknown function or constant {name!r}", tok[1], tok[2])
        self.fail(f"unexpected token {kind!r}")

    def _parse_label(self) -> str:
        self.expect("(")
        parts = []
        while True:
            tok = self.next()
            if tok[0] == ")":
                break
            if tok[0] == ",":
                parts.append(",")
            elif tok[0] in ("NAME", "NUM"):
                val = tok[3]
                parts.append(str(int(val)) if tok[0] == "NUM" and float(val).is_integer() else str(val))
            else:
                raise ScenarioError(f"unexpected token {tok[0]!r} in label", tok[1], tok[2])
        label = "".join(parts)
        if not label:
            raise ScenarioError("empty label", self.peek()[1], self.peek()[2])
        return label


def parse_expression(text: str, line: int = 1) -> AST:
    parser = _Parser(_tokenize(text, line))
    node = parser.parse_expr()
    tok = parser.peek()
    if tok[0] != "END":
        raise ScenarioError(f"trailing input starting at {tok[0]!r}", tok[1], tok[2])
    return node


# --- printer ------------------------------------------------------------------

_PREC = {"add": 1, "sub": 1, "mul": 2, "div": 2, "tensor": 2, "vac": 3, "neg": 3}


def print_expression(node: AST) -> str:
    return _print(node, 0)


def _print(node: AST, parent_prec: int) -> str:
    kind = node[0]
    if kind == "num":
        z = node[1]
        if z.imag == 0:
            body = _fmt_float(z.real)
        elif z.real == 0:
            body = _fmt_float(z.imag) + "i"
        else:
            body = f"({_fmt_float(z.real)}+{_fmt_float(z.imag)}i)"
        return body
    if kind in ("adag", "a", "ket"):
        return f"{kind}({node[1]})"
    if kind == "id":
        return "id"
    if kind == "sqrt":
        return f"sqrt({_print(node[1], 0)})"
    if kind == "proj":
        return f"proj({_print(node[1], 0)})"
    if kind in ("outer", "sym"):
        return f"{kind}({_print(node[1], 0)}, {_print(node[2], 0)})"
    if kind == "sym_proj":
        return f"S[ {_print(node[1], 0)} ]"
    if kind == "asym_proj":
        return f"A[ {_print(node[1], 0)} ]"
    if kind == "neg":
        return f"-{_print(node[1], _PREC['neg'])}"
    if kind == "vac":
        return f"{_print(node[1], _PREC['vac'])}|vac>"
    op = {"add": " + ", "sub": " - ", "mul": "*", "div": "/", "tensor": " (x) "}[kind]
    prec = _PREC[kind]
    left = _print(node[1], prec)
    right = _print(node[2], prec + 1)
    body = f"{left}{op}{right}"
    return f"({body})" if prec < parent_prec else body


def _fmt_float(x: float) -> str:
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return repr(x)


# --- evaluation ---------------------------------------------------------------


@dataclass
class _Value:
    kind: str  # scalar | ket | spop | npop | ladder | fock
    data: object

    def describe(self) -> str:
        return self.kind


class _Evaluator:
    def __init__(self, catalog: ModeCatalog):
        self.catalog = catalog
        self.d = len(catalog)

    def eval(self, node: AST) -> _Value:
        kind = node[0]
        method = getattr(self, f"_eval_{kind}", None)
        if method is None:
            raise ScenarioError(f"cannot evaluate node {kind!r}")
        return method(node)

    # atoms
    def _eval_num(self, node):
        return _Value("scalar", node[1])

    def _eval_id(self, node):
        return _Value("spop", np.eye(self.d, dtype=complex))

    def _eval_ket(self, node):
        v = np.zeros(self.d, dtype=complex)
        v[self._mode(node[1])] = 1.0
        return _Value("ket", v)

    def _eval_adag(self, node):
        return _Value("ladder", OperatorExpr.ladder(self.catalog, create=(self._mode(node[1]),)))

    def _eval_a(self, node):
        return _Value("ladder", OperatorExpr.ladder(self.catalog, annihilate=(self._mode(node[1]),)))

    def _mode(self, label: str) -> int:
        try:
            return self.catalog.index(label)
        except KeyError:
            raise ScenarioError(
                f"unknown mode label {label!r}; declared modes are {list(self.catalog.labels)}"
            ) from None

    # unary
    def _eval_neg(self, node):
        inner = self.eval(node[1])
        return self._scale(inner, -1.0)

    def _eval_sqrt(self, node):
        inner = self.eval(node[1])
        if inner.kind != "scalar":
            raise ScenarioError("sqrt expects a scalar")
        return _Value("scalar", complex(np.sqrt(inner.data)))

    def _eval_proj(self, node):
        inner = self.eval(node[1])
        if inner.kind != "ket":
            raise ScenarioError("proj expects a ket expression")
        v = np.asarray(inner.data).reshape(-1)
        nrm = np.linalg.norm(v)
        if nrm < EPS_DROP:
            raise ScenarioError("proj of a zero ket")
        v = v / nrm
        mat = np.outer(v, v.conj())
        return _Value("spop" if inner.data.ndim == 1 else "npop", mat)

    def _eval_outer(self, node):
        k1 = self.eval(node[1])
        k2 = self.eval(node[2])
        if k1.kind != "ket" or k2.kind != "ket" or k1.data.ndim != k2.data.ndim:
            raise ScenarioError("outer expects two kets of equal rank")
        v1 = k1.data.reshape(-1)
        v2 = k2.data.reshape(-1)
        mat = np.outer(v1, v2.conj())
        return _Value("spop" if k1.data.ndim == 1 else "npop", mat)

    def _eval_sym(self, node):
        o1 = self.eval(node[1])
        o2 = self.eval(node[2])
        if o1.kind != "spop" or o2.kind != "spop":
            raise ScenarioError("sym expects two single-particle operators")
        return _Value("npop", np.kron(o1.data, o2.data) + np.kron(o2.data, o1.data))

    def _eval_sym_proj(self, node):
        return self._project(node[1], Statistics.BOSE)

    def _eval_asym_proj(self, node):
        return self._project(node[1], Statistics.FERMI)

    def _project(self, inner_node, statistics):
        inner = self.eval(inner_node)
        if inner.kind != "ket" or inner.data.ndim < 2:
            raise ScenarioError("S[...]/A[...] expect a multi-particle ket")
        t = symmetrize(FirstQTensor(inner.data), statistics)
        return _Value("ket", t.amps)

    def _eval_vac(self, node):
        inner = self.eval(node[1])
        if inner.kind == "ladder":
            return _Value("fock", inner.data.apply(vacuum(self.catalog)))
        if inner.kind == "scalar":
            return _Value("fock", inner.data * vacuum(self.catalog))
        raise ScenarioError("only ladder polynomials apply to |vac>")

    # binary
    def _eval_add(self, node):
        return self._combine(node, 1.0)

    def _eval_sub(self, node):
        return self._combine(node, -1.0)

    def _combine(self, node, sign):
        a = self.eval(node[1])
        b = self.eval(node[2])
        if a.kind != b.kind:
            # scalars promote to ladder identities inside ladder sums
            if {a.kind, b.kind} == {"scalar", "ladder"}:
                a = self._promote_ladder(a)
                b = self._promote_ladder(b)
            else:
                raise ScenarioError(f"cannot add {a.describe()} and {b.describe()}")
        if a.kind == "scalar":
            return _Value("scalar", a.data + sign * b.data)
        if a.kind == "ket":
            if a.data.shape != b.data.shape:
                raise ScenarioError("cannot add kets of different rank")
            return _Value("ket", a.data + sign * b.data)
        if a.kind in ("spop", "npop"):
            if a.data.shape != b.data.shape:
                raise ScenarioError("cannot add operators of different dimension")
            return _Value(a.kind, a.data + sign * b.data)
        if a.kind == "ladder":
            return _Value("ladder", a.data + b.data.scaled(sign))
        if a.kind == "fock":
            return _Value("fock", a.data + sign * b.data)
        raise ScenarioError(f"cannot add values of kind {a.kind}")

    def _promote_ladder(self, v):
        if v.kind == "scalar":
            return _Value("ladder", OperatorExpr.identity(self.catalog, v.data))
        return v

    def _eval_mul(self, node):
        a = self.eval(node[1])
        b = self.eval(node[2])
        if a.kind == "scalar":
            return self._scale(b, a.data)
        if b.kind == "scalar":
            return self._scale(a, b.data)
        if a.kind == "ladder" and b.kind == "ladder":
            return _Value("ladder", a.data * b.data)
        if a.kind == "ladder" and b.kind == "fock":
            return _Value("fock", a.data.apply(b.data))
        if a.kind in ("spop", "npop") and a.kind == b.kind:
            return _Value(a.kind, a.data @ b.data)
        raise ScenarioError(f"cannot multiply {a.describe()} by {b.describe()}")

    def _eval_div(self, node):
        a = self.eval(node[1])
        b = self.eval(node[2])
        if b.kind != "scalar":
            raise ScenarioError("division needs a scalar divisor")
        if abs(b.data) < EPS_DROP:
            raise ScenarioError("division by zero")
        return self._scale(a, 1.0 / b.data)

    def _eval_tensor(self, node):
        a = self.eval(node[1])
        b = self.eval(node[2])
        if a.kind == "ket" and b.kind == "ket":
            return _Value("ket", np.tensordot(a.data, b.data, axes=0))
        if a.kind in ("spop", "npop") and b.kind in ("spop", "npop"):
            return _Value("npop", np.kron(a.data, b.data))
        raise ScenarioError(f"cannot tensor {a.describe()} with {b.describe()}")

    def _scale(self, v: _Value, z: complex) -> _Value:
        if v.kind == "scalar":
            return _Value("scalar", z * v.data)
        if v.kind in ("ket", "spop", "npop"):
            return _Value(v.kind, z * v.data)
        if v.kind == "ladder":
            return _Value("ladder", v.data.scaled(z))
        if v.kind == "fock":
            return _Value("fock", z * v.data)
        raise ScenarioError(f"cannot scale {v.kind}")


# --- scenario object ------------------------------------------------------------

_KEY_ORDER = (
    "id",
    "statistics",
    "modes",
    "external",
    "internal",
    "state",
    "collective",
    "apply",
    "partition",
    "K",
    "V1",
    "V2",
    "A",
    "B",
    "G",
    "provenance",
)

_EXPR_KEYS = {"state", "collective", "apply", "A", "B", "G"}
_LIST_KEYS = {"K", "V1", "V2"}


@dataclass
class Scenario:
    """A parsed scenario: typed objects plus the raw ASTs for printing."""

    id: str
    catalog: ModeCatalog
    basis: SingleParticleBasis
    state: Union[StateVector, FirstQTensor]
    state_initial: Union[StateVector, FirstQTensor]
    normalization: float
    partition: Optional[ModeBipartition] = None
    kbasis: Optional[np.ndarray] = None
    sectors: Optional[SectorLocal] = None
    probes: Dict[str, object] = field(default_factory=dict)
    expectations: Dict[str, Union[float, bool]] = field(default_factory=dict)
    provenance: str = ""
    asts: Dict[str, object] = field(default_factory=dict)

    @property
    def statistics(self) -> Statistics:
        return self.catalog.statistics

    def state_vector(self) -> StateVector:
        """The state as a Fock vector (first-quantized states are bridged)."""
        if isinstance(self.state, StateVector):
            return self.state
        from .classify import _coerce_exchange_tag

        t = _coerce_exchange_tag(self.state)
        return to_fock(t, self.catalog)


def _split_list(raw: str) -> List[str]:
    return [part.strip() for part in raw.split(";") if part.strip()]


def parse_scenario(text: str) -> Scenario:
    """Parse a scenario file; deterministic, round-trips through print_scenario."""
    entries: Dict[str, Tuple[str, int]] = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ScenarioError("expected 'key = value'", lineno, 1)
        key, value = line.split("=", 1)
        key = key.strip()
        value = value.strip()
        if not value:
            raise ScenarioError(f"empty value for {key!r}", lineno, 1)
        if key in entries:
            raise ScenarioError(f"duplicate key {key!r}", lineno, 1)
        entries[key] = (value, lineno)

    def take(key, default=None):
        if key in entries:
            return entries.pop(key)[0]
        return default

    sid = take("id")
    if not sid:
        raise ScenarioError("scenario needs an id")
    statistics = Statistics(take("statistics", "bose"))
    modes_raw = take("modes")
    if not modes_raw:
        raise ScenarioError("scenario needs a modes declaration")
    labels = tuple(_split_list(modes_raw))
    catalog = ModeCatalog(labels, statistics)
    external = take("external")
    internal = take("internal")
    if external or internal:
        basis = SingleParticleBasis(
            len(labels),
            external=tuple(_split_list(external or "")),
            internal=tuple(_split_list(internal or "")),
        )
        if basis.labels() != labels:
            raise ScenarioError(
                "modes must equal the external x internal product labels "
                f"{list(basis.labels())}"
            )
    else:
        basis = SingleParticleBasis(len(labels))

    ev = _Evaluator(catalog)
    asts: Dict[str, object] = {}

    def eval_expr(key: str, raw: str, lineno: int) -> _Value:
        node = parse_expression(raw, lineno)
        asts[key] = node
        return ev.eval(node)

    state_raw = entries.pop("state", None)
    if state_raw is None:
        raise ScenarioError("scenario needs a state")
    state_val = eval_expr("state", *state_raw)
    if state_val.kind == "fock":
        raw_state: Union[StateVector, FirstQTensor] = state_val.data
        raw_norm = raw_state.norm()
    elif state_val.kind == "ket":
        if state_val.data.ndim < 2:
            raise ScenarioError("a state needs at least two particles")
        raw_state = FirstQTensor(state_val.data)
        raw_norm = raw_state.norm()
    else:
        raise ScenarioError(f"state expression evaluates to {state_val.describe()}, not a state")
    if raw_norm < EPS_DROP:
        raise ScenarioError("state expression evaluates to the zero vector")
    state_initial = raw_state * (1.0 / raw_norm)

    state: Union[StateVector, FirstQTensor] = state_initial
    for key in ("collective", "apply"):
        if key not in entries:
            continue
        val = eval_expr(key, *entries.pop(key))
        if key == "collective":
            if val.kind != "spop":
                raise ScenarioError("collective expects a single-particle operator")
            if not isinstance(state, FirstQTensor):
                raise ScenarioError("collective applies to first-quantized states")
            state = apply_each(val.data, state)
        else:
            if val.kind == "ladder" and isinstance(state, StateVector):
                state = val.data.apply(state)
            elif val.kind == "npop" and isinstance(state, FirstQTensor):
                flat = val.data @ state.amps.reshape(-1)
                state = FirstQTensor(flat.reshape(state.amps.shape))
            else:
                raise ScenarioError(
                    f"apply of a {val.describe()} does not match the state representation"
                )
        post_norm = state.norm()
        if post_norm < EPS_DROP:
            raise ScenarioError(f"{key} annihilates the state")
        state = state * (1.0 / post_norm)

    partition = None
    if "partition" in entries:
        raw, lineno = entries.pop("partition")
        asts["partition"] = raw
        if "|" not in raw:
            raise ScenarioError("partition needs 'left | right'", lineno, 1)
        left_raw, right_raw = raw.split("|", 1)
        left = _split_list(left_raw)
        right = _split_list(right_raw)
        try:
            partition = ModeBipartition(
                catalog,
                tuple(catalog.index(l) for l in left),
                tuple(catalog.index(r) for r in right),
            )
        except KeyError as exc:
            raise ScenarioError(str(exc), lineno, 1) from None

    def eval_basis(key: str) -> Optional[np.ndarray]:
        if key not in entries:
            return None
        raw, lineno = entries.pop(key)
        asts[key] = [parse_expression(part, lineno) for part in _split_list(raw)]
        columns = []
        for node in asts[key]:
            val = ev.eval(node)
            if val.kind != "ket" or val.data.ndim != 1:
                raise ScenarioError(f"{key} entries must be single-particle kets", lineno, 1)
            v = val.data
            nrm = np.linalg.norm(v)
            if nrm < EPS_DROP:
                raise ScenarioError(f"{key} entry is the zero vector", lineno, 1)
            columns.append(v / nrm)
        return np.stack(columns, axis=1)

    kbasis = eval_basis("K")
    v1 = eval_basis("V1")
    v2 = eval_basis("V2")
    sectors = None
    if (v1 is None) != (v2 is None):
        raise ScenarioError("V1 and V2 come together")
    if v1 is not None:
        sectors = SectorLocal(v1, v2)

    probes: Dict[str, object] = {}
    for key in ("A", "B", "G"):
        if key not in entries:
            continue
        val = eval_expr(key, *entries.pop(key))
        if val.kind == "ladder":
            probes[key] = val.data
        elif val.kind in ("npop", "spop"):
            probes[key] = val.data
        else:
            raise ScenarioError(f"{key} must be an operator, got {val.describe()}")

    provenance = take("provenance", "")
    expectations: Dict[str, Union[float, bool]] = {}
    for key in sorted(entries):
        if not key.startswith("expect_"):
            raise ScenarioError(f"unknown key {key!r}", entries[key][1], 1)
        raw, lineno = entries[key]
        name = key[len("expect_") :]
        if raw.lower() in ("true", "false"):
            expectations[name] = raw.lower() == "true"
        else:
            try:
                expectations[name] = float(raw)
            except ValueError:
                raise ScenarioError(f"expected number or bool for {key}", lineno, 1) from None

    return Scenario(
        id=sid,
        catalog=catalog,
        basis=basis,
        state=state,
        state_initial=state_initial,
        normalization=raw_norm,
        partition=partition,
        kbasis=kbasis,
        sectors=sectors,
        probes=probes,
        expectations=expectations,
        provenance=provenance,
        asts=asts,
    )


def print_scenario(s: Scenario) -> str:
    """Canonical text form; parse_scenario(print_scenario(s)) reproduces the ASTs."""
    lines = [f"id = {s.id}", f"statistics = {s.catalog.statistics.value}"]
    lines.append("modes = " + "; ".join(s.catalog.labels))
    if s.basis.external is not None:
        lines.append("external = " + "; ".join(s.basis.external))
        lines.append("internal = " + "; ".join(s.basis.internal))
    for key in ("state", "collective", "apply"):
        if key in s.asts:
            lines.append(f"{key} = {print_expression(s.asts[key])}")
    if s.partition is not None:
        left = "; ".join(s.catalog.labels[i] for i in s.partition.left)
        right = "; ".join(s.catalog.labels[i] for i in s.partition.right)
        lines.append(f"partition = {left} | {right}")
    for key in ("K", "V1", "V2"):
        if key in s.asts:
            lines.append(f"{key} = " + "; ".join(print_expression(n) for n in s.asts[key]))
    for key in ("A", "B", "G"):
        if key in s.asts:
            lines.append(f"{key} = {print_expression(s.asts[key])}")
    if s.provenance:
        lines.append(f"provenance = {s.provenance}")
    for name in sorted(s.expectations):
        val = s.expectations[name]
        if isinstance(val, bool):
            lines.append(f"expect_{name} = {'true' if val else 'false'}")
        else:
            lines.append(f"expect_{name} = {_fmt_float(float(val))}")
    return "\n".join(lines) + "\n"
