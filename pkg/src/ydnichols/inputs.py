"""Input documents (TOML) describing a tuple of Yetter-Drinfeld modules.

Two forms are accepted.  Diagonal shorthand::

    cutoff = 4
    [diagonal]
    q = [["-1", "1"], ["-1", "-1"]]

and explicit modules over a group given by permutations or invariant factors::

    [group]
    permutations = [[1, 0, 2], [0, 2, 1]]
    [[modules]]
    degrees = [[1, 0, 2], [2, 1, 0], [0, 2, 1]]
    actions = [ [[...]], [[...]] ]   # one matrix per group generator

Scalars are integers, fractions ("1/2") or sums of terms built from the
root-of-unity literal z(N, k) = zeta_N^k, e.g. "2*z(12,5) - 1/3".
"""

from __future__ import annotations

import hashlib
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .cyclotomic import CycMatrix, CycScalar, zeta
from .errors import InputError, NotAGroup, NotAYDModule
from .groups import DiagonalDatum, FiniteGroup
from .reflection import YDTuple
from .yd import YDModule

FORMAT_VERSION = "ydnichols-input/1"

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*)?)?
        (?:z\(\s*(?P<n>\d+)\s*,\s*(?P<k>-?\d+)\s*\)(?:\^(?P<e>\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_scalar(value, where="scalar"):
    """An int, a fraction string or a sum of c*z(N,k) terms."""
    if isinstance(value, bool):
        raise InputError(f"{where}: booleans are not scalars", where)
    if isinstance(value, int):
        return CycScalar.rational(value)
    if isinstance(value, float):
        raise InputError(f"{where}: floating point values are not accepted; use fractions or z(N,k)", where)
    if not isinstance(value, str):
        raise InputError(f"{where}: expected a number or string, got {type(value).__name__}", where)
    text = value.strip()
    if not text:
        raise InputError(f"{where}: empty scalar", where)
    total = CycScalar.rational(0)
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (not first and not m.group("sign")):
            raise InputError(f"{where}: cannot parse {value!r} near position {pos}", where)
        if m.group("coef") is None and m.group("n") is None:
            raise InputError(f"{where}: cannot parse {value!r} near position {pos}", where)
        c = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        term = CycScalar.rational(c)
        if m.group("n") is not None:
            n = int(m.group("n"))
            if n < 1:
                raise InputError(f"{where}: z(N,k) needs N >= 1", where)
            k = int(m.group("k")) * int(m.group("e") or 1)
            term = term * zeta(n, k % n)
        total = total - term if m.group("sign") == "-" else total + term
        pos = m.end()
        first = False
    return total


def _matrix(rows, dim, where):
    if not isinstance(rows, list) or len(rows) != dim:
        raise InputError(f"{where}: expected a {dim}x{dim} matrix", where)
    dense = []
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise InputError(f"{where}: row {r + 1} must have {dim} entries", where)
        dense.append([parse_scalar(x, f"{where}[{r + 1}][{c + 1}]") for c, x in enumerate(row)])
    return CycMatrix.from_dense(dense)


def _group(doc):
    g = doc.get("group")
    if not isinstance(g, dict):
        raise InputError("missing [group] table (or use [diagonal])", "group")
    try:
        if "permutations" in g:
            return FiniteGroup.from_permutations(g["permutations"])
        if "abelian" in g:
            return FiniteGroup.abelian(g["abelian"])
        if "symmetric" in g:
            return FiniteGroup.symmetric(int(g["symmetric"]))
    except (NotAGroup, TypeError, ValueError) as exc:
        raise InputError(f"group: {exc}", "group") from exc
    raise InputError("group: give one of permutations, abelian or symmetric", "group")


def _element(G, label, where):
    lab = tuple(label) if isinstance(label, list) else label
    try:
        return G.index(lab)
    except (KeyError, ValueError) as exc:
        raise InputError(f"{where}: {label!r} is not a group element", where) from exc


@dataclass
class InputSpec:
    modules: YDTuple
    cutoff: int | None
    pivot: int | None
    conductor: int | None
    source: dict

    def normalized(self):
        """Canonical JSON-ready description used for hashing and echoing."""
        G = self.modules.group
        return {
            "format": FORMAT_VERSION,
            "group": G.to_json(),
            "modules": self.modules.to_json(),
        }

    def content_hash(self):
        blob = json.dumps(self.normalized(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def load_input(path):
    try:
        with open(path, "rb") as fh:
            doc = tomllib.load(fh)
    except FileNotFoundError as exc:
        raise InputError(f"input file {path} not found", "input") from exc
    except tomllib.TOMLDecodeError as exc:
        raise InputError(f"{path}: {exc}", "input") from exc
    return parse_input(doc)


def parse_input(doc):
    cutoff = doc.get("cutoff")
    if cutoff is not None and (not isinstance(cutoff, int) or isinstance(cutoff, bool) or cutoff < 0):
        raise InputError("cutoff must be a nonnegative integer", "cutoff")
    pivot = doc.get("pivot")
    if pivot is not None and (not isinstance(pivot, int) or isinstance(pivot, bool)):
        raise InputError("pivot must be an integer", "pivot")
    conductor = None
    field = doc.get("field")
    if field is not None:
        conductor = field.get("conductor") if isinstance(field, dict) else None
        if not isinstance(conductor, int) or conductor < 1:
            raise InputError("field.conductor must be a positive integer", "field.conductor")

    if "diagonal" in doc:
        if "modules" in doc:
            raise InputError("give either [diagonal] or [[modules]], not both", "diagonal")
        modules = _diagonal(doc["diagonal"])
    elif "modules" in doc:
        modules = _explicit(doc)
    else:
        raise InputError("input needs a [diagonal] table or [[modules]] entries", "modules")

    if conductor is not None:
        _check_conductor(modules, conductor)
    if pivot is not None and not 1 <= pivot <= len(modules):
        raise InputError(f"pivot must lie between 1 and {len(modules)}", "pivot")
    return InputSpec(modules, cutoff, pivot, conductor, doc)


def _diagonal(d):
    if not isinstance(d, dict) or "q" not in d:
        raise InputError("[diagonal] needs a q matrix", "diagonal.q")
    rows = d["q"]
    if not isinstance(rows, list) or not rows:
        raise InputError("diagonal.q must be a nonempty square matrix", "diagonal.q")
    q = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != len(rows):
            raise InputError("diagonal.q must be square", f"diagonal.q[{i + 1}]")
        q.append([parse_scalar(x, f"diagonal.q[{i + 1}][{j + 1}]") for j, x in enumerate(row)])
    try:
        datum = DiagonalDatum(q)
    except ValueError as exc:
        raise InputError(f"diagonal.q: {exc}", "diagonal.q") from exc
    G = datum.group
    mods = [YDModule.one_dim(G, datum.generator(i), datum.character(i)) for i in range(datum.theta)]
    return YDTuple(mods)


def _explicit(doc):
    G = _group(doc)
    entries = doc["modules"]
    if not isinstance(entries, list) or not entries:
        raise InputError("[[modules]] must be a nonempty array of tables", "modules")
    mods = []
    for idx, m in enumerate(entries):
        where = f"modules[{idx + 1}]"
        degs = m.get("degrees")
        acts = m.get("actions")
        if not isinstance(degs, list) or not degs:
            raise InputError(f"{where}.degrees must be a nonempty list", f"{where}.degrees")
        dim = len(degs)
        degrees = [_element(G, lab, f"{where}.degrees[{k + 1}]") for k, lab in enumerate(degs)]
        if not isinstance(acts, list) or len(acts) != len(G.generators):
            raise InputError(
                f"{where}.actions needs one matrix per group generator ({len(G.generators)})", f"{where}.actions"
            )
        gen_action = {g: _matrix(a, dim, f"{where}.actions[{k + 1}]") for k, (g, a) in enumerate(zip(G.generators, acts))}
        try:
            mods.append(YDModule(G, degrees, gen_action))
        except NotAYDModule as exc:
            raise InputError(f"{where}: {exc}", where) from exc
    try:
        return YDTuple(mods)
    except NotAYDModule as exc:
        raise InputError(f"modules: {exc}", "modules") from exc


def _check_conductor(T, N):
    for j, m in enumerate(T.modules):
        c = m.conductor()
        if N % c and not (N % 2 and (2 * N) % c == 0):
            raise InputError(f"modules[{j + 1}] needs scalars outside Q(zeta_{N})", "field.conductor")

