"""Text and JSON forms of complexes, ideals, partitions, shellings,
decompositions and filtrations."""
import json
import logging
import re
from pathlib import Path

from complex_core import ComplexError, from_facets, natural_key
from filtration import FiltrationStep, PrimeFiltration
from ideal_core import IdealError, MonomialPrime, minimalize
from partitions import PartitionError, StanleyDecomposition, StanleySpace, make_partition

logger = logging.getLogger(__name__)

EMPTY_FACE = ("-", "{}", "∅")
_POWER = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?$")


class ParseError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _content_lines(text):
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _directive(line, name):
    prefix = f"{name}:"
    if line.lower().startswith(prefix):
        return line[len(prefix):].split()
    return None


def _face_tokens(chunk, known=()):
    """"1 2 4" -> 3 labels; "124" -> 3 labels unless "124" is itself a label."""
    chunk = chunk.strip()
    if chunk in EMPTY_FACE:
        return []
    tokens = chunk.split()
    if len(tokens) == 1 and len(tokens[0]) > 1 and tokens[0] not in known:
        return list(tokens[0])
    return tokens


# --- complexes ---------------------------------------------------------------

def parse_complex_text(text):
    """One facet per line (or comma-separated); optional `labels:` line."""
    declared = None
    faces = []
    for number, line in _content_lines(text):
        labels = _directive(line, "labels")
        if labels is not None:
            if declared is not None:
                raise ParseError("duplicate labels directive", number)
            declared = labels
            continue
        for chunk in line.split(","):
            faces.append((number, _face_tokens(chunk, declared or ())))
    if declared is None:
        declared = sorted({label for _, face in faces for label in face}, key=natural_key)
    index = {label: i for i, label in enumerate(declared)}
    masks = []
    for number, face in faces:
        try:
            masks.append(sum(1 << index[label] for label in set(face)))
        except KeyError as exc:
            raise ParseError(f"unknown vertex label {exc.args[0]!r}", number) from None
    try:
        return from_facets(masks, len(declared), declared)
    except ComplexError as exc:
        raise ParseError(str(exc)) from None


def complex_to_text(c):
    lines = ["labels: " + " ".join(c.labels)]
    lines += [" ".join(c.face_labels(f)) or "-" for f in c.facets]
    return "\n".join(lines) + "\n"


def parse_complex_json(data):
    try:
        n = int(data["n"]) if "n" in data else len(data["labels"])
        labels = [str(label) for label in data.get("labels") or [str(i + 1) for i in range(n)]]
        index = {label: i for i, label in enumerate(labels)}
        masks = [sum(1 << index[str(label)] for label in facet) for facet in data["facets"]]
        return from_facets(masks, n, labels)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed complex JSON: {exc}") from None
    except ComplexError as exc:
        raise ParseError(str(exc)) from None


# --- faces against a known complex ------------------------------------------

def _face_on(c, chunk, number):
    try:
        return c.face_from_labels(_face_tokens(chunk, c.labels))
    except ComplexError as exc:
        raise ParseError(str(exc), number) from None


def parse_partition_text(text, c):
    """Intervals `F : G` one per line, `-` for the empty face."""
    pairs = []
    for number, line in _content_lines(text):
        line = line.strip("[]")
        if ":" in line:
            lower, upper = line.split(":", 1)
        elif line.count(",") == 1:
            lower, upper = line.split(",")
        else:
            raise ParseError(f"expected 'F : G', got {line!r}", number)
        pairs.append((_face_on(c, lower, number), _face_on(c, upper, number)))
    try:
        return make_partition(pairs, c)
    except PartitionError as exc:
        raise ParseError(str(exc)) from None


def partition_to_text(p):
    c = p.ambient
    return "".join(
        f"{c.format_face(i.lower)} : {c.format_face(i.upper)}\n" for i in p.intervals
    )


def parse_shelling_text(text, c):
    """Facets one per line or comma-separated, in shelling order."""
    order = []
    for number, line in _content_lines(text):
        for chunk in line.split(","):
            if chunk.strip():
                order.append(_face_on(c, chunk, number))
    return tuple(order)


def shelling_to_text(c, order):
    return "".join(c.format_face(f) + "\n" for f in order)


# --- monomials and ideals ----------------------------------------------------

def _monomial_tokens(text):
    return [t for t in re.split(r"[\s*]+", text.strip()) if t]


def parse_monomial(text, variables, line=None):
    """`x1^2*x3`, `x1 x1 x3` or `1` over a fixed variable table."""
    index = {name: i for i, name in enumerate(variables)}
    exps = [0] * len(variables)
    tokens = _monomial_tokens(text)
    if tokens == ["1"]:
        return tuple(exps)
    if not tokens:
        raise ParseError("empty monomial", line)
    for token in tokens:
        match = _POWER.match(token)
        if not match or match.group(1) not in index:
            raise ParseError(f"bad monomial factor {token!r}", line)
        exps[index[match.group(1)]] += int(match.group(2) or 1)
    return tuple(exps)


def _names_in(text):
    names = set()
    for token in _monomial_tokens(text):
        match = _POWER.match(token)
        if match:
            names.add(match.group(1))
    return names


def parse_monomial_list(text, variables):
    """Comma-separated monomials, e.g. `x1^2,x2,x3*x4`."""
    return [parse_monomial(chunk, variables) for chunk in text.split(",") if chunk.strip()]


def parse_substitution(text):
    """`x1^2,x2,x3*x4` -> (variables in natural order, monomials)."""
    found = set()
    for chunk in text.replace("\n", ",").split(","):
        found |= _names_in(chunk)
    variables = tuple(sorted(found, key=natural_key))
    return variables, parse_monomial_list(text.replace("\n", ","), variables)


def parse_ideal_text(text):
    """One generator per line (commas also split); optional `vars:` line."""
    declared = None
    chunks = []
    for number, line in _content_lines(text):
        names = _directive(line, "vars")
        if names is not None:
            declared = names
            continue
        chunks += [(number, chunk) for chunk in line.split(",") if chunk.strip()]
    if declared is None:
        found = set()
        for _, chunk in chunks:
            found |= _names_in(chunk)
        declared = sorted(found, key=natural_key)
    gens = [parse_monomial(chunk, declared, number) for number, chunk in chunks]
    try:
        return minimalize(gens, declared)
    except IdealError as exc:
        raise ParseError(str(exc)) from None


def monomial_to_text(u, variables):
    factors = [name if a == 1 else f"{name}^{a}" for name, a in zip(variables, u) if a]
    return "*".join(factors) or "1"


def ideal_to_text(I):
    lines = ["vars: " + " ".join(I.variables)]
    lines += [monomial_to_text(g, I.variables) for g in I.gens]
    return "\n".join(lines) + "\n"


def _pairs_to_monomial(pairs, variables):
    index = {name: i for i, name in enumerate(variables)}
    exps = [0] * len(variables)
    for name, a in pairs:
        if name not in index:
            raise ParseError(f"unknown variable {name!r}")
        exps[index[name]] += int(a)
    return tuple(exps)


def _monomial_pairs(u, variables):
    return [[variables[i], a] for i, a in enumerate(u) if a]


def parse_ideal_json(data):
    try:
        variables = [str(v) for v in data["vars"]]
        gens = [_pairs_to_monomial(g, variables) for g in data["gens"]]
        return minimalize(gens, variables)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed ideal JSON: {exc}") from None


def _prime_from_names(names, variables):
    index = {name: i for i, name in enumerate(variables)}
    try:
        return frozenset(index[name] for name in names)
    except KeyError as exc:
        raise ParseError(f"unknown variable {exc.args[0]!r}") from None


# --- decompositions and filtrations -----------------------------------------

def decomposition_to_json(d):
    names = d.ideal.variables
    return {
        "ideal": d.ideal.to_dict(),
        "spaces": [
            {"u": _monomial_pairs(s.u, names), "Z": [names[i] for i in sorted(s.Z)]}
            for s in d.spaces
        ],
    }


def parse_decomposition_json(data, ideal=None):
    if isinstance(data, dict):
        ideal = parse_ideal_json(data["ideal"]) if "ideal" in data else ideal
        data = data.get("spaces", [])
    if ideal is None:
        raise ParseError("decomposition JSON needs its ideal")
    names = ideal.variables
    try:
        spaces = tuple(
            StanleySpace(_pairs_to_monomial(s["u"], names), _prime_from_names(s["Z"], names))
            for s in data
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed decomposition JSON: {exc}") from None
    return StanleyDecomposition(spaces, ideal)


def filtration_to_json(f):
    return f.to_dict()


def parse_filtration_json(data, base=None):
    if isinstance(data, dict):
        base = parse_ideal_json(data["base"]) if "base" in data else base
        data = data.get("steps", [])
    if base is None:
        raise ParseError("filtration JSON needs its base ideal")
    names = base.variables
    try:
        steps = tuple(
            FiltrationStep(
                _pairs_to_monomial(step["w"], names),
                MonomialPrime(_prime_from_names(step["P"], names)),
            )
            for step in data
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed filtration JSON: {exc}") from None
    return PrimeFiltration(base, steps)


# --- files -------------------------------------------------------------------

def _read(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    logger.debug("Read %d bytes from %s", len(text), path)
    return text


def _as_json(text):
    stripped = text.lstrip()
    if not stripped.startswith(("{", "[")):
        return None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None


def load_complex(path):
    text = _read(path)
    data = _as_json(text)
    return parse_complex_json(data) if data is not None else parse_complex_text(text)


def load_ideal(path):
    text = _read(path)
    data = _as_json(text)
    return parse_ideal_json(data) if data is not None else parse_ideal_text(text)


def load_partition(path, c):
    return parse_partition_text(_read(path), c)


def load_shelling(path, c):
    return parse_shelling_text(_read(path), c)


def load_decomposition(path, ideal=None):
    data = _as_json(_read(path))
    if data is None:
        raise ParseError("decompositions are read from JSON")
    return parse_decomposition_json(data, ideal)


def load_filtration(path, base=None):
    data = _as_json(_read(path))
    if data is None:
        raise ParseError("filtrations are read from JSON")
    return parse_filtration_json(data, base)

