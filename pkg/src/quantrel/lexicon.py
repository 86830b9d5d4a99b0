"""JSON lexicon files.

Schema (all membership grades are decimals in [0, 1]):

    {
      "universe":  ["u1", "u2", ...],
      "quantale":  "godel" | "lukasiewicz" | "product" | "boolean",
      "grades":    [0, 0.5, 1],              // optional grade lattice
      "threshold": 0.0,                      // optional sigma-count cutoff
      "nouns":  {"cats":  {"u1": 0.2, ...}},
      "nps":    {"mice":  {...}},
      "vps":    {"sleep": {...}},
      "verbs":  {"eat":   [["u1", "u2", 0.5], ...]},
      "quantifiers": {
        "every":   {"kind": "every"},
        "exactly2":{"kind": "exactly", "n": 2},
        "several": {"kind": "fuzzy", "breakpoints": [[0,0],[0.4,1],[1,0]]}
      }
    }

Omitted "grades" defaults to every grade appearing in the file plus
0 and 1.  Grades outside [0, 1] are rejected, never clamped.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Dict, Union

from .bialgebra import GradeLattice
from .errors import LexiconFormatError, QuantrelError
from .fuzzyset import FuzzyRelation, FuzzySet
from .quantale import by_name
from .quantifier import CrispQuantifier, FuzzyQuantifier
from .semantics import Model
from .vrel import IndexSet

_SET_GROUPS = ("nouns", "nps", "vps")


def load_lexicon(source: Union[str, Path, dict]) -> Model:
    """Read a lexicon file (or an already-decoded dict) into a Model."""
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as handle:
            try:
                data = json.load(handle)
            except json.JSONDecodeError as exc:
                raise LexiconFormatError(f"{source}: not valid JSON: {exc}") from exc
    else:
        data = source
    try:
        return _build_model(data)
    except (QuantrelError, KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, LexiconFormatError):
            raise
        raise LexiconFormatError(str(exc)) from exc


def _grades_in(data: dict):
    for group in _SET_GROUPS:
        for mapping in data.get(group, {}).values():
            yield from mapping.values()
    for triples in data.get("verbs", {}).values():
        for triple in triples:
            yield triple[2]


def _build_model(data: dict) -> Model:
    if "universe" not in data or not data["universe"]:
        raise LexiconFormatError("lexicon needs a non-empty 'universe' list")
    labels = [str(u) for u in data["universe"]]
    if len(set(labels)) != len(labels):
        raise LexiconFormatError("universe elements must be distinct")
    universe = IndexSet(labels)

    for g in _grades_in(data):
        if not isinstance(g, (int, float)) or not 0.0 <= float(g) <= 1.0:
            raise LexiconFormatError(f"grade {g!r} outside [0, 1]")

    quantale = by_name(str(data.get("quantale", "godel")))
    if "grades" in data:
        grades = GradeLattice(data["grades"])
    else:
        grades = GradeLattice({0.0, 1.0} | {float(g) for g in _grades_in(data)})
    threshold = float(data.get("threshold", 0.0))
    if not 0.0 <= threshold <= 1.0:
        raise LexiconFormatError("threshold must lie in [0, 1]")

    model = Model(universe=universe, quantale=quantale, grades=grades,
                  threshold=threshold)
    for group in _SET_GROUPS:
        target = getattr(model, group)
        for name, mapping in data.get(group, {}).items():
            target[str(name).lower()] = FuzzySet.from_dict(
                universe, {str(k): float(v) for k, v in mapping.items()})
    for name, triples in data.get("verbs", {}).items():
        pairs: Dict[tuple, float] = {}
        for triple in triples:
            if len(triple) != 3:
                raise LexiconFormatError(
                    f"verb {name!r}: each entry is [subject, object, grade]")
            s, o, g = triple
            pairs[(str(s), str(o))] = float(g)
        model.verbs[str(name).lower()] = FuzzyRelation(universe, pairs)
    for name, desc in data.get("quantifiers", {}).items():
        model.quantifiers[str(name).lower()] = _parse_quantifier(str(name).lower(), desc)

    model.validate()
    return model


def _parse_quantifier(name: str, desc: dict):
    kind = desc.get("kind")
    if kind == "fuzzy":
        bps = desc.get("breakpoints")
        if not bps:
            raise LexiconFormatError(f"quantifier {name!r}: fuzzy kind needs breakpoints")
        return FuzzyQuantifier(name, tuple((float(p), float(v)) for p, v in bps))
    if kind in ("every", "some", "no"):
        return CrispQuantifier(kind)
    if kind == "exactly":
        return CrispQuantifier("exactly", int(desc["n"]))
    raise LexiconFormatError(f"quantifier {name!r}: unknown kind {kind!r}")


def dump_lexicon(model: Model) -> dict:
    """JSON-ready dict; loading it back reproduces the model."""
    data: dict = {
        "universe": list(model.universe.elements),
        "quantale": model.quantale.name,
        "grades": list(model.grades.grades),
        "threshold": model.threshold,
    }
    for group in _SET_GROUPS:
        entries = getattr(model, group)
        data[group] = {
            name: {u: g for u, g in fs.as_dict().items() if g > 0.0}
            for name, fs in sorted(entries.items())
        }
    data["verbs"] = {
        name: [[s, o, g] for (s, o), g in sorted(rel.pairs.items())]
        for name, rel in sorted(model.verbs.items())
    }
    quants = {}
    for name, d in sorted(model.quantifiers.items()):
        if isinstance(d, FuzzyQuantifier):
            quants[name] = {"kind": "fuzzy",
                            "breakpoints": [list(bp) for bp in d.breakpoints]}
        elif d.kind == "exactly":
            quants[name] = {"kind": "exactly", "n": d.n}
        else:
            quants[name] = {"kind": d.kind}
    data["quantifiers"] = quants
    return data
