import pytest

import quantrel as qr

SEVERAL_BPS = ((0.0, 0.0), (0.4, 1.0), (1.0, 0.0))
MOST_BPS = ((0.0, 0.0), (0.5, 0.0), (1.0, 1.0))


def animal_lexicon() -> dict:
    """The worked three-element fixture: cats/mice/plants, eat/sleep."""
    return {
        "universe": ["c1", "c2", "c3"],
        "quantale": "godel",
        "nouns": {
            "cats": {"c1": 0.2, "c2": 0.3, "c3": 0.8},
            "mice": {"c1": 0.7, "c2": 0.6, "c3": 0.2},
            "plants": {"c1": 0.2, "c2": 0.3, "c3": 0.6},
        },
        "nps": {"mice": {"c1": 0.7, "c2": 0.6, "c3": 0.2}},
        "vps": {"sleep": {"c1": 0.5, "c2": 0.4, "c3": 0.4}},
        "verbs": {
            "eat": [["c1", "c1", 0.5], ["c1", "c3", 0.8], ["c2", "c1", 0.2],
                    ["c2", "c3", 0.3], ["c3", "c3", 0.9]],
        },
        "quantifiers": {
            "several": {"kind": "fuzzy", "breakpoints": [list(b) for b in SEVERAL_BPS]},
            "most": {"kind": "fuzzy", "breakpoints": [list(b) for b in MOST_BPS]},
            "every": {"kind": "every"},
            "some": {"kind": "some"},
        },
    }


def people_lexicon() -> dict:
    """Five-element fixture: kind people / big men."""
    return {
        "universe": ["u1", "u2", "u3", "u4", "u5"],
        "quantale": "godel",
        "nouns": {
            "men": {"u1": 0.8, "u2": 0.3, "u3": 0.1, "u4": 0.9, "u5": 1.0},
        },
        "vps": {
            "kind": {"u1": 0.5, "u2": 0.8, "u3": 0.2, "u4": 0.6},
        },
        "quantifiers": {
            "most": {"kind": "fuzzy", "breakpoints": [list(b) for b in MOST_BPS]},
            "all": {"kind": "every"},
        },
    }


def crisp_lexicon() -> dict:
    return {
        "universe": ["a", "b", "c"],
        "quantale": "boolean",
        "grades": [0, 1],
        "nouns": {"men": {"a": 1, "b": 1}, "trees": {"c": 1}},
        "nps": {"john": {"a": 1}},
        "vps": {"sneeze": {"a": 1}},
        "verbs": {"liked": [["a", "c", 1], ["b", "a", 1]]},
        "quantifiers": {
            "every": {"kind": "every"},
            "some": {"kind": "some"},
            "no": {"kind": "no"},
            "exactly1": {"kind": "exactly", "n": 1},
        },
    }


@pytest.fixture
def animals() -> qr.Model:
    return qr.load_lexicon(animal_lexicon())


@pytest.fixture
def people() -> qr.Model:
    return qr.load_lexicon(people_lexicon())


@pytest.fixture
def crisp() -> qr.Model:
    return qr.load_lexicon(crisp_lexicon())


def interpolation_oracle(breakpoints, p: float) -> float:
    """Independent piecewise-linear interpolation for expected values."""
    for (x0, y0), (x1, y1) in zip(breakpoints, breakpoints[1:]):
        if x0 <= p <= x1:
            return y0 if x1 == x0 else y0 + (p - x0) * (y1 - y0) / (x1 - x0)
    raise AssertionError(f"proportion {p} outside breakpoint range")


def godel_compose_oracle(r, s):
    """Brute-force max-min matrix product over nested lists."""
    rows, mids, cols = len(r), len(s), len(s[0])
    return [[max(min(r[i][k], s[k][j]) for k in range(mids)) for j in range(cols)]
            for i in range(rows)]
