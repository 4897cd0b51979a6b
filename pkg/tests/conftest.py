import json
import re
from pathlib import Path
from typing import Any, Callable, Dict, Optional

import pytest
from jsonschema import validate

from gext_lab.config import RunConfig
from gext_lab.galoislab.context import GaloisContext
from gext_lab.tower.parser import parse_tower
from gext_lab.tower.tower import FieldTower

TOWER_DIR = Path(__file__).parent.parent / "towers"

GOLDEN_TOWERS = {
    "t1": "t1_sqrt2",
    "t2": "t2_cbrt2",
    "t3": "t3_klein4",
    "t4": "t4_cyclic_cubic",
    "t5": "t5_s3",
    "t6": "t6_gf16",
    "t7": "t7_gf64",
    "t8": "t8_gf81_over_gf9",
    "t9": "t9_trivial",
}

POLY = {"type": "array", "items": {"type": ["string", "integer", "array"]}}

REPORT_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["tower", "galois", "group", "subgroups", "subfields", "theorems", "assumptions", "config"],
    "properties": {
        "tower": {
            "type": "object",
            "required": ["base", "levels", "ground"],
            "properties": {
                "base": {"type": "string", "pattern": r"^(Q|F\d+)$"},
                "levels": {
                    "type": "array",
                    "items": {"type": "object", "required": ["gen", "minpoly"], "properties": {"gen": {"type": "string"}}},
                },
                "ground": {"type": ["string", "null"]},
            },
        },
        "galois": {"type": "boolean"},
        "group": {
            "type": "object",
            "required": ["order", "cayley"],
            "properties": {
                "order": {"type": "integer", "minimum": 0},
                "cayley": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
            },
        },
        "subgroups": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["elements", "normal"],
                "properties": {
                    "elements": {"type": "array", "items": {"type": "integer"}},
                    "normal": {"type": "boolean"},
                },
            },
        },
        "subfields": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["subgroup_index", "degree", "minpoly"],
                "properties": {"subgroup_index": {"type": "integer"}, "degree": {"type": "integer"}, "minpoly": POLY},
            },
        },
        "theorems": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "status"],
                "properties": {
                    "id": {"type": "string", "pattern": r"^[a-z]+(-[a-z]+)*$"},
                    "theorem": {"type": "string", "pattern": r"^(Thm|Prop|Cor|Lemma)-[A-Za-z0-9]+(-[0-9]+)?$"},
                    "status": {"enum": ["PASS", "FAIL", "SKIPPED", "PROBABILISTIC-PASS"]},
                },
            },
        },
        "assumptions": {"type": "array", "items": {"type": "string"}},
        "config": {"type": "object"},
    },
}


class _Anything:
    """Matches any value of the given type, optionally matching a regex."""

    def __init__(self, type: type = object, regex: Optional[str] = None) -> None:
        self.type = type
        self.regex = re.compile(regex) if regex else None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, self.type):
            return False
        return self.regex is None or bool(self.regex.search(str(other)))

    def __repr__(self) -> str:
        return f"<any {self.type.__name__}{' ' + self.regex.pattern if self.regex else ''}>"


def load_tower(name: str) -> FieldTower:
    return parse_tower((TOWER_DIR / f"{GOLDEN_TOWERS.get(name, name)}.tower").read_text(encoding="utf-8"))


@pytest.fixture
def any() -> _Anything:
    return _Anything()


@pytest.fixture
def any_string() -> _Anything:
    return _Anything(str)


@pytest.fixture
def config() -> RunConfig:
    return RunConfig(random_seed=1234)


@pytest.fixture
def tower_path() -> Callable[[str], str]:
    def path(name: str) -> str:
        return str(TOWER_DIR / f"{GOLDEN_TOWERS.get(name, name)}.tower")

    return path


@pytest.fixture
def tower() -> Callable[[str], FieldTower]:
    return load_tower


@pytest.fixture
def context(config: RunConfig) -> Callable[[str], GaloisContext]:
    def make(name: str) -> GaloisContext:
        return GaloisContext(load_tower(name), config)

    return make


@pytest.fixture
def t1() -> FieldTower:
    return load_tower("t1")


@pytest.fixture
def t2() -> FieldTower:
    return load_tower("t2")


@pytest.fixture
def t3() -> FieldTower:
    return load_tower("t3")


@pytest.fixture
def t4() -> FieldTower:
    return load_tower("t4")


@pytest.fixture
def t6() -> FieldTower:
    return load_tower("t6")


@pytest.fixture
def t8() -> FieldTower:
    return load_tower("t8")


@pytest.fixture
def assert_valid_report() -> Callable[[bytes], Dict[str, Any]]:
    def verify_report(output: bytes) -> Dict[str, Any]:
        data = json.loads(output.decode("utf-8"))
        validate(instance=data, schema=REPORT_SCHEMA)
        return data

    return verify_report
