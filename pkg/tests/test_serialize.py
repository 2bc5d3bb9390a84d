"""JSON round trips for groups, algebras, and diagrams, plus the spec-string
resolvers used by the command line."""

import json

import pytest

from hopfg import builtin_algebra, builtin_diagram, builtin_diagram_names
from hopfg.groups import cyclic_group, product_group
from hopfg.serialize import (
    SerializeError,
    algebra_from_json,
    algebra_to_json,
    diagram_from_json,
    diagram_to_json,
    dumps_canonical,
    group_from_json,
    group_to_json,
    resolve_algebra,
    resolve_diagram,
    resolve_group,
)

ALGEBRA_SPECS = ["cyclic:k=1,l=1,d=0", "cyclic:k=2,l=3,d=1",
                 "cyclic:k=1,l=4,d=3", "kac-paljutkin"]


def _same_group(G1, G2):
    return (G1.order == G2.order and list(G1.names) == list(G2.names)
            and [list(r) for r in G1.table] == [list(r) for r in G2.table])


def test_group_round_trip():
    for G in (cyclic_group(1), cyclic_group(4),
              product_group(cyclic_group(2), cyclic_group(3))):
        assert _same_group(group_from_json(group_to_json(G)), G)


def test_group_json_rejects_bad_tables():
    with pytest.raises(SerializeError, match="list of `order` rows"):
        group_from_json({"order": 2, "table": [[0, 1]], "names": ["1", "a"]})
    with pytest.raises(SerializeError, match="row 1 must have 2 entries"):
        group_from_json({"order": 2, "table": [[0, 1], [1]], "names": ["1", "a"]})
    with pytest.raises(SerializeError, match="names must be a list"):
        group_from_json({"order": 2, "table": [[0, 1], [1, 0]], "names": ["1"]})
    with pytest.raises(SerializeError, match="group JSON invalid"):
        group_from_json({"order": 2, "table": [[0, 0], [0, 0]],
                         "names": ["1", "a"]})


def test_algebra_round_trip():
    for spec in ALGEBRA_SPECS:
        H = builtin_algebra(spec)
        obj = algebra_to_json(H)
        assert algebra_from_json(obj) == H
        # canonical text is stable through a rebuild
        assert dumps_canonical(algebra_to_json(algebra_from_json(obj))) == \
            dumps_canonical(obj)


def test_algebra_json_is_pure_data():
    obj = algebra_to_json(builtin_algebra("cyclic:k=2,l=3,d=1"))
    text = dumps_canonical(obj)
    parsed = json.loads(text)
    assert parsed == obj
    assert obj["conductor"] == 3
    assert obj["dims"] == [3, 3]


def test_algebra_json_validation():
    obj = algebra_to_json(builtin_algebra("cyclic:k=1,l=2,d=1"))
    bad = json.loads(dumps_canonical(obj))
    bad["dims"] = [2, 2]
    with pytest.raises(SerializeError, match="one dimension per group element"):
        algebra_from_json(bad)
    bad = json.loads(dumps_canonical(obj))
    del bad["product"]
    with pytest.raises(SerializeError, match="missing field 'product'"):
        algebra_from_json(bad)
    with pytest.raises(SerializeError, match="expected a JSON object"):
        algebra_from_json([1, 2, 3])


def test_diagram_round_trip():
    names = list(builtin_diagram_names()) + ["connected-sum:cp2,s1xs1xs2"]
    for name in names:
        d = builtin_diagram(name) if ":" not in name else resolve_diagram(name)
        obj = diagram_to_json(d)
        assert diagram_from_json(obj) == d
        assert json.loads(dumps_canonical(obj)) == obj


def test_diagram_json_validation():
    obj = diagram_to_json(builtin_diagram("s1xs1xs2"))
    bad = json.loads(dumps_canonical(obj))
    bad["undotted"][0]["events"][0] = ["sideways", 0]
    with pytest.raises(SerializeError, match="kind one of"):
        diagram_from_json(bad)
    bad = json.loads(dumps_canonical(obj))
    bad["crossings"][0]["sign"] = "x"
    with pytest.raises(SerializeError, match="sign must be"):
        diagram_from_json(bad)
    bad = json.loads(dumps_canonical(obj))
    bad["dotted"][0]["passages"][0] = [0]
    with pytest.raises(SerializeError, match=r"must be \[undotted_id, pos\]"):
        diagram_from_json(bad)
    bad = json.loads(dumps_canonical(obj))
    bad["h3"] = "two"
    with pytest.raises(SerializeError, match="expected an integer"):
        diagram_from_json(bad)
    # structurally broken diagrams are rejected on load
    bad = json.loads(dumps_canonical(obj))
    bad["dotted"][0]["passages"] = []
    with pytest.raises(Exception):
        diagram_from_json(bad)


def test_resolve_group():
    assert resolve_group("cyclic:6").order == 6
    G = resolve_group("product:cyclic:2,cyclic:2")
    assert G.order == 4
    with pytest.raises(SerializeError, match="bad cyclic group order"):
        resolve_group("cyclic:six")
    with pytest.raises(SerializeError, match="at least two factors"):
        resolve_group("product:cyclic:2")
    with pytest.raises(SerializeError, match="unknown group constructor"):
        resolve_group("product:cyclic:2,dihedral:3")
    # anything without a constructor prefix is treated as a file path
    with pytest.raises(SerializeError, match="cannot read"):
        resolve_group("dihedral:4")


def test_resolve_group_from_file(tmp_path):
    G = product_group(cyclic_group(2), cyclic_group(2))
    path = tmp_path / "klein.json"
    path.write_text(dumps_canonical(group_to_json(G)))
    assert _same_group(resolve_group(str(path)), G)


def test_resolve_algebra(tmp_path):
    assert resolve_algebra("kac-paljutkin").name == "kac-paljutkin"
    assert resolve_algebra("cyclic:k=1,l=2,d=1").dims == (2,)
    H = builtin_algebra("cyclic:k=2,l=3,d=2")
    path = tmp_path / "alg.json"
    path.write_text(dumps_canonical(algebra_to_json(H)))
    assert resolve_algebra(str(path)) == H


def test_resolve_diagram(tmp_path):
    assert resolve_diagram("cp2") == builtin_diagram("cp2")
    s = resolve_diagram("connected-sum:cp2,s4")
    assert len(s.undotted) == 1
    with pytest.raises(SerializeError, match="exactly two diagram specs"):
        resolve_diagram("connected-sum:cp2")
    d = builtin_diagram("s1xs1xs2")
    path = tmp_path / "d.json"
    path.write_text(dumps_canonical(diagram_to_json(d)))
    assert resolve_diagram(str(path)) == d
    # a connected-sum combinator may mix builtin names and files
    mixed = resolve_diagram(f"connected-sum:{path},cp2")
    assert len(mixed.dotted) == 2 and len(mixed.crossings) == 3


def test_read_errors(tmp_path):
    with pytest.raises(SerializeError, match="cannot read"):
        resolve_diagram(str(tmp_path / "absent.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(SerializeError, match="not valid JSON"):
        resolve_diagram(str(bad))


def test_canonical_dumps_is_deterministic():
    obj = algebra_to_json(builtin_algebra("kac-paljutkin"))
    a = dumps_canonical(obj)
    b = dumps_canonical(json.loads(a))
    assert a == b
    assert a.endswith("\n") and a.count("\n") == 1
