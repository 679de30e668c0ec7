import json
import tempfile
import unittest
from pathlib import Path

import numpy as np

from symtruss.errors import ModelError, ParseError
from symtruss.isometry import verify_group
from symtruss.modelfile import ModelDocument, load_matrix_set, load_model, resolve_model, save_model
from symtruss.trussfem import builtin_case, solve

MODELS = Path(__file__).resolve().parent.parent / "models"


def write(directory, name, payload):
    path = Path(directory) / name
    path.write_text(payload if isinstance(payload, str) else json.dumps(payload), encoding="utf-8")
    return path


class ModelFileTests(unittest.TestCase):
    def test_bundled_models_match_the_builtins(self):
        for filename, builtin in (("d2.json", "d2"), ("asym.json", "asym"), ("unbraced_frame.json", "unbraced")):
            with self.subTest(model=filename):
                loaded, expected = load_model(MODELS / filename), builtin_case(builtin)
                self.assertEqual(loaded.nodes, expected.nodes)
                self.assertEqual(loaded.elements, expected.elements)
                self.assertEqual(loaded.supports, expected.supports)
                self.assertEqual(loaded.loads, expected.loads)

    def test_resolve_model(self):
        self.assertEqual(resolve_model("builtin:asym").name, "asym")
        self.assertEqual(resolve_model(str(MODELS / "d2.json")).name, "d2")
        with self.assertRaises(ParseError):
            resolve_model("builtin:nope")

    def test_unreadable_documents_are_parse_errors(self):
        with tempfile.TemporaryDirectory() as directory:
            cases = {
                "missing": Path(directory) / "missing.json",
                "bad json": write(directory, "bad.json", "{nodes: ["),
                "extra key": write(
                    directory,
                    "extra.json",
                    {"nodes": [{"id": "A", "x": 0, "y": 0, "z": 1}], "elements": []},
                ),
                "wrong type": write(directory, "type.json", {"nodes": "A", "elements": []}),
            }
            for label, path in cases.items():
                with self.subTest(case=label):
                    with self.assertRaises(ParseError):
                        load_model(path)

    def test_invalid_structure_is_a_model_error(self):
        document = json.loads((MODELS / "d2.json").read_text(encoding="utf-8"))
        document["elements"].append({"id": "AX", "node_i": "A", "node_j": "X"})
        with tempfile.TemporaryDirectory() as directory:
            with self.assertRaises(ModelError):
                load_model(write(directory, "broken.json", document))

    def test_material_defaults_fill_missing_properties(self):
        document = json.loads((MODELS / "d2.json").read_text(encoding="utf-8"))
        document["material_defaults"] = {"E": 70e9, "A": 2e-4}
        document["elements"][0]["E"] = 210e9
        del document["name"]
        with tempfile.TemporaryDirectory() as directory:
            model = load_model(write(directory, "aluminium.json", document))
        self.assertEqual(model.name, "aluminium")
        self.assertEqual((model.elements[0].E, model.elements[0].A), (210e9, 2e-4))
        self.assertEqual((model.elements[1].E, model.elements[1].A), (70e9, 2e-4))

    def test_save_and_reload(self):
        model = builtin_case("asym")
        with tempfile.TemporaryDirectory() as directory:
            path = save_model(model, Path(directory) / "asym_copy.json")
            reloaded = load_model(path)
        self.assertEqual(reloaded, model)
        np.testing.assert_array_equal(solve(reloaded).u, solve(model).u)
        self.assertEqual(ModelDocument.from_model(model).to_model(), model)

    def test_unwritable_path_is_a_parse_error(self):
        with tempfile.TemporaryDirectory() as directory:
            with self.assertRaises(ParseError):
                save_model(builtin_case("d2"), Path(directory) / "missing" / "d2.json")


class MatrixSetTests(unittest.TestCase):
    def test_plain_list_and_named_document(self):
        quarter = [[0.0, -1.0], [1.0, 0.0]]
        half = [[-1.0, 0.0], [0.0, -1.0]]
        three_quarter = [[0.0, 1.0], [-1.0, 0.0]]
        identity = [[1.0, 0.0], [0.0, 1.0]]
        with tempfile.TemporaryDirectory() as directory:
            plain = load_matrix_set(write(directory, "c4.json", [identity, quarter, half, three_quarter]))
            named = load_matrix_set(write(directory, "other.json", {"name": "C2", "matrices": [identity, half]}))
            partial = load_matrix_set(write(directory, "partial.json", [identity, quarter]))
        self.assertEqual(plain.name, "c4")
        self.assertEqual(len(plain), 4)
        self.assertTrue(verify_group(plain).ok)
        self.assertEqual(named.name, "C2")
        self.assertTrue(verify_group(named).ok)
        self.assertFalse(verify_group(partial).ok)

    def test_bad_matrix_files(self):
        with tempfile.TemporaryDirectory() as directory:
            with self.assertRaises(ParseError):
                load_matrix_set(Path(directory) / "absent.json")
            with self.assertRaises(ParseError):
                load_matrix_set(write(directory, "empty.json", []))
            with self.assertRaises(ParseError):
                load_matrix_set(write(directory, "junk.json", "not json"))
            with self.assertRaises(ParseError):
                load_matrix_set(write(directory, "keys.json", {"matrices": [], "extra": 1}))
            with self.assertRaises(ModelError):
                load_matrix_set(write(directory, "shear.json", [[[1.0, 1.0], [0.0, 1.0]]]))


if __name__ == "__main__":
    unittest.main()
