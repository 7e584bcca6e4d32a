"""Validate CLI output and shipped data against schema/."""
import json
import pathlib
import subprocess
import sys

import jsonschema

root = pathlib.Path(__file__).resolve().parent.parent
cli = sys.argv[1]


def schema(name):
    return json.loads((root / "schema" / name).read_text())


def run(*args):
    proc = subprocess.run([cli, *args, "--no-timing"], capture_output=True, text=True)
    return json.loads(proc.stdout)


checks = [
    (json.loads((root / "data/defaults.json").read_text()), "conventions.schema.json"),
    (json.loads((root / "data/linkskein_n2.json").read_text()), "linkskein.schema.json"),
    (run("orders", "--n", "4"), "orders.schema.json"),
    (run("mutate", "--n", "3"), "trace.schema.json"),
    (run("mutate", "--n", "3", "--sequence", "long"), "trace.schema.json"),
]
for args in (["pentagon", "--degree", "4"], ["pentagon", "--degree", "4", "--middle", "2"],
             ["reineke", "--n", "3", "--degree", "4"], ["census", "--n", "4"], ["equivalence", "--n", "3"],
             ["twists", "--n", "4"], ["conjugation"]):
    checks.append((run(*args), "report.schema.json"))

for doc, name in checks:
    jsonschema.validate(doc, schema(name))
print(f"{len(checks)} documents valid")
