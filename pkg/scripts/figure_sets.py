"""Print the deficiency sets of the k=4 illustration around a vertex v,
with the auxiliary-digraph dump, to compare against the drawing."""

from __future__ import annotations

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))

from test_deficiency import figure_configuration  # noqa: E402

from edgecolor.deficiency import local_sets  # noqa: E402

NAMES = {1: "x0", 2: "x1", 3: "x2", 4: "x3", 5: "x4"}

cert = figure_configuration()
Fk, Uk, dF = local_sets(cert, 0)
print("d_M:", {NAMES[x]: cert.coloring.d_M(x) for x in NAMES})
print("F^k(v):", sorted(NAMES[x] for x in Fk))
print("U^k(v):", sorted(NAMES[x] for x in Uk))
print("d_{F^k}(v):", dF)
