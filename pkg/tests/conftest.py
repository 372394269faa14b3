"""Shared fixture graphs for the test suite.

The seven bicyclic showcase graphs (one per characterization case, plus
variants) are frozen here as edge lists together with their expected
(regularity, induced matching number) pairs.
"""

from __future__ import annotations

import pytest

from edgereg.graphs import Graph


def graph_from(text: str) -> Graph:
    return Graph.from_edge_list(text)


# C_5.P_3.C_5 with a pendant path z2-z3 on the middle bridge vertex:
# reg I(G) = 6 = nu + 3 with nu = 3.
EXAMPLE_NU_PLUS_3 = """
x1 x2
x2 x3
x3 x4
x4 x5
x5 x1
x1 z1
z1 y1
z1 z2
z2 z3
y1 y2
y2 y3
y3 y4
y4 y5
y5 y1
"""

# Case I showcase: C_4.P_3.C_3 with a pendant path at a cycle-2 vertex.
CASE_I = """
x1 x2
x2 x3
x3 x4
x4 x1
x1 z1
z1 y1
y1 y2
y2 y3
y3 y1
y2 z2
z2 z3
"""

# Case II showcase: C_3.P_2.C_8 (a), and the same with a leaf at y5 (b).
CASE_II_A = """
x1 x2
x2 x3
x3 x1
x1 y1
y1 y2
y2 y3
y3 y4
y4 y5
y5 y6
y6 y7
y7 y8
y8 y1
"""
CASE_II_B = CASE_II_A + "y5 z1\n"

# Case III showcase: C_5.P_3.C_5 with a pendant at y3 (a) or y2 (b).
CASE_III_BASE = """
x1 x2
x2 x3
x3 x4
x4 x5
x5 x1
x1 z1
z1 y1
y1 y2
y2 y3
y3 y4
y4 y5
y5 y1
"""
CASE_III_A = CASE_III_BASE + "y3 z2\n"
CASE_III_B = CASE_III_BASE + "y2 z2\n"

# Case IV showcase: two 5-cycles sharing x1 (a), plus a leaf at x1 (b).
CASE_IV_A = """
x1 x2
x2 x3
x3 x4
x4 x5
x5 x1
x1 y2
y2 y3
y3 y4
y4 y5
y5 x1
"""
CASE_IV_B = CASE_IV_A + "x1 z1\n"

# (name, edge list, expected reg I(G), expected nu(G))
SHOWCASE_FIXTURES = [
    ("case-I", CASE_I, 4, 3),
    ("case-II-a", CASE_II_A, 5, 3),
    ("case-II-b", CASE_II_B, 5, 4),
    ("case-III-a", CASE_III_A, 5, 3),
    ("case-III-b", CASE_III_B, 5, 4),
    ("case-IV-a", CASE_IV_A, 4, 2),
    ("case-IV-b", CASE_IV_B, 4, 3),
    ("nu-plus-3", EXAMPLE_NU_PLUS_3, 6, 3),
]

# Triangle with three pendant 2-paths; H = the triangle.
TRIANGLE_THREE_PATHS = """
x1 x3
x3 x2
x2 x1
x3 x4
x4 x5
x2 x6
x6 x7
x1 x8
x8 x9
"""


@pytest.fixture
def example_nu_plus_3() -> Graph:
    return graph_from(EXAMPLE_NU_PLUS_3)


@pytest.fixture
def triangle_three_paths() -> Graph:
    return graph_from(TRIANGLE_THREE_PATHS)
