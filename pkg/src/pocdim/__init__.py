"""Competition graphs of 3-partial orders via homothetic triangles.

Submodules: exactgeom (triangle calculus), graphs (recognition and
generators), poset (point sets and competition graphs), builder (triangle
representations of block graphs), analysis (dimension bounds, lemma
harnesses, tail-biting extraction), formats, render and cli.
"""

__version__ = "0.1.0"
