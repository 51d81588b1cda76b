"""Exact-arithmetic engine for twisted Lie triple systems.

Subpackages cover dense rational linear algebra (:mod:`homlts.exactlin`),
the algebraic structures and their axiom verifiers
(:mod:`homlts.structures`), the equivariant cochain complex
(:mod:`homlts.cohomology`), central extensions (:mod:`homlts.extensions`),
formal deformations (:mod:`homlts.deformations`), and the instance file
format plus command-line front end (:mod:`homlts.instance`,
:mod:`homlts.cli`).
"""

__version__ = "0.1.0"
