"""foundry: a multi-calculus proof-checking workbench.

Four executable formal systems over shared infrastructure: sorted first-order
logic (Hilbert + natural deduction), the simply typed lambda calculus with
reduction, an LCF-style simple type theory kernel, and an intensional
dependent type theory kernel, cross-checked by finite-model semantic oracles.
"""

__version__ = "0.1.0"
