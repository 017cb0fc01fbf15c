"""Statistics of commutators uvu^-1v^-1 of Haar-random unitary and orthogonal
matrices: exact Weingarten-calculus evaluators, closed-form formulas, and a
deterministic Monte Carlo sampler, cross-verifying each other."""

__version__ = "0.1.0"
