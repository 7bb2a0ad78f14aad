"""Exact projective geometry over prime fields.

The subpackages build on each other bottom-up: :mod:`tetra.modfield`
(residues and dense matrices), :mod:`tetra.polyring` (polynomials),
:mod:`tetra.groebner` (ideals), :mod:`tetra.varmap` (rational maps),
:mod:`tetra.cremona` (lattice bookkeeping) and :mod:`tetra.replay`
(scenario driver).
"""
