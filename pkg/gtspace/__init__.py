"""Exact engine for finite generalized topological spaces and their sλ separation axioms."""
from gtspace.axioms import AxiomReport, classify, separated_by_closed_neighborhoods, strongly_separated, weakly_separated
from gtspace.core import GTSpace, GroundSet, SetFamily, make_space, subspace
from gtspace.dyadic import Dyadic
from gtspace.errors import GTSpaceError
from gtspace.explorer import canonical_form, enumerate_spaces, mine_counterexamples
from gtspace.realfn import DyadicFn, is_continuous, separated_by_function, urysohn_construct, zero_set_construct
from gtspace.spacefile import parse_space, render_space
from gtspace.theorems import TheoremReport, verify_theorems

__all__ = [
    'AxiomReport', 'Dyadic', 'DyadicFn', 'GTSpace', 'GTSpaceError', 'GroundSet', 'SetFamily', 'TheoremReport',
    'canonical_form', 'classify', 'enumerate_spaces', 'is_continuous', 'make_space', 'mine_counterexamples',
    'parse_space', 'render_space', 'separated_by_closed_neighborhoods', 'separated_by_function',
    'strongly_separated', 'subspace', 'urysohn_construct', 'verify_theorems', 'weakly_separated',
    'zero_set_construct',
]
