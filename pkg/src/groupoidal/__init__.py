"""Exact computations with finite inverse semigroups, their germ groupoids and convolution algebras."""
