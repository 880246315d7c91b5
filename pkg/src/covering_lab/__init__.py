"""Conjugate coverings of symmetric and alternating groups.

A group G is covered by a family of proper subgroups when their union is all
of G.  This package builds, verifies and exhaustively searches for the two
conjugate-closed shapes of such families:

* star coverings   {H^g, K : g in G}   (all conjugates of H plus one K),
* star2 coverings  {H^g, K^g : g in G} (conjugates of two subgroups).

It reproduces the known positive constructions for S_3..S_6 and A_4..A_8 and
establishes the negative results for S_7, S_8 and A_9 by machine search.
"""

from covering_lab.perms import Perm, CycleType, parse_perm
from covering_lab.groups import PermGroup

__all__ = ["Perm", "CycleType", "parse_perm", "PermGroup"]

__version__ = "0.1.0"
