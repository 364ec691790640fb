"""Garside normal forms, rigid conjugacy sets and a family of rigid braids.

Example usage::

    from garsidelab import normal_form, is_rigid, enumerate_class

    x = normal_form(4, [1, 2, 3, 1, 2, 1, 1, -3])
    print(x)

    # A family braid and its predicted rigid conjugacy graph
    from garsidelab.family import make_element, family_rigid_graph

    e = make_element([(0, 1, 0, 1, 1, 0, 1), (0, 1, 0, 1, 0, 1, 1)], b=5,
                     require_M0=True)
    graph = family_rigid_graph(e)
    len(graph)   # 32
"""

__version_info__ = (0, 3, 0)
__version__ = "%s.%s.%s" % __version_info__


import garsidelab.braid
import garsidelab.conjugacy
import garsidelab.curves
import garsidelab.invariant_sets
import garsidelab.simple

SimpleBraid = garsidelab.simple.SimpleBraid
simple_from_word = garsidelab.simple.simple_from_word
Braid = garsidelab.braid.Braid
normal_form = garsidelab.braid.normal_form
multiply = garsidelab.braid.multiply
inverse = garsidelab.braid.inverse
conjugate = garsidelab.braid.conjugate
is_rigid = garsidelab.braid.is_rigid
cycling = garsidelab.conjugacy.cycling
decycling = garsidelab.conjugacy.decycling
to_super_summit = garsidelab.conjugacy.to_super_summit
minimal_conjugators = garsidelab.invariant_sets.minimal_conjugators
enumerate_class = garsidelab.invariant_sets.enumerate_class
is_conjugate = garsidelab.invariant_sets.is_conjugate
find_standard_reduction = garsidelab.curves.find_standard_reduction

__all__ = [n for n in locals().keys() if not n.startswith("_")] + ["__version__"]
