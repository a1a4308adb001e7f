"""
Blow up Coxeter cells and check gluing data of mock reflection tilings.

Author: Tilings developers
"""
